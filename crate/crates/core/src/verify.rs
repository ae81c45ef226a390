//! The full invariant suite, run per space as a list of named checks.

use std::collections::BTreeSet;

use num_rational::{BigRational, Rational64};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::barth_lefschetz::{
    closed_form_grid, connectivity_with_ell, grassmann_rank_refinement, index_bound, CurvatureMode,
};
use crate::chevalley::{bracket, killing_form, killing_inner_ratio, AlgebraElement, StructureTable};
use crate::curvature::{
    certify_psd, ell_of_line, grassmann_rank, hermitian_form, nullity, oracle_constant, oracle_gram, oracle_real_gram,
    psi_prime_sizes, TangentVector,
};
use crate::error::{Error, Result};
use crate::hss_catalog::{resolve, HermitianSpace, SpaceId};
use crate::sampling::Sampler;

/// Triples sampled for the Jacobi identity when the rank exceeds
/// [`EXHAUSTIVE_JACOBI_RANK`].
pub const SAMPLED_JACOBI_TRIPLES: usize = 1000;
pub const EXHAUSTIVE_JACOBI_RANK: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random tangent vectors per space for the semidefiniteness sweep.
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { seed: 42, samples: 500 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Per-space constants measured during verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceSummary {
    pub space_id: SpaceId,
    pub v: usize,
    pub ell: Option<usize>,
    /// Distinct values of `|Ψ'_α|` over Ψ.
    pub psi_prime_values: Vec<usize>,
    /// Ratio of the bracket oracle to the component form.
    pub oracle_constant: Option<String>,
    /// Ratio of the Killing form to the normalized inner product.
    pub killing_ratio: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub spaces: Vec<SpaceSummary>,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }
}

type Outcome = Result<String>;

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Consistency(msg.into()))
}

struct Ctx<'a> {
    space: &'a HermitianSpace,
    opts: VerifyOptions,
}

impl Ctx<'_> {
    fn sampler(&self, check: &str) -> Sampler {
        Sampler::for_label(self.opts.seed, &format!("{}/{check}", self.space.id()))
    }

    fn table(&self) -> &StructureTable {
        self.space.table()
    }
}

type CheckFn = fn(&Ctx) -> Outcome;

const CHECKS: &[(&str, CheckFn)] = &[
    ("root_system.count", root_count),
    ("root_system.weyl_closure", weyl_closure),
    ("root_system.cartan_integers", cartan_integers),
    ("root_system.root_strings", root_strings),
    ("chevalley.antisymmetry", antisymmetry),
    ("chevalley.jacobi", jacobi),
    ("chevalley.killing_invariance", killing_invariance),
    ("chevalley.killing_proportional", killing_proportional),
    ("hss_catalog.dimension", dimension),
    ("hss_catalog.cominuscule", cominuscule),
    ("hss_catalog.psi_closure", psi_closure),
    ("hss_catalog.cascade", cascade),
    ("curvature.positivity", positivity),
    ("curvature.orbit_values", orbit_values),
    ("curvature.basis_kernels", basis_kernels),
    ("curvature.psd", psd),
    ("curvature.oracle_agreement", oracle_agreement),
    ("curvature.real_kernel", real_kernel),
    ("curvature.monotonicity", monotonicity),
    ("curvature.grassmann_nullity", grassmann_nullity),
    ("barth_lefschetz.closed_forms", closed_forms),
    ("barth_lefschetz.bound_identities", bound_identities),
    ("barth_lefschetz.rank_refinement", rank_refinement),
];

/// Names of every check, in report order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

fn root_count(c: &Ctx) -> Outcome {
    let rs = c.space.root_system();
    let want = rs.family().root_count(rs.rank());
    if rs.len() != want || 2 * rs.n_positive() != want {
        return fail(format!("{} roots, expected {want}", rs.len()));
    }
    Ok(format!("{want} roots"))
}

fn weyl_closure(c: &Ctx) -> Outcome {
    let rs = c.space.root_system();
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            if rs.index_of(&rs.reflect(a, b)).is_none() {
                return fail(format!("reflection of {} in {} is not a root", rs.root(b), rs.root(a)));
            }
        }
    }
    Ok(format!("{} reflections", rs.len() * rs.len()))
}

fn cartan_integers(c: &Ctx) -> Outcome {
    let rs = c.space.root_system();
    let mut n = 0;
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            if rs.sum_index(a, b).is_some() {
                n += 1;
                if rs.cartan_integer(a, b).abs() > 3 {
                    return fail(format!("Cartan integer of ({}, {}) out of range", rs.root(a), rs.root(b)));
                }
            }
        }
    }
    Ok(format!("{n} summable pairs"))
}

fn root_strings(c: &Ctx) -> Outcome {
    let rs = c.space.root_system();
    let mut n = 0;
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            if b == a || b == rs.negate(a) {
                continue;
            }
            let (p, q) = rs.root_string(rs.root(a), rs.root(b))?;
            n += 1;
            if p - q != rs.cartan_integer(a, b) {
                return fail(format!("string of {} through {}: p − q = {}", rs.root(a), rs.root(b), p - q));
            }
        }
    }
    Ok(format!("{n} strings"))
}

fn antisymmetry(c: &Ctx) -> Outcome {
    let t = c.table();
    let rs = t.root_system();
    let mut n = 0;
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            let v = t.n_idx(a, b);
            if rs.sum_index(a, b).is_none() {
                if v != 0 {
                    return fail(format!("N({}, {}) = {v} but the sum is not a root", rs.root(a), rs.root(b)));
                }
                continue;
            }
            n += 1;
            let (ra, rb) = (rs.root(a), rs.root(b));
            if v != -t.n_idx(b, a) {
                return fail(format!("N({ra}, {rb}) ≠ −N({rb}, {ra})"));
            }
            if v != -t.n_idx(rs.negate(a), rs.negate(b)) {
                return fail(format!("N({ra}, {rb}) ≠ −N(−{ra}, −{rb})"));
            }
            if v.abs() != rs.string_idx(a, b).0 + 1 {
                return fail(format!("|N({ra}, {rb})| = {} is not p + 1", v.abs()));
            }
        }
    }
    Ok(format!("{n} constants"))
}

fn jacobi_holds(
    t: &StructureTable,
    x: &AlgebraElement<Rational64>,
    y: &AlgebraElement<Rational64>,
    z: &AlgebraElement<Rational64>,
) -> bool {
    let a = bracket(t, &bracket(t, x, y), z);
    let b = bracket(t, &bracket(t, y, z), x);
    let c = bracket(t, &bracket(t, z, x), y);
    a.add(&b).add(&c).is_zero()
}

fn jacobi(c: &Ctx) -> Outcome {
    let t = c.table();
    let basis = t.basis::<Rational64>();
    let d = basis.len();
    if t.rank() <= EXHAUSTIVE_JACOBI_RANK {
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if !jacobi_holds(t, &basis[i], &basis[j], &basis[k]) {
                        return fail(format!("basis triple ({i}, {j}, {k})"));
                    }
                }
            }
        }
        Ok(format!("{} basis triples (exhaustive)", d * d * d))
    } else {
        let mut s = c.sampler("jacobi");
        for _ in 0..SAMPLED_JACOBI_TRIPLES {
            let (i, j, k) = (s.index(d), s.index(d), s.index(d));
            if !jacobi_holds(t, &basis[i], &basis[j], &basis[k]) {
                return fail(format!("basis triple ({i}, {j}, {k})"));
            }
        }
        Ok(format!("{SAMPLED_JACOBI_TRIPLES} sampled basis triples"))
    }
}

fn random_element(t: &StructureTable, s: &mut Sampler) -> AlgebraElement<BigRational> {
    let cartan = (0..t.rank()).map(|_| s.small_rational()).collect();
    let n = t.root_system().len();
    let roots: Vec<(usize, BigRational)> = (0..6).map(|_| (s.index(n), s.nonzero_rational())).collect();
    AlgebraElement::from_parts(cartan, roots)
}

fn killing_invariance(c: &Ctx) -> Outcome {
    let t = c.table();
    let kg = t.killing_gram();
    let mut s = c.sampler("killing");
    const TRIPLES: usize = 20;
    for k in 0..TRIPLES {
        let (x, y, z) = (random_element(t, &mut s), random_element(t, &mut s), random_element(t, &mut s));
        if kg.eval(t, &bracket(t, &x, &y), &z) != kg.eval(t, &x, &bracket(t, &y, &z)) {
            return fail(format!("κ([x,y],z) ≠ κ(x,[y,z]) on sample {k}"));
        }
        if kg.eval(t, &x, &y) != kg.eval(t, &y, &x) {
            return fail(format!("κ not symmetric on sample {k}"));
        }
        if k < 2 && kg.eval(t, &x, &y) != killing_form(t, &x, &y) {
            return fail(format!("cached Killing form differs from the trace on sample {k}"));
        }
    }
    Ok(format!("{TRIPLES} random triples"))
}

fn killing_proportional(c: &Ctx) -> Outcome {
    match killing_inner_ratio(c.table()) {
        Some(r) => Ok(format!("κ = {r}·( , ) on Killing duals")),
        None => fail("κ is not a constant positive multiple of the inner product"),
    }
}

fn dimension(c: &Ctx) -> Outcome {
    let want = c.space.id().expected_dim();
    if c.space.v() != want {
        return fail(format!("v = {}, expected {want}", c.space.v()));
    }
    Ok(format!("v = {want}"))
}

fn cominuscule(c: &Ctx) -> Outcome {
    let rs = c.space.root_system();
    let node = c.space.cominuscule_node();
    let from_filter: Vec<usize> = (0..rs.n_positive()).filter(|&i| rs.coefficients(i)[node] == 1).collect();
    if from_filter != c.space.psi_indices() {
        return fail("Ψ differs from the coefficient-1 roots");
    }
    if !(0..rs.len()).all(|i| rs.coefficients(i)[node].abs() <= 1) {
        return fail(format!("node {} is not cominuscule", node + 1));
    }
    Ok(format!("node {}", node + 1))
}

fn psi_closure(c: &Ctx) -> Outcome {
    let r = c.space.check_psi_closure()?;
    if r.pairs_checked != c.space.v() * c.space.v() || r.violations != 0 {
        return fail(format!("{} violations", r.violations));
    }
    Ok(format!("{} pairs, {} orthogonal, 0 violations", r.pairs_checked, r.orthogonal_pairs))
}

fn cascade(c: &Ctx) -> Outcome {
    let rs = c.space.root_system();
    let t = c.table();
    let cas = c.space.cascade_indices();
    if cas.len() != c.space.id().expected_rank() {
        return fail(format!("cascade length {}, expected {}", cas.len(), c.space.id().expected_rank()));
    }
    for &a in &cas {
        for &b in &cas {
            if a == b {
                continue;
            }
            if rs.sum_index(a, b).is_some() || rs.diff_index(a, b).is_some() {
                return fail(format!("{} and {} are not strongly orthogonal", rs.root(a), rs.root(b)));
            }
            if t.n_idx(a, rs.negate(b)) != 0 {
                return fail(format!("N({}, −{}) ≠ 0", rs.root(a), rs.root(b)));
            }
        }
    }
    Ok(format!("{} strongly orthogonal roots", cas.len()))
}

fn positivity(c: &Ctx) -> Outcome {
    let ell = crate::curvature::complex_positivity(c.space)?;
    let want = c.space.id().expected_positivity();
    if ell != want {
        return fail(format!("ℓ = {ell}, expected {want}"));
    }
    Ok(format!("ℓ = {ell}"))
}

/// Whether `|Ψ'_α|` takes two values (short and long roots in Ψ).
fn has_two_orbits(id: SpaceId) -> bool {
    match id {
        SpaceId::Lagrangian { .. } => true,
        SpaceId::Quadric { p } => p % 2 == 1,
        _ => false,
    }
}

fn orbit_values(c: &Ctx) -> Outcome {
    let values: BTreeSet<usize> = psi_prime_sizes(c.space).into_iter().collect();
    let want = if has_two_orbits(c.space.id()) { 2 } else { 1 };
    if values.len() != want {
        return fail(format!("|Ψ'_α| takes values {values:?}"));
    }
    if values.first() != Some(&c.space.id().expected_positivity()) {
        return fail(format!("min |Ψ'_α| = {:?}", values.first()));
    }
    Ok(format!("|Ψ'_α| ∈ {values:?}"))
}

fn basis_kernels(c: &Ctx) -> Outcome {
    let sizes = psi_prime_sizes(c.space);
    let rs = c.space.root_system();
    let psi = c.space.psi_indices();
    for a in 0..c.space.v() {
        let x = TangentVector::<BigRational>::basis(c.space, c.space.psi_root(a))?;
        let line = ell_of_line(c.space, &x)?;
        if line.ell_line != sizes[a] {
            return fail(format!(
                "ℓ(X_α ∧ JX_α) = {} but |Ψ'_α| = {} for α = {}",
                line.ell_line,
                sizes[a],
                c.space.psi_root(a)
            ));
        }
        let m = hermitian_form(c.space, &x)?.matrix;
        for g in 0..c.space.v() {
            let inside = !rs.inner_idx(psi[a], psi[g]).is_zero();
            if inside != m[(g, g)].is_positive() || (!inside && !m[(g, g)].is_zero()) {
                return fail(format!("H_X diagonal at {} disagrees with Ψ'", c.space.psi_root(g)));
            }
        }
    }
    Ok(format!("{} basis lines", c.space.v()))
}

fn psd(c: &Ctx) -> Outcome {
    let mut s = c.sampler("psd");
    let ell = c.space.id().expected_positivity();
    let mut min_ell = c.space.v();
    for k in 0..c.opts.samples {
        let x = s.tangent_vector(c.space);
        let form = hermitian_form(c.space, &x)?;
        if !form.matrix.is_symmetric() {
            return fail(format!("H_X not symmetric on sample {k}"));
        }
        let cert = certify_psd(&form).map_err(|e| Error::Consistency(format!("sample {k}: {e}")))?;
        let line = c.space.v() - cert.nullity;
        if line < ell {
            return fail(format!("sample {k} has ℓ(X ∧ JX) = {line} < ℓ"));
        }
        min_ell = min_ell.min(line);
    }
    Ok(format!("{} vectors, min ℓ(X ∧ JX) = {min_ell}", c.opts.samples))
}

/// Vectors per space for the oracle comparison.
pub const ORACLE_SAMPLES: usize = 20;

fn oracle_agreement(c: &Ctx) -> Outcome {
    let k = oracle_constant(c.space)?;
    if !k.is_positive() {
        return fail(format!("oracle constant {k} is not positive"));
    }
    let mut s = c.sampler("oracle");
    for i in 0..ORACLE_SAMPLES {
        let x = s.tangent_vector(c.space);
        let form = hermitian_form(c.space, &x)?.matrix;
        let gram = oracle_gram(c.space, &x)?;
        if gram.nullity() != form.nullity() {
            return fail(format!("kernel dimensions differ on sample {i}"));
        }
        if gram != form.scale(&k) {
            return fail(format!("oracle is not {k} times the component form on sample {i}"));
        }
    }
    Ok(format!("{ORACLE_SAMPLES} vectors, ratio {k}"))
}

fn real_kernel(c: &Ctx) -> Outcome {
    let mut s = c.sampler("real");
    let x = s.tangent_vector(c.space);
    let g = oracle_real_gram(c.space, &x)?;
    let n = nullity(c.space, &x)?;
    if !g.definiteness().is_psd() {
        return fail("real bisectional form has a negative direction");
    }
    if g.nullity() != 2 * n {
        return fail(format!("real kernel {} ≠ 2·{n}", g.nullity()));
    }
    Ok(format!("real kernel {} = 2·{n}", g.nullity()))
}

fn monotonicity(c: &Ctx) -> Outcome {
    let cas = c.space.cascade_indices();
    let rs = c.space.root_system();
    let base: Vec<usize> = cas
        .iter()
        .map(|&i| {
            let x = TangentVector::<BigRational>::basis(c.space, rs.root(i))?;
            Ok(ell_of_line(c.space, &x)?.ell_line)
        })
        .collect::<Result<_>>()?;
    let mut s = c.sampler("monotonicity");
    let subsets = 1usize << cas.len();
    for mask in 1..subsets {
        let pairs: Vec<_> = (0..cas.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| (rs.root(cas[k]).clone(), s.nonzero_rational()))
            .collect();
        let x = TangentVector::from_pairs(c.space, &pairs)?;
        let line = ell_of_line(c.space, &x)?.ell_line;
        let lower = (0..cas.len()).filter(|k| mask >> k & 1 == 1).map(|k| base[k]).max().unwrap_or(0);
        if line < lower {
            return fail(format!("cascade subset {mask:#b}: ℓ = {line} < {lower}"));
        }
    }
    Ok(format!("{} cascade subsets", subsets - 1))
}

fn grassmann_nullity(c: &Ctx) -> Outcome {
    let SpaceId::Grassmannian { p, q } = c.space.id() else {
        return Ok("not a Grassmannian".into());
    };
    let per_rank = (c.opts.samples / 10).max(1);
    let mut s = c.sampler("grassmann");
    for r in 1..=p.min(q) {
        for i in 0..per_rank {
            let x = s.grassmann_rank_vector(c.space, r)?;
            let rank = grassmann_rank(c.space, &x)?;
            let n = nullity(c.space, &x)?;
            if rank != r || n != (p - r) * (q - r) {
                return fail(format!("rank {r} sample {i}: nullity {n}"));
            }
        }
    }
    Ok(format!("{per_rank} vectors per rank"))
}

fn closed_forms(c: &Ctx) -> Outcome {
    let g = closed_form_grid(c.space)?;
    if !g.mismatches.is_empty() {
        return fail(format!("closed form differs at (m, n) = {:?}", g.mismatches[0]));
    }
    Ok(format!("{} (m, n) pairs", g.points))
}

fn bound_identities(c: &Ctx) -> Outcome {
    let v = c.space.v();
    let ell = c.space.id().expected_positivity();
    for m in 0..=v {
        for n in 0..=v {
            let pos = index_bound(m, n, v, ell, CurvatureMode::Positive)?;
            let non = index_bound(m, n, v, ell, CurvatureMode::Nonnegative)?;
            if non + (v - ell) as i64 != pos {
                return fail(format!("index bounds at ({m}, {n})"));
            }
            let r = connectivity_with_ell(c.space.id(), v, ell, m, n, None)?;
            if r != connectivity_with_ell(c.space.id(), v, ell, m, n, Some(ell))? {
                return fail(format!("override ℓ changes the report at ({m}, {n})"));
            }
            let ok = r.iso_max == r.lambda0
                && r.surj_at == r.lambda0 + 1
                && r.pair_vanish_max == r.pi_vanish_max.min(r.lambda0)
                && r.vacuous == (r.lambda0 < 0);
            if !ok {
                return fail(format!("report invariants at ({m}, {n})"));
            }
        }
    }
    Ok(format!("{} (m, n) pairs", (v + 1) * (v + 1)))
}

fn rank_refinement(c: &Ctx) -> Outcome {
    let SpaceId::Grassmannian { p, q } = c.space.id() else {
        return Ok("not a Grassmannian".into());
    };
    let values: Vec<usize> =
        (1..=p.min(q)).map(|r| grassmann_rank_refinement(p, q, r).map(|x| x.ell0)).collect::<Result<_>>()?;
    if values[0] != p + q - 1 || !values.windows(2).all(|w| w[0] < w[1]) {
        return fail(format!("ℓ₀ values {values:?}"));
    }
    if p == q && *values.last().unwrap_or(&0) != p * q {
        return fail("ℓ₀ at full rank is not v");
    }
    Ok(format!("ℓ₀ = {values:?}"))
}

fn summary(space: &HermitianSpace) -> SpaceSummary {
    let values: BTreeSet<usize> = psi_prime_sizes(space).into_iter().collect();
    SpaceSummary {
        space_id: space.id(),
        v: space.v(),
        ell: crate::curvature::complex_positivity(space).ok(),
        psi_prime_values: values.into_iter().collect(),
        oracle_constant: oracle_constant(space).ok().map(|k| k.to_string()),
        killing_ratio: killing_inner_ratio(space.table()).map(|r| r.to_string()),
    }
}

/// Runs every check on one space. Checks run in parallel; the output
/// order is that of [`check_names`].
pub fn verify_space(space: &HermitianSpace, opts: VerifyOptions) -> (SpaceSummary, Vec<Check>) {
    let ctx = Ctx { space, opts };
    let checks = CHECKS
        .par_iter()
        .map(|(name, f)| {
            let (status, detail) = match f(&ctx) {
                Ok(d) => (Status::Pass, d),
                Err(e) => (Status::Fail, e.to_string()),
            };
            Check { name: format!("{}/{name}", space.id()), status, detail }
        })
        .collect();
    (summary(space), checks)
}

/// Runs the suite over several spaces, optionally with one structure
/// constant corrupted in each.
pub fn verify(ids: &[SpaceId], opts: VerifyOptions, corrupt: bool) -> Result<VerifyReport> {
    let results: Vec<(SpaceSummary, Vec<Check>)> = ids
        .par_iter()
        .map(|&id| {
            let space = resolve(id)?;
            let space = if corrupt { corrupted(&space) } else { space };
            Ok(verify_space(&space, opts))
        })
        .collect::<Result<_>>()?;
    let mut report = VerifyReport { spaces: Vec::new(), checks: Vec::new() };
    for (s, c) in results {
        report.spaces.push(s);
        report.checks.extend(c);
    }
    Ok(report)
}

/// The space with the sign of `N_{α,β}` flipped for the first pair of
/// positive roots whose sum is a root.
pub fn corrupted(space: &HermitianSpace) -> HermitianSpace {
    let rs = space.root_system();
    let n = rs.n_positive();
    let pair = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| rs.sum_index(a, b).is_some());
    match pair {
        Some((a, b)) => space.with_corrupted_constant(a, b),
        None => space.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_space_passes() {
        let space = resolve(SpaceId::Grassmannian { p: 2, q: 2 }).unwrap();
        let (summary, checks) = verify_space(&space, VerifyOptions { seed: 42, samples: 20 });
        for c in &checks {
            assert!(c.passed(), "{c:?}");
        }
        assert_eq!(checks.len(), check_names().len());
        assert_eq!(summary.ell, Some(3));
        assert_eq!(summary.psi_prime_values, vec![3]);
    }

    #[test]
    fn corrupted_table_fails() {
        let space = resolve(SpaceId::Lagrangian { r: 2 }).unwrap();
        let (_, checks) = verify_space(&corrupted(&space), VerifyOptions { seed: 1, samples: 5 });
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"lagr:2/chevalley.antisymmetry"), "{failed:?}");
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityRow {
    pub space_id: SpaceId,
    pub v: usize,
    pub ell: usize,
    pub expected_ell: usize,
    pub psi_prime_values: Vec<usize>,
}

impl PositivityRow {
    pub fn matches(&self) -> bool {
        self.ell == self.expected_ell && self.v == self.space_id.expected_dim()
    }
}

/// Complex positivity computed from first principles for each space, in
/// the given order.
pub fn positivity_table(ids: &[SpaceId]) -> Result<Vec<PositivityRow>> {
    ids.par_iter()
        .map(|&id| {
            let space = resolve(id)?;
            let values: BTreeSet<usize> = psi_prime_sizes(&space).into_iter().collect();
            Ok(PositivityRow {
                space_id: id,
                v: space.v(),
                ell: crate::curvature::complex_positivity(&space)?,
                expected_ell: id.expected_positivity(),
                psi_prime_values: values.into_iter().collect(),
            })
        })
        .collect()
}
