//! Chevalley basis of the complex simple Lie algebra attached to a root
//! system: structure constants, brackets and the Killing trace form.
//!
//! Basis: simple coroots `h_1..h_r` followed by one root vector `e_α` per
//! root. Relations:
//!
//! * `[h_i, e_α] = ⟨α, α_i^∨⟩ e_α`
//! * `[e_α, e_{−α}] = h_α` (the coroot, expanded in simple coroots)
//! * `[e_α, e_β] = N_{α,β} e_{α+β}` when `α + β` is a root, else 0
//!
//! Signs of `N` are fixed by declaring `N_{α,β} = +(p+1)` on every
//! extraspecial pair, relative to the (height, coordinates) order of the
//! positive roots. The rest of the table follows from the standard
//! relations between structure constants of a Chevalley basis.

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::root_system::{Root, RootSystem};
use crate::scalar::Scalar;

/// Structure constants `N_{α,β}` over a root system, plus the data needed
/// to bracket Chevalley basis elements.
#[derive(Debug, Clone)]
pub struct StructureTable {
    rs: RootSystem,
    n_consts: Vec<i64>,
    /// `⟨β, α_i^∨⟩`, indexed `[i * n_roots + β]`.
    pairing: Vec<i64>,
    /// Coroot of each root in the simple-coroot basis.
    coroots: Vec<Vec<i64>>,
    killing: KillingGram,
}

/// Killing form on the Chevalley basis: the rank×rank block on the Cartan
/// part and `κ(e_α, e_{−α})` per root; all other pairings vanish.
#[derive(Debug, Clone)]
pub struct KillingGram {
    cartan: Matrix<Rational64>,
    roots: Vec<Rational64>,
}

/// An element of the complexified algebra in the Chevalley basis.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement<S> {
    cartan: Vec<S>,
    roots: BTreeMap<usize, S>,
}

fn positive_table(rs: &RootSystem) -> Result<Vec<i64>> {
    let n = rs.len();
    let npos = rs.n_positive();
    let mut tab = vec![0i64; n * n];
    let r64 = Rational64::from_integer;

    for xi in 0..npos {
        let decomps: Vec<(usize, usize)> =
            (0..npos).filter_map(|a| rs.diff_index(xi, a).filter(|&b| rs.is_positive(b)).map(|b| (a, b))).collect();
        let Some(&(a0, b0)) = decomps.first() else {
            continue;
        };
        let extra = rs.string_idx(a0, b0).0 + 1;
        tab[a0 * n + b0] = extra;
        tab[b0 * n + a0] = -extra;
        let xi_len = rs.norm2(xi);

        for &(a, b) in &decomps {
            if a == a0 || a > b {
                continue;
            }
            // Four-root relation on (α, β, −α', −β').
            let mut acc = Rational64::zero();
            if let Some(d) = rs.diff_index(b, a0) {
                let t = r64(mixed(rs, &tab, b, rs.negate(a0))?) * r64(mixed(rs, &tab, a, rs.negate(b0))?);
                acc += t / rs.norm2(d);
            }
            if let Some(d) = rs.diff_index(a, a0) {
                let t = r64(mixed(rs, &tab, rs.negate(a0), a)?) * r64(mixed(rs, &tab, b, rs.negate(b0))?);
                acc += t / rs.norm2(d);
            }
            let val = xi_len * acc / r64(extra);
            if !val.is_integer() || val.is_zero() {
                return Err(Error::Consistency(format!(
                    "structure constant N({}, {}) evaluated to {val}",
                    rs.root(a),
                    rs.root(b)
                )));
            }
            tab[a * n + b] = val.to_integer();
            tab[b * n + a] = -val.to_integer();
        }
    }
    Ok(tab)
}

/// `N_{r,s}` for any pair with `r + s` a root, reducing to positive pairs
/// whose sum is lower than the pair being resolved.
fn mixed(rs: &RootSystem, tab: &[i64], r: usize, s: usize) -> Result<i64> {
    let n = rs.len();
    let Some(t) = rs.sum_index(r, s) else {
        return Ok(0);
    };
    let pr = rs.is_positive(r);
    let ps = rs.is_positive(s);
    let value = match (pr, ps) {
        (true, true) => Rational64::from_integer(tab[r * n + s]),
        (false, false) => Rational64::from_integer(-mixed(rs, tab, rs.negate(r), rs.negate(s))?),
        (false, true) => Rational64::from_integer(-mixed(rs, tab, s, r)?),
        (true, false) => {
            if rs.is_positive(t) {
                -rs.norm2(t) / rs.norm2(r) * Rational64::from_integer(mixed(rs, tab, rs.negate(s), t)?)
            } else {
                rs.norm2(t) / rs.norm2(s) * Rational64::from_integer(mixed(rs, tab, rs.negate(t), r)?)
            }
        }
    };
    if value.is_zero() || !value.is_integer() {
        return Err(Error::Consistency(format!(
            "structure constant N({}, {}) unresolved ({value})",
            rs.root(r),
            rs.root(s)
        )));
    }
    Ok(value.to_integer())
}

/// Builds the full table of Chevalley structure constants.
pub fn structure_constants(rs: &RootSystem) -> Result<StructureTable> {
    let n = rs.len();
    let pos = positive_table(rs)?;
    let mut n_consts = vec![0i64; n * n];
    for r in 0..n {
        for s in 0..n {
            if rs.sum_index(r, s).is_some() {
                n_consts[r * n + s] = mixed(rs, &pos, r, s)?;
            }
        }
    }
    let rank = rs.rank();
    let simple = rs.simple_indices();
    let mut pairing = vec![0i64; rank * n];
    for (i, &si) in simple.iter().enumerate() {
        for b in 0..n {
            pairing[i * n + b] = rs.cartan_integer(si, b);
        }
    }
    let coroots = (0..n)
        .map(|a| {
            rs.coefficients(a)
                .iter()
                .zip(simple)
                .map(|(&k, &si)| {
                    let c = Rational64::from_integer(k) * rs.norm2(si) / rs.norm2(a);
                    debug_assert!(c.is_integer());
                    c.to_integer()
                })
                .collect()
        })
        .collect();
    let mut table = StructureTable {
        rs: rs.clone(),
        n_consts,
        pairing,
        coroots,
        killing: KillingGram { cartan: Matrix::zeros(0, 0), roots: Vec::new() },
    };
    table.killing = KillingGram::compute(&table);
    Ok(table)
}

impl StructureTable {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Dimension of the algebra.
    pub fn dim(&self) -> usize {
        self.rs.rank() + self.rs.len()
    }

    /// `N_{α,β}` by root index; 0 when `α + β` is not a root.
    pub fn n_idx(&self, a: usize, b: usize) -> i64 {
        self.n_consts[a * self.rs.len() + b]
    }

    /// `N_{α,β}`, or `None` when `α + β` is not a root.
    pub fn n_const(&self, a: &Root, b: &Root) -> Option<i64> {
        let i = self.rs.index_of(a)?;
        let j = self.rs.index_of(b)?;
        self.rs.sum_index(i, j).map(|_| self.n_idx(i, j))
    }

    /// `⟨α, α_i^∨⟩` for simple node `i`.
    pub fn pairing(&self, node: usize, root: usize) -> i64 {
        self.pairing[node * self.rs.len() + root]
    }

    pub fn coroot_coords(&self, root: usize) -> &[i64] {
        &self.coroots[root]
    }

    pub fn killing_gram(&self) -> &KillingGram {
        &self.killing
    }

    /// Copy of this table with the sign of `N_{α,β}` (and only that entry)
    /// flipped. Test fixture for the verification suite.
    #[doc(hidden)]
    pub fn with_corrupted_constant(&self, a: usize, b: usize) -> Self {
        let mut out = self.clone();
        let n = self.rs.len();
        out.n_consts[a * n + b] = -out.n_consts[a * n + b];
        out.killing = KillingGram::compute(&out);
        out
    }

    /// The coroot `h_α` as an algebra element.
    pub fn coroot<S: Scalar>(&self, root: usize) -> AlgebraElement<S> {
        AlgebraElement { cartan: self.coroots[root].iter().map(|&c| S::from_int(c)).collect(), roots: BTreeMap::new() }
    }

    /// `(α,α)/2 · h_α`: the element κ-dual to α up to one global constant,
    /// so that `κ(t_α, t_β)` is proportional to `(α, β)` for all roots.
    pub fn killing_dual<S: Scalar>(&self, root: usize) -> AlgebraElement<S> {
        let half = self.rs.norm2(root) / Rational64::from_integer(2);
        self.coroot::<S>(root).scaled(&S::from_rational64(&half))
    }

    pub fn root_vector<S: Scalar>(&self, root: usize) -> AlgebraElement<S> {
        let mut e = AlgebraElement::zero(self.rank());
        e.roots.insert(root, S::one());
        e
    }

    pub fn cartan_vector<S: Scalar>(&self, node: usize) -> AlgebraElement<S> {
        let mut e = AlgebraElement::zero(self.rank());
        e.cartan[node] = S::one();
        e
    }

    /// All basis elements: Cartan part first, then root vectors by index.
    pub fn basis<S: Scalar>(&self) -> Vec<AlgebraElement<S>> {
        (0..self.rank()).map(|k| self.cartan_vector(k)).chain((0..self.rs.len()).map(|a| self.root_vector(a))).collect()
    }

    /// Coefficient of basis element `k` (same order as [`Self::basis`]).
    pub fn coordinate<S: Scalar>(&self, x: &AlgebraElement<S>, k: usize) -> S {
        if k < self.rank() {
            x.cartan[k].clone()
        } else {
            x.root_coeff(k - self.rank())
        }
    }
}

/// Lie bracket in the Chevalley basis.
pub fn bracket<S: Scalar>(t: &StructureTable, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> AlgebraElement<S> {
    let rank = t.rank();
    let rs = &t.rs;
    let mut out = AlgebraElement::zero(rank);
    let weight = |h: &[S], root: usize| -> S {
        h.iter().enumerate().fold(S::zero(), |acc, (i, c)| {
            if c.is_zero() {
                acc
            } else {
                acc + c.clone() * S::from_int(t.pairing(i, root))
            }
        })
    };
    for (&b, yb) in &y.roots {
        let w = weight(&x.cartan, b);
        if !w.is_zero() {
            out.add_root(b, w * yb.clone());
        }
    }
    for (&a, xa) in &x.roots {
        let w = weight(&y.cartan, a);
        if !w.is_zero() {
            out.add_root(a, -(w * xa.clone()));
        }
    }
    for (&a, xa) in &x.roots {
        let neg_a = rs.negate(a);
        for (&b, yb) in &y.roots {
            if b == neg_a {
                let c = xa.clone() * yb.clone();
                for (k, &h) in t.coroots[a].iter().enumerate() {
                    if h != 0 {
                        out.cartan[k] += c.clone() * S::from_int(h);
                    }
                }
            } else if let Some(s) = rs.sum_index(a, b) {
                out.add_root(s, xa.clone() * yb.clone() * S::from_int(t.n_idx(a, b)));
            }
        }
    }
    out
}

/// `Tr(ad x ∘ ad y)` computed directly over the full Chevalley basis.
pub fn killing_form<S: Scalar>(t: &StructureTable, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> S {
    t.basis::<S>().iter().enumerate().fold(S::zero(), |acc, (k, b)| {
        let inner = bracket(t, y, b);
        if inner.is_zero() {
            return acc;
        }
        acc + t.coordinate(&bracket(t, x, &inner), k)
    })
}

impl KillingGram {
    fn compute(t: &StructureTable) -> Self {
        let rank = t.rank();
        let cartan =
            Matrix::from_fn(rank, rank, |i, j| killing_form::<Rational64>(t, &t.cartan_vector(i), &t.cartan_vector(j)));
        let roots = (0..t.rs.len())
            .map(|a| killing_form::<Rational64>(t, &t.root_vector(a), &t.root_vector(t.rs.negate(a))))
            .collect();
        Self { cartan, roots }
    }

    /// `κ(e_α, e_{−α})` by root index.
    pub fn root_pairing(&self, root: usize) -> Rational64 {
        self.roots[root]
    }

    pub fn cartan_block(&self) -> &Matrix<Rational64> {
        &self.cartan
    }

    /// Killing form from the cached Gram data; agrees with [`killing_form`].
    pub fn eval<S: Scalar>(&self, t: &StructureTable, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> S {
        let mut acc = S::zero();
        for (i, xi) in x.cartan.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.cartan.iter().enumerate() {
                let g = self.cartan[(i, j)];
                if !g.is_zero() && !yj.is_zero() {
                    acc += xi.clone() * yj.clone() * S::from_rational64(&g);
                }
            }
        }
        for (&a, xa) in &x.roots {
            if let Some(yb) = y.roots.get(&t.rs.negate(a)) {
                acc += xa.clone() * yb.clone() * S::from_rational64(&self.roots[a]);
            }
        }
        acc
    }
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero(rank: usize) -> Self {
        Self { cartan: vec![S::zero(); rank], roots: BTreeMap::new() }
    }

    pub fn from_parts(cartan: Vec<S>, roots: impl IntoIterator<Item = (usize, S)>) -> Self {
        let mut out = Self { cartan, roots: BTreeMap::new() };
        for (a, c) in roots {
            out.add_root(a, c);
        }
        out
    }

    pub fn cartan(&self) -> &[S] {
        &self.cartan
    }

    /// Nonzero root-vector coefficients keyed by root index.
    pub fn root_coeffs(&self) -> &BTreeMap<usize, S> {
        &self.roots
    }

    /// Nonzero root-vector coefficients keyed by the root itself.
    pub fn e_coeffs<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = (&'a Root, &'a S)> + 'a {
        self.roots.iter().map(move |(&a, c)| (rs.root(a), c))
    }

    pub fn root_coeff(&self, root: usize) -> S {
        self.roots.get(&root).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.roots.is_empty() && self.cartan.iter().all(Zero::is_zero)
    }

    pub fn add_root(&mut self, root: usize, c: S) {
        if c.is_zero() {
            return;
        }
        let entry = self.roots.entry(root).or_insert_with(S::zero);
        *entry += c;
        if entry.is_zero() {
            self.roots.remove(&root);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.cartan.iter().enumerate() {
            out.cartan[k] += c.clone();
        }
        for (&a, c) in &other.roots {
            out.add_root(a, c.clone());
        }
        out
    }

    pub fn scaled(&self, f: &S) -> Self {
        if f.is_zero() {
            return Self::zero(self.cartan.len());
        }
        Self {
            cartan: self.cartan.iter().map(|c| c.clone() * f.clone()).collect(),
            roots: self.roots.iter().map(|(&a, c)| (a, c.clone() * f.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(&-S::one()))
    }
}

/// Proportionality check helper: the ratio `κ(t_α, t_β) / (α, β)` over all
/// pairs with nonzero `(α, β)`, or `None` if it is not a single positive
/// constant.
pub fn killing_inner_ratio(t: &StructureTable) -> Option<Rational64> {
    let rs = &t.rs;
    let n = rs.len();
    let duals: Vec<AlgebraElement<Rational64>> = (0..n).map(|a| t.killing_dual(a)).collect();
    let mut ratio: Option<Rational64> = None;
    for a in 0..n {
        for b in 0..n {
            let k = t.killing.eval(t, &duals[a], &duals[b]);
            let ip = rs.inner_idx(a, b);
            if ip.is_zero() {
                if !k.is_zero() {
                    return None;
                }
                continue;
            }
            let r = k / ip;
            match ratio {
                None if r.is_positive() => ratio = Some(r),
                Some(prev) if prev == r => {}
                _ => return None,
            }
        }
    }
    ratio
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_root_system, Family};

    fn table(f: Family, n: usize) -> StructureTable {
        structure_constants(&build_root_system(f, n).unwrap()).unwrap()
    }

    fn r(dim: usize, terms: &[(usize, i64)]) -> Root {
        Root::from_terms(dim, terms)
    }

    #[test]
    fn a3_examples() {
        let t = table(Family::A, 3);
        let a = r(4, &[(1, 1), (2, -1)]);
        let b = r(4, &[(2, 1), (3, -1)]);
        assert_eq!(t.n_const(&a, &b).unwrap().abs(), 1);
        assert_eq!(t.n_const(&a, &b).unwrap(), -t.n_const(&-&a, &-&b).unwrap());
        assert_eq!(t.n_const(&a, &r(4, &[(3, 1), (4, -1)])), None);
    }

    #[test]
    fn b2_magnitudes() {
        let t = table(Family::B, 2);
        let e2 = r(2, &[(2, 1)]);
        assert_eq!(t.n_const(&e2, &r(2, &[(1, 1), (2, -1)])).unwrap().abs(), 1);
        assert_eq!(t.n_const(&e2, &r(2, &[(1, 1)])).unwrap().abs(), 2);
    }

    #[test]
    fn defining_brackets() {
        let t = table(Family::A, 3);
        let rs = t.root_system();
        let a = rs.index_of(&r(4, &[(1, 1), (2, -1)])).unwrap();
        let x = t.root_vector::<Rational64>(a);
        let y = t.root_vector::<Rational64>(rs.negate(a));
        assert_eq!(bracket(&t, &x, &y), t.coroot(a));
        let c = rs.index_of(&r(4, &[(3, 1), (4, -1)])).unwrap();
        assert!(bracket(&t, &x, &t.root_vector(c)).is_zero());
        // [h_a, e_a] = 2 e_a
        let h = t.coroot::<Rational64>(a);
        assert_eq!(bracket(&t, &h, &x), x.scaled(&Rational64::from_integer(2)));
    }

    #[test]
    fn killing_examples() {
        let t = table(Family::A, 3);
        let rs = t.root_system();
        for a in 0..rs.len() {
            assert!(killing_form::<Rational64>(&t, &t.coroot(a), &t.coroot(a)).is_positive());
        }
        for a in 0..rs.len() {
            for b in 0..rs.len() {
                let k = killing_form::<Rational64>(&t, &t.root_vector(a), &t.root_vector(b));
                assert_eq!(k.is_zero(), b != rs.negate(a));
            }
        }
        let a = rs.index_of(&r(4, &[(1, 1), (2, -1)])).unwrap();
        let b = rs.index_of(&r(4, &[(3, 1), (4, -1)])).unwrap();
        assert!(killing_form::<Rational64>(&t, &t.coroot(a), &t.coroot(b)).is_zero());
    }

    #[test]
    fn killing_gram_matches_trace() {
        let t = table(Family::C, 3);
        let basis = t.basis::<Rational64>();
        for x in basis.iter().step_by(3) {
            for y in basis.iter().step_by(2) {
                assert_eq!(t.killing_gram().eval(&t, x, y), killing_form(&t, x, y));
            }
        }
    }

    #[test]
    fn killing_proportional_to_inner_product() {
        // A_n: κ = 2(n+1)·(,) with long roots of length 2.
        assert_eq!(killing_inner_ratio(&table(Family::A, 3)), Some(Rational64::from_integer(8)));
        for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::C, 2)] {
            assert!(killing_inner_ratio(&table(f, n)).is_some(), "{f}{n}");
        }
    }

    #[test]
    fn corrupted_table_differs_in_one_entry() {
        let t = table(Family::A, 2);
        let bad = t.with_corrupted_constant(0, 1);
        assert_eq!(bad.n_idx(0, 1), -t.n_idx(0, 1));
        assert_eq!(bad.n_idx(1, 0), t.n_idx(1, 0));
    }
}
