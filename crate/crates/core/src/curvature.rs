//! Holomorphic bisectional curvature of a compact hermitian symmetric space
//! at the base point, in the real basis `X_α = e_α − e_{−α}` (`α ∈ Ψ`) of
//! the tangent space, with `J X_α = i(e_α + e_{−α})`.
//!
//! Two independent routes are provided:
//!
//! * the component route: curvature components `R^γ_{βδ̄α}` from root data
//!   and structure constants, assembled into the form `H_X(W, W)`;
//! * the bracket route: `⟨R(X, JX)W, JW⟩ = −κ([X, JX], [W, JW])`, computed
//!   with actual Lie brackets and the Killing trace form.
//!
//! In the Chevalley normalization the component route reads
//!
//! ```text
//! R^γ_{γᾱα} = 4(α,γ) / (|α|²|γ|²)
//! R^δ_{γβ̄α} = N_{α,−β} N_{γ,−δ} · 2/|α−β|²      (α+γ = β+δ, γ ≠ δ)
//! ```
//!
//! which for simply-laced algebras is `(α,γ)` and `N_{α,−β}N_{γ,−δ}`. The
//! bracket route differs from it by one positive constant per space.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chevalley::{bracket, AlgebraElement};
use crate::error::{Error, Result};
use crate::hss_catalog::{HermitianSpace, SpaceId};
use crate::linalg::Matrix;
use crate::root_system::Root;
use crate::scalar::{RealScalar, Scalar};

/// Real coefficients `a_α` of `X = Σ a_α X_α`, in Ψ order.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentVector<S> {
    coeffs: Vec<S>,
}

/// `H_X(W, W) = bᵀ M b` for `W = Σ b_β X_β`.
#[derive(Clone, PartialEq)]
pub struct HermitianForm<S> {
    pub space: SpaceId,
    pub matrix: Matrix<S>,
}

impl<S: std::fmt::Display> std::fmt::Debug for HermitianForm<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "H_X on {}: {:?}", self.space, self.matrix)
    }
}

/// The complex line `X ∧ JX` with the dimension of the largest complex
/// subspace of its positivity cone.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeLine<S> {
    pub space: SpaceId,
    pub base_vector: TangentVector<S>,
    pub nullity: usize,
    pub ell_line: usize,
}

impl<S: Scalar> TangentVector<S> {
    pub fn new(space: &HermitianSpace, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != space.v() {
            return Err(Error::Argument(format!(
                "tangent vector has {} coefficients, {} has dimension {}",
                coeffs.len(),
                space.id(),
                space.v()
            )));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(space: &HermitianSpace) -> Self {
        Self { coeffs: vec![S::zero(); space.v()] }
    }

    /// The basis vector `X_α` for `α ∈ Ψ`.
    pub fn basis(space: &HermitianSpace, alpha: &Root) -> Result<Self> {
        let k = space.psi_position_of(alpha)?;
        let mut v = Self::zero(space);
        v.coeffs[k] = S::one();
        Ok(v)
    }

    pub fn from_pairs(space: &HermitianSpace, pairs: &[(Root, S)]) -> Result<Self> {
        let mut v = Self::zero(space);
        for (root, c) in pairs {
            let k = space.psi_position_of(root)?;
            v.coeffs[k] += c.clone();
        }
        Ok(v)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn get(&self, k: usize) -> &S {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&k| !self.coeffs[k].is_zero()).collect()
    }

    fn check(&self, space: &HermitianSpace) -> Result<()> {
        if self.coeffs.len() != space.v() {
            return Err(Error::Argument(format!("tangent vector does not belong to {}", space.id())));
        }
        Ok(())
    }

    fn check_nontrivial(&self, space: &HermitianSpace) -> Result<()> {
        self.check(space)?;
        if self.is_zero() {
            return Err(Error::Argument("tangent vector must be nonzero".into()));
        }
        Ok(())
    }
}

/// `R^γ_{γᾱα}` on Ψ positions.
fn diagonal_component(space: &HermitianSpace, a: usize, g: usize) -> Rational64 {
    let rs = space.root_system();
    let (ia, ig) = (space.psi_indices()[a], space.psi_indices()[g]);
    Rational64::from_integer(4) * rs.inner_idx(ia, ig) / (rs.norm2(ia) * rs.norm2(ig))
}

/// `N_{α,−β} N_{γ,−δ} · 2/|α−β|²` on Ψ positions, zero unless `α−β` is a root.
fn cross_component(space: &HermitianSpace, a: usize, b: usize, g: usize, d: usize) -> Rational64 {
    let rs = space.root_system();
    let t = space.table();
    let psi = space.psi_indices();
    let (ia, ib, ig, id) = (psi[a], psi[b], psi[g], psi[d]);
    let Some(diff) = rs.diff_index(ia, ib) else {
        return Rational64::zero();
    };
    let n1 = t.n_idx(ia, rs.negate(ib));
    let n2 = t.n_idx(ig, rs.negate(id));
    Rational64::from_integer(2 * n1 * n2) / rs.norm2(diff)
}

/// Curvature component `R^γ_{βδ̄α}` for four roots of Ψ.
pub fn curvature_component(
    space: &HermitianSpace,
    beta: &Root,
    delta: &Root,
    alpha: &Root,
    gamma: &Root,
) -> Result<Rational64> {
    let b = space.psi_position_of(beta)?;
    let d = space.psi_position_of(delta)?;
    let a = space.psi_position_of(alpha)?;
    let g = space.psi_position_of(gamma)?;
    Ok(component_at(space, b, d, a, g))
}

fn component_at(space: &HermitianSpace, b: usize, d: usize, a: usize, g: usize) -> Rational64 {
    if beta_plus_alpha_differs(space, b, a, g, d) {
        Rational64::zero()
    } else if b == g {
        // then a == d as well
        diagonal_component(space, d, b)
    } else {
        cross_component(space, a, d, b, g)
    }
}

fn beta_plus_alpha_differs(space: &HermitianSpace, b: usize, a: usize, g: usize, d: usize) -> bool {
    let psi = space.psi_indices();
    let rs = space.root_system();
    let lhs = rs.root(psi[b]) + rs.root(psi[a]);
    let rhs = rs.root(psi[g]) + rs.root(psi[d]);
    lhs != rhs
}

/// Assembles `M` with `M[γ][δ] = Σ_{α,β} a_α a_β R^δ_{γβ̄α}`.
pub fn hermitian_form<S: Scalar>(space: &HermitianSpace, x: &TangentVector<S>) -> Result<HermitianForm<S>> {
    x.check_nontrivial(space)?;
    let v = space.v();
    let rs = space.root_system();
    let psi = space.psi_indices();
    let mut m = Matrix::zeros(v, v);
    let support = x.support();

    for &a in &support {
        let aa = x.coeffs[a].clone() * x.coeffs[a].clone();
        for g in 0..v {
            let w = diagonal_component(space, a, g);
            if !w.is_zero() {
                m[(g, g)] += aa.clone() * S::from_rational64(&w);
            }
        }
    }
    for &a in &support {
        for &b in &support {
            let Some(diff) = rs.diff_index(psi[a], psi[b]) else {
                continue;
            };
            let ab = x.coeffs[a].clone() * x.coeffs[b].clone();
            for g in 0..v {
                // δ = γ + α − β
                let Some(delta) = rs.sum_index(psi[g], diff) else {
                    continue;
                };
                let Some(d) = space.psi_position(delta) else {
                    continue;
                };
                if d == g {
                    continue;
                }
                let w = cross_component(space, a, b, g, d);
                if !w.is_zero() {
                    m[(g, d)] += ab.clone() * S::from_rational64(&w);
                }
            }
        }
    }
    debug_assert!(m.is_symmetric());
    Ok(HermitianForm { space: space.id(), matrix: m })
}

/// `x⁺ = Σ a_α e_α` and `x⁻ = Σ a_α e_{−α}`.
fn holomorphic_parts<S: Scalar>(
    space: &HermitianSpace,
    coeffs: &[S],
    conj: impl Fn(&S) -> S,
) -> (AlgebraElement<S>, AlgebraElement<S>) {
    let rs = space.root_system();
    let rank = rs.rank();
    let psi = space.psi_indices();
    let plus = AlgebraElement::from_parts(vec![S::zero(); rank], psi.iter().zip(coeffs).map(|(&i, c)| (i, c.clone())));
    let minus = AlgebraElement::from_parts(
        vec![S::zero(); rank],
        psi.iter().zip(coeffs).map(|(&i, c)| (rs.negate(i), conj(c))),
    );
    (plus, minus)
}

/// `[x⁺, x⁻]`; since `[X, JX] = 2i[x⁺, x⁻]`, this carries all of `X`'s
/// contribution to the bisectional curvature.
fn curvature_operator<S: Scalar>(space: &HermitianSpace, x: &TangentVector<S>) -> AlgebraElement<S> {
    let (p, m) = holomorphic_parts(space, &x.coeffs, Clone::clone);
    bracket(space.table(), &p, &m)
}

/// `⟨R(X, JX)W, JW⟩ = −κ([X, JX], [W, JW]) = 4 κ([x⁺, x⁻], [w⁺, w⁻])`, for
/// the symmetric-space curvature `R(U, V)W = −[[U, V], W]` and the metric
/// `−κ` on the compact real form.
pub fn bracket_curvature_oracle<S: Scalar>(
    space: &HermitianSpace,
    x: &TangentVector<S>,
    w: &TangentVector<S>,
) -> Result<S> {
    x.check(space)?;
    w.check(space)?;
    let k = curvature_operator(space, x);
    let (wp, wm) = holomorphic_parts(space, &w.coeffs, Clone::clone);
    let t = space.table();
    Ok(S::from_int(4) * t.killing_gram().eval(t, &k, &bracket(t, &wp, &wm)))
}

/// Polarized Gram matrix of `w ↦ bracket_curvature_oracle(x, w)` on the
/// `X_β` basis.
pub fn oracle_gram<S: Scalar>(space: &HermitianSpace, x: &TangentVector<S>) -> Result<Matrix<S>> {
    x.check(space)?;
    let t = space.table();
    let rs = space.root_system();
    let psi = space.psi_indices();
    let k = curvature_operator(space, x);
    let v = space.v();
    let pair = |g: usize, d: usize| -> S {
        let e = t.root_vector::<S>(psi[g]);
        let f = t.root_vector::<S>(rs.negate(psi[d]));
        t.killing_gram().eval(t, &k, &bracket(t, &e, &f))
    };
    let mut g = Matrix::zeros(v, v);
    for i in 0..v {
        for j in i..v {
            let val = if i == j { S::from_int(4) * pair(i, i) } else { S::from_int(2) * (pair(i, j) + pair(j, i)) };
            g[(i, j)] = val.clone();
            g[(j, i)] = val;
        }
    }
    Ok(g)
}

/// The bracket-route form on the full real tangent space, in the basis
/// `X_β` (first `v`) then `JX_β` (last `v`). Computed over the Gaussian
/// rationals by polarizing `W ↦ ⟨R(X, JX)W, JW⟩` with
/// `W = Σ (b_β + i c_β) e_β − (b_β − i c_β) e_{−β}`.
pub fn oracle_real_gram(space: &HermitianSpace, x: &TangentVector<BigRational>) -> Result<Matrix<BigRational>> {
    x.check(space)?;
    type C = Complex<BigRational>;
    let v = space.v();
    let t = space.table();
    let xc = TangentVector { coeffs: x.coeffs.iter().map(|c| C::new(c.clone(), BigRational::zero())).collect() };
    let k = curvature_operator(space, &xc);
    let quad = |z: &[C]| -> Result<BigRational> {
        let (wp, wm) = holomorphic_parts(space, z, |c: &C| c.conj());
        let val = C::from_int(4) * t.killing_gram().eval(t, &k, &bracket(t, &wp, &wm));
        if !val.im.is_zero() {
            return Err(Error::Consistency("bisectional curvature has an imaginary part".into()));
        }
        Ok(val.re)
    };
    let unit = |k: usize| -> Vec<C> {
        let mut z = vec![C::zero(); v];
        if k < v {
            z[k] = C::one();
        } else {
            z[k - v] = C::i();
        }
        z
    };
    let diag: Vec<BigRational> = (0..2 * v).map(|i| quad(&unit(i))).collect::<Result<_>>()?;
    let mut g = Matrix::zeros(2 * v, 2 * v);
    for i in 0..2 * v {
        g[(i, i)] = diag[i].clone();
        for j in i + 1..2 * v {
            let mut z = unit(i);
            for (a, b) in z.iter_mut().zip(unit(j)) {
                *a += b;
            }
            let val = (quad(&z)? - diag[i].clone() - diag[j].clone()) / BigRational::from_integer(BigInt::from(2));
            g[(i, j)] = val.clone();
            g[(j, i)] = val;
        }
    }
    Ok(g)
}

/// Kernel dimension of `H_X`, by fraction-free elimination.
pub fn nullity<S: Scalar>(space: &HermitianSpace, x: &TangentVector<S>) -> Result<usize> {
    Ok(hermitian_form(space, x)?.matrix.nullity())
}

pub fn ell_of_line<S: Scalar>(space: &HermitianSpace, x: &TangentVector<S>) -> Result<ConeLine<S>> {
    let nullity = nullity(space, x)?;
    Ok(ConeLine { space: space.id(), base_vector: x.clone(), nullity, ell_line: space.v() - nullity })
}

/// Rank of the p×q matrix of a Grassmannian tangent vector; entry (i, j)
/// is the coefficient of `ε_i − ε_{p+j}`.
pub fn grassmann_rank<S: Scalar>(space: &HermitianSpace, x: &TangentVector<S>) -> Result<usize> {
    Ok(grassmann_matrix(space, x)?.rank())
}

pub fn grassmann_matrix<S: Scalar>(space: &HermitianSpace, x: &TangentVector<S>) -> Result<Matrix<S>> {
    let SpaceId::Grassmannian { p, q } = space.id() else {
        return Err(Error::Argument(format!("{} is not a Grassmannian", space.id())));
    };
    x.check(space)?;
    let dim = p + q;
    let mut m = Matrix::zeros(p, q);
    for i in 0..p {
        for j in 0..q {
            let root = Root::from_terms(dim, &[(i + 1, 1), (p + j + 1, -1)]);
            let k = space.psi_position_of(&root)?;
            m[(i, j)] = x.coeffs[k].clone();
        }
    }
    Ok(m)
}

/// Inverse of [`grassmann_matrix`].
pub fn grassmann_vector<S: Scalar>(space: &HermitianSpace, m: &Matrix<S>) -> Result<TangentVector<S>> {
    let SpaceId::Grassmannian { p, q } = space.id() else {
        return Err(Error::Argument(format!("{} is not a Grassmannian", space.id())));
    };
    if m.rows() != p || m.cols() != q {
        return Err(Error::Argument(format!("expected a {p}x{q} matrix")));
    }
    let mut v = TangentVector::zero(space);
    for i in 0..p {
        for j in 0..q {
            let k = space.psi_position_of(&Root::from_terms(p + q, &[(i + 1, 1), (p + j + 1, -1)]))?;
            v.coeffs[k] = m[(i, j)].clone();
        }
    }
    Ok(v)
}

fn psi_prime_positions(space: &HermitianSpace, a: usize) -> Vec<usize> {
    let rs = space.root_system();
    let psi = space.psi_indices();
    (0..space.v()).filter(|&g| !rs.inner_idx(psi[a], psi[g]).is_zero()).collect()
}

/// `Ψ'_α = {γ ∈ Ψ : (α, γ) ≠ 0}`.
pub fn psi_prime(space: &HermitianSpace, alpha: &Root) -> Result<Vec<Root>> {
    let a = space.psi_position_of(alpha)?;
    Ok(psi_prime_positions(space, a).into_iter().map(|g| space.psi_root(g).clone()).collect())
}

/// `|Ψ'_α|` for every α in Ψ order.
pub fn psi_prime_sizes(space: &HermitianSpace) -> Vec<usize> {
    (0..space.v()).map(|a| psi_prime_positions(space, a).len()).collect()
}

/// Complex positivity: the minimum of `|Ψ'_α|` over Ψ, cross-checked against
/// the kernel of `H_{X_α}` at a minimizing α.
pub fn complex_positivity(space: &HermitianSpace) -> Result<usize> {
    let sizes = psi_prime_sizes(space);
    let (argmin, &ell) =
        sizes.iter().enumerate().min_by_key(|&(k, s)| (*s, k)).ok_or_else(|| Error::Consistency("empty Ψ".into()))?;
    let x = TangentVector::<BigRational>::basis(space, space.psi_root(argmin))?;
    let line = ell_of_line(space, &x)?;
    if line.ell_line != ell {
        return Err(Error::Consistency(format!(
            "{}: |Ψ'| = {ell} but the kernel of H_X gives {}",
            space.id(),
            line.ell_line
        )));
    }
    Ok(ell)
}

/// `Ψ'_α` as the index set of a maximal complex subspace of the positivity
/// cone of `X_α ∧ JX_α`.
pub fn maximal_cone_subspace(space: &HermitianSpace, alpha: &Root) -> Result<Vec<Root>> {
    psi_prime(space, alpha)
}

/// Ratio between the bracket route and the component route, measured on
/// `X = W = X_α` for the first root of Ψ.
pub fn oracle_constant(space: &HermitianSpace) -> Result<BigRational> {
    let x = TangentVector::<BigRational>::basis(space, space.psi_root(0))?;
    let form = hermitian_form(space, &x)?;
    let lhs = bracket_curvature_oracle(space, &x, &x)?;
    let rhs = form.matrix.quadratic_form(x.coeffs());
    if rhs.is_zero() {
        return Err(Error::Consistency("H_X(X, X) vanishes for a basis vector".into()));
    }
    Ok(lhs / rhs)
}

/// Summary of a semidefiniteness certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsdCertificate {
    pub rank: usize,
    pub nullity: usize,
}

pub fn certify_psd<S: RealScalar>(form: &HermitianForm<S>) -> Result<PsdCertificate> {
    match form.matrix.definiteness() {
        crate::linalg::Definiteness::PositiveSemidefinite { rank } => {
            Ok(PsdCertificate { rank, nullity: form.matrix.rows() - rank })
        }
        crate::linalg::Definiteness::Indefinite { at } => {
            Err(Error::Consistency(format!("H_X on {} has a negative direction (pivot {at})", form.space)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hss_catalog::resolve;
    use num_traits::Signed;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn r(dim: usize, terms: &[(usize, i64)]) -> Root {
        Root::from_terms(dim, terms)
    }

    fn gr(p: usize, qq: usize) -> HermitianSpace {
        resolve(SpaceId::Grassmannian { p, q: qq }).unwrap()
    }

    #[test]
    fn component_examples() {
        let s = gr(2, 2);
        let e13 = r(4, &[(1, 1), (3, -1)]);
        let e14 = r(4, &[(1, 1), (4, -1)]);
        let e23 = r(4, &[(2, 1), (3, -1)]);
        let e24 = r(4, &[(2, 1), (4, -1)]);
        // β = γ = e1−e3, α = δ = e1−e4
        assert_eq!(curvature_component(&s, &e13, &e14, &e14, &e13).unwrap(), Rational64::from_integer(1));
        // β + α ≠ γ + δ
        assert_eq!(curvature_component(&s, &e13, &e13, &e24, &e14).unwrap(), Rational64::zero());
        // β=e1−e3, γ=e1−e4, α=e2−e4, δ=e2−e3
        let v = curvature_component(&s, &e13, &e23, &e24, &e14).unwrap();
        assert_eq!(v.abs(), Rational64::from_integer(1));
        let t = s.table();
        let expected = t.n_const(&e24, &-&e23).unwrap() * t.n_const(&e13, &-&e14).unwrap();
        assert_eq!(v, Rational64::from_integer(expected));
        assert!(curvature_component(&s, &-&e13, &e23, &e24, &e14).is_err());
    }

    #[test]
    fn single_root_form_is_diagonal() {
        let s = gr(2, 2);
        let x = TangentVector::<Q>::basis(&s, &r(4, &[(1, 1), (3, -1)])).unwrap();
        let m = hermitian_form(&s, &x).unwrap().matrix;
        let order =
            [r(4, &[(1, 1), (3, -1)]), r(4, &[(1, 1), (4, -1)]), r(4, &[(2, 1), (3, -1)]), r(4, &[(2, 1), (4, -1)])];
        let pos: Vec<usize> = order.iter().map(|o| s.psi_position_of(o).unwrap()).collect();
        let expected = [2, 1, 1, 0];
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { q(expected[i]) } else { q(0) };
                assert_eq!(m[(pos[i], pos[j])], want);
            }
        }
    }

    #[test]
    fn strongly_orthogonal_pair_gives_scalar_form() {
        let s = gr(2, 2);
        let x =
            TangentVector::<Q>::from_pairs(&s, &[(r(4, &[(1, 1), (3, -1)]), q(1)), (r(4, &[(2, 1), (4, -1)]), q(1))])
                .unwrap();
        let m = hermitian_form(&s, &x).unwrap().matrix;
        assert_eq!(m, Matrix::identity(4).scale(&q(2)));
    }

    #[test]
    fn same_row_pair_has_null_direction() {
        let s = gr(2, 2);
        let x =
            TangentVector::<Q>::from_pairs(&s, &[(r(4, &[(1, 1), (3, -1)]), q(1)), (r(4, &[(1, 1), (4, -1)]), q(1))])
                .unwrap();
        let m = hermitian_form(&s, &x).unwrap().matrix;
        let i = s.psi_position_of(&r(4, &[(2, 1), (3, -1)])).unwrap();
        let j = s.psi_position_of(&r(4, &[(2, 1), (4, -1)])).unwrap();
        let det = m[(i, i)].clone() * m[(j, j)].clone() - m[(i, j)].clone() * m[(j, i)].clone();
        assert!(det.is_zero());
        assert!(!m[(i, j)].is_zero());
        assert_eq!(m.nullity(), 1);
    }

    #[test]
    fn zero_vector_rejected() {
        let s = gr(2, 2);
        assert!(matches!(hermitian_form(&s, &TangentVector::<Q>::zero(&s)), Err(Error::Argument(_))));
        assert!(nullity(&s, &TangentVector::<Q>::zero(&s)).is_err());
        let wrong = gr(1, 2);
        let x = TangentVector::<Q>::zero(&wrong);
        assert!(bracket_curvature_oracle(&s, &x, &x).is_err());
    }

    #[test]
    fn grassmann_nullities() {
        let s = gr(2, 2);
        let x = TangentVector::<Q>::basis(&s, &r(4, &[(1, 1), (3, -1)])).unwrap();
        let line = ell_of_line(&s, &x).unwrap();
        assert_eq!((line.nullity, line.ell_line), (1, 3));
        let x =
            TangentVector::<Q>::from_pairs(&s, &[(r(4, &[(1, 1), (3, -1)]), q(1)), (r(4, &[(2, 1), (4, -1)]), q(1))])
                .unwrap();
        assert_eq!(ell_of_line(&s, &x).unwrap().ell_line, 4);
        let s3 = gr(3, 3);
        let x =
            TangentVector::<Q>::from_pairs(&s3, &[(r(6, &[(1, 1), (4, -1)]), q(1)), (r(6, &[(2, 1), (5, -1)]), q(1))])
                .unwrap();
        assert_eq!(grassmann_rank(&s3, &x).unwrap(), 2);
        assert_eq!(nullity(&s3, &x).unwrap(), 1);
    }

    #[test]
    fn grassmann_rank_examples() {
        let s = gr(2, 2);
        let e13 = r(4, &[(1, 1), (3, -1)]);
        let e14 = r(4, &[(1, 1), (4, -1)]);
        let e24 = r(4, &[(2, 1), (4, -1)]);
        let rank = |pairs: &[(Root, Q)]| grassmann_rank(&s, &TangentVector::from_pairs(&s, pairs).unwrap()).unwrap();
        assert_eq!(rank(&[(e13.clone(), q(1))]), 1);
        assert_eq!(rank(&[(e13.clone(), q(1)), (e14, q(1))]), 1);
        assert_eq!(rank(&[(e13, q(1)), (e24, q(1))]), 2);
        let quad = resolve(SpaceId::Quadric { p: 4 }).unwrap();
        assert!(grassmann_rank(&quad, &TangentVector::<Q>::zero(&quad)).is_err());
    }

    #[test]
    fn psi_prime_examples() {
        let s = gr(2, 3);
        assert_eq!(psi_prime(&s, &r(5, &[(1, 1), (4, -1)])).unwrap().len(), 4);
        let q5 = resolve(SpaceId::Quadric { p: 5 }).unwrap();
        let got: std::collections::BTreeSet<Root> =
            psi_prime(&q5, &r(3, &[(1, 1), (2, -1)])).unwrap().into_iter().collect();
        let want: std::collections::BTreeSet<Root> =
            [r(3, &[(1, 1), (2, -1)]), r(3, &[(1, 1)]), r(3, &[(1, 1), (3, -1)]), r(3, &[(1, 1), (3, 1)])]
                .into_iter()
                .collect();
        assert_eq!(got, want);
        assert_eq!(psi_prime(&q5, &r(3, &[(1, 1)])).unwrap().len(), 5);
        assert!(psi_prime(&q5, &r(3, &[(2, 1)])).is_err());
    }

    #[test]
    fn positivity_examples() {
        assert_eq!(complex_positivity(&gr(3, 4)).unwrap(), 6);
        assert_eq!(complex_positivity(&resolve(SpaceId::Lagrangian { r: 4 }).unwrap()).unwrap(), 4);
        assert_eq!(complex_positivity(&resolve(SpaceId::Spinor { r: 6 }).unwrap()).unwrap(), 9);
        assert_eq!(complex_positivity(&resolve(SpaceId::E6).unwrap()).unwrap(), 11);
        assert_eq!(complex_positivity(&resolve(SpaceId::E7).unwrap()).unwrap(), 17);
    }

    #[test]
    fn cone_subspace_examples() {
        let s = gr(2, 2);
        let alpha = r(4, &[(1, 1), (3, -1)]);
        let got: std::collections::BTreeSet<Root> = maximal_cone_subspace(&s, &alpha).unwrap().into_iter().collect();
        let want: std::collections::BTreeSet<Root> =
            [r(4, &[(1, 1), (3, -1)]), r(4, &[(1, 1), (4, -1)]), r(4, &[(2, 1), (3, -1)])].into_iter().collect();
        assert_eq!(got, want);
        let x = TangentVector::<Q>::basis(&s, &alpha).unwrap();
        let m = hermitian_form(&s, &x).unwrap().matrix;
        let k = s.psi_position_of(&r(4, &[(2, 1), (4, -1)])).unwrap();
        assert!(m[(k, k)].is_zero());
    }

    #[test]
    fn oracle_matches_form_on_gr22() {
        let s = gr(2, 2);
        let x = TangentVector::<Q>::basis(&s, &r(4, &[(1, 1), (3, -1)])).unwrap();
        let val = bracket_curvature_oracle(&s, &x, &x).unwrap();
        assert!(val.is_positive());
        let c = oracle_constant(&s).unwrap();
        let form = hermitian_form(&s, &x).unwrap();
        assert_eq!(oracle_gram(&s, &x).unwrap(), form.matrix.scale(&c));
        let kernel = form.matrix.kernel_basis();
        for k in kernel {
            let w = TangentVector::new(&s, k).unwrap();
            assert!(bracket_curvature_oracle(&s, &x, &w).unwrap().is_zero());
        }
    }

    #[test]
    fn real_gram_doubles_kernel() {
        for id in [SpaceId::Grassmannian { p: 2, q: 3 }, SpaceId::Lagrangian { r: 3 }, SpaceId::Quadric { p: 5 }] {
            let s = resolve(id).unwrap();
            let mut coeffs = vec![q(0); s.v()];
            coeffs[0] = q(1);
            coeffs[s.v() - 1] = q(2);
            let x = TangentVector::new(&s, coeffs).unwrap();
            let g = oracle_real_gram(&s, &x).unwrap();
            assert_eq!(g.nullity(), 2 * nullity(&s, &x).unwrap(), "{id}");
            assert!(g.definiteness().is_psd());
        }
    }
}
