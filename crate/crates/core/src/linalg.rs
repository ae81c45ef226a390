//! Dense exact matrices: fraction-free rank, kernels, inverses and
//! semidefiniteness certificates. No tolerance parameter exists here; every
//! comparison is against exact zero.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{Num, Signed};

use crate::scalar::{RealScalar, Scalar};

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    /// Builds a matrix from row vectors. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            assert_eq!(row.len(), n_cols, "ragged matrix rows");
            data.extend(row);
        }
        Self { rows: n_rows, cols: n_cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * factor.clone()).collect() }
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect()
    }

    pub fn mul(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, other.rows);
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(S::zero(), |acc, k| acc + self[(i, k)].clone() * other[(k, j)].clone())
        })
    }

    /// `vᵀ M v`.
    pub fn quadratic_form(&self, v: &[S]) -> S {
        self.mul_vec(v).into_iter().zip(v).fold(S::zero(), |acc, (a, b)| acc + a * b.clone())
    }

    /// Rank by Bareiss fraction-free elimination. Every division performed
    /// is exact; on integer input all intermediate entries stay integral
    /// (they are minors of the input). Rational input is first scaled to
    /// integers.
    pub fn rank(&self) -> usize {
        match S::clear_denominators(&self.data) {
            Some(ints) => bareiss_rank(ints, self.rows, self.cols),
            None => bareiss_rank(self.data.clone(), self.rows, self.cols),
        }
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = S::one() / m[(r, c)].clone();
            for j in c..m.cols {
                let v = m[(r, j)].clone() * inv.clone();
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// A basis of `{x : M x = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Exact inverse; `None` when singular or non-square.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                S::one()
            } else {
                S::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Outcome of an exact semidefiniteness test on a symmetric matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Definiteness {
    PositiveSemidefinite {
        rank: usize,
    },
    /// Some direction gives a negative value; the index is the pivot
    /// position (in the original numbering) where this was detected.
    Indefinite {
        at: usize,
    },
}

impl Definiteness {
    pub fn is_psd(&self) -> bool {
        matches!(self, Definiteness::PositiveSemidefinite { .. })
    }
}

impl<S: RealScalar> Matrix<S> {
    /// Exact semidefiniteness test by symmetric-pivoting elimination.
    pub fn definiteness(&self) -> Definiteness {
        assert!(self.is_symmetric(), "definiteness requires a symmetric matrix");
        match S::clear_denominators(&self.data) {
            Some(ints) => bareiss_definiteness(ints, self.rows),
            None => bareiss_definiteness(self.data.clone(), self.rows),
        }
    }
}

fn bareiss_rank<R: Clone + Num>(mut a: Vec<R>, rows: usize, cols: usize) -> usize {
    let mut prev = R::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + c].clone();
        for i in rank + 1..rows {
            let lead = a[i * cols + c].clone();
            for j in c + 1..cols {
                let v = (pivot.clone() * a[i * cols + j].clone() - lead.clone() * a[rank * cols + j].clone())
                    / prev.clone();
                a[i * cols + j] = v;
            }
            a[i * cols + c] = R::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Symmetric-pivoting fraction-free LDLᵀ. After pivoting on the principal
/// set P, each live entry is a minor `det M[P∪{i}, P∪{j}]`, which is the
/// Schur complement entry times `det M[P, P] > 0`. So a symmetric matrix is
/// PSD iff no live diagonal goes negative and, once all live diagonals
/// vanish, the live block is zero. The number of pivots is the rank.
fn bareiss_definiteness<R: Clone + Num + Signed>(mut a: Vec<R>, n: usize) -> Definiteness {
    let mut alive: Vec<usize> = (0..n).collect();
    let mut prev = R::one();
    let mut rank = 0;
    loop {
        if let Some(&k) = alive.iter().find(|&&k| a[k * n + k].is_negative()) {
            return Definiteness::Indefinite { at: k };
        }
        let Some(pos) = alive.iter().position(|&k| a[k * n + k].is_positive()) else {
            for &i in &alive {
                if alive.iter().any(|&j| !a[i * n + j].is_zero()) {
                    return Definiteness::Indefinite { at: i };
                }
            }
            return Definiteness::PositiveSemidefinite { rank };
        };
        let k = alive.remove(pos);
        let d = a[k * n + k].clone();
        for &i in &alive {
            let lead = a[i * n + k].clone();
            for &j in &alive {
                let v = (d.clone() * a[i * n + j].clone() - lead.clone() * a[k * n + j].clone()) / prev.clone();
                a[i * n + j] = v;
            }
        }
        prev = d;
        rank += 1;
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: fmt::Display> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                self.data[i * self.cols..(i + 1) * self.cols].iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(mat(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(mat(&[&[0, 1, 2], &[0, 2, 5], &[0, 0, 0]]).rank(), 2);
        assert_eq!(Matrix::<Q>::identity(5).rank(), 5);
    }

    #[test]
    fn kernel_basis_annihilates() {
        let m = mat(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = mat(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        let inv = m.inverse().unwrap();
        let prod =
            Matrix::from_fn(3, 3, |i, j| (0..3).fold(q(0), |acc, k| acc + m[(i, k)].clone() * inv[(k, j)].clone()));
        assert_eq!(prod, Matrix::identity(3));
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn definiteness_cases() {
        assert_eq!(mat(&[&[2, 0], &[0, 0]]).definiteness(), Definiteness::PositiveSemidefinite { rank: 1 });
        assert!(!mat(&[&[0, 1], &[1, 0]]).definiteness().is_psd());
        assert!(!mat(&[&[1, 2], &[2, 1]]).definiteness().is_psd());
        assert_eq!(mat(&[&[1, 1], &[1, 1]]).definiteness(), Definiteness::PositiveSemidefinite { rank: 1 });
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), n)
    }

    proptest! {
        // Gram matrices AᵀA are PSD of rank rank(A).
        #[test]
        fn gram_matrices_are_psd(rows in small_matrix(4)) {
            let a = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect());
            let at = a.transpose();
            let g = Matrix::from_fn(4, 4, |i, j| {
                (0..4).fold(q(0), |acc, k| acc + at[(i, k)].clone() * a[(k, j)].clone())
            });
            prop_assert_eq!(g.definiteness(), Definiteness::PositiveSemidefinite { rank: a.rank() });
            prop_assert_eq!(g.rank(), a.rank());
        }

        #[test]
        fn rank_plus_kernel_is_width(rows in small_matrix(5)) {
            let a = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect());
            prop_assert_eq!(a.rank() + a.kernel_basis().len(), 5);
            prop_assert_eq!(a.rank(), a.rref().1.len());
        }

        // Independent criterion: PSD iff every principal minor is ≥ 0.
        #[test]
        fn definiteness_matches_principal_minors(rows in small_matrix(4), scale in 1i64..7) {
            let a = Matrix::from_fn(4, 4, |i, j| {
                Q::from_ratio(rows[i.min(j)][i.max(j)], scale)
            });
            let mut minors_ok = true;
            for mask in 1u32..16 {
                let idx: Vec<usize> = (0..4).filter(|k| mask >> k & 1 == 1).collect();
                let sub: Vec<Vec<Q>> = idx.iter().map(|&i| idx.iter().map(|&j| a[(i, j)].clone()).collect()).collect();
                if det(&sub) < q(0) {
                    minors_ok = false;
                }
            }
            prop_assert_eq!(a.definiteness().is_psd(), minors_ok);
            if let Definiteness::PositiveSemidefinite { rank } = a.definiteness() {
                prop_assert_eq!(rank, a.rank());
            }
        }
    }

    fn det(m: &[Vec<Q>]) -> Q {
        if m.is_empty() {
            return q(1);
        }
        (0..m.len()).fold(q(0), |acc, c| {
            let minor: Vec<Vec<Q>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = m[0][c].clone() * det(&minor);
            if c % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        })
    }
}
