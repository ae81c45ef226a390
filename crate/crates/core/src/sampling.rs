//! Seeded generation of exact tangent vectors.

use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::curvature::{grassmann_vector, TangentVector};
use crate::error::{Error, Result};
use crate::hss_catalog::{HermitianSpace, SpaceId};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Seed derived from a base seed and a label, so that streams for
    /// different spaces do not depend on iteration order.
    pub fn for_label(seed: u64, label: &str) -> Self {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in label.bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        Self::new(seed ^ h)
    }

    /// A rational with numerator in -3..=3 and denominator in 1..=3.
    pub fn small_rational(&mut self) -> BigRational {
        let n = self.rng.gen_range(-3..=3);
        let d = self.rng.gen_range(1..=3);
        <BigRational as Scalar>::from_ratio(n, d)
    }

    pub fn nonzero_rational(&mut self) -> BigRational {
        loop {
            let x = self.small_rational();
            if !num_traits::Zero::is_zero(&x) {
                return x;
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// A nonzero vector; each coordinate is zero with probability one half,
    /// so that sparse and dense directions both occur.
    pub fn tangent_vector(&mut self, space: &HermitianSpace) -> TangentVector<BigRational> {
        loop {
            let coeffs: Vec<BigRational> =
                (0..space.v())
                    .map(|_| {
                        if self.rng.gen_bool(0.5) {
                            self.small_rational()
                        } else {
                            <BigRational as Scalar>::from_int(0)
                        }
                    })
                    .collect();
            let v = TangentVector::new(space, coeffs).expect("length matches");
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn rational_matrix(&mut self, rows: usize, cols: usize) -> Matrix<BigRational> {
        Matrix::from_fn(rows, cols, |_, _| self.small_rational())
    }

    /// A Grassmannian tangent vector whose p×q matrix has exactly rank `r`,
    /// built as a product `A·B` of random p×r and r×q factors.
    pub fn grassmann_rank_vector(&mut self, space: &HermitianSpace, r: usize) -> Result<TangentVector<BigRational>> {
        let SpaceId::Grassmannian { p, q } = space.id() else {
            return Err(Error::Argument(format!("{} is not a Grassmannian", space.id())));
        };
        if r == 0 || r > p.min(q) {
            return Err(Error::Argument(format!("rank {r} is outside 1..={}", p.min(q))));
        }
        loop {
            let a = self.rational_matrix(p, r);
            let b = self.rational_matrix(r, q);
            let m = a.mul(&b);
            if m.rank() == r {
                return grassmann_vector(space, &m);
            }
        }
    }
}
