//! Exact scalar fields the algebra and linear algebra are generic over.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{NumAssign, One, Signed};

/// An exact field. Every implementor must have exact division, since
/// rank and kernel computations compare against zero with no tolerance.
pub trait Scalar: Clone + PartialEq + Debug + Display + NumAssign + Neg<Output = Self> + Send + Sync {
    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn from_int(value: i64) -> Self {
        Self::from_ratio(value, 1)
    }

    fn from_rational64(value: &Rational64) -> Self {
        Self::from_ratio(*value.numer(), *value.denom())
    }

    /// `values` times the least common denominator, when that makes sense
    /// for the field. Elimination then runs over the integers.
    fn clear_denominators(_values: &[Self]) -> Option<Vec<BigInt>> {
        None
    }
}

/// An exact ordered field; needed for semidefiniteness certificates.
pub trait RealScalar: Scalar + PartialOrd + Signed {}

impl Scalar for BigRational {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn clear_denominators(values: &[Self]) -> Option<Vec<BigInt>> {
        let lcm = values.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        Some(values.iter().map(|x| x.numer() * (&lcm / x.denom())).collect())
    }
}

impl RealScalar for BigRational {}

impl Scalar for Rational64 {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Rational64::new(numer, denom)
    }

    fn clear_denominators(values: &[Self]) -> Option<Vec<BigInt>> {
        let lcm = values.iter().fold(BigInt::one(), |acc, x| acc.lcm(&BigInt::from(*x.denom())));
        Some(values.iter().map(|x| BigInt::from(*x.numer()) * (&lcm / BigInt::from(*x.denom()))).collect())
    }
}

impl RealScalar for Rational64 {}

impl<T: RealScalar> Scalar for Complex<T> {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Complex::new(T::from_ratio(numer, denom), T::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn conversions_are_exact() {
        let half = BigRational::from_ratio(1, 2);
        assert_eq!(half.clone() + half, BigRational::one());
        let r = Rational64::new(-3, 6);
        assert_eq!(BigRational::from_rational64(&r), BigRational::from_ratio(-1, 2));
        let z = Complex::<BigRational>::from_int(2);
        assert!(z.im.is_zero());
    }

    #[test]
    fn denominators_clear_by_a_positive_factor() {
        let v = vec![BigRational::from_ratio(1, 2), BigRational::from_ratio(-2, 3), BigRational::from_int(0)];
        let ints = BigRational::clear_denominators(&v).unwrap();
        assert_eq!(ints, vec![BigInt::from(3), BigInt::from(-4), BigInt::from(0)]);
        assert!(Complex::<BigRational>::clear_denominators(&[Complex::from_int(1)]).is_none());
    }
}
