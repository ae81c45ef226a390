//! Complex positivity of compact hermitian symmetric spaces, computed
//! exactly from root systems and Chevalley structure constants, together
//! with the Barth-Lefschetz connectivity ranges it controls.
//!
//! The algebra is generic over an exact [`scalar::Scalar`]; the aliases
//! below fix it to arbitrary-precision rationals.

pub mod barth_lefschetz;
pub mod chevalley;
pub mod curvature;
pub mod error;
pub mod hss_catalog;
pub mod linalg;
pub mod root_system;
pub mod sampling;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use hss_catalog::{resolve, HermitianSpace, SpaceId};
pub use root_system::{Family, Root, RootSystem};

pub type Rational = num_rational::BigRational;
pub type RationalMatrix = linalg::Matrix<Rational>;
pub type Element = chevalley::AlgebraElement<Rational>;
pub type Vector = curvature::TangentVector<Rational>;
pub type Form = curvature::HermitianForm<Rational>;
