//! Exact computational algebra for braid-like groups.

pub mod algebra;
pub mod catalog;
pub mod chen;
pub mod error;
pub mod groebner;
pub mod lcs;
mod rational;
pub mod resonance;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{exact_string, ratio, Rational, Scalar};

/// Arbitrary-precision rationals, the default scalar field.
pub type Q = Rational;
pub type ExtElementQ = algebra::ExtElement<Q>;
pub type PolynomialQ = algebra::Polynomial<Q>;
pub type NcPolynomialQ = algebra::NcPolynomial<Q>;
pub type MatrixQ = algebra::Matrix<Q>;
pub type SeriesQ = algebra::SeriesTrunc<Q>;
