//! Exact computations on pentahedral cubic surfaces, their Hessian
//! quartics, and the Kummer-surface combinatorics attached to them.

pub mod correspondence;
pub mod cyclic;
pub mod error;
pub mod hessian;
pub mod invariant;
pub mod kummer;
pub mod matrix;
pub mod poly;
pub mod resultant;
pub mod sampling;
pub mod scalar;

pub use error::{Error, PolyError, Result};
pub use hessian::PentahedralData;

pub type Rational = num_rational::BigRational;
pub type Poly = poly::MultiPoly<Rational>;
pub type PolyMat = matrix::PolyMatrix<Rational>;
pub type Mat = matrix::Matrix<Rational>;
