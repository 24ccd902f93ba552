//! Exact arithmetic: the prime field, sparse multivariate polynomials,
//! layer matrices with univariate entries, and linear algebra over `F_p`.

pub mod field;
pub mod linalg;
pub mod matrix;
pub mod poly;

pub use field::{Fe, FieldOp, PrimeField, DEFAULT_PRIME};
pub use matrix::{ConstMatrix, UniMatrix};
pub use poly::{poly_arith, Assignment, Exponents, PolyOp, SparsePoly};
