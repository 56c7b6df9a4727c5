//! Exact scalars and dense linear algebra over cyclotomic fields.

mod cyclotomic;
mod matrix;
mod subspace;

pub(crate) use cyclotomic::rational_to_i64;
pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic, CyclotomicField};
pub use matrix::{ExactMatrix, Rref};
pub use subspace::{EchelonBuilder, Subspace};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}
