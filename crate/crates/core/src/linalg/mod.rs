//! Exact scalars and dense linear algebra over GF(p) and ℚ.
//!
//! All operations are deterministic: pivots are chosen leftmost-first and
//! the first nonzero row below the current position is used, so every basis
//! produced upstream is reproducible bit for bit.

mod field;
mod matrix;

pub use field::{Field, Scalar};
pub use matrix::{quotient_with_section, Matrix, Quotient, RowEchelon};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a supported prime characteristic")]
    NotPrime(u64),
    #[error("coefficient {0} is not defined over GF({1})")]
    NotInField(String, u64),
    #[error("scalar {0} does not belong to {1}")]
    ForeignScalar(String, Field),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
