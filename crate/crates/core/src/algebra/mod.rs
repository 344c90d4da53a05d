//! Exact arithmetic building blocks: partitions, compositions, sparse
//! polynomials, and rational matrices.

mod composition;
mod matrix;
mod partition;
mod poly;

pub use composition::{coarsenings, Composition};
pub use matrix::{Fraction, RationalMatrix};
pub use partition::{binom, factorial, multiset_binomial, partitions_of, Partition};
pub use poly::SparsePoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("matrix is singular")]
    Singular,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("variable {0} still occurs with nonzero exponent")]
    ResidualVariable(String),
    #[error("linear system has a non-integer solution")]
    NonIntegerSolution,
}
