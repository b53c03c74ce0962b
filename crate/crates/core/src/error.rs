use thiserror::Error;

use crate::algebra::Violation;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("factorization over the rationals is limited to degree 4 (got degree {0})")]
    UnsupportedFactorization(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("table does not satisfy the Leibniz identity: {0}")]
    NotLeibniz(Box<Violation>),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("operation requires a finite ground field")]
    InfiniteFieldUnsupported,
    #[error("enumeration budget exceeded: {needed} subspaces > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("algebra is not solvable")]
    NotSolvable,
    #[error("Cartan subalgebra search failed: {0}")]
    CartanSearchFailed(String),
    #[error("Fitting family does not decompose the space")]
    NotDecomposing,
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("bad cyclic specification: {0}")]
    BadSpec(String),
    #[error("parse error at line {line}, column {column}: {reason}")]
    ParseError {
        line: usize,
        column: usize,
        reason: String,
    },
    #[error("cannot parse scalar: {0}")]
    FieldParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
