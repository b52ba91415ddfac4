use thiserror::Error;

/// Errors raised by the exact-arithmetic and group-theoretic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicands differ: sqrt({0}) vs sqrt({1})")]
    DeltaMismatch(i64, i64),
    #[error("radicand {0} must be a positive non-square integer")]
    InvalidDelta(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("subgroup generator {0} has a nonzero rational part")]
    NotPureIrrational(String),
    #[error("field elements belong to different fields")]
    FieldMismatch,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("lattice basis is linearly dependent")]
    DegenerateBasis,
    #[error("cannot scale a lattice by zero")]
    ZeroScalar,
    #[error("lattice is not contained in the ambient lattice")]
    NotSublattice,
    #[error("{0} is not a unit")]
    NotUnit(String),
    #[error("lattice is not invariant under {0}")]
    NotInvariant(String),
    #[error("{0} is not a power of {1} within {2} steps")]
    NotAPower(String, String, u32),
    #[error("element {0} lies outside the lattice {1}")]
    OutsideLattice(String, String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("not in standard form: {0}")]
    NotStandardForm(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
