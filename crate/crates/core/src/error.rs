use thiserror::Error;

use crate::dsl::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("wire {wire} has dimension {dim}; every wire needs at least 2 levels")]
    WireTooSmall { wire: String, dim: usize },

    #[error("duplicate wire label {0}")]
    DuplicateWire(String),

    #[error("unknown wire {0}")]
    UnknownWire(String),

    #[error("level {level} out of range for wire {wire} of dimension {dim}")]
    LevelOutOfRange {
        wire: String,
        level: usize,
        dim: usize,
    },

    #[error("expected {expected} digits, got {got}")]
    DigitCount { expected: usize, got: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("gate of dimension {gate_dim} (at level offset {offset}) does not fit wire {wire} of dimension {wire_dim}")]
    GateDoesNotFit {
        wire: String,
        gate_dim: usize,
        offset: usize,
        wire_dim: usize,
    },

    #[error("wire {0} is used both as control and target")]
    OverlappingWires(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operands act on different registers")]
    RegisterMismatch,

    #[error("empty subspace")]
    EmptySubspace,

    #[error("invalid level swap ({a}, {b}) on dimension {dim}")]
    InvalidSwap { a: usize, b: usize, dim: usize },

    #[error("control count must be at least 1, got {0}")]
    InvalidControlCount(usize),

    #[error("wire positions must differ (got {0} twice)")]
    SamePosition(usize),

    #[error("state norm squared is {0}, expected 1")]
    NotNormalized(f64),

    #[error("matrix is not unitary (max deviation of U†U from I is {0:e})")]
    NotUnitary(f64),

    #[error("matrix is {rows}x{cols}, expected a square matrix of size {dim}")]
    BadMatrixShape {
        rows: usize,
        cols: usize,
        dim: usize,
    },

    #[error("register dimension {dim} exceeds the verification budget {budget}")]
    BudgetExceeded { dim: usize, budget: usize },

    #[error("circuit register does not match the oracle: {0}")]
    OracleMismatch(String),

    #[error("unknown {kind} {name:?}")]
    UnknownStrategy { kind: &'static str, name: String },

    #[error(transparent)]
    Parse(#[from] ParseError),
}
