//! Line-oriented circuit documents.
//!
//! ```text
//! # three-qubit Fredkin
//! wires: c:2 t1:3 t2:2
//! gate CNOT control=t2@1 target=t1
//! gate X swap=0,2 wire=t1
//! gate HWP angle=22.5 wire=t1@2
//! gate SX wire=t2
//! ```
//!
//! `control=<wire>@<level>` conditions a gate on a wire level and may be
//! repeated on any gate; `CNOT` needs at least one. On targets, `@<level>`
//! is the level at which the gate's `|0>` sits (default 0), so a qubit gate
//! on `wire=t1@2` acts on levels 2 and 3 of `t1`. `X` takes an optional
//! `dim=<d>`, defaulting to the rest of the wire above the offset.

mod parse;
mod serialize;

use std::fmt;

pub use parse::parse;
pub use serialize::serialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    DuplicateHeader,
    EmptyHeader,
    BadWireDecl(String),
    DuplicateWire(String),
    UnknownWire(String),
    LevelOutOfRange {
        wire: String,
        level: usize,
        dim: usize,
    },
    UnknownStatement(String),
    UnknownGate(String),
    MissingField(&'static str),
    DuplicateField(String),
    UnexpectedField(String),
    BadValue {
        field: String,
        value: String,
    },
    InvalidPlacement(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match self {
            MissingHeader => write!(f, "expected `wires:` declaration before the first gate"),
            DuplicateHeader => write!(f, "second `wires:` declaration"),
            EmptyHeader => write!(f, "`wires:` declares no wires"),
            BadWireDecl(s) => write!(
                f,
                "malformed wire declaration {s:?}, expected <label>:<dim>"
            ),
            DuplicateWire(w) => write!(f, "duplicate wire label {w}"),
            UnknownWire(w) => write!(f, "unknown wire {w}"),
            LevelOutOfRange { wire, level, dim } => {
                write!(
                    f,
                    "level {level} out of range for wire {wire} of dimension {dim}"
                )
            }
            UnknownStatement(s) => write!(f, "unknown statement {s:?}"),
            UnknownGate(g) => write!(f, "unknown gate {g}"),
            MissingField(k) => write!(f, "missing field {k}="),
            DuplicateField(k) => write!(f, "duplicate field {k}="),
            UnexpectedField(k) => write!(f, "unexpected field {k:?}"),
            BadValue { field, value } => write!(f, "bad value {value:?} for {field}="),
            InvalidPlacement(msg) => write!(f, "invalid placement: {msg}"),
        }
    }
}

/// A diagnostic pinned to a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}
