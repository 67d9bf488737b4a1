//! Mixed-radix Hilbert spaces: registers, states, operators, embedding of
//! small gates into larger registers and equivalence up to global phase.

mod equiv;
mod operator;
mod register;
mod state;

pub use equiv::{equiv_on_subspace, phase_aligned_deviation};
pub use operator::{apply, controlled, embed, LocalAction, UnitaryOp};
pub use register::{Register, WireSpec};
pub use state::PureState;

/// Numerical tolerance used for normalization, unitarity and equivalence.
pub const TOLERANCE: f64 = 1e-12;
