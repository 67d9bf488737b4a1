//! Circuits, the qudit-assisted Fredkin constructions, oracle verification
//! and nearest-neighbor CNOT routing.

mod circuit;
mod fredkin;
mod routing;
mod verify;

pub use circuit::{circuit_unitary, Circuit, Control, GateCounts, GatePlacement};
pub use fredkin::{
    build_fredkin3, build_fredkin_n, chain_swap_levels, control_labels, fredkin_oracle,
    fredkin_register, middle_control_level, FIRST_TARGET, SECOND_TARGET,
};
pub use routing::{expand_long_range_cnot, line_label, line_register, LongRangeExpansion};
pub use verify::{
    verify_against_oracle, verify_against_oracle_with, verify_circuit, VerificationReport,
    VerifyConfig, DEFAULT_DIM_BUDGET,
};
