//! Mixed-radix qudit simulation and qudit-assisted Fredkin gate synthesis.
//!
//! The first target of a Fredkin gate is temporarily widened to a qudit so
//! that level swaps can park amplitude where later CNOTs act trivially.
//! This cuts the three-qubit Fredkin to five nearest-neighbor CNOTs and the
//! `n`-control version to `2n + 3` CNOTs. The crate builds these circuits,
//! checks them against the ideal controlled-SWAP by exhaustive simulation,
//! models dual-rail optical versions (deterministic and heralded), and
//! tabulates closed-form CNOT counts.
//!
//! * [`qudit`]: registers, states, operators and embedding.
//! * [`gates`]: primitive gates.
//! * [`synthesis`]: circuits, Fredkin builders, verification, routing.
//! * [`photonic`]: optical variants behind [`photonic::PhotonicVariant`].
//! * [`cost`]: CNOT-count formulas behind [`cost::CostFormula`].
//! * [`dsl`]: the text format for circuits.

pub mod cost;
pub mod dsl;
pub mod error;
pub mod gates;
pub mod photonic;
pub mod qudit;
pub mod registry;
pub mod report;
pub mod synthesis;

pub use error::{Error, Result};
