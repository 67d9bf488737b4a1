//! Dual-rail optical Fredkin gates.
//!
//! Every qubit is a photon polarization (`|H> = |0>`, `|V> = |1>`). The
//! first target photon also carries a spatial mode, so its wire `t1` has four
//! levels:
//!
//! | level | before PBS₂ | after PBS₂ (heralded gate) |
//! |-------|-------------|----------------------------|
//! | 0     | `(H, u)`    | `H`, output port           |
//! | 1     | `(V, u)`    | `V`, output port           |
//! | 2     | `(H, d)`    | `(H, D)`, detector port    |
//! | 3     | `(V, d)`    | `(V, D)`, detector port    |
//!
//! The photon enters (and, in the deterministic gate, leaves) on the port
//! that shares levels 0 and 1 with mode `u`. Any polarization gate placed at
//! level offset 0 therefore acts only on mode `u`, which is how the CNOTs
//! that sit on a single rail are modeled. Beam splitters add no phase on
//! reflection.

mod deterministic;
mod heralded;

use std::ops::Range;

use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

pub use deterministic::{build_deterministic_photonic, Deterministic};
pub use heralded::{
    build_heralded_photonic, expected_failure_state, monte_carlo_success_rate, run_heralded,
    Heralded, HeraldedCircuit, HERALDED_FAILURE_MAP,
};

use crate::error::{Error, Result};
use crate::gates;
use crate::qudit::{PureState, Register, UnitaryOp, TOLERANCE};
use crate::registry::Registry;
use crate::synthesis::{circuit_unitary, Circuit};

pub const H: usize = 0;
pub const V: usize = 1;

/// Levels of `t1` on mode `u` (and on the input/output port).
pub const RAIL_U: Range<usize> = 0..2;
/// Levels of `t1` on mode `d`; after PBS₂ in the heralded gate, the
/// detector port `D`.
pub const RAIL_D: Range<usize> = 2..4;

/// `(c : 2, t1 : 4, t2 : 2)`.
pub fn photonic_register() -> Register {
    Register::from_dims(&[("c", 2), ("t1", 4), ("t2", 2)]).expect("static register")
}

/// Three polarization qubits `(c, t1, t2)`.
pub fn polarization_register() -> Register {
    Register::qubits(&["c", "t1", "t2"]).expect("static register")
}

/// PBS₁ on `t1`: `(H, in) -> (H, d)`, `(V, in) -> (V, u)`. As a permutation
/// of the four levels this exchanges 0 and 2.
pub fn pbs_split() -> UnitaryOp {
    gates::x_swap(0, 2, 4)
        .and_then(|g| g.relabel(&["t1"]))
        .expect("static gate")
}

/// PBS₂ recombining `(H, d)` and `(V, u)` into the output port. Same
/// permutation as [`pbs_split`], which it undoes.
pub fn pbs_merge() -> UnitaryOp {
    pbs_split()
}

/// Places a polarization state on the photonic register, `t1` on the input
/// port.
pub fn embed_polarization(input: &PureState) -> Result<PureState> {
    if input.register() != &polarization_register() {
        return Err(Error::RegisterMismatch);
    }
    let reg = photonic_register();
    let mut amps = vec![Complex64::new(0.0, 0.0); reg.total_dim()];
    for (i, a) in input.amplitudes().iter().enumerate() {
        let (c, t1, t2) = (i >> 2, (i >> 1) & 1, i & 1);
        amps[reg.basis_index(&[c, t1, t2]).expect("qubit digits")] = *a;
    }
    Ok(PureState::from_parts(reg, DVector::from_vec(amps)))
}

/// Squared norm of the branch with `t1` in `levels`, plus that branch as a
/// renormalized polarization state (`t1` level `levels.start + p` read as
/// polarization `p`). The state is `None` for an empty branch.
pub fn project_branch(state: &PureState, levels: Range<usize>) -> (f64, Option<PureState>) {
    let reg = state.register();
    let pol = polarization_register();
    let mut amps = vec![Complex64::new(0.0, 0.0); pol.total_dim()];
    for (i, a) in state.amplitudes().iter().enumerate() {
        let d = reg.basis_digits(i).expect("index in range");
        if levels.contains(&d[1]) {
            let p = d[1] - levels.start;
            amps[pol.basis_index(&[d[0], p, d[2]]).expect("qubit digits")] += *a;
        }
    }
    let prob: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    let state = (prob > 0.0).then(|| {
        let s = prob.sqrt();
        PureState::from_parts(
            pol,
            DVector::from_iterator(amps.len(), amps.iter().map(|a| a / s)),
        )
    });
    (prob, state)
}

/// Result of one run of a photonic gate, split on the detector outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct HeraldedOutcome {
    /// Probability that the detector stays dark.
    pub success_probability: f64,
    pub failure_probability: f64,
    /// Renormalized output when the detector stays dark.
    pub kept_state: Option<PureState>,
    /// Renormalized state of the photons when the detector fires.
    pub failure_state: Option<PureState>,
}

/// An optical realization of the three-qubit Fredkin gate.
pub trait PhotonicVariant: Send + Sync {
    fn name(&self) -> &'static str;

    /// The gate sequence on [`photonic_register`].
    fn circuit(&self) -> Circuit;

    /// `t1` levels watched by a detector, if the gate is heralded.
    fn detector_levels(&self) -> Option<Range<usize>>;

    /// Runs the gate on a normalized polarization input via its compiled
    /// unitary and splits the result on the detector outcome.
    fn run(&self, input: &PureState) -> Result<HeraldedOutcome> {
        let n = input.norm_sqr();
        if n.is_nan() || (n - 1.0).abs() > TOLERANCE {
            return Err(Error::NotNormalized(n));
        }
        let u = circuit_unitary(&self.circuit())?;
        let out = crate::qudit::apply(&u, &embed_polarization(input)?)?;
        let (success_probability, kept_state) = project_branch(&out, RAIL_U);
        let (failure_probability, failure_state) = match self.detector_levels() {
            Some(levels) => project_branch(&out, levels),
            None => (1.0 - success_probability, None),
        };
        Ok(HeraldedOutcome {
            success_probability,
            failure_probability,
            kept_state,
            failure_state,
        })
    }
}

/// Built-in variants: `deterministic` and `heralded`.
pub fn variants() -> Registry<dyn PhotonicVariant> {
    let mut r: Registry<dyn PhotonicVariant> = Registry::new("photonic variant");
    r.register(Deterministic.name(), Box::new(Deterministic));
    r.register(Heralded.name(), Box::new(Heralded));
    r
}

/// Normalized state with i.i.d. complex standard normal amplitudes.
pub fn random_state<R: Rng + ?Sized>(register: Register, rng: &mut R) -> PureState {
    let amps: Vec<Complex64> = (0..register.total_dim())
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    PureState::normalized(register, amps).expect("gaussian vector is nonzero almost surely")
}
