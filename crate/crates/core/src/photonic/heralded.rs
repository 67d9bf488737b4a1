use std::ops::Range;

use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;

use super::{
    embed_polarization, photonic_register, polarization_register, random_state, HeraldedOutcome,
    PhotonicVariant, RAIL_D,
};
use crate::error::{Error, Result};
use crate::gates::GateSpec;
use crate::qudit::PureState;
use crate::synthesis::{Circuit, GatePlacement};

/// A circuit plus the levels of one wire that feed a single-photon detector.
#[derive(Debug, Clone, PartialEq)]
pub struct HeraldedCircuit {
    pub circuit: Circuit,
    pub detector_wire: String,
    pub detector_levels: Range<usize>,
}

/// Heralded gate with four CNOTs. After the two mode-`u` CNOTs, half-wave
/// plates at 67.5° (mode `u`) and 22.5° (mode `d`) put each rail in an
/// equal superposition of `H` and `V`; PBS₂ sends `H` from `d` and `V` from
/// `u` to the output port and the rest to the detector. The last CNOT only
/// sees the output port.
pub fn build_heralded_photonic() -> HeraldedCircuit {
    let circuit = Circuit::with_placements(
        photonic_register(),
        vec![
            GatePlacement::cnot("t2", "t1"),
            // PBS1
            GatePlacement::x_swap(0, 2, 4, "t1"),
            GatePlacement::cnot("c", "t1"),
            GatePlacement::cnot_bar("t1", "t2"),
            GatePlacement::single(GateSpec::Hwp { degrees: 67.5 }, "t1"),
            GatePlacement::single(GateSpec::Hwp { degrees: 22.5 }, "t1").at_offset(RAIL_D.start),
            // PBS2
            GatePlacement::x_swap(0, 2, 4, "t1"),
            GatePlacement::cnot("t2", "t1"),
        ],
    )
    .expect("static circuit fits its register");
    HeraldedCircuit {
        circuit,
        detector_wire: "t1".into(),
        detector_levels: RAIL_D,
    }
}

pub struct Heralded;

impl PhotonicVariant for Heralded {
    fn name(&self) -> &'static str {
        "heralded"
    }

    fn circuit(&self) -> Circuit {
        build_heralded_photonic().circuit
    }

    fn detector_levels(&self) -> Option<Range<usize>> {
        Some(build_heralded_photonic().detector_levels)
    }
}

pub fn run_heralded(input: &PureState) -> Result<HeraldedOutcome> {
    Heralded.run(input)
}

/// What the photons hold when the detector fires, as a signed permutation
/// of the polarization basis `(c, t1, t2)`: `(input index, output index,
/// sign)`.
pub const HERALDED_FAILURE_MAP: [(usize, usize, f64); 8] = [
    (0b000, 0b010, 1.0),
    (0b001, 0b001, 1.0),
    (0b010, 0b000, 1.0),
    (0b011, 0b011, 1.0),
    (0b100, 0b110, 1.0),
    (0b101, 0b100, -1.0),
    (0b110, 0b101, -1.0),
    (0b111, 0b111, 1.0),
];

pub fn expected_failure_state(input: &PureState) -> Result<PureState> {
    if input.register() != &polarization_register() {
        return Err(Error::RegisterMismatch);
    }
    let mut amps = DVector::zeros(8);
    for &(from, to, sign) in &HERALDED_FAILURE_MAP {
        amps[to] = input.amplitudes()[from] * sign;
    }
    Ok(PureState::from_parts(polarization_register(), amps))
}

/// Fraction of `trials` runs in which the detector stays dark. Each trial
/// draws a fresh random input, evolves it gate by gate and samples a single
/// which-port outcome from the final amplitudes.
pub fn monte_carlo_success_rate<R: Rng + ?Sized>(trials: usize, rng: &mut R) -> Result<f64> {
    let hc = build_heralded_photonic();
    let reg = hc.circuit.register().clone();
    let wire = reg.position(&hc.detector_wire)?;
    let mut dark = 0usize;
    for _ in 0..trials {
        let input = random_state(polarization_register(), rng);
        let out = hc.circuit.run(&embed_polarization(&input)?)?;
        let u: f64 = rng.random();
        let mut acc = 0.0;
        let mut hit = out.dim() - 1;
        for (i, a) in out.amplitudes().iter().enumerate() {
            acc += Complex64::norm_sqr(a);
            if u < acc {
                hit = i;
                break;
            }
        }
        let level = reg.basis_digits(hit)?[wire];
        if !hc.detector_levels.contains(&level) {
            dark += 1;
        }
    }
    Ok(dark as f64 / trials.max(1) as f64)
}
