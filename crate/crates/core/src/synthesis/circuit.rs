use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gates::GateSpec;
use crate::qudit::{LocalAction, PureState, Register, UnitaryOp};

/// Condition on a wire holding exactly `level`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Control {
    pub wire: String,
    pub level: usize,
}

impl Control {
    pub fn new(wire: impl Into<String>, level: usize) -> Self {
        Self {
            wire: wire.into(),
            level,
        }
    }
}

/// One gate in a circuit: a single-wire gate on `target` (its level 0 at
/// wire level `offset`), applied only where every control is satisfied.
#[derive(Debug, Clone, PartialEq)]
pub struct GatePlacement {
    pub gate: GateSpec,
    pub target: String,
    pub offset: usize,
    pub controls: Vec<Control>,
}

impl GatePlacement {
    pub fn single(gate: GateSpec, target: impl Into<String>) -> Self {
        Self {
            gate,
            target: target.into(),
            offset: 0,
            controls: Vec::new(),
        }
    }

    /// CNOT triggered on `control` holding `|1>`.
    pub fn cnot(control: &str, target: &str) -> Self {
        Self::single(GateSpec::SigmaX, target).with_control(control, 1)
    }

    /// CNOT triggered on `control` holding `|0>`.
    pub fn cnot_bar(control: &str, target: &str) -> Self {
        Self::single(GateSpec::SigmaX, target).with_control(control, 0)
    }

    pub fn x_swap(a: usize, b: usize, dim: usize, target: &str) -> Self {
        Self::single(GateSpec::XSwap { a, b, dim }, target)
    }

    pub fn with_control(mut self, wire: &str, level: usize) -> Self {
        self.controls.push(Control::new(wire, level));
        self
    }

    pub fn at_offset(mut self, offset: usize) -> Self {
        self.offset = offset;
        self
    }

    pub fn is_controlled(&self) -> bool {
        !self.controls.is_empty()
    }

    pub fn compile(&self, register: &Register) -> Result<LocalAction> {
        let gate = self.gate.unitary()?;
        let controls: Vec<(&str, usize)> = self
            .controls
            .iter()
            .map(|c| (c.wire.as_str(), c.level))
            .collect();
        LocalAction::new(register, &gate, &[(&self.target, self.offset)], &controls)
    }

    /// Wires touched by this placement, controls first.
    pub fn wires(&self) -> impl Iterator<Item = &str> {
        self.controls
            .iter()
            .map(|c| c.wire.as_str())
            .chain(std::iter::once(self.target.as_str()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GateCounts {
    /// Placements with at least one control (CNOT-type gates).
    pub controlled: usize,
    /// Uncontrolled single-wire placements.
    pub single: usize,
}

/// Straight-line gate sequence over a register; the first placement acts
/// first.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    register: Register,
    placements: Vec<GatePlacement>,
}

impl Circuit {
    pub fn new(register: Register) -> Self {
        Self {
            register,
            placements: Vec::new(),
        }
    }

    pub fn with_placements(register: Register, placements: Vec<GatePlacement>) -> Result<Self> {
        let mut c = Self::new(register);
        for p in placements {
            c.push(p)?;
        }
        Ok(c)
    }

    /// Appends a placement after checking it fits the register.
    pub fn push(&mut self, placement: GatePlacement) -> Result<()> {
        placement.compile(&self.register)?;
        self.placements.push(placement);
        Ok(())
    }

    pub fn register(&self) -> &Register {
        &self.register
    }

    pub fn placements(&self) -> &[GatePlacement] {
        &self.placements
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn counts(&self) -> GateCounts {
        let controlled = self.placements.iter().filter(|p| p.is_controlled()).count();
        GateCounts {
            controlled,
            single: self.placements.len() - controlled,
        }
    }

    pub fn compile(&self) -> Result<Vec<LocalAction>> {
        self.placements
            .iter()
            .map(|p| p.compile(&self.register))
            .collect()
    }

    /// The first `k` placements as a circuit of their own.
    pub fn prefix(&self, k: usize) -> Circuit {
        Circuit {
            register: self.register.clone(),
            placements: self.placements[..k.min(self.placements.len())].to_vec(),
        }
    }

    /// States after every placement; element 0 is the input.
    pub fn trace(&self, input: &PureState) -> Result<Vec<PureState>> {
        if input.register() != &self.register {
            return Err(Error::RegisterMismatch);
        }
        let actions = self.compile()?;
        let mut out = Vec::with_capacity(actions.len() + 1);
        let mut cur: Vec<Complex64> = input.amplitudes().iter().copied().collect();
        let mut next = vec![Complex64::new(0.0, 0.0); cur.len()];
        out.push(input.clone());
        for a in &actions {
            a.apply_into(&cur, &mut next);
            std::mem::swap(&mut cur, &mut next);
            out.push(PureState::from_parts(
                self.register.clone(),
                DVector::from_column_slice(&cur),
            ));
        }
        Ok(out)
    }

    pub fn run(&self, input: &PureState) -> Result<PureState> {
        Ok(self.trace(input)?.pop().expect("trace holds the input"))
    }
}

/// Output amplitudes of `actions` applied in order to basis state `index`.
pub(crate) fn evolve_basis(actions: &[LocalAction], dim: usize, index: usize) -> Vec<Complex64> {
    let mut sparse = vec![(index, Complex64::new(1.0, 0.0))];
    for a in actions {
        sparse = a.apply_sparse(&sparse);
    }
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for (i, v) in sparse {
        out[i] = v;
    }
    out
}

/// Full unitary of the circuit: the product of its embedded placements,
/// first placement rightmost. Columns are evaluated in parallel.
pub fn circuit_unitary(circuit: &Circuit) -> Result<UnitaryOp> {
    let actions = circuit.compile()?;
    let dim = circuit.register.total_dim();
    let cols: Vec<Vec<Complex64>> = (0..dim)
        .into_par_iter()
        .map(|c| evolve_basis(&actions, dim, c))
        .collect();
    let mut m = DMatrix::zeros(dim, dim);
    for (c, col) in cols.iter().enumerate() {
        m.set_column(c, &DVector::from_column_slice(col));
    }
    UnitaryOp::from_parts(circuit.register.clone(), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates;
    use crate::qudit::embed;

    fn reg() -> Register {
        Register::from_dims(&[("c", 2), ("t1", 3), ("t2", 2)]).unwrap()
    }

    #[test]
    fn empty_circuit_is_identity() {
        let c = Circuit::new(reg());
        assert_eq!(circuit_unitary(&c).unwrap(), UnitaryOp::identity(reg()));
        assert_eq!(c.counts(), GateCounts::default());
    }

    #[test]
    fn single_cnot_matches_embedding() {
        let c = Circuit::with_placements(reg(), vec![GatePlacement::cnot("c", "t1")]).unwrap();
        let direct = embed(&gates::cnot(), &["c", "t1"], &reg()).unwrap();
        assert_eq!(circuit_unitary(&c).unwrap(), direct);
        assert_eq!(
            c.counts(),
            GateCounts {
                controlled: 1,
                single: 0
            }
        );
    }

    #[test]
    fn push_validates() {
        let mut c = Circuit::new(reg());
        assert_eq!(
            c.push(GatePlacement::cnot("t9", "t1")).unwrap_err(),
            Error::UnknownWire("t9".into())
        );
        assert!(c.push(GatePlacement::x_swap(0, 2, 4, "t1")).is_err());
        assert!(c.push(GatePlacement::cnot("t1", "t1")).is_err());
        assert!(c
            .push(GatePlacement::single(GateSpec::SigmaX, "t1").at_offset(2))
            .is_err());
        assert!(c.is_empty());
    }

    #[test]
    fn trace_has_one_state_per_placement() {
        let c = Circuit::with_placements(
            reg(),
            vec![
                GatePlacement::single(GateSpec::SigmaX, "c"),
                GatePlacement::cnot("c", "t2"),
            ],
        )
        .unwrap();
        let s = PureState::basis(reg(), &[0, 0, 0]).unwrap();
        let t = c.trace(&s).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[2], PureState::basis(reg(), &[1, 0, 1]).unwrap());
        assert_eq!(c.run(&s).unwrap(), t[2]);
        assert_eq!(c.prefix(1).run(&s).unwrap(), t[1]);
    }
}
