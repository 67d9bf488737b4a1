use std::ops::Range;

use super::{photonic_register, PhotonicVariant};
use crate::synthesis::{Circuit, GatePlacement};

/// Deterministic gate: the qutrit construction with PBS₁/PBS₂ playing the
/// level swaps and the middle three CNOTs sitting on mode `u`.
pub fn build_deterministic_photonic() -> Circuit {
    Circuit::with_placements(
        photonic_register(),
        vec![
            GatePlacement::cnot("t2", "t1"),
            // PBS1
            GatePlacement::x_swap(0, 2, 4, "t1"),
            GatePlacement::cnot("c", "t1"),
            GatePlacement::cnot_bar("t1", "t2"),
            GatePlacement::cnot("c", "t1"),
            // PBS2
            GatePlacement::x_swap(0, 2, 4, "t1"),
            GatePlacement::cnot("t2", "t1"),
        ],
    )
    .expect("static circuit fits its register")
}

pub struct Deterministic;

impl PhotonicVariant for Deterministic {
    fn name(&self) -> &'static str {
        "deterministic"
    }

    fn circuit(&self) -> Circuit {
        build_deterministic_photonic()
    }

    fn detector_levels(&self) -> Option<Range<usize>> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::photonic::{photonic_register, RAIL_U};
    use crate::qudit::PureState;
    use crate::synthesis::{circuit_unitary, fredkin_oracle};

    #[test]
    fn d_rail_bypasses_middle_block() {
        let c = build_deterministic_photonic();
        let input = PureState::basis(photonic_register(), &[0, 0, 0]).unwrap();
        let t = c.trace(&input).unwrap();
        let on_d = PureState::basis(photonic_register(), &[0, 2, 0]).unwrap();
        for s in &t[2..=5] {
            assert_eq!(s, &on_d);
        }
    }

    #[test]
    fn polarization_block_is_fredkin() {
        let u = circuit_unitary(&build_deterministic_photonic()).unwrap();
        let reg = photonic_register();
        let idx: Vec<usize> = (0..reg.total_dim())
            .filter(|&i| RAIL_U.contains(&reg.basis_digits(i).unwrap()[1]))
            .collect();
        assert_eq!(idx.len(), 8);
        assert_eq!(&u.submatrix(&idx), fredkin_oracle(1).unwrap().matrix());
        assert_eq!(build_deterministic_photonic().counts().controlled, 5);
    }
}
