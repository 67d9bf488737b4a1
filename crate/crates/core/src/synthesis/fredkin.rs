use nalgebra::DMatrix;
use num_complex::Complex64;

use super::circuit::{Circuit, GatePlacement};
use crate::error::{Error, Result};
use crate::qudit::{Register, UnitaryOp};

pub const FIRST_TARGET: &str = "t1";
pub const SECOND_TARGET: &str = "t2";

/// Control wire labels: `c` for a single control, `c1..cn` otherwise.
pub fn control_labels(n: usize) -> Vec<String> {
    if n == 1 {
        vec!["c".to_string()]
    } else {
        (1..=n).map(|k| format!("c{k}")).collect()
    }
}

fn check_controls(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidControlCount(n));
    }
    Ok(())
}

/// `(c.. : 2, t1 : n+2, t2 : 2)`.
pub fn fredkin_register(n: usize) -> Result<Register> {
    check_controls(n)?;
    let mut spec: Vec<(String, usize)> = control_labels(n).into_iter().map(|l| (l, 2)).collect();
    spec.push((FIRST_TARGET.into(), n + 2));
    spec.push((SECOND_TARGET.into(), 2));
    Register::from_dims(&spec)
}

/// Ideal `n`-control Fredkin on `n + 2` qubits: swaps `t1` and `t2` iff
/// every control is `|1>`.
pub fn fredkin_oracle(n: usize) -> Result<UnitaryOp> {
    check_controls(n)?;
    let mut labels = control_labels(n);
    labels.push(FIRST_TARGET.into());
    labels.push(SECOND_TARGET.into());
    let register = Register::qubits(&labels)?;
    let dim = register.total_dim();
    let all_on = (1usize << n) - 1;
    let mut m = DMatrix::zeros(dim, dim);
    for c in 0..dim {
        let image = if c >> 2 == all_on {
            let (t1, t2) = ((c >> 1) & 1, c & 1);
            (c & !3) | (t2 << 1) | t1
        } else {
            c
        };
        m[(image, c)] = Complex64::new(1.0, 0.0);
    }
    // A permutation matrix; the dense unitarity check would cost O(dim^3).
    UnitaryOp::from_parts(register, m)
}

/// Three-qubit Fredkin from five nearest-neighbor CNOTs and two qutrit
/// level swaps, with `t1` widened to a qutrit.
pub fn build_fredkin3() -> Circuit {
    let register = Register::from_dims(&[("c", 2), ("t1", 3), ("t2", 2)]).expect("static register");
    Circuit::with_placements(
        register,
        vec![
            GatePlacement::cnot("t2", "t1"),
            GatePlacement::x_swap(0, 2, 3, "t1"),
            GatePlacement::cnot("c", "t1"),
            GatePlacement::cnot_bar("t1", "t2"),
            GatePlacement::cnot("c", "t1"),
            GatePlacement::x_swap(0, 2, 3, "t1"),
            GatePlacement::cnot("t2", "t1"),
        ],
    )
    .expect("static circuit fits its register")
}

/// Levels exchanged by the `k`-th (1-based) swap of the chain.
pub fn chain_swap_levels(k: usize) -> (usize, usize) {
    ((k - 1) % 2, k + 1)
}

/// Level of `t1` that triggers the middle gate: `|0>` for odd `n`, `|1>`
/// for even `n`.
pub fn middle_control_level(n: usize) -> usize {
    if n % 2 == 1 {
        0
    } else {
        1
    }
}

/// `n`-control Fredkin using `2n + 3` CNOTs and `2n` level swaps on an
/// `(n + 2)`-level first target.
///
/// After `CNOT(t2 -> t1)` the first target holds the parity of the two
/// targets. Each control stage parks one qubit level of `t1` in a fresh
/// auxiliary level and then lets control `c_k` flip the remaining qubit
/// levels, so `t1` only stays in the qubit subspace, on the level picked by
/// [`middle_control_level`], when the parity was odd and every control is
/// `|1>`. The middle gate flips `t2` on that level and the stages are then
/// undone in reverse order.
pub fn build_fredkin_n(n: usize) -> Result<Circuit> {
    let register = fredkin_register(n)?;
    let controls = control_labels(n);
    let dim = n + 2;
    let stage = |k: usize| {
        let (a, b) = chain_swap_levels(k);
        [
            GatePlacement::x_swap(a, b, dim, FIRST_TARGET),
            GatePlacement::cnot(&controls[k - 1], FIRST_TARGET),
        ]
    };

    let mut placements = vec![GatePlacement::cnot(SECOND_TARGET, FIRST_TARGET)];
    for k in 1..=n {
        placements.extend(stage(k));
    }
    placements.push(
        GatePlacement::single(crate::gates::GateSpec::SigmaX, SECOND_TARGET)
            .with_control(FIRST_TARGET, middle_control_level(n)),
    );
    for k in (1..=n).rev() {
        let [swap, cx] = stage(k);
        placements.push(cx);
        placements.push(swap);
    }
    placements.push(GatePlacement::cnot(SECOND_TARGET, FIRST_TARGET));
    Circuit::with_placements(register, placements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::GateSpec;
    use crate::qudit::{apply, PureState};

    #[test]
    fn oracle_examples() {
        for n in 1..=3 {
            assert_eq!(fredkin_oracle(n).unwrap().unitarity_deviation(), 0.0);
        }
        let o = fredkin_oracle(1).unwrap();
        let r = o.register().clone();
        let run = |d: &[usize]| apply(&o, &PureState::basis(r.clone(), d).unwrap()).unwrap();
        assert_eq!(
            run(&[1, 1, 0]),
            PureState::basis(r.clone(), &[1, 0, 1]).unwrap()
        );
        assert_eq!(
            run(&[0, 1, 0]),
            PureState::basis(r.clone(), &[0, 1, 0]).unwrap()
        );

        let o = fredkin_oracle(2).unwrap();
        let r = o.register().clone();
        let s = PureState::basis(r.clone(), &[1, 0, 1, 0]).unwrap();
        assert_eq!(apply(&o, &s).unwrap(), s);
        let s = PureState::basis(r.clone(), &[1, 1, 1, 0]).unwrap();
        assert_eq!(
            apply(&o, &s).unwrap(),
            PureState::basis(r, &[1, 1, 0, 1]).unwrap()
        );
    }

    #[test]
    fn oracle_rejects_zero_controls() {
        assert_eq!(
            fredkin_oracle(0).unwrap_err(),
            Error::InvalidControlCount(0)
        );
        assert_eq!(
            build_fredkin_n(0).unwrap_err(),
            Error::InvalidControlCount(0)
        );
    }

    #[test]
    fn n1_specializes_to_three_qubit_circuit() {
        assert_eq!(build_fredkin_n(1).unwrap(), build_fredkin3());
    }

    #[test]
    fn two_control_layout() {
        let c = build_fredkin_n(2).unwrap();
        let counts = c.counts();
        assert_eq!((counts.controlled, counts.single), (7, 4));
        let swaps: Vec<&GateSpec> = c
            .placements()
            .iter()
            .filter(|p| !p.is_controlled())
            .map(|p| &p.gate)
            .collect();
        assert_eq!(swaps[0], &GateSpec::XSwap { a: 0, b: 2, dim: 4 });
        assert_eq!(swaps[1], &GateSpec::XSwap { a: 1, b: 3, dim: 4 });
    }

    #[test]
    fn middle_level_parity() {
        for (n, level) in [(1, 0), (2, 1), (3, 0), (4, 1)] {
            let c = build_fredkin_n(n).unwrap();
            let mid = &c.placements()[2 * n + 1];
            assert_eq!(mid.target, SECOND_TARGET);
            assert_eq!(mid.controls[0].wire, FIRST_TARGET);
            assert_eq!(mid.controls[0].level, level, "n = {n}");
        }
    }

    #[test]
    fn last_swap_follows_parity() {
        // odd n ends with |0> <-> |n+1>, even n with |1> <-> |n+1>
        assert_eq!(chain_swap_levels(3), (0, 4));
        assert_eq!(chain_swap_levels(4), (1, 5));
    }

    #[test]
    fn placement_list_is_palindromic() {
        for n in 1..=7 {
            let c = build_fredkin_n(n).unwrap();
            let p = c.placements();
            assert_eq!(p.len(), 4 * n + 3);
            for i in 0..p.len() / 2 {
                assert_eq!(p[i], p[p.len() - 1 - i], "n = {n}, i = {i}");
            }
            let counts = c.counts();
            assert_eq!((counts.controlled, counts.single), (2 * n + 3, 2 * n));
        }
    }

    #[test]
    fn three_qubit_circuit_is_nearest_neighbor() {
        let c = build_fredkin3();
        let r = c.register();
        for p in c.placements().iter().filter(|p| p.is_controlled()) {
            let ctl = r.position(&p.controls[0].wire).unwrap() as isize;
            let tgt = r.position(&p.target).unwrap() as isize;
            assert_eq!((ctl - tgt).abs(), 1);
        }
    }
}
