use super::circuit::{Circuit, GatePlacement};
use crate::error::{Error, Result};
use crate::qudit::Register;

/// Label of the qubit at `pos` on a line.
pub fn line_label(pos: usize) -> String {
    format!("q{pos}")
}

/// `n` qubits `q0 .. q{n-1}` on a line.
pub fn line_register(n: usize) -> Result<Register> {
    let labels: Vec<String> = (0..n).map(line_label).collect();
    Register::qubits(&labels)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LongRangeExpansion {
    /// Nearest-neighbor CNOTs on wires labelled by [`line_label`].
    pub placements: Vec<GatePlacement>,
    pub count: usize,
}

impl LongRangeExpansion {
    pub fn into_circuit(self, register: Register) -> Result<Circuit> {
        Circuit::with_placements(register, self.placements)
    }
}

/// Rewrites `CNOT(control -> target)` between arbitrary line positions as
/// nearest-neighbor CNOTs.
///
/// With the path `p_0 = control, ..., p_d = target`, the sequence is
///
/// ```text
/// down:  p_{d-1}->p_d, p_{d-2}->p_{d-1}, ..., p_0->p_1      (d gates)
/// up:    p_1->p_2, ..., p_{d-1}->p_d                        (d-1 gates)
/// down:  p_{d-2}->p_{d-1}, ..., p_0->p_1                    (d-1 gates)
/// up:    p_1->p_2, ..., p_{d-2}->p_{d-1}                    (d-2 gates)
/// ```
///
/// for `4(d - 1)` gates in total when `d >= 2`. Over GF(2) the first two
/// legs leave `p_d ^= p_0` while shifting the intermediate wires, and the
/// last two legs restore them.
pub fn expand_long_range_cnot(control: usize, target: usize) -> Result<LongRangeExpansion> {
    if control == target {
        return Err(Error::SamePosition(control));
    }
    let path: Vec<usize> = if control < target {
        (control..=target).collect()
    } else {
        (target..=control).rev().collect()
    };
    let d = path.len() - 1;
    let cx = |k: usize| GatePlacement::cnot(&line_label(path[k]), &line_label(path[k + 1]));

    let mut placements = Vec::with_capacity(4 * d);
    if d == 1 {
        placements.push(cx(0));
    } else {
        placements.extend((0..d).rev().map(cx));
        placements.extend((1..d).map(cx));
        placements.extend((0..d - 1).rev().map(cx));
        placements.extend((1..d - 1).map(cx));
    }
    let count = placements.len();
    Ok(LongRangeExpansion { placements, count })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(expand_long_range_cnot(0, 1).unwrap().count, 1);
        assert_eq!(expand_long_range_cnot(0, 2).unwrap().count, 4);
        assert_eq!(expand_long_range_cnot(0, 3).unwrap().count, 8);
        assert_eq!(expand_long_range_cnot(5, 1).unwrap().count, 12);
        assert_eq!(
            expand_long_range_cnot(2, 2).unwrap_err(),
            Error::SamePosition(2)
        );
    }

    #[test]
    fn only_adjacent_pairs() {
        for (i, j) in [(0, 4), (4, 0), (1, 3)] {
            let e = expand_long_range_cnot(i, j).unwrap();
            for p in &e.placements {
                let a: usize = p.controls[0].wire[1..].parse().unwrap();
                let b: usize = p.target[1..].parse().unwrap();
                assert_eq!(a.abs_diff(b), 1);
            }
        }
    }

    /// GF(2) simulation of the CNOT network on symbolic bit-vectors.
    #[test]
    fn parity_action_is_a_single_long_range_cnot() {
        for n in 2..=6usize {
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    // wire k starts holding the singleton parity {k}
                    let mut wires: Vec<u32> = (0..n).map(|k| 1 << k).collect();
                    for p in expand_long_range_cnot(i, j).unwrap().placements {
                        let a: usize = p.controls[0].wire[1..].parse().unwrap();
                        let b: usize = p.target[1..].parse().unwrap();
                        wires[b] ^= wires[a];
                    }
                    for (k, w) in wires.iter().enumerate() {
                        let expect = if k == j { (1 << j) | (1 << i) } else { 1 << k };
                        assert_eq!(*w, expect, "n={n} i={i} j={j} wire {k}");
                    }
                }
            }
        }
    }
}
