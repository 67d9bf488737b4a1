//! Test-side oracles built from Kronecker products and explicit
//! permutations, independent of the crate's sparse placement kernel.
#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use qudit_fredkin::gates::GateSpec;
use qudit_fredkin::qudit::Register;
use qudit_fredkin::synthesis::{Circuit, Control, GatePlacement};

pub type M = DMatrix<Complex64>;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn eye(d: usize) -> M {
    M::identity(d, d)
}

/// `|image(c)><c|` over `0..dim`.
pub fn permutation_matrix(dim: usize, image: impl Fn(usize) -> usize) -> M {
    let mut m = M::zeros(dim, dim);
    for col in 0..dim {
        m[(image(col), col)] = c(1.0);
    }
    m
}

pub fn projector(dim: usize, level: usize) -> M {
    let mut m = M::zeros(dim, dim);
    m[(level, level)] = c(1.0);
    m
}

pub fn kron_all(factors: &[M]) -> M {
    factors.iter().fold(eye(1), |acc, f| acc.kronecker(f))
}

/// Gate matrix written out directly from the gate's definition.
pub fn gate_matrix(g: &GateSpec) -> M {
    match *g {
        GateSpec::SigmaX => permutation_matrix(2, |x| 1 - x),
        GateSpec::XSwap { a, b, dim } => permutation_matrix(dim, |x| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        }),
        GateSpec::Hwp { degrees } => {
            let t = 2.0 * degrees * std::f64::consts::PI / 180.0;
            M::from_row_slice(2, 2, &[c(t.cos()), c(t.sin()), c(t.sin()), c(-t.cos())])
        }
    }
}

/// Identity on `wire_dim` levels with `g` on the block starting at `offset`.
pub fn padded(g: &M, wire_dim: usize, offset: usize) -> M {
    let mut m = eye(wire_dim);
    let d = g.nrows();
    m.view_mut((offset, offset), (d, d)).copy_from(g);
    m
}

/// `I + (P_ctrl ⊗ G_pad) - (P_ctrl ⊗ I)`: the gate on the block where every
/// control holds its level, identity elsewhere.
pub fn placement_matrix(reg: &Register, p: &GatePlacement) -> M {
    let dims = reg.dims();
    let target = reg.position(&p.target).unwrap();
    let g = gate_matrix(&p.gate);
    let ctrl = |i: usize| -> Option<usize> {
        p.controls
            .iter()
            .find(|c| reg.position(&c.wire).unwrap() == i)
            .map(|c| c.level)
    };
    let mut with_gate = Vec::new();
    let mut without = Vec::new();
    for (i, &d) in dims.iter().enumerate() {
        if i == target {
            with_gate.push(padded(&g, d, p.offset));
            without.push(eye(d));
        } else if let Some(level) = ctrl(i) {
            with_gate.push(projector(d, level));
            without.push(projector(d, level));
        } else {
            with_gate.push(eye(d));
            without.push(eye(d));
        }
    }
    eye(reg.total_dim()) + kron_all(&with_gate) - kron_all(&without)
}

pub fn circuit_matrix(circuit: &Circuit) -> M {
    let reg = circuit.register();
    circuit
        .placements()
        .iter()
        .fold(eye(reg.total_dim()), |acc, p| {
            placement_matrix(reg, p) * acc
        })
}

/// Mixed-radix index with the first wire most significant.
pub fn index_of(dims: &[usize], digits: &[usize]) -> usize {
    digits.iter().zip(dims).fold(0, |acc, (&x, &d)| acc * d + x)
}

pub fn max_abs_diff(a: &M, b: &M) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn vec_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Ideal controlled-SWAP on `n + 2` qubits (controls first), as a matrix.
pub fn fredkin_matrix(n: usize) -> M {
    let dim = 1 << (n + 2);
    let all = (1 << n) - 1;
    permutation_matrix(dim, |x| {
        if x >> 2 == all && ((x >> 1) & 1) != (x & 1) {
            x ^ 0b11
        } else {
            x
        }
    })
}

/// Normalized vector of i.i.d. complex entries, uniform in the unit square.
pub fn random_amplitudes<R: Rng>(rng: &mut R, dim: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / n).collect()
}

/// A valid circuit on a random register of 1 to 4 wires (dims 2 to 5, total
/// at most `max_dim`) with up to `max_len` placements: Pauli X, level swaps
/// or wave plates, with level offsets and up to two controls each.
pub fn random_circuit<R: Rng>(rng: &mut R, max_len: usize, max_dim: usize) -> Circuit {
    let (wires, spec) = loop {
        let wires = rng.random_range(1..=4);
        let spec: Vec<(String, usize)> = (0..wires)
            .map(|i| (format!("w{i}"), rng.random_range(2..=5)))
            .collect();
        if spec.iter().map(|s| s.1).product::<usize>() <= max_dim {
            break (wires, spec);
        }
    };
    let reg = Register::from_dims(&spec).unwrap();
    let len = rng.random_range(0..=max_len);
    let mut placements = Vec::with_capacity(len);
    for _ in 0..len {
        let t = rng.random_range(0..wires);
        let (label, dim) = (&spec[t].0, spec[t].1);
        let (gate, offset) = match rng.random_range(0..3) {
            0 => (GateSpec::SigmaX, rng.random_range(0..=dim - 2)),
            1 => {
                let offset = rng.random_range(0..=dim - 2);
                let d = rng.random_range(2..=dim - offset);
                let a = rng.random_range(0..d);
                let b = (a + rng.random_range(1..d)) % d;
                (GateSpec::XSwap { a, b, dim: d }, offset)
            }
            _ => {
                let degrees = match rng.random_range(0..3) {
                    0 => 22.5,
                    1 => 67.5,
                    _ => rng.random_range(-180.0..180.0),
                };
                (GateSpec::Hwp { degrees }, rng.random_range(0..=dim - 2))
            }
        };
        let mut controls = Vec::new();
        for (i, (l, d)) in spec.iter().enumerate() {
            if i != t && controls.len() < 2 && rng.random_bool(0.4) {
                controls.push(Control::new(l.clone(), rng.random_range(0..*d)));
            }
        }
        placements.push(GatePlacement {
            gate,
            target: label.clone(),
            offset,
            controls,
        });
    }
    Circuit::with_placements(reg, placements).unwrap()
}
