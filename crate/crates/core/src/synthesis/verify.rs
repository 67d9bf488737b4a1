use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use super::circuit::{evolve_basis, Circuit, GateCounts};
use super::fredkin::{build_fredkin_n, fredkin_oracle};
use crate::error::{Error, Result};
use crate::qudit::{phase_aligned_deviation, UnitaryOp};

/// Largest register dimension verified by default (`n = 8` controls:
/// `2^8 * 10 * 2`).
pub const DEFAULT_DIM_BUDGET: usize = 5120;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_dim: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_dim: DEFAULT_DIM_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    /// Phase-aligned max deviation of the circuit, restricted to the qubit
    /// subspace, from the oracle.
    pub max_deviation: f64,
    /// Largest output amplitude outside the qubit subspace, over all
    /// qubit-subspace inputs.
    pub max_leakage: f64,
    pub subspace_preserved: bool,
    pub counts: GateCounts,
    /// Expected `(controlled, single)` counts, when known.
    pub expected_counts: Option<GateCounts>,
    /// Max deviation from the identity over inputs with some wire in an
    /// auxiliary level. Recorded only; correctness is not claimed there.
    pub auxiliary_identity_deviation: Option<f64>,
    /// Every controlled placement connects adjacent wires in register order.
    pub nearest_neighbor: bool,
}

impl VerificationReport {
    pub fn counts_match(&self) -> bool {
        self.expected_counts.is_none_or(|e| e == self.counts)
    }

    pub fn passed(&self, tol: f64) -> bool {
        self.max_deviation <= tol && self.max_leakage <= tol && self.counts_match()
    }
}

fn nearest_neighbor(circuit: &Circuit) -> bool {
    let reg = circuit.register();
    circuit.placements().iter().all(|p| {
        let pos: Vec<usize> = p.wires().filter_map(|w| reg.position(w).ok()).collect();
        let (lo, hi) = (pos.iter().min(), pos.iter().max());
        match (lo, hi) {
            (Some(lo), Some(hi)) => hi - lo + 1 == pos.len(),
            _ => true,
        }
    })
}

/// Compares `circuit` on its qubit subspace against a qubit `oracle` with
/// the same number of wires, column by column.
pub fn verify_circuit(
    circuit: &Circuit,
    oracle: &UnitaryOp,
    config: VerifyConfig,
) -> Result<VerificationReport> {
    let reg = circuit.register();
    let dim = reg.total_dim();
    if dim > config.max_dim {
        return Err(Error::BudgetExceeded {
            dim,
            budget: config.max_dim,
        });
    }
    if oracle.register().len() != reg.len() {
        return Err(Error::OracleMismatch(format!(
            "oracle has {} wires, circuit has {}",
            oracle.register().len(),
            reg.len()
        )));
    }
    if oracle.register().wires().iter().any(|w| w.dim() != 2) {
        return Err(Error::OracleMismatch("oracle must act on qubits".into()));
    }

    let actions = circuit.compile()?;
    let subspace = reg.subspace_indices(2);
    let mut in_subspace = vec![false; dim];
    for &i in &subspace {
        in_subspace[i] = true;
    }

    let columns: Vec<(Vec<Complex64>, f64)> = subspace
        .par_iter()
        .map(|&c| {
            let out = evolve_basis(&actions, dim, c);
            let leak = out
                .iter()
                .enumerate()
                .filter(|(i, _)| !in_subspace[*i])
                .map(|(_, a)| a.norm())
                .fold(0.0, f64::max);
            let restricted = subspace.iter().map(|&i| out[i]).collect();
            (restricted, leak)
        })
        .collect();
    let k = subspace.len();
    let restricted = DMatrix::from_fn(k, k, |r, c| columns[c].0[r]);
    let max_leakage = columns.iter().map(|c| c.1).fold(0.0, f64::max);
    let max_deviation = phase_aligned_deviation(&restricted, oracle.matrix());

    let auxiliary: Vec<usize> = (0..dim).filter(|&i| !in_subspace[i]).collect();
    let auxiliary_identity_deviation = if auxiliary.is_empty() {
        None
    } else {
        Some(
            auxiliary
                .par_iter()
                .map(|&c| {
                    evolve_basis(&actions, dim, c)
                        .iter()
                        .enumerate()
                        .map(|(i, a)| {
                            let e = if i == c { 1.0 } else { 0.0 };
                            (a - Complex64::new(e, 0.0)).norm()
                        })
                        .fold(0.0, f64::max)
                })
                .reduce(|| 0.0, f64::max),
        )
    };

    Ok(VerificationReport {
        max_deviation,
        max_leakage,
        subspace_preserved: max_leakage <= crate::qudit::TOLERANCE,
        counts: circuit.counts(),
        expected_counts: None,
        auxiliary_identity_deviation,
        nearest_neighbor: nearest_neighbor(circuit),
    })
}

/// Builds the `n`-control circuit and checks it against the ideal Fredkin,
/// expecting `2n + 3` controlled and `2n` single-qudit gates.
pub fn verify_against_oracle(n: usize) -> Result<VerificationReport> {
    verify_against_oracle_with(n, VerifyConfig::default())
}

pub fn verify_against_oracle_with(n: usize, config: VerifyConfig) -> Result<VerificationReport> {
    let circuit = build_fredkin_n(n)?;
    let oracle = fredkin_oracle(n)?;
    let mut report = verify_circuit(&circuit, &oracle, config)?;
    report.expected_counts = Some(GateCounts {
        controlled: 2 * n + 3,
        single: 2 * n,
    });
    Ok(report)
}
