use std::fmt::Write;

use crate::gates::GateSpec;
use crate::synthesis::{Circuit, GatePlacement};

fn target_ref(p: &GatePlacement) -> String {
    if p.offset == 0 {
        p.target.clone()
    } else {
        format!("{}@{}", p.target, p.offset)
    }
}

/// Canonical text form: header, then one statement per placement.
pub fn serialize(circuit: &Circuit) -> String {
    let mut out = format!("wires: {}\n", circuit.register());
    for p in circuit.placements() {
        let mut fields: Vec<String> = p
            .controls
            .iter()
            .map(|c| format!("control={}@{}", c.wire, c.level))
            .collect();
        let name = match &p.gate {
            GateSpec::SigmaX if p.is_controlled() => {
                fields.push(format!("target={}", target_ref(p)));
                "CNOT"
            }
            GateSpec::SigmaX => {
                fields.push(format!("wire={}", target_ref(p)));
                "SX"
            }
            GateSpec::XSwap { a, b, dim } => {
                fields.push(format!("swap={a},{b}"));
                fields.push(format!("wire={}", target_ref(p)));
                let natural = circuit
                    .register()
                    .wire(&p.target)
                    .map(|w| w.dim() - p.offset)
                    .ok();
                if natural != Some(*dim) {
                    fields.push(format!("dim={dim}"));
                }
                "X"
            }
            GateSpec::Hwp { degrees } => {
                fields.push(format!("angle={degrees}"));
                fields.push(format!("wire={}", target_ref(p)));
                "HWP"
            }
        };
        let _ = writeln!(out, "gate {name} {}", fields.join(" "));
    }
    out
}
