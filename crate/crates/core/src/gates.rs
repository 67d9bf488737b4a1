//! Primitive gates in their native (small) dimension. Placement into a
//! register always goes through [`crate::qudit::embed`] or a
//! [`crate::qudit::LocalAction`].

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qudit::{Register, UnitaryOp};

fn one_wire(dim: usize) -> Register {
    Register::from_dims(&[("q", dim)]).expect("dim >= 2")
}

fn two_qubits() -> Register {
    Register::qubits(&["control", "target"]).expect("static labels")
}

fn permutation(register: Register, image: impl Fn(usize) -> usize) -> UnitaryOp {
    let dim = register.total_dim();
    let mut m = DMatrix::zeros(dim, dim);
    for c in 0..dim {
        m[(image(c), c)] = Complex64::new(1.0, 0.0);
    }
    UnitaryOp::new(register, m).expect("permutation matrices are unitary")
}

/// Pauli X, `|0><1| + |1><0|`.
pub fn sigma_x() -> UnitaryOp {
    permutation(one_wire(2), |c| 1 - c)
}

/// Exchanges levels `a` and `b` of a `dim`-level system. `x_swap(0, 2, 3)`
/// is the qutrit operator that parks `|0>` in `|2>`.
pub fn x_swap(a: usize, b: usize, dim: usize) -> Result<UnitaryOp> {
    if a == b || a >= dim || b >= dim || dim < 2 {
        return Err(Error::InvalidSwap { a, b, dim });
    }
    Ok(permutation(one_wire(dim), |c| {
        if c == a {
            b
        } else if c == b {
            a
        } else {
            c
        }
    }))
}

/// Flips the target iff the control is `|1>`. Wire order (control, target).
pub fn cnot() -> UnitaryOp {
    permutation(two_qubits(), |c| if c >= 2 { c ^ 1 } else { c })
}

/// Flips the target iff the control is `|0>`. Wire order (control, target).
pub fn cnot_bar() -> UnitaryOp {
    permutation(two_qubits(), |c| if c < 2 { c ^ 1 } else { c })
}

/// Half-wave plate with its fast axis at `degrees`, in the `{H = 0, V = 1}`
/// polarization basis: `[[cos 2θ, sin 2θ], [sin 2θ, -cos 2θ]]`.
pub fn hwp(degrees: f64) -> UnitaryOp {
    let (s, c) = (2.0 * degrees).to_radians().sin_cos();
    let m = DMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::new(c, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(-c, 0.0),
        ],
    );
    UnitaryOp::new(one_wire(2), m).expect("real rotation-reflection is unitary")
}

/// A single-wire gate by name and parameters, as it appears in circuits.
#[derive(Debug, Clone, PartialEq)]
pub enum GateSpec {
    SigmaX,
    XSwap { a: usize, b: usize, dim: usize },
    Hwp { degrees: f64 },
}

impl GateSpec {
    pub fn name(&self) -> &'static str {
        match self {
            GateSpec::SigmaX => "SX",
            GateSpec::XSwap { .. } => "X",
            GateSpec::Hwp { .. } => "HWP",
        }
    }

    /// Number of levels the gate acts on.
    pub fn dim(&self) -> usize {
        match self {
            GateSpec::SigmaX | GateSpec::Hwp { .. } => 2,
            GateSpec::XSwap { dim, .. } => *dim,
        }
    }

    pub fn unitary(&self) -> Result<UnitaryOp> {
        match *self {
            GateSpec::SigmaX => Ok(sigma_x()),
            GateSpec::XSwap { a, b, dim } => x_swap(a, b, dim),
            GateSpec::Hwp { degrees } => Ok(hwp(degrees)),
        }
    }
}

impl fmt::Display for GateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateSpec::SigmaX => write!(f, "SX"),
            GateSpec::XSwap { a, b, dim } => write!(f, "X({a}<->{b}; d={dim})"),
            GateSpec::Hwp { degrees } => write!(f, "HWP({degrees}deg)"),
        }
    }
}
