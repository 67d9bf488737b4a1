use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::register::Register;
use super::state::PureState;
use super::TOLERANCE;
use crate::error::{Error, Result};

/// Square unitary matrix over the basis of a [`Register`].
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryOp {
    register: Register,
    matrix: DMatrix<Complex64>,
}

impl UnitaryOp {
    /// Wraps `matrix`, checking shape and `U†U = I` within [`TOLERANCE`].
    pub fn new(register: Register, matrix: DMatrix<Complex64>) -> Result<Self> {
        let op = Self::from_parts(register, matrix)?;
        let dev = op.unitarity_deviation();
        if dev.is_nan() || dev > TOLERANCE {
            return Err(Error::NotUnitary(dev));
        }
        Ok(op)
    }

    /// Shape-checked but skips the unitarity test. Used for products of
    /// operators that are already known to be unitary.
    pub(crate) fn from_parts(register: Register, matrix: DMatrix<Complex64>) -> Result<Self> {
        let dim = register.total_dim();
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::BadMatrixShape {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
                dim,
            });
        }
        Ok(Self { register, matrix })
    }

    pub fn identity(register: Register) -> Self {
        let dim = register.total_dim();
        Self {
            register,
            matrix: DMatrix::identity(dim, dim),
        }
    }

    /// Builds an operator from real entries given row-major.
    pub fn from_real_rows(register: Register, rows: &[&[f64]]) -> Result<Self> {
        let n = rows.len();
        let matrix = DMatrix::from_fn(n, n, |r, c| {
            Complex64::new(rows[r].get(c).copied().unwrap_or(f64::NAN), 0.0)
        });
        Self::new(register, matrix)
    }

    pub fn register(&self) -> &Register {
        &self.register
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Largest elementwise deviation of `U†U` from the identity.
    pub fn unitarity_deviation(&self) -> f64 {
        let prod = self.matrix.adjoint() * &self.matrix;
        let n = prod.nrows();
        let mut max: f64 = 0.0;
        for c in 0..n {
            for r in 0..n {
                let expect = if r == c { 1.0 } else { 0.0 };
                max = max.max((prod[(r, c)] - Complex64::new(expect, 0.0)).norm());
            }
        }
        max
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_deviation() <= tol
    }

    /// Matrix product `self · other`: `other` acts first.
    pub fn compose(&self, other: &UnitaryOp) -> Result<UnitaryOp> {
        if self.register != other.register {
            return Err(Error::RegisterMismatch);
        }
        Ok(Self {
            register: self.register.clone(),
            matrix: &self.matrix * &other.matrix,
        })
    }

    /// Tensor product with `other`'s wires appended after `self`'s.
    pub fn kron(&self, other: &UnitaryOp) -> Result<UnitaryOp> {
        let mut wires = self.register.wires().to_vec();
        wires.extend_from_slice(other.register.wires());
        let register = Register::new(wires)?;
        Ok(Self {
            register,
            matrix: self.matrix.kronecker(&other.matrix),
        })
    }

    /// Same matrix, new wire labels (dimensions must line up).
    pub fn relabel<S: AsRef<str>>(&self, labels: &[S]) -> Result<UnitaryOp> {
        if labels.len() != self.register.len() {
            return Err(Error::DimensionMismatch {
                expected: self.register.len(),
                got: labels.len(),
            });
        }
        let spec: Vec<(&str, usize)> = labels
            .iter()
            .zip(self.register.wires())
            .map(|(l, w)| (l.as_ref(), w.dim()))
            .collect();
        Ok(Self {
            register: Register::from_dims(&spec)?,
            matrix: self.matrix.clone(),
        })
    }

    pub fn scale(&self, factor: Complex64) -> UnitaryOp {
        Self {
            register: self.register.clone(),
            matrix: &self.matrix * factor,
        }
    }

    /// The square block of the matrix on the given basis indices.
    pub fn submatrix(&self, indices: &[usize]) -> DMatrix<Complex64> {
        DMatrix::from_fn(indices.len(), indices.len(), |r, c| {
            self.matrix[(indices[r], indices[c])]
        })
    }
}

/// Where one gate wire lands in a register: wire position plus the level at
/// which the gate's level 0 sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct TargetSlot {
    pos: usize,
    offset: usize,
    gate_dim: usize,
}

/// A small gate placed on some wires of a register, optionally conditioned
/// on other wires holding specific levels.
///
/// On a target wire of dimension `D`, a gate of dimension `d` placed at
/// level offset `o` acts on levels `o..o+d` and as the identity on every
/// other level. If any target wire sits outside its window, or any control
/// is not satisfied, the basis state is left untouched.
#[derive(Debug, Clone)]
pub struct LocalAction {
    dim: usize,
    strides: Vec<usize>,
    dims: Vec<usize>,
    targets: Vec<TargetSlot>,
    controls: Vec<(usize, usize)>,
    /// Register-index offset of each local row relative to the local zero.
    row_offsets: Vec<usize>,
    /// Nonzero entries of each gate column as `(row, value)`.
    columns: Vec<Vec<(usize, Complex64)>>,
}

impl LocalAction {
    /// `targets` pairs each gate wire (in the gate's own order) with a
    /// register label and level offset; `controls` are `(label, level)`.
    pub fn new(
        register: &Register,
        gate: &UnitaryOp,
        targets: &[(&str, usize)],
        controls: &[(&str, usize)],
    ) -> Result<Self> {
        let gate_dims = gate.register().dims();
        if gate_dims.len() != targets.len() {
            return Err(Error::DimensionMismatch {
                expected: gate_dims.len(),
                got: targets.len(),
            });
        }
        let mut slots = Vec::with_capacity(targets.len());
        for (&(label, offset), &gate_dim) in targets.iter().zip(&gate_dims) {
            let pos = register.position(label)?;
            let wire = &register.wires()[pos];
            if offset + gate_dim > wire.dim() {
                return Err(Error::GateDoesNotFit {
                    wire: label.to_string(),
                    gate_dim,
                    offset,
                    wire_dim: wire.dim(),
                });
            }
            if slots.iter().any(|s: &TargetSlot| s.pos == pos) {
                return Err(Error::DuplicateWire(label.to_string()));
            }
            slots.push(TargetSlot {
                pos,
                offset,
                gate_dim,
            });
        }
        let mut ctrl = Vec::with_capacity(controls.len());
        for &(label, level) in controls {
            let pos = register.position(label)?;
            if slots.iter().any(|s| s.pos == pos) {
                return Err(Error::OverlappingWires(label.to_string()));
            }
            if ctrl.iter().any(|&(p, _)| p == pos) {
                return Err(Error::DuplicateWire(label.to_string()));
            }
            let dim = register.wires()[pos].dim();
            if level >= dim {
                return Err(Error::LevelOutOfRange {
                    wire: label.to_string(),
                    level,
                    dim,
                });
            }
            ctrl.push((pos, level));
        }

        let strides = register.strides().to_vec();
        let local_dim: usize = gate_dims.iter().product();
        let row_offsets = (0..local_dim)
            .map(|r| {
                let mut rem = r;
                let mut off = 0;
                for s in slots.iter().rev() {
                    off += (rem % s.gate_dim) * strides[s.pos];
                    rem /= s.gate_dim;
                }
                off
            })
            .collect();
        let m = gate.matrix();
        let columns = (0..local_dim)
            .map(|c| {
                (0..local_dim)
                    .filter(|&r| m[(r, c)] != Complex64::new(0.0, 0.0))
                    .map(|r| (r, m[(r, c)]))
                    .collect()
            })
            .collect();

        Ok(Self {
            dim: register.total_dim(),
            strides,
            dims: register.dims(),
            targets: slots,
            controls: ctrl,
            row_offsets,
            columns,
        })
    }

    fn digit(&self, index: usize, pos: usize) -> usize {
        (index / self.strides[pos]) % self.dims[pos]
    }

    /// Calls `emit(row, value)` for each nonzero entry of column `i` of
    /// the embedded action, scaled by `a`.
    #[inline]
    fn for_each_image(&self, i: usize, a: Complex64, mut emit: impl FnMut(usize, Complex64)) {
        for &(pos, level) in &self.controls {
            if self.digit(i, pos) != level {
                emit(i, a);
                return;
            }
        }
        let mut local = 0;
        let mut base = i;
        for s in &self.targets {
            let d = self.digit(i, s.pos);
            if d < s.offset || d >= s.offset + s.gate_dim {
                emit(i, a);
                return;
            }
            let l = d - s.offset;
            local = local * s.gate_dim + l;
            base -= l * self.strides[s.pos];
        }
        for &(r, g) in &self.columns[local] {
            emit(base + self.row_offsets[r], g * a);
        }
    }

    /// Writes `G_embedded · input` into `out` (overwritten).
    pub fn apply_into(&self, input: &[Complex64], out: &mut [Complex64]) {
        debug_assert_eq!(input.len(), self.dim);
        debug_assert_eq!(out.len(), self.dim);
        out.fill(Complex64::new(0.0, 0.0));
        for (i, &a) in input.iter().enumerate() {
            if a != Complex64::new(0.0, 0.0) {
                self.for_each_image(i, a, |r, v| out[r] += v);
            }
        }
    }

    /// Same action on a sparse vector of `(index, amplitude)` pairs sorted
    /// by index. The result is sorted, merged and free of exact zeros.
    pub fn apply_sparse(&self, input: &[(usize, Complex64)]) -> Vec<(usize, Complex64)> {
        let mut out = Vec::with_capacity(input.len());
        for &(i, a) in input {
            self.for_each_image(i, a, |r, v| out.push((r, v)));
        }
        out.sort_unstable_by_key(|e| e.0);
        let mut merged: Vec<(usize, Complex64)> = Vec::with_capacity(out.len());
        for (r, v) in out {
            match merged.last_mut() {
                Some(last) if last.0 == r => last.1 += v,
                _ => merged.push((r, v)),
            }
        }
        merged.retain(|e| e.1 != Complex64::new(0.0, 0.0));
        merged
    }

    pub fn apply_vec(&self, input: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); input.len()];
        self.apply_into(input, &mut out);
        out
    }

    /// Dense matrix of the embedded action.
    pub fn to_matrix(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        let mut e = vec![Complex64::new(0.0, 0.0); self.dim];
        let mut col = vec![Complex64::new(0.0, 0.0); self.dim];
        for c in 0..self.dim {
            e[c] = Complex64::new(1.0, 0.0);
            self.apply_into(&e, &mut col);
            m.set_column(c, &DVector::from_column_slice(&col));
            e[c] = Complex64::new(0.0, 0.0);
        }
        m
    }
}

/// Places `gate` on the named wires of `register` at level offset 0.
pub fn embed(gate: &UnitaryOp, target_wires: &[&str], register: &Register) -> Result<UnitaryOp> {
    let targets: Vec<(&str, usize)> = target_wires.iter().map(|&w| (w, 0)).collect();
    let action = LocalAction::new(register, gate, &targets, &[])?;
    UnitaryOp::from_parts(register.clone(), action.to_matrix())
}

/// Applies `gate` to `target_wires` only where `control_wire` holds exactly
/// `control_level`; identity on every other block.
pub fn controlled(
    gate: &UnitaryOp,
    target_wires: &[&str],
    control_wire: &str,
    control_level: usize,
    register: &Register,
) -> Result<UnitaryOp> {
    let targets: Vec<(&str, usize)> = target_wires.iter().map(|&w| (w, 0)).collect();
    let action = LocalAction::new(register, gate, &targets, &[(control_wire, control_level)])?;
    UnitaryOp::from_parts(register.clone(), action.to_matrix())
}

pub fn apply(op: &UnitaryOp, state: &PureState) -> Result<PureState> {
    if op.register() != state.register() {
        if op.dim() != state.dim() {
            return Err(Error::DimensionMismatch {
                expected: op.dim(),
                got: state.dim(),
            });
        }
        return Err(Error::RegisterMismatch);
    }
    let out: DVector<Complex64> = op.matrix() * state.amplitudes();
    Ok(PureState::from_parts(state.register().clone(), out))
}
