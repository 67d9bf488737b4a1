use std::fmt;

use crate::error::{Error, Result};

/// A single named wire and the number of levels it carries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WireSpec {
    label: String,
    dim: usize,
}

impl WireSpec {
    pub fn new(label: impl Into<String>, dim: usize) -> Result<Self> {
        let label = label.into();
        if dim < 2 {
            return Err(Error::WireTooSmall { wire: label, dim });
        }
        Ok(Self { label, dim })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl fmt::Display for WireSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.label, self.dim)
    }
}

/// Ordered list of wires spanning a mixed-radix Hilbert space.
///
/// Basis states are indexed positionally with the first declared wire as
/// the most significant digit, so `|d_0 d_1 ... d_{k-1}>` maps to
/// `sum_i d_i * stride_i` where `stride_i` is the product of the dimensions
/// of all wires after `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Register {
    wires: Vec<WireSpec>,
    strides: Vec<usize>,
}

impl Register {
    pub fn new(wires: Vec<WireSpec>) -> Result<Self> {
        for (i, w) in wires.iter().enumerate() {
            if wires[..i].iter().any(|o| o.label == w.label) {
                return Err(Error::DuplicateWire(w.label.clone()));
            }
        }
        let mut strides = vec![1; wires.len()];
        for i in (0..wires.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * wires[i + 1].dim;
        }
        Ok(Self { wires, strides })
    }

    /// Shorthand for building a register from `(label, dim)` pairs.
    pub fn from_dims<S: AsRef<str>>(spec: &[(S, usize)]) -> Result<Self> {
        let wires = spec
            .iter()
            .map(|(l, d)| WireSpec::new(l.as_ref(), *d))
            .collect::<Result<Vec<_>>>()?;
        Self::new(wires)
    }

    /// `n` qubit wires with the given labels.
    pub fn qubits<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let spec: Vec<(&str, usize)> = labels.iter().map(|l| (l.as_ref(), 2)).collect();
        Self::from_dims(&spec)
    }

    pub fn wires(&self) -> &[WireSpec] {
        &self.wires
    }

    pub fn len(&self) -> usize {
        self.wires.len()
    }

    pub fn is_empty(&self) -> bool {
        self.wires.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.wires.iter().map(|w| w.dim).collect()
    }

    pub fn strides(&self) -> &[usize] {
        &self.strides
    }

    pub fn total_dim(&self) -> usize {
        self.wires.iter().map(|w| w.dim).product()
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.wires
            .iter()
            .position(|w| w.label == label)
            .ok_or_else(|| Error::UnknownWire(label.to_string()))
    }

    pub fn wire(&self, label: &str) -> Result<&WireSpec> {
        self.position(label).map(|p| &self.wires[p])
    }

    pub fn basis_index(&self, digits: &[usize]) -> Result<usize> {
        if digits.len() != self.wires.len() {
            return Err(Error::DigitCount {
                expected: self.wires.len(),
                got: digits.len(),
            });
        }
        let mut index = 0;
        for ((w, &d), &s) in self.wires.iter().zip(digits).zip(&self.strides) {
            if d >= w.dim {
                return Err(Error::LevelOutOfRange {
                    wire: w.label.clone(),
                    level: d,
                    dim: w.dim,
                });
            }
            index += d * s;
        }
        Ok(index)
    }

    pub fn basis_digits(&self, index: usize) -> Result<Vec<usize>> {
        let dim = self.total_dim();
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        Ok(self.digits_unchecked(index))
    }

    pub(crate) fn digits_unchecked(&self, index: usize) -> Vec<usize> {
        self.wires
            .iter()
            .zip(&self.strides)
            .map(|(w, &s)| (index / s) % w.dim)
            .collect()
    }

    /// Indices of all basis states whose digit on every wire is below
    /// `levels` (capped by the wire dimension). With `levels = 2` this is the
    /// qubit subspace.
    pub fn subspace_indices(&self, levels: usize) -> Vec<usize> {
        (0..self.total_dim())
            .filter(|&i| {
                self.wires
                    .iter()
                    .zip(&self.strides)
                    .all(|(w, &s)| (i / s) % w.dim < levels)
            })
            .collect()
    }
}

impl fmt::Display for Register {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.wires.iter().map(|w| w.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}
