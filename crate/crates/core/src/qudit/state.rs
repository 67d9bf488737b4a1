use nalgebra::DVector;
use num_complex::Complex64;

use super::register::Register;
use super::TOLERANCE;
use crate::error::{Error, Result};

/// Normalized amplitude vector over a register's basis.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    register: Register,
    amplitudes: DVector<Complex64>,
}

impl PureState {
    pub fn new(register: Register, amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = register.total_dim();
        if amplitudes.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: amplitudes.len(),
            });
        }
        let s = Self::from_parts(register, DVector::from_vec(amplitudes));
        let n = s.norm_sqr();
        if n.is_nan() || (n - 1.0).abs() > TOLERANCE {
            return Err(Error::NotNormalized(n));
        }
        Ok(s)
    }

    /// Rescales `amplitudes` to unit norm. Fails on the zero vector.
    pub fn normalized(register: Register, amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm.is_nan() || norm <= 0.0 {
            return Err(Error::NotNormalized(norm));
        }
        Self::new(register, amplitudes.into_iter().map(|a| a / norm).collect())
    }

    pub(crate) fn from_parts(register: Register, amplitudes: DVector<Complex64>) -> Self {
        Self {
            register,
            amplitudes,
        }
    }

    pub fn basis(register: Register, digits: &[usize]) -> Result<Self> {
        let index = register.basis_index(digits)?;
        let mut amps = DVector::zeros(register.total_dim());
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self::from_parts(register, amps))
    }

    pub fn register(&self) -> &Register {
        &self.register
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitude(&self, digits: &[usize]) -> Result<Complex64> {
        Ok(self.amplitudes[self.register.basis_index(digits)?])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &PureState) -> Result<Complex64> {
        self.check_same(other)?;
        Ok(self.amplitudes.dotc(&other.amplitudes))
    }

    pub fn fidelity(&self, other: &PureState) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr())
    }

    /// Elementwise max `|a_i - b_i|`, no phase alignment.
    pub fn max_deviation(&self, other: &PureState) -> Result<f64> {
        self.check_same(other)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Basis terms with modulus above `tol`, as `(digits, amplitude)`.
    pub fn terms(&self, tol: f64) -> Vec<(Vec<usize>, Complex64)> {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > tol)
            .map(|(i, &a)| (self.register.digits_unchecked(i), a))
            .collect()
    }

    fn check_same(&self, other: &PureState) -> Result<()> {
        if self.register != other.register {
            return Err(Error::RegisterMismatch);
        }
        Ok(())
    }
}
