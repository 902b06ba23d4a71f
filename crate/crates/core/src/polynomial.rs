//! Real polynomials in one variable.

use alloc::vec::Vec;

use crate::series::Series;

/// `c₀ + c₁x + c₂x² + …`.
#[derive(Clone, Debug, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Polynomial {
    pub coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Polynomial { coeffs }
    }

    pub fn constant(c: f64) -> Self {
        Polynomial { coeffs: alloc::vec![c] }
    }

    pub fn zero() -> Self {
        Polynomial::constant(0.0)
    }

    /// Taylor polynomial at 0 from derivative values `f(0), f'(0), …`.
    pub fn from_derivatives(derivs: &[f64]) -> Self {
        let mut fact = 1.0;
        let coeffs = derivs
            .iter()
            .enumerate()
            .map(|(k, d)| {
                if k > 0 {
                    fact *= k as f64;
                }
                d / fact
            })
            .collect();
        Polynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0.0).unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(k, c)| k as f64 * c).collect::<Vec<_>>();
        if coeffs.is_empty() {
            Polynomial::zero()
        } else {
            Polynomial { coeffs }
        }
    }

    /// Antiderivative vanishing at 0.
    pub fn integral(&self) -> Self {
        let mut coeffs = alloc::vec![0.0];
        coeffs.extend(self.coeffs.iter().enumerate().map(|(k, c)| c / (k + 1) as f64));
        Polynomial { coeffs }
    }

    pub fn add(&self, other: &Polynomial) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeffs.get(k).copied().unwrap_or(0.0) + other.coeffs.get(k).copied().unwrap_or(0.0))
            .collect();
        Polynomial { coeffs }
    }

    pub fn mul(&self, other: &Polynomial) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut coeffs = alloc::vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial { coeffs }
    }

    pub fn scale(&self, k: f64) -> Self {
        Polynomial { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Multiplies by `x^k`.
    pub fn shift_degree(&self, k: usize) -> Self {
        let mut coeffs = alloc::vec![0.0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs }
    }

    /// Taylor series about `x0`, known through `order` (exact beyond the
    /// degree).
    pub fn taylor(&self, x0: f64, order: usize) -> Series {
        let n = self.coeffs.len().min(crate::series::MAX_TERMS);
        let full = Series::from_coeffs(&self.coeffs[..n]);
        let shifted = full.shift(x0);
        let mut out = Series::zeros(order + 1);
        for k in 0..=order.min(n.saturating_sub(1)) {
            out.set_coeff(k, shifted.coeff(k));
        }
        out
    }
}

impl From<Vec<f64>> for Polynomial {
    fn from(coeffs: Vec<f64>) -> Self {
        Polynomial { coeffs }
    }
}
