//! Univariate polynomials in ζ with complex coefficients and an explicit
//! degree bound.
//!
//! The bound is part of the type: the real structure pairs the coefficient of
//! ζ^a with the coefficient of ζ^(2r−a), so trailing zeros are significant.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{c64, Error, Result};

/// Polynomial Σ coeffs[a]·ζ^a with `coeffs.len() == deg_bound + 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyZ {
    #[serde(with = "crate::serde_complex::vec")]
    coeffs: Vec<Complex64>,
}

impl PolyZ {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "polynomial needs at least one coefficient");
        PolyZ { coeffs }
    }

    pub fn zero(deg_bound: usize) -> Self {
        PolyZ { coeffs: vec![Complex64::ZERO; deg_bound + 1] }
    }

    pub fn constant(value: Complex64) -> Self {
        PolyZ { coeffs: vec![value] }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        PolyZ { coeffs: coeffs.iter().map(|&x| c64(x, 0.0)).collect() }
    }

    pub fn deg_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest index with a coefficient above `tol` relative to the largest
    /// coefficient; `None` for the (numerically) zero polynomial.
    pub fn numeric_degree(&self, tol: f64) -> Option<usize> {
        let scale = self.max_coeff();
        if scale == 0.0 {
            return None;
        }
        self.coeffs.iter().rposition(|c| c.norm() > tol * scale)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, a: usize) -> Complex64 {
        self.coeffs.get(a).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn coeff_mut(&mut self, a: usize) -> &mut Complex64 {
        &mut self.coeffs[a]
    }

    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.norm() <= tol)
    }

    /// Horner evaluation.
    pub fn eval(&self, zeta: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * zeta + c;
        }
        acc
    }

    pub fn derivative(&self) -> PolyZ {
        if self.coeffs.len() == 1 {
            return PolyZ::zero(0);
        }
        PolyZ {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(a, &c)| c * a as f64)
                .collect(),
        }
    }

    pub fn add(&self, other: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Complex64::ZERO; n];
        for (a, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(a) + other.coeff(a);
        }
        PolyZ { coeffs }
    }

    pub fn scale(&self, s: Complex64) -> PolyZ {
        PolyZ { coeffs: self.coeffs.iter().map(|&c| c * s).collect() }
    }

    pub fn mul(&self, other: &PolyZ) -> PolyZ {
        let mut coeffs = vec![Complex64::ZERO; self.deg_bound() + other.deg_bound() + 1];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == Complex64::ZERO {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                coeffs[a + b] += ca * cb;
            }
        }
        PolyZ { coeffs }
    }

    /// Pad or confirm the degree bound (never truncates nonzero content).
    pub fn with_deg_bound(mut self, deg_bound: usize) -> Result<PolyZ> {
        if self.coeffs.len() > deg_bound + 1 {
            let scale = self.max_coeff().max(1e-300);
            for (a, c) in self.coeffs.iter().enumerate().skip(deg_bound + 1) {
                if c.norm() > 1e-12 * scale {
                    return Err(Error::Invalid(format!(
                        "coefficient of ζ^{a} exceeds the declared degree bound {deg_bound}"
                    )));
                }
            }
            self.coeffs.truncate(deg_bound + 1);
        } else {
            self.coeffs.resize(deg_bound + 1, Complex64::ZERO);
        }
        Ok(self)
    }

    /// Roots of the polynomial (numeric degree many).
    pub fn roots(&self) -> Result<Vec<Complex64>> {
        match self.numeric_degree(1e-13) {
            None | Some(0) => Ok(Vec::new()),
            Some(d) => super::roots::poly_roots(&self.coeffs[..=d]),
        }
    }
}

/// Interpolate a polynomial of degree ≤ `deg` from its values at the scaled
/// roots of unity ζ_j = scale·ω^j, ω = e^{2πi/(deg+1)}. The inverse transform
/// is exact (a plain inverse DFT divided by powers of the scale).
pub fn interp_scaled_unity(values: &[Complex64], scale: f64) -> PolyZ {
    let n = values.len();
    let mut coeffs = vec![Complex64::ZERO; n];
    for (a, c) in coeffs.iter_mut().enumerate() {
        let mut acc = Complex64::ZERO;
        for (j, &v) in values.iter().enumerate() {
            let angle = -2.0 * std::f64::consts::PI * (a * j % n) as f64 / n as f64;
            acc += v * Complex64::from_polar(1.0, angle);
        }
        *c = acc / (n as f64 * scale.powi(a as i32));
    }
    PolyZ { coeffs }
}

/// The interpolation nodes matching [`interp_scaled_unity`].
pub fn unity_nodes(count: usize, scale: f64) -> Vec<Complex64> {
    (0..count)
        .map(|j| Complex64::from_polar(scale, 2.0 * std::f64::consts::PI * j as f64 / count as f64))
        .collect()
}
