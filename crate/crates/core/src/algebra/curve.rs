//! One spectral-curve component: a monic-in-η bivariate polynomial
//! P(ζ,η) = η^m + Σ α_i(ζ) η^(m−i) with deg α_i ≤ d·i.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::poly::{interp_scaled_unity, unity_nodes, PolyZ};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveEq {
    m: usize,
    d: usize,
    /// alphas[i−1] = α_i, with deg_bound exactly d·i.
    alphas: Vec<PolyZ>,
}

impl CurveEq {
    pub fn new(d: usize, alphas: Vec<PolyZ>) -> Result<Self> {
        let m = alphas.len();
        if m == 0 {
            return Err(Error::Invalid("a curve needs at least one coefficient α_1".into()));
        }
        let alphas = alphas
            .into_iter()
            .enumerate()
            .map(|(k, a)| a.with_deg_bound(d * (k + 1)))
            .collect::<Result<Vec<_>>>()?;
        Ok(CurveEq { m, d, alphas })
    }

    pub fn degree_eta(&self) -> usize {
        self.m
    }

    pub fn twist(&self) -> usize {
        self.d
    }

    pub fn alphas(&self) -> &[PolyZ] {
        &self.alphas
    }

    pub fn alpha(&self, i: usize) -> &PolyZ {
        &self.alphas[i - 1]
    }

    /// Arithmetic genus (m−1)(dm−2)/2.
    pub fn genus(&self) -> usize {
        (self.m - 1) * (self.d * self.m - 2) / 2
    }

    /// Coefficients of the monic fiber polynomial η^m + Σ α_i(ζ)η^(m−i),
    /// ascending in η.
    pub fn eta_coeffs_at(&self, zeta: Complex64) -> Vec<Complex64> {
        let mut coeffs = vec![Complex64::ZERO; self.m + 1];
        coeffs[self.m] = Complex64::ONE;
        for (i, alpha) in self.alphas.iter().enumerate() {
            coeffs[self.m - (i + 1)] = alpha.eval(zeta);
        }
        coeffs
    }

    pub fn eval(&self, zeta: Complex64, eta: Complex64) -> Complex64 {
        self.eta_coeffs_at(zeta)
            .iter()
            .rev()
            .fold(Complex64::ZERO, |acc, &c| acc * eta + c)
    }

    /// ∂P/∂η at a point.
    pub fn deta(&self, zeta: Complex64, eta: Complex64) -> Complex64 {
        let coeffs = self.eta_coeffs_at(zeta);
        let mut acc = Complex64::ZERO;
        for k in (1..coeffs.len()).rev() {
            acc = acc * eta + coeffs[k] * k as f64;
        }
        acc
    }

    /// A magnitude used for relative residual tests.
    pub fn coeff_scale(&self) -> f64 {
        self.alphas.iter().map(|a| a.max_coeff()).fold(1.0, f64::max)
    }

    /// ζ-discriminant: Res_η(P, ∂P/∂η), degree ≤ d·m·(2m−2).
    pub fn discriminant_zeta(&self) -> PolyZ {
        let deg = self.d * self.m * (2 * self.m - 2).max(1);
        let scale = node_scale(self.coeff_scale(), deg);
        let nodes = unity_nodes(deg + 1, scale);
        let values: Vec<Complex64> = nodes
            .iter()
            .map(|&z| {
                let p = self.eta_coeffs_at(z);
                let dp: Vec<Complex64> =
                    (1..p.len()).map(|k| p[k] * k as f64).collect();
                sylvester_det(&p, &dp)
            })
            .collect();
        interp_scaled_unity(&values, scale)
    }

    /// ζ-locations of branch points (roots of the discriminant).
    pub fn branch_points(&self) -> Result<Vec<Complex64>> {
        self.discriminant_zeta().roots()
    }
}

/// Interpolation radius: scaled to the coefficient magnitude so node values
/// of a degree-`deg` polynomial stay well away from overflow/underflow.
pub(crate) fn node_scale(coeff_scale: f64, deg: usize) -> f64 {
    (1.0 / coeff_scale.max(1e-8)).powf(1.0 / deg.max(1) as f64).clamp(0.25, 4.0)
}

/// Numeric Sylvester resultant of two η-polynomials given by ascending
/// coefficients. Zero-degree edge cases follow the usual conventions.
pub(crate) fn sylvester_det(p: &[Complex64], q: &[Complex64]) -> Complex64 {
    use nalgebra::DMatrix;
    let np = p.len() - 1;
    let nq = q.len() - 1;
    if np == 0 && nq == 0 {
        return Complex64::ONE;
    }
    if np == 0 {
        return p[0].powu(nq as u32);
    }
    if nq == 0 {
        return q[0].powu(np as u32);
    }
    let n = np + nq;
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for row in 0..nq {
        for (k, &c) in p.iter().enumerate() {
            m[(row, row + np - k)] = c;
        }
    }
    for row in 0..np {
        for (k, &c) in q.iter().enumerate() {
            m[(nq + row, row + nq - k)] = c;
        }
    }
    m.lu().determinant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn hyperelliptic(alpha2: PolyZ) -> CurveEq {
        CurveEq::new(2, vec![PolyZ::zero(2), alpha2]).unwrap()
    }

    #[test]
    fn eval_and_deta() {
        // η² − ζ
        let c = CurveEq::new(1, vec![PolyZ::zero(1), PolyZ::from_real(&[0.0, -1.0])]).unwrap();
        assert_eq!(c.eval(c64(4.0, 0.0), c64(2.0, 0.0)), c64(0.0, 0.0));
        assert_eq!(c.deta(c64(4.0, 0.0), c64(2.0, 0.0)), c64(4.0, 0.0));
        assert_eq!(c.genus(), 0);
    }

    #[test]
    fn branch_points_of_quartic() {
        // η² = ζ⁴ − 1, branch points at the fourth roots of unity
        let c = hyperelliptic(PolyZ::from_real(&[1.0, 0.0, 0.0, 0.0, -1.0]));
        assert_eq!(c.genus(), 1);
        let mut bp = c.branch_points().unwrap();
        assert_eq!(bp.len(), 4);
        bp.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
        let expect = [c64(-1.0, 0.0), c64(0.0, -1.0), c64(0.0, 1.0), c64(1.0, 0.0)];
        for (b, e) in bp.iter().zip(expect) {
            assert!((b - e).norm() < 1e-8, "{b} vs {e}");
        }
    }
}
