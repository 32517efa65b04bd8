//! Matrix-valued polynomials A(ζ) = Σ A_i ζ^i and the identities tying them
//! to their spectral curves.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::curve::{node_scale, CurveEq};
use super::poly::{interp_scaled_unity, unity_nodes, PolyZ};
use crate::{Error, Result};

type CMat = DMatrix<Complex64>;

#[derive(Debug, Clone)]
pub struct MatPoly {
    mats: Vec<CMat>,
    size: usize,
}

impl MatPoly {
    pub fn new(mats: Vec<CMat>) -> Result<Self> {
        let size = mats.first().map(|m| m.nrows()).ok_or_else(|| {
            Error::Invalid("matrix polynomial needs at least one coefficient".into())
        })?;
        for m in &mats {
            if m.nrows() != size || m.ncols() != size {
                return Err(Error::SizeMismatch(format!(
                    "all coefficients must be {size}×{size} square"
                )));
            }
        }
        Ok(MatPoly { mats, size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn degree(&self) -> usize {
        self.mats.len() - 1
    }

    pub fn mats(&self) -> &[CMat] {
        &self.mats
    }

    /// Horner evaluation Σ A_i ζ^i.
    pub fn eval(&self, zeta: Complex64) -> CMat {
        let mut acc = CMat::zeros(self.size, self.size);
        for m in self.mats.iter().rev() {
            acc = acc * zeta + m;
        }
        acc
    }

    /// Upper-left k×k principal minor, as a matrix polynomial.
    pub fn principal_minor(&self, k: usize) -> MatPoly {
        let mats = self.mats.iter().map(|m| m.view((0, 0), (k, k)).into_owned()).collect();
        MatPoly { mats, size: k }
    }

    pub fn entry_scale(&self) -> f64 {
        self.mats
            .iter()
            .flat_map(|m| m.iter())
            .map(|c| c.norm())
            .fold(1.0, f64::max)
    }
}

/// Characteristic polynomial of a numeric matrix via Faddeev–LeVerrier:
/// ascending coefficients of det(η·1 − M), and the adjugate of (η·1 − M)
/// pieces if requested elsewhere. O(n⁴), no eigensolve.
fn char_poly(m: &CMat) -> Vec<Complex64> {
    let n = m.nrows();
    let mut coeffs = vec![Complex64::ZERO; n + 1];
    coeffs[n] = Complex64::ONE;
    let mut b = CMat::identity(n, n);
    for k in 1..=n {
        let mb = m * &b;
        let c = -mb.trace() / Complex64::from(k as f64);
        coeffs[n - k] = c;
        b = mb + CMat::identity(n, n) * c;
    }
    coeffs
}

/// det(η·1 − A(ζ)) as a curve with deg α_i ≤ d·i, computed by evaluating the
/// characteristic polynomial at scaled roots of unity and interpolating.
pub fn char_curve(a: &MatPoly) -> CurveEq {
    let n = a.size();
    let d = a.degree();
    let bound = (d * n).max(1);
    let scale = node_scale(a.entry_scale(), bound);
    let nodes = unity_nodes(bound + 1, scale);
    // values[j][i] = coefficient of η^(n−i) at node j, i = 1..n
    let node_coeffs: Vec<Vec<Complex64>> =
        nodes.iter().map(|&z| char_poly(&a.eval(z))).collect();
    let mut alphas = Vec::with_capacity(n);
    for i in 1..=n {
        let vals: Vec<Complex64> = node_coeffs.iter().map(|c| c[n - i]).collect();
        let poly = interp_scaled_unity(&vals, scale);
        alphas.push(poly.with_deg_bound(d * i).unwrap_or_else(|_| {
            // interpolation noise above the bound is zeroed rather than fatal
            let mut p = PolyZ::zero(d * i);
            for a_idx in 0..=d * i {
                *p.coeff_mut(a_idx) = interp_scaled_unity(&vals, scale).coeff(a_idx);
            }
            p
        }));
    }
    CurveEq::new(d, alphas).expect("char_curve produces consistent degree bounds")
}

/// Classical adjoint via Faddeev–LeVerrier: adj(M)·M = det(M)·1.
pub fn adjugate(m: &CMat) -> CMat {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "adjugate needs a square matrix");
    if n == 0 {
        return m.clone();
    }
    if n == 1 {
        return CMat::identity(1, 1);
    }
    let mut b = CMat::identity(n, n);
    for k in 1..n {
        let mb = m * &b;
        let c = -mb.trace() / Complex64::from(k as f64);
        b = mb + CMat::identity(n, n) * c;
    }
    let sign = if (n - 1) % 2 == 0 { 1.0 } else { -1.0 };
    b * Complex64::from(sign)
}

/// Adjugate of (η·1 − M) without forming symbolic entries.
fn adjugate_res(m: &CMat, eta: Complex64) -> CMat {
    let n = m.nrows();
    adjugate(&(CMat::identity(n, n) * eta - m))
}

fn det_res(m: &CMat, eta: Complex64) -> Complex64 {
    let n = m.nrows();
    (CMat::identity(n, n) * eta - m).lu().determinant()
}

/// Residual of the Weinstein–Aronszajn formula at (ζ, η):
/// det(η−A) − [(η−c)·det(η−B) − x·adj(η−B)·y] with A = [[B, y], [x, c]].
pub fn wa_residual(a: &MatPoly, zeta: Complex64, eta: Complex64) -> Result<Complex64> {
    let n = a.size();
    if n < 2 {
        return Err(Error::SizeMismatch("Weinstein–Aronszajn needs size ≥ 2".into()));
    }
    let av = a.eval(zeta);
    let b = av.view((0, 0), (n - 1, n - 1)).into_owned();
    let y = av.view((0, n - 1), (n - 1, 1)).into_owned();
    let x = av.view((n - 1, 0), (1, n - 1)).into_owned();
    let c = av[(n - 1, n - 1)];
    let lhs = det_res(&av, eta);
    let quad = (&x * adjugate_res(&b, eta) * &y)[(0, 0)];
    let rhs = (eta - c) * det_res(&b, eta) - quad;
    Ok(lhs - rhs)
}

/// Residual of the last-column adjugate identity and its transpose mate:
/// adj(η−A)·e_n = ( −adj(η−B)·y ; det(η−B) ) and the analogous row version.
/// Returns the max of the two residual norms.
pub fn adjugate_column_residual(a: &MatPoly, zeta: Complex64, eta: Complex64) -> Result<f64> {
    let n = a.size();
    if n < 2 {
        return Err(Error::SizeMismatch("adjugate column identity needs size ≥ 2".into()));
    }
    let av = a.eval(zeta);
    let b = av.view((0, 0), (n - 1, n - 1)).into_owned();
    let y = av.view((0, n - 1), (n - 1, 1)).into_owned();
    let x = av.view((n - 1, 0), (1, n - 1)).into_owned();
    let adj_b = adjugate_res(&b, eta);
    let det_b = det_res(&b, eta);

    let full = adjugate_res(&av, eta);
    let mut col_res: f64 = 0.0;
    let top = -&adj_b * &y;
    for i in 0..n - 1 {
        col_res = col_res.max((full[(i, n - 1)] - top[(i, 0)]).norm());
    }
    col_res = col_res.max((full[(n - 1, n - 1)] - det_b).norm());

    // transpose version: adj(η−A)ᵀ e_n = ( −adj(η−B)ᵀ xᵀ ; det(η−B) )
    let top_t = -adj_b.transpose() * x.transpose();
    let mut row_res: f64 = 0.0;
    for i in 0..n - 1 {
        row_res = row_res.max((full[(n - 1, i)] - top_t[(i, 0)]).norm());
    }
    Ok(col_res.max(row_res))
}

/// The Gelfand–Zeitlin tower: characteristic curves of the nested principal
/// minors A_(1), …, A_(k).
pub fn gz_curves(a: &MatPoly) -> Vec<CurveEq> {
    (1..=a.size()).map(|k| char_curve(&a.principal_minor(k))).collect()
}
