//! Roots of univariate complex polynomials via the companion matrix
//! (complex Schur), with Newton polish.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{Error, Result};

/// All roots (with multiplicity) of Σ coeffs[a]·z^a. The leading coefficient
/// must be nonzero; lower-degree content is the caller's business.
pub fn poly_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[n];
    if lead.norm() == 0.0 {
        return Err(Error::Invalid("zero leading coefficient".into()));
    }
    if n == 1 {
        return Ok(vec![-coeffs[0] / lead]);
    }
    if n == 2 {
        return Ok(quadratic(coeffs[0] / lead, coeffs[1] / lead));
    }
    let mut comp = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        comp[(i, i - 1)] = Complex64::ONE;
    }
    for i in 0..n {
        comp[(i, n - 1)] = -coeffs[i] / lead;
    }
    let schur = comp.schur();
    let t = schur.unpack().1;
    let mut roots: Vec<Complex64> = (0..n).map(|i| t[(i, i)]).collect();
    for r in roots.iter_mut() {
        *r = newton_polish(coeffs, *r);
    }
    Ok(roots)
}

/// Monic quadratic z² + bz + c, with the numerically stable branch.
fn quadratic(c: Complex64, b: Complex64) -> Vec<Complex64> {
    let disc = (b * b - 4.0 * c).sqrt();
    // pick the sign making |b ± disc| large
    let q = if (b + disc).norm() >= (b - disc).norm() { -(b + disc) / 2.0 } else { -(b - disc) / 2.0 };
    if q.norm() == 0.0 {
        vec![Complex64::ZERO, Complex64::ZERO]
    } else {
        vec![q, c / q]
    }
}

fn newton_polish(coeffs: &[Complex64], z0: Complex64) -> Complex64 {
    let mut z = z0;
    for _ in 0..3 {
        let (mut p, mut dp) = (Complex64::ZERO, Complex64::ZERO);
        for &c in coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        if dp.norm() < 1e-300 {
            break;
        }
        let step = p / dp;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        // near multiple roots Newton overshoots; clamp to keep polish harmless
        if step.norm() > 0.1 * (1.0 + z.norm()) {
            break;
        }
        z -= step;
    }
    z
}
