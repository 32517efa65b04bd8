//! Sampled regularity test: every eigenvalue of A(ζ) geometrically simple,
//! probed at the discriminant roots plus extra sample points.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::matpoly::{char_curve, MatPoly};
use crate::{c64, Error, Result};

/// Relative singular-value threshold for numerical rank.
const RANK_SV_TOL: f64 = 1e-10;
/// Eigenvalues closer than this (relative) are treated as a cluster.
const EIG_CLUSTER_TOL: f64 = 1e-7;

#[derive(Debug, Clone)]
pub struct RegularityReport {
    /// Sampled verdict; `true` means "sampled-regular", never a proof.
    pub sampled_regular: bool,
    /// A failing ζ when not regular.
    pub witness: Option<Complex64>,
    /// ζ points actually tested.
    pub tested_points: usize,
}

fn rank(m: &DMatrix<Complex64>) -> usize {
    let sv = m.clone().singular_values();
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    if smax == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > RANK_SV_TOL * smax).count()
}

fn regular_at(a: &MatPoly, zeta: Complex64) -> Result<bool> {
    let n = a.size();
    let m = a.eval(zeta);
    let curve = char_curve(a);
    let eig = {
        let coeffs = curve.eta_coeffs_at(zeta);
        super::roots::poly_roots(&coeffs)?
    };
    let scale = eig.iter().map(|e| e.norm()).fold(1.0, f64::max);
    let mut seen: Vec<Complex64> = Vec::new();
    for &lambda in &eig {
        if seen.iter().any(|&s| (s - lambda).norm() < EIG_CLUSTER_TOL * scale) {
            continue;
        }
        seen.push(lambda);
        let shifted = &m - DMatrix::identity(n, n) * lambda;
        if rank(&shifted) != n - 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Tests A(ζ) at the roots of the ζ-discriminant of its characteristic curve
/// and at `samples` extra points. With `all_minors`, the same test is applied
/// to every principal minor A_(m) (the open set where the Gelfand–Zeitlin
/// tower is well behaved).
pub fn regularity_scan(a: &MatPoly, samples: usize, all_minors: bool) -> Result<RegularityReport> {
    let sizes: Vec<usize> = if all_minors { (1..=a.size()).collect() } else { vec![a.size()] };
    let mut tested = 0usize;
    for &k in &sizes {
        let minor = a.principal_minor(k);
        if k == 1 {
            continue; // 1×1 matrices are always regular
        }
        let disc = char_curve(&minor).discriminant_zeta();
        let mut points: Vec<Complex64> = Vec::new();
        if disc.is_zero(1e-13) {
            // identically degenerate fiber structure: probe generic points only
        } else {
            points = disc
                .roots()
                .map_err(|_| Error::Inconclusive("discriminant root-finding failed".into()))?;
        }
        for j in 0..samples.max(1) {
            // deterministic spread of extra sample points
            let angle = 2.399963229728653 * j as f64; // golden angle
            let radius = 0.37 + 0.91 * ((j * j + 1) as f64).sqrt().fract();
            points.push(Complex64::from_polar(radius, angle) + c64(0.01, 0.013));
        }
        for &z in &points {
            tested += 1;
            if !regular_at(&minor, z)? {
                return Ok(RegularityReport {
                    sampled_regular: false,
                    witness: Some(z),
                    tested_points: tested,
                });
            }
        }
    }
    Ok(RegularityReport { sampled_regular: true, witness: None, tested_points: tested })
}
