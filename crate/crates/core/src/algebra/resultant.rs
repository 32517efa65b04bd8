//! Sylvester resultant in η of two curve components, as a polynomial in ζ.
//! Its roots are the ζ-coordinates of intersection points.

use num_complex::Complex64;

use super::curve::{node_scale, sylvester_det, CurveEq};
use super::poly::{interp_scaled_unity, unity_nodes, PolyZ};
use crate::{Error, Result};

/// Res_η(P, Q), degree ≤ d·m_P·m_Q. A zero polynomial (shared component) is
/// a first-class return, not an error.
pub fn resultant_eta(p: &CurveEq, q: &CurveEq) -> Result<PolyZ> {
    if p.twist() != q.twist() {
        return Err(Error::Invalid(format!(
            "resultant needs curves over the same twist, got d={} and d={}",
            p.twist(),
            q.twist()
        )));
    }
    let deg = p.twist() * p.degree_eta() * q.degree_eta();
    let scale = node_scale(p.coeff_scale().max(q.coeff_scale()), deg.max(1));
    let nodes = unity_nodes(deg + 1, scale);
    let values: Vec<Complex64> = nodes
        .iter()
        .map(|&z| sylvester_det(&p.eta_coeffs_at(z), &q.eta_coeffs_at(z)))
        .collect();
    interp_scaled_unity(&values, scale).with_deg_bound(deg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn line(p0: f64, p1: f64, p2: f64) -> CurveEq {
        // η + α_1(ζ), i.e. η = −α_1
        CurveEq::new(2, vec![PolyZ::from_real(&[p0, p1, p2])]).unwrap()
    }

    #[test]
    fn linear_case_is_difference() {
        // P = η − p(ζ), Q = η − q(ζ): Res = p − q up to sign convention
        let p = line(-1.0, -2.0, -3.0); // η = 1 + 2ζ + 3ζ²
        let q = line(-0.5, 1.0, 0.0); // η = 0.5 − ζ
        let r = resultant_eta(&p, &q).unwrap();
        // Res_η(η − p, η − q) = q − p evaluated through the Sylvester sign
        let z = c64(0.7, 0.2);
        let pval = c64(1.0, 0.0) + z * 2.0 + z * z * 3.0;
        let qval = c64(0.5, 0.0) - z;
        assert!((r.eval(z).norm() - (pval - qval).norm()).abs() < 1e-10);
    }

    #[test]
    fn shared_component_gives_zero() {
        // P = η² − ζ², Q = η − ζ divides P
        let p = CurveEq::new(2, vec![PolyZ::zero(2), PolyZ::from_real(&[0.0, 0.0, -1.0])])
            .unwrap();
        let q = line(0.0, -1.0, 0.0);
        let r = resultant_eta(&p, &q).unwrap();
        assert!(r.is_zero(1e-12));
    }

    #[test]
    fn degree_bound_and_oracle() {
        // m=2 vs m=1 over d=2: degree ≤ 4; compare against direct evaluation
        let p = CurveEq::new(
            2,
            vec![
                PolyZ::new(vec![c64(0.1, 0.0), c64(0.0, 0.3), c64(-0.2, 0.0)]),
                PolyZ::new(vec![
                    c64(-1.0, 0.2),
                    c64(0.4, 0.0),
                    c64(0.0, -0.5),
                    c64(0.1, 0.1),
                    c64(0.9, 0.0),
                ]),
            ],
        )
        .unwrap();
        let q = line(0.3, -0.8, 0.5);
        let r = resultant_eta(&p, &q).unwrap();
        assert_eq!(r.deg_bound(), 4);
        // direct: Res_η(P, η−e) over monic linear q equals P(ζ, e(ζ)) up to sign
        let z = c64(-0.3, 0.6);
        let e = -(c64(0.3, 0.0) + z * c64(-0.8, 0.0) + z * z * c64(0.5, 0.0));
        assert!((r.eval(z) - p.eval(z, e)).norm() < 1e-9);
    }
}
