//! Exact-degree polynomial and matrix-polynomial algebra.

mod curve;
mod matpoly;
mod poly;
mod regularity;
mod resultant;
pub mod roots;

pub use curve::CurveEq;
pub use matpoly::{
    adjugate, adjugate_column_residual, char_curve, gz_curves, wa_residual, MatPoly,
};
pub use poly::PolyZ;
pub use regularity::{regularity_scan, RegularityReport};
pub use resultant::resultant_eta;
