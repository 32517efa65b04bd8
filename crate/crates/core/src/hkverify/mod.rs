//! Hyperkähler verification (stub).
