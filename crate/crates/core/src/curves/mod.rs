//! Spectral-curve geometry (stub while algebra builds).
