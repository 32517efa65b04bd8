//! Generalised Legendre transform (stub).
