//! Isospectral flows (stub).
