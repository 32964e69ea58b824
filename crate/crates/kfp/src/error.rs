use thiserror::Error;

/// Errors shared across all modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("resolvent root check failed: residual {residual:.3e} exceeds {tol:.3e}")]
    ResolventMismatch { residual: f64, tol: f64 },

    #[error("degenerate spectrum: |a - lambda^2| = {denom:.3e} too close to zero")]
    DegenerateSpectrum { denom: f64 },

    #[error("outside series radius: <A> t^2 = {value:.3e} exceeds {radius:.3e}")]
    OutOfRadius { value: f64, radius: f64 },

    #[error("matrix norm {norm:.3e} too large for the Taylor exponential")]
    Overflow { norm: f64 },

    #[error("Jacobi sweep cap {cap} exceeded before convergence")]
    NoConvergence { cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
