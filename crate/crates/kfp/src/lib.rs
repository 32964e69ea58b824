//! Closed-form spectral analysis of the 4x4 magnetic Kramers-Fokker-Planck
//! matrix family M(a, b): eigenvalues, the matrix exponential e^{-tM} in a
//! six-coefficient basis decomposition, the exact operator norm, and its
//! small-time / large-field / long-time behaviour, all cross-checked against
//! brute-force numerical oracles.

pub mod asymptotics;
pub mod cli;
pub mod core;
pub mod error;
pub mod norm;
pub mod oracle;
pub mod propagator;
pub mod spectrum;

pub use error::{Error, Result};
