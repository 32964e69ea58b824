//! Pluggable norm evaluation strategies, keyed by name so the CLI can pick
//! one with --method.

use serde::Serialize;

use crate::core::{build_matrix, compute_aux, Params};
use crate::error::Result;
use crate::oracle::{expm, operator_norm, OracleConfig};
use crate::propagator::{log_norm_stable, norm_closed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    ClosedForm,
    Oracle,
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Source::ClosedForm => "closed-form",
            Source::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct NormSample {
    pub t: f64,
    pub norm: f64,
    pub log_norm: f64,
    pub source: Source,
}

pub trait NormStrategy {
    fn name(&self) -> &'static str;
    fn sample(&self, p: &Params, t: f64) -> Result<NormSample>;
}

/// Exact T/S formulas; errors out where they are undefined (|A| = 0).
pub struct ClosedFormStrategy;

impl NormStrategy for ClosedFormStrategy {
    fn name(&self) -> &'static str {
        "closed-form"
    }

    fn sample(&self, p: &Params, t: f64) -> Result<NormSample> {
        Ok(NormSample {
            t,
            norm: norm_closed(p, t)?,
            log_norm: log_norm_stable(p, t)?,
            source: Source::ClosedForm,
        })
    }
}

/// Brute force: Taylor exponential plus Jacobi singular value.
pub struct OracleStrategy {
    pub config: OracleConfig,
}

impl OracleStrategy {
    pub fn new() -> Self {
        OracleStrategy {
            config: OracleConfig::default(),
        }
    }
}

impl Default for OracleStrategy {
    fn default() -> Self {
        Self::new()
    }
}

impl NormStrategy for OracleStrategy {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn sample(&self, p: &Params, t: f64) -> Result<NormSample> {
        let e = expm(&build_matrix(p).scale(-t), &self.config)?;
        let norm = operator_norm(&e, &self.config)?;
        Ok(NormSample {
            t,
            norm,
            log_norm: norm.ln(),
            source: Source::Oracle,
        })
    }
}

/// Closed form wherever it is defined, oracle at the degenerate points
/// (b = 0 keeps the closed norm valid, but |A| = 0 does not).
pub struct AutoStrategy {
    oracle: OracleStrategy,
}

impl AutoStrategy {
    pub fn new() -> Self {
        AutoStrategy {
            oracle: OracleStrategy::new(),
        }
    }
}

impl Default for AutoStrategy {
    fn default() -> Self {
        Self::new()
    }
}

impl NormStrategy for AutoStrategy {
    fn name(&self) -> &'static str {
        "auto"
    }

    fn sample(&self, p: &Params, t: f64) -> Result<NormSample> {
        if compute_aux(p).abs_a == 0.0 {
            return self.oracle.sample(p, t);
        }
        ClosedFormStrategy.sample(p, t)
    }
}

pub const STRATEGY_NAMES: [&str; 3] = ["auto", "closed-form", "oracle"];

pub fn strategy_by_name(name: &str) -> Option<Box<dyn NormStrategy>> {
    match name {
        "auto" => Some(Box::new(AutoStrategy::new())),
        "closed-form" => Some(Box::new(ClosedFormStrategy)),
        "oracle" => Some(Box::new(OracleStrategy::new())),
        _ => None,
    }
}
