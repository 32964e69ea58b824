//! Brute-force reference implementations: Taylor scaling-and-squaring for the
//! matrix exponential and a cyclic Jacobi sweep for the operator norm.
//!
//! Nothing here depends on the closed forms it validates.

use crate::core::Matrix4;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Taylor terms after scaling to norm <= 1/2; 25 keeps truncation below 1e-16.
    pub taylor_terms: usize,
    /// Cap on Jacobi sweeps.
    pub svd_sweeps: usize,
    pub tol: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            taylor_terms: 25,
            svd_sweeps: 50,
            tol: 1e-14,
        }
    }
}

/// Scaling-and-squaring Taylor exponential.
pub fn expm(m: &Matrix4, cfg: &OracleConfig) -> Result<Matrix4> {
    let norm = m.inf_norm();
    if norm > 1e8 {
        return Err(Error::Overflow { norm });
    }
    let mut squarings = 0u32;
    let mut scale = 1.0;
    while norm * scale > 0.5 {
        squarings += 1;
        scale *= 0.5;
    }
    let x = m.scale(scale);

    let mut sum = Matrix4::identity();
    let mut term = Matrix4::identity();
    for k in 1..=cfg.taylor_terms {
        term = term.mul(&x).scale(1.0 / k as f64);
        sum = sum.add(&term);
    }
    for _ in 0..squarings {
        sum = sum.mul(&sum);
    }
    Ok(sum)
}

/// Eigenvalues of a symmetric 4x4 matrix by cyclic Jacobi rotations,
/// unsorted diagonal after convergence.
pub fn symmetric_eigenvalues(sym: &Matrix4, cfg: &OracleConfig) -> Result<[f64; 4]> {
    let mut g = *sym;
    let scale = g.frobenius_norm().max(f64::MIN_POSITIVE);
    for _ in 0..cfg.svd_sweeps {
        let off: f64 = {
            let mut s = 0.0;
            for i in 0..4 {
                for j in 0..4 {
                    if i != j {
                        s += g.0[i][j] * g.0[i][j];
                    }
                }
            }
            s.sqrt()
        };
        if off < cfg.tol * scale {
            return Ok([g.0[0][0], g.0[1][1], g.0[2][2], g.0[3][3]]);
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                let apq = g.0[p][q];
                if apq == 0.0 {
                    continue;
                }
                let app = g.0[p][p];
                let aqq = g.0[q][q];
                let theta = 0.5 * (aqq - app) / apq;
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // G <- R^T G R with the rotation in the (p, q) plane
                for k in 0..4 {
                    let gkp = g.0[k][p];
                    let gkq = g.0[k][q];
                    g.0[k][p] = c * gkp - s * gkq;
                    g.0[k][q] = s * gkp + c * gkq;
                }
                for k in 0..4 {
                    let gpk = g.0[p][k];
                    let gqk = g.0[q][k];
                    g.0[p][k] = c * gpk - s * gqk;
                    g.0[q][k] = s * gpk + c * gqk;
                }
            }
        }
    }
    Err(Error::NoConvergence {
        cap: cfg.svd_sweeps,
    })
}

/// Largest singular value: sqrt of the top eigenvalue of m^T m.
pub fn operator_norm(m: &Matrix4, cfg: &OracleConfig) -> Result<f64> {
    let gram = m.transpose().mul(m);
    let eigs = symmetric_eigenvalues(&gram, cfg)?;
    let top = eigs.iter().fold(0.0_f64, |acc, &e| acc.max(e));
    Ok(top.max(0.0).sqrt())
}

/// Both eigenvalues (each of multiplicity two) of
/// b1 (H_vv - H_xx) + b2 K + b3 J_J + b4 I.
pub fn intermediate_class_eigs(b1: f64, b2: f64, b3: f64, b4: f64) -> (f64, f64) {
    let root = (b1 * b1 + b2 * b2 + b3 * b3).sqrt();
    (b4 - root, b4 + root)
}
