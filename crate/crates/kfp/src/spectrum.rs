//! Closed-form eigenvalues of the model matrix, a Ferrari quartic solver used
//! as an independent cross-check, eigenvectors, spectral projector norms and
//! the generalized eigenvalue enumeration.

use num_complex::Complex64;

use crate::core::{compute_aux, AuxQuantities, Params};
use crate::error::{Error, Result};

/// The four eigenvalues, ordered so that lambda_1 carries the minimal real
/// part (1 - c1)/2, with lambda_3 = conj(lambda_1) and lambda_4 = conj(lambda_2).
#[derive(Clone, Copy, Debug)]
pub struct Spectrum {
    pub lambda: [Complex64; 4],
}

impl Spectrum {
    pub fn lambda1(&self) -> Complex64 {
        self.lambda[0]
    }

    pub fn lambda2(&self) -> Complex64 {
        self.lambda[1]
    }
}

/// Coefficients of z^4 + p z^2 + q z + r after the shift lambda = z + 1/2.
#[derive(Clone, Copy, Debug)]
pub struct QuarticCoeffs {
    pub p: f64,
    pub q: f64,
    pub r: f64,
}

impl QuarticCoeffs {
    pub fn from_params(params: &Params) -> Self {
        let (a, b) = (params.a(), params.b());
        QuarticCoeffs {
            p: 0.5 * (2.0 * b * b + 4.0 * a - 1.0),
            q: b * b,
            r: (4.0 * b * b + 16.0 * a * a - 8.0 * a + 1.0) / 16.0,
        }
    }

    /// The analytic resolvent-cubic root for this matrix family.
    pub fn resolvent_root(params: &Params) -> f64 {
        params.a() - 0.25
    }
}

fn spectrum_from_aux(p: &Params, aux: &AuxQuantities) -> Spectrum {
    let b = p.b();
    let l1 = Complex64::new(0.5 * (1.0 - aux.c1), -0.5 * (b + aux.c2));
    let l2 = Complex64::new(0.5 * (1.0 + aux.c1), -0.5 * (b - aux.c2));
    Spectrum {
        lambda: [l1, l2, l1.conj(), l2.conj()],
    }
}

/// lambda_1 = (1 - c1 - i(b + c2))/2, lambda_2 = (1 + c1 - i(b - c2))/2,
/// and their conjugates.
pub fn eigenvalues_closed_form(p: &Params) -> Spectrum {
    spectrum_from_aux(p, &compute_aux(p))
}

/// min real part over the spectrum, (1 - c1)/2.
pub fn spectral_abscissa(p: &Params) -> f64 {
    0.5 * (1.0 - compute_aux(p).c1)
}

/// Ferrari factorization of z^4 + p z^2 + q z + r given a root y0 of the
/// resolvent cubic -8y^3 + 4py^2 + 8ry - 4pr + q^2.
///
/// When the two quadratic factors coincide (|2 y0 - p| below 1e-13 and the
/// linear term vanishes) the solver falls back to the biquadratic split.
pub fn solve_quartic_ferrari(c: &QuarticCoeffs, y0: f64) -> Result<[Complex64; 4]> {
    let (p, q, r) = (c.p, c.q, c.r);
    let residual =
        -8.0 * y0.powi(3) + 4.0 * p * y0 * y0 + 8.0 * r * y0 - 4.0 * p * r + q * q;
    let scale = 8.0 * y0.abs().powi(3)
        + 4.0 * p.abs() * y0 * y0
        + 8.0 * r.abs() * y0.abs()
        + 4.0 * p.abs() * r.abs()
        + q * q
        + 1.0;
    let tol = 1e-9;
    if residual.abs() > tol * scale {
        return Err(Error::ResolventMismatch {
            residual: residual.abs(),
            tol: tol * scale,
        });
    }

    let s_sq = 2.0 * y0 - p;
    let roots = if s_sq.abs() < 1e-13 {
        // biquadratic path (q = 0 for this family when b = 0)
        let disc = Complex64::new(p * p - 4.0 * r, 0.0).sqrt();
        let z_sq_plus = (-Complex64::new(p, 0.0) + disc) / 2.0;
        let z_sq_minus = (-Complex64::new(p, 0.0) - disc) / 2.0;
        let zp = z_sq_plus.sqrt();
        let zm = z_sq_minus.sqrt();
        [zp, -zp, zm, -zm]
    } else {
        let s = Complex64::new(s_sq, 0.0).sqrt();
        let half_q_over_s = Complex64::new(q, 0.0) / (2.0 * s);
        // z^2 + s z + (y0 - q/(2s)) and z^2 - s z + (y0 + q/(2s))
        let c_plus = Complex64::new(y0, 0.0) - half_q_over_s;
        let c_minus = Complex64::new(y0, 0.0) + half_q_over_s;
        let d_plus = (s * s - 4.0 * c_plus).sqrt();
        let d_minus = (s * s - 4.0 * c_minus).sqrt();
        [
            (-s + d_plus) / 2.0,
            (-s - d_plus) / 2.0,
            (s + d_minus) / 2.0,
            (s - d_minus) / 2.0,
        ]
    };

    for z in &roots {
        let val = ((z * z + p) * z + q) * z + r;
        if val.norm() > 1e-9 * (1.0 + r.abs()) {
            return Err(Error::ResolventMismatch {
                residual: val.norm(),
                tol: 1e-9 * (1.0 + r.abs()),
            });
        }
    }
    Ok(roots)
}

/// Leading-order eigenvalues for large |b|:
/// lambda_1 ~ a/b^2 - i(-a/b), lambda_2 ~ 1 - a/b^2 - i(b + a/b),
/// plus conjugates.
pub fn eigenvalue_asymptotics_large_b(p: &Params) -> Result<Spectrum> {
    let (a, b) = (p.a(), p.b());
    if b == 0.0 {
        return Err(Error::Domain("large-b asymptotics need b != 0".into()));
    }
    let l1 = Complex64::new(a / (b * b), a / b);
    let l2 = Complex64::new(1.0 - a / (b * b), -(b + a / b));
    Ok(Spectrum {
        lambda: [l1, l2, l1.conj(), l2.conj()],
    })
}

/// v_j = ((l^2 - l + a)/(b sqrt(a)), -l/sqrt(a), -(l^2 - l + a)/(b l), 1).
pub fn eigenvectors(p: &Params) -> Result<[[Complex64; 4]; 4]> {
    let (a, b) = (p.a(), p.b());
    if b == 0.0 {
        return Err(Error::Domain(
            "eigenvector formula divides by b; use eigenvectors_zero_field".into(),
        ));
    }
    let sa = a.sqrt();
    let spec = eigenvalues_closed_form(p);
    let mut vs = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (j, &l) in spec.lambda.iter().enumerate() {
        let w = l * l - l + a;
        vs[j] = [
            w / (b * sa),
            -l / sa,
            -w / (b * l),
            Complex64::new(1.0, 0.0),
        ];
    }
    Ok(vs)
}

/// Change-of-basis matrix for b = 0, a != 1/4, diagonalizing M_{a,0} as
/// diag(lambda_1, lambda_1, lambda_2, lambda_2).
pub fn eigenvectors_zero_field(p: &Params) -> Result<[[Complex64; 4]; 4]> {
    let (a, b) = (p.a(), p.b());
    if b != 0.0 {
        return Err(Error::Domain("zero-field basis requires b = 0".into()));
    }
    if a == 0.25 {
        return Err(Error::Domain(
            "a = 1/4 is the defective point; no eigenbasis exists".into(),
        ));
    }
    let sa = a.sqrt();
    let root = Complex64::new(1.0 - 4.0 * a, 0.0).sqrt();
    let l1 = (Complex64::new(1.0, 0.0) - root) / 2.0;
    let l2 = (Complex64::new(1.0, 0.0) + root) / 2.0;
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    Ok([
        [zero, -l1 / sa, zero, -l2 / sa],
        [-l1 / sa, zero, -l2 / sa, zero],
        [zero, one, zero, one],
        [one, zero, one, zero],
    ])
}

/// ||Pi_j|| = (a + |lambda_j|^2) / |a - lambda_j^2|; equal for all j.
pub fn projector_norm(p: &Params, j: usize) -> Result<f64> {
    assert!((1..=4).contains(&j), "eigenvalue index must be 1..=4");
    if p.b() == 0.0 {
        return Err(Error::Domain(
            "projector norms need distinct eigenvalues (b != 0)".into(),
        ));
    }
    let a = p.a();
    let l = eigenvalues_closed_form(p).lambda[j - 1];
    let numer = a + l.norm_sqr();
    let denom = (Complex64::new(a, 0.0) - l * l).norm();
    if denom < 1e-14 * numer {
        return Err(Error::DegenerateSpectrum { denom });
    }
    Ok(numer / denom)
}

/// All generalized eigenvalues sum(lambda_j k_j) over k in {0..kmax}^4,
/// deduplicated within 1e-12 absolute and sorted by (re, im).
pub fn operator_spectrum_multiindex(p: &Params, kmax: usize) -> Vec<Complex64> {
    let spec = eigenvalues_closed_form(p);
    let n = kmax + 1;
    let mut alphas = Vec::with_capacity(n * n * n * n);
    for k1 in 0..n {
        for k2 in 0..n {
            for k3 in 0..n {
                for k4 in 0..n {
                    let alpha = spec.lambda[0] * k1 as f64
                        + spec.lambda[1] * k2 as f64
                        + spec.lambda[2] * k3 as f64
                        + spec.lambda[3] * k4 as f64;
                    alphas.push(alpha);
                }
            }
        }
    }
    alphas.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    let mut out: Vec<Complex64> = Vec::with_capacity(alphas.len());
    for alpha in alphas {
        match out.last() {
            Some(last)
                if (alpha.re - last.re).abs() <= 1e-12 && (alpha.im - last.im).abs() <= 1e-12 => {}
            _ => out.push(alpha),
        }
    }
    out
}

/// max over j of min over k of |xs[j] - ys[k]|, a multiset distance for tests
/// and the validate suite.
pub fn multiset_distance(xs: &[Complex64], ys: &[Complex64]) -> f64 {
    xs.iter()
        .map(|x| {
            ys.iter()
                .map(|y| (x - y).norm())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}
