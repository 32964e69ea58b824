//! Closed-form matrix exponential of -tM via the six-coefficient basis
//! decomposition, and the exact operator norm through the T/S factors.

use num_complex::Complex64;

use crate::core::{compute_aux, AuxQuantities, Matrix4, Params};
use crate::error::{Error, Result};
use crate::spectrum::eigenvalues_closed_form;

/// Basis matrices of the decomposition; K and K_J appear only in the
/// intermediate matrix class used by the norm derivation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisTag {
    Hvv,
    Hxx,
    J,
    JJ,
    Jvv,
    Jxx,
    K,
    KJ,
}

pub fn basis_matrix(tag: BasisTag) -> Matrix4 {
    let rows = match tag {
        BasisTag::Hvv => [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ],
        BasisTag::Hxx => [
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ],
        BasisTag::J => [
            [0.0, 0.0, -1.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ],
        BasisTag::JJ => [
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, -1.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0],
        ],
        BasisTag::Jvv => [
            [0.0, -1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ],
        BasisTag::Jxx => [
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
            [0.0, 0.0, 1.0, 0.0],
        ],
        BasisTag::K => [
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ],
        BasisTag::KJ => [
            [0.0, 0.0, 0.0, -1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0],
        ],
    };
    Matrix4(rows)
}

/// Lagrange-interpolation building blocks of e^{-tM}.
#[derive(Clone, Copy, Debug)]
pub struct PropagatorCoefficients {
    pub x1: Complex64,
    pub x2: Complex64,
    pub l: Complex64,
    pub o: Complex64,
    /// (e^{-t lambda_1} + e^{-t lambda_2}) / 2
    pub ch: Complex64,
    /// (e^{-t lambda_1} - e^{-t lambda_2}) / 2
    pub sh: Complex64,
    pub t: f64,
}

/// Real coefficients of e^{-tM} over (H_vv, J, J_J, J_vv, J_xx, H_xx + H_vv).
#[derive(Clone, Copy, Debug)]
pub struct ExpDecomposition {
    pub g: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
    pub h: f64,
    pub k: f64,
    pub t: f64,
}

/// The pair (T, S) with ||e^{-tM}||^2 = e^{-t} (T + sqrt(S)) / |A|.
#[derive(Clone, Copy, Debug)]
pub struct NormFactors {
    pub t_factor: f64,
    pub s_factor: f64,
    pub abs_a: f64,
}

fn require_nonzero_b(p: &Params) -> Result<()> {
    if p.b() == 0.0 {
        return Err(Error::Domain(
            "decomposition denominators vanish at b = 0".into(),
        ));
    }
    Ok(())
}

fn require_nondegenerate(aux: &AuxQuantities) -> Result<()> {
    if aux.abs_a == 0.0 {
        return Err(Error::Domain(
            "|A| = 0 (a = 1/4, b = 0): closed form undefined".into(),
        ));
    }
    Ok(())
}

/// X1, X2, L, O and the hyperbolic-like pair at time t >= 0.
pub fn coefficients(p: &Params, t: f64) -> Result<PropagatorCoefficients> {
    require_nonzero_b(p)?;
    let aux = compute_aux(p);
    require_nondegenerate(&aux)?;
    let (a, b) = (p.a(), p.b());
    let spec = eigenvalues_closed_form(p);
    let (l1, l2) = (spec.lambda1(), spec.lambda2());
    let e1 = (-t * l1).exp();
    let e2 = (-t * l2).exp();
    let c = aux.c_complex();
    let two_i_bc = Complex64::new(0.0, 2.0 * b) * c;
    let x1 = -l2 * e1 / (two_i_bc * a);
    let x2 = l1 * e2 / (two_i_bc * a);
    let l = (e2 - e1) / two_i_bc;
    let o = x1 + x2;
    Ok(PropagatorCoefficients {
        x1,
        x2,
        l,
        o,
        ch: (e1 + e2) / 2.0,
        sh: (e1 - e2) / 2.0,
        t,
    })
}

/// g = 2b(b Re L - Im L), d = 2b sqrt(a) Im L, e = -2b sqrt(a) Re L,
/// f = 2b(Re L + b Im L) - 2ab Re O, h = -2ab Re O, k = 2ab Im O.
pub fn decomposition(p: &Params, t: f64) -> Result<ExpDecomposition> {
    let coeff = coefficients(p, t)?;
    let (a, b) = (p.a(), p.b());
    let sa = a.sqrt();
    let (lr, li) = (coeff.l.re, coeff.l.im);
    let (or, oi) = (coeff.o.re, coeff.o.im);
    Ok(ExpDecomposition {
        g: 2.0 * b * (b * lr - li),
        d: 2.0 * b * sa * li,
        e: -2.0 * b * sa * lr,
        f: 2.0 * b * (lr + b * li) - 2.0 * a * b * or,
        h: -2.0 * a * b * or,
        k: 2.0 * a * b * oi,
        t,
    })
}

/// Linear combination over the basis matrices.
pub fn assemble(dec: &ExpDecomposition) -> Matrix4 {
    basis_matrix(BasisTag::Hvv)
        .scale(dec.g + dec.k)
        .add(&basis_matrix(BasisTag::J).scale(dec.d))
        .add(&basis_matrix(BasisTag::JJ).scale(dec.e))
        .add(&basis_matrix(BasisTag::Jvv).scale(dec.f))
        .add(&basis_matrix(BasisTag::Jxx).scale(dec.h))
        .add(&basis_matrix(BasisTag::Hxx).scale(dec.k))
}

/// T and S exactly as printed, with S clamped to zero when roundoff
/// produces a tiny negative value.
pub fn norm_factors(p: &Params, t: f64) -> Result<NormFactors> {
    let aux = compute_aux(p);
    require_nondegenerate(&aux)?;
    let a = p.a();
    let (a1, abs_a, c1, c2) = (aux.a1, aux.abs_a, aux.c1, aux.c2);
    let t_factor = 0.5
        * ((abs_a - a1 + 2.0) * (c1 * t).cosh() + (abs_a + a1 - 2.0) * (c2 * t).cos());
    let mut s_factor = 8.0 * a * (1.0 - (c1 * t).cosh() * (c2 * t).cos())
        + 0.25 * (2.0 - a1) * abs_a * ((2.0 * c1 * t).cosh() - (2.0 * c2 * t).cos())
        + (2.0 * a + 0.25 * abs_a * abs_a) * ((2.0 * c1 * t).cosh() + (2.0 * c2 * t).cos() - 2.0);
    if s_factor < 0.0 {
        let clamp_scale = abs_a * abs_a * (2.0 * c1 * t).cosh();
        debug_assert!(s_factor >= -1e-12 * clamp_scale);
        let _ = clamp_scale;
        s_factor = 0.0;
    }
    Ok(NormFactors {
        t_factor,
        s_factor,
        abs_a,
    })
}

/// T and S with the dominant exponential e^{c1 t} (resp. e^{2 c1 t})
/// factored out, finite for t up to 1e6.
pub(crate) fn norm_factors_rescaled(p: &Params, t: f64) -> Result<NormFactors> {
    let aux = compute_aux(p);
    require_nondegenerate(&aux)?;
    let a = p.a();
    let (a1, abs_a, c1, c2) = (aux.a1, aux.abs_a, aux.c1, aux.c2);
    let e1 = (-c1 * t).exp();
    let e2 = e1 * e1;
    let e3 = e2 * e1;
    let e4 = e2 * e2;
    let cos1 = (c2 * t).cos();
    let cos2 = (2.0 * c2 * t).cos();
    // e^{-c1 t} T
    let t_factor =
        0.25 * (abs_a - a1 + 2.0) * (1.0 + e2) + 0.5 * (abs_a + a1 - 2.0) * e1 * cos1;
    // e^{-2 c1 t} S
    let mut s_factor = 8.0 * a * (e2 - 0.5 * (e1 + e3) * cos1)
        + 0.25 * (2.0 - a1) * abs_a * (0.5 * (1.0 + e4) - e2 * cos2)
        + (2.0 * a + 0.25 * abs_a * abs_a) * (0.5 * (1.0 + e4) + e2 * cos2 - 2.0 * e2);
    if s_factor < 0.0 {
        s_factor = 0.0;
    }
    Ok(NormFactors {
        t_factor,
        s_factor,
        abs_a,
    })
}

/// ||e^{-tM}|| = sqrt(e^{-t} (T + sqrt(S)) / |A|).
///
/// Near t = 0 (bracket(A) t^2 < 1e-8) the T + sqrt(S) - |A| cancellation
/// swamps the closed form, so the small-time polynomial takes over.
pub fn norm_closed(p: &Params, t: f64) -> Result<f64> {
    let aux = compute_aux(p);
    require_nondegenerate(&aux)?;
    if aux.bracket() * t * t < 1e-8 {
        return Ok(crate::asymptotics::small_t_poly(p, t));
    }
    let nf = norm_factors(p, t)?;
    Ok(((-t).exp() * (nf.t_factor + nf.s_factor.sqrt()) / nf.abs_a).sqrt())
}

/// log ||e^{-tM}||, overflow-free for t up to 1e6.
pub fn log_norm_stable(p: &Params, t: f64) -> Result<f64> {
    let aux = compute_aux(p);
    let nf = norm_factors_rescaled(p, t)?;
    let c1 = aux.c1;
    Ok(0.5 * (-(1.0 - c1) * t + (nf.t_factor + nf.s_factor.sqrt()).ln() - nf.abs_a.ln()))
}

/// Signed deviation e^{(1-c1) t} ||e^{-tM}||^2 - 1, evaluated through the
/// rescaled factors so it stays accurate for large c1 t.
pub fn rate_compensated_deviation(p: &Params, t: f64) -> Result<f64> {
    let nf = norm_factors_rescaled(p, t)?;
    Ok((nf.t_factor + nf.s_factor.sqrt()) / nf.abs_a - 1.0)
}

/// The P1..P4 route of the norm, kept as an independent algebraic path for
/// validation against the T/S formula.
pub fn norm_p_route(p: &Params, t: f64) -> Result<f64> {
    let coeff = coefficients(p, t)?;
    let (a, b) = (p.a(), p.b());
    let sa = a.sqrt();
    let (l, o) = (coeff.l, coeff.o);
    let l_sq = l.norm_sqr();
    let o_lbar = o * l.conj();
    let p1 = -4.0 * b * b * sa * l_sq;
    let p2 = b * p1 - 8.0 * b * b * a * sa * o_lbar.im;
    let p3 = 4.0 * b * b * (b * b + 1.0) * l_sq
        + 8.0 * a * b * b * (b * o_lbar.im - o_lbar.re);
    let p4 = p3 + 8.0 * a * b * b * (l_sq + a * o.norm_sqr());
    let rho = (p1 * p1 + p2 * p2 + 0.25 * p3 * p3).sqrt() + 0.5 * p4;
    Ok(rho.max(0.0).sqrt())
}
