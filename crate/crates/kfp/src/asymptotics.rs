//! Small-time expansion, large-field deviation, and long-time profile.
//!
//! The series coefficients tau_k (for T/|A|) and sigma_k (for S/|A|^2) are
//! evaluated in polynomial forms with the divisions by |A| and |A|^2 carried
//! out symbolically, so nothing blows up near |A| = 0.

use crate::core::{compute_aux, Params};
use crate::error::{Error, Result};
use crate::spectrum::eigenvalues_closed_form;

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc.round()
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

/// B_{+,k} = c1^{2k} + (-1)^k c2^{2k} and B_{-,k}/|A|, both as polynomials
/// in (A1, |A|^2).
fn b_plus_minus(a1: f64, w: f64, k: usize) -> (f64, f64) {
    let abs_a = w.sqrt();
    let mut plus = 0.0;
    let mut minus_over = 0.0;
    let scale = 0.5f64.powi(k as i32 - 1);
    let mut j = 0;
    while 2 * j <= k {
        plus += binomial(k, 2 * j) * a1.powi((k - 2 * j) as i32) * w.powi(j as i32);
        j += 1;
    }
    j = 0;
    while 2 * j + 1 <= k {
        minus_over +=
            binomial(k, 2 * j + 1) * a1.powi((k - 2 * j - 1) as i32) * w.powi(j as i32) * abs_a;
        j += 1;
    }
    // one power of |A| divided back out: B_- always carries an odd power
    (scale * plus, scale * minus_over / abs_a.max(f64::MIN_POSITIVE))
}

/// B_-k / |A| without forming |A| at all.
fn b_minus_over_abs(a1: f64, w: f64, k: usize) -> f64 {
    let scale = 0.5f64.powi(k as i32 - 1);
    let mut acc = 0.0;
    let mut j = 0;
    while 2 * j + 1 <= k {
        acc += binomial(k, 2 * j + 1) * a1.powi((k - 2 * j - 1) as i32) * w.powi(j as i32);
        j += 1;
    }
    scale * acc
}

/// D_k / |A|^2 where D_k = 4^{k-1} B_{+,k} - Re(A^k); the l = 0 terms cancel
/// identically, which is what makes the division exact.
fn d_over_w(a1: f64, w: f64, k: usize) -> f64 {
    let mut acc = 0.0;
    let mut l = 1;
    while 2 * l <= k {
        let mut inner = 0.0;
        let mut j = l;
        while 2 * j <= k {
            inner += binomial(k, 2 * j) * binomial(j, l);
            j += 1;
        }
        let coeff = 2.0f64.powi(k as i32 - 1) * binomial(k, 2 * l)
            - if l % 2 == 0 { inner } else { -inner };
        acc += coeff * a1.powi((k - 2 * l) as i32) * w.powi(l as i32 - 1);
        l += 1;
    }
    acc
}

/// Coefficients of t^{2k} in T/|A| and S/|A|^2.
pub fn tau_sigma(p: &Params, k: usize) -> (f64, f64) {
    let aux = compute_aux(p);
    let (a1, w) = (aux.a1, aux.abs_a * aux.abs_a);
    let a = p.a();
    if k == 0 {
        return (1.0, 0.0);
    }
    let b_plus = b_plus_minus(a1, w, k).0;
    let b_minus_over = b_minus_over_abs(a1, w, k);
    let fact = factorial(2 * k);
    let tau = (b_plus + (2.0 - a1) * b_minus_over) / (2.0 * fact);
    let sigma = (8.0 * a * d_over_w(a1, w, k)
        + 4.0f64.powi(k as i32 - 1) * ((2.0 - a1) * b_minus_over + b_plus))
        / fact;
    (tau, sigma)
}

fn series_sqrt_unit(u: &[f64]) -> Vec<f64> {
    // sqrt of a power series with constant term 1
    debug_assert!((u[0] - 1.0).abs() < 1e-12);
    let mut s = vec![0.0; u.len()];
    s[0] = 1.0;
    for m in 1..u.len() {
        let mut conv = 0.0;
        for i in 1..m {
            conv += s[i] * s[m - i];
        }
        s[m] = (u[m] - conv) / 2.0;
    }
    s
}

fn series_mul(x: &[f64], y: &[f64], len: usize) -> Vec<f64> {
    let mut out = vec![0.0; len];
    for (i, xi) in x.iter().enumerate().take(len) {
        for (j, yj) in y.iter().enumerate().take(len - i) {
            out[i + j] += xi * yj;
        }
    }
    out
}

/// Taylor coefficients n_0..n_order of t -> ||e^{-tM}||, built from the
/// tau/sigma series: (T + sqrt(S))/|A| = sum tau_k t^{2k} + t sqrt(u(t^2))
/// with u_k = sigma_{k+1}, then multiply by e^{-t} and take a square root.
pub fn norm_series_coeffs(p: &Params, order: usize) -> Vec<f64> {
    let half = order / 2 + 2;
    let mut u = vec![0.0; half];
    let mut w = vec![0.0; order + 1];
    for k in 0..half {
        let (tau, sigma_next) = tau_sigma(p, k);
        if 2 * k <= order {
            w[2 * k] = tau;
        }
        u[k] = tau_sigma(p, k + 1).1;
        let _ = sigma_next;
    }
    // sigma_1 = 1 identically, so u has unit constant term
    let s = series_sqrt_unit(&u);
    for (k, sk) in s.iter().enumerate() {
        if 2 * k + 1 <= order {
            w[2 * k + 1] += sk;
        }
    }
    let exp_neg: Vec<f64> = (0..=order)
        .map(|j| if j % 2 == 0 { 1.0 } else { -1.0 } / factorial(j))
        .collect();
    let sq = series_mul(&w, &exp_neg, order + 1);
    series_sqrt_unit(&sq)
}

/// Degree-six polynomial of the small-time expansion, no radius check.
pub(crate) fn small_t_poly(p: &Params, t: f64) -> f64 {
    let a = p.a();
    let b = p.b();
    let t3 = t * t * t;
    let t5 = t3 * t * t;
    1.0 - a / 12.0 * t3
        + (a * b * b / 360.0 + a * a / 240.0 + a / 120.0) * t5
        + a * a / 288.0 * t5 * t
}

/// Small-time norm, valid while bracket(A) t^2 <= 0.1.
pub fn small_t_norm(p: &Params, t: f64) -> Result<f64> {
    let aux = compute_aux(p);
    let value = aux.bracket() * t * t;
    if value > 0.1 {
        return Err(Error::OutOfRadius { value, radius: 0.1 });
    }
    Ok(small_t_poly(p, t))
}

/// Extremes of the signed deviation e^{(1-c1)t} ||e^{-tM}||^2 - 1 over a
/// time grid.
#[derive(Clone, Copy, Debug)]
pub struct DeviationProfile {
    pub sup: f64,
    pub min_signed: f64,
}

pub fn large_b_deviation(p: &Params, ts: &[f64]) -> Result<DeviationProfile> {
    let mut sup = f64::NEG_INFINITY;
    let mut min_signed = f64::INFINITY;
    for &t in ts {
        let dev = crate::propagator::rate_compensated_deviation(p, t)?;
        sup = sup.max(dev.abs());
        min_signed = min_signed.min(dev);
    }
    if !sup.is_finite() {
        return Err(Error::InvalidParams("empty time grid".into()));
    }
    Ok(DeviationProfile { sup, min_signed })
}

/// Long-time profile: the squared norm approaches R1 e^{-(1-c1)t} with
/// relative error controlled by E(t) = e^{-2 c1 t} + (1 + a^2) b^{-4} e^{-c1 t}.
#[derive(Clone, Copy, Debug)]
pub struct LongTimeEstimate {
    pub r0: f64,
    pub r1: f64,
    pub sqrt_r1: f64,
    pub c1: f64,
    a_sq_plus_one: f64,
    b4: f64,
}

pub fn long_time_estimate(p: &Params) -> Result<LongTimeEstimate> {
    let aux = compute_aux(p);
    if aux.abs_a == 0.0 {
        return Err(Error::Domain("|A| = 0: no spectral gap data".into()));
    }
    let (a1, abs_a, c1, c2) = (aux.a1, aux.abs_a, aux.c1, aux.c2);
    let r0 = 0.125 * (1.0 + (2.0 - a1) / abs_a + 8.0 * p.a() / (abs_a * abs_a));
    let r1 = (c2 * c2 + 1.0) / abs_a;
    // second route through r0; the two must agree to rounding
    let r1_alt = 0.25 * (1.0 + (2.0 - a1) / abs_a) + r0.max(0.0).sqrt();
    debug_assert!((r1 - r1_alt).abs() <= 1e-12 * r1.max(1.0));
    let _ = r1_alt;
    Ok(LongTimeEstimate {
        r0,
        r1,
        sqrt_r1: r1.sqrt(),
        c1,
        a_sq_plus_one: 1.0 + p.a() * p.a(),
        b4: p.b().powi(4),
    })
}

impl LongTimeEstimate {
    /// E(t); infinite when b = 0, which is the honest statement there.
    pub fn error_scale(&self, t: f64) -> f64 {
        (-2.0 * self.c1 * t).exp() + self.a_sq_plus_one / self.b4 * (-self.c1 * t).exp()
    }

    /// Second route to R1, exposed for validation.
    pub fn r1_via_r0(&self, p: &Params) -> f64 {
        let aux = compute_aux(p);
        0.25 * (1.0 + (2.0 - aux.a1) / aux.abs_a) + self.r0.max(0.0).sqrt()
    }
}

/// Residuals of the three auxiliary identities tying |A|, c1, c2 and
/// lambda_1 together; all vanish identically in exact arithmetic.
pub fn auxiliary_identities(p: &Params) -> [f64; 3] {
    let aux = compute_aux(p);
    let (a1, abs_a, c1, c2) = (aux.a1, aux.abs_a, aux.c1, aux.c2);
    let l1 = eigenvalues_closed_form(p).lambda1();
    [
        abs_a + 2.0 - a1 - 2.0 * (c2 * c2 + 1.0),
        4.0 * p.a() - (1.0 + c2 * c2) * (1.0 - c1 * c1),
        l1.norm_sqr() - (1.0 + c2 * c2) * (1.0 - c1) * (1.0 - c1) / 4.0,
    ]
}

/// Period 4 pi / sqrt(4a - 1) of the norm at zero field; requires b = 0
/// and a > 1/4.
pub fn periodicity_period(p: &Params) -> Result<f64> {
    if p.b() != 0.0 {
        return Err(Error::Domain("periodicity requires b = 0".into()));
    }
    if p.a() <= 0.25 {
        return Err(Error::Domain(
            "periodicity requires a > 1/4 (complex spectrum)".into(),
        ));
    }
    Ok(4.0 * std::f64::consts::PI / (4.0 * p.a() - 1.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propagator::norm_closed;
    use crate::spectrum::projector_norm;
    use proptest::prelude::*;

    fn params(a: f64, b: f64) -> Params {
        Params::new(a, b).unwrap()
    }

    #[test]
    fn tau_anchors() {
        for (a, b) in [(2.0, 3.0), (0.7, 0.3), (14.0, 5.0)] {
            let p = params(a, b);
            let (t0, s0) = tau_sigma(&p, 0);
            assert_eq!((t0, s0), (1.0, 0.0));
            let (t1, s1) = tau_sigma(&p, 1);
            assert!((t1 - 0.5).abs() < 1e-14);
            assert!((s1 - 1.0).abs() < 1e-13);
            let (t2, s2) = tau_sigma(&p, 2);
            assert!((t2 - (1.0 - 4.0 * a) / 24.0).abs() < 1e-13 * (1.0 + a));
            assert!((s2 - (1.0 - a) / 3.0).abs() < 1e-12 * (1.0 + a));
            let (t3, s3) = tau_sigma(&p, 3);
            let t3_ref = (1.0 - 4.0 * a * (2.0 - 4.0 * a - b * b)) / 720.0;
            let s3_ref = (4.0 * a * a - 17.0 * a + 4.0 + a * b * b) / 90.0;
            assert!((t3 - t3_ref).abs() < 1e-12 * (1.0 + t3_ref.abs()));
            assert!((s3 - s3_ref).abs() < 1e-11 * (1.0 + s3_ref.abs()));
        }
    }

    #[test]
    fn tau_sigma_match_direct_factors() {
        // partial sums of the series reproduce T/|A| and S/|A|^2 at small t
        let p = params(2.0, 3.0);
        let aux = compute_aux(&p);
        let t = 0.05;
        let nf = crate::propagator::norm_factors(&p, t).unwrap();
        let mut t_sum = 0.0;
        let mut s_sum = 0.0;
        for k in 0..12 {
            let (tau, sigma) = tau_sigma(&p, k);
            t_sum += tau * t.powi(2 * k as i32);
            s_sum += sigma * t.powi(2 * k as i32);
        }
        assert!((t_sum - nf.t_factor / aux.abs_a).abs() < 1e-13 * t_sum.abs());
        let s_ref = nf.s_factor / (aux.abs_a * aux.abs_a);
        assert!((s_sum - s_ref).abs() < 1e-13 * (1.0 + s_ref));
    }

    #[test]
    fn norm_series_leading_coefficients() {
        for (a, b) in [(1.0, 1.0), (3.0, 0.5), (0.4, 6.0)] {
            let p = params(a, b);
            let n = norm_series_coeffs(&p, 7);
            assert!((n[0] - 1.0).abs() < 1e-14);
            assert!(n[1].abs() < 1e-13);
            assert!(n[2].abs() < 1e-13);
            assert!((n[3] + a / 12.0).abs() < 1e-12 * (1.0 + a));
            assert!(n[4].abs() < 1e-12 * (1.0 + a));
            let n5 = a * b * b / 360.0 + a * a / 240.0 + a / 120.0;
            assert!((n[5] - n5).abs() < 1e-12 * (1.0 + n5));
            assert!((n[6] - a * a / 288.0).abs() < 1e-12 * (1.0 + a * a));
        }
    }

    #[test]
    fn norm_series_matches_closed_form() {
        let p = params(2.0, 3.0);
        let n = norm_series_coeffs(&p, 14);
        for &t in &[0.02f64, 0.05, 0.1] {
            let series: f64 = n
                .iter()
                .enumerate()
                .map(|(j, c)| c * t.powi(j as i32))
                .sum();
            let closed = {
                let nf = crate::propagator::norm_factors(&p, t).unwrap();
                ((-t).exp() * (nf.t_factor + nf.s_factor.sqrt()) / nf.abs_a).sqrt()
            };
            assert!(
                (series - closed).abs() < 1e-12,
                "t={t}: {:e}",
                (series - closed).abs()
            );
        }
    }

    #[test]
    fn small_t_radius_enforced() {
        let p = params(14.0, 5.0);
        assert!(small_t_norm(&p, 0.01).is_ok());
        match small_t_norm(&p, 1.0) {
            Err(Error::OutOfRadius { radius, .. }) => assert_eq!(radius, 0.1),
            other => panic!("expected OutOfRadius, got {other:?}"),
        }
    }

    #[test]
    fn deviation_scales_like_b_minus_four_past_transient() {
        // t >= 1 sits past the early spike at t ~ 1/b (which only decays
        // like b^-3); on this plateau the deviation scales like b^-4
        let ts: Vec<f64> = (0..=196).map(|i| 1.0 + i as f64 * 0.25).collect();
        let d1 = large_b_deviation(&params(8.0, 25.0), &ts).unwrap();
        let d2 = large_b_deviation(&params(8.0, 50.0), &ts).unwrap();
        let ratio = d1.sup / d2.sup;
        assert!((8.0..=32.0).contains(&ratio), "ratio {ratio}");
        assert!(d1.min_signed >= -1e-12);
        assert!(large_b_deviation(&params(8.0, 25.0), &[]).is_err());
    }

    #[test]
    fn long_time_routes_agree() {
        for (a, b) in [(8.0, 12.0), (2.0, 0.5), (0.3, 4.0)] {
            let p = params(a, b);
            let est = long_time_estimate(&p).unwrap();
            assert!((est.r1 - est.r1_via_r0(&p)).abs() < 1e-12 * est.r1.max(1.0));
            assert!((est.sqrt_r1 * est.sqrt_r1 - est.r1).abs() < 1e-13 * est.r1);
            // sqrt(R1) is the common norm of all four spectral projectors
            for j in 1..=4 {
                let pn = projector_norm(&p, j).unwrap();
                assert!((pn - est.sqrt_r1).abs() < 1e-10 * est.sqrt_r1);
            }
        }
        assert!(long_time_estimate(&params(0.25, 0.0)).is_err());
    }

    #[test]
    fn long_time_norm_settles_on_sqrt_r1() {
        let p = params(8.0, 12.0);
        let est = long_time_estimate(&p).unwrap();
        let t = 30.0;
        let aux = compute_aux(&p);
        let compensated =
            (crate::propagator::log_norm_stable(&p, t).unwrap() + (1.0 - aux.c1) / 2.0 * t).exp();
        assert!((compensated - est.sqrt_r1).abs() < 0.01 * est.sqrt_r1);
        assert!(est.error_scale(t) < est.error_scale(t / 2.0));
    }

    #[test]
    fn identity_residuals_vanish() {
        for (a, b) in [(1.0, 1.0), (14.0, 5.0), (0.1, 0.1), (30.0, 20.0)] {
            let res = auxiliary_identities(&params(a, b));
            let scale = 1.0 + a + b * b;
            for r in res {
                assert!(r.abs() < 1e-11 * scale, "a={a} b={b}: {res:?}");
            }
        }
    }

    #[test]
    fn period_values_and_domain() {
        let p = params(24.0, 0.0);
        let period = periodicity_period(&p).unwrap();
        assert!((period - 4.0 * std::f64::consts::PI / 95.0f64.sqrt()).abs() < 1e-15);
        // e^{t/2} ||e^{-tM}|| returns to 1 after each period
        for m in 1..=3 {
            let t = m as f64 * period;
            let n = norm_closed(&p, t).unwrap() * (t / 2.0).exp();
            assert!((n - 1.0).abs() < 1e-9, "m={m}: {n}");
        }
        assert!(periodicity_period(&params(0.2, 0.0)).is_err());
        assert!(periodicity_period(&params(24.0, 1.0)).is_err());
    }

    proptest! {
        #[test]
        fn small_t_poly_tracks_closed_form(a in 0.2f64..10.0, b in 0.0f64..10.0,
                                           t in 1e-3f64..0.05) {
            let p = params(a, b);
            let aux = compute_aux(&p);
            prop_assume!(aux.bracket() * t * t <= 0.1);
            let poly = small_t_norm(&p, t).unwrap();
            let closed = norm_closed(&p, t).unwrap();
            // remainder is O(bracket^{7/2} t^7)
            let bound = 10.0 * aux.bracket().powf(3.5) * t.powi(7) + 1e-13;
            prop_assert!((poly - closed).abs() <= bound,
                         "diff {:e} bound {:e}", (poly - closed).abs(), bound);
        }

        #[test]
        fn series_coefficients_are_finite(a in 0.2f64..20.0, b in 0.0f64..20.0) {
            let n = norm_series_coeffs(&params(a, b), 12);
            for c in n { prop_assert!(c.is_finite()); }
        }
    }
}
