//! Offset trigonometric sums `Σ sin(nx+y)/n^s`, `Σ cos(nx+y)/n^s`, sine sums
//! at rational multiples of 2π, and log-sine integrals.

use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::numerics::{sin_2pi, sin_pi, EvalOptions, Harmonics, Neumaier, SeriesValue};
use crate::quadrature::integrate_strict;
use crate::zeta::{hurwitz_zeta, power_harmonics};
use std::f64::consts::PI;

/// Both offset sums, and when defined the Hurwitz-zeta closed forms
/// `(sin side, cos side)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HansenSums {
    pub sin_sum: SeriesValue,
    pub cos_sum: SeriesValue,
    /// `None` when `cosec(πs)` is infinite (integer `s`).
    pub closed_form: Option<(f64, f64)>,
}

/// `Σ sin(nx+y)/n^s` and `Σ cos(nx+y)/n^s` for `s > 0`, `0 < x < 2π`.
///
/// The closed forms are
/// `(2π)^s cosec(πs)/(2Γ(s)) [cos(y-πs/2) ζ(1-s, x/2π) - cos(y+πs/2) ζ(1-s, 1-x/2π)]` and
/// `(2π)^s cosec(πs)/(2Γ(s)) [sin(y+πs/2) ζ(1-s, 1-x/2π) - sin(y-πs/2) ζ(1-s, x/2π)]`.
/// Sums with `s ≤ 1.5` are tail averaged.
pub fn hansen_offset_sums(s: f64, x: f64, y: f64, opts: &EvalOptions) -> Result<HansenSums> {
    opts.validate()?;
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain(
            "hansen_offset_sums",
            format!("requires s > 0, got {s}"),
        ));
    }
    if !(x > 0.0 && x < 2.0 * PI) || !y.is_finite() {
        return Err(Error::domain(
            "hansen_offset_sums",
            format!("requires 0 < x < 2π, got {x}"),
        ));
    }
    let t = x / (2.0 * PI);
    let pair = power_harmonics(Harmonics::all(t), s, opts);
    let (sy, cy) = y.sin_cos();
    let sin_sum = pair.sin.affine(cy, 0.0).plus(pair.cos.affine(sy, 0.0));
    let cos_sum = pair.cos.affine(cy, 0.0).plus(pair.sin.affine(-sy, 0.0));
    let closed_form = if s.fract() == 0.0 {
        None
    } else {
        let k = (2.0 * PI).powf(s) / (2.0 * gamma(s)? * sin_pi(s));
        let (za, zb) = (hurwitz_zeta(1.0 - s, t)?, hurwitz_zeta(1.0 - s, 1.0 - t)?);
        let h = 0.5 * PI * s;
        let lhs = k * ((y - h).cos() * za - (y + h).cos() * zb);
        let rhs = k * ((y + h).sin() * zb - (y - h).sin() * za);
        Some((lhs, rhs))
    };
    Ok(HansenSums {
        sin_sum,
        cos_sum,
        closed_form,
    })
}

/// `(Σ sin(2πnp/q)/n^s, q^(-s) Σ_{j=1}^q sin(2πjp/q) ζ(s, j/q))` for
/// `1 ≤ p ≤ q` and `s > 1`.
pub fn rational_sine_zeta_sum(p: u32, q: u32, s: f64, opts: &EvalOptions) -> Result<(f64, f64)> {
    opts.validate()?;
    if !(1 <= p && p <= q) {
        return Err(Error::domain(
            "rational_sine_zeta_sum",
            format!("requires 1 ≤ p ≤ q, got p={p}, q={q}"),
        ));
    }
    if !(s > 1.0) {
        return Err(Error::domain(
            "rational_sine_zeta_sum",
            format!("requires s > 1, got {s}"),
        ));
    }
    let direct = power_harmonics(Harmonics::all(f64::from(p) / f64::from(q)), s, opts)
        .sin
        .value;
    let mut acc = Neumaier::new();
    for j in 1..=q {
        let r = (u64::from(j) * u64::from(p) % u64::from(q)) as f64 / f64::from(q);
        let w = sin_2pi(r);
        if w != 0.0 {
            acc.add(w * hurwitz_zeta(s, f64::from(j) / f64::from(q))?);
        }
    }
    Ok((direct, f64::from(q).powf(-s) * acc.value()))
}

/// Log-sine integral `Ls_n(θ) = -∫_0^θ log^(n-1)|2 sin(t/2)| dt` for
/// `n ∈ {2, 3}` and `0 < θ ≤ π`, by tanh-sinh quadrature.
pub fn log_sine_integral(n: u32, theta: f64) -> Result<f64> {
    if !(n == 2 || n == 3) {
        return Err(Error::domain(
            "log_sine_integral",
            format!("order must be 2 or 3, got {n}"),
        ));
    }
    if !(theta > 0.0 && theta <= PI) {
        return Err(Error::domain(
            "log_sine_integral",
            format!("requires 0 < θ ≤ π, got {theta}"),
        ));
    }
    let opts = EvalOptions::default().with_abs_tol(1e-13);
    let v = integrate_strict(
        |t| (2.0 * sin_pi(t / (2.0 * PI))).ln().powi(n as i32 - 1),
        0.0,
        theta,
        &opts,
    )?;
    Ok(-v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::euler_transform_alternating;
    use crate::trig::clausen;

    #[test]
    fn offset_sums_against_closed_forms() {
        let o = EvalOptions::default();
        let h = hansen_offset_sums(2.5, 1.2, 0.7, &o).unwrap();
        let (a, b) = h.closed_form.unwrap();
        assert!((h.sin_sum.value - a).abs() < 1e-10);
        assert!((h.cos_sum.value - b).abs() < 1e-10);
        // y = 0 leaves the plain sine and cosine sums
        let h0 = hansen_offset_sums(3.0, 1.2, 0.0, &o).unwrap();
        assert!(h0.closed_form.is_none());
        let c3 = clausen(3, 1.2, &o).unwrap().value;
        assert!((h0.cos_sum.value - c3).abs() < 1e-15);
        let h1 = hansen_offset_sums(1.0, 0.4 * PI, 0.0, &o).unwrap();
        assert!((h1.sin_sum.value - 0.5 * PI * 0.6).abs() < 1e-4);
        assert!(hansen_offset_sums(2.0, 0.0, 0.0, &o).is_err());
    }

    #[test]
    fn rational_sums() {
        let o = EvalOptions::default();
        let (l, r) = rational_sine_zeta_sum(3, 3, 2.0, &o).unwrap();
        assert_eq!((l, r), (0.0, 0.0));
        let (l, r) = rational_sine_zeta_sum(1, 4, 2.0, &o).unwrap();
        let odd = euler_transform_alternating(|k| 1.0 / ((2 * k - 1) as f64).powi(2), &o).value;
        assert!((l - odd).abs() < 1e-12 && (r - odd).abs() < 1e-12);
        for (p, q, s) in [(2, 5, 2.5), (3, 7, 3.0)] {
            let (l, r) = rational_sine_zeta_sum(p, q, s, &o).unwrap();
            assert!((l - r).abs() < 1e-11, "p={p} q={q}");
        }
        assert!(rational_sine_zeta_sum(5, 3, 2.0, &o).is_err());
    }

    #[test]
    fn log_sine_values() {
        assert!(log_sine_integral(2, PI).unwrap().abs() < 1e-12);
        assert!((log_sine_integral(3, PI).unwrap() + PI.powi(3) / 12.0).abs() < 1e-11);
        let cl = clausen(2, PI / 2.0, &EvalOptions::default()).unwrap().value;
        assert!((log_sine_integral(2, PI / 2.0).unwrap() - cl).abs() < 1e-12);
        assert!(log_sine_integral(4, 1.0).is_err());
    }
}
