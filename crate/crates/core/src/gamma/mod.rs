//! Log-gamma, digamma and trigamma by reference and series routes, and the
//! Barnes G-function.

mod barnes;

pub use barnes::{
    alexeiewsky, log_barnes_g_fourier, log_barnes_g_hasse, log_barnes_g_product, log_barnes_g_zeta,
};

use crate::bernoulli::bernoulli_numbers;
use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::numerics::{
    compensated_sum, harmonic_tail_averaged, sin_pi, EvalOptions, Harmonics, SeriesValue,
};
use crate::zeta::hasse::{binomial_double_sum, shift_for};
use crate::zeta::{hurwitz_zeta, HASSE_SHIFT};
use std::f64::consts::PI;

/// Argument above which the asymptotic expansions are used directly.
const ASYMPTOTIC_FROM: f64 = 7.0;

fn check_positive(function: &'static str, t: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(function, format!("requires t > 0, got {t}")));
    }
    Ok(())
}

/// `log Γ(t)` for `t > 0` by Stirling's series after upward recurrence.
///
/// Relative error is near 1e-15 away from the zeros at `t = 1, 2`, where the
/// absolute error is a few ulps of `log Γ(7)`.
pub fn log_gamma(t: f64) -> Result<f64> {
    check_positive("log_gamma", t)?;
    let k = shift_for(t, ASYMPTOTIC_FROM);
    let x = t + k as f64;
    let b = bernoulli_numbers();
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for j in 1..=15 {
        corr += b[2 * j] / ((2 * j * (2 * j - 1)) as f64) * p;
        p *= inv2;
    }
    let stirling = (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + corr;
    if k == 0 {
        return Ok(stirling);
    }
    let prod: f64 = (0..k).map(|j| t + j as f64).product();
    Ok(stirling - prod.ln())
}

/// `Γ(x)` for `x > 0`.
pub fn gamma(x: f64) -> Result<f64> {
    check_positive("gamma", x)?;
    Ok(log_gamma(x)?.exp())
}

/// Digamma `ψ(t)` for `t > 0` by its asymptotic series after upward
/// recurrence.
pub fn digamma(t: f64) -> Result<f64> {
    check_positive("digamma", t)?;
    let k = shift_for(t, ASYMPTOTIC_FROM);
    let x = t + k as f64;
    let b = bernoulli_numbers();
    let inv2 = 1.0 / (x * x);
    let mut p = inv2;
    let mut corr = 0.0;
    for j in 1..=15 {
        corr += b[2 * j] / (2 * j) as f64 * p;
        p *= inv2;
    }
    let asym = x.ln() - 0.5 / x - corr;
    Ok(asym - compensated_sum((0..k).map(|j| 1.0 / (t + j as f64))))
}

/// Trigamma `ψ'(t) = ζ(2, t)`.
pub fn trigamma(t: f64) -> Result<f64> {
    check_positive("trigamma", t)?;
    hurwitz_zeta(2.0, t)
}

/// Kummer's Fourier series
/// `log Γ(t) = ½ log(π/sin πt) + (γ + log 2π)(½ - t) + (1/π) Σ log n/n sin 2πnt`
/// on `0 < t < 1`, with the conditionally convergent sum tail averaged.
pub fn log_gamma_kummer(t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::domain(
            "log_gamma_kummer",
            format!("the series holds only on 0 < t < 1, got {t}"),
        ));
    }
    let c = Constants::get();
    let sum = harmonic_tail_averaged(Harmonics::all(t), |n| (n as f64).ln() / n as f64, opts).sin;
    let head = 0.5 * (PI / sin_pi(t)).ln() + (c.euler_gamma + c.log_two_pi) * (0.5 - t);
    Ok(sum.affine(1.0 / PI, head))
}

/// Kummer route for any non-integer `t > 0`: the series is evaluated at the
/// fractional part and `log Γ(t+1) = log Γ(t) + log t` carries it upward.
pub fn log_gamma_kummer_recurrence(t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    check_positive("log_gamma_kummer_recurrence", t)?;
    let f = t.fract();
    if f == 0.0 {
        return Err(Error::domain(
            "log_gamma_kummer_recurrence",
            format!("integer argument {t} has no fractional part"),
        ));
    }
    let n = t.trunc() as usize;
    let v = log_gamma_kummer(f, opts)?;
    Ok(v.affine(1.0, compensated_sum((0..n).map(|j| (f + j as f64).ln()))))
}

/// Binomial double-sum route
/// `log Γ(t) = Σ_n 1/(n+1) Σ_k C(n,k)(-1)^k (t+k) log(t+k) + ½ - t + ½ log 2π`
/// for `0 < t ≤ 2`, evaluated at a shifted argument `a = t + K ≥ 20` with
/// `log Γ(t) = log Γ(a) - Σ_{j<K} log(t+j)`.
pub fn log_gamma_hasse(t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    if !(t > 0.0 && t <= 2.0) {
        return Err(Error::domain(
            "log_gamma_hasse",
            format!("requires 0 < t ≤ 2, got {t}"),
        ));
    }
    let k = shift_for(t, HASSE_SHIFT);
    let a = t + k as f64;
    let v = binomial_double_sum(
        |j| {
            let x = a + j as f64;
            x * x.ln()
        },
        |n| 1.0 / (n + 1) as f64,
        opts,
    );
    let c = Constants::get();
    let back = compensated_sum((0..k).map(|j| (t + j as f64).ln()));
    Ok(v.affine(1.0, 0.5 - a + 0.5 * c.log_two_pi - back))
}

/// Binomial double-sum route `ψ(t) = Σ_n 1/(n+1) Σ_k C(n,k)(-1)^k log(t+k)`,
/// evaluated at `a = t + K ≥ 20` with `ψ(t) = ψ(a) - Σ_{j<K} 1/(t+j)`.
pub fn digamma_hasse(t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    check_positive("digamma_hasse", t)?;
    let k = shift_for(t, HASSE_SHIFT);
    let a = t + k as f64;
    let v = binomial_double_sum(|j| (a + j as f64).ln(), |n| 1.0 / (n + 1) as f64, opts);
    let back = compensated_sum((0..k).map(|j| 1.0 / (t + j as f64)));
    Ok(v.affine(1.0, -back))
}

/// Which evaluator produced a [`GammaPoint`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaRoute {
    Reference,
    Kummer,
    Hasse,
}

/// `log Γ(t)` tagged with the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaPoint {
    pub t: f64,
    pub log_gamma: f64,
    pub route: GammaRoute,
}

impl GammaPoint {
    pub fn evaluate(t: f64, route: GammaRoute, opts: &EvalOptions) -> Result<Self> {
        let log_gamma = match route {
            GammaRoute::Reference => log_gamma(t)?,
            GammaRoute::Kummer => log_gamma_kummer(t, opts)?.value,
            GammaRoute::Hasse => log_gamma_hasse(t, opts)?.value,
        };
        Ok(Self {
            t,
            log_gamma,
            route,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GRID: [f64; 11] = [0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99];

    #[test]
    fn log_gamma_values() {
        assert!((log_gamma(0.5).unwrap() - 0.5 * PI.ln()).abs() < 4e-15);
        assert!(log_gamma(1.0).unwrap().abs() < 5e-15);
        assert!(log_gamma(2.0).unwrap().abs() < 5e-15);
        let r = log_gamma(0.3).unwrap() + log_gamma(0.7).unwrap();
        assert!((r - (PI / (0.3 * PI).sin()).ln()).abs() < 1e-14);
        // log 10! and log Γ(30.5)
        assert!((log_gamma(11.0).unwrap() - 3628800f64.ln()).abs() < 1e-14);
        assert!((log_gamma(1e-8).unwrap() - 18.420680738180208).abs() < 1e-14);
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
    }

    #[test]
    fn log_gamma_recurrence_holds() {
        for &t in &GRID {
            let a = log_gamma(t + 1.0).unwrap();
            let b = log_gamma(t).unwrap() + t.ln();
            assert!((a - b).abs() < 1e-14, "t={t}");
        }
    }

    #[test]
    fn digamma_values() {
        let g = -digamma(1.0).unwrap();
        assert!((digamma(0.5).unwrap() - (-g - 2.0 * 2f64.ln())).abs() < 1e-14);
        // mean of 1/k - log(1 + 1/k) partial sums approaches γ
        let partial: f64 =
            compensated_sum((1..=100_000).map(|k| 1.0 / k as f64 - (1.0 / k as f64).ln_1p()));
        assert!((partial - g).abs() < 1e-4);
        assert!((trigamma(0.7).unwrap() - hurwitz_zeta(2.0, 0.7).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn digamma_is_log_gamma_derivative() {
        for &t in &[0.3, 1.7, 5.2, 20.0] {
            let h = 1e-5;
            let fd = (log_gamma(t + h).unwrap() - log_gamma(t - h).unwrap()) / (2.0 * h);
            assert!((fd - digamma(t).unwrap()).abs() < 1e-8, "t={t}");
        }
    }

    #[test]
    fn kummer_examples() {
        let o = EvalOptions::default();
        assert_eq!(log_gamma_kummer(0.5, &o).unwrap().value, 0.5 * PI.ln());
        let q =
            log_gamma_kummer(0.25, &o).unwrap().value + log_gamma_kummer(0.75, &o).unwrap().value;
        assert!((q - (PI.ln() + 0.5 * 2f64.ln())).abs() < 1e-14);
        for &t in &GRID {
            let v = log_gamma_kummer(t, &o).unwrap();
            assert!((v.value - log_gamma(t).unwrap()).abs() < 1e-4, "t={t}");
            let r = v.value + log_gamma_kummer(1.0 - t, &o).unwrap().value;
            assert!((r - (PI / sin_pi(t)).ln()).abs() < 2e-4);
        }
        assert!(log_gamma_kummer(1.25, &o).is_err());
        let v = log_gamma_kummer_recurrence(1.25, &o).unwrap();
        assert!((v.value - log_gamma(1.25).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn hasse_routes() {
        let o = EvalOptions::default();
        assert!(log_gamma_hasse(1.0, &o).unwrap().value.abs() < 1e-6);
        assert!((log_gamma_hasse(0.5, &o).unwrap().value - 0.5 * PI.ln()).abs() < 1e-6);
        for &t in GRID.iter().chain(&[1.5, 2.0]) {
            let v = log_gamma_hasse(t, &o).unwrap();
            assert!(
                (v.value - log_gamma(t).unwrap()).abs() < 1e-8,
                "t={t} {v:?}"
            );
            let d = digamma_hasse(t, &o).unwrap();
            assert!((d.value - digamma(t).unwrap()).abs() < 1e-8, "t={t} {d:?}");
        }
    }

    #[test]
    fn gamma_point_routes_agree() {
        let o = EvalOptions::default();
        let r = GammaPoint::evaluate(0.3, GammaRoute::Reference, &o).unwrap();
        let k = GammaPoint::evaluate(0.3, GammaRoute::Kummer, &o).unwrap();
        let h = GammaPoint::evaluate(0.3, GammaRoute::Hasse, &o).unwrap();
        assert!((r.log_gamma - k.log_gamma).abs() < 1e-4);
        assert!((r.log_gamma - h.log_gamma).abs() < 1e-8);
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::zeta::hurwitz_zeta_sderiv;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn kummer_reflection(t in 0.1f64..0.9) {
            let o = EvalOptions::default();
            let sum = log_gamma_kummer(t, &o).unwrap().value + log_gamma_kummer(1.0 - t, &o).unwrap().value;
            prop_assert!((sum - (PI / sin_pi(t)).ln()).abs() <= 2e-4);
        }
    }

    proptest! {
        #[test]
        fn log_gamma_recurrence(t in 0.01f64..20.0) {
            let d = log_gamma(t + 1.0).unwrap() - log_gamma(t).unwrap() - t.ln();
            prop_assert!(d.abs() <= 1e-13 * log_gamma(t + 1.0).unwrap().abs().max(1.0));
        }

        #[test]
        fn lerch_identity(t in 0.01f64..3.0) {
            let d = hurwitz_zeta_sderiv(1, 0.0, t).unwrap() - (log_gamma(t).unwrap() - 0.5 * (2.0 * PI).ln());
            prop_assert!(d.abs() <= 1e-9);
        }
    }
}
