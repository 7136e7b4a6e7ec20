//! Barnes G-function: `log G(1+t)` by infinite product, binomial double sum,
//! Fourier series and Hurwitz zeta derivative.

use super::log_gamma;
use crate::bernoulli::bernoulli_poly;
use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::numerics::{
    harmonic_sum, log_power_tail, power_tail, EvalOptions, Harmonics, Neumaier, SeriesValue,
};
use crate::zeta::hasse::{binomial_double_sum, shift_for};
use crate::zeta::{hurwitz_zeta_sderiv, CORRECTED_TERMS, HASSE_SHIFT};
use std::f64::consts::PI;

/// `log(1+x) - x + x²/2`, accurate for small `x`.
fn log1p_cubic(x: f64) -> f64 {
    if x.abs() > 0.1 {
        return x.ln_1p() - x + 0.5 * x * x;
    }
    let mut acc = 0.0;
    let mut p = x * x * x;
    let mut j = 3;
    loop {
        let term = p / j as f64;
        acc += if j % 2 == 1 { term } else { -term };
        if term.abs() <= 1e-18 * acc.abs() || j > 40 {
            break;
        }
        p *= x;
        j += 1;
    }
    acc
}

/// `log G(1+t)` from the Weierstrass product
/// `G(1+t) = (2π)^(t/2) exp(-½(γt² + t² + t)) Π_k (1+t/k)^k exp(t²/(2k) - t)`
/// for `t > -1`.
///
/// Takes `K = opts.max_terms` factors in log form. The tail
/// `Σ_{k>K} k(log(1+t/k) - t/k + t²/(2k²))` is added from its expansion
/// `Σ_{j≥3} (-1)^(j+1) t^j/j ζ(j-1, K+1)`.
pub fn log_barnes_g_product(t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    if !(t > -1.0) || !t.is_finite() {
        return Err(Error::domain(
            "log_barnes_g_product",
            format!("requires t > -1, got {t}"),
        ));
    }
    let c = Constants::get();
    let kmax = opts.max_terms;
    let mut acc = Neumaier::new();
    for k in 1..=kmax {
        let kf = k as f64;
        acc.add(kf * log1p_cubic(t / kf));
    }
    let kf = kmax as f64;
    let mut tail = 0.0;
    let mut tj = t * t * t;
    let mut last = 0.0;
    for j in 3..=8 {
        let term = tj / j as f64 * power_tail((j - 1) as f64, kf);
        tail += if j % 2 == 1 { term } else { -term };
        last = term.abs();
        tj *= t;
    }
    acc.add(tail);
    let head = 0.5 * t * c.log_two_pi - 0.5 * (c.euler_gamma * t * t + t * t + t);
    Ok(SeriesValue {
        value: acc.value() + head,
        err_estimate: last,
        terms_used: kmax,
        converged: true,
    })
}

/// `log G(1+t) = ζ'(-1) - ζ'(-1,t) + t log Γ(t)` for `t > 0`.
pub fn log_barnes_g_zeta(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(
            "log_barnes_g_zeta",
            format!("requires t > 0, got {t}"),
        ));
    }
    let c = Constants::get();
    Ok(c.zeta_prime_minus1 - hurwitz_zeta_sderiv(1, -1.0, t)? + t * log_gamma(t)?)
}

/// Trigonometric series for `log G(1+t)` on `0 ≤ t ≤ 1`:
/// `-(1/4π) Σ sin 2πnt/n² + (1/2π²)(log 2π + γ - 3/2) Σ cos 2πnt/n²
///  + (1/2π²) Σ cos 2πnt log n/n² + t log Γ(t) + B_2(t)/4 + ζ'(-1)`.
/// At `t = 0` the term `t log Γ(t)` takes its limit 0.
pub fn log_barnes_g_fourier(t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::domain(
            "log_barnes_g_fourier",
            format!("requires 0 ≤ t ≤ 1, got {t}"),
        ));
    }
    let c = Constants::get();
    let h = Harmonics::all(t);
    let n = opts.max_terms.min(CORRECTED_TERMS);
    let p2 = harmonic_sum(
        h,
        |k| 1.0 / (k as f64 * k as f64),
        n,
        |k| power_tail(2.0, k as f64),
    );
    let pl = harmonic_sum(
        h,
        |k| (k as f64).ln() / (k as f64 * k as f64),
        n,
        |k| log_power_tail(2.0, k as f64),
    );
    let k2 = 1.0 / (2.0 * PI * PI);
    let tlg = if t == 0.0 { 0.0 } else { t * log_gamma(t)? };
    let head = tlg + 0.25 * bernoulli_poly(2, t)? + c.zeta_prime_minus1;
    let v = p2
        .sin
        .affine(-1.0 / (4.0 * PI), head)
        .plus(
            p2.cos
                .affine(k2 * (c.log_two_pi + c.euler_gamma - 1.5), 0.0),
        )
        .plus(pl.cos.affine(k2, 0.0));
    Ok(SeriesValue { terms_used: n, ..v })
}

/// Binomial double-sum route
/// `log G(1+t) = -½ Σ_n 1/(n+1) Σ_k C(n,k)(-1)^k (t+k)² log(t+k) + t log Γ(t) + B_2(t)/4 + ζ'(-1)`
/// for `0 < t ≤ 2`.
///
/// The double sum `D(t)` equals `2ζ'(-1,t) - ζ(-1,t)`; it is evaluated at
/// `a = t + K ≥ 20` and carried back with
/// `D(t) = D(a) - Σ_{j<K} (t+j)(2 log(t+j) + 1)`.
pub fn log_barnes_g_hasse(t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    if !(t > 0.0 && t <= 2.0) {
        return Err(Error::domain(
            "log_barnes_g_hasse",
            format!("requires 0 < t ≤ 2, got {t}"),
        ));
    }
    let c = Constants::get();
    let k = shift_for(t, HASSE_SHIFT);
    let a = t + k as f64;
    let d = binomial_double_sum(
        |j| {
            let x = a + j as f64;
            x * x * x.ln()
        },
        |n| 1.0 / (n + 1) as f64,
        opts,
    );
    let mut back = Neumaier::new();
    for j in 0..k {
        let x = t + j as f64;
        back.add(x * (2.0 * x.ln() + 1.0));
    }
    let head = t * log_gamma(t)? + 0.25 * bernoulli_poly(2, t)? + c.zeta_prime_minus1;
    Ok(d.affine(-0.5, head + 0.5 * back.value()))
}

/// Closed form of `∫_0^x log Γ(t) dt`:
/// `x(1-x)/2 + (x/2) log 2π - log G(1+x) + x log Γ(x)` for `0 ≤ x ≤ 1`.
pub fn alexeiewsky(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(
            "alexeiewsky",
            format!("requires 0 ≤ x ≤ 1, got {x}"),
        ));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let c = Constants::get();
    Ok(0.5 * x * (1.0 - x) + 0.5 * x * c.log_two_pi - log_barnes_g_zeta(x)? + x * log_gamma(x)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const GRID: [f64; 11] = [0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99];

    fn g_half() -> f64 {
        let c = Constants::get();
        2f64.ln() / 24.0 + 0.25 * PI.ln() + 1.5 * c.zeta_prime_minus1
    }

    #[test]
    fn product_values() {
        let o = EvalOptions::default();
        assert_eq!(log_barnes_g_product(0.0, &o).unwrap().value, 0.0);
        assert!(log_barnes_g_product(1.0, &o).unwrap().value.abs() < 1e-12);
        assert!((log_barnes_g_product(0.5, &o).unwrap().value - g_half()).abs() < 1e-12);
    }

    #[test]
    fn routes_agree() {
        let o = EvalOptions::default();
        for &t in &GRID {
            let z = log_barnes_g_zeta(t).unwrap();
            let p = log_barnes_g_product(t, &o).unwrap().value;
            let f = log_barnes_g_fourier(t, &o).unwrap().value;
            let h = log_barnes_g_hasse(t, &o).unwrap().value;
            assert!((z - p).abs() < 1e-11, "product t={t} {}", z - p);
            assert!((z - f).abs() < 1e-11, "fourier t={t} {}", z - f);
            assert!((z - h).abs() < 1e-8, "hasse t={t} {}", z - h);
        }
    }

    #[test]
    fn fourier_endpoints() {
        let o = EvalOptions::default();
        assert!(log_barnes_g_fourier(1.0, &o).unwrap().value.abs() < 1e-12);
        assert!(log_barnes_g_fourier(0.0, &o).unwrap().value.abs() < 1e-12);
        assert!((log_barnes_g_fourier(0.5, &o).unwrap().value - g_half()).abs() < 1e-12);
    }

    #[test]
    fn recurrence_and_half() {
        let o = EvalOptions::default();
        for &t in &GRID {
            let a = log_barnes_g_product(t, &o).unwrap().value;
            let b = log_barnes_g_product(t - 1.0, &o).unwrap().value + log_gamma(t).unwrap();
            assert!((a - b).abs() < 1e-8, "t={t}");
        }
        let c = Constants::get();
        let gh = log_barnes_g_zeta(0.5).unwrap() - log_gamma(0.5).unwrap();
        let closed = 2f64.ln() / 24.0 - 0.25 * PI.ln() + 1.5 * c.zeta_prime_minus1;
        assert!((gh - closed).abs() < 1e-13);
    }

    #[test]
    fn alexeiewsky_values() {
        let c = Constants::get();
        assert!((alexeiewsky(1.0).unwrap() - 0.5 * c.log_two_pi).abs() < 1e-14);
        assert_eq!(alexeiewsky(0.0).unwrap(), 0.0);
        assert!(alexeiewsky(1.5).is_err());
    }
}
