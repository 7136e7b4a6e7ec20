//! Fourier expansions of `ζ(s, t)` and `ζ'(-1, t)` on `0 < t ≤ 1`.

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::numerics::{
    cos_pi, harmonic_sum, harmonic_tail_averaged, log_power_tail, power_tail, sin_pi, EvalOptions,
    Harmonics, SeriesValue, TrigPair,
};
use std::f64::consts::PI;

/// Explicit terms used by tail-corrected absolutely convergent sums.
pub(crate) const CORRECTED_TERMS: usize = 20_000;

/// Exponent at or below which the power-law Fourier series are tail averaged.
pub(crate) const AVERAGING_EXPONENT: f64 = 1.5;

/// `Σ (cos, sin)(2π m_n τ) / m_n^p` over the progression `h`, using tail
/// averaging when `p ≤ 1.5` and the series oscillates, tail correction
/// otherwise.
pub(crate) fn power_harmonics(h: Harmonics, p: f64, opts: &EvalOptions) -> TrigPair {
    let (step, offset) = (h.step as f64, h.offset as f64);
    let g = move |n: usize| (step * n as f64 + offset).powf(-p);
    if p <= AVERAGING_EXPONENT && !h.is_flat() {
        harmonic_tail_averaged(h, g, opts)
    } else {
        let n = opts.max_terms.min(CORRECTED_TERMS);
        // Σ_{n>N} (step n + offset)^-p = step^-p Σ_{k≥1} (N + offset/step + k)^-p
        let tail = move |n: usize| step.powf(-p) * power_tail(p, n as f64 + offset / step);
        harmonic_sum(h, g, n, tail)
    }
}

/// Hurwitz's Fourier expansion
/// `ζ(s,t) = 2Γ(1-s)(2π)^(s-1) [sin(πs/2) Σ cos(2πnt)/n^(1-s) + cos(πs/2) Σ sin(2πnt)/n^(1-s)]`.
///
/// Requires `s < 1` and `0 < t < 1`; `t = 1` is accepted for `s < 0`.
pub fn hurwitz_zeta_fourier(s: f64, t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    if !(s < 1.0) {
        return Err(Error::domain(
            "hurwitz_zeta_fourier",
            format!("requires s < 1, got {s}"),
        ));
    }
    let t_ok = (t > 0.0 && t < 1.0) || (t == 1.0 && s < 0.0);
    if !t_ok {
        return Err(Error::domain(
            "hurwitz_zeta_fourier",
            format!("requires 0 < t < 1 (or t = 1 with s < 0), got t = {t}"),
        ));
    }
    let p = 1.0 - s;
    let pair = power_harmonics(Harmonics::all(t), p, opts);
    let scale = 2.0 * gamma(p)? * (2.0 * PI).powf(-p);
    let (a, b) = (sin_pi(0.5 * s), cos_pi(0.5 * s));
    Ok(pair
        .cos
        .affine(a * scale, 0.0)
        .plus(pair.sin.affine(b * scale, 0.0)))
}

/// Three-sum Fourier series of `ζ'(-1, t)` on `0 < t ≤ 1`, with
/// summation-by-parts tail corrections for the `1/n²` and `log n/n²` sums.
pub fn zeta_prime_minus1_fourier(t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    if !(t > 0.0 && t <= 1.0) {
        return Err(Error::domain(
            "zeta_prime_minus1_fourier",
            format!("requires 0 < t ≤ 1, got {t}"),
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
    let k = 1.0 / (2.0 * PI * PI);
    let v = p2
        .sin
        .affine(1.0 / (4.0 * PI), 0.0)
        .plus(
            p2.cos
                .affine(-k * (c.log_two_pi + c.euler_gamma - 1.0), 0.0),
        )
        .plus(pl.cos.affine(-k, 0.0));
    Ok(SeriesValue { terms_used: n, ..v })
}
