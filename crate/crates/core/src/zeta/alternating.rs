//! Alternating Hurwitz zeta `ζ_a(s, t) = Σ_{n≥0} (-1)^n (t+n)^(-s)` and the
//! real-argument Lerch transcendent.

use super::em::{hurwitz_difference, hurwitz_zeta};
use super::fourier::power_harmonics;
use super::hasse::binomial_double_sum;
use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::numerics::{
    cos_pi, euler_transform_alternating, sin_pi, EvalOptions, Harmonics, SeriesValue,
};
use std::f64::consts::{LN_2, PI};

fn check_t(function: &'static str, t: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(function, format!("requires t > 0, got {t}")));
    }
    Ok(())
}

/// `ζ_a(s,t) = 2^(-s) [ζ(s, t/2) - ζ(s, (1+t)/2)]`, entire in `s`.
pub fn alt_hurwitz_zeta(s: f64, t: f64) -> Result<f64> {
    check_t("alt_hurwitz_zeta", t)?;
    Ok(2f64.powf(-s) * hurwitz_difference(s, 0.5 * t, 0.5 * (1.0 + t))?)
}

/// The three Hurwitz-difference forms of `ζ_a(s, t)`:
/// `2^(-s)[ζ(s,t/2) - ζ(s,(1+t)/2)]`, `ζ(s,t) - 2^(1-s) ζ(s,(1+t)/2)` and
/// `2^(1-s) ζ(s,t/2) - ζ(s,t)`. The last two have a removable pole at `s = 1`
/// and return an error there.
pub fn alt_hurwitz_zeta_forms(s: f64, t: f64) -> Result<[f64; 3]> {
    check_t("alt_hurwitz_zeta_forms", t)?;
    let a = alt_hurwitz_zeta(s, t)?;
    let z = hurwitz_zeta(s, t)?;
    let f = 2f64.powf(1.0 - s);
    let b = z - f * hurwitz_zeta(s, 0.5 * (1.0 + t))?;
    let c = f * hurwitz_zeta(s, 0.5 * t)? - z;
    Ok([a, b, c])
}

/// `(s-1) [2^(1-s) ζ(s,t/2) - ζ(s,t)]`, built from two separately evaluated
/// Hurwitz values; tends to 0 as `s → 1`.
pub fn alt_zeta_pole_product(s: f64, t: f64) -> Result<f64> {
    check_t("alt_zeta_pole_product", t)?;
    let c = 2f64.powf(1.0 - s) * hurwitz_zeta(s, 0.5 * t)? - hurwitz_zeta(s, t)?;
    Ok((s - 1.0) * c)
}

/// Binomial double sum `Σ_n 2^-(n+1) Σ_k C(n,k)(-1)^k (t+k)^(-s)`.
pub fn alt_hurwitz_zeta_sondow(s: f64, t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    check_t("alt_hurwitz_zeta_sondow", t)?;
    Ok(binomial_double_sum(
        |k| (t + k as f64).powf(-s),
        |n| 0.5f64.powi(n as i32 + 1),
        opts,
    ))
}

/// Odd-harmonic Fourier expansion
/// `ζ_a(s,t) = 2Γ(1-s)π^(s-1) [sin(πs/2) C + cos(πs/2) S]` with
/// `C, S = Σ_{n≥0} (cos, sin)((2n+1)πt)/(2n+1)^(1-s)`.
///
/// Requires `s < 1` and `0 < t < 1`; `t = 1` is accepted for `s < 0`.
pub fn alt_hurwitz_zeta_fourier(s: f64, t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    if !(s < 1.0) {
        return Err(Error::domain(
            "alt_hurwitz_zeta_fourier",
            format!("requires s < 1, got {s}"),
        ));
    }
    let t_ok = (t > 0.0 && t < 1.0) || (t == 1.0 && s < 0.0);
    if !t_ok {
        return Err(Error::domain(
            "alt_hurwitz_zeta_fourier",
            format!("requires 0 < t < 1 (or t = 1 with s < 0), got t = {t}"),
        ));
    }
    let p = 1.0 - s;
    let pair = power_harmonics(Harmonics::odd(0.5 * t), p, opts);
    let scale = 2.0 * gamma(p)? * PI.powf(-p);
    let (a, b) = (sin_pi(0.5 * s), cos_pi(0.5 * s));
    Ok(pair
        .cos
        .affine(a * scale, 0.0)
        .plus(pair.sin.affine(b * scale, 0.0)))
}

/// `ζ_a(-s)` from `ζ_a(1+s)` through the functional equation
/// `ζ_a(-s) = 2 (2^(-s-1) - 1)/(2^(-s) - 1) π^(-s-1) Γ(1+s) sin(πs/2) ζ_a(1+s)`.
/// The limit at `s = 0` is `1/2`.
pub fn alt_zeta_hardy(s: f64) -> Result<f64> {
    if !(s >= 0.0) || !s.is_finite() {
        return Err(Error::domain(
            "alt_zeta_hardy",
            format!("requires s ≥ 0, got {s}"),
        ));
    }
    if s == 0.0 {
        return Ok(0.5);
    }
    let ratio = (-(s + 1.0) * LN_2).exp_m1() / (-s * LN_2).exp_m1();
    let za = alt_hurwitz_zeta(1.0 + s, 1.0)?;
    Ok(2.0 * ratio * PI.powf(-s - 1.0) * gamma(1.0 + s)? * sin_pi(0.5 * s) * za)
}

/// Real Lerch transcendent `Φ(z,s,t) = Σ_{n≥0} z^n (t+n)^(-s)` for
/// `-1 ≤ z < 1/2` through the binomial double sum
/// `(1/(1-z)) Σ_n (-z/(1-z))^n Σ_k C(n,k)(-1)^k (t+k)^(-s)`.
pub fn lerch_phi(z: f64, s: f64, t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    check_t("lerch_phi", t)?;
    if !(-1.0..0.5).contains(&z) {
        return Err(Error::domain(
            "lerch_phi",
            format!("requires -1 ≤ z < 1/2, got {z}"),
        ));
    }
    let r = -z / (1.0 - z);
    let scale = 1.0 / (1.0 - z);
    Ok(binomial_double_sum(
        |k| (t + k as f64).powf(-s),
        |n| scale * r.powi(n as i32),
        opts,
    ))
}

/// Both sides of `ζ(s,x) = 2^s ζ(s,2x) - ζ(s,x+1/2)`.
pub fn hansen_patrick(s: f64, x: f64) -> Result<(f64, f64)> {
    let lhs = hurwitz_zeta(s, x)?;
    let rhs = 2f64.powf(s) * hurwitz_zeta(s, 2.0 * x)? - hurwitz_zeta(s, x + 0.5)?;
    Ok((lhs, rhs))
}

/// `ζ_a'(s) = -Σ_{n≥1} (-1)^(n+1) log n / n^s` by Euler transformation.
pub fn alt_zeta_derivative(s: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    if !(s > 0.0) {
        return Err(Error::domain(
            "alt_zeta_derivative",
            format!("requires s > 0, got {s}"),
        ));
    }
    let v = euler_transform_alternating(|n| (n as f64).ln() * (n as f64).powf(-s), opts);
    Ok(v.affine(-1.0, 0.0))
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn hansen_patrick_duplication(
            s in prop_oneof![-2.0f64..0.9, 1.1f64..2.5],
            x in 0.25f64..2.0,
        ) {
            let (l, r) = hansen_patrick(s, x).unwrap();
            prop_assert!((l - r).abs() <= 1e-10, "s={s} x={x} {l} {r}");
        }

        #[test]
        fn three_forms_agree_everywhere(s in prop_oneof![-2.0f64..0.9, 1.1f64..3.0], t in 0.05f64..1.0) {
            let v = alt_hurwitz_zeta_forms(s, t).unwrap();
            let scale = v[0].abs().max(1.0);
            prop_assert!((v[0] - v[1]).abs() <= 1e-10 * scale);
            prop_assert!((v[0] - v[2]).abs() <= 1e-10 * scale);
        }
    }
}
