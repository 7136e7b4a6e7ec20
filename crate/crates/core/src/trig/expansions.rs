//! Series over `Ci` and `si` at multiples of `2πx` for `ψ`, `log Γ`,
//! `ζ'(-1, x)` and the Barnes G-function, the sine-integral moment sum, and
//! Lerch's trigonometric series for the digamma function.
//!
//! All `Ci`-type sums reduce to `Σ n^(-p) F(2πnx)` with `F` one of the
//! auxiliary functions `f`, `g`. Their tails are summed from the asymptotic
//! expansions of `f` and `g` in closed Hurwitz form.

use super::clausen::clausen;
use super::sici::{sici_auxiliary, ASYMPTOTIC_FROM};
use crate::bernoulli::bernoulli_poly;
use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::numerics::{
    cos_pi, euler_transform_alternating, harmonic_tail_averaged, power_tail, sin_pi, EvalOptions,
    Harmonics, Neumaier, SeriesValue,
};
use std::f64::consts::PI;

/// Fewest explicit terms in a `Ci`-type sum.
const MIN_AUX_TERMS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Aux {
    /// `f(a) = sin a Ci(a) - cos a si(a) ~ Σ (-1)^k (2k)!/a^(2k+1)`
    F,
    /// `g(a) = -cos a Ci(a) - sin a si(a) ~ Σ (-1)^k (2k+1)!/a^(2k+2)`
    G,
}

fn check_positive(function: &'static str, x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(function, format!("requires x > 0, got {x}")));
    }
    Ok(())
}

/// `Σ_{n≥1} n^(-p) F(2πnx)`.
///
/// Enough explicit terms are taken that the first omitted argument exceeds
/// the asymptotic threshold (at least [`MIN_AUX_TERMS`], at most
/// `opts.max_terms`); the remainder is `Σ_k (-1)^k c_k (2πx)^(-e_k) ζ(p + e_k, N+1)`
/// truncated at its smallest term.
fn aux_power_sum(x: f64, p: i32, kind: Aux, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    let w = 2.0 * PI * x;
    let need = (1.2 * ASYMPTOTIC_FROM / w).ceil() as usize;
    let n = need.max(MIN_AUX_TERMS).min(opts.max_terms);
    let mut acc = Neumaier::new();
    for k in 1..=n {
        let (f, g) = sici_auxiliary(w * k as f64)?;
        let v = if kind == Aux::F { f } else { g };
        acc.add(v * (k as f64).powi(-p));
    }
    let (mut c, mut e) = (1.0, if kind == Aux::F { 1 } else { 2 });
    let mut last = f64::INFINITY;
    let mut err = 0.0;
    for j in 0..64 {
        let term = c * w.powi(-e) * power_tail(f64::from(p + e), n as f64);
        if !term.is_finite() || term.abs() >= last {
            err = last;
            break;
        }
        acc.add(if j % 2 == 0 { term } else { -term });
        last = term.abs();
        err = term.abs();
        if term.abs() < 1e-18 * acc.value().abs() {
            break;
        }
        c *= f64::from(e) * f64::from(e + 1);
        e += 2;
    }
    Ok(SeriesValue {
        value: acc.value(),
        err_estimate: err,
        terms_used: n,
        converged: err <= opts.tolerance(acc.value()),
    })
}

/// `Σ si(2nπ)/n² = -Σ f(2nπ)/n²`.
pub fn si_moment_sum(opts: &EvalOptions) -> Result<SeriesValue> {
    Ok(aux_power_sum(1.0, 2, Aux::F, opts)?.affine(-1.0, 0.0))
}

/// `(1/2π²) Σ Si(2nπ)/n²`, split as `π/24 + (1/2π²) Σ si(2nπ)/n²`.
pub fn glaisher_si_sum(opts: &EvalOptions) -> Result<SeriesValue> {
    Ok(si_moment_sum(opts)?.affine(1.0 / (2.0 * PI * PI), PI / 24.0))
}

/// `ψ(x) = log x - 1/(2x) + 2 Σ [cos(2nπx) Ci(2nπx) + sin(2nπx) si(2nπx)]`.
pub fn norlund_digamma_series(x: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    check_positive("norlund_digamma_series", x)?;
    let s = aux_power_sum(x, 0, Aux::G, opts)?;
    Ok(s.affine(-2.0, x.ln() - 0.5 / x))
}

/// `log Γ(x) = ½ log 2π + (x - ½) log x - x + (1/π) Σ [sin(2nπx) Ci(2nπx) - cos(2nπx) si(2nπx)]/n`.
pub fn loggamma_ci_series(x: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    check_positive("loggamma_ci_series", x)?;
    let c = Constants::get();
    let s = aux_power_sum(x, 1, Aux::F, opts)?;
    Ok(s.affine(1.0 / PI, 0.5 * c.log_two_pi + (x - 0.5) * x.ln() - x))
}

/// `ζ'(-1, x) = -ζ(-1, x) log x - x²/4 + 1/12 - (1/2π²) Σ [cos(2nπx) Ci(2nπx) + sin(2nπx) si(2nπx)]/n²`.
pub fn elizalde_series(x: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    check_positive("elizalde_series", x)?;
    let zeta_m1 = -0.5 * bernoulli_poly(2, x)?;
    let s = aux_power_sum(x, 2, Aux::G, opts)?;
    Ok(s.affine(
        1.0 / (2.0 * PI * PI),
        -zeta_m1 * x.ln() - 0.25 * x * x + 1.0 / 12.0,
    ))
}

/// `x log Γ(x) - log G(1+x)` from
/// `¼x[-x + 2(x-1) log x] + (1/12) log x + Cl_2(2πx)/(4π)
///  - (1/2π²) Σ [cos(2nπx) Ci(2nπx) + sin(2nπx) Si(2nπx)]/n² + 1/12 - ζ'(-1)`.
///
/// The `Si` sum is formed as `-Σ g(2nπx)/n² + (π/2) Cl_2(2πx)`.
pub fn barnes_ci_combination(x: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    check_positive("barnes_ci_combination", x)?;
    let c = Constants::get();
    let cl2 = clausen(2, 2.0 * PI * x, opts)?;
    let g = aux_power_sum(x, 2, Aux::G, opts)?;
    let si_sum = g.affine(-1.0, 0.0).plus(cl2.affine(0.5 * PI, 0.0));
    let head = 0.25 * x * (-x + 2.0 * (x - 1.0) * x.ln()) + x.ln() / 12.0 + 1.0 / 12.0
        - c.zeta_prime_minus1;
    Ok(si_sum
        .affine(-1.0 / (2.0 * PI * PI), head)
        .plus(cl2.affine(1.0 / (4.0 * PI), 0.0)))
}

/// `ψ(x)` on `0 < x < 1` from Lerch's series
/// `ψ(x) sin πx + (π/2) cos πx + (γ + log 2π) sin πx = -Σ sin((2n+1)πx) log((n+1)/n)`.
///
/// The series converges conditionally and is tail averaged. The reported
/// error is the spread of the averaging window, which is far larger than the
/// actual error of the windowed mean.
pub fn digamma_lerch_series(x: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(
            "digamma_lerch_series",
            format!("requires 0 < x < 1, got {x}"),
        ));
    }
    let c = Constants::get();
    let h = Harmonics {
        step: 2,
        offset: 1,
        tau: 0.5 * x,
    };
    let s = harmonic_tail_averaged(h, |n| (1.0 / n as f64).ln_1p(), opts).sin;
    let sp = sin_pi(x);
    let head = -0.5 * PI * cos_pi(x) - (c.euler_gamma + c.log_two_pi) * sp;
    Ok(s.affine(-1.0 / sp, head / sp))
}

/// `Σ_{k≥1} (-1)^(k+1) [1/k - log(1 + 1/k)]` by the Euler transform; the
/// limit is `log(4/π)`.
pub fn sondow_series(opts: &EvalOptions) -> SeriesValue {
    euler_transform_alternating(
        |k| {
            let r = 1.0 / k as f64;
            r - r.ln_1p()
        },
        opts,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{digamma, log_barnes_g_zeta, log_gamma};
    use crate::zeta::hurwitz_zeta_sderiv;

    const GRID: [f64; 11] = [0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99];

    #[test]
    fn digamma_from_ci_series() {
        let o = EvalOptions::default();
        let g = Constants::get().euler_gamma;
        assert!((norlund_digamma_series(1.0, &o).unwrap().value + g).abs() < 1e-12);
        let half = norlund_digamma_series(0.5, &o).unwrap().value;
        assert!((half + g + 2.0 * 2f64.ln()).abs() < 1e-12);
        for &x in GRID.iter().chain(&[2.3, 7.5]) {
            let v = norlund_digamma_series(x, &o).unwrap().value;
            assert!((v - digamma(x).unwrap()).abs() < 1e-11, "x={x}");
        }
    }

    #[test]
    fn log_gamma_and_zeta_derivative_from_ci_series() {
        let o = EvalOptions::default();
        assert!(loggamma_ci_series(1.0, &o).unwrap().value.abs() < 1e-12);
        for &x in GRID.iter().chain(&[1.7, 4.2]) {
            let v = loggamma_ci_series(x, &o).unwrap().value;
            assert!((v - log_gamma(x).unwrap()).abs() < 1e-11, "x={x}");
            let e = elizalde_series(x, &o).unwrap().value;
            assert!(
                (e - hurwitz_zeta_sderiv(1, -1.0, x).unwrap()).abs() < 1e-11,
                "x={x}"
            );
            let b = barnes_ci_combination(x, &o).unwrap().value;
            let expect = x * log_gamma(x).unwrap() - log_barnes_g_zeta(x).unwrap();
            assert!((b - expect).abs() < 1e-11, "x={x} {}", b - expect);
        }
    }

    #[test]
    fn tail_is_self_consistent() {
        let a = glaisher_si_sum(&EvalOptions::default().with_max_terms(1000)).unwrap();
        let b = glaisher_si_sum(&EvalOptions::default().with_max_terms(10_000)).unwrap();
        assert!((a.value - b.value).abs() <= a.err_estimate.max(1e-15));
        // the sum itself, from an independent high-precision evaluation
        assert!((b.value - 0.121551651579644).abs() < 1e-12);
    }

    #[test]
    fn lerch_series() {
        let o = EvalOptions::default();
        for &x in &[0.1, 0.25, 0.5, 0.75, 0.9] {
            let v = digamma_lerch_series(x, &o).unwrap();
            assert!((v.value - digamma(x).unwrap()).abs() < 1e-3, "x={x}");
        }
        let a = digamma_lerch_series(0.25, &o).unwrap().value;
        let b = digamma_lerch_series(0.75, &o).unwrap().value;
        assert!((b - a - PI).abs() < 2e-3);
        assert!(digamma_lerch_series(1.0, &o).is_err());
        // x = 1/2: Σ (-1)^(n+1) log(1 + 1/n) = ψ(1/2) + γ + log 2π = log(π/2)
        let h = digamma_lerch_series(0.5, &o).unwrap().value;
        let c = Constants::get();
        assert!((h + c.euler_gamma + c.log_two_pi - (PI / 2.0).ln()).abs() < 1e-10);
    }

    #[test]
    fn sondow_constant() {
        let v = sondow_series(&EvalOptions::default());
        assert!((v.value - (4.0 / PI).ln()).abs() < 1e-12);
    }
}
