//! Bernoulli numbers and polynomials, Euler polynomials, and their Fourier
//! series.
//!
//! Bernoulli numbers use the convention `B_1 = -1/2`, so that
//! `B_1(t) = t - 1/2`.

use crate::error::{Error, Result};
use crate::numerics::{
    harmonic_sum, harmonic_tail_averaged, power_tail, EvalOptions, Harmonics, SeriesValue, TwoFold,
};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Largest Bernoulli index held in the cache.
pub const MAX_BERNOULLI_INDEX: usize = 64;
/// Largest degree accepted by the finite double-sum forms.
pub const MAX_DIFFERENCE_DEGREE: usize = 20;

/// Value of a polynomial family member at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyEval {
    pub degree: usize,
    pub point: f64,
    pub value: f64,
}

fn table() -> &'static [f64; MAX_BERNOULLI_INDEX + 1] {
    static TABLE: OnceLock<[f64; MAX_BERNOULLI_INDEX + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        // tangent numbers T_1..T_n by the in-place recurrence; every update is
        // a sum of positive terms, so no cancellation occurs
        let n = MAX_BERNOULLI_INDEX / 2;
        let mut t = vec![0.0f64; n + 1];
        t[1] = 1.0;
        for k in 2..=n {
            t[k] = (k - 1) as f64 * t[k - 1];
        }
        for k in 2..=n {
            for j in k..=n {
                t[j] = (j - k) as f64 * t[j - 1] + (j - k + 2) as f64 * t[j];
            }
        }
        let mut b = [0.0f64; MAX_BERNOULLI_INDEX + 1];
        b[0] = 1.0;
        b[1] = -0.5;
        for k in 1..=n {
            let four_k = 4f64.powi(k as i32);
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            b[2 * k] = sign * (2 * k) as f64 * t[k] / (four_k * (four_k - 1.0));
        }
        b
    })
}

/// Bernoulli number `B_n` for `n ≤ 64`.
pub fn bernoulli_number(n: usize) -> Result<f64> {
    table().get(n).copied().ok_or(Error::DegreeLimit {
        function: "bernoulli_number",
        degree: n,
        max: MAX_BERNOULLI_INDEX,
    })
}

/// Cached `B_0..=B_64`.
pub fn bernoulli_numbers() -> &'static [f64] {
    table()
}

fn binomial_row(m: usize) -> Vec<f64> {
    let mut row = vec![1.0f64; m + 1];
    for k in 1..m {
        row[k] = row[k - 1] * (m + 1 - k) as f64 / k as f64;
    }
    row
}

/// Bernoulli polynomial `B_m(t) = Σ_k C(m,k) B_k t^(m-k)`.
pub fn bernoulli_poly(m: usize, t: f64) -> Result<f64> {
    if m > MAX_BERNOULLI_INDEX {
        return Err(Error::DegreeLimit {
            function: "bernoulli_poly",
            degree: m,
            max: MAX_BERNOULLI_INDEX,
        });
    }
    let b = table();
    let c = binomial_row(m);
    Ok((0..=m).fold(0.0, |acc, k| acc * t + c[k] * b[k]))
}

fn difference_row(n: usize) -> Vec<TwoFold> {
    // signed binomials (-1)^k C(n,k); exact in the double-word format
    let mut row = vec![TwoFold::ONE];
    for _ in 0..n {
        let mut next = vec![TwoFold::ZERO; row.len() + 1];
        for (k, &c) in row.iter().enumerate() {
            next[k] = next[k] + c;
            next[k + 1] = next[k + 1] - c;
        }
        row = next;
    }
    row
}

/// `Σ_k C(n,k) (-1)^k (x+k)^m`, the `n`-th forward difference of `x^m`
/// up to sign. Vanishes for `n > m`.
pub fn forward_difference(n: usize, m: u32, x: f64) -> f64 {
    difference_power_sum(n, m, x).to_f64()
}

fn difference_power_sum(n: usize, m: u32, x: f64) -> TwoFold {
    let row = difference_row(n);
    row.iter().enumerate().fold(TwoFold::ZERO, |acc, (k, &c)| {
        let base = TwoFold::new(x) + TwoFold::new(k as f64);
        acc + c * base.powi(m)
    })
}

fn check_difference_degree(function: &'static str, m: usize) -> Result<()> {
    if m > MAX_DIFFERENCE_DEGREE {
        return Err(Error::DegreeLimit {
            function,
            degree: m,
            max: MAX_DIFFERENCE_DEGREE,
        });
    }
    Ok(())
}

/// `B_m(t)` from the terminating binomial double sum
/// `Σ_{n=0}^{m} 1/(n+1) Σ_k C(n,k)(-1)^k (t+k)^m`.
///
/// Evaluated in double-word arithmetic. Accuracy degrades with `m` through
/// binomial cancellation: about 1e-13 at `m = 10`, a few digits lost by
/// `m = 20`.
pub fn bernoulli_poly_hasse(m: usize, t: f64) -> Result<f64> {
    check_difference_degree("bernoulli_poly_hasse", m)?;
    let mut acc = TwoFold::ZERO;
    for n in 0..=m {
        let d = difference_power_sum(n, m as u32, t);
        acc = acc + d.div_f64((n + 1) as f64);
    }
    Ok(acc.to_f64())
}

/// Euler polynomial `E_m(t) = Σ_{n=0}^{m} 2^(-n) Σ_k C(n,k)(-1)^k (t+k)^m`.
pub fn euler_poly(m: usize, t: f64) -> Result<f64> {
    check_difference_degree("euler_poly", m)?;
    let mut acc = TwoFold::ZERO;
    for n in 0..=m {
        let d = difference_power_sum(n, m as u32, t);
        acc = acc + d.scale(0.5f64.powi(n as i32));
    }
    Ok(acc.to_f64())
}

fn factorial(m: usize) -> f64 {
    (1..=m).fold(1.0, |a, k| a * k as f64)
}

/// Fourier series of `B_m(t)` with `opts.max_terms` terms.
///
/// For `m ≥ 2` the truncated sum carries a summation-by-parts tail correction;
/// `err_estimate` is the analytic truncation bound `2 m! Σ_{n>N} (2πn)^(-m)`.
/// For `m = 1` the conditionally convergent sine series is tail averaged.
pub fn bernoulli_fourier(m: usize, t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    if m == 0 || m > MAX_BERNOULLI_INDEX {
        return Err(Error::domain(
            "bernoulli_fourier",
            format!("degree {m} outside 1..=64"),
        ));
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::domain(
            "bernoulli_fourier",
            format!("t = {t} outside [0, 1]"),
        ));
    }
    // B_m(t) = -2 m!/(2π)^m Σ cos(2πnt - mπ/2)/n^m
    let scale = -2.0 * factorial(m) / (2.0 * PI).powi(m as i32);
    let h = Harmonics::all(t);
    let pick = |pair: crate::numerics::TrigPair| match m % 4 {
        0 => pair.cos,
        1 => pair.sin,
        2 => pair.cos.affine(-1.0, 0.0),
        _ => pair.sin.affine(-1.0, 0.0),
    };
    if m == 1 {
        if t == 0.0 || t == 1.0 {
            return Err(Error::domain(
                "bernoulli_fourier",
                "the degree-1 series converges to 0 at the jump t ∈ {0, 1}, not to B_1(t)",
            ));
        }
        let pair = harmonic_tail_averaged(h, |n| 1.0 / n as f64, opts);
        return Ok(pick(pair).affine(scale, 0.0));
    }
    let p = m as f64;
    let n = opts.max_terms;
    let pair = harmonic_sum(h, |k| (k as f64).powf(-p), n, |k| power_tail(p, k as f64));
    let mut v = pick(pair).affine(scale, 0.0);
    v.err_estimate = scale.abs() * power_tail(p, n as f64);
    v.converged = v.err_estimate <= opts.tolerance(v.value);
    Ok(v)
}

/// Odd-harmonic Fourier series of `E_m(t)` with `opts.max_terms` terms.
///
/// For `m ≥ 1` the sum is tail corrected and `err_estimate` is the analytic
/// truncation bound `4 m!/π^(m+1) Σ_{n≥N} (2n+1)^(-m-1)`. For `m = 0` the
/// series is tail averaged.
pub fn euler_fourier(m: usize, t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    if m > MAX_BERNOULLI_INDEX {
        return Err(Error::domain(
            "euler_fourier",
            format!("degree {m} above 64"),
        ));
    }
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::domain(
            "euler_fourier",
            format!("t = {t} outside (0, 1)"),
        ));
    }
    // E_m(t) = 4 m!/π^(m+1) Σ_{n≥0} sin((2n+1)πt - mπ/2)/(2n+1)^(m+1)
    let scale = 4.0 * factorial(m) / PI.powi(m as i32 + 1);
    let h = Harmonics::odd(0.5 * t);
    let pick = |pair: crate::numerics::TrigPair| match m % 4 {
        0 => pair.sin,
        1 => pair.cos.affine(-1.0, 0.0),
        2 => pair.sin.affine(-1.0, 0.0),
        _ => pair.cos,
    };
    let p = (m + 1) as f64;
    let g = |k: usize| ((2 * k - 1) as f64).powf(-p);
    if m == 0 {
        let pair = harmonic_tail_averaged(h, g, opts);
        return Ok(pick(pair).affine(scale, 0.0));
    }
    let n = opts.max_terms;
    let odd_tail = |k: usize| 2f64.powf(-p) * power_tail(p, k as f64 - 0.5);
    let pair = harmonic_sum(h, g, n, odd_tail);
    let mut v = pick(pair).affine(scale, 0.0);
    v.err_estimate = scale * odd_tail(n);
    v.converged = v.err_estimate <= opts.tolerance(v.value);
    Ok(v)
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn parity_under_reflection(n in 0usize..=10, t in 0.0f64..=1.0) {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let d = bernoulli_poly(n, 1.0 - t).unwrap() - sign * bernoulli_poly(n, t).unwrap();
            prop_assert!(d.abs() <= 1e-12);
        }

        #[test]
        fn hasse_form_agrees(m in 0usize..=10, t in 0.0f64..=1.0) {
            let d = bernoulli_poly_hasse(m, t).unwrap() - bernoulli_poly(m, t).unwrap();
            prop_assert!(d.abs() <= 1e-12);
        }

        #[test]
        fn unit_step_difference(m in 1usize..=10, t in -1.0f64..=1.0) {
            // B_m(t+1) - B_m(t) = m t^(m-1)
            let d = bernoulli_poly(m, t + 1.0).unwrap() - bernoulli_poly(m, t).unwrap();
            prop_assert!((d - m as f64 * t.powi(m as i32 - 1)).abs() <= 1e-11);
        }
    }
}
