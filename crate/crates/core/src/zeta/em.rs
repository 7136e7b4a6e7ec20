//! Euler-Maclaurin evaluation of the Hurwitz zeta function and its first two
//! s-derivatives.

use crate::bernoulli::bernoulli_numbers;
use crate::error::{Error, Result};
use crate::numerics::Neumaier;

/// Number of Bernoulli correction terms (`B_2` through `B_30`).
const EM_TERMS: usize = 15;

/// `B_{2j}/(2j)!` for `j = 1..=EM_TERMS + 1`.
fn em_coefficients() -> [f64; EM_TERMS + 1] {
    let b = bernoulli_numbers();
    let mut c = [0.0; EM_TERMS + 1];
    let mut fact = 1.0;
    for j in 1..=EM_TERMS + 1 {
        fact *= ((2 * j - 1) * (2 * j)) as f64;
        c[j - 1] = b[2 * j] / fact;
    }
    c
}

/// Rough size of the first omitted correction term at `a = t + m`. For
/// derivatives the Pochhammer factors are floored at 1, since a vanishing
/// factor does not make its s-derivative vanish.
fn remainder_estimate(s: f64, a: f64, order: u32) -> f64 {
    let c = em_coefficients()[EM_TERMS].abs();
    let floor = if order == 0 { 0.0 } else { 1.0 };
    let p: f64 = (0..(2 * EM_TERMS + 1))
        .map(|i| (s + i as f64).abs().max(floor))
        .product();
    let l = 1.0 + a.ln().abs();
    c * p * a.powf(-s - (2 * EM_TERMS + 1) as f64) * l * l
}

/// Number of direct terms taken before the Euler-Maclaurin tail.
///
/// For `s ≥ 0` this is `max(15, ⌈|s|⌉ + 5)`. For `s < 0` the terms `k^(-s)`
/// grow, so the smallest shift meeting the remainder target is used instead
/// to limit cancellation against the integral term.
pub(crate) fn shift_count(s: f64, t: f64, order: u32) -> usize {
    let base = 15usize.max(s.abs().ceil() as usize + 5);
    if s >= 0.0 {
        return base;
    }
    for m in 1..base {
        let a = t + m as f64;
        let scale = (a.powf(1.0 - s) / (1.0 - s)).max(1.0);
        if a >= 1.0 && remainder_estimate(s, a, order) <= 1e-17 * scale {
            return m;
        }
    }
    base
}

/// Derivatives of order 0, 1, 2 in s of the regular part (everything except
/// the integral term `a^(1-s)/(s-1)`) with `a = t + m`.
fn regular_part(s: f64, t: f64, m: usize) -> [f64; 3] {
    let mut acc = [Neumaier::new(), Neumaier::new(), Neumaier::new()];
    for k in 0..m {
        let x = t + k as f64;
        let l = x.ln();
        let f = x.powf(-s);
        acc[0].add(f);
        acc[1].add(-l * f);
        acc[2].add(l * l * f);
    }
    let a = t + m as f64;
    let l = a.ln();
    let f = a.powf(-s);
    acc[0].add(0.5 * f);
    acc[1].add(-0.5 * l * f);
    acc[2].add(0.5 * l * l * f);

    // (s)_{2j-1} and its s-derivatives carried in forward mode
    let (mut p, mut dp, mut ddp) = (s, 1.0, 0.0);
    let inv_a2 = 1.0 / (a * a);
    let mut e = f / a;
    let coeff = em_coefficients();
    for (j, c) in coeff.iter().take(EM_TERMS).enumerate() {
        if j > 0 {
            for i in [2 * j - 1, 2 * j] {
                let q = s + i as f64;
                ddp = ddp * q + 2.0 * dp;
                dp = dp * q + p;
                p *= q;
            }
            e *= inv_a2;
        }
        acc[0].add(c * p * e);
        acc[1].add(c * (dp - l * p) * e);
        acc[2].add(c * (ddp - 2.0 * l * dp + l * l * p) * e);
    }
    [acc[0].value(), acc[1].value(), acc[2].value()]
}

/// Derivatives of order 0, 1, 2 of `a^(1-s)/(s-1)`.
fn integral_part(s: f64, a: f64) -> [f64; 3] {
    let l = a.ln();
    let r = 1.0 / (s - 1.0);
    let i = a.powf(1.0 - s) * r;
    let q = l + r;
    [i, -i * q, i * q * q + i * r * r]
}

fn check(function: &'static str, s: f64, t: f64) -> Result<()> {
    if s == 1.0 {
        return Err(Error::Pole { function });
    }
    if !(t > 0.0) || !t.is_finite() || !s.is_finite() {
        return Err(Error::domain(
            function,
            format!("requires finite s and t > 0, got s = {s}, t = {t}"),
        ));
    }
    Ok(())
}

/// Hurwitz zeta function `ζ(s, t) = Σ_{k≥0} (t+k)^(-s)`, analytically
/// continued.
///
/// Absolute error is near 1e-13 for `s ≥ -4`; for more negative non-integer
/// `s` the accuracy is relative, about `1e-16 (t+M)^(1-s)`.
pub fn hurwitz_zeta(s: f64, t: f64) -> Result<f64> {
    check("hurwitz_zeta", s, t)?;
    let m = shift_count(s, t, 0);
    let reg = regular_part(s, t, m);
    Ok(reg[0] + integral_part(s, t + m as f64)[0])
}

/// Riemann zeta function `ζ(s) = ζ(s, 1)`.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    hurwitz_zeta(s, 1.0)
}

/// `∂^order/∂s^order ζ(s, t)` for `order ∈ {1, 2}`.
pub fn hurwitz_zeta_sderiv(order: u32, s: f64, t: f64) -> Result<f64> {
    check("hurwitz_zeta_sderiv", s, t)?;
    if !(1..=2).contains(&order) {
        return Err(Error::domain(
            "hurwitz_zeta_sderiv",
            format!("order {order} not in {{1, 2}}"),
        ));
    }
    let m = shift_count(s, t, order);
    let reg = regular_part(s, t, m);
    let int = integral_part(s, t + m as f64);
    Ok(reg[order as usize] + int[order as usize])
}

/// `ζ(s, a) - ζ(s, b)` with the two integral terms combined so the result is
/// finite and accurate through `s = 1`.
pub fn hurwitz_difference(s: f64, a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !s.is_finite() {
        return Err(Error::domain(
            "hurwitz_difference",
            format!("requires a, b > 0, got a = {a}, b = {b}"),
        ));
    }
    let m = shift_count(s, a.min(b), 0);
    let ra = regular_part(s, a, m)[0];
    let rb = regular_part(s, b, m)[0];
    let (am, bm) = (a + m as f64, b + m as f64);
    // am^(1-s) - bm^(1-s) = bm^(1-s) expm1(u), u = (1-s) log(am/bm)
    let d = ((am - bm) / bm).ln_1p();
    let u = (1.0 - s) * d;
    let phi = if u == 0.0 { 1.0 } else { u.exp_m1() / u };
    let pole = -bm.powf(1.0 - s) * d * phi;
    Ok(ra - rb + pole)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::bernoulli_poly;
    use std::f64::consts::PI;

    /// Plain partial sum with an integral tail estimate; slow but independent.
    fn brute(s: f64, t: f64) -> f64 {
        let n = 200_000;
        let mut acc = Neumaier::new();
        for k in 0..n {
            acc.add((t + k as f64).powf(-s));
        }
        let a = t + n as f64;
        acc.add(a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s) + s * a.powf(-s - 1.0) / 12.0);
        acc.value()
    }

    #[test]
    fn riemann_values() {
        assert!((hurwitz_zeta(2.0, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((hurwitz_zeta(4.0, 1.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-15);
        assert!((hurwitz_zeta(0.0, 1.0).unwrap() + 0.5).abs() < 1e-15);
        assert!((hurwitz_zeta(-1.0, 1.0).unwrap() + 1.0 / 12.0).abs() < 1e-15);
        assert!(matches!(hurwitz_zeta(1.0, 0.5), Err(Error::Pole { .. })));
        assert!(hurwitz_zeta(2.0, 0.0).is_err());
    }

    #[test]
    fn against_brute_force() {
        for &s in &[1.5, 2.0, 3.3, 7.0] {
            for &t in &[0.01, 0.3, 1.0, 4.5, 10.0] {
                let a = hurwitz_zeta(s, t).unwrap();
                let b = brute(s, t);
                assert!(
                    (a - b).abs() < 1e-11 * b.abs().max(1.0),
                    "s={s} t={t} {a} {b}"
                );
            }
        }
    }

    #[test]
    fn negative_integers_are_bernoulli() {
        for m in 0..=12usize {
            for &t in &[0.01, 0.1, 0.3, 0.5, 0.9, 0.99, 2.5] {
                let z = hurwitz_zeta(-(m as f64), t).unwrap();
                let b = -bernoulli_poly(m + 1, t).unwrap() / (m + 1) as f64;
                assert!(
                    (z - b).abs() < 1e-12 * b.abs().max(1.0),
                    "m={m} t={t} {z} {b}"
                );
            }
        }
    }

    #[test]
    fn zero_argument_is_linear() {
        for &t in &[0.1, 0.9] {
            assert!((hurwitz_zeta(0.0, t).unwrap() - (0.5 - t)).abs() < 1e-15);
        }
        let v = hurwitz_zeta(-2.0, 0.3).unwrap();
        assert!((v + bernoulli_poly(3, 0.3).unwrap() / 3.0).abs() < 1e-15);
    }

    /// Richardson-extrapolated central differences.
    fn fd(order: u32, s: f64, t: f64) -> f64 {
        let d = |h: f64| match order {
            1 => (hurwitz_zeta(s + h, t).unwrap() - hurwitz_zeta(s - h, t).unwrap()) / (2.0 * h),
            _ => {
                (hurwitz_zeta(s + h, t).unwrap() - 2.0 * hurwitz_zeta(s, t).unwrap()
                    + hurwitz_zeta(s - h, t).unwrap())
                    / (h * h)
            }
        };
        let h = if order == 1 { 1e-3 } else { 1e-2 };
        (4.0 * d(h / 2.0) - d(h)) / 3.0
    }

    #[test]
    fn derivatives_match_richardson() {
        for &s in &[-3.5, -1.0, 0.0, 0.5, 2.0, 4.0] {
            for &t in &[0.2, 0.5, 1.0, 3.0] {
                let d1 = hurwitz_zeta_sderiv(1, s, t).unwrap();
                let d2 = hurwitz_zeta_sderiv(2, s, t).unwrap();
                assert!(
                    (d1 - fd(1, s, t)).abs() < 1e-8 * d1.abs().max(1.0),
                    "d1 s={s} t={t}"
                );
                assert!(
                    (d2 - fd(2, s, t)).abs() < 1e-6 * d2.abs().max(1.0),
                    "d2 s={s} t={t} {d2} {}",
                    fd(2, s, t)
                );
            }
        }
    }

    #[test]
    fn derivatives_match_frozen_values() {
        // 30-digit reference evaluations of ζ'(s,t) and ζ''(s,t)
        let table = [
            (-3.5, 0.2, -0.00237750254784177108, -0.015379738283641792477),
            (-3.5, 3.0, 7.8512193613783190462, -5.4374928555010391077),
            (-1.0, 0.2, 0.083182765186600295954, 0.25174886029187958006),
            (-1.0, 3.0, 1.2208732174194396896, -1.2111104519460032386),
            (0.5, 0.2, -0.41230419764333424805, -10.220647382672225586),
            (0.5, 3.0, -3.4325170674748781316, -16.34808859811173635),
            (2.0, 0.2, 39.21028865347758781, 66.750608431736127405),
            (2.0, 3.0, -0.76426145917585742635, 1.8691669808193506673),
        ];
        for (s, t, d1, d2) in table {
            let a = hurwitz_zeta_sderiv(1, s, t).unwrap();
            let b = hurwitz_zeta_sderiv(2, s, t).unwrap();
            assert!(
                (a - d1).abs() < 1e-13 * d1.abs().max(1.0),
                "d1 s={s} t={t} {a}"
            );
            assert!(
                (b - d2).abs() < 1e-12 * d2.abs().max(1.0),
                "d2 s={s} t={t} {b}"
            );
        }
    }

    #[test]
    fn derivative_reference_values() {
        let ln2pi = (2.0 * PI).ln();
        assert!((hurwitz_zeta_sderiv(1, 0.0, 1.0).unwrap() + 0.5 * ln2pi).abs() < 1e-14);
        // ζ'(-1), ζ'(2), ζ''(2) to 21 digits
        assert!(
            (hurwitz_zeta_sderiv(1, -1.0, 1.0).unwrap() + 0.165421143700450929214).abs() < 1e-14
        );
        assert!(
            (hurwitz_zeta_sderiv(1, 2.0, 1.0).unwrap() + 0.937548254315843753703).abs() < 1e-14
        );
        assert!((hurwitz_zeta_sderiv(2, 2.0, 1.0).unwrap() - 1.98928023429890102342).abs() < 1e-13);
        assert!(hurwitz_zeta_sderiv(3, 2.0, 1.0).is_err());
    }

    #[test]
    fn difference_is_finite_at_one() {
        // ζ(s, 1/2) - ζ(s, 1) → 2 log 2 at s = 1
        let d = hurwitz_difference(1.0, 0.5, 1.0).unwrap();
        assert!((d - 2.0 * 2f64.ln()).abs() < 1e-14);
        for &s in &[-2.5, 0.5, 3.0] {
            let direct = hurwitz_zeta(s, 0.3).unwrap() - hurwitz_zeta(s, 0.8).unwrap();
            assert!((hurwitz_difference(s, 0.3, 0.8).unwrap() - direct).abs() < 1e-13);
        }
    }
}
