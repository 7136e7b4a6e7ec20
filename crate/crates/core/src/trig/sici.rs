//! Sine and cosine integrals `Si`, `si = Si - π/2`, `Ci` and the auxiliary
//! functions `f`, `g` with `Ci = f sin x - g cos x`, `si = -f cos x - g sin x`.
//!
//! Three branches: Maclaurin series in double-word arithmetic below 20, a
//! continued fraction for `e^{ix} E_1(ix)` on `[20, 40)` and the asymptotic
//! expansions from 40 on.

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::numerics::TwoFold;
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

/// Upper end of the Maclaurin branch.
pub const SERIES_LIMIT: f64 = 20.0;
/// Start of the asymptotic branch.
pub const ASYMPTOTIC_FROM: f64 = 40.0;

/// `Si(x)`, `si(x)` and `Ci(x)` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SiCiValue {
    pub x: f64,
    pub si_cap: f64,
    /// `si_cap - π/2`.
    pub si_small: f64,
    pub ci: f64,
}

impl SiCiValue {
    fn from_parts(x: f64, si_cap: f64, ci: f64) -> Self {
        Self {
            x,
            si_cap,
            si_small: si_cap - FRAC_PI_2,
            ci,
        }
    }

    fn from_aux(x: f64, f: f64, g: f64) -> Self {
        let (s, c) = x.sin_cos();
        let si = -f * c - g * s;
        Self::from_parts(x, si + FRAC_PI_2, f * s - g * c)
    }
}

fn check(function: &'static str, x: f64) -> Result<()> {
    if x == 0.0 {
        return Err(Error::Singularity { function, x });
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(function, format!("requires x > 0, got {x}")));
    }
    Ok(())
}

/// `Si(x)` for `x ≥ 0`.
pub fn sine_integral(x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(si_ci(x)?.si_cap)
}

/// `Si`, `si` and `Ci` for `x > 0`. Absolute error is a few ulps.
pub fn si_ci(x: f64) -> Result<SiCiValue> {
    check("si_ci", x)?;
    Ok(if x < SERIES_LIMIT {
        maclaurin(x)
    } else if x < ASYMPTOTIC_FROM {
        let (f, g) = continued_fraction(x);
        SiCiValue::from_aux(x, f, g)
    } else {
        let (f, g) = asymptotic(x).0;
        SiCiValue::from_aux(x, f, g)
    })
}

/// Auxiliary functions `(f(x), g(x))` for `x > 0`.
///
/// `cos x Ci(x) + sin x si(x) = -g(x)` and `sin x Ci(x) - cos x si(x) = f(x)`.
pub fn sici_auxiliary(x: f64) -> Result<(f64, f64)> {
    check("sici_auxiliary", x)?;
    Ok(if x < SERIES_LIMIT {
        let v = maclaurin(x);
        let (s, c) = x.sin_cos();
        (v.ci * s - v.si_small * c, -v.ci * c - v.si_small * s)
    } else if x < ASYMPTOTIC_FROM {
        continued_fraction(x)
    } else {
        asymptotic(x).0
    })
}

/// The Maclaurin branch alone, at any `x > 0`.
pub fn si_ci_series(x: f64) -> Result<SiCiValue> {
    check("si_ci_series", x)?;
    Ok(maclaurin(x))
}

/// The asymptotic branch alone, at any `x > 0`, with the optimally truncated
/// expansions. The second field bounds the truncation error of `f` and `g`.
pub fn si_ci_asymptotic(x: f64) -> Result<(SiCiValue, f64)> {
    check("si_ci_asymptotic", x)?;
    let ((f, g), err) = asymptotic(x);
    Ok((SiCiValue::from_aux(x, f, g), err))
}

fn maclaurin(x: f64) -> SiCiValue {
    let xx = TwoFold::new(x) * TwoFold::new(x);
    // p = x^(2k+1)/(2k+1)!, q = x^(2k)/(2k)!
    let mut p = TwoFold::new(x);
    let mut q = TwoFold::ONE;
    let mut si = p;
    let mut ci = TwoFold::ZERO;
    let mut k = 1usize;
    loop {
        let (a, b) = ((2 * k - 1) as f64, (2 * k) as f64);
        q = (q * xx).div_f64(a * b);
        p = (p * xx).div_f64(b * (b + 1.0));
        let tc = q.div_f64(b);
        let ts = p.div_f64(b + 1.0);
        if k % 2 == 1 {
            ci = ci - tc;
            si = si - ts;
        } else {
            ci = ci + tc;
            si = si + ts;
        }
        if k as f64 > x && tc.hi.abs().max(ts.hi.abs()) < 1e-34 * (1.0 + ci.hi.abs()) {
            break;
        }
        k += 1;
    }
    let c = Constants::get();
    let ci = (ci + TwoFold::new(c.euler_gamma) + TwoFold::new(x.ln())).to_f64();
    SiCiValue::from_parts(x, si.to_f64(), ci)
}

/// `g - i f = e^{ix} E_1(ix)` by the modified Lentz method.
fn continued_fraction(x: f64) -> (f64, f64) {
    const TINY: f64 = 1e-300;
    let mut b = Complex64::new(1.0, x);
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 2..1000 {
        let a = -(((i - 1) * (i - 1)) as f64);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < 1e-17 {
            break;
        }
    }
    (-h.im, h.re)
}

/// Optimally truncated `f ~ Σ (-1)^k (2k)!/x^(2k+1)`,
/// `g ~ Σ (-1)^k (2k+1)!/x^(2k+2)`, with the size of the first omitted term.
fn asymptotic(x: f64) -> ((f64, f64), f64) {
    let inv = 1.0 / x;
    let mut term = inv; // (2k)!/x^(2k+1), then (2k+1)!/x^(2k+2) alternately
    let (mut f, mut g) = (0.0, 0.0);
    let mut j = 0usize;
    loop {
        let sign = if (j / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
        if j.is_multiple_of(2) {
            f += sign * term;
        } else {
            g += sign * term;
        }
        let next = term * (j + 1) as f64 * inv;
        if next >= term || next < 1e-18 * inv * inv {
            return ((f, g), next);
        }
        term = next;
        j += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::compensated_sum;
    use crate::quadrature::integrate;
    use crate::EvalOptions;

    #[test]
    fn zero_and_definitions() {
        assert_eq!(sine_integral(0.0).unwrap(), 0.0);
        assert!(matches!(si_ci(0.0), Err(Error::Singularity { .. })));
        assert!(si_ci(-1.0).is_err());
        for x in [1.0, 50.0] {
            let v = si_ci(x).unwrap();
            assert_eq!(v.si_small + FRAC_PI_2 - v.si_cap, 0.0);
        }
    }

    #[test]
    fn ci_one_matches_series_and_quadrature() {
        // Ci(1) = γ + Σ (-1)^n/(2n (2n)!)
        let mut fact = 1.0;
        let terms = (1..15).map(|n| {
            fact *= ((2 * n - 1) * (2 * n)) as f64;
            let s = if n % 2 == 1 { -1.0 } else { 1.0 };
            s / (2 * n) as f64 / fact
        });
        let series = Constants::get().euler_gamma + compensated_sum(terms);
        let ci = si_ci(1.0).unwrap().ci;
        assert!((ci - series).abs() < 1e-15);
        let o = EvalOptions::default().with_abs_tol(1e-14);
        let q = integrate(|t| (t.cos() - 1.0) / t, 0.0, 1.0, &o)
            .unwrap()
            .value;
        assert!((ci - Constants::get().euler_gamma - q).abs() < 1e-14);
    }

    #[test]
    fn reference_values() {
        // Si(π) (Wilbraham-Gibbs), Ci(π), Si(10), Ci(10), Si(30), Ci(30), Si(100), Ci(100)
        let table = [
            (
                std::f64::consts::PI,
                1.851937051982466170,
                0.073667912046425485990,
            ),
            (10.0, 1.658347594218874049, -0.045456433004455372635),
            (30.0, 1.566756540030351, -0.033032417282071143779),
            (100.0, 1.562225466889056293, -0.0051488251426104921444),
        ];
        for (x, si, ci) in table {
            let v = si_ci(x).unwrap();
            assert!((v.si_cap - si).abs() < 2e-15, "Si({x}) {}", v.si_cap - si);
            assert!((v.ci - ci).abs() < 2e-15, "Ci({x}) {}", v.ci - ci);
        }
    }

    #[test]
    fn branches_agree_at_forty() {
        let s = si_ci_series(ASYMPTOTIC_FROM).unwrap();
        let (a, _) = si_ci_asymptotic(ASYMPTOTIC_FROM).unwrap();
        let (f, g) = continued_fraction(ASYMPTOTIC_FROM);
        let c = SiCiValue::from_aux(ASYMPTOTIC_FROM, f, g);
        for v in [a, c] {
            assert!((s.si_cap - v.si_cap).abs() < 1e-14);
            assert!((s.ci - v.ci).abs() < 1e-14);
        }
    }

    #[test]
    fn series_and_fraction_agree_at_twenty() {
        let s = si_ci_series(SERIES_LIMIT).unwrap();
        let v = si_ci(SERIES_LIMIT).unwrap();
        assert!((s.si_cap - v.si_cap).abs() < 1e-15);
        assert!((s.ci - v.ci).abs() < 1e-15);
    }

    #[test]
    fn auxiliary_leading_terms() {
        for x in [45.0, 200.0, 1e4] {
            let (f, g) = sici_auxiliary(x).unwrap();
            assert!((f * x - 1.0).abs() < 3.0 / (x * x));
            assert!((g * x * x - 1.0).abs() < 7.0 / (x * x));
        }
        let (f, g) = sici_auxiliary(5.0).unwrap();
        let v = si_ci(5.0).unwrap();
        let (s, c) = 5f64.sin_cos();
        assert!((f * s - g * c - v.ci).abs() < 1e-15);
    }
}
