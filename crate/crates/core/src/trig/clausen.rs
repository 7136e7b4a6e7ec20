//! Clausen functions `Cl_{2N}(x) = Σ sin nx/n^{2N}`,
//! `Cl_{2N+1}(x) = Σ cos nx/n^{2N+1}` and their expressions through
//! s-derivatives of the Hurwitz zeta function.

use crate::error::{Error, Result};
use crate::numerics::{sin_pi, EvalOptions, Harmonics, SeriesValue};
use crate::zeta::{hurwitz_zeta_sderiv, power_harmonics};
use std::f64::consts::PI;

/// Order of a Clausen function and the trigonometric sum it selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClausenOrder {
    pub order: u32,
}

/// Which sum a [`ClausenOrder`] denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClausenParity {
    /// Order 1: `-log|2 sin(x/2)|`.
    ClosedForm,
    /// Even order: sine sum.
    Sine,
    /// Odd order ≥ 3: cosine sum.
    Cosine,
}

impl ClausenOrder {
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::domain("ClausenOrder", "order must be at least 1"));
        }
        Ok(Self { order })
    }

    pub fn parity(&self) -> ClausenParity {
        match self.order {
            1 => ClausenParity::ClosedForm,
            n if n % 2 == 0 => ClausenParity::Sine,
            _ => ClausenParity::Cosine,
        }
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// `Cl_order(x)`.
///
/// Order 1 is the closed form `-log(2 sin(x/2))` on `0 < x < 2π`. Higher
/// orders sum the series directly with a summation-by-parts tail.
pub fn clausen(order: u32, x: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    let kind = ClausenOrder::new(order)?.parity();
    if !x.is_finite() {
        return Err(Error::domain("clausen", format!("non-finite argument {x}")));
    }
    let turns = x / (2.0 * PI);
    if kind == ClausenParity::ClosedForm {
        if x == 0.0 || x == 2.0 * PI {
            return Err(Error::Singularity {
                function: "clausen",
                x,
            });
        }
        if !(x > 0.0 && x < 2.0 * PI) {
            return Err(Error::domain(
                "clausen",
                format!("order 1 requires 0 < x < 2π, got {x}"),
            ));
        }
        return Ok(SeriesValue::exact(-(2.0 * sin_pi(turns)).ln(), 0));
    }
    let pair = power_harmonics(Harmonics::all(turns), f64::from(order), opts);
    Ok(match kind {
        ClausenParity::Sine => pair.sin,
        _ => pair.cos,
    })
}

/// `Cl_order(2π x)` on `0 < x < 1` from zeta derivatives:
/// `Cl_{2N}(2πx) = (-1)^(N+1) (2π)^(2N-1)/(2N-1)! [ζ'(1-2N, x) - ζ'(1-2N, 1-x)]` and
/// `Cl_{2N+1}(2πx) = (-1)^N (2π)^(2N)/(2N)! [ζ'(-2N, x) + ζ'(-2N, 1-x)]`.
pub fn clausen_via_zeta(order: u32, x_frac: f64) -> Result<f64> {
    ClausenOrder::new(order)?;
    if !(x_frac > 0.0 && x_frac < 1.0) {
        return Err(Error::domain(
            "clausen_via_zeta",
            format!("requires 0 < x < 1, got {x_frac}"),
        ));
    }
    let d = |s: f64, t: f64| hurwitz_zeta_sderiv(1, s, t);
    let s = 1.0 - f64::from(order);
    let scale = (2.0 * PI).powi(order as i32 - 1) / factorial(order - 1);
    Ok(if order.is_multiple_of(2) {
        let n = order / 2;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        sign * scale * (d(s, x_frac)? - d(s, 1.0 - x_frac)?)
    } else {
        let n = (order - 1) / 2;
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * scale * (d(s, x_frac)? + d(s, 1.0 - x_frac)?)
    })
}

/// `Σ sin(nπx)/n^(2N)` or `Σ cos(nπx)/n^(2N+1)` on `0 < x < 2` from the
/// half-argument zeta derivatives:
/// `(-1)^N (2π)^(2N-1)/(2N-1)! [ζ'(1-2N, 1-x/2) - ζ'(1-2N, x/2)]` and
/// `(-1)^N (2π)^(2N)/(2N)! [ζ'(-2N, 1-x/2) + ζ'(-2N, x/2)]`.
pub fn clausen_half_angle(order: u32, x: f64) -> Result<f64> {
    ClausenOrder::new(order)?;
    if !(x > 0.0 && x < 2.0) {
        return Err(Error::domain(
            "clausen_half_angle",
            format!("requires 0 < x < 2, got {x}"),
        ));
    }
    let d = |s: f64, t: f64| hurwitz_zeta_sderiv(1, s, t);
    let s = 1.0 - f64::from(order);
    let n = order / 2;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let scale = sign * (2.0 * PI).powi(order as i32 - 1) / factorial(order - 1);
    let (a, b) = (d(s, 1.0 - 0.5 * x)?, d(s, 0.5 * x)?);
    Ok(if order.is_multiple_of(2) {
        scale * (a - b)
    } else {
        scale * (a + b)
    })
}
