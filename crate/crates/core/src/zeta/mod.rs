//! Hurwitz zeta function, its s-derivatives, the alternating Hurwitz zeta
//! function and the real-argument Lerch transcendent.
//!
//! [`hurwitz_zeta`] (Euler-Maclaurin) is the reference evaluator; the other
//! routes are independent series representations checked against it.

mod alternating;
mod em;
mod fourier;
pub(crate) mod hasse;

pub use alternating::{
    alt_hurwitz_zeta, alt_hurwitz_zeta_forms, alt_hurwitz_zeta_fourier, alt_hurwitz_zeta_sondow,
    alt_zeta_derivative, alt_zeta_hardy, alt_zeta_pole_product, hansen_patrick, lerch_phi,
};
pub use em::{hurwitz_difference, hurwitz_zeta, hurwitz_zeta_sderiv, riemann_zeta};
pub use fourier::{hurwitz_zeta_fourier, zeta_prime_minus1_fourier};
pub(crate) use fourier::{power_harmonics, CORRECTED_TERMS};

use crate::error::{Error, Result};
use crate::numerics::{EvalOptions, SeriesValue};
use hasse::{binomial_double_sum, polynomial_double_sum, shift_for};

/// Shift floor for the Hasse series: the double sum is evaluated at `t + K`
/// with `t + K ≥ HASSE_SHIFT`, and the `K` leading terms are added back.
pub(crate) const HASSE_SHIFT: f64 = 20.0;

/// Hasse's binomial double sum
/// `ζ(s,t) = 1/(s-1) Σ_n 1/(n+1) Σ_k C(n,k)(-1)^k (t+k)^(1-s)`.
///
/// When `1-s` is a non-negative integer the sum terminates and is evaluated in
/// double-word arithmetic. Otherwise the argument is first shifted to
/// `a = t + K ≥ 20`, where the outer terms decay like `n^-a` instead of
/// `n^-t`, and `Σ_{j<K} (t+j)^(-s)` is added back.
pub fn hurwitz_zeta_hasse(s: f64, t: f64, opts: &EvalOptions) -> Result<SeriesValue> {
    opts.validate()?;
    if s == 1.0 {
        return Err(Error::Pole {
            function: "hurwitz_zeta_hasse",
        });
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(
            "hurwitz_zeta_hasse",
            format!("requires t > 0, got {t}"),
        ));
    }
    let m = 1.0 - s;
    if m >= 0.0 && m.fract() == 0.0 && m <= crate::bernoulli::MAX_DIFFERENCE_DEGREE as f64 {
        let v = polynomial_double_sum(m as usize, t, |n| (n + 1) as f64)?;
        return Ok(SeriesValue::exact(v / (s - 1.0), m as usize + 1));
    }
    let k = shift_for(t, HASSE_SHIFT);
    let a = t + k as f64;
    let head: f64 = crate::numerics::compensated_sum((0..k).map(|j| (t + j as f64).powf(-s)));
    let v = binomial_double_sum(|j| (a + j as f64).powf(m), |n| 1.0 / (n + 1) as f64, opts);
    Ok(v.affine(1.0 / (s - 1.0), head))
}
