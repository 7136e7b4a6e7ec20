//! Binomial double sums `Σ_n w(n) Σ_k C(n,k)(-1)^k f(k)`.

use crate::bernoulli::MAX_DIFFERENCE_DEGREE;
use crate::error::Result;
use crate::numerics::{EvalOptions, Neumaier, SeriesValue, TwoFold};

/// Run length of the stop rule.
const STOP_RUN: usize = 8;
/// Outer index cap; beyond it the binomial weights overflow.
const MAX_OUTER: usize = 1000;

/// Evaluate `Σ_{n≥0} w(n) Σ_{k=0}^{n} C(n,k)(-1)^k f(k)`.
///
/// Stops after [`STOP_RUN`] consecutive outer terms below
/// `max(abs_tol, 4·noise)`, where `noise` is the rounding level
/// `ε Σ_k C(n,k)|f(k)|` of the inner sum, or at `opts.max_terms` outer terms.
/// Terms below their own noise level carry no information and are left out of
/// the total; `converged` is false when the run was noise dominated.
pub(crate) fn binomial_double_sum(
    f: impl Fn(usize) -> f64,
    w: impl Fn(usize) -> f64,
    opts: &EvalOptions,
) -> SeriesValue {
    let cap = opts.max_terms.min(MAX_OUTER);
    let mut fk: Vec<f64> = Vec::new();
    let mut row: Vec<f64> = vec![1.0];
    let mut total = Neumaier::new();
    let mut noise_total = 0.0;
    let mut dropped = 0.0;
    let mut run = 0usize;
    let mut run_clean = true;
    for n in 0..cap {
        if n > 0 {
            row.push(1.0);
            for k in (1..n).rev() {
                row[k] += row[k - 1];
            }
        }
        fk.push(f(n));
        let mut inner = Neumaier::new();
        let mut mag = 0.0;
        for (k, (&c, &v)) in row.iter().zip(&fk).enumerate() {
            let term = c * v;
            mag += term.abs();
            inner.add(if k % 2 == 0 { term } else { -term });
        }
        let wn = w(n);
        let term = wn * inner.value();
        let noise = f64::EPSILON * mag * wn.abs();
        if term.abs() > 4.0 * noise {
            total.add(term);
            noise_total += noise;
        } else {
            dropped += term.abs();
        }

        if term.abs() <= opts.abs_tol.max(4.0 * noise) {
            run += 1;
            run_clean &= term.abs() <= opts.abs_tol;
        } else {
            run = 0;
            run_clean = true;
        }
        if run >= STOP_RUN {
            return SeriesValue {
                value: total.value(),
                err_estimate: noise_total + dropped,
                terms_used: n + 1,
                converged: run_clean,
            };
        }
    }
    SeriesValue {
        value: total.value(),
        err_estimate: noise_total + dropped,
        terms_used: cap,
        converged: false,
    }
}

/// Terminating double sum `Σ_{n=0}^{m} 1/d(n) Σ_k C(n,k)(-1)^k (t+k)^m` in
/// double-word arithmetic.
pub(crate) fn polynomial_double_sum(m: usize, t: f64, d: impl Fn(usize) -> f64) -> Result<f64> {
    if m > MAX_DIFFERENCE_DEGREE {
        return Err(crate::error::Error::DegreeLimit {
            function: "polynomial_double_sum",
            degree: m,
            max: MAX_DIFFERENCE_DEGREE,
        });
    }
    let mut acc = TwoFold::ZERO;
    let mut row = vec![TwoFold::ONE];
    for n in 0..=m {
        if n > 0 {
            let mut next = vec![TwoFold::ZERO; n + 1];
            for (k, &c) in row.iter().enumerate() {
                next[k] = next[k] + c;
                next[k + 1] = next[k + 1] + c;
            }
            row = next;
        }
        let mut inner = TwoFold::ZERO;
        for (k, &c) in row.iter().enumerate() {
            let p = (TwoFold::new(t) + TwoFold::new(k as f64)).powi(m as u32) * c;
            inner = if k % 2 == 0 { inner + p } else { inner - p };
        }
        acc = acc + inner.div_f64(d(n));
    }
    Ok(acc.to_f64())
}

/// Smallest integer `K ≥ 0` with `t + K ≥ floor`.
pub(crate) fn shift_for(t: f64, floor: f64) -> usize {
    if t >= floor {
        0
    } else {
        (floor - t).ceil() as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_weights_sum_exponential() {
        // Σ 2^-(n+1) Δ-form of q^k equals 1/(1+q)
        let q = 0.3f64;
        let v = binomial_double_sum(
            |k| q.powi(k as i32),
            |n| 0.5f64.powi(n as i32 + 1),
            &EvalOptions::default(),
        );
        assert!(v.converged);
        assert!((v.value - 1.0 / (1.0 + q)).abs() < 1e-13);
    }

    #[test]
    fn polynomial_sum_terminates() {
        // Σ_{n} 1/(n+1) Δ-form of (t+k)^2 = B_2(t)
        let t = 0.3;
        let v = polynomial_double_sum(2, t, |n| (n + 1) as f64).unwrap();
        assert!((v - (t * t - t + 1.0 / 6.0)).abs() < 1e-16);
    }

    #[test]
    fn shift_rounds_up() {
        assert_eq!(shift_for(0.3, 10.0), 10);
        assert_eq!(shift_for(12.0, 10.0), 0);
        assert_eq!(shift_for(0.0, 1.0), 1);
    }
}
