//! Trigonometric series `Σ g(n) e^{2πi m_n τ}` over an arithmetic progression
//! of frequencies `m_n = step·n + offset`.

use super::phase::{cos_2pi, frac_mul, sin_2pi};
use super::summation::{window_weight, Neumaier};
use super::{EvalOptions, SeriesValue};
use num_complex::Complex64;

/// Frequency progression and phase increment (in turns per unit frequency).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Harmonics {
    pub step: u32,
    pub offset: i32,
    pub tau: f64,
}

impl Harmonics {
    /// Frequencies `1, 2, 3, ...`.
    pub fn all(tau: f64) -> Self {
        Self {
            step: 1,
            offset: 0,
            tau,
        }
    }

    /// Frequencies `1, 3, 5, ...`.
    pub fn odd(tau: f64) -> Self {
        Self {
            step: 2,
            offset: -1,
            tau,
        }
    }

    fn frequency(&self, n: usize) -> f64 {
        self.step as f64 * n as f64 + self.offset as f64
    }

    fn unit(&self, n: usize) -> Complex64 {
        let ph = frac_mul(self.frequency(n), self.tau);
        Complex64::new(cos_2pi(ph), sin_2pi(ph))
    }

    /// True when consecutive terms share one phase, so the series does not
    /// oscillate.
    pub fn is_flat(&self) -> bool {
        let f = frac_mul(self.step as f64, self.tau);
        f == 0.0 || f == 1.0
    }
}

/// Cosine and sine parts of a complex trigonometric sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigPair {
    pub cos: SeriesValue,
    pub sin: SeriesValue,
}

/// Absolutely convergent sum with `n_terms` explicit terms plus a tail
/// correction.
///
/// Oscillating tails use three orders of summation by parts. Non-oscillating
/// tails use `flat_tail(N) = Σ_{n>N} g(n)`.
pub fn harmonic_sum(
    h: Harmonics,
    g: impl Fn(usize) -> f64,
    n_terms: usize,
    flat_tail: impl Fn(usize) -> f64,
) -> TrigPair {
    let (mut c, mut s) = (Neumaier::new(), Neumaier::new());
    for n in 1..=n_terms {
        let w = h.unit(n) * g(n);
        c.add(w.re);
        s.add(w.im);
    }
    let n = n_terms;
    let w_next = h.unit(n + 1);
    let (tail, err) = if h.is_flat() {
        let g1 = g(n + 1).abs();
        (w_next * flat_tail(n), g1 / ((n + 1) as f64).powi(3))
    } else {
        let zp = frac_mul(h.step as f64, h.tau);
        let z = Complex64::new(cos_2pi(zp), sin_2pi(zp));
        let d = z - 1.0;
        let gs = [g(n + 1), g(n + 2), g(n + 3), g(n + 4)];
        let d1 = gs[1] - gs[0];
        let d2 = gs[2] - 2.0 * gs[1] + gs[0];
        let d3 = gs[3] - 3.0 * gs[2] + 3.0 * gs[1] - gs[0];
        let t = -gs[0] / d + d1 * z / (d * d) - d2 * z * z / (d * d * d);
        (w_next * t, d3.abs() / d.norm().powi(4))
    };
    c.add(tail.re);
    s.add(tail.im);
    let mk = |v: f64| SeriesValue {
        value: v,
        err_estimate: err,
        terms_used: n_terms,
        converged: err.is_finite(),
    };
    TrigPair {
        cos: mk(c.value()),
        sin: mk(s.value()),
    }
}

/// Conditionally convergent sum evaluated by windowed averaging of partial
/// sums (see [`super::tail_averaged_sum`]).
pub fn harmonic_tail_averaged(
    h: Harmonics,
    g: impl Fn(usize) -> f64,
    opts: &EvalOptions,
) -> TrigPair {
    let n_total = opts.max_terms.max(1);
    let w = opts.tail_window_len();
    let start = n_total - w + 1;
    let (mut c, mut s) = (Neumaier::new(), Neumaier::new());
    let (mut mc, mut ms, mut wsum) = (Neumaier::new(), Neumaier::new(), Neumaier::new());
    let mut spread = [(f64::INFINITY, f64::NEG_INFINITY); 2];
    for n in 1..=n_total {
        let t = h.unit(n) * g(n);
        c.add(t.re);
        s.add(t.im);
        if n >= start {
            let weight = window_weight(opts.tail_window, n - start, w);
            let (cv, sv) = (c.value(), s.value());
            mc.add(weight * cv);
            ms.add(weight * sv);
            wsum.add(weight);
            spread[0] = (spread[0].0.min(cv), spread[0].1.max(cv));
            spread[1] = (spread[1].0.min(sv), spread[1].1.max(sv));
        }
    }
    let mk = |m: &Neumaier, (lo, hi): (f64, f64)| {
        let value = m.value() / wsum.value();
        let err = 0.5 * (hi - lo);
        SeriesValue {
            value,
            err_estimate: err,
            terms_used: n_total,
            converged: err <= opts.tolerance(value),
        }
    };
    TrigPair {
        cos: mk(&mc, spread[0]),
        sin: mk(&ms, spread[1]),
    }
}
