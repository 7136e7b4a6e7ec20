use super::{EvalOptions, SeriesValue, TailWindow};
use std::f64::consts::PI;

/// Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl Extend<f64> for Neumaier {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

/// Compensated (Neumaier) sum of a sequence.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    let mut acc = Neumaier::new();
    acc.extend(terms);
    acc.value()
}

/// Sum `Σ_{n≥1} (-1)^(n+1) a(n)` by repeated averaging of partial sums.
///
/// The number of partial sums is doubled from 16 until two successive apex
/// values agree to `opts.tolerance`, or `opts.max_terms` is reached.
pub fn euler_transform_alternating(a: impl Fn(usize) -> f64, opts: &EvalOptions) -> SeriesValue {
    let cap = opts.max_terms.clamp(8, 1 << 13);
    let mut partials: Vec<f64> = Vec::with_capacity(cap);
    let mut acc = Neumaier::new();
    let mut push_until = |partials: &mut Vec<f64>, n: usize| {
        while partials.len() < n {
            let k = partials.len() + 1;
            let term = a(k);
            acc.add(if k % 2 == 1 { term } else { -term });
            partials.push(acc.value());
        }
    };

    let mut n = 16.min(cap);
    push_until(&mut partials, n);
    let mut prev = apex(&partials[..n]);
    let mut diff = f64::INFINITY;
    while n < cap {
        n = (2 * n).min(cap);
        push_until(&mut partials, n);
        let cur = apex(&partials[..n]);
        diff = (cur - prev).abs();
        prev = cur;
        if diff <= opts.tolerance(cur) {
            return SeriesValue {
                value: cur,
                err_estimate: diff,
                terms_used: n,
                converged: true,
            };
        }
    }
    SeriesValue {
        value: prev,
        err_estimate: diff,
        terms_used: n,
        converged: false,
    }
}

fn apex(partials: &[f64]) -> f64 {
    let mut v = partials.to_vec();
    for len in (1..v.len()).rev() {
        for i in 0..len {
            v[i] = 0.5 * (v[i] + v[i + 1]);
        }
    }
    v[0]
}

/// Tail-averaged value of `Σ_{n≥1} term(n)`.
///
/// Sums `opts.max_terms` terms and returns the (optionally Hann-weighted)
/// mean of the last `opts.tail_window_len()` partial sums. The error estimate
/// is half the spread of the window's partial sums; it overstates the error of
/// the mean for oscillating tails, so `converged` is frequently false.
pub fn tail_averaged_sum(mut term: impl FnMut(usize) -> f64, opts: &EvalOptions) -> SeriesValue {
    let n_total = opts.max_terms.max(1);
    let w = opts.tail_window_len();
    let start = n_total - w + 1;
    let mut acc = Neumaier::new();
    let mut mean = Neumaier::new();
    let mut wsum = Neumaier::new();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for n in 1..=n_total {
        acc.add(term(n));
        if n >= start {
            let s = acc.value();
            let weight = window_weight(opts.tail_window, n - start, w);
            mean.add(weight * s);
            wsum.add(weight);
            lo = lo.min(s);
            hi = hi.max(s);
        }
    }
    let value = mean.value() / wsum.value();
    let err = 0.5 * (hi - lo);
    SeriesValue {
        value,
        err_estimate: err,
        terms_used: n_total,
        converged: err <= opts.tolerance(value),
    }
}

#[inline]
pub(crate) fn window_weight(window: TailWindow, j: usize, w: usize) -> f64 {
    match window {
        TailWindow::Flat => 1.0,
        TailWindow::Hann => {
            let s = (PI * (j as f64 + 0.5) / w as f64).sin();
            s * s
        }
    }
}

/// `Σ_{k≥1} (x+k)^(-p)` for `p > 1` by a short Euler-Maclaurin expansion.
/// Intended for `x` of order 100 or more.
pub fn power_tail(p: f64, x: f64) -> f64 {
    let g = x.powf(-p);
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let p3 = p * (p + 1.0) * (p + 2.0);
    let p5 = p3 * (p + 3.0) * (p + 4.0);
    x * g / (p - 1.0) - 0.5 * g + p * g * inv / 12.0 - p3 * g * inv * inv2 / 720.0
        + p5 * g * inv * inv2 * inv2 / 30240.0
}

/// `Σ_{k≥1} log(x+k) (x+k)^(-p)` for `p > 1`.
pub fn log_power_tail(p: f64, x: f64) -> f64 {
    let l = x.ln();
    let g = x.powf(-p);
    let inv = 1.0 / x;
    let integral = x * g * (l / (p - 1.0) + 1.0 / ((p - 1.0) * (p - 1.0)));
    let d1 = g * inv * (1.0 - p * l);
    let d3 = g
        * inv
        * inv
        * inv
        * (-(p + 2.0) * p * (p + 1.0) * l + (p + 2.0) * (2.0 * p + 1.0) + p * (p + 1.0));
    integral - 0.5 * l * g - d1 / 12.0 + d3 / 720.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairwise(xs: &[f64]) -> f64 {
        match xs.len() {
            0 => 0.0,
            1 => xs[0],
            n => pairwise(&xs[..n / 2]) + pairwise(&xs[n / 2..]),
        }
    }

    #[test]
    fn neumaier_recovers_cancelled_unit() {
        assert_eq!(compensated_sum([1.0, 1e100, 1.0, -1e100]), 2.0);
    }

    #[test]
    fn compensated_matches_pairwise_on_harmonic() {
        let xs: Vec<f64> = (1..=100_000).map(|k| 1.0 / k as f64).collect();
        assert!((compensated_sum(xs.iter().copied()) - pairwise(&xs)).abs() < 1e-13);
    }

    #[test]
    fn euler_transform_log2() {
        let v = euler_transform_alternating(|n| 1.0 / n as f64, &EvalOptions::default());
        assert!(v.converged);
        assert!((v.value - std::f64::consts::LN_2).abs() < 1e-13);
    }

    #[test]
    fn euler_transform_leibniz() {
        let v = euler_transform_alternating(|n| 1.0 / (2 * n - 1) as f64, &EvalOptions::default());
        assert!((v.value - PI / 4.0).abs() < 1e-13);
    }

    #[test]
    fn euler_transform_sums_divergent_grandi_type() {
        // 1 - 2 + 3 - ... is Euler-summable to 1/4
        let v = euler_transform_alternating(|n| n as f64, &EvalOptions::default());
        assert!((v.value - 0.25).abs() < 1e-12);
    }

    #[test]
    fn hann_tail_average_of_sine_series() {
        // Σ sin(n θ)/n = (π - θ)/2 on (0, 2π)
        let theta = 0.3;
        let opts = EvalOptions::default();
        let v = tail_averaged_sum(|n| (n as f64 * theta).sin() / n as f64, &opts);
        assert!((v.value - (PI - theta) / 2.0).abs() < 1e-9, "{}", v.value);
        let flat = tail_averaged_sum(
            |n| (n as f64 * theta).sin() / n as f64,
            &opts.with_tail_window(TailWindow::Flat),
        );
        assert!((flat.value - (PI - theta) / 2.0).abs() < 1e-5);
    }

    #[test]
    fn power_tail_zeta2() {
        let head: f64 = compensated_sum((1..=100).map(|n| 1.0 / (n * n) as f64));
        assert!((head + power_tail(2.0, 100.0) - PI * PI / 6.0).abs() < 1e-15);
        let head3: f64 = compensated_sum((1..=100).map(|n| (n as f64).powi(-3)));
        // ζ(3)
        assert!((head3 + power_tail(3.0, 100.0) - 1.2020569031595942).abs() < 1e-15);
    }

    #[test]
    fn log_power_tail_zeta_prime2() {
        let n = 1000;
        let head = compensated_sum((2..=n).map(|k| (k as f64).ln() / (k * k) as f64));
        let zp2 = -0.937548254315843753703;
        assert!((head + log_power_tail(2.0, n as f64) + zp2).abs() < 1e-15);
    }
}
