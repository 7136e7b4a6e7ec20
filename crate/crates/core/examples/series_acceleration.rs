//! Compensated summation, the Euler transform for alternating series and
//! windowed averaging of conditionally convergent partial sums.

use kummer::numerics::{
    compensated_sum, euler_transform_alternating, frac_mul, sin_2pi, tail_averaged_sum, TailWindow,
};
use kummer::EvalOptions;
use std::f64::consts::{LN_2, PI};

fn main() {
    let naive: f64 = (0..1_000_000).map(|_| 0.1).sum();
    let comp = compensated_sum((0..1_000_000).map(|_| 0.1));
    println!("a million 0.1s: naive {naive:.17e}, compensated {comp:.17e}");

    let o = EvalOptions::default();
    let v = euler_transform_alternating(|n| 1.0 / n as f64, &o);
    println!(
        "Σ (-1)^(n+1)/n = {:.16e} after {} terms (log 2 = {LN_2:.16e})",
        v.value, v.terms_used
    );

    let t = 0.3;
    for window in [TailWindow::Flat, TailWindow::Hann] {
        let o = EvalOptions::default().with_tail_window(window);
        let v = tail_averaged_sum(|n| sin_2pi(frac_mul(n as f64, t)) / n as f64, &o);
        println!(
            "{window:?}: Σ sin 2πnt/n error {:.1e}",
            v.value - PI * (0.5 - t)
        );
    }
}
