//! Tanh-sinh (double-exponential) quadrature on finite intervals.
//!
//! Nodes are stored as distances from the nearer endpoint, so integrable
//! endpoint singularities such as `log x` are sampled without cancellation
//! near the left endpoint. Interior singularities must be split off with
//! [`integrate_split`].

use crate::error::{Error, Result};
use crate::numerics::{EvalOptions, Neumaier};
use std::f64::consts::FRAC_PI_2;
use std::sync::OnceLock;

/// Outcome of a quadrature run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    /// Difference between the last two levels.
    pub err_estimate: f64,
    pub levels_used: u32,
    pub converged: bool,
}

/// Half-width of the truncated `t` range.
const T_MAX: f64 = 4.5;
/// Levels kept in the shared node table; deeper levels are generated on
/// demand.
const CACHED_LEVELS: u32 = 14;
/// Fewest levels run before the convergence test is trusted.
const MIN_LEVEL: u32 = 3;

/// One abscissa pair `t, -t` on the unit interval: distance `delta` from each
/// endpoint and the weight `dx/dt` shared by both.
#[derive(Debug, Clone, Copy)]
struct Node {
    delta: f64,
    weight: f64,
}

fn node(t: f64) -> Node {
    let u = FRAC_PI_2 * t.sinh();
    let e = (-2.0 * u).exp();
    let delta = e / (1.0 + e);
    // d/dt of (1 + tanh u)/2
    let weight = FRAC_PI_2 * t.cosh() * 2.0 * e / ((1.0 + e) * (1.0 + e));
    Node { delta, weight }
}

/// Nodes introduced at `level`: `t = 0, 1, 2, ...` at level 0 and the odd
/// multiples of `2^-level` afterwards, all within `T_MAX`.
fn level_nodes(level: u32) -> Vec<Node> {
    if level == 0 {
        return (0..=T_MAX as usize).map(|j| node(j as f64)).collect();
    }
    let h = (-(level as f64)).exp2();
    (1..)
        .step_by(2)
        .map(|j| j as f64 * h)
        .take_while(|&t| t <= T_MAX)
        .map(node)
        .collect()
}

fn cached(level: u32) -> Option<&'static [Node]> {
    static TABLE: OnceLock<Vec<Vec<Node>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| (0..=CACHED_LEVELS).map(level_nodes).collect());
    table.get(level as usize).map(|v| v.as_slice())
}

fn check_interval(a: f64, b: f64) -> Result<()> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::domain(
            "integrate",
            format!("requires finite a < b, got [{a}, {b}]"),
        ));
    }
    Ok(())
}

/// `∫_a^b f(x) dx` by tanh-sinh quadrature with level doubling.
///
/// Stops once two successive levels differ by at most `opts.abs_tol`, or at
/// `opts.quad_max_level`. Non-finite samples and abscissae that round onto an
/// endpoint are skipped.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, opts: &EvalOptions) -> Result<QuadResult> {
    opts.validate()?;
    check_interval(a, b)?;
    let width = b - a;
    let mut raw = Neumaier::new();
    let add = |n: &Node, raw: &mut Neumaier| {
        let d = width * n.delta;
        for x in [a + d, b - d] {
            if x > a && x < b {
                let y = f(x);
                if y.is_finite() {
                    raw.add(n.weight * y);
                }
            }
        }
    };
    let mut prev = f64::NAN;
    let mut result = QuadResult {
        value: f64::NAN,
        err_estimate: f64::INFINITY,
        levels_used: 0,
        converged: false,
    };
    for level in 0..=opts.quad_max_level {
        let owned;
        let nodes = match cached(level) {
            Some(n) => n,
            None => {
                owned = level_nodes(level);
                &owned
            }
        };
        for (i, n) in nodes.iter().enumerate() {
            if level == 0 && i == 0 {
                // the centre node has no mirror
                let y = f(a + 0.5 * width);
                if y.is_finite() {
                    raw.add(n.weight * y);
                }
            } else {
                add(n, &mut raw);
            }
        }
        let h = (-(level as f64)).exp2();
        let value = width * h * raw.value();
        let diff = (value - prev).abs();
        result = QuadResult {
            value,
            err_estimate: if level == 0 { f64::INFINITY } else { diff },
            levels_used: level,
            converged: false,
        };
        if level >= MIN_LEVEL && diff <= opts.abs_tol {
            result.converged = true;
            break;
        }
        prev = value;
    }
    Ok(result)
}

/// [`integrate`] over the pieces of `[a, b]` cut at `singular_points`.
///
/// Points must lie in `[a, b]`; points on the endpoints are ignored.
pub fn integrate_split(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    singular_points: &[f64],
    opts: &EvalOptions,
) -> Result<QuadResult> {
    check_interval(a, b)?;
    let mut cuts: Vec<f64> = Vec::with_capacity(singular_points.len() + 2);
    for &p in singular_points {
        if !(a..=b).contains(&p) {
            return Err(Error::domain(
                "integrate_split",
                format!("split point {p} outside [{a}, {b}]"),
            ));
        }
        if p > a && p < b {
            cuts.push(p);
        }
    }
    cuts.push(a);
    cuts.push(b);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut total = QuadResult {
        value: 0.0,
        err_estimate: 0.0,
        levels_used: 0,
        converged: true,
    };
    let mut acc = Neumaier::new();
    for w in cuts.windows(2) {
        let r = integrate(&f, w[0], w[1], opts)?;
        acc.add(r.value);
        total.err_estimate += r.err_estimate;
        total.levels_used = total.levels_used.max(r.levels_used);
        total.converged &= r.converged;
    }
    total.value = acc.value();
    Ok(total)
}

/// [`integrate`] that turns non-convergence into [`Error::Quadrature`].
pub fn integrate_strict(f: impl Fn(f64) -> f64, a: f64, b: f64, opts: &EvalOptions) -> Result<f64> {
    let r = integrate(f, a, b, opts)?;
    if r.converged {
        Ok(r.value)
    } else {
        Err(Error::Quadrature {
            estimate: r.value,
            levels: r.levels_used,
            last_diff: r.err_estimate,
        })
    }
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn polynomials_integrate_exactly(coeffs in prop::collection::vec(-1.0f64..1.0, 1..=11)) {
            let o = EvalOptions::default().with_abs_tol(1e-15).with_quad_max_level(8);
            let p = |x: f64| coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c);
            let exact: f64 = coeffs.iter().enumerate().map(|(k, &c)| c / (k + 1) as f64).sum();
            let r = integrate(p, 0.0, 1.0, &o).unwrap();
            prop_assert!((r.value - exact).abs() <= 1e-13, "{} vs {exact}", r.value);
        }
    }
}
