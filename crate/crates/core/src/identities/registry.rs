use super::{ConvergenceClass, IdentityCheck, Sample, Sampling, Side};
use crate::bernoulli::{
    bernoulli_fourier, bernoulli_number, bernoulli_poly, bernoulli_poly_hasse, euler_fourier,
    euler_poly,
};
use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::gamma::{
    alexeiewsky, digamma, digamma_hasse, log_barnes_g_fourier, log_barnes_g_hasse,
    log_barnes_g_product, log_barnes_g_zeta, log_gamma, log_gamma_hasse, log_gamma_kummer,
    trigamma,
};
use crate::numerics::{
    compensated_sum, cos_pi, euler_transform_alternating, frac_mul, sin_2pi, sin_pi, EvalOptions,
};
use crate::quadrature::{integrate_split, integrate_strict};
use crate::trig::{
    barnes_ci_combination, clausen, clausen_half_angle, clausen_via_zeta, digamma_lerch_series,
    elizalde_series, glaisher_si_sum, hansen_offset_sums, log_sine_integral, loggamma_ci_series,
    norlund_digamma_series, rational_sine_zeta_sum, si_moment_sum, sondow_series,
};
use crate::zeta::{
    alt_hurwitz_zeta, alt_hurwitz_zeta_forms, alt_hurwitz_zeta_fourier, alt_hurwitz_zeta_sondow,
    alt_zeta_hardy, alt_zeta_pole_product, hansen_patrick, hurwitz_zeta, hurwitz_zeta_fourier,
    hurwitz_zeta_hasse, hurwitz_zeta_sderiv, riemann_zeta, zeta_prime_minus1_fourier,
};
use std::f64::consts::{LN_2, PI};
use std::sync::Arc;

use ConvergenceClass::{Approximate, Converged, TailCorrected};

/// Partial sums on the right of the cotangent identity.
const COT_SERIES_TERMS: usize = 200;

fn point(s: &Sample) -> Result<f64> {
    s.point
        .ok_or_else(|| Error::Options("check needs a sample point".into()))
}

fn at(f: impl Fn(f64, &EvalOptions) -> Result<f64> + Send + Sync + 'static) -> Side {
    Arc::new(move |s, o| f(point(s)?, o))
}

fn fixed(f: impl Fn(&EvalOptions) -> Result<f64> + Send + Sync + 'static) -> Side {
    Arc::new(move |_, o| f(o))
}

fn value(v: f64) -> Side {
    Arc::new(move |_, _| Ok(v))
}

fn paired(f: impl Fn(f64, f64) -> Result<f64> + Send + Sync + 'static) -> Side {
    Arc::new(move |s, _| {
        let p = s
            .param
            .ok_or_else(|| Error::Options("check needs a seeded parameter".into()))?;
        f(p, point(s)?)
    })
}

/// Quadrature tolerance: two digits below the evaluator tolerance.
fn quad_opts(o: &EvalOptions) -> EvalOptions {
    o.with_abs_tol((o.abs_tol * 1e-2).max(1e-14))
}

fn quad(f: impl Fn(f64) -> f64, a: f64, b: f64, o: &EvalOptions) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    integrate_strict(f, a, b, &quad_opts(o))
}

fn quad_split(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    cuts: &[f64],
    o: &EvalOptions,
) -> Result<f64> {
    let r = integrate_split(f, a, b, cuts, &quad_opts(o))?;
    if !r.converged {
        return Err(Error::Quadrature {
            estimate: r.value,
            levels: r.levels_used,
            last_diff: r.err_estimate,
        });
    }
    Ok(r.value)
}

// Integrand helpers. Quadrature nodes lie strictly inside the interval, so
// the arguments below are always in range.
fn lg(t: f64) -> f64 {
    log_gamma(t).expect("quadrature node is positive")
}

fn bp(m: usize, t: f64) -> f64 {
    bernoulli_poly(m, t).expect("degree within the cached range")
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn dz(s: f64, t: f64) -> Result<f64> {
    hurwitz_zeta_sderiv(1, s, t)
}

/// `(1/π) Σ log n/n sin 2πnt`, read off the Kummer evaluation.
fn kummer_sum(t: f64, o: &EvalOptions) -> Result<f64> {
    let c = Constants::get();
    let head = 0.5 * (PI / sin_pi(t)).ln() + (c.euler_gamma + c.log_two_pi) * (0.5 - t);
    Ok(log_gamma_kummer(t, o)?.value - head)
}

struct Entry {
    id: String,
    description: &'static str,
    paper_ref: &'static str,
    class: ConvergenceClass,
    tolerance: f64,
    sampling: Sampling,
    integral: bool,
}

fn entry(
    id: impl Into<String>,
    paper_ref: &'static str,
    description: &'static str,
    class: ConvergenceClass,
    tolerance: f64,
    sampling: Sampling,
) -> Entry {
    Entry {
        id: id.into(),
        description,
        paper_ref,
        class,
        tolerance,
        sampling,
        integral: false,
    }
}

impl Entry {
    fn integral(mut self) -> Self {
        self.integral = true;
        self
    }

    fn sides(self, lhs: Side, rhs: Side) -> IdentityCheck {
        IdentityCheck {
            id: self.id,
            description: self.description,
            paper_ref: self.paper_ref,
            tolerance: self.tolerance,
            class: self.class,
            sampling: self.sampling,
            integral: self.integral,
            lhs,
            rhs,
        }
    }
}

fn points(p: &[f64]) -> Sampling {
    Sampling::Points(p.to_vec())
}

/// Every registered identity, ordered by equation label.
pub fn registry() -> Vec<IdentityCheck> {
    let mut r = Vec::new();
    hasse_and_kummer(&mut r);
    parseval_and_integrals(&mut r);
    barnes(&mut r);
    gosper_kinkelin(&mut r);
    alternating(&mut r);
    trigonometric(&mut r);
    sine_cosine_integrals(&mut r);
    r
}

fn hasse_and_kummer(r: &mut Vec<IdentityCheck>) {
    for s in [3.0, -1.5] {
        r.push(
            entry(
                format!("EQ-1.1@s={s}"),
                "Hasse's series for the Hurwitz zeta function",
                "binomial double sum for ζ(s,t) against Euler-Maclaurin",
                Converged,
                1e-8,
                Sampling::Grid,
            )
            .sides(
                at(move |t, o| Ok(hurwitz_zeta_hasse(s, t, o)?.value)),
                at(move |t, _| hurwitz_zeta(s, t)),
            ),
        );
    }
    r.push(
        entry(
            "EQ-1.3@s=-1",
            "Hurwitz's Fourier expansion of ζ(s,t)",
            "Fourier series for ζ(-1,t) against Euler-Maclaurin",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(hurwitz_zeta_fourier(-1.0, t, o)?.value)),
            at(|t, _| hurwitz_zeta(-1.0, t)),
        ),
    );
    r.push(
        entry(
            "EQ-1.3@s=0.5",
            "Hurwitz's Fourier expansion of ζ(s,t), Boudjelkha's extension to the critical strip",
            "tail-averaged Fourier series for ζ(1/2,t) against Euler-Maclaurin",
            Approximate,
            1e-6,
            Sampling::InteriorGrid,
        )
        .sides(
            at(|t, o| Ok(hurwitz_zeta_fourier(0.5, t, o)?.value)),
            at(|t, _| hurwitz_zeta(0.5, t)),
        ),
    );
    r.push(
        entry(
            "EQ-2.4@s=1",
            "s-derivative of s·ζ(1-s,t) at s = 1",
            "binomial double sum of (t+k)log(t+k) against its trigonometric closed side",
            Approximate,
            1e-4,
            Sampling::InteriorGrid,
        )
        .sides(
            at(|t, o| {
                let c = Constants::get();
                let d = log_gamma_hasse(t, o)?.value - 0.5 + t - 0.5 * c.log_two_pi;
                Ok(-d)
            }),
            at(|t, o| {
                let c = Constants::get();
                Ok(
                    0.5 * (2.0 * sin_pi(t)).ln() + (1.0 - c.euler_gamma - c.log_two_pi) * (0.5 - t)
                        - kummer_sum(t, o)?,
                )
            }),
        ),
    );
    r.push(
        entry(
            "EQ-2.8",
            "binomial double-sum series for log Γ",
            "double-sum log Γ against the Stirling reference",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(log_gamma_hasse(t, o)?.value)),
            at(|t, _| log_gamma(t)),
        ),
    );
    r.push(
        entry(
            "EQ-2.9",
            "Kummer's Fourier series for log Γ",
            "tail-averaged Kummer series against the Stirling reference",
            Approximate,
            1e-4,
            Sampling::InteriorGrid,
        )
        .sides(
            at(|t, o| Ok(log_gamma_kummer(t, o)?.value)),
            at(|t, _| log_gamma(t)),
        ),
    );
    r.push(
        entry(
            "EQ-2.9@t=1/2",
            "Kummer's Fourier series for log Γ at t = 1/2",
            "every sine term vanishes, leaving log Γ(1/2) = ½ log π",
            Converged,
            1e-12,
            Sampling::Constant,
        )
        .sides(
            fixed(|o| Ok(log_gamma_kummer(0.5, o)?.value)),
            value(0.5 * PI.ln()),
        ),
    );
    r.push(
        entry(
            "EQ-2.14@m=5",
            "finite binomial sum for Bernoulli polynomials",
            "B_5(t) from the forward-difference sum against the recurrence",
            Converged,
            1e-12,
            Sampling::Grid,
        )
        .sides(
            at(|t, _| bernoulli_poly_hasse(5, t)),
            at(|t, _| bernoulli_poly(5, t)),
        ),
    );
    r.push(
        entry(
            "EQ-2.16",
            "Lerch's identity",
            "ζ'(0,t) against log Γ(t) - ½ log 2π",
            Converged,
            1e-9,
            Sampling::Grid,
        )
        .sides(
            at(|t, _| dz(0.0, t)),
            at(|t, _| Ok(log_gamma(t)? - 0.5 * Constants::get().log_two_pi)),
        ),
    );
    r.push(
        entry(
            "EQ-2.17",
            "Kummer's series under t → 1-t",
            "log Γ(1-t) against the reflected Kummer series",
            Approximate,
            1e-4,
            Sampling::InteriorGrid,
        )
        .sides(
            at(|t, _| log_gamma(1.0 - t)),
            at(|t, o| {
                let c = Constants::get();
                Ok(0.5 * (PI / sin_pi(t)).ln()
                    - (c.euler_gamma + c.log_two_pi) * (0.5 - t)
                    - kummer_sum(t, o)?)
            }),
        ),
    );
    r.push(
        entry(
            "EQ-2.18",
            "Euler's reflection formula",
            "sum of the Kummer series at t and 1-t against log(π/sin πt)",
            Approximate,
            2e-4,
            Sampling::InteriorGrid,
        )
        .sides(
            at(|t, o| Ok(log_gamma_kummer(t, o)?.value + log_gamma_kummer(1.0 - t, o)?.value)),
            at(|t, _| Ok((PI / sin_pi(t)).ln())),
        ),
    );
    r.push(
        entry(
            "EQ-2.19",
            "binomial double-sum series for the digamma function",
            "double-sum ψ(t) against the asymptotic reference",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(digamma_hasse(t, o)?.value)),
            at(|t, _| digamma(t)),
        ),
    );
    r.push(
        entry(
            "EQ-2.20",
            "binomial double-sum series for the trigamma function",
            "double sum of 1/(t+k) against ψ'(t)",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(hurwitz_zeta_hasse(2.0, t, o)?.value)),
            at(|t, _| trigamma(t)),
        ),
    );
}

fn parseval_and_integrals(r: &mut Vec<IdentityCheck>) {
    r.push(
        entry(
            "EQ-3.1",
            "Parseval's theorem applied to Kummer's series",
            "∫ (log Γ minus the non-sum Kummer terms)² against ζ''(2)/(2π²)",
            Converged,
            1e-8,
            Sampling::Constant,
        )
        .integral()
        .sides(
            fixed(|o| {
                let c = Constants::get();
                let k = c.euler_gamma + c.log_two_pi;
                quad(
                    |t| {
                        let d = lg(t) - 0.5 * (PI / sin_pi(t)).ln() - k * (0.5 - t);
                        d * d
                    },
                    0.0,
                    1.0,
                    o,
                )
            }),
            fixed(|_| Ok(Constants::get().zeta_second_2 / (2.0 * PI * PI))),
        ),
    );
    r.push(
        entry(
            "EQ-3.3",
            "log-sine integral Ls_2(π)",
            "Ls_2(π) = 0",
            Converged,
            1e-10,
            Sampling::Constant,
        )
        .integral()
        .sides(fixed(|_| log_sine_integral(2, PI)), value(0.0)),
    );
    r.push(
        entry(
            "EQ-3.4",
            "log-sine integral Ls_3(π)",
            "Ls_3(π) = -π³/12",
            Converged,
            1e-10,
            Sampling::Constant,
        )
        .integral()
        .sides(
            fixed(|_| log_sine_integral(3, PI)),
            value(-PI.powi(3) / 12.0),
        ),
    );
    r.push(
        entry(
            "EQ-3.5",
            "Euler's log-sine integral",
            "∫_0^1 log sin πt dt = -log 2",
            Converged,
            1e-10,
            Sampling::Constant,
        )
        .integral()
        .sides(
            fixed(|o| quad(|t| sin_pi(t).ln(), 0.0, 1.0, o)),
            value(-LN_2),
        ),
    );
    r.push(
        entry(
            "EQ-3.6",
            "Parseval's theorem for the log-sine Fourier series",
            "∫_0^1 log²(2 sin πt) dt = π²/12",
            Converged,
            1e-9,
            Sampling::Constant,
        )
        .integral()
        .sides(
            fixed(|o| quad_split(|t| (2.0 * sin_pi(t)).ln().powi(2), 0.0, 1.0, &[0.5], o)),
            value(PI * PI / 12.0),
        ),
    );
    r.push(
        entry(
            "EQ-3.7",
            "Bremekamp's integral",
            "∫_0^1 log² sin πt dt = π²/12 + log² 2",
            Converged,
            1e-9,
            Sampling::Constant,
        )
        .integral()
        .sides(
            fixed(|o| quad_split(|t| sin_pi(t).ln().powi(2), 0.0, 1.0, &[0.5], o)),
            value(PI * PI / 12.0 + LN_2 * LN_2),
        ),
    );
    let gamma1_logsin =
        |o: &EvalOptions| quad(|x| lg(1.0 + x) * (2.0 * sin_pi(x)).ln(), 0.0, 1.0, o);
    r.push(
        entry(
            "EQ-3.8",
            "log Γ(1+x) against log(2 sin πx) as a sine-integral series",
            "quadrature against (1/2π) Σ si(2nπ)/n²",
            Converged,
            1e-8,
            Sampling::Constant,
        )
        .integral()
        .sides(
            fixed(gamma1_logsin),
            fixed(|o| Ok(si_moment_sum(o)?.value / (2.0 * PI))),
        ),
    );
    r.push(
        entry(
            "EQ-3.9",
            "sine-integral moment sum and the Glaisher-Kinkelin constant",
            "(1/2π²) Σ Si(2nπ)/n² against log A - 1/4",
            TailCorrected,
            1e-6,
            Sampling::Constant,
        )
        .sides(
            fixed(|o| Ok(glaisher_si_sum(o)?.value)),
            fixed(|_| Ok(Constants::get().log_glaisher - 0.25)),
        ),
    );
    r.push(
        entry(
            "EQ-3.10",
            "log Γ(1+x) against log(2 sin πx) in closed form",
            "quadrature against π log A - π/4 - ζ(2)/4",
            Converged,
            1e-8,
            Sampling::Constant,
        )
        .integral()
        .sides(
            fixed(gamma1_logsin),
            fixed(|_| Ok(PI * Constants::get().log_glaisher - PI / 4.0 - riemann_zeta(2.0)? / 4.0)),
        ),
    );
    let log_logsin = |o: &EvalOptions| quad(|x| x.ln() * sin_pi(x).ln(), 0.0, 1.0, o);
    r.push(
        entry(
            "EQ-3.11",
            "log x against log sin πx in closed form",
            "quadrature against π log A - π/4 + log 2",
            Converged,
            1e-8,
            Sampling::Constant,
        )
        .integral()
        .sides(
            fixed(log_logsin),
            fixed(|_| Ok(PI * Constants::get().log_glaisher - PI / 4.0 + LN_2)),
        ),
    );
    r.push(
        entry(
            "EQ-3.11@series",
            "log x against log sin πx as a sine-integral series",
            "quadrature against log 2 + (1/2π) Σ Si(2nπ)/n²",
            Converged,
            1e-8,
            Sampling::Constant,
        )
        .integral()
        .sides(
            fixed(log_logsin),
            fixed(|o| Ok(LN_2 + PI * glaisher_si_sum(o)?.value)),
        ),
    );
    r.push(
        entry(
            "EQ-3.12",
            "Espinosa-Moll integral of log Γ against log sin",
            "∫ log Γ(x) log sin πx dx = -½ log 2 log 2π - π²/24",
            Converged,
            1e-8,
            Sampling::Constant,
        )
        .integral()
        .sides(
            fixed(|o| quad(|x| lg(x) * sin_pi(x).ln(), 0.0, 1.0, o)),
            fixed(|_| Ok(-0.5 * LN_2 * Constants::get().log_two_pi - PI * PI / 24.0)),
        ),
    );
    r.push(
        entry(
            "EQ-3.13",
            "Espinosa-Moll: odd Bernoulli moments of log sin",
            "∫ B_{2n+1}(t) log sin πt dt = 0, sampled at n",
            Converged,
            1e-10,
            points(&[0.0, 1.0]),
        )
        .integral()
        .sides(
            at(|n, o| {
                let m = 2 * n as usize + 1;
                quad(|t| bp(m, t) * sin_pi(t).ln(), 0.0, 1.0, o)
            }),
            value(0.0),
        ),
    );
    r.push(
        entry(
            "EQ-3.14",
            "Espinosa-Moll: even Bernoulli moments of log sin",
            "∫ B_{2n}(t) log sin πt dt = (-1)^n (2n)! ζ(2n+1)/(2π)^{2n}, sampled at n",
            Converged,
            1e-9,
            points(&[1.0, 2.0]),
        )
        .integral()
        .sides(
            at(|n, o| {
                let m = 2 * n as usize;
                quad(|t| bp(m, t) * sin_pi(t).ln(), 0.0, 1.0, o)
            }),
            at(|n, _| {
                let m = 2 * n as usize;
                let sign = if (m / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
                Ok(sign * factorial(m) * riemann_zeta(m as f64 + 1.0)? / (2.0 * PI).powi(m as i32))
            }),
        ),
    );
    for (id, p) in [
        (
            "EQ-3.15",
            (|x: f64| (x * (1.0 - x)).powi(2)) as fn(f64) -> f64,
        ),
        ("EQ-3.15@p=x^2(1-x)", |x: f64| x * x * (1.0 - x)),
    ] {
        r.push(
            entry(
                id,
                "cotangent as a sum of sines under the integral",
                "∫_0^1 p(x) cot πx dx against 2 Σ_{n≤200} ∫_0^1 p(x) sin 2πnx dx",
                Approximate,
                1e-5,
                Sampling::Constant,
            )
            .integral()
            .sides(
                fixed(move |o| quad(|x| p(x) * cos_pi(x) / sin_pi(x), 0.0, 1.0, o)),
                fixed(move |o| {
                    let mut parts = Vec::with_capacity(COT_SERIES_TERMS);
                    for n in 1..=COT_SERIES_TERMS {
                        let k = n as f64;
                        parts.push(quad(|x| p(x) * sin_2pi(frac_mul(k, x)), 0.0, 1.0, o)?);
                    }
                    Ok(2.0 * compensated_sum(parts))
                }),
            ),
        );
    }
    r.push(
        entry(
            "EQ-3.16",
            "Espinosa-Moll: odd Bernoulli moments of log Γ",
            "∫ B_{2n-1}(t) log Γ(t) dt = B_{2n}/(2n) [ζ'(2n)/ζ(2n) - log 2π - γ], sampled at n",
            Converged,
            1e-9,
            points(&[1.0, 2.0]),
        )
        .integral()
        .sides(
            at(|n, o| {
                let m = 2 * n as usize - 1;
                quad(|t| bp(m, t) * lg(t), 0.0, 1.0, o)
            }),
            at(|n, _| {
                let c = Constants::get();
                let m = 2 * n as usize;
                let s = m as f64;
                let ratio = dz(s, 1.0)? / riemann_zeta(s)?;
                Ok(bernoulli_number(m)? / s * (ratio - c.log_two_pi - c.euler_gamma))
            }),
        ),
    );
    let even_moment = |n: f64, o: &EvalOptions| {
        let m = 2 * n as usize;
        quad(|t| bp(m, t) * lg(t), 0.0, 1.0, o)
    };
    r.push(
        entry(
            "EQ-3.17",
            "Espinosa-Moll: even Bernoulli moments of log Γ",
            "∫ B_{2n}(t) log Γ(t) dt = (-1)^{n+1} (2n)! ζ(2n+1)/(2(2π)^{2n}), sampled at n",
            Converged,
            1e-9,
            points(&[1.0, 2.0]),
        )
        .integral()
        .sides(
            at(even_moment),
            at(|n, _| {
                let m = 2 * n as usize;
                let sign = if (m / 2) % 2 == 1 { 1.0 } else { -1.0 };
                Ok(sign * factorial(m) * riemann_zeta(m as f64 + 1.0)?
                    / (2.0 * (2.0 * PI).powi(m as i32)))
            }),
        ),
    );
    r.push(
        entry(
            "EQ-3.17@zeta-derivative",
            "Espinosa-Moll: even Bernoulli moments of log Γ as ζ'(-2n)",
            "∫ B_{2n}(t) log Γ(t) dt = -ζ'(-2n), sampled at n",
            Converged,
            1e-9,
            points(&[1.0, 2.0]),
        )
        .integral()
        .sides(at(even_moment), at(|n, _| Ok(-dz(-2.0 * n, 1.0)?))),
    );
    r.push(
        entry(
            "EQ-3.18",
            "first Bernoulli moment of log Γ and the Glaisher-Kinkelin constant",
            "∫ (½ - t) log Γ(t) dt = log A",
            Converged,
            1e-8,
            Sampling::Constant,
        )
        .integral()
        .sides(
            fixed(|o| quad(|t| (0.5 - t) * lg(t), 0.0, 1.0, o)),
            fixed(|_| Ok(Constants::get().log_glaisher)),
        ),
    );
    r.push(
        entry(
            "EQ-3.19",
            "Espinosa-Moll value of the mean square of log Γ",
            "∫ log² Γ(t) dt against its closed form in γ, log 2π, ζ'(2), ζ''(2)",
            Converged,
            1e-8,
            Sampling::Constant,
        )
        .integral()
        .sides(
            fixed(|o| quad(|t| lg(t).powi(2), 0.0, 1.0, o)),
            fixed(|_| {
                let c = Constants::get();
                let (g, l) = (c.euler_gamma, c.log_two_pi);
                Ok(g * g / 12.0 + PI * PI / 48.0 + g * l / 6.0 + l * l / 3.0
                    - (g + l) * c.zeta_prime_2 / (PI * PI)
                    + c.zeta_second_2 / (2.0 * PI * PI))
            }),
        ),
    );
}

fn barnes(r: &mut Vec<IdentityCheck>) {
    r.push(
        entry(
            "EQ-4.1",
            "Weierstrass product for the Barnes G-function",
            "tail-corrected product against the ζ'(-1,t) route",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(log_barnes_g_product(t, o)?.value)),
            at(|t, _| log_barnes_g_zeta(t)),
        ),
    );
    r.push(
        entry(
            "EQ-4.2",
            "binomial double-sum series for log G",
            "double-sum log G(1+t) against the ζ'(-1,t) route",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(log_barnes_g_hasse(t, o)?.value)),
            at(|t, _| log_barnes_g_zeta(t)),
        ),
    );
    r.push(
        entry(
            "EQ-4.3",
            "trigonometric series for log G",
            "trigonometric log G(1+t) against the ζ'(-1,t) route",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(log_barnes_g_fourier(t, o)?.value)),
            at(|t, _| log_barnes_g_zeta(t)),
        ),
    );
    r.push(
        entry(
            "EQ-4.3@t=1",
            "trigonometric series for log G at t = 1",
            "log G(2) = 0 from the trigonometric series",
            Converged,
            1e-10,
            Sampling::Constant,
        )
        .sides(
            fixed(|o| Ok(log_barnes_g_fourier(1.0, o)?.value)),
            value(0.0),
        ),
    );
    r.push(
        entry(
            "EQ-4.4",
            "Fourier series of the even Bernoulli polynomials",
            "cosine series for B_4(t) against the recurrence",
            Converged,
            1e-12,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(bernoulli_fourier(4, t, o)?.value)),
            at(|t, _| bernoulli_poly(4, t)),
        ),
    );
    r.push(
        entry(
            "EQ-4.5",
            "ζ'(2) from the functional equation",
            "ζ'(2)/(2π²) against (log 2π + γ - 1)/12 + ζ'(-1)",
            Converged,
            1e-10,
            Sampling::Constant,
        )
        .sides(
            fixed(|_| Ok(Constants::get().zeta_prime_2 / (2.0 * PI * PI))),
            fixed(|_| {
                let c = Constants::get();
                Ok((c.log_two_pi + c.euler_gamma - 1.0) / 12.0 + c.zeta_prime_minus1)
            }),
        ),
    );
    r.push(
        entry(
            "EQ-4.6",
            "value of log G(3/2)",
            "product route against (1/24) log 2 + ¼ log π + (3/2) ζ'(-1)",
            Converged,
            1e-9,
            Sampling::Constant,
        )
        .sides(
            fixed(|o| Ok(log_barnes_g_product(0.5, o)?.value)),
            fixed(|_| Ok(LN_2 / 24.0 + 0.25 * PI.ln() + 1.5 * Constants::get().zeta_prime_minus1)),
        ),
    );
    r.push(
        entry(
            "EQ-4.7",
            "Barnes' value of log G(1/2)",
            "product route against (1/24) log 2 - ¼ log π + (3/2) ζ'(-1)",
            Converged,
            1e-9,
            Sampling::Constant,
        )
        .sides(
            fixed(|o| Ok(log_barnes_g_product(-0.5, o)?.value)),
            fixed(|_| Ok(LN_2 / 24.0 - 0.25 * PI.ln() + 1.5 * Constants::get().zeta_prime_minus1)),
        ),
    );
    r.push(
        entry(
            "EQ-4.8",
            "Alexeiewsky's theorem (Raabe's integral at x = 1)",
            "∫_0^x log Γ against its closed form, sampled at x",
            Converged,
            1e-8,
            points(&[0.0, 0.25, 0.5, 0.75, 1.0]),
        )
        .integral()
        .sides(at(|x, o| quad(lg, 0.0, x, o)), at(|x, _| alexeiewsky(x))),
    );
}

fn gosper_kinkelin(r: &mut Vec<IdentityCheck>) {
    let dz_odd = |t: f64| -> Result<f64> { Ok(dz(-1.0, t)? - dz(-1.0, 1.0 - t)?) };
    let kinkelin_integral =
        |t: f64, o: &EvalOptions| quad(|x| PI * x * cos_pi(x) / sin_pi(x), 0.0, t, o);
    r.push(
        entry(
            "EQ-5.2",
            "Gosper-Vardi functional equation",
            "product log G(1+t) - t log Γ(t) against ζ'(-1) - ζ'(-1,t)",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(log_barnes_g_product(t, o)?.value - t * log_gamma(t)?)),
            at(|t, _| Ok(Constants::get().zeta_prime_minus1 - dz(-1.0, t)?)),
        ),
    );
    r.push(
        entry(
            "EQ-5.5",
            "Adamchik's difference formula",
            "ζ'(-1,t) - ζ'(-1,1-t) against Cl_2(2πt)/(2π)",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .sides(
            at(move |t, _| dz_odd(t)),
            at(|t, o| Ok(clausen(2, 2.0 * PI * t, o)?.value / (2.0 * PI))),
        ),
    );
    r.push(
        entry(
            "EQ-5.7",
            "Kinkelin's integral for log G(1+t)/G(1-t)",
            "product log G(1+t) - log G(1-t) against t log 2π - ∫_0^t πx cot πx dx",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .integral()
        .sides(
            at(|t, o| Ok(log_barnes_g_product(t, o)?.value - log_barnes_g_product(-t, o)?.value)),
            at(move |t, o| Ok(t * Constants::get().log_two_pi - kinkelin_integral(t, o)?)),
        ),
    );
    r.push(
        entry(
            "EQ-5.8",
            "Kinkelin's integral through ζ'(-1,t)",
            "∫_0^t πx cot πx dx against ζ'(-1,t) - ζ'(-1,1-t) + t log(2 sin πt)",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .integral()
        .sides(
            at(kinkelin_integral),
            at(move |t, _| Ok(dz_odd(t)? + t * (2.0 * sin_pi(t)).ln())),
        ),
    );
    r.push(
        entry(
            "EQ-5.9",
            "integral of log(2 sin πx) through ζ'(-1,t)",
            "∫_0^t log(2 sin πx) dx against ζ'(-1,1-t) - ζ'(-1,t)",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .integral()
        .sides(
            at(|t, o| quad(|x| (2.0 * sin_pi(x)).ln(), 0.0, t, o)),
            at(move |t, _| Ok(-dz_odd(t)?)),
        ),
    );
    r.push(
        entry(
            "EQ-5.10",
            "Euler's integral",
            "∫_0^{π/2} log sin x dx = -(π/2) log 2",
            Converged,
            1e-10,
            Sampling::Constant,
        )
        .integral()
        .sides(
            fixed(|o| quad(|x| x.sin().ln(), 0.0, 0.5 * PI, o)),
            value(-0.5 * PI * LN_2),
        ),
    );
    r.push(
        entry(
            "EQ-5.11",
            "Fourier series for ζ'(-1,t)",
            "three-sum Fourier series against the Euler-Maclaurin derivative",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(zeta_prime_minus1_fourier(t, o)?.value)),
            at(|t, _| dz(-1.0, t)),
        ),
    );
}

fn alternating(r: &mut Vec<IdentityCheck>) {
    r.push(
        entry(
            "EQ-6.2@s=-1",
            "Boudjelkha's Fourier series for the alternating Hurwitz zeta function",
            "odd-harmonic series for ζ_a(-1,t) against the Hurwitz difference",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(alt_hurwitz_zeta_fourier(-1.0, t, o)?.value)),
            at(|t, _| alt_hurwitz_zeta(-1.0, t)),
        ),
    );
    r.push(
        entry(
            "EQ-6.2@s=0.5",
            "Boudjelkha's Fourier series for the alternating Hurwitz zeta function",
            "tail-averaged odd-harmonic series for ζ_a(1/2,t) against the Hurwitz difference",
            Approximate,
            1e-6,
            Sampling::InteriorGrid,
        )
        .sides(
            at(|t, o| Ok(alt_hurwitz_zeta_fourier(0.5, t, o)?.value)),
            at(|t, _| alt_hurwitz_zeta(0.5, t)),
        ),
    );
    for s in [2.0, -1.0] {
        r.push(
            entry(
                format!("EQ-6.10@s={s}"),
                "Euler-transformed series for the alternating Hurwitz zeta function (Hasse-Sondow)",
                "binomial double sum with weights 2^-(n+1) against the Hurwitz difference",
                Converged,
                1e-10,
                Sampling::Grid,
            )
            .sides(
                at(move |t, o| Ok(alt_hurwitz_zeta_sondow(s, t, o)?.value)),
                at(move |t, _| alt_hurwitz_zeta(s, t)),
            ),
        );
    }
    for s in [0.5, 3.0] {
        r.push(
            entry(
                format!("EQ-6.11@s={s}"),
                "alternating Hurwitz zeta as a difference of Hurwitz zeta values",
                "2^-s [ζ(s,t/2) - ζ(s,(1+t)/2)] against the Euler-transformed defining series",
                Converged,
                1e-10,
                Sampling::Grid,
            )
            .sides(
                at(move |t, _| alt_hurwitz_zeta(s, t)),
                at(move |t, o| {
                    Ok(euler_transform_alternating(|n| (t + (n - 1) as f64).powf(-s), o).value)
                }),
            ),
        );
    }
    r.push(
        entry(
            "EQ-6.12",
            "Hansen-Patrick duplication relation",
            "ζ(s,x) against 2^s ζ(s,2x) - ζ(s,x+½) at seeded (s, x)",
            Converged,
            1e-10,
            Sampling::SeededPairs {
                count: 20,
                s: (-2.0, 2.5),
                x: (0.25, 2.0),
                avoid: (0.9, 1.1),
            },
        )
        .sides(
            paired(|s, x| Ok(hansen_patrick(s, x)?.0)),
            paired(|s, x| Ok(hansen_patrick(s, x)?.1)),
        ),
    );
    for (label, form) in [("EQ-6.14", 1usize), ("EQ-6.15", 2)] {
        for s in [-2.0, 0.5, 3.0] {
            r.push(
                entry(
                    format!("{label}@s={s}"),
                    "alternating Hurwitz zeta through the Hansen-Patrick relation",
                    "single-shift Hurwitz form against the half-shift difference",
                    Converged,
                    1e-10,
                    Sampling::Grid,
                )
                .sides(
                    at(move |t, _| Ok(alt_hurwitz_zeta_forms(s, t)?[form])),
                    at(move |t, _| alt_hurwitz_zeta(s, t)),
                ),
            );
        }
    }
    r.push(
        entry(
            "EQ-6.16",
            "pole cancellation in the alternating Hurwitz zeta function",
            "max |(s-1)(2^(1-s) ζ(s,t/2) - ζ(s,t))| over s = 1 ± 1e-6, sampled at t",
            Approximate,
            1e-5,
            points(&[0.25, 0.5, 0.75, 1.0]),
        )
        .sides(
            at(|t, _| {
                let a = alt_zeta_pole_product(1.0 - 1e-6, t)?.abs();
                let b = alt_zeta_pole_product(1.0 + 1e-6, t)?.abs();
                Ok(a.max(b))
            }),
            value(0.0),
        ),
    );
    r.push(
        entry(
            "EQ-6.17",
            "Hardy's functional equation for the alternating zeta function",
            "ζ_a(-s) from ζ_a(1+s) against the Hurwitz difference, sampled at s",
            Converged,
            1e-8,
            points(&[0.0, 0.5, 1.0, 2.0, 3.0]),
        )
        .sides(
            at(|s, _| alt_zeta_hardy(s)),
            at(|s, _| alt_hurwitz_zeta(-s, 1.0)),
        ),
    );
    r.push(
        entry(
            "EQ-6.18@m=4",
            "binomial series for the Euler polynomials",
            "E_4(t) against (2/5)[B_5(t) - 32 B_5(t/2)]",
            Converged,
            1e-12,
            Sampling::Grid,
        )
        .sides(
            at(|t, _| euler_poly(4, t)),
            at(|t, _| Ok(0.4 * (bernoulli_poly(5, t)? - 32.0 * bernoulli_poly(5, 0.5 * t)?))),
        ),
    );
    for m in [2usize, 3] {
        r.push(
            entry(
                format!("EQ-6.19@m={m}"),
                "odd-harmonic Fourier series of the Euler polynomials",
                "tail-corrected series for E_m(t) against the finite sum",
                Converged,
                1e-12,
                Sampling::Grid,
            )
            .sides(
                at(move |t, o| Ok(euler_fourier(m, t, o)?.value)),
                at(move |t, _| euler_poly(m, t)),
            ),
        );
    }
}

fn trigonometric(r: &mut Vec<IdentityCheck>) {
    const S: f64 = 2.5;
    const Y: f64 = 0.7;
    r.push(
        entry(
            "EQ-7.1",
            "Hansen's offset sine series",
            "Σ sin(2πnt + 0.7)/n^2.5 against its Hurwitz zeta closed form",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(hansen_offset_sums(S, 2.0 * PI * t, Y, o)?.sin_sum.value)),
            at(|t, o| closed_hansen(t, o).map(|c| c.0)),
        ),
    );
    r.push(
        entry(
            "EQ-7.1@cos",
            "Hansen's offset cosine series",
            "Σ cos(2πnt + 0.7)/n^2.5 against its Hurwitz zeta closed form",
            Converged,
            1e-8,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(hansen_offset_sums(S, 2.0 * PI * t, Y, o)?.cos_sum.value)),
            at(|t, o| closed_hansen(t, o).map(|c| c.1)),
        ),
    );
    r.push(
        entry(
            "EQ-7.9",
            "Fourier series of the odd Bernoulli polynomials",
            "sine series for B_3(t) against the recurrence",
            Converged,
            1e-12,
            Sampling::Grid,
        )
        .sides(
            at(|t, o| Ok(bernoulli_fourier(3, t, o)?.value)),
            at(|t, _| bernoulli_poly(3, t)),
        ),
    );
    for order in 2..=5u32 {
        r.push(
            entry(
                format!("EQ-7.10@order={order}"),
                "Clausen-type sums at πx through half-argument zeta derivatives",
                "Σ sin(nπx)/n^2N or Σ cos(nπx)/n^(2N+1) at x = 2t against ζ'(1-order, ·)",
                Converged,
                1e-8,
                Sampling::Grid,
            )
            .sides(
                at(move |t, o| Ok(clausen(order, 2.0 * PI * t, o)?.value)),
                at(move |t, _| clausen_half_angle(order, 2.0 * t)),
            ),
        );
    }
    for order in 1..=5u32 {
        r.push(
            entry(
                format!("EQ-7.11@order={order}"),
                "Adamchik's Clausen function formulas",
                "Cl_order(2πt) against ζ'(1-order, t) ∓ ζ'(1-order, 1-t)",
                Converged,
                1e-8,
                Sampling::Grid,
            )
            .sides(
                at(move |t, o| Ok(clausen(order, 2.0 * PI * t, o)?.value)),
                at(move |t, _| clausen_via_zeta(order, t)),
            ),
        );
    }
    r.push(
        entry(
            "EQ-7.12@m=3",
            "Hurwitz zeta at negative integers",
            "ζ(-2, x) against -B_3(x)/3 with B_3 from the finite binomial sum",
            Converged,
            1e-11,
            Sampling::Grid,
        )
        .sides(
            at(|x, _| hurwitz_zeta(-2.0, x)),
            at(|x, _| Ok(-bernoulli_poly_hasse(3, x)? / 3.0)),
        ),
    );
    for (p, q, s) in [(1u32, 4u32, 2.0), (2, 5, 2.5), (3, 7, 3.0)] {
        r.push(
            entry(
                format!("EQ-PQ@p={p},q={q},s={s}"),
                "Srivastava-Tsumura sine sums at rational arguments",
                "Σ sin(2πnp/q)/n^s against q^-s Σ_j sin(2πjp/q) ζ(s, j/q)",
                Converged,
                1e-9,
                Sampling::Constant,
            )
            .sides(
                fixed(move |o| Ok(rational_sine_zeta_sum(p, q, s, o)?.0)),
                fixed(move |o| Ok(rational_sine_zeta_sum(p, q, s, o)?.1)),
            ),
        );
    }
}

fn closed_hansen(t: f64, o: &EvalOptions) -> Result<(f64, f64)> {
    hansen_offset_sums(2.5, 2.0 * PI * t, 0.7, o)?
        .closed_form
        .ok_or_else(|| Error::domain("closed_hansen", "no closed form at integer s"))
}

fn sine_cosine_integrals(r: &mut Vec<IdentityCheck>) {
    r.push(
        entry(
            "EQ-8.1",
            "Nörlund's cosine-integral series for the digamma function",
            "Ci/si series for ψ(x) against the asymptotic reference",
            TailCorrected,
            1e-7,
            Sampling::Grid,
        )
        .sides(
            at(|x, o| Ok(norlund_digamma_series(x, o)?.value)),
            at(|x, _| digamma(x)),
        ),
    );
    r.push(
        entry(
            "EQ-8.2",
            "cosine-integral series for log Γ",
            "Ci/si series for log Γ(x) against the Stirling reference",
            TailCorrected,
            1e-6,
            Sampling::Grid,
        )
        .sides(
            at(|x, o| Ok(loggamma_ci_series(x, o)?.value)),
            at(|x, _| log_gamma(x)),
        ),
    );
    r.push(
        entry(
            "EQ-8.3",
            "cosine-integral series for x log Γ(x) - log G(1+x)",
            "Ci/Si series with the Clausen term against the ζ'(-1,x) route",
            TailCorrected,
            1e-6,
            Sampling::Grid,
        )
        .sides(
            at(|x, o| Ok(barnes_ci_combination(x, o)?.value)),
            at(|x, _| Ok(x * log_gamma(x)? - log_barnes_g_zeta(x)?)),
        ),
    );
    r.push(
        entry(
            "EQ-8.4",
            "Elizalde's cosine-integral series for ζ'(-1,x)",
            "Ci/si series against the Euler-Maclaurin derivative",
            TailCorrected,
            1e-7,
            Sampling::Grid,
        )
        .sides(
            at(|x, o| Ok(elizalde_series(x, o)?.value)),
            at(|x, _| dz(-1.0, x)),
        ),
    );
    r.push(
        entry(
            "EQ-8.5",
            "Euler's constant as a limit",
            "Σ_{k≤N} [1/k - log(1 + 1/k)] with N = max_terms against γ",
            Approximate,
            1e-4,
            Sampling::Constant,
        )
        .sides(
            fixed(|o| {
                Ok(compensated_sum((1..=o.max_terms).map(|k| {
                    let r = 1.0 / k as f64;
                    r - r.ln_1p()
                })))
            }),
            fixed(|_| Ok(Constants::get().euler_gamma)),
        ),
    );
    r.push(
        entry(
            "EQ-8.6",
            "Sondow's alternating series for log(4/π)",
            "Euler-transformed Σ (-1)^(k+1) [1/k - log(1 + 1/k)] against log(4/π)",
            Converged,
            1e-10,
            Sampling::Constant,
        )
        .sides(
            fixed(|o| Ok(sondow_series(o).value)),
            value((4.0 / PI).ln()),
        ),
    );
    r.push(
        entry(
            "EQ-8.7",
            "Lerch's trigonometric series for the digamma function",
            "tail-averaged Lerch series solved for ψ(x) against the reference",
            Approximate,
            1e-3,
            Sampling::InteriorGrid,
        )
        .sides(
            at(|x, o| Ok(digamma_lerch_series(x, o)?.value)),
            at(|x, _| digamma(x)),
        ),
    );
    r.push(
        entry(
            "EQ-8.7@x=1/2",
            "Lerch's digamma series at x = 1/2 (Wallis product)",
            "Euler-transformed Σ (-1)^(n+1) log(1 + 1/n) against ψ(1/2) + γ + log 2π",
            Converged,
            1e-10,
            Sampling::Constant,
        )
        .sides(
            fixed(|o| Ok(euler_transform_alternating(|n| (1.0 / n as f64).ln_1p(), o).value)),
            fixed(|_| {
                let c = Constants::get();
                Ok(digamma(0.5)? + c.euler_gamma + c.log_two_pi)
            }),
        ),
    );
}
