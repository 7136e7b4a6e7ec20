//! Values frozen from independent high-precision evaluations (mpmath at 30
//! digits), checked against the library's own routes.

use kummer::gamma::{log_barnes_g_product, log_gamma};
use kummer::numerics::{sin_pi, EvalOptions};
use kummer::quadrature::integrate_strict;
use kummer::trig::{clausen, glaisher_si_sum, si_ci};
use kummer::zeta::hurwitz_zeta_sderiv;
use kummer::Constants;
use std::f64::consts::PI;

const LOG_GLAISHER: f64 = 0.248_754_477_033_784_262_547;
const ZETA_PRIME_MINUS1: f64 = -0.165_421_143_700_450_929_214;
const ZETA_PRIME_2: f64 = -0.937_548_254_315_843_753_703;
const ZETA_SECOND_2: f64 = 1.989_280_234_298_901_023_42;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_607;
const MEAN_SQUARE_LOG_GAMMA: f64 = 1.866_317_083_793_562_081;
const LOG_GAMMA_LOG_SINE: f64 = -1.048_193_170_110_767_204;
const CATALAN: f64 = 0.915_965_594_177_219_015;
const SI_MOMENT: f64 = 0.121_551_651_579_644;
const LOG_X_LOG_SINE: f64 = 1.075_012_956_194_261;

fn quad(f: impl Fn(f64) -> f64) -> f64 {
    integrate_strict(f, 0.0, 1.0, &EvalOptions::default().with_abs_tol(1e-13)).unwrap()
}

#[test]
fn constants() {
    let c = Constants::get();
    assert!((c.log_glaisher - LOG_GLAISHER).abs() < 1e-14);
    assert!((c.zeta_prime_minus1 - ZETA_PRIME_MINUS1).abs() < 1e-14);
    assert!((c.zeta_prime_2 - ZETA_PRIME_2).abs() < 1e-13);
    assert!((c.zeta_second_2 - ZETA_SECOND_2).abs() < 1e-12);
    assert!((c.euler_gamma - EULER_GAMMA).abs() < 1e-15);
    assert!((hurwitz_zeta_sderiv(2, 2.0, 1.0).unwrap() - ZETA_SECOND_2).abs() < 1e-12);
}

#[test]
fn integrals() {
    let lg = |x: f64| log_gamma(x).unwrap();
    assert!((quad(|x| lg(x).powi(2)) - MEAN_SQUARE_LOG_GAMMA).abs() < 1e-12);
    assert!((quad(|x| lg(x) * sin_pi(x).ln()) - LOG_GAMMA_LOG_SINE).abs() < 1e-12);
    assert!((quad(|x| x.ln() * sin_pi(x).ln()) - LOG_X_LOG_SINE).abs() < 1e-12);
}

#[test]
fn series_values() {
    let o = EvalOptions::default();
    assert!((clausen(2, PI / 2.0, &o).unwrap().value - CATALAN).abs() < 1e-14);
    assert!((glaisher_si_sum(&o).unwrap().value - SI_MOMENT).abs() < 1e-12);
    // log G(2) = 0 and log G(3) = log Γ(2) = 0
    assert!(log_barnes_g_product(1.0, &o).unwrap().value.abs() < 1e-12);
    assert!(log_barnes_g_product(2.0, &o).unwrap().value.abs() < 1e-11);
}

#[test]
fn sine_and_cosine_integrals() {
    // Si(1), Ci(1), Si(30), Ci(30)
    let a = si_ci(1.0).unwrap();
    assert!((a.si_cap - 0.946_083_070_367_183_015).abs() < 1e-15);
    assert!((a.ci - 0.337_403_922_900_968_135).abs() < 1e-15);
    let b = si_ci(30.0).unwrap();
    assert!((b.si_cap - 1.566_756_540_030_351_1).abs() < 1e-13);
    assert!((b.ci + 0.033_032_417_282_071_14).abs() < 1e-13);
}
