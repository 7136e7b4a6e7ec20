//! Tanh-sinh quadrature on integrands with endpoint log singularities.

use kummer::gamma::log_gamma;
use kummer::numerics::sin_pi;
use kummer::quadrature::{integrate, integrate_split};
use kummer::EvalOptions;

fn main() -> kummer::Result<()> {
    let o = EvalOptions::default().with_abs_tol(1e-13);
    let r = integrate(|t| sin_pi(t).ln(), 0.0, 1.0, &o)?;
    println!(
        "∫ log sin πt = {:.16e} (-log 2 = {:.16e}), level {}",
        r.value,
        -std::f64::consts::LN_2,
        r.levels_used
    );
    let r = integrate(|t| log_gamma(t).unwrap().powi(2), 0.0, 1.0, &o)?;
    println!(
        "∫ log² Γ = {:.16e}, last level change {:.1e}",
        r.value, r.err_estimate
    );
    let r = integrate_split(|t| (2.0 * sin_pi(t)).ln().powi(2), 0.0, 1.0, &[0.5], &o)?;
    println!(
        "∫ log²(2 sin πt) = {:.16e} (π²/12 = {:.16e})",
        r.value,
        std::f64::consts::PI.powi(2) / 12.0
    );
    Ok(())
}
