//! Three independent routes to log G(1+t) and the integral of log Γ.

use kummer::gamma::{alexeiewsky, log_barnes_g_fourier, log_barnes_g_product, log_barnes_g_zeta};
use kummer::EvalOptions;

fn main() -> kummer::Result<()> {
    let o = EvalOptions::default();
    println!(
        "{:>5} {:>24} {:>10} {:>10} {:>24}",
        "t", "log G(1+t)", "product", "trig", "∫_0^t log Γ"
    );
    for &t in &[0.25, 0.5, 0.75, 1.0] {
        let z = log_barnes_g_zeta(t)?;
        println!(
            "{t:5} {z:24.16e} {:10.1e} {:10.1e} {:24.16e}",
            log_barnes_g_product(t, &o)?.value - z,
            log_barnes_g_fourier(t, &o)?.value - z,
            alexeiewsky(t)?
        );
    }
    println!(
        "log G(1/2) = {:.16e}",
        log_barnes_g_product(-0.5, &o)?.value
    );
    Ok(())
}
