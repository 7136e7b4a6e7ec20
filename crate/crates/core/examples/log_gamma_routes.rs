//! log Γ on (0, 1) by Stirling, Kummer's Fourier series and the binomial
//! double sum, with the digamma function alongside.

use kummer::gamma::{digamma, digamma_hasse, log_gamma, log_gamma_hasse, log_gamma_kummer};
use kummer::EvalOptions;

fn main() -> kummer::Result<()> {
    let o = EvalOptions::default();
    println!(
        "{:>4} {:>24} {:>10} {:>10} {:>10}",
        "t", "log Γ(t)", "Kummer", "double sum", "ψ double"
    );
    for k in 1..10 {
        let t = k as f64 / 10.0;
        let exact = log_gamma(t)?;
        let kummer = log_gamma_kummer(t, &o)?;
        let hasse = log_gamma_hasse(t, &o)?;
        let psi = digamma_hasse(t, &o)?;
        println!(
            "{t:4} {exact:24.16e} {:10.1e} {:10.1e} {:10.1e}",
            kummer.value - exact,
            hasse.value - exact,
            psi.value - digamma(t)?
        );
    }
    Ok(())
}
