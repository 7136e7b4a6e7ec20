//! Si and Ci across the three evaluation branches, and series of Ci/si values
//! that reproduce ψ, log Γ and ζ'(-1, x).

use kummer::gamma::{digamma, log_gamma};
use kummer::trig::{
    elizalde_series, loggamma_ci_series, norlund_digamma_series, si_ci, si_ci_asymptotic,
    si_ci_series,
};
use kummer::zeta::hurwitz_zeta_sderiv;
use kummer::EvalOptions;

fn main() -> kummer::Result<()> {
    for x in [0.5, 5.0, 19.0, 25.0, 60.0] {
        let v = si_ci(x)?;
        println!("x = {x:5}: Si = {:+.16e}  Ci = {:+.16e}", v.si_cap, v.ci);
    }
    let (series, (asym, bound)) = (si_ci_series(20.0)?, si_ci_asymptotic(20.0)?);
    println!(
        "at x = 20 series and asymptotic differ by {:.1e} (Si) and {:.1e} (Ci); smallest asymptotic term {bound:.1e}",
        (series.si_cap - asym.si_cap).abs(),
        (series.ci - asym.ci).abs()
    );
    let o = EvalOptions::default();
    for x in [0.3, 2.5] {
        println!(
            "x = {x}: ψ diff {:.1e}  log Γ diff {:.1e}  ζ'(-1,x) diff {:.1e}",
            norlund_digamma_series(x, &o)?.value - digamma(x)?,
            loggamma_ci_series(x, &o)?.value - log_gamma(x)?,
            elizalde_series(x, &o)?.value - hurwitz_zeta_sderiv(1, -1.0, x)?,
        );
    }
    Ok(())
}
