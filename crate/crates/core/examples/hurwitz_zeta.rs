//! Hurwitz zeta values by Euler-Maclaurin, the binomial double sum and the
//! Fourier expansion, plus s-derivatives.

use kummer::zeta::{hurwitz_zeta, hurwitz_zeta_fourier, hurwitz_zeta_hasse, hurwitz_zeta_sderiv};
use kummer::EvalOptions;

fn main() -> kummer::Result<()> {
    let o = EvalOptions::default();
    println!(
        "{:>5} {:>5} {:>24} {:>24} {:>24}",
        "s", "t", "Euler-Maclaurin", "double sum", "Fourier"
    );
    for &(s, t) in &[(-1.0, 0.3), (-0.5, 0.7), (0.5, 0.25), (3.0, 0.9)] {
        let fourier = if s < 1.0 {
            format!("{:24.16e}", hurwitz_zeta_fourier(s, t, &o)?.value)
        } else {
            format!("{:>24}", "-")
        };
        println!(
            "{s:5} {t:5} {:24.16e} {:24.16e} {fourier}",
            hurwitz_zeta(s, t)?,
            hurwitz_zeta_hasse(s, t, &o)?.value
        );
    }
    println!("ζ'(0, 0.3)  = {:.16e}", hurwitz_zeta_sderiv(1, 0.0, 0.3)?);
    println!("ζ'(-1, 1)   = {:.16e}", hurwitz_zeta_sderiv(1, -1.0, 1.0)?);
    println!("ζ''(2, 1)   = {:.16e}", hurwitz_zeta_sderiv(2, 2.0, 1.0)?);
    Ok(())
}
