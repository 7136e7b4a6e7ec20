//! Bernoulli and Euler polynomials from recurrences, finite binomial sums and
//! Fourier series.

use kummer::bernoulli::{
    bernoulli_fourier, bernoulli_number, bernoulli_poly, bernoulli_poly_hasse, euler_fourier,
    euler_poly,
};
use kummer::EvalOptions;

fn main() -> kummer::Result<()> {
    let o = EvalOptions::default();
    for n in [2, 4, 10, 20] {
        println!("B_{n:<2} = {:.16e}", bernoulli_number(n)?);
    }
    let t = 0.3;
    for m in 1..=5 {
        println!(
            "m={m}  B_m({t}) = {:+.16e}  finite-sum diff {:.1e}  Fourier diff {:.1e}  E_m({t}) = {:+.16e}  Fourier diff {:.1e}",
            bernoulli_poly(m, t)?,
            bernoulli_poly_hasse(m, t)? - bernoulli_poly(m, t)?,
            bernoulli_fourier(m, t, &o)?.value - bernoulli_poly(m, t)?,
            euler_poly(m, t)?,
            euler_fourier(m, t, &o)?.value - euler_poly(m, t)?,
        );
    }
    Ok(())
}
