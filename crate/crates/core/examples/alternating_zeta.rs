//! Alternating Hurwitz zeta: difference form, three Hurwitz forms, the
//! Euler-transformed double sum, the Fourier series and Hardy's relation.

use kummer::zeta::{
    alt_hurwitz_zeta, alt_hurwitz_zeta_forms, alt_hurwitz_zeta_fourier, alt_hurwitz_zeta_sondow,
    alt_zeta_hardy, alt_zeta_pole_product, hansen_patrick,
};
use kummer::EvalOptions;

fn main() -> kummer::Result<()> {
    let o = EvalOptions::default();
    for &(s, t) in &[(-1.0, 0.4), (0.5, 0.6), (3.0, 0.2)] {
        let forms = alt_hurwitz_zeta_forms(s, t)?;
        println!(
            "ζ_a({s}, {t}) = {:.16e}  forms {:?}  double sum {:.16e}  Fourier {:.16e}",
            alt_hurwitz_zeta(s, t)?,
            forms,
            alt_hurwitz_zeta_sondow(s, t, &o)?.value,
            if s < 1.0 {
                alt_hurwitz_zeta_fourier(s, t, &o)?.value
            } else {
                f64::NAN
            },
        );
    }
    println!("ζ_a(0) via Hardy = {}", alt_zeta_hardy(0.0)?);
    for k in 3..=6 {
        let s = 1.0 + 10f64.powi(-k);
        println!(
            "(s-1) ζ_a(s, 0.5) at s = 1 + 1e-{k}: {:.3e}",
            alt_zeta_pole_product(s, 0.5)?
        );
    }
    let (l, r) = hansen_patrick(1.7, 0.8)?;
    println!("duplication at s = 1.7, x = 0.8: {l:.16e} vs {r:.16e}");
    Ok(())
}
