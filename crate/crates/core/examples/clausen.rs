//! Clausen functions by direct summation and through ζ'(1-n, t), offset sine
//! sums and sine sums at rational arguments.

use kummer::trig::{
    clausen, clausen_half_angle, clausen_via_zeta, hansen_offset_sums, rational_sine_zeta_sum,
};
use kummer::EvalOptions;
use std::f64::consts::PI;

fn main() -> kummer::Result<()> {
    let o = EvalOptions::default();
    println!(
        "Catalan's constant = Cl_2(π/2) = {:.16e}",
        clausen(2, PI / 2.0, &o)?.value
    );
    let t = 0.3;
    for order in 1..=5 {
        println!(
            "order {order}: direct {:+.16e}  via ζ' {:+.16e}  half-angle {:+.16e}",
            clausen(order, 2.0 * PI * t, &o)?.value,
            clausen_via_zeta(order, t)?,
            clausen_half_angle(order, 2.0 * t)?,
        );
    }
    let h = hansen_offset_sums(2.5, 1.0, 0.7, &o)?;
    println!(
        "Σ sin(n + 0.7)/n^2.5 = {:.16e}, closed form {:?}",
        h.sin_sum.value, h.closed_form
    );
    let (lhs, rhs) = rational_sine_zeta_sum(2, 5, 2.5, &o)?;
    println!("Σ sin(4πn/5)/n^2.5 = {lhs:.16e} = {rhs:.16e}");
    Ok(())
}
