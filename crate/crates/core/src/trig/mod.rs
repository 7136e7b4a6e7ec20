//! Clausen functions, log-sine integrals, sine and cosine integrals, offset
//! trigonometric sums and series expansions over `Ci` and `si`.

mod clausen;
mod expansions;
mod hansen;
mod sici;

pub use clausen::{clausen, clausen_half_angle, clausen_via_zeta, ClausenOrder, ClausenParity};
pub use expansions::{
    barnes_ci_combination, digamma_lerch_series, elizalde_series, glaisher_si_sum,
    loggamma_ci_series, norlund_digamma_series, si_moment_sum, sondow_series,
};
pub use hansen::{hansen_offset_sums, log_sine_integral, rational_sine_zeta_sum, HansenSums};
pub use sici::{
    si_ci, si_ci_asymptotic, si_ci_series, sici_auxiliary, sine_integral, SiCiValue,
    ASYMPTOTIC_FROM, SERIES_LIMIT,
};
