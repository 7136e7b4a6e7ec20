//! Mathematical constants computed once from the reference evaluators.

use crate::gamma::digamma;
use crate::zeta::hurwitz_zeta_sderiv;
use serde::Serialize;
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Constants shared by the series evaluators. Every field is computed from
/// the crate's own reference routes; none is a literal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    /// Euler's constant `γ = -ψ(1)`.
    pub euler_gamma: f64,
    /// `log 2π`.
    pub log_two_pi: f64,
    /// `ζ'(-1)`.
    pub zeta_prime_minus1: f64,
    /// Logarithm of the Glaisher-Kinkelin constant, `1/12 - ζ'(-1)`.
    pub log_glaisher: f64,
    /// `ζ'(2)`.
    pub zeta_prime_2: f64,
    /// `ζ''(2)`.
    pub zeta_second_2: f64,
}

impl Constants {
    /// Shared instance, built on first use.
    pub fn get() -> &'static Constants {
        static CELL: OnceLock<Constants> = OnceLock::new();
        CELL.get_or_init(Constants::compute)
    }

    fn compute() -> Constants {
        let zeta_prime_minus1 = hurwitz_zeta_sderiv(1, -1.0, 1.0).expect("s = -1 is regular");
        Constants {
            euler_gamma: -digamma(1.0).expect("ψ(1) is finite"),
            log_two_pi: (2.0 * PI).ln(),
            zeta_prime_minus1,
            log_glaisher: 1.0 / 12.0 - zeta_prime_minus1,
            zeta_prime_2: hurwitz_zeta_sderiv(1, 2.0, 1.0).expect("s = 2 is regular"),
            zeta_second_2: hurwitz_zeta_sderiv(2, 2.0, 1.0).expect("s = 2 is regular"),
        }
    }

    /// `(name, value, route)` for each constant, in declaration order.
    pub fn entries(&self) -> [(&'static str, f64, &'static str); 6] {
        [
            (
                "euler_gamma",
                self.euler_gamma,
                "-digamma(1), asymptotic series after upward recurrence",
            ),
            ("log_two_pi", self.log_two_pi, "ln(2*pi)"),
            (
                "zeta_prime_minus1",
                self.zeta_prime_minus1,
                "Euler-Maclaurin s-derivative of zeta(s,1) at s=-1",
            ),
            ("log_glaisher", self.log_glaisher, "1/12 - zeta'(-1)"),
            (
                "zeta_prime_2",
                self.zeta_prime_2,
                "Euler-Maclaurin s-derivative of zeta(s,1) at s=2",
            ),
            (
                "zeta_second_2",
                self.zeta_second_2,
                "Euler-Maclaurin second s-derivative of zeta(s,1) at s=2",
            ),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::compensated_sum;

    #[test]
    fn glaisher_relation_is_exact() {
        let c = Constants::get();
        assert_eq!(c.log_glaisher, 1.0 / 12.0 - c.zeta_prime_minus1);
    }

    #[test]
    fn zeta_prime_two_functional_relation() {
        // ζ'(2)/(2π²) = (log 2π + γ - 1)/12 + ζ'(-1)
        let c = Constants::get();
        let lhs = c.zeta_prime_2 / (2.0 * PI * PI);
        let rhs = (c.log_two_pi + c.euler_gamma - 1.0) / 12.0 + c.zeta_prime_minus1;
        assert!((lhs - rhs).abs() < 1e-10);
    }

    #[test]
    fn gamma_limit_cross_check() {
        let c = Constants::get();
        let partial =
            compensated_sum((1..=100_000).map(|k| 1.0 / k as f64 - (1.0 / k as f64).ln_1p()));
        assert!((partial - c.euler_gamma).abs() < 1e-4);
    }

    #[test]
    fn reference_digits() {
        // independent high-precision values
        let c = Constants::get();
        assert!((c.euler_gamma - 0.577215664901532860607).abs() < 1e-15);
        assert!((c.log_glaisher - 0.248754477033784262547).abs() < 1e-14);
        assert!((c.zeta_second_2 - 1.98928023429890102342).abs() < 1e-13);
    }
}
