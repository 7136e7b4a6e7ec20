//! Trigonometric functions of arguments measured in turns or half-turns.
//!
//! Arguments are reduced exactly, so zeros at integer and half-integer
//! multiples come out as exact zeros and symmetric points give bitwise
//! opposite values.

use std::f64::consts::PI;

/// Fractional part of `n * t`, with the rounding error of the product folded
/// back in. The result lies in `[0, 1)` up to one ulp.
#[inline]
pub fn frac_mul(n: f64, t: f64) -> f64 {
    let p = n * t;
    let err = n.mul_add(t, -p);
    (p - p.floor()) + err
}

/// `sin(π x)`.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    // reduce to y in [-1, 1] with sin(π x) = sin(π y)
    let y = x - 2.0 * (0.5 * x).round();
    let a = y.abs();
    let s = if a <= 0.25 {
        (PI * a).sin()
    } else if a <= 0.75 {
        (PI * (a - 0.5)).cos()
    } else {
        (PI * (1.0 - a)).sin()
    };
    if y < 0.0 {
        -s
    } else {
        s
    }
}

/// `cos(π x)`.
pub fn cos_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let y = x - 2.0 * (0.5 * x).round();
    let a = y.abs();
    if a <= 0.25 {
        (PI * a).cos()
    } else if a <= 0.75 {
        (PI * (0.5 - a)).sin()
    } else {
        -(PI * (1.0 - a)).cos()
    }
}

/// `sin(2π x)`.
#[inline]
pub fn sin_2pi(x: f64) -> f64 {
    sin_pi(2.0 * (x - x.round()))
}

/// `cos(2π x)`.
#[inline]
pub fn cos_2pi(x: f64) -> f64 {
    cos_pi(2.0 * (x - x.round()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_zeros_and_units() {
        for k in -6..=6 {
            assert_eq!(sin_pi(k as f64), 0.0);
            assert_eq!(cos_pi(k as f64 + 0.5), 0.0);
        }
        assert_eq!(sin_pi(0.5), 1.0);
        assert_eq!(sin_pi(-0.5), -1.0);
        assert_eq!(cos_pi(1.0), -1.0);
        assert_eq!(sin_2pi(0.25), 1.0);
        assert_eq!(cos_2pi(0.25), 0.0);
    }

    #[test]
    fn symmetric_points_cancel_bitwise() {
        for n in 1..200u32 {
            let a = sin_2pi(frac_mul(n as f64, 0.25));
            let b = sin_2pi(frac_mul(n as f64, 0.75));
            assert_eq!(a, -b);
        }
    }

    #[test]
    fn agrees_with_libm() {
        for i in 0..1000 {
            let x = -7.3 + i as f64 * 0.0171;
            assert!((sin_pi(x) - (PI * x).sin()).abs() < 1e-14);
            assert!((cos_pi(x) - (PI * x).cos()).abs() < 1e-14);
        }
    }

    #[test]
    fn frac_mul_of_large_products() {
        let f = frac_mul(99_999.0, 0.1);
        assert!((f - 0.9).abs() < 1e-12);
        assert_eq!(frac_mul(12345.0, 0.5), 0.5);
    }
}
