use std::ops::{Add, Mul, Neg, Sub};

/// Unevaluated sum `hi + lo` carrying roughly 106 bits.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TwoFold {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

impl TwoFold {
    pub const ZERO: TwoFold = TwoFold { hi: 0.0, lo: 0.0 };
    pub const ONE: TwoFold = TwoFold { hi: 1.0, lo: 0.0 };

    pub fn new(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn powi(self, mut n: u32) -> Self {
        let mut base = self;
        let mut acc = TwoFold::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }

    /// Quotient by a double, correct to about 106 bits.
    pub fn div_f64(self, d: f64) -> Self {
        let q1 = self.hi / d;
        let r = self - TwoFold::new(d).scale(q1);
        let q2 = r.hi / d;
        let r = r - TwoFold::new(d).scale(q2);
        let q3 = r.hi / d;
        let (hi, lo) = quick_two_sum(q1, q2);
        TwoFold { hi, lo } + TwoFold::new(q3)
    }

    pub fn scale(self, x: f64) -> Self {
        let (p, e) = (self.hi * x, self.hi.mul_add(x, -(self.hi * x)));
        let (hi, lo) = quick_two_sum(p, e + self.lo * x);
        Self { hi, lo }
    }
}

impl From<f64> for TwoFold {
    fn from(x: f64) -> Self {
        Self::new(x)
    }
}

impl Add for TwoFold {
    type Output = TwoFold;
    fn add(self, o: TwoFold) -> TwoFold {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        TwoFold { hi, lo }
    }
}

impl Neg for TwoFold {
    type Output = TwoFold;
    fn neg(self) -> TwoFold {
        TwoFold {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for TwoFold {
    type Output = TwoFold;
    fn sub(self, o: TwoFold) -> TwoFold {
        self + (-o)
    }
}

impl Mul for TwoFold {
    type Output = TwoFold;
    fn mul(self, o: TwoFold) -> TwoFold {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        TwoFold { hi, lo }
    }
}
