//! Double-double arithmetic built on error-free transforms.
//!
//! Used as the in-crate higher-precision oracle for real-axis series
//! summation. Not a general double-double library: only the operations the
//! compensated accumulators need.

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum: a + b = s + e exactly.
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum assuming |a| >= |b|.
pub fn fast_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product via fused multiply-add: a*b = p + e exactly.
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    pub fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add_f64(self, x: f64) -> Self {
        let (s, e) = two_sum(self.hi, x);
        let lo = self.lo + e;
        let (hi, lo) = fast_two_sum(s, lo);
        Dd { hi, lo }
    }

    pub fn add(self, other: Dd) -> Self {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = fast_two_sum(s, e);
        Dd { hi, lo }
    }

    pub fn mul_f64(self, x: f64) -> Self {
        let (p, e) = two_prod(self.hi, x);
        let e = self.lo.mul_add(x, e);
        let (hi, lo) = fast_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn mul(self, other: Dd) -> Self {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = fast_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div_f64(self, x: f64) -> Self {
        let q1 = self.hi / x;
        let (p, e) = two_prod(q1, x);
        let r = (self.hi - p - e + self.lo) / x;
        let (hi, lo) = fast_two_sum(q1, r);
        Dd { hi, lo }
    }
}
