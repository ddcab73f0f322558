//! Closed intervals certifying real values.
//!
//! An [`Enclosure`] is a pair `lo <= hi` guaranteed to contain the exact
//! real result of the computation that produced it. Rounding is handled by
//! a fixed slack policy: every arithmetic stage widens the result by 4 ulp
//! of its magnitude. This is deliberately not directed rounding; the slack
//! is far larger than the at-most-half-ulp error of any IEEE stage, so
//! containment is preserved while keeping the implementation dependency-free
//! and fast enough for scan workloads.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    lo: f64,
    hi: f64,
}

/// Widening applied after each arithmetic stage, in ulps of the magnitude.
const SLACK_ULPS: f64 = 4.0;

impl Enclosure {
    /// Exact value (zero width).
    pub fn point(x: f64) -> Enclosure {
        assert!(x.is_finite(), "enclosure endpoints must be finite");
        Enclosure { lo: x, hi: x }
    }

    /// Interval from explicit bounds.
    pub fn new(lo: f64, hi: f64) -> Enclosure {
        assert!(
            lo.is_finite() && hi.is_finite() && lo <= hi,
            "invalid enclosure [{lo}, {hi}]"
        );
        Enclosure { lo, hi }
    }

    /// A value known only up to one ulp (e.g. a rounded decimal constant).
    pub fn uncertain(x: f64) -> Enclosure {
        Enclosure::point(x).pad()
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Smallest interval containing both.
    pub fn hull(self, other: Enclosure) -> Enclosure {
        Enclosure {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Interval minimum: contains min(a, b) whenever a ∈ self, b ∈ other.
    pub fn min_with(self, other: Enclosure) -> Enclosure {
        Enclosure {
            lo: self.lo.min(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    fn mag(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    /// Apply the per-stage rounding slack.
    pub fn pad(self) -> Enclosure {
        let slack = SLACK_ULPS * (f64::EPSILON * self.mag() + f64::MIN_POSITIVE);
        Enclosure {
            lo: self.lo - slack,
            hi: self.hi + slack,
        }
    }

    pub fn recip(self) -> Enclosure {
        assert!(
            self.lo > 0.0 || self.hi < 0.0,
            "enclosure reciprocal of interval containing zero"
        );
        Enclosure {
            lo: 1.0 / self.hi,
            hi: 1.0 / self.lo,
        }
        .pad()
    }

    /// Map through a monotone non-decreasing function accurate to ~1 ulp.
    pub fn monotone_incr(self, f: impl Fn(f64) -> f64) -> Enclosure {
        Enclosure {
            lo: f(self.lo),
            hi: f(self.hi),
        }
        .pad()
    }

    pub fn ln(self) -> Enclosure {
        assert!(self.lo > 0.0, "enclosure ln of non-positive interval");
        self.monotone_incr(f64::ln)
    }

    pub fn ln_1p(self) -> Enclosure {
        assert!(self.lo > -1.0, "enclosure ln_1p out of domain");
        self.monotone_incr(f64::ln_1p)
    }

    pub fn exp(self) -> Enclosure {
        self.monotone_incr(f64::exp)
    }

    pub fn sqrt(self) -> Enclosure {
        assert!(self.lo >= 0.0, "enclosure sqrt of negative interval");
        self.monotone_incr(f64::sqrt)
    }

    pub fn abs(self) -> Enclosure {
        if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            -self
        } else {
            Enclosure {
                lo: 0.0,
                hi: self.mag(),
            }
        }
    }

    pub fn powi(self, n: i32) -> Enclosure {
        if n == 0 {
            return Enclosure::point(1.0);
        }
        if n < 0 {
            return self.powi(-n).recip();
        }
        let a = self.lo.powi(n);
        let b = self.hi.powi(n);
        let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
        if n % 2 == 0 && self.lo < 0.0 && self.hi > 0.0 {
            lo = 0.0;
            hi = self.mag().powi(n);
        }
        Enclosure { lo, hi }.pad()
    }
}

impl Add for Enclosure {
    type Output = Enclosure;
    fn add(self, rhs: Enclosure) -> Enclosure {
        Enclosure {
            lo: self.lo + rhs.lo,
            hi: self.hi + rhs.hi,
        }
        .pad()
    }
}

impl Add<f64> for Enclosure {
    type Output = Enclosure;
    fn add(self, rhs: f64) -> Enclosure {
        self + Enclosure::point(rhs)
    }
}

impl Sub for Enclosure {
    type Output = Enclosure;
    fn sub(self, rhs: Enclosure) -> Enclosure {
        Enclosure {
            lo: self.lo - rhs.hi,
            hi: self.hi - rhs.lo,
        }
        .pad()
    }
}

impl Sub<f64> for Enclosure {
    type Output = Enclosure;
    fn sub(self, rhs: f64) -> Enclosure {
        self - Enclosure::point(rhs)
    }
}

impl Neg for Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        Enclosure {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Mul for Enclosure {
    type Output = Enclosure;
    fn mul(self, rhs: Enclosure) -> Enclosure {
        let c = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        let lo = c.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Enclosure { lo, hi }.pad()
    }
}

impl Mul<f64> for Enclosure {
    type Output = Enclosure;
    fn mul(self, rhs: f64) -> Enclosure {
        self * Enclosure::point(rhs)
    }
}

impl Div for Enclosure {
    type Output = Enclosure;
    fn div(self, rhs: Enclosure) -> Enclosure {
        self * rhs.recip()
    }
}

impl Div<f64> for Enclosure {
    type Output = Enclosure;
    fn div(self, rhs: f64) -> Enclosure {
        self / Enclosure::point(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_invariants() {
        let e = Enclosure::new(1.0, 2.0);
        assert!(e.contains(1.5));
        assert!(!e.contains(2.5));
        assert_eq!(e.width(), 1.0);
    }

    #[test]
    #[should_panic(expected = "invalid enclosure")]
    fn inverted_bounds_rejected() {
        let _ = Enclosure::new(2.0, 1.0);
    }

    #[test]
    fn arithmetic_contains_exact_result() {
        let a = Enclosure::point(0.1);
        let b = Enclosure::point(0.2);
        let s = a + b;
        assert!(s.contains(0.1 + 0.2));
        assert!(s.width() <= 1e-15);

        let p = a * b;
        assert!(p.contains(0.1 * 0.2));

        let q = a / b;
        assert!(q.contains(0.5));
    }

    #[test]
    fn mul_sign_cases() {
        let m = Enclosure::new(-2.0, 3.0) * Enclosure::new(-1.0, 4.0);
        assert!(m.contains(-8.0) && m.contains(12.0) && m.contains(2.0));
    }

    #[test]
    fn powi_even_with_zero_crossing() {
        let e = Enclosure::new(-2.0, 1.0).powi(2);
        assert!(e.contains(0.0) && e.contains(4.0) && e.lo() <= 0.0);
        let o = Enclosure::new(-2.0, 1.0).powi(3);
        assert!(o.contains(-8.0) && o.contains(1.0));
    }

    #[test]
    fn monotone_maps() {
        let e = Enclosure::new(1.0, std::f64::consts::E);
        let l = e.ln();
        assert!(l.contains(0.0) && l.contains(1.0));
        let back = l.exp();
        assert!(back.contains(1.0) && back.contains(std::f64::consts::E));
    }

    #[test]
    fn min_with_takes_pointwise_min() {
        let a = Enclosure::new(1.0, 5.0);
        let b = Enclosure::new(2.0, 3.0);
        let m = a.min_with(b);
        assert_eq!(m.lo(), 1.0);
        assert_eq!(m.hi(), 3.0);
    }

    #[test]
    #[should_panic(expected = "containing zero")]
    fn division_by_zero_straddling_interval() {
        let _ = Enclosure::point(1.0) / Enclosure::new(-1.0, 1.0);
    }
}
