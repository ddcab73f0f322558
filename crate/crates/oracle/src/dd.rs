//! Minimal double-double arithmetic (~31 significant digits).
//!
//! An unevaluated sum `hi + lo` of two f64 values, following the classic
//! error-free transformations (two_sum / two_prod with FMA). This is test
//! infrastructure: accuracy around 1e-31 relative is plenty for oracle
//! purposes and no attempt is made to handle overflow or subnormals.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (hi, lo) = quick_two_sum(hi, lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    /// Integer power by repeated squaring.
    pub fn powi(self, n: i32) -> Dd {
        if n == 0 {
            return Dd::ONE;
        }
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Dd::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn sqrt(self) -> Dd {
        assert!(self.hi >= 0.0, "dd sqrt of negative value");
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        // Newton on y -> (y + a/y)/2, starting from the f64 root.
        let mut y = Dd::from_f64(self.hi.sqrt());
        y = (y + self / y) * Dd::from_f64(0.5);
        y = (y + self / y) * Dd::from_f64(0.5);
        y
    }

    pub fn exp(self) -> Dd {
        // exp(a) = 2^k * exp(r), r = a - k ln 2 with |r| <= ln2/2.
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = self - consts::LN_2 * Dd::from_f64(k);
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        let mut n = 1.0;
        loop {
            term = term * r / Dd::from_f64(n);
            sum = sum + term;
            if term.hi.abs() < 1e-35 * sum.hi.abs() || n > 40.0 {
                break;
            }
            n += 1.0;
        }
        let scale = (k as i32).try_into().unwrap_or(0);
        Dd {
            hi: libm_ldexp(sum.hi, scale),
            lo: libm_ldexp(sum.lo, scale),
        }
    }

    pub fn ln(self) -> Dd {
        assert!(self.hi > 0.0, "dd ln of non-positive value");
        // Newton on y -> y + a e^{-y} - 1, starting from the f64 log.
        let mut y = Dd::from_f64(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - Dd::ONE;
        }
        y
    }

    /// Parse a decimal literal ("-1.2345e-6" style) into a Dd.
    ///
    /// Used for tabulated mathematical constants; accuracy is limited only
    /// by the dd arithmetic itself.
    pub fn from_decimal_str(s: &str) -> Dd {
        let s = s.trim();
        let (sign, rest) = match s.strip_prefix('-') {
            Some(r) => (-1.0, r),
            None => (1.0, s.strip_prefix('+').unwrap_or(s)),
        };
        let (mantissa, exp10) = match rest.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i32>().expect("bad exponent")),
            None => (rest, 0),
        };
        let mut value = Dd::ZERO;
        let mut frac_digits = 0i32;
        let mut seen_point = false;
        for c in mantissa.chars() {
            match c {
                '.' => seen_point = true,
                '_' | ' ' => {}
                d if d.is_ascii_digit() => {
                    value = value * Dd::from_f64(10.0)
                        + Dd::from_f64((d as u8 - b'0') as f64);
                    if seen_point {
                        frac_digits += 1;
                    }
                }
                other => panic!("unexpected character {other:?} in decimal literal"),
            }
        }
        let shift = exp10 - frac_digits;
        let scale = Dd::from_f64(10.0).powi(shift);
        let v = value * scale;
        Dd {
            hi: sign * v.hi,
            lo: sign * v.lo,
        }
    }
}

fn libm_ldexp(x: f64, e: i32) -> f64 {
    // f64 powi of 2 is exact until overflow; split large shifts in two.
    if e.abs() <= 1000 {
        x * 2f64.powi(e)
    } else {
        let half = e / 2;
        x * 2f64.powi(half) * 2f64.powi(e - half)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Dd { hi: s1, lo: s2 }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Dd::from_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Dd::from_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e } + Dd::from_f64(q3)
    }
}

/// Tabulated constants (30+ decimal digits, parsed once at first use).
pub mod consts {
    use super::Dd;
    use std::sync::LazyLock;

    macro_rules! dd_const {
        ($name:ident, $lit:expr) => {
            pub static $name: LazyLock<Dd> =
                LazyLock::new(|| Dd::from_decimal_str($lit));
        };
    }

    dd_const!(EULER_GAMMA, "0.57721566490153286060651209008240243104215933593992");
    dd_const!(PI, "3.14159265358979323846264338327950288419716939937511");
    dd_const!(ZETA3, "1.20205690315959428539973816151144999076498629234050");
    dd_const!(PI_SQ_OVER_6, "1.64493406684822643647241516664602518921894990120680");
    dd_const!(HALF_LN_TWO_PI, "0.91893853320467274178032973640561763986139747363778");
    dd_const!(LN2_STATIC, "0.69314718055994530941723212145817656807550013436026");

    // Dd::exp needs LN_2 without going through the lazy statics above.
    pub const LN_2: Dd = Dd {
        hi: 0.6931471805599453,
        lo: 2.31904681384626e-17,
    };
}
