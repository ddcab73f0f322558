//! Reference evaluations of ln Γ, ψ and ψ^(k) in double-double precision.
//!
//! Deliberately configured differently from any production evaluator this
//! crate is used to test: arguments are shifted up to 48 (not 8) before the
//! asymptotic series is applied, and twelve Bernoulli terms (B2..B24) are
//! kept. Truncation error at the shift threshold is far below the dd
//! working precision, so results are accurate to ~1e-28 relative.

use crate::dd::{consts, Dd};

/// (numerator, denominator) of B_{2j} for j = 1..=12.
const BERNOULLI: [(f64, f64); 12] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
];

const SHIFT_THRESHOLD: f64 = 48.0;

fn bernoulli(j: usize) -> Dd {
    let (num, den) = BERNOULLI[j - 1];
    Dd::from_f64(num) / Dd::from_f64(den)
}

/// ln Γ(x) for x > 0, double-double precision.
pub fn lgamma_dd(x: f64) -> Dd {
    assert!(x > 0.0 && x.is_finite(), "lgamma oracle requires x > 0");
    let mut y = Dd::from_f64(x);
    let mut log_shift = Dd::ZERO;
    while y.hi < SHIFT_THRESHOLD {
        log_shift = log_shift + y.ln();
        y = y + Dd::ONE;
    }
    // Stirling: (y - 1/2) ln y - y + ln(2π)/2 + Σ B_2j / (2j(2j-1) y^{2j-1})
    let ln_y = y.ln();
    let mut sum = (y - Dd::from_f64(0.5)) * ln_y - y + *consts::HALF_LN_TWO_PI;
    let inv = y.recip();
    let inv2 = inv * inv;
    let mut p = inv;
    for j in 1..=BERNOULLI.len() {
        let tj = 2.0 * j as f64;
        sum = sum + bernoulli(j) / Dd::from_f64(tj * (tj - 1.0)) * p;
        p = p * inv2;
    }
    sum - log_shift
}

/// ψ(x) for x > 0, double-double precision.
pub fn digamma_dd(x: f64) -> Dd {
    assert!(x > 0.0 && x.is_finite(), "digamma oracle requires x > 0");
    let mut y = Dd::from_f64(x);
    let mut shift = Dd::ZERO;
    while y.hi < SHIFT_THRESHOLD {
        shift = shift - y.recip();
        y = y + Dd::ONE;
    }
    // ψ(y) = ln y - 1/(2y) - Σ B_2j / (2j y^{2j})
    let inv = y.recip();
    let inv2 = inv * inv;
    let mut sum = y.ln() - inv * Dd::from_f64(0.5);
    let mut p = inv2;
    for j in 1..=BERNOULLI.len() {
        sum = sum - bernoulli(j) / Dd::from_f64(2.0 * j as f64) * p;
        p = p * inv2;
    }
    shift + sum
}

/// (-1)^{k+1} ψ^(k)(x) — the positive-signed polygamma — for k >= 1, x > 0.
///
/// Every term in both the recurrence and the asymptotic head is positive,
/// so no cancellation occurs and relative accuracy stays at dd level.
pub fn polygamma_signed_dd(k: u32, x: f64) -> Dd {
    assert!(k >= 1, "polygamma oracle requires k >= 1");
    assert!(x > 0.0 && x.is_finite(), "polygamma oracle requires x > 0");
    let k_f = Dd::from_f64(factorial(k));
    let km1_f = Dd::from_f64(factorial(k - 1));

    let mut y = Dd::from_f64(x);
    let mut shift = Dd::ZERO;
    while y.hi < SHIFT_THRESHOLD {
        shift = shift + k_f / y.powi(k as i32 + 1);
        y = y + Dd::ONE;
    }
    // φ_k(y) = (k-1)!/y^k + k!/(2 y^{k+1}) + Σ B_2j (2j+k-1)!/((2j)! y^{2j+k})
    let inv = y.recip();
    let mut sum = km1_f * inv.powi(k as i32)
        + k_f * Dd::from_f64(0.5) * inv.powi(k as i32 + 1);
    let inv2 = inv * inv;
    let mut p = inv2 * inv.powi(k as i32);
    for j in 1..=BERNOULLI.len() {
        // (2j + k - 1)! / (2j)! = (2j+1)(2j+2)...(2j+k-1)
        let mut rising = Dd::ONE;
        for m in (2 * j + 1)..(2 * j + k as usize) {
            rising = rising * Dd::from_f64(m as f64);
        }
        sum = sum + bernoulli(j) * rising * p;
        p = p * inv2;
    }
    shift + sum
}

/// ψ^(k)(x) with its natural sign.
pub fn polygamma_dd(k: u32, x: f64) -> Dd {
    let v = polygamma_signed_dd(k, x);
    if k % 2 == 1 {
        v
    } else {
        -v
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|v| v as f64).product::<f64>().max(1.0)
}

// f64 conveniences for use directly in assertions.

pub fn lgamma(x: f64) -> f64 {
    lgamma_dd(x).to_f64()
}

pub fn digamma(x: f64) -> f64 {
    digamma_dd(x).to_f64()
}

pub fn polygamma(k: u32, x: f64) -> f64 {
    polygamma_dd(k, x).to_f64()
}

/// (-1)^{k+1} ψ^(k)(x) rounded to f64.
pub fn polygamma_signed(k: u32, x: f64) -> f64 {
    polygamma_signed_dd(k, x).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dd::consts;

    fn close(a: Dd, b: Dd, tol: f64) {
        let d = (a - b).abs().to_f64();
        assert!(d <= tol, "oracle mismatch: {a:?} vs {b:?} (|diff| = {d:e})");
    }

    #[test]
    fn digamma_classical_values() {
        // ψ(1) = -γ
        close(digamma_dd(1.0), -*consts::EULER_GAMMA, 1e-28);
        // ψ(1/2) = -γ - 2 ln 2
        let expected = -*consts::EULER_GAMMA
            - Dd::from_f64(2.0) * *consts::LN2_STATIC;
        close(digamma_dd(0.5), expected, 1e-28);
        // ψ(n) = -γ + H_{n-1}
        let mut h = Dd::ZERO;
        for k in 1..10 {
            h = h + Dd::from_f64(k as f64).recip();
        }
        close(digamma_dd(10.0), -*consts::EULER_GAMMA + h, 1e-28);
    }

    #[test]
    fn digamma_reflection_at_quarter() {
        // ψ(3/4) - ψ(1/4) = π cot(π/4) = π
        let d = digamma_dd(0.75) - digamma_dd(0.25);
        close(d, *consts::PI, 1e-28);
    }

    #[test]
    fn digamma_recurrence() {
        // Dyadic points keep x + 1 exact in f64, so the identity holds at
        // full dd precision.
        for &x in &[0.0001220703125, 0.3125, 2.5, 47.875, 1234.5] {
            let lhs = digamma_dd(x + 1.0) - digamma_dd(x);
            close(lhs, Dd::from_f64(x).recip(), 1e-26 * (1.0 / x).max(1.0));
        }
    }

    #[test]
    fn lgamma_classical_values() {
        close(lgamma_dd(1.0), Dd::ZERO, 1e-28);
        close(lgamma_dd(2.0), Dd::ZERO, 1e-28);
        close(lgamma_dd(5.0), Dd::from_f64(24.0).ln(), 1e-28);
        // ln Γ(1/2) = ln(π)/2
        close(
            lgamma_dd(0.5),
            consts::PI.ln() * Dd::from_f64(0.5),
            1e-28,
        );
    }

    #[test]
    fn lgamma_recurrence_and_duplication() {
        for &x in &[0.25, 1.75, 33.0] {
            let lhs = lgamma_dd(x + 1.0) - lgamma_dd(x);
            close(lhs, Dd::from_f64(x).ln(), 1e-27);
        }
        // Legendre duplication: lnΓ(2x) = lnΓ(x) + lnΓ(x+1/2) + (2x-1)ln2 - ln(π)/2
        let x = 3.5;
        let lhs = lgamma_dd(2.0 * x);
        let rhs = lgamma_dd(x) + lgamma_dd(x + 0.5)
            + Dd::from_f64(2.0 * x - 1.0) * *consts::LN2_STATIC
            - consts::PI.ln() * Dd::from_f64(0.5);
        close(lhs, rhs, 1e-26);
    }

    #[test]
    fn polygamma_classical_values() {
        close(polygamma_dd(1, 1.0), *consts::PI_SQ_OVER_6, 1e-27);
        // ψ'(1/2) = π²/2
        close(
            polygamma_dd(1, 0.5),
            *consts::PI_SQ_OVER_6 * Dd::from_f64(3.0),
            1e-27,
        );
        // ψ''(1) = -2 ζ(3), ψ''(1/2) = -14 ζ(3)
        close(polygamma_dd(2, 1.0), -(*consts::ZETA3) * Dd::from_f64(2.0), 1e-27);
        close(
            polygamma_dd(2, 0.5),
            -(*consts::ZETA3) * Dd::from_f64(14.0),
            1e-26,
        );
    }

    #[test]
    fn polygamma_recurrence() {
        for k in 1..=6u32 {
            for &x in &[0.0625, 0.75, 7.5] {
                let lhs = polygamma_signed_dd(k, x) - polygamma_signed_dd(k, x + 1.0);
                let rhs = Dd::from_f64(factorial(k)) / Dd::from_f64(x).powi(k as i32 + 1);
                let scale = rhs.to_f64().abs().max(1.0);
                close(lhs, rhs, 1e-25 * scale);
            }
        }
    }

    #[test]
    fn digamma_is_derivative_of_lgamma() {
        // Dyadic x and h = 2^-30 make x ± h exact in f64; the remaining
        // error is the O(h²) truncation of the centered difference.
        for &x in &[0.75, 3.0, 20.0] {
            let h = 2f64.powi(-30);
            let fd = (lgamma_dd(x + h) - lgamma_dd(x - h)) / Dd::from_f64(2.0 * h);
            let d = (fd - digamma_dd(x)).abs().to_f64();
            assert!(d < 1e-17, "finite-difference mismatch at {x}: {d:e}");
        }
    }
}
