//! Logarithmic mean L(a,b) and the generalized logarithmic mean L_p(a,b).
//!
//! All three branches of L_p are implemented:
//!
//! ```text
//! L_p(a,b) = [ (b^{p+1} - a^{p+1}) / ((p+1)(b-a)) ]^{1/p}   p != -1, 0
//! L_{-1}   = (b-a)/(ln b - ln a)                            logarithmic
//! L_0      = (1/e) (b^b/a^a)^{1/(b-a)}                      identric
//! ```
//!
//! The generic branch is evaluated in log space so large |p| cannot
//! overflow, and near-equal arguments collapse to the midpoint (which is
//! second-order accurate for every p).

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};

/// Relative argument gap below which all means return the midpoint.
const NEAR_EQUAL: f64 = 1e-8;
/// Orders within this distance of -1 or 0 route to the closed branches.
const NEAR_BRANCH: f64 = 1e-6;

fn require_positive_pair(op: &'static str, a: f64, b: f64) -> Result<()> {
    if a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(op, format!("requires a, b > 0, got ({a}, {b})")))
    }
}

/// Logarithmic mean (b-a)/(ln b - ln a), with L(a,a) = a.
pub fn log_mean(a: f64, b: f64) -> Result<f64> {
    require_positive_pair("log_mean", a, b)?;
    Ok(log_mean_raw(a, b))
}

pub(crate) fn log_mean_raw(a: f64, b: f64) -> f64 {
    if (b - a).abs() <= NEAR_EQUAL * a.max(b) {
        return 0.5 * (a + b);
    }
    // ln b - ln a written as ln1p((b-a)/a) to keep full relative accuracy
    // for moderately close arguments.
    (b - a) / ((b - a) / a).ln_1p()
}

/// Generalized logarithmic mean of order `p`.
pub fn gen_log_mean(p: f64, a: f64, b: f64) -> Result<f64> {
    require_positive_pair("gen_log_mean", a, b)?;
    if !p.is_finite() {
        return Err(Error::domain("gen_log_mean", format!("order must be finite, got {p}")));
    }
    Ok(gen_log_mean_raw(p, a, b))
}

pub(crate) fn gen_log_mean_raw(p: f64, a: f64, b: f64) -> f64 {
    if (b - a).abs() <= NEAR_EQUAL * a.max(b) {
        return 0.5 * (a + b);
    }
    if (p + 1.0).abs() <= NEAR_BRANCH {
        return log_mean_raw(a, b);
    }
    if p.abs() <= NEAR_BRANCH {
        return identric(a, b);
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let r = p + 1.0;
    // |b^r - a^r| and |r (b-a)| share their sign; work with logarithms.
    let ln_num = if r > 0.0 {
        r * hi.ln() + (-(r * (lo / hi).ln()).exp()).ln_1p()
    } else {
        r * lo.ln() + (-(r * (hi / lo).ln()).exp()).ln_1p()
    };
    let ln_den = r.abs().ln() + (hi - lo).ln();
    ((ln_num - ln_den) / p).exp()
}

/// Identric mean (1/e)(b^b/a^a)^{1/(b-a)} = exp((b ln b - a ln a)/(b-a) - 1).
fn identric(a: f64, b: f64) -> f64 {
    ((b * b.ln() - a * a.ln()) / (b - a) - 1.0).exp()
}

/// Enclosure of the logarithmic mean at exact arguments.
pub(crate) fn log_mean_enc(a: f64, b: f64) -> Enclosure {
    if (b - a).abs() <= NEAR_EQUAL * a.max(b) {
        // Midpoint with the collapse error |b-a|²/(12 min) as extra slack.
        let mid = (Enclosure::point(a) + Enclosure::point(b)) * 0.5;
        let d = (b - a).abs();
        let slack = d * d / (12.0 * a.min(b)) + f64::MIN_POSITIVE;
        return Enclosure::new(mid.lo() - slack, mid.hi() + slack);
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let num = Enclosure::point(hi) - Enclosure::point(lo);
    let den = (Enclosure::point(hi) / Enclosure::point(lo)).ln();
    num / den
}

/// Enclosure of the generalized logarithmic mean at exact arguments.
pub(crate) fn gen_log_mean_enc(p: f64, a: f64, b: f64) -> Enclosure {
    if (b - a).abs() <= NEAR_EQUAL * a.max(b) {
        let mid = (Enclosure::point(a) + Enclosure::point(b)) * 0.5;
        let d = (b - a).abs();
        let slack = d * d / (3.0 * a.min(b)) * (1.0 + p.abs()) + f64::MIN_POSITIVE;
        return Enclosure::new(mid.lo() - slack, mid.hi() + slack);
    }
    if (p + 1.0).abs() <= NEAR_BRANCH {
        return log_mean_enc(a, b);
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let le = Enclosure::point(lo);
    let he = Enclosure::point(hi);
    if p.abs() <= NEAR_BRANCH {
        let num = he * he.ln() - le * le.ln();
        return (num / (he - le) - 1.0).exp();
    }
    let r = p + 1.0;
    let ln_num = if r > 0.0 {
        he.ln() * r + (-((le / he).ln() * r).exp()).ln_1p()
    } else {
        le.ln() * r + (-((he / le).ln() * r).exp()).ln_1p()
    };
    let ln_den = Enclosure::point(r.abs()).ln() + (he - le).ln();
    ((ln_num - ln_den) / p).exp()
}
