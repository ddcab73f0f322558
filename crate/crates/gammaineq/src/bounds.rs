//! Elementary closed-form sandwich bounds for ψ and ψ^(k), registered by
//! stable id so the verifier and CLI can enumerate them uniformly.
//!
//! Every bound involves only ln, powers and rational terms. The psi pairs
//! bound ψ(x) directly; the polygamma pairs bound the signed quantity
//! (-1)^{k+1} ψ^(k)(x); LOG-KUANG is a single upper bound for ln(1 + 1/x).

use crate::error::{Error, Result};
use crate::specfun::EXP_NEG_EULER_GAMMA;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiBoundId {
    /// ln x - 1/(2x) - 1/(12x²) < ψ(x) < ln x - 1/(2x)
    ///
    /// Stored in the ψ(x) form (shifted from the ψ(x+1) - ln x original;
    /// see [`qicui_gap_bounds`] for that view).
    Qicui,
    /// ln(x + 1/2) - 1/x < ψ(x) < ln(x + 1) - 1/x
    Beta,
    /// ln x - 1/x < ψ(x) < ln x - 1/(2x)
    Ln,
    /// ln(x + 1/2) - 1/x < ψ(x) < ln(x + e^{-γ}) - 1/x, both constants
    /// best possible.
    Sharp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyBoundId {
    /// (k-1)!/(x+1)^k + k!/x^{k+1} < (-1)^{k+1}ψ^(k)(x) < (k-1)!/(x+1/2)^k + k!/x^{k+1}
    Beta,
    /// (k-1)!/x^k + k!/(2x^{k+1}) < (-1)^{k+1}ψ^(k)(x) < (k-1)!/x^k + k!/x^{k+1}
    Half,
}

fn require_positive(op: &'static str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(op, format!("requires x > 0, got {x}")))
    }
}

/// Closed-form (lower, upper) bounds on ψ(x).
pub fn psi_bounds(id: PsiBoundId, x: f64) -> Result<(f64, f64)> {
    require_positive("psi_bounds", x)?;
    Ok(psi_bounds_raw(id, x))
}

pub(crate) fn psi_bounds_raw(id: PsiBoundId, x: f64) -> (f64, f64) {
    match id {
        PsiBoundId::Qicui => {
            let hi = x.ln() - 0.5 / x;
            (hi - 1.0 / (12.0 * x * x), hi)
        }
        PsiBoundId::Beta => ((x + 0.5).ln() - 1.0 / x, (x + 1.0).ln() - 1.0 / x),
        PsiBoundId::Ln => (x.ln() - 1.0 / x, x.ln() - 0.5 / x),
        PsiBoundId::Sharp => (
            (x + 0.5).ln() - 1.0 / x,
            (x + EXP_NEG_EULER_GAMMA).ln() - 1.0 / x,
        ),
    }
}

/// The original shifted view of the QICUI pair: bounds on ψ(x+1) - ln x.
pub fn qicui_gap_bounds(x: f64) -> Result<(f64, f64)> {
    require_positive("qicui_gap_bounds", x)?;
    let hi = 0.5 / x;
    Ok((hi - 1.0 / (12.0 * x * x), hi))
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|v| v as f64).product::<f64>().max(1.0)
}

/// Closed-form (lower, upper) bounds on the signed (-1)^{k+1} ψ^(k)(x).
pub fn polygamma_bounds(id: PolyBoundId, k: u32, x: f64) -> Result<(f64, f64)> {
    if k < 1 {
        return Err(Error::domain(
            "polygamma_bounds",
            format!("requires k >= 1, got {k}"),
        ));
    }
    require_positive("polygamma_bounds", x)?;
    Ok(polygamma_bounds_raw(id, k, x))
}

pub(crate) fn polygamma_bounds_raw(id: PolyBoundId, k: u32, x: f64) -> (f64, f64) {
    let km1 = factorial(k - 1);
    let kf = factorial(k);
    let ki = k as i32;
    match id {
        PolyBoundId::Beta => {
            let tail = kf / x.powi(ki + 1);
            (km1 / (x + 1.0).powi(ki) + tail, km1 / (x + 0.5).powi(ki) + tail)
        }
        PolyBoundId::Half => {
            let head = km1 / x.powi(ki);
            (head + 0.5 * kf / x.powi(ki + 1), head + kf / x.powi(ki + 1))
        }
    }
}

/// Upper bound for ln(1 + 1/x): 2/(2x+1) · [1 + 1/(12x) - 1/(12(x+1))].
pub fn log_upper_kuang(x: f64) -> Result<f64> {
    require_positive("log_upper_kuang", x)?;
    Ok(log_upper_kuang_raw(x))
}

pub(crate) fn log_upper_kuang_raw(x: f64) -> f64 {
    2.0 / (2.0 * x + 1.0) * (1.0 + 1.0 / (12.0 * x) - 1.0 / (12.0 * (x + 1.0)))
}

/// Descriptive registry of all bound pairs (enumerated by the CLI through
/// the catalog, which wires each entry to a margin function).
pub struct BoundPairInfo {
    pub id: &'static str,
    pub domain: &'static str,
    pub source: &'static str,
}

pub const BOUND_PAIRS: [BoundPairInfo; 7] = [
    BoundPairInfo {
        id: "PSI-QICUI",
        domain: "x > 0",
        source: "psi between ln x - 1/(2x) - 1/(12x^2) and ln x - 1/(2x)",
    },
    BoundPairInfo {
        id: "PSI-BETA",
        domain: "x > 0",
        source: "psi between ln(x+1/2) - 1/x and ln(x+1) - 1/x",
    },
    BoundPairInfo {
        id: "PSI-LN",
        domain: "x > 0",
        source: "psi between ln x - 1/x and ln x - 1/(2x)",
    },
    BoundPairInfo {
        id: "PSI-SHARP",
        domain: "x > 0",
        source: "psi below ln(x + e^-gamma) - 1/x; both constants best possible",
    },
    BoundPairInfo {
        id: "POLY-BETA",
        domain: "k >= 1, x > 0",
        source: "signed psi^(k) between (k-1)!/(x+1)^k + k!/x^(k+1) and the x+1/2 form",
    },
    BoundPairInfo {
        id: "POLY-HALF",
        domain: "k >= 1, x > 0",
        source: "signed psi^(k) between (k-1)!/x^k + k!/(2x^(k+1)) and the k!/x^(k+1) form",
    },
    BoundPairInfo {
        id: "LOG-KUANG",
        domain: "x > 0",
        source: "ln(1 + 1/x) below 2/(2x+1) [1 + 1/(12x) - 1/(12(x+1))]",
    },
];
