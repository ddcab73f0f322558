//! Test oracles for the gammaineq workspace.
//!
//! Everything here exists to check the production crate from an
//! independent direction: a small double-double arithmetic, reference
//! evaluations of ln Γ / ψ / ψ^(k) with deliberately different shift and
//! truncation choices, and Gauss–Legendre quadrature for integral
//! identities. Intended for use as a dev-dependency only.

pub mod dd;
pub mod quad;
pub mod special;

pub use dd::Dd;
pub use quad::integrate;
pub use special::{
    digamma, digamma_dd, lgamma, lgamma_dd, polygamma, polygamma_dd,
    polygamma_signed, polygamma_signed_dd,
};
