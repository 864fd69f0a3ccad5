//! Special functions backing the radius equations: digamma, the s = 1
//! Hurwitz–Lerch transcendent, and the Gauss hypergeometric series.
//!
//! All evaluators are pure functions of their arguments and are safe to call
//! concurrently.

mod digamma;
mod hyp2f1;
mod lerch;

pub use digamma::digamma;
pub use hyp2f1::gauss_2f1;
pub use lerch::{h_alpha, lerch_phi, lerch_phi_via_digamma, PhiArgs};
