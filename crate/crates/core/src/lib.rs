//! Numerics for Bohr-radius problems on the unit disk.
//!
//! The crate computes the radii at which generalized majorant sums of
//! bounded analytic self-maps and of two classes of harmonic mappings stay
//! within their boundary-distance bounds, verifies the sharp refined
//! inequality that carries an image-area ratio term, and reproduces the
//! associated root tables. Everything reduces to four ingredients:
//!
//! - [`specfun`]: digamma, the s = 1 Hurwitz–Lerch transcendent, and the
//!   Gauss hypergeometric series, each with certified accuracy;
//! - [`phi`]: the weight families {φ_n(r)} that generalize the geometric
//!   basis rⁿ in the majorant sums;
//! - [`series`]: the weighted sums and alternating boundary constants the
//!   radius equations are built from, closed forms cross-checked against
//!   certified truncation;
//! - [`radius`] and [`verify`]: bracketed root solving with monotonicity and
//!   uniqueness certificates, plus grid sweeps of the sharp inequalities and
//!   their extremal witnesses.
//!
//! All types are immutable and all operations are pure; everything is safe
//! to use from multiple threads. Series are summed in ascending index order,
//! so repeated runs are bit-identical.

// domain guards are written `!(x > 0.0)` so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classes;
pub mod consts;
pub mod error;
pub mod phi;
pub mod radius;
pub mod series;
mod series_value;
pub mod specfun;
pub mod verify;

mod roots;

pub use error::{Error, Result};
pub use phi::{ClassGReport, PhiFamily, PhiKind};
pub use series_value::SeriesValue;
