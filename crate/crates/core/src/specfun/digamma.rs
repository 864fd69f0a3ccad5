//! Digamma ψ(x) = Γ′(x)/Γ(x) on the positive real axis.

use crate::error::{Error, Result};

/// Coefficients B_{2k}/(2k) of the asymptotic expansion
/// ψ(x) ≈ ln x − 1/(2x) − Σ_k B_{2k}/(2k · x^{2k}),  k = 1..7.
const ASYMP: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// Arguments are shifted above this before the expansion is applied; the
/// first omitted term is then below 4.5e−17.
const SHIFT_THRESHOLD: f64 = 10.0;

/// Digamma function for x > 0.
///
/// Uses the recurrence ψ(x+1) = ψ(x) + 1/x to move the argument above 10,
/// then a seven-term asymptotic expansion in 1/x². The negative axis is not
/// supported here; callers in this crate never need it.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain {
            what: "digamma: x must be > 0",
            value: x,
        });
    }
    let mut shifted = 0.0;
    let mut y = x;
    while y < SHIFT_THRESHOLD {
        shifted -= 1.0 / y;
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut tail = 0.0;
    let mut p = inv2;
    for c in ASYMP {
        tail += c * p;
        p *= inv2;
    }
    Ok(shifted + y.ln() - 0.5 * inv - tail)
}
