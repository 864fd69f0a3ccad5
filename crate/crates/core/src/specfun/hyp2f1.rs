//! Gauss hypergeometric ₂F₁(a, b; c; z) by direct series summation on
//! z ∈ [0, 1).
//!
//! No transformation formulas: the parameter families this crate needs,
//! (1, 1+1/α; 2+1/α), (3, 1+1/α; 2+1/α) and (4, 2+1/α; 3+1/α), all converge
//! on [0, 1) by the ratio test, and the plain series keeps the tail bound
//! elementary.

use crate::error::{Error, Result};
use crate::series_value::SeriesValue;

/// Hard cap on series terms.
const TERM_CAP: usize = 1_000_000;

/// ₂F₁(a, b; c; z) with a certified tail bound at most `tol`.
///
/// Requires c > 0 and z ∈ [0, 1). Terminating cases (a or b a nonpositive
/// integer) are summed exactly. For the rest, once every later term ratio is
/// bounded by some ρ < 1 the remaining tail is certified by the geometric
/// bound |t_n| ρ/(1 − ρ).
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64, tol: f64) -> Result<SeriesValue> {
    if !(c > 0.0) {
        return Err(Error::Parameter {
            what: "gauss_2f1",
            detail: format!("c must be positive, got {c}"),
        });
    }
    if !(0.0..1.0).contains(&z) {
        return Err(Error::Domain {
            what: "gauss_2f1: need 0 <= z < 1",
            value: z,
        });
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Domain {
            what: "gauss_2f1: tol must be positive",
            value: tol,
        });
    }
    if z == 0.0 {
        return Ok(SeriesValue::exact(1.0, 1));
    }

    let mut sum = 1.0; // t_0
    let mut term = 1.0;
    let mut n: usize = 0;
    loop {
        let nf = n as f64;
        let ratio = z * (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0));
        term *= ratio;
        n += 1;
        if term == 0.0 {
            // (a)_n or (b)_n hit zero: the series terminates
            return Ok(SeriesValue::exact(sum, n));
        }
        sum += term;
        let nf = n as f64;
        if a + nf >= 0.0 && b + nf >= 0.0 {
            let rho = tail_ratio_bound(a, b, c, z, nf);
            if rho < 1.0 {
                let bound = term.abs() * rho / (1.0 - rho);
                if bound <= 0.5 * tol {
                    return Ok(SeriesValue {
                        value: sum,
                        tail_bound: bound + 4.0 * f64::EPSILON * sum.abs().max(1.0),
                        terms_used: n + 1,
                    });
                }
            }
        }
        if n >= TERM_CAP {
            return Err(Error::ToleranceUnreachable {
                what: "gauss_2f1",
                requested: tol,
                achieved: term.abs() / (1.0 - z),
                terms: n,
            });
        }
    }
}

/// Upper bound on sup_{m ≥ n} t_{m+1}/t_m, valid once a+n, b+n ≥ 0 and c > 0.
///
/// From t_{m+1}/t_m = z·[1 + (s·m + q)/((c+m)(1+m))] with s = a+b−c−1 and
/// q = ab−c, dropping negative contributions and using m/(c+m) ≤ 1.
fn tail_ratio_bound(a: f64, b: f64, c: f64, z: f64, n: f64) -> f64 {
    let s = a + b - c - 1.0;
    let q = a * b - c;
    let mut f = 1.0;
    if s > 0.0 {
        f += s / (n + 1.0);
    }
    if q > 0.0 {
        f += q / ((c + n) * (n + 1.0));
    }
    z * f
}
