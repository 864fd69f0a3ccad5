//! Bracketed root isolation: bisection to a narrow interval, then a guarded
//! secant polish that never leaves the bracket.

use crate::error::{Error, Result};

pub(crate) struct BracketOutcome {
    pub root: f64,
    pub bracket: (f64, f64),
    pub residual: f64,
    pub iterations: usize,
}

const MAX_ITER: usize = 400;

/// Find the root of `f` on [lo, hi] given f(lo) < 0 < f(hi).
///
/// `f_hi` may be +∞ (an endpoint known to exceed the target analytically);
/// bisection only ever evaluates interior points. The final bracket width is
/// at most `xtol` and the returned residual is |f(root)| after a secant
/// polish inside the bracket.
pub(crate) fn solve_bracketed<F>(
    what: &'static str,
    f: &F,
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_hi: f64,
    xtol: f64,
) -> Result<BracketOutcome>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(f_lo < 0.0) || !(f_hi > 0.0) {
        return Err(Error::NoSignChange { what, lo, hi });
    }
    let mut a = lo;
    let mut b = hi;
    let mut fa = f_lo;
    let mut fb = f_hi;
    let mut iterations = 0usize;

    while b - a > xtol {
        iterations += 1;
        if iterations > MAX_ITER {
            return Err(Error::MaxIterations { what, limit: MAX_ITER });
        }
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break; // interval at floating-point resolution
        }
        let fm = f(mid)?;
        if fm < 0.0 {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }

    // secant polish within the bracket; keep whichever point has the
    // smallest residual
    let (mut root, mut best) = if fa.abs() <= fb.abs() { (a, fa) } else { (b, fb) };
    if fa.is_finite() && fb.is_finite() && fb != fa {
        let mut x0 = a;
        let mut f0 = fa;
        let mut x1 = b;
        let mut f1 = fb;
        for _ in 0..4 {
            let denom = f1 - f0;
            if denom == 0.0 {
                break;
            }
            let x2 = x1 - f1 * (x1 - x0) / denom;
            if !(a..=b).contains(&x2) {
                break;
            }
            let f2 = f(x2)?;
            iterations += 1;
            if f2.abs() < best.abs() {
                root = x2;
                best = f2;
            }
            x0 = x1;
            f0 = f1;
            x1 = x2;
            f1 = f2;
            if f2 == 0.0 {
                break;
            }
        }
    }

    Ok(BracketOutcome {
        root,
        bracket: (a, b),
        residual: best.abs(),
        iterations,
    })
}
