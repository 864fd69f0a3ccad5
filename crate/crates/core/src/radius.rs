//! Radius equations and their solutions: build the left-hand side from the
//! series kernels, bracket the unique root in (0, 1), and certify
//! monotonicity and uniqueness by sampling.

use crate::classes::admissible_m_bound;
use crate::error::{Error, Result};
use crate::phi::PhiFamily;
use crate::roots::solve_bracketed;
use crate::series::{
    ph0_alternating_constant, sum_weighted, weight_at, wh0_distance_bound, WeightKind,
    WeightedSumSpec,
};
use crate::specfun::gauss_2f1;

/// Internal tolerance for left-hand-side series evaluations; well below the
/// residual targets of the solver.
const LHS_TOL: f64 = 1e-14;

/// Provenance of an equation, carried into reports.
#[derive(Debug, Clone)]
pub struct EquationMeta {
    /// "ph0" or "wh0".
    pub class: &'static str,
    /// Weight family description, e.g. "poly:2".
    pub family: String,
    /// M for the ph0 class, α for the wh0 class.
    pub param: f64,
}

enum EquationKind {
    Ph0 { family: PhiFamily, m: f64 },
    Wh0 { family: PhiFamily, alpha: f64 },
}

/// A root problem lhs(r) = rhs on (0, 1) with lhs(0) < rhs < lhs(1).
pub struct RadiusEquation {
    kind: EquationKind,
    rhs: f64,
    meta: EquationMeta,
}

impl RadiusEquation {
    /// r·φ₀(r) + prefactor·Σ_{n≥2} φ_n(r)·w_n.
    pub fn lhs(&self, r: f64) -> Result<f64> {
        let (family, weight, prefactor) = self.parts();
        if r == 1.0 && family.diverges_at_one() {
            return Ok(f64::INFINITY);
        }
        let head = r * family.eval(0, r)?;
        let sum = sum_weighted(&WeightedSumSpec {
            family: family.clone(),
            weight,
            r,
            tol: LHS_TOL,
        })?;
        Ok(head + prefactor * sum.value)
    }

    pub fn rhs(&self) -> f64 {
        self.rhs
    }

    pub fn meta(&self) -> &EquationMeta {
        &self.meta
    }

    fn parts(&self) -> (&PhiFamily, WeightKind, f64) {
        match &self.kind {
            EquationKind::Ph0 { family, m } => (family, WeightKind::Ph0, 2.0 * m),
            EquationKind::Wh0 { family, alpha } => {
                (family, WeightKind::Wh0 { alpha: *alpha }, 2.0)
            }
        }
    }

    /// Sign check at r = 1 by monotone partial sums: all terms are
    /// nonnegative, so the partial sum exceeding rhs settles the sign
    /// without needing the (possibly divergent) full value.
    fn lhs_exceeds_rhs_at_one(&self) -> Result<bool> {
        let (family, weight, prefactor) = self.parts();
        let mut partial = family.eval(0, 1.0)?;
        if partial > self.rhs {
            return Ok(true);
        }
        for n in 2..=2_000_000u32 {
            partial += prefactor * family.eval(n, 1.0)? * weight_at(weight, n);
            if partial > self.rhs {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Equation r·φ₀(r) + 2M·Σ φ_n(r)/(n(n−1)) = 1 + 2M(1 − ln 4) for the
/// M-class, after checking that M is admissible for the family and that the
/// endpoints straddle the target.
pub fn build_ph0_equation(family: &PhiFamily, m: f64) -> Result<RadiusEquation> {
    let bound = admissible_m_bound(family);
    if !(m > 0.0 && m < bound) {
        return Err(Error::Admissibility {
            what: "build_ph0_equation",
            value: m,
            bound,
        });
    }
    let rhs = 1.0 + 2.0 * m * ph0_alternating_constant();
    let eq = RadiusEquation {
        kind: EquationKind::Ph0 {
            family: family.clone(),
            m,
        },
        rhs,
        meta: EquationMeta {
            class: "ph0",
            family: family.description().to_string(),
            param: m,
        },
    };
    check_endpoints(eq)
}

/// Equation r·φ₀(r) + 2·Σ φ_n(r)/(αn² + (1−α)n) = L_w(1) for the α-class,
/// α ∈ [0, 1].
pub fn build_wh0_equation(family: &PhiFamily, alpha: f64) -> Result<RadiusEquation> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Domain {
            what: "build_wh0_equation: alpha must lie in [0, 1]",
            value: alpha,
        });
    }
    let rhs = wh0_distance_bound(alpha)?;
    let eq = RadiusEquation {
        kind: EquationKind::Wh0 {
            family: family.clone(),
            alpha,
        },
        rhs,
        meta: EquationMeta {
            class: "wh0",
            family: family.description().to_string(),
            param: alpha,
        },
    };
    check_endpoints(eq)
}

fn check_endpoints(eq: RadiusEquation) -> Result<RadiusEquation> {
    // lhs(0) = 0 because every φ_n (n ≥ 2) vanishes at 0 and the head term
    // carries a factor r; so the low endpoint needs rhs > 0
    if !(eq.rhs > 0.0) {
        return Err(Error::NoSignChange {
            what: "radius equation: rhs not positive at the origin",
            lo: 0.0,
            hi: 1.0,
        });
    }
    if !eq.lhs_exceeds_rhs_at_one()? {
        return Err(Error::NoSignChange {
            what: "radius equation: lhs(1) does not exceed rhs",
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok(eq)
}

/// A converged root with its certificates.
#[derive(Debug, Clone)]
pub struct RootResult {
    pub root: f64,
    pub bracket: (f64, f64),
    pub residual: f64,
    pub iterations: usize,
    /// Positive finite differences of the lhs at 256 interior points.
    pub monotone_certificate: bool,
    /// Sign changes of lhs − rhs across a 1024-point grid of [0, 1).
    pub sign_changes: usize,
}

/// Solve the equation to `tol` residual with bracket width ≤ 1e−13, then
/// certify monotonicity and uniqueness by sampling.
pub fn solve_radius(eq: &RadiusEquation, tol: f64) -> Result<RootResult> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Domain {
            what: "solve_radius: tol must be positive",
            value: tol,
        });
    }
    let f = |r: f64| Ok(eq.lhs(r)? - eq.rhs);
    let f_lo = -eq.rhs; // lhs(0) = 0 exactly
    let out = solve_bracketed("solve_radius", &f, 0.0, 1.0, f_lo, f64::INFINITY, 1e-13)?;
    let scale = eq.rhs.abs().max(1.0);
    if out.residual > tol * scale {
        return Err(Error::ToleranceUnreachable {
            what: "solve_radius residual",
            requested: tol,
            achieved: out.residual,
            terms: out.iterations,
        });
    }

    // monotonicity: forward differences across 256 interior points
    let mut monotone = true;
    let mut prev = eq.lhs(1.0 / 257.0)?;
    for i in 2..=256 {
        let v = eq.lhs(i as f64 / 257.0)?;
        if v <= prev {
            monotone = false;
            break;
        }
        prev = v;
    }

    // uniqueness: exactly one sign change over a uniform grid of [0, 1)
    let mut sign_changes = 0usize;
    let mut prev_sign = f(0.0)? < 0.0;
    for i in 1..1024usize {
        let sign = f(i as f64 / 1024.0)? < 0.0;
        if sign != prev_sign {
            sign_changes += 1;
            prev_sign = sign;
        }
    }

    Ok(RootResult {
        root: out.root,
        bracket: out.bracket,
        residual: out.residual,
        iterations: out.iterations,
        monotone_certificate: monotone,
        sign_changes,
    })
}

/// The classical radius equations with closed-form roots for N = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassicalKind {
    /// (1+r)r^N − (1−r)² = 0, the partial-sum variant with |f(z)|².
    Rogosinski1 { n: u32 },
    /// 2(1+r)r^N − (1−r)² = 0, the partial-sum variant with |f(z)|.
    Rogosinski2 { n: u32 },
    /// |F(a, b; c; x) − 1| = p/2 with nonnegative series coefficients.
    Hypergeometric { a: f64, b: f64, c: f64, p: f64 },
}

/// Unique root in (0, 1) of the selected classical equation.
pub fn classical_radius(kind: ClassicalKind) -> Result<f64> {
    match kind {
        ClassicalKind::Rogosinski1 { n } | ClassicalKind::Rogosinski2 { n } => {
            if n < 1 {
                return Err(Error::Parameter {
                    what: "classical_radius",
                    detail: "N must be >= 1".to_string(),
                });
            }
            let two = matches!(kind, ClassicalKind::Rogosinski2 { .. });
            let f = move |r: f64| {
                let factor = if two { 2.0 } else { 1.0 };
                Ok(factor * (1.0 + r) * r.powi(n as i32) - (1.0 - r) * (1.0 - r))
            };
            let f1 = if two { 4.0 } else { 2.0 };
            let out = solve_bracketed("classical_radius", &f, 0.0, 1.0, -1.0, f1, 1e-14)?;
            Ok(out.root)
        }
        ClassicalKind::Hypergeometric { a, b, c, p } => {
            if !(a >= 0.0 && b >= 0.0 && c > 0.0) {
                return Err(Error::Parameter {
                    what: "classical_radius",
                    detail: format!(
                        "need a, b >= 0 and c > 0 for nonnegative coefficients, got ({a}, {b}, {c})"
                    ),
                });
            }
            if !(p > 0.0 && p <= 2.0) {
                return Err(Error::Parameter {
                    what: "classical_radius",
                    detail: format!("p must lie in (0, 2], got {p}"),
                });
            }
            // F(x) − 1 is nonnegative and increasing, so |F − 1| = p/2 has a
            // single crossing; push the upper endpoint toward 1 until it
            // brackets.
            let f = move |x: f64| Ok(gauss_2f1(a, b, c, x, 1e-13)?.value - 1.0 - 0.5 * p);
            let mut hi = 0.9;
            let mut f_hi = f(hi)?;
            while f_hi <= 0.0 && hi < 1.0 - 1e-4 {
                hi = 1.0 - 0.25 * (1.0 - hi);
                f_hi = f(hi)?;
            }
            if f_hi <= 0.0 {
                return Err(Error::NoSignChange {
                    what: "classical_radius: series bounded below 1 + p/2",
                    lo: 0.0,
                    hi,
                });
            }
            let out = solve_bracketed("classical_radius", &f, 0.0, hi, -0.5 * p, f_hi, 1e-13)?;
            Ok(out.root)
        }
    }
}

/// The two bundled 3×9 root tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    One,
    Two,
}

/// The nine M values the published tables tabulate.
pub const TABLE_M: [f64; 9] = [
    0.431, 0.862, 1.210, 1.271, 1.289, 1.292, 1.2935, 1.29421, 1.29433,
];

/// Published values, exactly as printed, for the n^k weight table.
pub const TABLE1_PUBLISHED: [[&str; 9]; 3] = [
    ["0.443", "0.230", "0.057", "0.017", "0.0040", "0.0018", "0.00065", "0.00010", "0.000015"],
    ["0.358", "0.189", "0.029", "0.016", "0.0040", "0.0017", "0.00065", "0.00010", "0.000015"],
    ["0.277", "0.149", "0.044", "0.015", "0.0039", "0.0017", "0.00065", "0.00010", "0.000015"],
];

/// Published values for the (n+1)^k weight table.
pub const TABLE2_PUBLISHED: [[&str; 9]; 3] = [
    ["0.404", "0.208", "0.054", "0.016", "0.0040", "0.0018", "0.00065", "0.00010", "0.000015"],
    ["0.284", "0.147", "0.043", "0.015", "0.0039", "0.0017", "0.00065", "0.00010", "0.000015"],
    ["0.203", "0.147", "0.043", "0.015", "0.0039", "0.0017", "0.00065", "0.00010", "0.000015"],
];

/// Published-vs-computed agreement gate, absolute: the tables print three
/// decimals, and suspected misprints are flagged rather than failed.
pub const TABLE_TOLERANCE: f64 = 0.002;

/// One solved cell of a table.
#[derive(Debug, Clone)]
pub struct TableCell {
    pub m: f64,
    /// Weight exponent k of n^k (table one) or (n+1)^k (table two).
    pub weight_exponent: u32,
    pub result: Result<RootResult>,
    /// The printed reference value, verbatim and parsed.
    pub published_str: &'static str,
    pub published: f64,
    /// |computed − published| when the cell solved.
    pub abs_diff: Option<f64>,
    /// True when the cell disagrees with the printed value beyond ±0.002.
    pub flagged: bool,
}

/// A fully solved table with its ordering audit.
#[derive(Debug, Clone)]
pub struct TableReport {
    pub id: TableId,
    /// 27 cells in row-major order: k = 1, 2, 3 each across the nine M.
    pub cells: Vec<TableCell>,
    /// (m index, weight exponent) pairs where R_k < R_{k+1} on computed values.
    pub ordering_violations: Vec<(usize, u32)>,
    /// Cells whose computed root agrees with the printed value within ±0.002.
    pub agree_count: usize,
}

/// Solve all 27 cells of a table; per-cell failures are recorded, not
/// propagated.
pub fn table_generate(id: TableId, tol: f64) -> TableReport {
    let published = match id {
        TableId::One => &TABLE1_PUBLISHED,
        TableId::Two => &TABLE2_PUBLISHED,
    };
    let mut cells = Vec::with_capacity(27);
    let mut roots = [[None::<f64>; 9]; 3];
    for k in 1..=3u32 {
        for (j, &m) in TABLE_M.iter().enumerate() {
            let family = match id {
                TableId::One => PhiFamily::poly_weight(k as f64),
                TableId::Two => PhiFamily::shift_weight(k as f64),
            };
            let result = family
                .and_then(|fam| build_ph0_equation(&fam, m))
                .and_then(|eq| solve_radius(&eq, tol));
            let published_str = published[(k - 1) as usize][j];
            let published_val: f64 = published_str.parse().unwrap();
            let (abs_diff, flagged) = match &result {
                Ok(rr) => {
                    roots[(k - 1) as usize][j] = Some(rr.root);
                    let d = (rr.root - published_val).abs();
                    (Some(d), d > TABLE_TOLERANCE)
                }
                Err(_) => (None, true),
            };
            cells.push(TableCell {
                m,
                weight_exponent: k,
                result,
                published_str,
                published: published_val,
                abs_diff,
                flagged,
            });
        }
    }
    let mut ordering_violations = Vec::new();
    for (j, _) in TABLE_M.iter().enumerate() {
        for k in 0..2 {
            if let (Some(hi), Some(lo)) = (roots[k][j], roots[k + 1][j]) {
                if hi < lo - 1e-12 {
                    ordering_violations.push((j, (k + 1) as u32));
                }
            }
        }
    }
    let agree_count = cells
        .iter()
        .filter(|c| matches!(c.abs_diff, Some(d) if d <= TABLE_TOLERANCE))
        .count();
    TableReport {
        id,
        cells,
        ordering_violations,
        agree_count,
    }
}

/// Radius of the remark cases: the geometric family under the α-class
/// weights. α = 0 reproduces 0.285194…, α = 1 reproduces 0.58387765….
pub fn remark_radius(alpha: f64, tol: f64) -> Result<RootResult> {
    let eq = build_wh0_equation(&PhiFamily::power(), alpha)?;
    solve_radius(&eq, tol)
}
