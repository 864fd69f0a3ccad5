//! Weight families {φ_n(r)} on [0, 1): the geometric basis rⁿ and its
//! polynomially weighted variants that replace it in the generalized
//! majorant sums.
//!
//! A family belongs to the working class when every φ_n is nonnegative,
//! differentiable and nondecreasing on [0, 1) and both Σφ_n and Σφ_n′
//! converge locally uniformly there. Membership is checked by sampling, not
//! proved; see [`PhiFamily::check_in_class_g`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

type PhiEval = Arc<dyn Fn(u32, f64) -> f64 + Send + Sync>;

/// The concrete weight shapes used by the radius equations.
#[derive(Clone)]
pub enum PhiKind {
    /// φ_n(r) = rⁿ
    Power,
    /// φ₀(r) = 1 and φ_n(r) = n^α rⁿ for n ≥ 1
    PolyWeight { alpha: f64 },
    /// φ_n(r) = (n+1)^β rⁿ
    ShiftWeight { beta: f64 },
    /// Caller-supplied evaluators for φ_n and φ_n′ (used by verification code)
    Custom { phi: PhiEval, dphi: PhiEval },
}

/// An immutable weight family; values are cheap to clone and share.
#[derive(Clone)]
pub struct PhiFamily {
    kind: PhiKind,
    phi0_is_one: bool,
    description: String,
}

impl fmt::Debug for PhiFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhiFamily({})", self.description)
    }
}

impl PhiFamily {
    /// The geometric family rⁿ.
    pub fn power() -> Self {
        PhiFamily {
            kind: PhiKind::Power,
            phi0_is_one: true, // r⁰ = 1 already
            description: "power".to_string(),
        }
    }

    /// n^α rⁿ for n ≥ 1 with φ₀ pinned to 1, the way the weighted
    /// consequences use it.
    pub fn poly_weight(alpha: f64) -> Result<Self> {
        if !(alpha >= 0.0 && alpha.is_finite()) {
            return Err(Error::Domain {
                what: "poly_weight: alpha must be >= 0",
                value: alpha,
            });
        }
        Ok(PhiFamily {
            kind: PhiKind::PolyWeight { alpha },
            phi0_is_one: true,
            description: format!("poly:{alpha}"),
        })
    }

    /// (n+1)^β rⁿ; φ₀ = 1 holds automatically.
    pub fn shift_weight(beta: f64) -> Result<Self> {
        if !(beta >= 0.0 && beta.is_finite()) {
            return Err(Error::Domain {
                what: "shift_weight: beta must be >= 0",
                value: beta,
            });
        }
        Ok(PhiFamily {
            kind: PhiKind::ShiftWeight { beta },
            phi0_is_one: true,
            description: format!("shift:{beta}"),
        })
    }

    /// A family from caller-supplied closures for φ_n(r) and φ_n′(r).
    pub fn custom(
        description: &str,
        phi: PhiEval,
        dphi: PhiEval,
        phi0_is_one: bool,
    ) -> Self {
        PhiFamily {
            kind: PhiKind::Custom { phi, dphi },
            phi0_is_one,
            description: description.to_string(),
        }
    }

    pub fn kind(&self) -> &PhiKind {
        &self.kind
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn phi0_is_one(&self) -> bool {
        self.phi0_is_one
    }

    /// φ_n(r) for r ∈ [0, 1].
    pub fn eval(&self, n: u32, r: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::Domain {
                what: "phi eval: r must lie in [0, 1]",
                value: r,
            });
        }
        if n == 0 && self.phi0_is_one {
            return Ok(1.0);
        }
        Ok(match &self.kind {
            PhiKind::Power => r.powi(n as i32),
            PhiKind::PolyWeight { alpha } => (n as f64).powf(*alpha) * r.powi(n as i32),
            PhiKind::ShiftWeight { beta } => ((n + 1) as f64).powf(*beta) * r.powi(n as i32),
            PhiKind::Custom { phi, .. } => phi(n, r),
        })
    }

    /// Exact derivative φ_n′(r) of the closed-form weight, r ∈ [0, 1).
    pub fn eval_deriv(&self, n: u32, r: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::Domain {
                what: "phi eval_deriv: r must lie in [0, 1)",
                value: r,
            });
        }
        if n == 0 {
            // φ₀ is the constant 1 under the override, and r⁰ otherwise
            return Ok(match &self.kind {
                PhiKind::Custom { dphi, .. } if !self.phi0_is_one => dphi(0, r),
                _ => 0.0,
            });
        }
        let monom_deriv = n as f64 * r.powi(n as i32 - 1);
        Ok(match &self.kind {
            PhiKind::Power => monom_deriv,
            PhiKind::PolyWeight { alpha } => (n as f64).powf(*alpha) * monom_deriv,
            PhiKind::ShiftWeight { beta } => ((n + 1) as f64).powf(*beta) * monom_deriv,
            PhiKind::Custom { dphi, .. } => dphi(n, r),
        })
    }

    /// Exponent p with φ_{n+1}(r)/φ_n(r) ≤ r·((n+1)/n)^p for n ≥ 1, used by
    /// the certified truncation bounds. `None` for custom families.
    pub(crate) fn growth_exponent(&self) -> Option<f64> {
        match &self.kind {
            PhiKind::Power => Some(0.0),
            PhiKind::PolyWeight { alpha } => Some(*alpha),
            PhiKind::ShiftWeight { beta } => Some(*beta),
            PhiKind::Custom { .. } => None,
        }
    }

    /// Whether Σ_{n≥2} φ_n(1)/(n(n−1))-type sums diverge at r = 1.
    ///
    /// True exactly when the weight grows at least linearly, which is the
    /// case for every non-geometric family used by the tables.
    pub(crate) fn diverges_at_one(&self) -> bool {
        match &self.kind {
            PhiKind::Power => false,
            PhiKind::PolyWeight { alpha } => *alpha >= 1.0,
            PhiKind::ShiftWeight { beta } => *beta >= 1.0,
            PhiKind::Custom { .. } => false,
        }
    }

    /// Sampling check of class membership on [0, r_max]:
    /// nonnegativity, monotonicity in r, and a tail ratio
    /// φ_{n+1}(r_max)/φ_n(r_max) bounded below 1 for large n (a sufficient
    /// condition for locally uniform convergence of Σφ_n and Σφ_n′).
    pub fn check_in_class_g(&self, r_max: f64, grid: usize) -> Result<ClassGReport> {
        if !(r_max > 0.0 && r_max < 1.0) {
            return Err(Error::Domain {
                what: "check_in_class_g: need 0 < r_max < 1",
                value: r_max,
            });
        }
        if grid < 2 {
            return Err(Error::Parameter {
                what: "check_in_class_g",
                detail: format!("grid must be >= 2, got {grid}"),
            });
        }
        const N_CHECK: u32 = 32;
        // nonnegativity and monotonicity on the grid
        for n in 0..=N_CHECK {
            let mut prev = f64::NEG_INFINITY;
            for i in 0..grid {
                let r = r_max * i as f64 / (grid - 1) as f64;
                let v = self.eval(n, r)?;
                if v < 0.0 {
                    return Ok(ClassGReport::fail(format!(
                        "phi_{n}({r:.6}) = {v:e} is negative"
                    )));
                }
                if v < prev - 1e-15 {
                    return Ok(ClassGReport::fail(format!(
                        "phi_{n} decreases near r = {r:.6}"
                    )));
                }
                prev = v;
            }
        }
        // tail ratio window: sup over n in [64, 320] at r_max, plus the
        // requirement that the ratios are not increasing across the window
        let mut sup: f64 = 0.0;
        let mut prev_ratio = f64::INFINITY;
        let mut trend_ok = true;
        for n in 64..=320u32 {
            let lo = self.eval(n, r_max)?;
            let hi = self.eval(n + 1, r_max)?;
            if lo <= 0.0 {
                return Ok(ClassGReport::fail(format!(
                    "phi_{n}({r_max}) vanishes; tail ratio undefined"
                )));
            }
            let ratio = hi / lo;
            sup = sup.max(ratio);
            if ratio > prev_ratio + 1e-12 {
                trend_ok = false;
            }
            prev_ratio = ratio;
        }
        if sup >= 1.0 {
            return Ok(ClassGReport {
                is_member: false,
                violation: Some(format!("tail ratio {sup} not bounded below 1")),
                tail_ratio_sup: sup,
            });
        }
        if !trend_ok {
            return Ok(ClassGReport {
                is_member: false,
                violation: Some("tail ratios increase across the window".to_string()),
                tail_ratio_sup: sup,
            });
        }
        Ok(ClassGReport {
            is_member: true,
            violation: None,
            tail_ratio_sup: sup,
        })
    }
}

/// Outcome of the sampling membership check; lists the first violated
/// predicate when membership fails.
#[derive(Debug, Clone)]
pub struct ClassGReport {
    pub is_member: bool,
    pub violation: Option<String>,
    pub tail_ratio_sup: f64,
}

impl ClassGReport {
    fn fail(reason: String) -> Self {
        ClassGReport {
            is_member: false,
            violation: Some(reason),
            tail_ratio_sup: f64::NAN,
        }
    }
}
