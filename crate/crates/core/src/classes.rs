//! Extremal models of the three function classes and their growth and
//! distance envelopes.
//!
//! Each class is represented by the member attaining its coefficient bounds:
//! the disk automorphism (a+z)/(1+az) for bounded analytic self-maps, and
//! the two harmonic maps whose Taylor magnitudes are 2M/(n(n−1)) and
//! 2/(αn² + (1−α)n). The worst case of every inequality verified here is on
//! the positive real axis, so the models expose coefficient magnitudes and
//! real-axis evaluations only.

use crate::consts;
use crate::error::{Error, Result};
use crate::phi::{PhiFamily, PhiKind};
use crate::series::{self, weight_at, WeightKind};

/// Which envelope of the modulus growth to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

/// The self-map (a+z)/(1+az) with |a₀| = a; coefficient magnitudes
/// |a_n| = (1−a²)a^{n−1} for n ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusExtremal {
    a: f64,
}

impl MoebiusExtremal {
    pub fn new(a: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&a) {
            return Err(Error::Domain {
                what: "MoebiusExtremal: a must lie in [0, 1)",
                value: a,
            });
        }
        Ok(MoebiusExtremal { a })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// |a_n|; always below 1.
    pub fn coeff(&self, n: u32) -> f64 {
        if n == 0 {
            self.a
        } else {
            (1.0 - self.a * self.a) * self.a.powi(n as i32 - 1)
        }
    }

    /// Σ |a_n| rⁿ = a + (1−a²)r/(1−ar).
    pub fn majorant_sum(&self, r: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::Domain {
                what: "majorant_sum: r must lie in [0, 1)",
                value: r,
            });
        }
        Ok(self.a + (1.0 - self.a * self.a) * r / (1.0 - self.a * r))
    }

    /// f(r) = (r+a)/(1+ar) on the real axis.
    pub fn value_at(&self, r: f64) -> f64 {
        (r + self.a) / (1.0 + self.a * r)
    }

    /// f′(r) = (1−a²)/(1+ar)².
    pub fn deriv_at(&self, r: f64) -> f64 {
        let d = 1.0 + self.a * r;
        (1.0 - self.a * self.a) / (d * d)
    }
}

/// Extremal of the M-class: combined magnitudes c₁ = 1,
/// c_n = 2M/(n(n−1)) for n ≥ 2, strictly decreasing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicPh0Extremal {
    m: f64,
}

impl HarmonicPh0Extremal {
    pub fn new(m: f64) -> Result<Self> {
        if !(m > 0.0 && m.is_finite()) {
            return Err(Error::Domain {
                what: "HarmonicPh0Extremal: M must be > 0",
                value: m,
            });
        }
        Ok(HarmonicPh0Extremal { m })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn coeff(&self, n: u32) -> f64 {
        match n {
            0 => 0.0,
            1 => 1.0,
            _ => 2.0 * self.m * weight_at(WeightKind::Ph0, n),
        }
    }

    /// Boundary distance d(f(0), ∂f(𝔻)) ≥ L_M(1) = 1 + 2M(1 − ln 4).
    pub fn dist_lower_bound(&self) -> f64 {
        1.0 + 2.0 * self.m * series::ph0_alternating_constant()
    }
}

/// Extremal of the α-class: c₁ = 1, c_n = 2/(αn² + (1−α)n) for n ≥ 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicWh0Extremal {
    alpha: f64,
}

impl HarmonicWh0Extremal {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha >= 0.0 && alpha.is_finite()) {
            return Err(Error::Domain {
                what: "HarmonicWh0Extremal: alpha must be >= 0",
                value: alpha,
            });
        }
        Ok(HarmonicWh0Extremal { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn coeff(&self, n: u32) -> f64 {
        match n {
            0 => 0.0,
            1 => 1.0,
            _ => 2.0 * weight_at(WeightKind::Wh0 { alpha: self.alpha }, n),
        }
    }

    /// Boundary distance bound L_w(1); requires α ∈ [0, 1].
    pub fn dist_lower_bound(&self) -> Result<f64> {
        series::wh0_distance_bound(self.alpha)
    }
}

/// Growth envelope of the M-class on the closed disk of radius r:
/// L_M(r) = r + 2M(r − (1+r)ln(1+r)) below, R_M(r) = r + 2M(r + (1−r)ln(1−r))
/// above. L_M(1) = 1 + 2M(1 − ln 4) and R_M(1) = 1 + 2M.
///
/// The lower closed form is validated against brute-force alternating
/// summation in the tests before anything else relies on it.
pub fn growth_ph0(m: f64, r: f64, side: Side) -> Result<f64> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::Domain {
            what: "growth_ph0: M must be > 0",
            value: m,
        });
    }
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain {
            what: "growth_ph0: r must lie in [0, 1]",
            value: r,
        });
    }
    Ok(match side {
        Side::Lower => r + 2.0 * m * (r - (1.0 + r) * r.ln_1p()),
        Side::Upper => {
            if r == 1.0 {
                1.0 + 2.0 * m
            } else {
                r + 2.0 * m * (r + (1.0 - r) * (-r).ln_1p())
            }
        }
    })
}

/// Growth envelope of the α-class for α ∈ [0, 1].
///
/// Interior radii are evaluated by the certified series; r = 1 returns the
/// distance bound below (the π²/12 lane at α = 1) and the convergent weight
/// sum above.
pub fn growth_wh0(alpha: f64, r: f64, side: Side) -> Result<f64> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Domain {
            what: "growth_wh0: alpha must lie in [0, 1]",
            value: alpha,
        });
    }
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain {
            what: "growth_wh0: r must lie in [0, 1]",
            value: r,
        });
    }
    let kind = WeightKind::Wh0 { alpha };
    match side {
        Side::Lower => {
            if r == 1.0 {
                return series::wh0_distance_bound(alpha);
            }
            // alternating series with decreasing magnitudes: the first
            // omitted term certifies the tail
            let mut sum = r;
            let mut n = 2u32;
            loop {
                let t = 2.0 * r.powi(n as i32) * weight_at(kind, n);
                if t < 1e-15 {
                    return Ok(sum);
                }
                sum += if n.is_multiple_of(2) { -t } else { t };
                n += 1;
            }
        }
        Side::Upper => {
            if r == 0.0 {
                return Ok(0.0);
            }
            let sum = series::sum_weighted(&series::WeightedSumSpec {
                family: PhiFamily::power(),
                weight: kind,
                r,
                tol: 1e-13,
            })?;
            Ok(r + 2.0 * sum.value)
        }
    }
}

/// Upper bound of the admissible M range for a weight family:
/// 1/(2(Σ_{n≥2} φ_n(0)/(n(n−1)) − 1 + ln 4)).
///
/// Families whose weights vanish at 0 (all the closed-form kinds) give
/// 1/(2(ln 4 − 1)) ≈ 1.29435. Returns +∞ when the denominator is not
/// positive, in which case every M > 0 is admissible.
pub fn admissible_m_bound(family: &PhiFamily) -> f64 {
    let sum0 = match family.kind() {
        PhiKind::Power | PhiKind::PolyWeight { .. } | PhiKind::ShiftWeight { .. } => 0.0,
        PhiKind::Custom { .. } => {
            // numeric Σ φ_n(0)/(n(n−1)) with the constant-tail estimate
            // φ_N(0)/N, exact when φ_n(0) stabilizes
            let mut sum = 0.0;
            let n_max = 1_000_000u32;
            let mut last = 0.0;
            for n in 2..=n_max {
                last = family.eval(n, 0.0).unwrap_or(0.0);
                sum += last * weight_at(WeightKind::Ph0, n);
            }
            sum + last / n_max as f64
        }
    };
    let denom = sum0 - 1.0 + consts::ln_4();
    if denom <= 0.0 {
        f64::INFINITY
    } else {
        1.0 / (2.0 * denom)
    }
}
