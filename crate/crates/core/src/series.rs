//! The weighted infinite sums behind every radius equation, with closed
//! forms where they exist and a certified truncation path everywhere else,
//! plus the alternating boundary constants and the coefficient series of the
//! disk-automorphism extremal.
//!
//! Summation order is ascending n throughout, so results are bit-reproducible
//! run to run.

use std::f64::consts::{LN_2, PI};

use crate::consts;
use crate::error::{Error, Result};
use crate::phi::{PhiFamily, PhiKind};
use crate::series_value::SeriesValue;
use crate::specfun::{digamma, h_alpha, lerch_phi, PhiArgs};

/// Which per-term damping divides the weight family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightKind {
    /// 1/(n(n−1)), the second-primitive weights of the M-class.
    Ph0,
    /// 1/(αn² + (1−α)n), the α-class weights.
    Wh0 { alpha: f64 },
}

/// A weighted sum Σ_{n≥2} φ_n(r)·w_n to evaluate at one point.
///
/// The result carries no 2M or 2 prefactor; callers scale it.
#[derive(Debug, Clone)]
pub struct WeightedSumSpec {
    pub family: PhiFamily,
    pub weight: WeightKind,
    pub r: f64,
    pub tol: f64,
}

/// w_n for n ≥ 2.
pub fn weight_at(kind: WeightKind, n: u32) -> f64 {
    let nf = n as f64;
    match kind {
        WeightKind::Ph0 => 1.0 / (nf * (nf - 1.0)),
        WeightKind::Wh0 { alpha } => 1.0 / (alpha * nf * nf + (1.0 - alpha) * nf),
    }
}

/// Selects n^k or (n+1)^k in [`closed_form_ph0`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightVariant {
    NPow,
    NPlusOnePow,
}

/// ln(1−r) without cancellation for small r.
#[inline]
fn ln_1m(r: f64) -> f64 {
    (-r).ln_1p()
}

/// Σ_{n≥2} rⁿ/(n(n−1)) = r + (1−r)ln(1−r) on [0, 1]; the value at 1 is the
/// telescoping limit 1.
pub fn ph0_base_closed(r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain {
            what: "ph0_base_closed: r must lie in [0, 1]",
            value: r,
        });
    }
    if r == 1.0 {
        return Ok(1.0);
    }
    Ok(r + (1.0 - r) * ln_1m(r))
}

/// Σ_{n≥2} rⁿ/n = −ln(1−r) − r on [0, 1).
pub fn wh0_base_alpha0_closed(r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain {
            what: "wh0_base_alpha0_closed: r must lie in [0, 1)",
            value: r,
        });
    }
    Ok(-ln_1m(r) - r)
}

/// The six weighted closed forms Σ_{n≥2} v(n)^k rⁿ/(n(n−1)) for
/// v(n) = n or n+1 and k = 1, 2, 3.
pub fn closed_form_ph0(variant: WeightVariant, k: u32, r: f64) -> Result<f64> {
    if !(1..=3).contains(&k) {
        return Err(Error::Parameter {
            what: "closed_form_ph0",
            detail: format!("k must be 1, 2 or 3, got {k}"),
        });
    }
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain {
            what: "closed_form_ph0: r must lie in [0, 1)",
            value: r,
        });
    }
    let l = ln_1m(r);
    let u = 1.0 - r;
    Ok(match (variant, k) {
        (WeightVariant::NPow, 1) => -r * l,
        (WeightVariant::NPow, 2) => r * (r - u * l) / u,
        (WeightVariant::NPow, 3) => r * ((3.0 - 2.0 * r) * r / (u * u) - l),
        (WeightVariant::NPlusOnePow, 1) => r + (1.0 - 2.0 * r) * l,
        (WeightVariant::NPlusOnePow, 2) => (r + (1.0 - 5.0 * r + 4.0 * r * r) * l) / u,
        (WeightVariant::NPlusOnePow, 3) => {
            (r + 4.0 * r * r - 4.0 * r * r * r + u * u * (1.0 - 8.0 * r) * l) / (u * u)
        }
        _ => unreachable!(),
    })
}

/// Σ_{n≥2} (−1)^{n−1}/(n(n−1)) = 1 − ln 4 ≈ −0.386294.
pub fn ph0_alternating_constant() -> f64 {
    1.0 - consts::ln_4()
}

/// Σ_{n≥2} (−1)^{n−1}/(αn² + (1−α)n) = (−1 + H(α) + ln 2)/(1 − α) for
/// α ∈ [0, 1); negative on the whole range.
///
/// α = 1 makes the closed form 0/0 and is rejected here; the pure-n² lane
/// is served by [`wh0_distance_bound`].
pub fn wh0_alternating_constant(alpha: f64) -> Result<f64> {
    if alpha == 0.0 {
        return Ok(LN_2 - 1.0);
    }
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Domain {
            what: "wh0_alternating_constant: alpha must lie in [0, 1)",
            value: alpha,
        });
    }
    Ok((h_alpha(alpha)? + LN_2 - 1.0) / (1.0 - alpha))
}

/// The boundary distance bound that every α-class radius equation equates
/// its left side to.
///
/// For α ∈ [0, 1) this is 1 + 2(−1 + H(α) + ln 2)/(1 − α). The α = 1 lane is
/// pinned to π²/12 = Σ_{n≥1}(−1)^{n−1}/n², the pure-n² weight constant that
/// reproduces the published radius 0.58387765 of that class.
pub fn wh0_distance_bound(alpha: f64) -> Result<f64> {
    if alpha == 1.0 {
        return Ok(consts::pi_sq_over_12());
    }
    Ok(1.0 + 2.0 * wh0_alternating_constant(alpha)?)
}

/// r below which closed forms are cross-checked against truncation on the fly.
const CROSSCHECK_MAX_R: f64 = 0.95;

/// Term cap of the adaptive truncation.
const SUM_TERM_CAP: usize = 20_000_000;

/// Σ_{n≥2} φ_n(r)·w_n with a certified bound.
///
/// Dispatches to a closed form when one exists for the (family, weight) pair
/// and, for r ≤ 0.95, cross-checks it against the truncated series within
/// `tol`; otherwise sums adaptively with a geometric-ratio tail bound. r = 1
/// is answered for the convergent combinations and rejected for the rest.
pub fn sum_weighted(spec: &WeightedSumSpec) -> Result<SeriesValue> {
    if !(spec.tol > 0.0 && spec.tol.is_finite()) {
        return Err(Error::Domain {
            what: "sum_weighted: tol must be positive",
            value: spec.tol,
        });
    }
    if !(0.0..=1.0).contains(&spec.r) {
        return Err(Error::Domain {
            what: "sum_weighted: r must lie in [0, 1]",
            value: spec.r,
        });
    }
    if let WeightKind::Wh0 { alpha } = spec.weight {
        if !(alpha >= 0.0 && alpha.is_finite()) {
            return Err(Error::Domain {
                what: "sum_weighted: alpha must be >= 0",
                value: alpha,
            });
        }
    }
    if spec.r == 0.0 {
        return Ok(SeriesValue::exact(0.0, 1));
    }
    if spec.r == 1.0 {
        return sum_at_one(spec);
    }

    match closed_form_value(spec)? {
        Some(closed) => {
            let mut out = SeriesValue {
                value: closed.value,
                tail_bound: closed.tail_bound + 4.0 * f64::EPSILON * closed.value.abs().max(1.0),
                terms_used: closed.terms_used,
            };
            if spec.r <= CROSSCHECK_MAX_R {
                let trunc = truncated_sum(spec)?;
                let gap = (closed.value - trunc.value).abs();
                // the budget covers both certified tails plus rounding drift
                // of the term accumulation; formula errors show up orders of
                // magnitude above it
                let budget =
                    trunc.tail_bound + out.tail_bound + spec.tol + 1e-12 * closed.value.abs().max(1.0);
                if gap > budget {
                    return Err(Error::Inconsistent {
                        what: "sum_weighted",
                        detail: format!(
                            "closed form {} vs truncation {} (gap {gap:e}) for {} / {:?} at r = {}",
                            closed.value,
                            trunc.value,
                            spec.family.description(),
                            spec.weight,
                            spec.r
                        ),
                    });
                }
                out.terms_used = trunc.terms_used;
            }
            Ok(out)
        }
        None => truncated_sum(spec),
    }
}

/// Closed form for the (family, weight) pair, when one exists.
fn closed_form_value(spec: &WeightedSumSpec) -> Result<Option<SeriesValue>> {
    let r = spec.r;
    match (spec.family.kind(), spec.weight) {
        (PhiKind::Power, WeightKind::Ph0) => Ok(Some(SeriesValue::exact(ph0_base_closed(r)?, 1))),
        (PhiKind::PolyWeight { alpha }, WeightKind::Ph0) => match integer_k(*alpha) {
            Some(k) => Ok(Some(SeriesValue::exact(
                closed_form_ph0(WeightVariant::NPow, k, r)?,
                1,
            ))),
            None => Ok(None),
        },
        (PhiKind::ShiftWeight { beta }, WeightKind::Ph0) => match integer_k(*beta) {
            Some(k) => Ok(Some(SeriesValue::exact(
                closed_form_ph0(WeightVariant::NPlusOnePow, k, r)?,
                1,
            ))),
            None => Ok(None),
        },
        (PhiKind::Power, WeightKind::Wh0 { alpha }) => wh0_power_closed(alpha, r, spec.tol),
        (PhiKind::PolyWeight { alpha: k }, WeightKind::Wh0 { alpha }) => match integer_k(*k) {
            Some(k) => wh0_poly_closed(k, alpha, r, spec.tol),
            None => Ok(None),
        },
        _ => Ok(None),
    }
}

fn integer_k(x: f64) -> Option<u32> {
    (1..=3u32).find(|&k| (x - k as f64).abs() < 1e-12)
}

/// α above which the partial-fraction route is abandoned: its 1/(1−α)
/// prefactor amplifies cancellation in the numerator, which vanishes as
/// α → 1; truncation stays certified there.
const WH0_PARTIAL_FRACTION_MAX_ALPHA: f64 = 0.99;

/// Σ_{n≥2} rⁿ/(αn² + (1−α)n) in closed form, r ∈ (0, 1).
///
/// α = 0 is elementary; 0 < α ≤ 0.99 reduces by partial fractions to
/// [−ln(1−r) − r − r²Φ(r, 1, 1+1/α)]/(1−α); larger α (dilogarithm-like
/// tail) falls back to truncation.
fn wh0_power_closed(alpha: f64, r: f64, tol: f64) -> Result<Option<SeriesValue>> {
    if alpha == 0.0 {
        return Ok(Some(SeriesValue::exact(wh0_base_alpha0_closed(r)?, 1)));
    }
    if alpha > WH0_PARTIAL_FRACTION_MAX_ALPHA {
        return Ok(None);
    }
    let phi_tol = (tol * (1.0 - alpha) / (2.0 * r * r)).max(1e-15);
    let phi = lerch_phi(PhiArgs::new(r, 1.0 + 1.0 / alpha)?, phi_tol)?;
    let value = (-ln_1m(r) - r - r * r * phi.value) / (1.0 - alpha);
    let bound = r * r * phi.tail_bound / (1.0 - alpha);
    Ok(Some(SeriesValue {
        value,
        tail_bound: bound,
        terms_used: phi.terms_used,
    }))
}

/// Σ_{n≥2} n^k rⁿ/(αn² + (1−α)n) in closed form for k = 1, 2, 3.
///
/// For 0 < α < 1 with c = 1/α − 1 and Φ = Φ(r, 1, 1+1/α):
///   k = 1: r²Φ/α
///   k = 2: [r²/(1−r) − c r²Φ]/α
///   k = 3: [r²(2−r)/(1−r)² − c r²/(1−r) + c² r²Φ]/α
/// α = 0 and α = 1 drop to elementary geometric sums.
fn wh0_poly_closed(k: u32, alpha: f64, r: f64, tol: f64) -> Result<Option<SeriesValue>> {
    let u = 1.0 - r;
    let geom0 = r * r / u; // Σ_{n≥2} rⁿ
    let geom1 = r * r * (2.0 - r) / (u * u); // Σ_{n≥2} n rⁿ
    let geom2 = r * (1.0 + r) / (u * u * u) - r; // Σ_{n≥2} n² rⁿ
    if alpha == 0.0 {
        // weight 1/n: Σ n^k rⁿ/n = Σ n^{k−1} rⁿ
        return Ok(Some(SeriesValue::exact(
            match k {
                1 => geom0,
                2 => geom1,
                _ => geom2,
            },
            1,
        )));
    }
    if alpha == 1.0 {
        // weight 1/n²: Σ n^k rⁿ/n² = Σ n^{k−2} rⁿ
        return Ok(Some(match k {
            1 => SeriesValue::exact(wh0_base_alpha0_closed(r)?, 1),
            2 => SeriesValue::exact(geom0, 1),
            _ => SeriesValue::exact(geom1, 1),
        }));
    }
    if alpha > WH0_PARTIAL_FRACTION_MAX_ALPHA {
        return Ok(None);
    }
    let c = 1.0 / alpha - 1.0;
    let scale = r * r * c.powi(k as i32 - 1) / alpha;
    let phi_tol = (tol / (2.0 * scale.abs().max(1e-300))).max(1e-15);
    let phi = lerch_phi(PhiArgs::new(r, 1.0 + 1.0 / alpha)?, phi_tol)?;
    let rr = r * r;
    let value = match k {
        1 => rr * phi.value / alpha,
        2 => (geom0 - c * rr * phi.value) / alpha,
        _ => (geom1 - c * geom0 + c * c * rr * phi.value) / alpha,
    };
    Ok(Some(SeriesValue {
        value,
        tail_bound: scale.abs() * phi.tail_bound,
        terms_used: phi.terms_used,
    }))
}

/// The convergent r = 1 values; all table-relevant divergent combinations
/// are rejected.
fn sum_at_one(spec: &WeightedSumSpec) -> Result<SeriesValue> {
    if spec.family.diverges_at_one() {
        return Err(Error::NonConvergent {
            what: "sum_weighted: series diverges at r = 1 for this family",
            value: 1.0,
        });
    }
    match (spec.family.kind(), spec.weight) {
        (PhiKind::Power, WeightKind::Ph0) => Ok(SeriesValue::exact(1.0, 1)),
        (PhiKind::Power, WeightKind::Wh0 { alpha }) => {
            if alpha == 0.0 {
                Err(Error::NonConvergent {
                    what: "sum_weighted: harmonic tail at r = 1, alpha = 0",
                    value: 1.0,
                })
            } else if (alpha - 1.0).abs() < 1e-12 {
                Ok(SeriesValue::closed_form(PI * PI / 6.0 - 1.0))
            } else {
                // Σ w_n = (ψ(2+c) − ψ(2))/(1−α), c = (1−α)/α
                let c = (1.0 - alpha) / alpha;
                let v = (digamma(2.0 + c)? - digamma(2.0)?) / (1.0 - alpha);
                Ok(SeriesValue::closed_form(v))
            }
        }
        _ => Err(Error::ToleranceUnreachable {
            what: "sum_weighted: no certified evaluation at r = 1 for this family",
            requested: spec.tol,
            achieved: f64::INFINITY,
            terms: 0,
        }),
    }
}

/// Adaptive truncation with a certified geometric-ratio tail bound.
///
/// For n ≥ 2 the term ratio is at most ρ(n) = r·((n+1)/n)^p with p the
/// family's growth exponent, and ρ(n) decreases toward r, so once ρ(n) < 1
/// the tail after t_n is below t_n·ρ/(1−ρ).
fn truncated_sum(spec: &WeightedSumSpec) -> Result<SeriesValue> {
    let p = spec.family.growth_exponent().ok_or_else(|| Error::Parameter {
        what: "sum_weighted",
        detail: "no certified truncation bound for custom families".to_string(),
    })?;
    let r = spec.r;
    let mut sum = 0.0;
    let mut n: u32 = 2;
    loop {
        let t = spec.family.eval(n, r)? * weight_at(spec.weight, n);
        sum += t;
        let rho = r * ((n as f64 + 1.0) / n as f64).powf(p);
        if rho < 1.0 {
            let bound = t * rho / (1.0 - rho);
            if bound <= 0.5 * spec.tol {
                return Ok(SeriesValue {
                    value: sum,
                    tail_bound: bound,
                    terms_used: (n - 1) as usize,
                });
            }
        }
        if n as usize >= SUM_TERM_CAP {
            return Err(Error::ToleranceUnreachable {
                what: "sum_weighted truncation",
                requested: spec.tol,
                achieved: t,
                terms: n as usize,
            });
        }
        n += 1;
    }
}

/// Closed-form pieces of the disk-automorphism extremal with |a₀| = a, whose
/// Taylor coefficients are |a_n| = (1−a²)a^{n−1} for n ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MoebiusPart {
    /// Σ_{n≥2} |a_n| rⁿ = (1−a²)a r²/(1−ar)
    B2,
    /// (1/(1+a) + r/(1−r))·Σ|a_n|²r^{2n} = (1+ar)(1−a²)²r²/((1+a)(1−r)(1−a²r²))
    ATerm,
    /// Σ n|a_n|² r^{2n} = (1−a²)²r²/(1−a²r²)², the normalized image area
    SrOverPi,
    /// SrOverPi/(1 − SrOverPi) = (1−a²)²r²/((1−r²)(1−a⁴r²))
    SrRatio,
}

/// Closed-form value of one part; each agrees with direct coefficient
/// summation to 1e−12 (see the tests).
pub fn moebius_series(a: f64, r: f64, part: MoebiusPart) -> Result<f64> {
    if !(0.0..1.0).contains(&a) {
        return Err(Error::Domain {
            what: "moebius_series: a must lie in [0, 1)",
            value: a,
        });
    }
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain {
            what: "moebius_series: r must lie in [0, 1)",
            value: r,
        });
    }
    let one_m_a2 = 1.0 - a * a;
    let rr = r * r;
    Ok(match part {
        MoebiusPart::B2 => one_m_a2 * a * rr / (1.0 - a * r),
        MoebiusPart::ATerm => {
            (1.0 + a * r) * one_m_a2 * one_m_a2 * rr
                / ((1.0 + a) * (1.0 - r) * (1.0 - a * a * rr))
        }
        MoebiusPart::SrOverPi => {
            let d = 1.0 - a * a * rr;
            one_m_a2 * one_m_a2 * rr / (d * d)
        }
        MoebiusPart::SrRatio => {
            one_m_a2 * one_m_a2 * rr / ((1.0 - rr) * (1.0 - a.powi(4) * rr))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phi::PhiFamily;

    /// Brute-force oracle: Σ_{n≥2} g(n)·rⁿ·w_n summed until the plain
    /// geometric remainder bound g(n+1)/g(n) ≤ ((n+1)/n)^4 is negligible.
    fn brute<F: Fn(f64) -> f64>(g: F, kind: WeightKind, r: f64) -> f64 {
        let mut sum = 0.0;
        let mut n = 2u32;
        loop {
            let t = g(n as f64) * r.powi(n as i32) * weight_at(kind, n);
            sum += t;
            let rho = r * ((n as f64 + 1.0) / n as f64).powi(4);
            if rho < 1.0 && t * rho / (1.0 - rho) < 1e-16 {
                return sum;
            }
            n += 1;
        }
    }

    fn spec(family: PhiFamily, weight: WeightKind, r: f64) -> WeightedSumSpec {
        WeightedSumSpec {
            family,
            weight,
            r,
            tol: 1e-13,
        }
    }

    #[test]
    fn ph0_power_sum_at_half() {
        // Σ rⁿ/(n(n−1)) at r = ½ is ½ + ½·ln ½
        let v = sum_weighted(&spec(PhiFamily::power(), WeightKind::Ph0, 0.5)).unwrap();
        let expect = 0.5 + 0.5 * 0.5f64.ln();
        assert!((v.value - expect).abs() < 1e-14);
        assert!((v.value - 0.153_426_409_720_027_34).abs() < 1e-14);
    }

    #[test]
    fn ph0_poly1_sum_at_half() {
        // Σ n rⁿ/(n(n−1)) = −r ln(1−r)
        let fam = PhiFamily::poly_weight(1.0).unwrap();
        let v = sum_weighted(&spec(fam, WeightKind::Ph0, 0.5)).unwrap();
        assert!((v.value - 0.346_573_590_279_972_65).abs() < 1e-14);
    }

    #[test]
    fn wh0_alpha0_power_sum_at_half() {
        // Σ rⁿ/n over n ≥ 2 = −ln(1−r) − r
        let v = sum_weighted(&spec(
            PhiFamily::power(),
            WeightKind::Wh0 { alpha: 0.0 },
            0.5,
        ))
        .unwrap();
        assert!((v.value - 0.193_147_180_559_945_3).abs() < 1e-14);
    }

    #[test]
    fn all_eight_ph0_closed_forms_match_brute_force() {
        for ir in 1..=9 {
            let r = ir as f64 / 10.0;
            let base = ph0_base_closed(r).unwrap();
            assert!((base - brute(|_| 1.0, WeightKind::Ph0, r)).abs() < 1e-12, "base r={r}");
            let alpha0 = wh0_base_alpha0_closed(r).unwrap();
            assert!(
                (alpha0 - brute(|_| 1.0, WeightKind::Wh0 { alpha: 0.0 }, r)).abs() < 1e-12,
                "alpha0 r={r}"
            );
            for k in 1..=3u32 {
                let npow = closed_form_ph0(WeightVariant::NPow, k, r).unwrap();
                let expect = brute(|n| n.powi(k as i32), WeightKind::Ph0, r);
                assert!((npow - expect).abs() < 1e-12, "n^{k} r={r}: {npow} vs {expect}");
                let shifted = closed_form_ph0(WeightVariant::NPlusOnePow, k, r).unwrap();
                let expect = brute(|n| (n + 1.0).powi(k as i32), WeightKind::Ph0, r);
                assert!((shifted - expect).abs() < 1e-12, "(n+1)^{k} r={r}");
            }
        }
    }

    #[test]
    fn spot_values_for_closed_forms() {
        // k = 2, n^k, r = ½: r(r − (1−r)ln(1−r))/(1−r)
        let v = closed_form_ph0(WeightVariant::NPow, 2, 0.5).unwrap();
        let expect = 0.5 * (0.5 - 0.5 * 0.5f64.ln()) / 0.5;
        assert!((v - expect).abs() < 1e-15);
        // k = 1, (n+1)^k, r = 0 → empty sum
        assert_eq!(closed_form_ph0(WeightVariant::NPlusOnePow, 1, 0.0).unwrap(), 0.0);
        // k = 3, n^k, r = 0.25 against the brute-force oracle
        let v = closed_form_ph0(WeightVariant::NPow, 3, 0.25).unwrap();
        let expect = brute(|n| n * n * n, WeightKind::Ph0, 0.25);
        assert!((v - expect).abs() < 1e-13);
    }

    #[test]
    fn wh0_closed_forms_match_truncation() {
        for &alpha in &[0.3, 0.5, 0.7] {
            for ir in [1, 4, 8] {
                let r = ir as f64 / 10.0;
                let w = WeightKind::Wh0 { alpha };
                let power = sum_weighted(&spec(PhiFamily::power(), w, r)).unwrap();
                assert!((power.value - brute(|_| 1.0, w, r)).abs() < 1e-12);
                for k in 1..=3u32 {
                    let fam = PhiFamily::poly_weight(k as f64).unwrap();
                    let v = sum_weighted(&spec(fam, w, r)).unwrap();
                    let expect = brute(|n| n.powi(k as i32), w, r);
                    assert!(
                        (v.value - expect).abs() < 1e-12,
                        "alpha={alpha} k={k} r={r}: {} vs {expect}",
                        v.value
                    );
                }
            }
        }
    }

    #[test]
    fn closed_forms_agree_with_oracle_on_a_dense_parameter_grid() {
        // 20 weight parameters × 20 radii
        for ia in 0..20 {
            let alpha = ia as f64 / 20.0;
            let w = WeightKind::Wh0 { alpha };
            for ir in 1..=20 {
                let r = 0.93 * ir as f64 / 20.0;
                let v = sum_weighted(&spec(PhiFamily::power(), w, r)).unwrap();
                let expect = brute(|_| 1.0, w, r);
                assert!(
                    (v.value - expect).abs() < 1e-12,
                    "alpha={alpha} r={r}: {} vs {expect}",
                    v.value
                );
            }
        }
    }

    #[test]
    fn wh0_alpha1_paths() {
        let w = WeightKind::Wh0 { alpha: 1.0 };
        let r = 0.6;
        let v = sum_weighted(&spec(PhiFamily::power(), w, r)).unwrap();
        assert!((v.value - brute(|_| 1.0, w, r)).abs() < 1e-12);
        let v = sum_weighted(&spec(PhiFamily::poly_weight(3.0).unwrap(), w, r)).unwrap();
        assert!((v.value - brute(|n| n * n * n, w, r)).abs() < 1e-12);
    }

    #[test]
    fn shift_weights_under_wh0_run_through_truncation() {
        let w = WeightKind::Wh0 { alpha: 0.5 };
        let fam = PhiFamily::shift_weight(2.0).unwrap();
        let v = sum_weighted(&spec(fam, w, 0.5)).unwrap();
        let expect = brute(|n| (n + 1.0) * (n + 1.0), w, 0.5);
        assert!((v.value - expect).abs() <= v.tail_bound + 1e-13);
    }

    #[test]
    fn boundary_constant_ph0_matches_paired_brute_force() {
        // pairs c_k = 2/((2k−1)2k(2k+1)); tail below 1/(2(2K−1)²)
        let mut oracle = 0.0;
        let kmax = 2_000_000u64;
        for k in (1..=kmax).rev() {
            // ascending magnitudes keep the rounding drift at the ulp scale
            let k = k as f64;
            oracle += 2.0 / ((2.0 * k - 1.0) * 2.0 * k * (2.0 * k + 1.0));
        }
        oracle = -oracle; // the n = 2 term is negative: Σ starts (−1)^{n−1} at n = 2
        let v = ph0_alternating_constant();
        assert!((v - oracle).abs() < 1e-12, "{v} vs {oracle}");
        assert!((v + 0.386_294_361_119_890_6).abs() < 1e-15);
    }

    #[test]
    fn boundary_constant_wh0_examples() {
        assert!((wh0_alternating_constant(0.0).unwrap() - (LN_2 - 1.0)).abs() < 1e-15);
        // negative on [0, 1)
        for i in 0..20 {
            let alpha = i as f64 / 20.0;
            assert!(wh0_alternating_constant(alpha).unwrap() < 0.0, "alpha={alpha}");
        }
        // the α → 1⁻ limit exists and equals π²/12 − 1
        let near = wh0_alternating_constant(0.9999).unwrap();
        assert!((near - (PI * PI / 12.0 - 1.0)).abs() < 1e-3, "{near}");
        assert!(wh0_alternating_constant(1.0).is_err());
    }

    #[test]
    fn wh0_distance_bound_values() {
        // α = 0: 2 ln 2 − 1
        assert!((wh0_distance_bound(0.0).unwrap() - (2.0 * LN_2 - 1.0)).abs() < 1e-15);
        assert!(wh0_distance_bound(0.0).unwrap() > 0.0);
        // α = 1 lane: π²/12
        assert!((wh0_distance_bound(1.0).unwrap() - PI * PI / 12.0).abs() < 1e-15);
    }

    #[test]
    fn moebius_parts_match_coefficient_summation() {
        let check = |a: f64, r: f64| {
            let c = |n: u32| {
                if n == 0 {
                    a
                } else {
                    (1.0 - a * a) * a.powi(n as i32 - 1)
                }
            };
            let mut b2 = 0.0;
            let mut norm2 = 0.0;
            let mut area = 0.0;
            for n in 1..600u32 {
                let cn = c(n);
                let rn = r.powi(n as i32);
                if n >= 2 {
                    b2 += cn * rn;
                }
                norm2 += cn * cn * rn * rn;
                area += n as f64 * cn * cn * rn * rn;
            }
            let aterm = (1.0 / (1.0 + a) + r / (1.0 - r)) * norm2;
            assert!((moebius_series(a, r, MoebiusPart::B2).unwrap() - b2).abs() < 1e-12);
            assert!((moebius_series(a, r, MoebiusPart::ATerm).unwrap() - aterm).abs() < 1e-12);
            assert!((moebius_series(a, r, MoebiusPart::SrOverPi).unwrap() - area).abs() < 1e-12);
            let ratio = area / (1.0 - area);
            assert!((moebius_series(a, r, MoebiusPart::SrRatio).unwrap() - ratio).abs() < 1e-12);
        };
        check(0.0, 0.5);
        check(0.5, 0.25);
        check(0.9, 0.6);
    }

    #[test]
    fn moebius_spot_values() {
        // f = z has S_r/π = r²
        assert!((moebius_series(0.0, 0.5, MoebiusPart::SrOverPi).unwrap() - 0.25).abs() < 1e-15);
        // B₂ at (a, r) = (½, ¼): 0.75·0.5·0.0625/0.875
        let expect = 0.75 * 0.5 * 0.0625 / 0.875;
        assert!((moebius_series(0.5, 0.25, MoebiusPart::B2).unwrap() - expect).abs() < 1e-15);
    }

    #[test]
    fn factorization_identity() {
        // (1−a²r²)² − (1−a²)²r² = (1−r²)(1−a⁴r²)
        let mut state: u64 = 42;
        for _ in 0..100 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a = (state >> 11) as f64 / (1u64 << 53) as f64;
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let r = (state >> 11) as f64 / (1u64 << 53) as f64;
            let lhs = (1.0 - a * a * r * r).powi(2) - (1.0 - a * a).powi(2) * r * r;
            let rhs = (1.0 - r * r) * (1.0 - a.powi(4) * r * r);
            assert!((lhs - rhs).abs() < 1e-15 * (1.0 + lhs.abs()));
        }
    }

    #[test]
    fn sum_weighted_is_monotone_in_r() {
        let fam = PhiFamily::poly_weight(2.0).unwrap();
        let mut prev = -1.0;
        for i in 0..=18 {
            let r = i as f64 / 20.0;
            let v = sum_weighted(&spec(fam.clone(), WeightKind::Ph0, r)).unwrap().value;
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn r_equal_one_paths() {
        // convergent: geometric family under both weights
        let v = sum_weighted(&spec(PhiFamily::power(), WeightKind::Ph0, 1.0)).unwrap();
        assert_eq!(v.value, 1.0);
        let v = sum_weighted(&spec(PhiFamily::power(), WeightKind::Wh0 { alpha: 1.0 }, 1.0)).unwrap();
        assert!((v.value - (PI * PI / 6.0 - 1.0)).abs() < 1e-12);
        // ψ-route value for interior α agrees with a long partial sum
        let v = sum_weighted(&spec(PhiFamily::power(), WeightKind::Wh0 { alpha: 0.5 }, 1.0)).unwrap();
        let mut partial = 0.0;
        for n in 2..2_000_000u32 {
            partial += weight_at(WeightKind::Wh0 { alpha: 0.5 }, n);
        }
        assert!((v.value - partial).abs() < 1e-5, "{} vs {partial}", v.value);
        // divergent: harmonic tail and growing weights
        assert!(sum_weighted(&spec(PhiFamily::power(), WeightKind::Wh0 { alpha: 0.0 }, 1.0)).is_err());
        assert!(sum_weighted(&spec(
            PhiFamily::poly_weight(1.0).unwrap(),
            WeightKind::Ph0,
            1.0
        ))
        .is_err());
    }
}
