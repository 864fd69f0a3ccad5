//! Shared numeric constants, each derived from exact expressions rather than
//! typed decimals.

use std::f64::consts::{LN_2, PI};

/// √17, the surd underlying the refined-inequality radius and its sharp weight.
#[inline]
pub fn sqrt_17() -> f64 {
    f64::sqrt(17.0)
}

/// (√17 − 3)/4 ≈ 0.280776, the radius of the refined inequality that carries
/// |f(z)|, |f′(z)|r, the degree-two majorant tail, and the area-ratio term.
#[inline]
pub fn refined_radius() -> f64 {
    (sqrt_17() - 3.0) / 4.0
}

/// λ = (221 − 43√17)/64 ≈ 0.682913, the sharp weight of the S_r/(π − S_r)
/// term at the radius [`refined_radius`].
#[inline]
pub fn lambda_sharp() -> f64 {
    (221.0 - 43.0 * sqrt_17()) / 64.0
}

/// ln 4 = 2 ln 2.
#[inline]
pub fn ln_4() -> f64 {
    2.0 * LN_2
}

/// sup of the admissible M range, 1/(2(ln 4 − 1)) ≈ 1.29435, valid for every
/// weight family with φ_n(0) = 0 for n ≥ 2.
#[inline]
pub fn m_supremum() -> f64 {
    1.0 / (2.0 * (ln_4() - 1.0))
}

/// π²/12 = Σ_{n≥1} (−1)^{n−1}/n², the boundary constant of the pure-n²
/// weight lane (alpha = 1).
#[inline]
pub fn pi_sq_over_12() -> f64 {
    PI * PI / 12.0
}

// Reference radii from the classical theory. They are documented values used
// in docs and sanity tests; none of them is solved for at runtime.

/// Classical Bohr radius 1/3 for majorant series of disk self-maps.
pub const CLASSICAL_BOHR_RADIUS: f64 = 1.0 / 3.0;

/// Rogosinski radius 1/2 for partial sums of disk self-maps.
pub const ROGOSINSKI_RADIUS: f64 = 0.5;

/// 3 − √8 ≈ 0.17157, the subordination-class radius, kept as a reference
/// constant only.
#[inline]
pub fn subordination_radius() -> f64 {
    3.0 - f64::sqrt(8.0)
}

/// √5 − 2 ≈ 0.236068, lower bound for the refined radius with the
/// |f(z)| + B_1 + A(f_0, r) functional.
#[inline]
pub fn sqrt5_minus_2() -> f64 {
    f64::sqrt(5.0) - 2.0
}
