//! Gaussian kernels and half-line truncated normal moments.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Beyond this point erfc loses relative accuracy; switch to the asymptotic tail.
const ASYMPTOTIC_TAIL: f64 = 35.0;

fn check_variance(variance: f64) -> Result<()> {
    ensure(variance > 0.0 && variance.is_finite(), || {
        format!("normal kernel requires a positive finite variance, got {variance}")
    })
}

/// Density of N(mean, variance) at `x`.
pub fn normal_pdf(x: f64, mean: f64, variance: f64) -> Result<f64> {
    check_variance(variance)?;
    let z = (x - mean) / variance.sqrt();
    Ok(std_normal_pdf(z) / variance.sqrt())
}

/// Distribution function of N(mean, variance) at `x`.
pub fn normal_cdf(x: f64, mean: f64, variance: f64) -> Result<f64> {
    check_variance(variance)?;
    Ok(std_normal_cdf((x - mean) / variance.sqrt()))
}

pub fn std_normal_pdf(z: f64) -> f64 {
    (-0.5 * z * z - LN_SQRT_2PI).exp()
}

pub fn ln_std_normal_pdf(z: f64) -> f64 {
    -0.5 * z * z - LN_SQRT_2PI
}

/// Φ(z), computed from erfc so both tails keep relative accuracy.
pub fn std_normal_cdf(z: f64) -> f64 {
    0.5 * libm::erfc(-z * FRAC_1_SQRT_2)
}

/// 1 - Φ(z) without cancellation.
pub fn std_normal_sf(z: f64) -> f64 {
    0.5 * libm::erfc(z * FRAC_1_SQRT_2)
}

/// ln(1 - Φ(z)), finite for every finite z.
pub fn ln_std_normal_sf(z: f64) -> f64 {
    if z < ASYMPTOTIC_TAIL {
        return std_normal_sf(z).ln();
    }
    // Mills ratio expansion: 1 - Φ(z) = φ(z)/z · (1 - 1/z² + 3/z⁴ - 15/z⁶ + …)
    let w = 1.0 / (z * z);
    let series = 1.0 - w * (1.0 - 3.0 * w * (1.0 - 5.0 * w * (1.0 - 7.0 * w)));
    ln_std_normal_pdf(z) - z.ln() + series.ln()
}

/// ln Φ(z), finite for every finite z.
pub fn ln_std_normal_cdf(z: f64) -> f64 {
    ln_std_normal_sf(-z)
}

/// φ(z) / (1 - Φ(z)), the inverse Mills ratio for a lower truncation at z.
pub fn inverse_mills(z: f64) -> f64 {
    (ln_std_normal_pdf(z) - ln_std_normal_sf(z)).exp()
}

/// Which half-line a normal variable is restricted to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HalfLine {
    /// (0, ∞)
    PositiveHalf,
    /// (-∞, 0)
    NegativeHalf,
}

/// First and second moments of N(mean, variance) conditioned on a half-line.
pub fn truncated_normal_moments(mean: f64, variance: f64, side: HalfLine) -> Result<(f64, f64)> {
    check_variance(variance)?;
    let sd = variance.sqrt();
    match side {
        HalfLine::PositiveHalf => {
            let lambda = inverse_mills(-mean / sd);
            let first = mean + sd * lambda;
            let second = mean * mean + variance + mean * sd * lambda;
            Ok((first, second))
        }
        HalfLine::NegativeHalf => {
            // mirror of the positive half for -X ~ N(-mean, variance)
            let lambda = inverse_mills(mean / sd);
            let first = mean - sd * lambda;
            let second = mean * mean + variance - mean * sd * lambda;
            Ok((first, second))
        }
    }
}
