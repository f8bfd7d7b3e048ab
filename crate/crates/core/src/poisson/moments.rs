use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fluid::fluid_limit;
use crate::numerics::ln_lower_incomplete_gamma;
use crate::params::QueueParams;

/// Limiting quantities of the Poisson-arrival chain in incomplete-gamma form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaMomentSummary {
    /// Σ_{i≥1} π_i / π_0
    pub p1: f64,
    /// Σ_{i≥1} π_{-i} / π_0
    pub p2: f64,
    pub pi0: f64,
    pub m_plus: f64,
    pub m_minus: f64,
    pub s_plus: f64,
    pub s_minus: f64,
}

impl GammaMomentSummary {
    pub fn first_moment(&self) -> f64 {
        self.m_plus - self.m_minus
    }

    pub fn second_moment(&self) -> f64 {
        self.s_plus + self.s_minus
    }
}

/// ln(1 + Σ_{i≥1} x^i / ∏_{j≤i}(a + j)) = ln a + x − a ln x + ln γ(a, x).
fn ln_one_plus_ratio_sum(arrival: f64, base: f64, slope: f64) -> Result<f64> {
    let a = base / slope;
    let x = arrival / slope;
    let ln_value = a.ln() + x - a * x.ln() + ln_lower_incomplete_gamma(a, x)?;
    if !ln_value.is_finite() {
        return Err(Error::Overflow(format!("incomplete gamma ratio at shape {a}, argument {x}")));
    }
    Ok(ln_value)
}

fn ratio_sum(arrival: f64, base: f64, slope: f64, name: &str) -> Result<f64> {
    let ln_value = ln_one_plus_ratio_sum(arrival, base, slope)?;
    let p = ln_value.exp_m1();
    if !p.is_finite() {
        return Err(Error::Overflow(format!(
            "{name} = exp({ln_value:.3}) - 1 exceeds the double range (ratio {arrival}/{slope})"
        )));
    }
    // guards against a tiny negative value from rounding when x ≪ 1
    Ok(p.max(0.0))
}

/// p1, p2, π0 and the four signed limiting moments of the Poisson chain.
pub fn gamma_moment_summary(params: &QueueParams) -> Result<GammaMomentSummary> {
    params.validate()?;
    let QueueParams { alpha, beta, theta, gamma, .. } = *params;
    let p1 = ratio_sum(alpha, beta, theta, "p1")?;
    let p2 = ratio_sum(beta, alpha, gamma, "p2")?;
    let pi0 = 1.0 / (1.0 + p1 + p2);
    let m_plus = ((alpha - beta) / theta * p1 + alpha / theta) * pi0;
    let m_minus = ((beta - alpha) / gamma * p2 + beta / gamma) * pi0;
    let s_plus = (alpha - beta) / theta * m_plus + alpha / theta * (p1 + 1.0) * pi0;
    let s_minus = (beta - alpha) / gamma * m_minus + beta / gamma * (p2 + 1.0) * pi0;
    Ok(GammaMomentSummary { p1, p2, pi0, m_plus, m_minus, s_plus, s_minus })
}

/// Poisson approximations (L₁ᵖ, L₂ᵖ) of the first two limiting moments.
pub fn poisson_moment_estimates(params: &QueueParams) -> Result<(f64, f64)> {
    let s = gamma_moment_summary(params)?;
    Ok((s.first_moment(), s.second_moment()))
}

/// Large-patience-time approximations of the limiting moments.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticMoments {
    pub mean_approx: f64,
    pub second_approx: f64,
    pub variance_approx: f64,
}

/// Mean from the fluid fixed point, variance max(α, β)/θ.
pub fn asymptotic_moment_approximations(params: &QueueParams) -> Result<AsymptoticMoments> {
    params.validate()?;
    let mean_approx = fluid_limit(params)?;
    let variance_approx = params.alpha.max(params.beta) / params.theta;
    let level = params.drift() / params.theta;
    Ok(AsymptoticMoments { mean_approx, second_approx: level * level + variance_approx, variance_approx })
}
