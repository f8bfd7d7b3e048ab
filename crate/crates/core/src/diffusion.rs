//! Asymmetric Ornstein–Uhlenbeck approximations: stationary density ψ, its
//! moments, the two fixed-system models, equal-rate closed forms and an
//! Euler–Maruyama simulator.

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};
use crate::fluid::{fluid_closed_form_path, fluid_limit, FluidPath};
use crate::numerics::{
    discounted_abs_relaxation, ln_std_normal_cdf, ln_std_normal_pdf, ln_std_normal_sf, truncated_normal_moments,
    HalfLine, RandomStream,
};
use crate::params::QueueParams;

/// Diffusion coefficient of a piecewise O-U process.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Diffusion {
    Constant { a: f64 },
    /// a(t)² = base_variance + θx⁺(t) + γx⁻(t) along an attached fluid path.
    FluidModulated { base_variance: f64, path: FluidPath },
}

/// dX = (offset − θX⁺ + γX⁻)dt + a(t)dW.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PiecewiseOuParams {
    pub theta: f64,
    pub gamma: f64,
    pub drift_offset: f64,
    pub diffusion: Diffusion,
}

impl PiecewiseOuParams {
    pub fn constant(theta: f64, gamma: f64, drift_offset: f64, a: f64) -> Result<Self> {
        let ou = Self { theta, gamma, drift_offset, diffusion: Diffusion::Constant { a } };
        ou.validate()?;
        Ok(ou)
    }

    pub fn validate(&self) -> Result<()> {
        ensure(self.theta > 0.0 && self.gamma > 0.0, || {
            format!("drift slopes must be positive, got theta={}, gamma={}", self.theta, self.gamma)
        })?;
        ensure(self.drift_offset.is_finite(), || "drift offset must be finite".into())?;
        match &self.diffusion {
            Diffusion::Constant { a } => ensure(*a >= 0.0 && a.is_finite(), || {
                format!("diffusion coefficient must be non-negative, got {a}")
            }),
            Diffusion::FluidModulated { base_variance, path } => {
                ensure(*base_variance >= 0.0 && base_variance.is_finite(), || {
                    format!("base variance must be non-negative, got {base_variance}")
                })?;
                ensure(!path.is_empty(), || "attached fluid path is empty".into())
            }
        }
    }

    /// a(t), read piecewise-constantly from the attached fluid path if any.
    pub fn diffusion_at(&self, t: f64) -> f64 {
        match &self.diffusion {
            Diffusion::Constant { a } => *a,
            Diffusion::FluidModulated { base_variance, path } => {
                let x = path.value_at(t);
                (base_variance + self.theta * x.max(0.0) + self.gamma * (-x).max(0.0)).sqrt()
            }
        }
    }

    fn drift(&self, x: f64) -> f64 {
        self.drift_offset - self.theta * x.max(0.0) + self.gamma * (-x).max(0.0)
    }
}

/// The density ψ(·; κ, μ, σ) gluing two Gaussian pieces at 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PsiDensity {
    pub kappa: f64,
    pub mu: f64,
    pub sigma: f64,
    pub theta: f64,
    pub gamma: f64,
    /// ln C
    pub ln_c: f64,
    /// Mass on [0, ∞).
    pub d1: f64,
    /// Mass on (−∞, 0).
    pub d2: f64,
}

impl PsiDensity {
    pub fn normalizer(&self) -> f64 {
        self.ln_c.exp()
    }

    fn piece(&self, positive: bool) -> (f64, f64) {
        let slope = if positive { self.theta } else { self.gamma };
        (self.mu / slope, self.sigma / (2.0 * slope).sqrt())
    }

    /// Standardized position of 0 within each piece.
    fn origin_scores(&self) -> (f64, f64) {
        let (m1, s1) = self.piece(true);
        let (m2, s2) = self.piece(false);
        (-m1 / s1, -m2 / s2)
    }

    pub fn density(&self, x: f64) -> f64 {
        let (z1, z2) = self.origin_scores();
        if x >= 0.0 {
            let (m, s) = self.piece(true);
            (self.d1.ln() + ln_std_normal_pdf((x - m) / s) - s.ln() - ln_std_normal_sf(z1)).exp()
        } else {
            let (m, s) = self.piece(false);
            (self.d2.ln() + ln_std_normal_pdf((x - m) / s) - s.ln() - ln_std_normal_cdf(z2)).exp()
        }
    }

    pub fn cdf(&self, x: f64) -> f64 {
        let (z1, z2) = self.origin_scores();
        if x < 0.0 {
            let (m, s) = self.piece(false);
            self.d2 * (ln_std_normal_cdf((x - m) / s) - ln_std_normal_cdf(z2)).exp()
        } else {
            let (m, s) = self.piece(true);
            let upper = (ln_std_normal_sf((x - m) / s) - ln_std_normal_sf(z1)).exp();
            self.d2 + self.d1 * (1.0 - upper)
        }
    }

    /// Probability of the interval [lo, hi).
    pub fn interval_mass(&self, lo: f64, hi: f64) -> f64 {
        (self.cdf(hi) - self.cdf(lo)).max(0.0)
    }
}

fn log_add(a: f64, b: f64) -> f64 {
    let m = a.max(b);
    m + ((a - m).exp() + (b - m).exp()).ln()
}

/// Builds ψ(·; κ, μ, σ) for drift slopes θ on [0, ∞) and γ on (−∞, 0).
pub fn psi_density(kappa: f64, mu: f64, sigma: f64, theta: f64, gamma: f64) -> Result<PsiDensity> {
    ensure(sigma > 0.0 && sigma.is_finite(), || format!("sigma must be positive, got {sigma}"))?;
    ensure(theta > 0.0 && gamma > 0.0, || format!("theta and gamma must be positive, got {theta}, {gamma}"))?;
    ensure(kappa.is_finite() && mu.is_finite(), || "kappa and mu must be finite".into())?;
    let z1 = -(mu / sigma) * (2.0 / theta).sqrt();
    let z2 = -(mu / sigma) * (2.0 / gamma).sqrt();
    let w1 = -0.5 * theta.ln() + kappa / theta + ln_std_normal_sf(z1);
    let w2 = -0.5 * gamma.ln() + kappa / gamma + ln_std_normal_cdf(z2);
    let ln_total = log_add(w1, w2);
    if !ln_total.is_finite() {
        return Err(Error::Overflow(format!("normalizer of psi at kappa={kappa}, mu={mu}, sigma={sigma}")));
    }
    Ok(PsiDensity {
        kappa,
        mu,
        sigma,
        theta,
        gamma,
        ln_c: -ln_total,
        d1: (w1 - ln_total).exp(),
        d2: (w2 - ln_total).exp(),
    })
}

/// First two moments of ψ(·; μ²/σ², μ, σ) and its two piece weights.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PsiMoments {
    pub ev: f64,
    pub ev2: f64,
    pub d1: f64,
    pub d2: f64,
}

/// Moments of the stationary law of dX = (μ − θX⁺ + γX⁻)dt + σdW.
pub fn psi_moments(mu: f64, sigma: f64, theta: f64, gamma: f64) -> Result<PsiMoments> {
    let psi = psi_density(mu * mu / (sigma * sigma), mu, sigma, theta, gamma)?;
    let (d1, d2) = (psi.d1, psi.d2);
    if theta == gamma {
        let ev = mu / theta;
        return Ok(PsiMoments { ev, ev2: ev * ev + sigma * sigma / (2.0 * theta), d1, d2 });
    }
    let (e1, e1_sq) = truncated_normal_moments(mu / theta, sigma * sigma / (2.0 * theta), HalfLine::PositiveHalf)?;
    let (e2, e2_sq) = truncated_normal_moments(mu / gamma, sigma * sigma / (2.0 * gamma), HalfLine::NegativeHalf)?;
    Ok(PsiMoments { ev: d1 * e1 + d2 * e2, ev2: d1 * e1_sq + d2 * e2_sq, d1, d2 })
}

/// Constant-coefficient model: offset α−β, a = √(α³σ² + β³ς²).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelOne {
    pub ou: PiecewiseOuParams,
    pub l1: f64,
    pub l2: f64,
}

pub fn model_one(params: &QueueParams) -> Result<ModelOne> {
    params.validate()?;
    let a = params.arrival_variability().sqrt();
    let ou = PiecewiseOuParams::constant(params.theta, params.gamma, params.drift(), a)?;
    let m = psi_moments(params.drift(), a, params.theta, params.gamma)?;
    Ok(ModelOne { ou, l1: m.ev, l2: m.ev2 })
}

/// Fluid-centered model: mean from the fluid fixed point, spread from the
/// centered diffusion with b² = a² + |α−β|.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelTwo {
    pub b: f64,
    pub l1: f64,
    pub l2: f64,
}

pub fn model_two(params: &QueueParams) -> Result<ModelTwo> {
    params.validate()?;
    let b = (params.arrival_variability() + params.drift().abs()).sqrt();
    let l1 = fluid_limit(params)?;
    let centered = psi_moments(0.0, b, params.theta, params.gamma)?;
    Ok(ModelTwo { b, l1, l2: l1 * l1 + centered.ev2 })
}

/// The centered diffusion of the fluid-centered model, with a(t) driven by
/// the fluid path from `fluid_x0` sampled every `step` up to `horizon`.
pub fn centered_process(params: &QueueParams, fluid_x0: f64, step: f64, horizon: f64) -> Result<PiecewiseOuParams> {
    params.validate()?;
    ensure(step > 0.0 && horizon > 0.0, || "step and horizon must be positive".into())?;
    let n = (horizon / step).ceil() as usize;
    let grid: Vec<f64> = (0..=n).map(|k| (k as f64 * step).min(horizon)).collect();
    let path = fluid_closed_form_path(params, fluid_x0, &grid)?;
    let ou = PiecewiseOuParams {
        theta: params.theta,
        gamma: params.gamma,
        drift_offset: 0.0,
        diffusion: Diffusion::FluidModulated { base_variance: params.arrival_variability(), path },
    };
    ou.validate()?;
    Ok(ou)
}

/// Initial first and second moments for the equal-rate closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OuInitial {
    pub z_mean: f64,
    pub z_second: f64,
    pub x_mean: f64,
    pub x_second: f64,
    /// Starting point of the fluid path that modulates Z's noise.
    pub fluid_x0: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OuMoments {
    pub z_mean: f64,
    pub z_second: f64,
    pub x_mean: f64,
    pub x_second: f64,
}

/// E Z(t), E Z(t)², E X̂(t), E X̂(t)² when θ = γ, with heavy-traffic offset `c`.
pub fn ou_closed_form_moments(params: &QueueParams, initial: OuInitial, c: f64, t: f64) -> Result<OuMoments> {
    params.validate()?;
    if params.theta != params.gamma {
        return Err(Error::Unsupported(format!(
            "closed-form O-U moments need theta == gamma, got {} and {}",
            params.theta, params.gamma
        )));
    }
    ensure(t >= 0.0 && t.is_finite(), || format!("time must be finite and non-negative, got {t}"))?;
    let theta = params.theta;
    let a2 = params.arrival_variability();
    let e1 = (-theta * t).exp();
    let e2 = (-2.0 * theta * t).exp();

    let level = params.drift() / theta;
    let z_mean = initial.z_mean * e1;
    let z_second = initial.z_second * e2
        + a2 * (1.0 - e2) / (2.0 * theta)
        + theta * discounted_abs_relaxation(theta, level, initial.fluid_x0 - level, t);

    let centre = c / theta;
    let gap = initial.x_mean - centre;
    let stationary_var = a2 / (2.0 * theta);
    let x_mean = gap * e1 + centre;
    let x_second = (initial.x_second - 2.0 * centre * gap - centre * centre - stationary_var) * e2
        + 2.0 * centre * gap * e1
        + centre * centre
        + stationary_var;
    Ok(OuMoments { z_mean, z_second, x_mean, x_second })
}

/// An Euler–Maruyama trajectory on a uniform grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SdePath {
    pub step: f64,
    pub x: Vec<f64>,
}

impl SdePath {
    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.x.len()).map(move |k| k as f64 * self.step)
    }
}

fn check_step(ou: &PiecewiseOuParams, step: f64) -> Result<()> {
    ou.validate()?;
    let cap = 0.01 / ou.theta.max(ou.gamma);
    ensure(step > 0.0 && step <= cap * (1.0 + 1e-12), || format!("step must lie in (0, {cap}], got {step}"))
}

fn em_step(ou: &PiecewiseOuParams, x: f64, t: f64, step: f64, sqrt_step: f64, stream: &mut RandomStream) -> f64 {
    x + ou.drift(x) * step + ou.diffusion_at(t) * sqrt_step * stream.standard_normal()
}

/// Euler–Maruyama path with drift and diffusion frozen at the left endpoint.
pub fn simulate_sde_path(
    ou: &PiecewiseOuParams,
    x0: f64,
    step: f64,
    horizon: f64,
    stream: &mut RandomStream,
) -> Result<SdePath> {
    check_step(ou, step)?;
    ensure(horizon > 0.0 && horizon.is_finite(), || format!("horizon must be positive, got {horizon}"))?;
    let n = (horizon / step).round() as usize;
    let sqrt_step = step.sqrt();
    let mut x = Vec::with_capacity(n + 1);
    x.push(x0);
    let mut cur = x0;
    for k in 0..n {
        cur = em_step(ou, cur, k as f64 * step, step, sqrt_step, stream);
        x.push(cur);
    }
    Ok(SdePath { step, x })
}

/// Runs the Euler–Maruyama chain for `burn_in` time units, then records
/// `count` states spaced `spacing` time units apart.
pub fn sample_thinned(
    ou: &PiecewiseOuParams,
    x0: f64,
    step: f64,
    burn_in: f64,
    spacing: f64,
    count: usize,
    stream: &mut RandomStream,
) -> Result<Vec<f64>> {
    check_step(ou, step)?;
    ensure(burn_in >= 0.0 && spacing >= step, || "burn_in must be non-negative and spacing at least one step".into())?;
    let sqrt_step = step.sqrt();
    let burn_steps = (burn_in / step).round() as u64;
    let gap_steps = ((spacing / step).round() as u64).max(1);
    let mut k = 0u64;
    let mut cur = x0;
    let mut advance = |cur: &mut f64, steps: u64, stream: &mut RandomStream| {
        for _ in 0..steps {
            *cur = em_step(ou, *cur, k as f64 * step, step, sqrt_step, stream);
            k += 1;
        }
    };
    advance(&mut cur, burn_steps, stream);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        advance(&mut cur, gap_steps, stream);
        out.push(cur);
    }
    Ok(out)
}
