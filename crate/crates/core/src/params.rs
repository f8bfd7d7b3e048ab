use serde::{Deserialize, Serialize};

use crate::error::{ensure, Result};
use crate::numerics::{InterarrivalModel, SdConvention};

/// Arrival and abandonment parameters of a double-ended queue.
///
/// `alpha`/`beta` are the seller/buyer arrival rates, `sigma`/`varsigma`
/// the standard deviations of their interarrival times, and
/// `theta`/`gamma` the seller/buyer patience (reneging) rates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QueueParams {
    pub alpha: f64,
    pub beta: f64,
    pub sigma: f64,
    pub varsigma: f64,
    pub theta: f64,
    pub gamma: f64,
}

impl QueueParams {
    pub fn new(alpha: f64, beta: f64, sigma: f64, varsigma: f64, theta: f64, gamma: f64) -> Result<Self> {
        let params = Self { alpha, beta, sigma, varsigma, theta, gamma };
        params.validate()?;
        Ok(params)
    }

    /// Poisson arrivals: interarrival standard deviation equals the mean.
    pub fn poisson(alpha: f64, beta: f64, theta: f64, gamma: f64) -> Result<Self> {
        ensure(alpha > 0.0 && beta > 0.0, || {
            format!("arrival rates must be positive, got alpha={alpha}, beta={beta}")
        })?;
        Self::new(alpha, beta, 1.0 / alpha, 1.0 / beta, theta, gamma)
    }

    /// Parameters induced by two renewal laws under a chosen sd convention.
    pub fn from_models(
        sellers: &InterarrivalModel,
        buyers: &InterarrivalModel,
        theta: f64,
        gamma: f64,
        convention: SdConvention,
    ) -> Result<Self> {
        Self::new(
            sellers.rate,
            buyers.rate,
            sellers.sd_with(convention),
            buyers.sd_with(convention),
            theta,
            gamma,
        )
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            ensure(v > 0.0 && v.is_finite(), || format!("{name} must be positive and finite, got {v}"))
        };
        positive("alpha", self.alpha)?;
        positive("beta", self.beta)?;
        positive("theta", self.theta)?;
        positive("gamma", self.gamma)?;
        ensure(self.sigma >= 0.0 && self.sigma.is_finite(), || {
            format!("sigma must be non-negative, got {}", self.sigma)
        })?;
        ensure(self.varsigma >= 0.0 && self.varsigma.is_finite(), || {
            format!("varsigma must be non-negative, got {}", self.varsigma)
        })
    }

    /// α³σ² + β³ς², the squared diffusion coefficient of the arrival noise.
    pub fn arrival_variability(&self) -> f64 {
        self.alpha.powi(3) * self.sigma * self.sigma + self.beta.powi(3) * self.varsigma * self.varsigma
    }

    pub fn drift(&self) -> f64 {
        self.alpha - self.beta
    }
}
