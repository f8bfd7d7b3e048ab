use serde::{Deserialize, Serialize};

use super::pmf::{stationary_distribution, LatticePmf, SignedMoments};
use crate::error::{ensure, Error, Result};
use crate::numerics::discounted_abs_relaxation;
use crate::params::QueueParams;

/// Largest probability allowed to leak out of the truncated box.
pub const MAX_BOUNDARY_LEAK: f64 = 1e-8;

/// The six moment curves of the chain at one instant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentSnapshot {
    pub t: f64,
    pub m: f64,
    pub s: f64,
    pub m_plus: f64,
    pub m_minus: f64,
    pub s_plus: f64,
    pub s_minus: f64,
    /// Probability lost through the box edges up to `t`.
    pub leaked_mass: f64,
}

impl MomentSnapshot {
    fn new(t: f64, moments: SignedMoments, leaked_mass: f64) -> Self {
        Self {
            t,
            m: moments.m,
            s: moments.s,
            m_plus: moments.m_plus,
            m_minus: moments.m_minus,
            s_plus: moments.s_plus,
            s_minus: moments.s_minus,
            leaked_mass,
        }
    }
}

/// Forward equation of the chain restricted to `[-bound, bound]`.
/// Jumps that would leave the box are dropped.
struct MasterEquation {
    birth: Vec<f64>,
    death: Vec<f64>,
}

impl MasterEquation {
    fn new(params: &QueueParams, bound: usize) -> Self {
        let b = bound as i64;
        let n = 2 * bound + 1;
        let mut birth = vec![0.0; n];
        let mut death = vec![0.0; n];
        for (k, i) in (-b..=b).enumerate() {
            birth[k] = params.alpha + (-i).max(0) as f64 * params.gamma;
            death[k] = params.beta + i.max(0) as f64 * params.theta;
        }
        Self { birth, death }
    }

    fn max_rate(&self) -> f64 {
        self.birth.iter().zip(&self.death).map(|(a, b)| a + b).fold(0.0, f64::max)
    }

    fn derivative(&self, p: &[f64], out: &mut [f64]) {
        let n = p.len();
        for k in 0..n {
            let mut d = -(self.birth[k] + self.death[k]) * p[k];
            if k > 0 {
                d += self.birth[k - 1] * p[k - 1];
            }
            if k + 1 < n {
                d += self.death[k + 1] * p[k + 1];
            }
            out[k] = d;
        }
    }
}

struct Rk4 {
    k1: Vec<f64>,
    k2: Vec<f64>,
    k3: Vec<f64>,
    k4: Vec<f64>,
    tmp: Vec<f64>,
}

impl Rk4 {
    fn new(n: usize) -> Self {
        Self { k1: vec![0.0; n], k2: vec![0.0; n], k3: vec![0.0; n], k4: vec![0.0; n], tmp: vec![0.0; n] }
    }

    fn step(&mut self, eq: &MasterEquation, p: &mut [f64], h: f64) {
        eq.derivative(p, &mut self.k1);
        for (t, (x, k)) in self.tmp.iter_mut().zip(p.iter().zip(&self.k1)) {
            *t = x + 0.5 * h * k;
        }
        eq.derivative(&self.tmp, &mut self.k2);
        for (t, (x, k)) in self.tmp.iter_mut().zip(p.iter().zip(&self.k2)) {
            *t = x + 0.5 * h * k;
        }
        eq.derivative(&self.tmp, &mut self.k3);
        for (t, (x, k)) in self.tmp.iter_mut().zip(p.iter().zip(&self.k3)) {
            *t = x + h * k;
        }
        eq.derivative(&self.tmp, &mut self.k4);
        for (k, x) in p.iter_mut().enumerate() {
            *x += h / 6.0 * (self.k1[k] + 2.0 * self.k2[k] + 2.0 * self.k3[k] + self.k4[k]);
        }
    }
}

/// Box used by [`transient_moments`]: twice the larger of the initial and
/// stationary supports, plus a margin of 20 states.
pub fn transient_support_bound(params: &QueueParams, initial: &LatticePmf) -> Result<usize> {
    let stationary = stationary_distribution(params, 1e-12)?;
    Ok(2 * initial.support_bound().max(stationary.support_bound()) + 20)
}

/// Moment curves of the chain started from `initial`, on an increasing grid
/// of non-negative times.
///
/// Integrates the truncated forward equation with RK4 at step
/// `0.01 / max(α, β, θI, γI)` and fails if more than 1e-8 of the mass leaks
/// through the box edges.
pub fn transient_moments(params: &QueueParams, initial: &LatticePmf, t_grid: &[f64]) -> Result<Vec<MomentSnapshot>> {
    let bound = transient_support_bound(params, initial)?;
    transient_moments_on_box(params, initial, t_grid, bound)
}

/// As [`transient_moments`] with an explicit box half-width.
pub fn transient_moments_on_box(
    params: &QueueParams,
    initial: &LatticePmf,
    t_grid: &[f64],
    bound: usize,
) -> Result<Vec<MomentSnapshot>> {
    params.validate()?;
    ensure((initial.total_mass() - 1.0).abs() < 1e-9, || {
        format!("initial pmf must be normalized, total mass {}", initial.total_mass())
    })?;
    ensure(t_grid.iter().all(|t| t.is_finite() && *t >= 0.0), || "t_grid must be finite and non-negative".into())?;
    ensure(t_grid.windows(2).all(|w| w[0] < w[1]), || "t_grid must be strictly increasing".into())?;
    ensure(bound >= initial.support_bound(), || {
        format!("box half-width {bound} is smaller than the initial support {}", initial.support_bound())
    })?;

    let b = bound as i64;
    let mut p: Vec<f64> = (-b..=b).map(|i| initial.mass(i)).collect();
    let eq = MasterEquation::new(params, bound);
    let largest = params.alpha.max(params.beta).max(params.theta * bound as f64).max(params.gamma * bound as f64);
    let h_max = 0.01 / largest;
    debug_assert!(h_max * eq.max_rate() < 2.5);
    let mut rk = Rk4::new(p.len());

    let mut out = Vec::with_capacity(t_grid.len());
    let mut t = 0.0;
    for &target in t_grid {
        let span = target - t;
        if span > 0.0 {
            let steps = (span / h_max).ceil().max(1.0) as u64;
            let h = span / steps as f64;
            for _ in 0..steps {
                rk.step(&eq, &mut p, h);
            }
            t = target;
        }
        let leaked = 1.0 - p.iter().sum::<f64>();
        if leaked > MAX_BOUNDARY_LEAK {
            return Err(Error::Truncation(format!(
                "{leaked:.3e} of the mass left the box [-{bound}, {bound}] by t = {target}; use a larger box"
            )));
        }
        out.push(MomentSnapshot::new(target, SignedMoments::from_masses(bound, &p), leaked.max(0.0)));
    }
    Ok(out)
}

/// Closed-form mean m(t) when θ = γ.
pub fn equal_rate_mean(params: &QueueParams, m0: f64, t: f64) -> Result<f64> {
    require_equal_rates(params)?;
    let level = params.drift() / params.theta;
    Ok((m0 - level) * (-params.theta * t).exp() + level)
}

fn require_equal_rates(params: &QueueParams) -> Result<()> {
    params.validate()?;
    if params.theta != params.gamma {
        return Err(Error::Unsupported(format!(
            "closed form requires theta == gamma, got theta={}, gamma={}",
            params.theta, params.gamma
        )));
    }
    Ok(())
}

/// s̃(t), a lower bound on the second moment when θ = γ, started from
/// mean `m0` and second moment `s0`.
///
/// Solves s̃' = −2θs̃ + 2(α−β)m + θ|m| + α + β with the closed-form m(t).
pub fn second_moment_lower_bound(params: &QueueParams, m0: f64, s0: f64, t: f64) -> Result<f64> {
    require_equal_rates(params)?;
    ensure(t >= 0.0 && t.is_finite(), || format!("time must be finite and non-negative, got {t}"))?;
    let QueueParams { alpha, beta, theta, .. } = *params;
    let level = (alpha - beta) / theta;
    let offset = m0 - level;
    let e1 = (-theta * t).exp();
    let e2 = (-2.0 * theta * t).exp();
    let constant = 2.0 * (alpha - beta) * level + alpha + beta;
    Ok(s0 * e2
        + constant * (1.0 - e2) / (2.0 * theta)
        + 2.0 * (alpha - beta) * offset * (e1 - e2) / theta
        + theta * discounted_abs_relaxation(theta, level, offset, t))
}

/// lim_{t→∞} s̃(t) = ((α−β)/θ)² + max(α, β)/θ.
pub fn second_moment_lower_bound_limit(params: &QueueParams) -> Result<f64> {
    require_equal_rates(params)?;
    let level = params.drift() / params.theta;
    Ok(level * level + params.alpha.max(params.beta) / params.theta)
}
