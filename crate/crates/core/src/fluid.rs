//! Fluid limit x' = (α−β) − θx⁺ + γx⁻: closed form, RK4 oracle and fixed point.

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Result};
use crate::params::QueueParams;

/// Substeps used when an RK4 step straddles the kink at x = 0.
/// A sampled fluid trajectory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FluidPath {
    pub t_grid: Vec<f64>,
    pub x: Vec<f64>,
    /// Time at which the path crosses zero, if it does.
    pub hitting_time: Option<f64>,
}

impl FluidPath {
    /// Piecewise-constant (left endpoint) reading of the path at time `t`.
    pub fn value_at(&self, t: f64) -> f64 {
        match self.t_grid.partition_point(|&s| s <= t) {
            0 => self.x[0],
            k => self.x[k - 1],
        }
    }

    pub fn len(&self) -> usize {
        self.t_grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t_grid.is_empty()
    }
}

fn rhs(params: &QueueParams, x: f64) -> f64 {
    params.drift() - params.theta * x.max(0.0) + params.gamma * (-x).max(0.0)
}

/// Time at which the fluid path started at `x0` reaches 0, when it has to
/// cross from the side opposite to the fixed point.
pub fn hitting_time(params: &QueueParams, x0: f64) -> Result<Option<f64>> {
    params.validate()?;
    let QueueParams { alpha, beta, theta, gamma, .. } = *params;
    let t = if alpha > beta && x0 < 0.0 {
        Some(((alpha - beta - gamma * x0) / (alpha - beta)).ln() / gamma)
    } else if alpha < beta && x0 > 0.0 {
        Some(((theta * x0 - (alpha - beta)) / (beta - alpha)).ln() / theta)
    } else {
        None
    };
    Ok(t)
}

/// The fluid path at time `t`, from the piecewise-exponential solution.
pub fn fluid_closed_form(params: &QueueParams, x0: f64, t: f64) -> Result<f64> {
    ensure(t >= 0.0, || format!("time must be non-negative, got {t}"))?;
    let QueueParams { theta, gamma, .. } = *params;
    let drift = params.drift();
    let relax = |start: f64, rate: f64, s: f64| {
        let level = drift / rate;
        (start - level) * (-rate * s).exp() + level
    };
    let value = match hitting_time(params, x0)? {
        None => {
            if x0 > 0.0 || (x0 == 0.0 && drift >= 0.0) {
                relax(x0, theta, t)
            } else {
                relax(x0, gamma, t)
            }
        }
        Some(hit) => {
            // before the hit the path relaxes on the starting side, after it
            // restarts from 0 on the other side
            let (before, after) = if x0 < 0.0 { (gamma, theta) } else { (theta, gamma) };
            if t < hit {
                relax(x0, before, t)
            } else {
                relax(0.0, after, t - hit)
            }
        }
    };
    Ok(value)
}

/// Closed-form path sampled on `t_grid`.
pub fn fluid_closed_form_path(params: &QueueParams, x0: f64, t_grid: &[f64]) -> Result<FluidPath> {
    let x = t_grid.iter().map(|&t| fluid_closed_form(params, x0, t)).collect::<Result<Vec<_>>>()?;
    Ok(FluidPath { t_grid: t_grid.to_vec(), x, hitting_time: hitting_time(params, x0)? })
}

fn rk4_with(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    let k1 = f(x);
    let k2 = f(x + 0.5 * h * k1);
    let k3 = f(x + 0.5 * h * k2);
    let k4 = f(x + h * k3);
    x + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
}

fn rk4_step(params: &QueueParams, x: f64, h: f64) -> f64 {
    rk4_with(|y| rhs(params, y), x, h)
}

/// The linear right-hand side of the half-line that contains `x`,
/// extended across 0.
fn side_rhs(params: &QueueParams, x: f64) -> impl Fn(f64) -> f64 {
    let slope = if x > 0.0 { params.theta } else { params.gamma };
    let drift = params.drift();
    move |y| drift - slope * y
}

/// Splits a step of length `h` from `x` that crosses 0: returns the time
/// to reach 0 (bisection on an RK4 step of the starting side's dynamics)
/// and the state after the remaining time on the other side.
fn cross_zero(params: &QueueParams, x: f64, h: f64) -> (f64, f64) {
    let here = side_rhs(params, x);
    let (mut lo, mut hi) = (0.0, h);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if rk4_with(&here, x, mid).signum() == x.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * h {
            break;
        }
    }
    let tau = 0.5 * (lo + hi);
    let there = side_rhs(params, -x);
    (tau, rk4_with(there, 0.0, h - tau))
}

/// Integrates the fluid equation with classical RK4.
///
/// The right-hand side has a kink at 0: a step whose trial update changes
/// sign is split at the crossing, located by bisection.
pub fn fluid_integrate(params: &QueueParams, x0: f64, step: f64, horizon: f64) -> Result<FluidPath> {
    params.validate()?;
    let step_cap = 0.01 / params.theta.max(params.gamma);
    ensure(step > 0.0 && step <= step_cap * (1.0 + 1e-12), || {
        format!("step must lie in (0, {step_cap}], got {step}")
    })?;
    ensure(horizon > 0.0 && horizon.is_finite(), || format!("horizon must be positive, got {horizon}"))?;
    ensure(x0.is_finite(), || format!("x0 must be finite, got {x0}"))?;

    let steps = (horizon / step).ceil() as usize;
    let mut t_grid = Vec::with_capacity(steps + 1);
    let mut x = Vec::with_capacity(steps + 1);
    t_grid.push(0.0);
    x.push(x0);
    let mut hit = None;
    let mut cur = x0;
    for k in 1..=steps {
        let t_prev = (k - 1) as f64 * step;
        let t_next = (k as f64 * step).min(horizon);
        let h = t_next - t_prev;
        let trial = rk4_step(params, cur, h);
        let next = if cur != 0.0 && trial.signum() != cur.signum() {
            let (tau, after) = cross_zero(params, cur, h);
            if hit.is_none() {
                hit = Some(t_prev + tau);
            }
            after
        } else {
            trial
        };
        cur = next;
        t_grid.push(t_next);
        x.push(cur);
    }
    Ok(FluidPath { t_grid, x, hitting_time: hit })
}

/// Stable point: (α−β)/θ when α ≥ β, else (α−β)/γ.
pub fn fluid_limit(params: &QueueParams) -> Result<f64> {
    params.validate()?;
    let drift = params.drift();
    Ok(if drift >= 0.0 { drift / params.theta } else { drift / params.gamma })
}
