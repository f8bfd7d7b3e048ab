use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};
use crate::params::QueueParams;

/// Hard cap on the truncation bound of a stationary pmf.
pub const MAX_SUPPORT_BOUND: usize = 1_000_000;

/// A probability mass function on the integer box `[-bound, bound]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticePmf {
    support_bound: usize,
    masses: Vec<f64>,
    tail_mass_bound: f64,
    /// Upper bounds on π_{k+1}/π_k beyond the box, (negative side, positive side).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    edge_ratios: Option<(f64, f64)>,
}

/// The stationary law of the Poisson-arrival chain.
pub type StationaryPmf = LatticePmf;

/// First two moments of a lattice law split by sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignedMoments {
    pub m: f64,
    pub s: f64,
    pub m_plus: f64,
    pub m_minus: f64,
    pub s_plus: f64,
    pub s_minus: f64,
}

impl SignedMoments {
    pub(crate) fn from_masses(bound: usize, masses: &[f64]) -> Self {
        let mut out = SignedMoments { m: 0.0, s: 0.0, m_plus: 0.0, m_minus: 0.0, s_plus: 0.0, s_minus: 0.0 };
        for (idx, &p) in masses.iter().enumerate() {
            let i = idx as f64 - bound as f64;
            if i > 0.0 {
                out.m_plus += i * p;
                out.s_plus += i * i * p;
            } else if i < 0.0 {
                out.m_minus -= i * p;
                out.s_minus += i * i * p;
            }
        }
        out.m = out.m_plus - out.m_minus;
        out.s = out.s_plus + out.s_minus;
        out
    }
}

impl LatticePmf {
    /// Builds a pmf from masses listed for states `-bound..=bound`.
    pub fn from_masses(bound: usize, masses: Vec<f64>) -> Result<Self> {
        ensure(masses.len() == 2 * bound + 1, || {
            format!("expected {} masses for bound {bound}, got {}", 2 * bound + 1, masses.len())
        })?;
        ensure(masses.iter().all(|p| *p >= 0.0 && p.is_finite()), || {
            "masses must be finite and non-negative".into()
        })?;
        let total: f64 = masses.iter().sum();
        ensure((total - 1.0).abs() < 1e-9, || format!("masses sum to {total}, expected 1"))?;
        Ok(Self { support_bound: bound, masses, tail_mass_bound: 0.0, edge_ratios: None })
    }

    /// All mass on one state.
    pub fn point_mass(state: i64, bound: usize) -> Result<Self> {
        ensure(state.unsigned_abs() as usize <= bound, || {
            format!("state {state} lies outside the box of bound {bound}")
        })?;
        let mut masses = vec![0.0; 2 * bound + 1];
        masses[(state + bound as i64) as usize] = 1.0;
        Ok(Self { support_bound: bound, masses, tail_mass_bound: 0.0, edge_ratios: None })
    }

    /// Wraps masses that may sum to less than one (the remainder lies
    /// outside the box).
    pub(crate) fn from_parts(bound: usize, masses: Vec<f64>, tail_mass_bound: f64) -> Self {
        debug_assert_eq!(masses.len(), 2 * bound + 1);
        Self { support_bound: bound, masses, tail_mass_bound, edge_ratios: None }
    }

    pub fn support_bound(&self) -> usize {
        self.support_bound
    }

    /// Upper bound on the probability that falls outside the box.
    pub fn tail_mass_bound(&self) -> f64 {
        self.tail_mass_bound
    }

    /// Masses for states `-bound..=bound` in order.
    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn mass(&self, state: i64) -> f64 {
        let idx = state + self.support_bound as i64;
        if idx < 0 {
            return 0.0;
        }
        self.masses.get(idx as usize).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let b = self.support_bound as i64;
        self.masses.iter().enumerate().map(move |(k, &p)| (k as i64 - b, p))
    }

    pub fn total_mass(&self) -> f64 {
        self.masses.iter().sum()
    }

    pub fn moments(&self) -> SignedMoments {
        SignedMoments::from_masses(self.support_bound, &self.masses)
    }

    pub fn mean(&self) -> f64 {
        self.moments().m
    }

    pub fn second_moment(&self) -> f64 {
        self.moments().s
    }

    pub(crate) fn edge_ratios(&self) -> Option<(f64, f64)> {
        self.edge_ratios
    }
}

/// Total variation distance between two lattice laws (half the ℓ¹ distance).
pub fn total_variation(a: &LatticePmf, b: &LatticePmf) -> f64 {
    let bound = a.support_bound().max(b.support_bound()) as i64;
    0.5 * (-bound..=bound).map(|i| (a.mass(i) - b.mass(i)).abs()).sum::<f64>()
}

fn log_sum_exp(values: impl Iterator<Item = f64> + Clone) -> f64 {
    let max = values.clone().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + values.map(|v| (v - max).exp()).sum::<f64>().ln()
}

/// Stationary distribution of the birth–death chain with birth rates
/// α + i⁻γ and death rates β + i⁺θ.
///
/// Products are accumulated as log-sums. The box grows by doubling until
/// the edge ratio drops below 1/2 on both sides and the geometric tail
/// bound falls below `tail_tol`.
pub fn stationary_distribution(params: &QueueParams, tail_tol: f64) -> Result<StationaryPmf> {
    params.validate()?;
    ensure(tail_tol > 0.0 && tail_tol <= 1e-3, || {
        format!("tail_tol must lie in (0, 1e-3], got {tail_tol}")
    })?;
    let QueueParams { alpha, beta, theta, gamma, .. } = *params;

    // ln(π_i / π_0) for i ≥ 0 and ln(π_{-i} / π_0) for i ≥ 0.
    let mut pos = vec![0.0f64];
    let mut neg = vec![0.0f64];
    let mut bound = 16usize;
    loop {
        while pos.len() <= bound {
            let j = pos.len() as f64;
            let next = pos[pos.len() - 1] + alpha.ln() - (beta + j * theta).ln();
            pos.push(next);
            let next = neg[neg.len() - 1] + beta.ln() - (alpha + j * gamma).ln();
            neg.push(next);
        }
        let edge = (bound + 1) as f64;
        let r_pos = alpha / (beta + edge * theta);
        let r_neg = beta / (alpha + edge * gamma);
        let at_edge_pos = alpha / (beta + bound as f64 * theta);
        let at_edge_neg = beta / (alpha + bound as f64 * gamma);

        let logs = neg[1..=bound].iter().rev().chain(pos[..=bound].iter()).copied();
        let ln_total = log_sum_exp(logs);
        let tail = |ln_edge: f64, r: f64| (ln_edge - ln_total + (r / (1.0 - r)).ln()).exp();
        let tail_bound = tail(pos[bound], r_pos) + tail(neg[bound], r_neg);

        if at_edge_pos < 0.5 && at_edge_neg < 0.5 && tail_bound < tail_tol {
            let masses: Vec<f64> = neg[1..=bound]
                .iter()
                .rev()
                .chain(pos[..=bound].iter())
                .map(|l| (l - ln_total).exp())
                .collect();
            return Ok(LatticePmf {
                support_bound: bound,
                masses,
                tail_mass_bound: tail_bound,
                edge_ratios: Some((r_neg, r_pos)),
            });
        }
        if bound >= MAX_SUPPORT_BOUND {
            return Err(Error::Resource(format!(
                "tail tolerance {tail_tol} not reached within support bound {MAX_SUPPORT_BOUND}"
            )));
        }
        bound = (bound * 2).min(MAX_SUPPORT_BOUND);
    }
}

/// Result of a truncated expectation: the sum over the box and a bound on
/// what the neglected tail can contribute.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Expectation {
    pub value: f64,
    pub truncation_bound: f64,
}

/// Σ f(i)·π_i over the box of `pmf`.
///
/// For stationary pmfs the tail beyond the box is dominated by a geometric
/// sequence with the edge ratio, which yields `truncation_bound`.
pub fn limiting_expectation<F: Fn(i64) -> f64>(f: F, pmf: &LatticePmf) -> Expectation {
    let value = pmf.iter().map(|(i, p)| if p == 0.0 { 0.0 } else { f(i) * p }).sum();
    let truncation_bound = match pmf.edge_ratios() {
        None => 0.0,
        Some((r_neg, r_pos)) => {
            let b = pmf.support_bound() as i64;
            let side = |edge_mass: f64, r: f64, sign: i64| {
                let mut acc = 0.0;
                let mut weight = edge_mass;
                for k in 1..=100_000i64 {
                    weight *= r;
                    let term = weight * f(sign * (b + k)).abs();
                    acc += term;
                    if weight < 1e-300 || (k > 10 && term < 1e-18 * acc.max(f64::MIN_POSITIVE)) {
                        break;
                    }
                }
                acc
            };
            side(pmf.mass(b), r_pos, 1) + side(pmf.mass(-b), r_neg, -1)
        }
    };
    Expectation { value, truncation_bound }
}
