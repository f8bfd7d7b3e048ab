//! Event-driven simulation of the double-ended queue with renewal arrivals
//! and per-customer exponential patience, plus the replication protocol.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{ensure, Result};
use crate::numerics::{sample_exponential, Family, InterarrivalModel, RandomStream};
use crate::poisson::LatticePmf;

/// z-score of a two-sided 90% normal interval.
pub const Z_90: f64 = 1.645;

pub const DEFAULT_HISTOGRAM_BOUND: usize = 1000;

/// One simulation experiment, replicated `replications` times.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub seller_model: InterarrivalModel,
    pub buyer_model: InterarrivalModel,
    pub theta: f64,
    pub gamma: f64,
    #[serde(default)]
    pub initial_state: i64,
    pub horizon: f64,
    pub warmup: f64,
    pub replications: u32,
    #[serde(default = "default_histogram_bound")]
    pub histogram_bound: usize,
}

fn default_histogram_bound() -> usize {
    DEFAULT_HISTOGRAM_BOUND
}

impl Scenario {
    /// A scenario with both sides drawn from the same family.
    pub fn new(family: Family, alpha: f64, beta: f64, theta: f64, gamma: f64, budget: Budget) -> Result<Self> {
        let s = Self {
            seller_model: InterarrivalModel::new(family, alpha)?,
            buyer_model: InterarrivalModel::new(family, beta)?,
            theta,
            gamma,
            initial_state: 0,
            horizon: budget.horizon,
            warmup: budget.warmup,
            replications: budget.replications,
            histogram_bound: DEFAULT_HISTOGRAM_BOUND,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        InterarrivalModel::new(self.seller_model.family, self.seller_model.rate)?;
        InterarrivalModel::new(self.buyer_model.family, self.buyer_model.rate)?;
        ensure(self.theta > 0.0 && self.gamma > 0.0, || {
            format!("patience rates must be positive, got theta={}, gamma={}", self.theta, self.gamma)
        })?;
        ensure(self.warmup >= 0.0 && self.warmup < self.horizon && self.horizon.is_finite(), || {
            format!("need 0 <= warmup < horizon, got warmup={}, horizon={}", self.warmup, self.horizon)
        })?;
        ensure(self.replications >= 1, || "at least one replication is required".into())?;
        ensure(self.histogram_bound >= 1, || "histogram bound must be positive".into())
    }

    pub fn budget(&self) -> Budget {
        Budget { replications: self.replications, warmup: self.warmup, horizon: self.horizon }
    }
}

/// Replication count N, warm-up τ and horizon T.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    pub replications: u32,
    pub warmup: f64,
    pub horizon: f64,
}

impl Budget {
    /// (50, 250, 1000)
    pub const DESK: Budget = Budget { replications: 50, warmup: 250.0, horizon: 1000.0 };
    /// (400, 1000, 4000)
    pub const PAPER: Budget = Budget { replications: 400, warmup: 1000.0, horizon: 4000.0 };
}

#[derive(Debug, Clone, Copy)]
struct Waiting {
    id: u64,
    alive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Deadline {
    at: f64,
    id: u64,
}

impl Eq for Deadline {}

impl Ord for Deadline {
    fn cmp(&self, other: &Self) -> Ordering {
        self.at.total_cmp(&other.at).then(self.id.cmp(&other.id))
    }
}

impl PartialOrd for Deadline {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// What happened at an event epoch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EventKind {
    SellerArrival,
    BuyerArrival,
    Abandonment,
}

/// A single sample path. Waiting customers sit in one FCFS line (sellers
/// when the state is positive, buyers when negative); each owns an
/// exponential patience deadline.
#[derive(Debug, Clone)]
pub struct Replication<'a> {
    scenario: &'a Scenario,
    stream: RandomStream,
    now: f64,
    state: i64,
    next_seller: f64,
    next_buyer: f64,
    line: VecDeque<Waiting>,
    deadlines: BinaryHeap<Reverse<Deadline>>,
    next_id: u64,
}

impl<'a> Replication<'a> {
    /// Starts at `initial_state` with fresh residual interarrival times.
    pub fn new(scenario: &'a Scenario, mut stream: RandomStream) -> Self {
        let next_seller = scenario.seller_model.sample(&mut stream);
        let next_buyer = scenario.buyer_model.sample(&mut stream);
        let mut rep = Self {
            scenario,
            stream,
            now: 0.0,
            state: 0,
            next_seller,
            next_buyer,
            line: VecDeque::new(),
            deadlines: BinaryHeap::new(),
            next_id: 0,
        };
        let k = scenario.initial_state;
        for _ in 0..k.unsigned_abs() {
            rep.enqueue(k > 0);
        }
        rep.state = k;
        rep
    }

    pub fn now(&self) -> f64 {
        self.now
    }

    /// Waiting sellers (positive) or buyers (negative).
    pub fn state(&self) -> i64 {
        self.state
    }

    /// Number of customers still waiting in the line.
    pub fn waiting(&self) -> usize {
        self.line.iter().filter(|w| w.alive).count()
    }

    fn enqueue(&mut self, seller: bool) {
        let rate = if seller { self.scenario.theta } else { self.scenario.gamma };
        let id = self.next_id;
        self.next_id += 1;
        let at = self.now + sample_exponential(rate, &mut self.stream);
        self.line.push_back(Waiting { id, alive: true });
        self.deadlines.push(Reverse(Deadline { at, id }));
    }

    fn serve_front(&mut self) {
        while let Some(w) = self.line.pop_front() {
            if w.alive {
                return;
            }
        }
        unreachable!("state and waiting line out of sync");
    }

    fn drop_dead_front(&mut self) {
        while matches!(self.line.front(), Some(w) if !w.alive) {
            self.line.pop_front();
        }
    }

    /// Earliest deadline of a customer still waiting.
    fn next_deadline(&mut self) -> Option<Deadline> {
        while let Some(Reverse(d)) = self.deadlines.peek().copied() {
            match self.line.binary_search_by_key(&d.id, |w| w.id) {
                Ok(pos) if self.line[pos].alive => return Some(d),
                _ => {
                    self.deadlines.pop();
                }
            }
        }
        None
    }

    fn arrival(&mut self, seller: bool) {
        let joins_own_side = if seller { self.state >= 0 } else { self.state <= 0 };
        if joins_own_side {
            self.enqueue(seller);
        } else {
            self.serve_front();
        }
        self.state += if seller { 1 } else { -1 };
    }

    /// Time of the next event.
    pub fn peek_time(&mut self) -> f64 {
        let d = self.next_deadline().map_or(f64::INFINITY, |d| d.at);
        self.next_seller.min(self.next_buyer).min(d)
    }

    /// Advances to the next event; ties go to arrivals, sellers first.
    pub fn step(&mut self) -> EventKind {
        let deadline = self.next_deadline();
        let d_at = deadline.map_or(f64::INFINITY, |d| d.at);
        if self.next_seller <= self.next_buyer && self.next_seller <= d_at {
            self.now = self.next_seller;
            self.arrival(true);
            self.next_seller = self.now + self.scenario.seller_model.sample(&mut self.stream);
            EventKind::SellerArrival
        } else if self.next_buyer <= d_at {
            self.now = self.next_buyer;
            self.arrival(false);
            self.next_buyer = self.now + self.scenario.buyer_model.sample(&mut self.stream);
            EventKind::BuyerArrival
        } else {
            let d = deadline.expect("finite deadline");
            self.now = d.at;
            self.deadlines.pop();
            let pos = self.line.binary_search_by_key(&d.id, |w| w.id).expect("deadline of a waiting customer");
            self.line[pos].alive = false;
            self.drop_dead_front();
            self.state -= self.state.signum();
            EventKind::Abandonment
        }
    }
}

/// Time-average occupancy of one replication over [τ, T].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OccupancyHistogram {
    pub bound: usize,
    /// Fractions of [τ, T] spent in states −bound..=bound.
    pub fractions: Vec<f64>,
    pub overflow_below: f64,
    pub overflow_above: f64,
    pub events: u64,
}

impl OccupancyHistogram {
    pub fn total(&self) -> f64 {
        self.fractions.iter().sum::<f64>() + self.overflow_below + self.overflow_above
    }

    fn moments(&self) -> (f64, f64) {
        lattice_moments(self.bound, &self.fractions)
    }
}

/// (Σ i·p_i, Σ i²·p_i) over states −bound..=bound.
fn lattice_moments(bound: usize, masses: &[f64]) -> (f64, f64) {
    let b = bound as f64;
    masses.iter().enumerate().fold((0.0, 0.0), |(m, s), (k, &p)| {
        let i = k as f64 - b;
        (m + i * p, s + i * i * p)
    })
}

/// Simulates one path and returns its occupancy fractions over [τ, T].
pub fn run_replication(scenario: &Scenario, stream: RandomStream) -> Result<OccupancyHistogram> {
    scenario.validate()?;
    Ok(occupancy(scenario, stream))
}

fn occupancy(scenario: &Scenario, stream: RandomStream) -> OccupancyHistogram {
    let bound = scenario.histogram_bound;
    let mut time_in = vec![0.0; 2 * bound + 1];
    let (mut below, mut above) = (0.0, 0.0);
    let (tau, horizon) = (scenario.warmup, scenario.horizon);
    let mut rep = Replication::new(scenario, stream);
    let mut events = 0u64;
    let mut record = |state: i64, from: f64, to: f64| {
        let lo = from.max(tau);
        let hi = to.min(horizon);
        if hi > lo {
            let dt = hi - lo;
            if state < -(bound as i64) {
                below += dt;
            } else if state > bound as i64 {
                above += dt;
            } else {
                time_in[(state + bound as i64) as usize] += dt;
            }
        }
    };
    loop {
        let t_next = rep.peek_time();
        let state = rep.state();
        if t_next >= horizon {
            record(state, rep.now(), horizon);
            break;
        }
        record(state, rep.now(), t_next);
        rep.step();
        events += 1;
    }
    let span = horizon - tau;
    for v in &mut time_in {
        *v /= span;
    }
    OccupancyHistogram { bound, fractions: time_in, overflow_below: below / span, overflow_above: above / span, events }
}

/// Cross-replication estimates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationEstimate {
    pub histogram_bound: usize,
    /// π_i^s for i in −bound..=bound.
    pub pmf: Vec<f64>,
    pub overflow_mass: f64,
    pub l1: f64,
    pub l2: f64,
    /// 90% half-widths; absent with a single replication.
    pub ci_halfwidth_l1: Option<f64>,
    pub ci_halfwidth_l2: Option<f64>,
    pub replication_count: u32,
    pub seed: u64,
    pub events: u64,
}

impl SimulationEstimate {
    pub fn mass(&self, state: i64) -> f64 {
        let idx = state + self.histogram_bound as i64;
        if idx < 0 {
            return 0.0;
        }
        self.pmf.get(idx as usize).copied().unwrap_or(0.0)
    }

    /// The histogram as a lattice pmf; mass outside the box is reported as
    /// its tail bound.
    pub fn to_pmf(&self) -> LatticePmf {
        LatticePmf::from_parts(self.histogram_bound, self.pmf.clone(), self.overflow_mass)
    }
}

fn half_width(values: &[f64]) -> Option<f64> {
    let n = values.len();
    if n < 2 {
        return None;
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1) as f64;
    Some(Z_90 * var.sqrt() / (n as f64).sqrt())
}

fn combine(histograms: &[OccupancyHistogram], seed: u64) -> SimulationEstimate {
    let n = histograms.len();
    let bound = histograms[0].bound;
    let mut pmf = vec![0.0; 2 * bound + 1];
    let mut overflow = 0.0;
    let mut events = 0;
    for h in histograms {
        for (acc, p) in pmf.iter_mut().zip(&h.fractions) {
            *acc += p;
        }
        overflow += h.overflow_below + h.overflow_above;
        events += h.events;
    }
    for p in &mut pmf {
        *p /= n as f64;
    }
    let (l1, l2) = lattice_moments(bound, &pmf);
    let per_rep: Vec<(f64, f64)> = histograms.iter().map(|h| h.moments()).collect();
    let l1s: Vec<f64> = per_rep.iter().map(|m| m.0).collect();
    let l2s: Vec<f64> = per_rep.iter().map(|m| m.1).collect();
    SimulationEstimate {
        histogram_bound: bound,
        pmf,
        overflow_mass: overflow / n as f64,
        l1,
        l2,
        ci_halfwidth_l1: half_width(&l1s),
        ci_halfwidth_l2: half_width(&l2s),
        replication_count: n as u32,
        seed,
        events,
    }
}

/// Runs all replications (replication k uses stream k of `base_seed`) and
/// merges them in replication order.
pub fn estimate(scenario: &Scenario, base_seed: u64) -> Result<SimulationEstimate> {
    scenario.validate()?;
    let histograms: Vec<OccupancyHistogram> = (0..scenario.replications as u64)
        .into_par_iter()
        .map(|k| occupancy(scenario, RandomStream::new(base_seed, k)))
        .collect();
    Ok(combine(&histograms, base_seed))
}

/// Pre-limit system of the heavy-traffic sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeavyTrafficTemplate {
    pub family: Family,
    pub alpha: f64,
    pub beta: f64,
    pub c: f64,
    pub theta: f64,
    pub gamma: f64,
    /// Budget in diffusion time units t (real time n·t).
    pub budget: Budget,
}

/// Distribution of X^n(n t)/√n over [τ, T] on the lattice spacing 1/√n.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaledHistogram {
    pub n: u32,
    pub spacing: f64,
    /// Masses of the points i·spacing; index i + bound.
    pub estimate: SimulationEstimate,
    pub mean: f64,
    pub variance: f64,
}

impl ScaledHistogram {
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        let b = self.estimate.histogram_bound as i64;
        self.estimate.pmf.iter().enumerate().map(move |(k, &p)| ((k as i64 - b) as f64 * self.spacing, p))
    }
}

/// Simulates the n-th pre-limit system (αⁿ = α + c/2√n, βⁿ = β − c/2√n,
/// θⁿ = θ/n, γⁿ = γ/n) and records the diffusion-scaled occupancy.
pub fn scaled_stationary_histogram(template: &HeavyTrafficTemplate, n: u32, base_seed: u64) -> Result<ScaledHistogram> {
    ensure(n >= 1, || "scaling index must be at least 1".into())?;
    let root = (n as f64).sqrt();
    let nf = n as f64;
    let alpha_n = template.alpha + template.c / (2.0 * root);
    let beta_n = template.beta - template.c / (2.0 * root);
    ensure(alpha_n > 0.0 && beta_n > 0.0, || {
        format!("pre-limit arrival rates must stay positive at n={n}, got {alpha_n}, {beta_n}")
    })?;
    // enough room for ±12 diffusion-scale units
    let bound = ((12.0 * root).ceil() as usize).max(50) * 2;
    let scenario = Scenario {
        seller_model: InterarrivalModel::new(template.family, alpha_n)?,
        buyer_model: InterarrivalModel::new(template.family, beta_n)?,
        theta: template.theta / nf,
        gamma: template.gamma / nf,
        initial_state: 0,
        horizon: template.budget.horizon * nf,
        warmup: template.budget.warmup * nf,
        replications: template.budget.replications,
        histogram_bound: bound,
    };
    let estimate = estimate(&scenario, base_seed)?;
    let spacing = 1.0 / root;
    let mean = estimate.l1 * spacing;
    let variance = estimate.l2 * spacing * spacing - mean * mean;
    Ok(ScaledHistogram { n, spacing, estimate, mean, variance })
}
