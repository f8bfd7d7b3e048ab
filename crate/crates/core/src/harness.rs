//! Table reproduction: runs the analytic engines and the simulator over a
//! grid of scenarios and writes comparison tables and density grids.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::des::{estimate, Budget, Scenario, SimulationEstimate};
use crate::diffusion::{model_one, model_two, psi_density, psi_moments, PsiDensity};
use crate::error::{Error, Result};
use crate::numerics::{Family, InterarrivalModel, SdConvention};
use crate::params::QueueParams;
use crate::poisson::{poisson_moment_estimates, stationary_distribution};

/// Simulation budget selector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BudgetChoice {
    Desk,
    Paper,
    Custom(Budget),
}

impl BudgetChoice {
    pub fn resolve(&self) -> Budget {
        match self {
            BudgetChoice::Desk => Budget::DESK,
            BudgetChoice::Paper => Budget::PAPER,
            BudgetChoice::Custom(b) => *b,
        }
    }
}

impl std::str::FromStr for BudgetChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "desk" => Ok(BudgetChoice::Desk),
            "paper" => Ok(BudgetChoice::Paper),
            other => Err(Error::Config(format!("unknown budget '{other}'; valid: desk, paper"))),
        }
    }
}

/// One scenario: family and (α, β, θ, γ).
pub type Cell = (Family, f64, f64, f64, f64);

/// Axes of a comparison run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComparisonConfig {
    #[serde(default = "default_distributions")]
    pub distributions: Vec<String>,
    #[serde(default = "default_rate_pairs")]
    pub rate_pairs: Vec<(f64, f64)>,
    /// θ = m·α and γ = m·β for each multiplier m.
    #[serde(default = "default_multipliers")]
    pub reneging_multipliers: Vec<f64>,
    #[serde(default = "default_budget")]
    pub budget: BudgetChoice,
    #[serde(default)]
    pub sd_convention: SdConvention,
    #[serde(default)]
    pub initial_state: i64,
    #[serde(default = "default_histogram_bound")]
    pub histogram_bound: usize,
    #[serde(default)]
    pub seed: u64,
}

fn default_distributions() -> Vec<String> {
    Family::reference_set().iter().map(|f| f.label()).collect()
}

fn default_rate_pairs() -> Vec<(f64, f64)> {
    vec![(1.0, 1.0), (1.0, 1.5), (1.0, 2.0)]
}

fn default_multipliers() -> Vec<f64> {
    vec![1.0, 0.1, 0.01]
}

fn default_budget() -> BudgetChoice {
    BudgetChoice::Desk
}

fn default_histogram_bound() -> usize {
    crate::des::DEFAULT_HISTOGRAM_BOUND
}

impl Default for ComparisonConfig {
    fn default() -> Self {
        Self {
            distributions: default_distributions(),
            rate_pairs: default_rate_pairs(),
            reneging_multipliers: default_multipliers(),
            budget: default_budget(),
            sd_convention: SdConvention::default(),
            initial_state: 0,
            histogram_bound: default_histogram_bound(),
            seed: 0,
        }
    }
}

impl ComparisonConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: Self = serde_json::from_str(text).map_err(|e| Error::Config(format!("invalid config: {e}")))?;
        config.families()?;
        Ok(config)
    }

    pub fn families(&self) -> Result<Vec<Family>> {
        if self.distributions.is_empty() {
            return Err(Error::Config("config lists no distributions".into()));
        }
        self.distributions.iter().map(|d| d.parse()).collect()
    }

    /// Every (family, α, β, θ, γ) cell in deterministic order.
    pub fn cells(&self) -> Result<Vec<Cell>> {
        let families = self.families()?;
        let mut cells = Vec::new();
        for family in families {
            for &(alpha, beta) in &self.rate_pairs {
                for &m in &self.reneging_multipliers {
                    if !(alpha > 0.0 && beta > 0.0 && m > 0.0) {
                        return Err(Error::Config(format!(
                            "rates and multipliers must be positive, got ({alpha}, {beta}) x {m}"
                        )));
                    }
                    cells.push((family, alpha, beta, m * alpha, m * beta));
                }
            }
        }
        Ok(cells)
    }
}

/// Analytic columns of one cell; independent of the simulation budget.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnalyticColumns {
    pub l1_p: f64,
    pub l2_p: f64,
    pub l1_d1: f64,
    pub l2_d1: f64,
    pub l1_d2: f64,
    pub l2_d2: f64,
}

/// Poisson and both diffusion approximations for one cell.
pub fn analytic_columns(
    family: Family,
    alpha: f64,
    beta: f64,
    theta: f64,
    gamma: f64,
    convention: SdConvention,
) -> Result<AnalyticColumns> {
    let (l1_p, l2_p) = poisson_moment_estimates(&QueueParams::poisson(alpha, beta, theta, gamma)?)?;
    let params = QueueParams::from_models(
        &InterarrivalModel::new(family, alpha)?,
        &InterarrivalModel::new(family, beta)?,
        theta,
        gamma,
        convention,
    )?;
    let one = model_one(&params)?;
    let two = model_two(&params)?;
    Ok(AnalyticColumns { l1_p, l2_p, l1_d1: one.l1, l2_d1: one.l2, l1_d2: two.l1, l2_d2: two.l2 })
}

/// |analytic − simulated| / |simulated| in percent; undefined when the
/// simulated interval covers zero.
pub fn relative_error(analytic: f64, simulated: f64, ci_halfwidth: Option<f64>) -> Option<f64> {
    let covers_zero = simulated == 0.0 || ci_halfwidth.is_some_and(|h| simulated.abs() <= h);
    if covers_zero {
        None
    } else {
        Some((analytic - simulated).abs() / simulated.abs() * 100.0)
    }
}

/// One line of the comparison table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub dist: String,
    pub alpha: f64,
    pub beta: f64,
    pub theta: f64,
    pub gamma: f64,
    #[serde(rename = "L1_s")]
    pub l1_s: f64,
    #[serde(rename = "L1_s_ci")]
    pub l1_s_ci: Option<f64>,
    #[serde(rename = "L1_p")]
    pub l1_p: f64,
    #[serde(rename = "L1_p_err")]
    pub l1_p_err: Option<f64>,
    #[serde(rename = "L1_d1")]
    pub l1_d1: f64,
    #[serde(rename = "L1_d1_err")]
    pub l1_d1_err: Option<f64>,
    #[serde(rename = "L1_d2")]
    pub l1_d2: f64,
    #[serde(rename = "L1_d2_err")]
    pub l1_d2_err: Option<f64>,
    #[serde(rename = "L2_s")]
    pub l2_s: f64,
    #[serde(rename = "L2_s_ci")]
    pub l2_s_ci: Option<f64>,
    #[serde(rename = "L2_p")]
    pub l2_p: f64,
    #[serde(rename = "L2_p_err")]
    pub l2_p_err: Option<f64>,
    #[serde(rename = "L2_d1")]
    pub l2_d1: f64,
    #[serde(rename = "L2_d1_err")]
    pub l2_d1_err: Option<f64>,
    #[serde(rename = "L2_d2")]
    pub l2_d2: f64,
    #[serde(rename = "L2_d2_err")]
    pub l2_d2_err: Option<f64>,
}

pub const CSV_COLUMNS: [&str; 21] = [
    "dist", "alpha", "beta", "theta", "gamma", "L1_s", "L1_s_ci", "L1_p", "L1_p_err", "L1_d1", "L1_d1_err", "L1_d2",
    "L1_d2_err", "L2_s", "L2_s_ci", "L2_p", "L2_p_err", "L2_d1", "L2_d1_err", "L2_d2", "L2_d2_err",
];

impl ComparisonRow {
    pub fn new(family: Family, params: (f64, f64, f64, f64), analytic: AnalyticColumns, sim: &SimulationEstimate) -> Self {
        let (alpha, beta, theta, gamma) = params;
        let e1 = |v| relative_error(v, sim.l1, sim.ci_halfwidth_l1);
        let e2 = |v| relative_error(v, sim.l2, sim.ci_halfwidth_l2);
        Self {
            dist: family.label(),
            alpha,
            beta,
            theta,
            gamma,
            l1_s: sim.l1,
            l1_s_ci: sim.ci_halfwidth_l1,
            l1_p: analytic.l1_p,
            l1_p_err: e1(analytic.l1_p),
            l1_d1: analytic.l1_d1,
            l1_d1_err: e1(analytic.l1_d1),
            l1_d2: analytic.l1_d2,
            l1_d2_err: e1(analytic.l1_d2),
            l2_s: sim.l2,
            l2_s_ci: sim.ci_halfwidth_l2,
            l2_p: analytic.l2_p,
            l2_p_err: e2(analytic.l2_p),
            l2_d1: analytic.l2_d1,
            l2_d1_err: e2(analytic.l2_d1),
            l2_d2: analytic.l2_d2,
            l2_d2_err: e2(analytic.l2_d2),
        }
    }

    fn csv_fields(&self) -> Vec<String> {
        let num = |v: f64| format!("{v}");
        let opt = |v: Option<f64>| v.map_or_else(|| "NA".to_string(), num);
        vec![
            self.dist.clone(),
            num(self.alpha),
            num(self.beta),
            num(self.theta),
            num(self.gamma),
            num(self.l1_s),
            opt(self.l1_s_ci),
            num(self.l1_p),
            opt(self.l1_p_err),
            num(self.l1_d1),
            opt(self.l1_d1_err),
            num(self.l1_d2),
            opt(self.l1_d2_err),
            num(self.l2_s),
            opt(self.l2_s_ci),
            num(self.l2_p),
            opt(self.l2_p_err),
            num(self.l2_d1),
            opt(self.l2_d1_err),
            num(self.l2_d2),
            opt(self.l2_d2_err),
        ]
    }
}

/// A finished comparison: rows plus the simulations behind them.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub rows: Vec<ComparisonRow>,
    pub cells: Vec<(Family, QueueParams, SimulationEstimate)>,
}

/// Evaluates every cell of `config`; cells run one after another, each
/// simulation parallel over its replications.
pub fn run_comparison(config: &ComparisonConfig) -> Result<Comparison> {
    let budget = config.budget.resolve();
    let mut rows = Vec::new();
    let mut cells = Vec::new();
    for (family, alpha, beta, theta, gamma) in config.cells()? {
        let analytic = analytic_columns(family, alpha, beta, theta, gamma, config.sd_convention)?;
        let mut scenario = Scenario::new(family, alpha, beta, theta, gamma, budget)?;
        scenario.initial_state = config.initial_state;
        scenario.histogram_bound = config.histogram_bound;
        let sim = estimate(&scenario, config.seed)?;
        rows.push(ComparisonRow::new(family, (alpha, beta, theta, gamma), analytic, &sim));
        let params = QueueParams::from_models(
            &scenario.seller_model,
            &scenario.buyer_model,
            theta,
            gamma,
            config.sd_convention,
        )?;
        cells.push((family, params, sim));
    }
    Ok(Comparison { rows, cells })
}

pub fn rows_to_csv(rows: &[ComparisonRow]) -> String {
    let mut out = CSV_COLUMNS.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_fields().join(","));
        out.push('\n');
    }
    out
}

pub fn rows_to_json(rows: &[ComparisonRow]) -> Result<String> {
    serde_json::to_string_pretty(rows).map_err(|e| Error::Resource(format!("serializing rows: {e}")))
}

/// Evaluation grid `lo:hi:points`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityGrid {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

pub const DEFAULT_GRID_POINTS: usize = 1024;

impl DensityGrid {
    pub fn new(lo: f64, hi: f64, points: usize) -> Result<Self> {
        if !(lo < hi && lo.is_finite() && hi.is_finite() && points >= 2) {
            return Err(Error::Config(format!("invalid grid {lo}:{hi}:{points}")));
        }
        Ok(Self { lo, hi, points })
    }

    /// mean ± 6 sd with the default point count.
    pub fn around(mean: f64, sd: f64) -> Result<Self> {
        Self::new(mean - 6.0 * sd, mean + 6.0 * sd, DEFAULT_GRID_POINTS)
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        let h = (self.hi - self.lo) / (self.points - 1) as f64;
        (0..self.points).map(move |k| if k + 1 == self.points { self.hi } else { self.lo + k as f64 * h })
    }
}

impl std::str::FromStr for DensityGrid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Config(format!("grid must look like lo:hi:n, got '{s}'"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let lo = parts[0].trim().parse().map_err(|_| bad())?;
        let hi = parts[1].trim().parse().map_err(|_| bad())?;
        let n = parts[2].trim().parse().map_err(|_| bad())?;
        Self::new(lo, hi, n)
    }
}

/// Stationary density of the constant-coefficient model for `params`.
pub fn model_one_density(params: &QueueParams) -> Result<PsiDensity> {
    let mu = params.drift();
    let a = params.arrival_variability().sqrt();
    psi_density(mu * mu / (a * a), mu, a, params.theta, params.gamma)
}

/// Default grid for `params`: the Model I mean ± 6 sd.
pub fn default_grid(params: &QueueParams) -> Result<DensityGrid> {
    let m = psi_moments(params.drift(), params.arrival_variability().sqrt(), params.theta, params.gamma)?;
    DensityGrid::around(m.ev, (m.ev2 - m.ev * m.ev).max(0.0).sqrt())
}

/// Density overlays: ψ, the Poisson pmf and (optionally) the simulated pmf.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityComparison {
    /// (x, ψ(x), Poisson, simulated) with pmfs linearly interpolated between
    /// integer states (lattice spacing 1).
    pub grid: Vec<(f64, f64, f64, Option<f64>)>,
    /// (i, ψ mass of [i − ½, i + ½), π_i^p, π_i^s).
    pub lattice: Vec<(i64, f64, f64, Option<f64>)>,
}

fn interpolate(mass: impl Fn(i64) -> f64, x: f64) -> f64 {
    let lo = x.floor();
    let w = x - lo;
    let i = lo as i64;
    (1.0 - w) * mass(i) + w * mass(i + 1)
}

/// Tabulates ψ, the exact Poisson pmf and a simulated pmf on `grid` and
/// on the integer lattice it spans.
pub fn export_density_comparison(
    params: &QueueParams,
    sim: Option<&SimulationEstimate>,
    grid: DensityGrid,
) -> Result<DensityComparison> {
    let psi = model_one_density(params)?;
    let poisson = stationary_distribution(&QueueParams::poisson(params.alpha, params.beta, params.theta, params.gamma)?, 1e-12)?;
    let pois_mass = |i: i64| poisson.mass(i);
    let rows = grid
        .values()
        .map(|x| (x, psi.density(x), interpolate(pois_mass, x), sim.map(|s| interpolate(|i| s.mass(i), x))))
        .collect();
    let lattice = (grid.lo.floor() as i64..=grid.hi.ceil() as i64)
        .map(|i| {
            let x = i as f64;
            (i, psi.interval_mass(x - 0.5, x + 0.5), poisson.mass(i), sim.map(|s| s.mass(i)))
        })
        .collect();
    Ok(DensityComparison { grid: rows, lattice })
}

impl DensityComparison {
    pub fn grid_csv(&self) -> String {
        let mut out = String::from("x,psi,poisson,simulated\n");
        for (x, a, b, c) in &self.grid {
            let c = c.map_or_else(|| "NA".into(), |v| format!("{v}"));
            let _ = writeln!(out, "{x},{a},{b},{c}");
        }
        out
    }

    pub fn lattice_csv(&self) -> String {
        let mut out = String::from("i,psi_cell,poisson,simulated\n");
        for (i, a, b, c) in &self.lattice {
            let c = c.map_or_else(|| "NA".into(), |v| format!("{v}"));
            let _ = writeln!(out, "{i},{a},{b},{c}");
        }
        out
    }
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Resource(format!("writing {}: {e}", path.display())))
}

/// Writes `comparison.csv`, `comparison.json` and per-cell density tables
/// under `densities/` in `out_dir`.
pub fn write_comparison(comparison: &Comparison, out_dir: &Path) -> Result<()> {
    let dens_dir = out_dir.join("densities");
    fs::create_dir_all(&dens_dir).map_err(|e| Error::Resource(format!("creating {}: {e}", dens_dir.display())))?;
    write(&out_dir.join("comparison.csv"), &rows_to_csv(&comparison.rows))?;
    write(&out_dir.join("comparison.json"), &rows_to_json(&comparison.rows)?)?;
    for (family, params, sim) in &comparison.cells {
        let table = export_density_comparison(params, Some(sim), default_grid(params)?)?;
        let stem = format!("{}_{}_{}_{}_{}", family.label(), params.alpha, params.beta, params.theta, params.gamma);
        write(&dens_dir.join(format!("{stem}_grid.csv")), &table.grid_csv())?;
        write(&dens_dir.join(format!("{stem}_lattice.csv")), &table.lattice_csv())?;
    }
    Ok(())
}
