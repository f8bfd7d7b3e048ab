use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use deqlab_core::des::{estimate, Budget, Scenario};
use deqlab_core::diffusion::{model_one, model_two};
use deqlab_core::fluid::{fluid_closed_form_path, fluid_integrate};
use deqlab_core::harness::{
    default_grid, model_one_density, run_comparison, write_comparison, BudgetChoice, ComparisonConfig, DensityGrid,
};
use deqlab_core::numerics::{Family, InterarrivalModel, SdConvention};
use deqlab_core::poisson::{gamma_moment_summary, poisson_moment_estimates, stationary_distribution};
use deqlab_core::{Error, QueueParams};
use serde_json::json;

#[derive(Parser)]
#[command(name = "deqlab", version, about = "Double-ended queues with reneging: exact, fluid, diffusion and simulated moments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stationary moments of the Poisson chain.
    Analytic(Rates),
    /// Fluid path as CSV (t, x).
    Fluid(FluidArgs),
    /// Diffusion approximations.
    Diffusion {
        #[command(subcommand)]
        which: DiffusionCommand,
    },
    /// Replicated discrete-event simulation of one scenario.
    Simulate(SimulateArgs),
    /// Full comparison matrix with density exports.
    Compare(CompareArgs),
}

#[derive(Args, Clone, Copy)]
struct Rates {
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    beta: f64,
    #[arg(long, allow_negative_numbers = true)]
    theta: f64,
    #[arg(long, allow_negative_numbers = true)]
    gamma: f64,
}

#[derive(Args)]
struct FluidArgs {
    #[command(flatten)]
    rates: Rates,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    x0: f64,
    #[arg(long)]
    horizon: f64,
    #[arg(long, default_value_t = 0.01)]
    step: f64,
    #[arg(long, conflicts_with = "integrate")]
    closed_form: bool,
    #[arg(long)]
    integrate: bool,
}

#[derive(Subcommand)]
enum DiffusionCommand {
    /// Constant-coefficient model moments (JSON).
    Model1(DiffusionArgs),
    /// Fluid-centered model moments (JSON).
    Model2(DiffusionArgs),
    /// Model I stationary density on a grid (CSV x,psi).
    Density {
        #[command(flatten)]
        args: DiffusionArgs,
        /// lo:hi:n; defaults to mean ± 6 sd with 1024 points.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<DensityGrid>,
    },
}

#[derive(Args)]
struct DiffusionArgs {
    #[command(flatten)]
    rates: Rates,
    /// Seller interarrival sd; overrides --dist together with --varsigma.
    #[arg(long, requires = "varsigma")]
    sigma: Option<f64>,
    /// Buyer interarrival sd.
    #[arg(long, requires = "sigma")]
    varsigma: Option<f64>,
    #[arg(long, default_value = "exp")]
    dist: Family,
    #[arg(long, default_value = "tabulated")]
    sd_convention: SdConvention,
}

impl DiffusionArgs {
    fn params(&self) -> Result<QueueParams, Error> {
        let Rates { alpha, beta, theta, gamma } = self.rates;
        match (self.sigma, self.varsigma) {
            (Some(s), Some(v)) => QueueParams::new(alpha, beta, s, v, theta, gamma),
            _ => QueueParams::from_models(
                &InterarrivalModel::new(self.dist, alpha)?,
                &InterarrivalModel::new(self.dist, beta)?,
                theta,
                gamma,
                self.sd_convention,
            ),
        }
    }
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    rates: Rates,
    #[arg(long, default_value = "exp")]
    dist: Family,
    #[arg(long, default_value_t = Budget::DESK.replications)]
    reps: u32,
    #[arg(long, default_value_t = Budget::DESK.horizon)]
    horizon: f64,
    #[arg(long, default_value_t = Budget::DESK.warmup)]
    warmup: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    initial_state: i64,
}

#[derive(Args)]
struct CompareArgs {
    /// JSON config; omitted axes take their defaults.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    budget: Option<BudgetChoice>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_config() { 2 } else { 3 })
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Analytic(r) => {
            let params = QueueParams::poisson(r.alpha, r.beta, r.theta, r.gamma)?;
            let summary = gamma_moment_summary(&params)?;
            let (l1, l2) = poisson_moment_estimates(&params)?;
            let pmf = stationary_distribution(&params, 1e-12)?;
            let doc = json!({"p1": summary.p1, "p2": summary.p2, "pi0": pmf.mass(0), "L1_p": l1, "L2_p": l2});
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        Command::Fluid(f) => {
            let params = QueueParams::poisson(f.rates.alpha, f.rates.beta, f.rates.theta, f.rates.gamma)?;
            let path = if f.integrate {
                fluid_integrate(&params, f.x0, f.step, f.horizon)?
            } else {
                if !(f.step > 0.0 && f.horizon >= 0.0) {
                    return Err(Error::Config(format!("need step > 0 and horizon >= 0, got {} and {}", f.step, f.horizon)).into());
                }
                let n = (f.horizon / f.step).round() as usize;
                let grid: Vec<f64> = (0..=n).map(|k| (k as f64 * f.step).min(f.horizon)).collect();
                fluid_closed_form_path(&params, f.x0, &grid)?
            };
            writeln!(out, "t,x")?;
            for (t, x) in path.t_grid.iter().zip(&path.x) {
                writeln!(out, "{t},{x}")?;
            }
        }
        Command::Diffusion { which } => match which {
            DiffusionCommand::Model1(args) => {
                let m = model_one(&args.params()?)?;
                let doc = json!({"a": m.ou.diffusion_at(0.0), "L1_d1": m.l1, "L2_d1": m.l2});
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            }
            DiffusionCommand::Model2(args) => {
                let m = model_two(&args.params()?)?;
                let doc = json!({"b": m.b, "L1_d2": m.l1, "L2_d2": m.l2});
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            }
            DiffusionCommand::Density { args, grid } => {
                let params = args.params()?;
                let grid = match grid {
                    Some(g) => g,
                    None => default_grid(&params)?,
                };
                let psi = model_one_density(&params)?;
                writeln!(out, "x,psi")?;
                for x in grid.values() {
                    writeln!(out, "{x},{}", psi.density(x))?;
                }
            }
        },
        Command::Simulate(s) => {
            let budget = Budget { replications: s.reps, warmup: s.warmup, horizon: s.horizon };
            let mut scenario = Scenario::new(s.dist, s.rates.alpha, s.rates.beta, s.rates.theta, s.rates.gamma, budget)?;
            scenario.initial_state = s.initial_state;
            let est = estimate(&scenario, s.seed)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&est)?)?;
        }
        Command::Compare(c) => {
            let mut config = match &c.config {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
                    ComparisonConfig::from_json(&text)?
                }
                None => ComparisonConfig::default(),
            };
            if let Some(b) = c.budget {
                config.budget = b;
            }
            if let Some(seed) = c.seed {
                config.seed = seed;
            }
            let comparison = run_comparison(&config)?;
            write_comparison(&comparison, &c.out)?;
            writeln!(out, "wrote {} rows to {}", comparison.rows.len(), c.out.display())?;
        }
    }
    Ok(())
}
