//! Reproducible random streams and renewal interarrival laws.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};

/// A counter-based random stream keyed by `(seed, stream_id)`.
///
/// Equal keys replay the same sequence; distinct stream ids select
/// disjoint ChaCha streams under the same seed.
#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    stream_id: u64,
    rng: ChaCha8Rng,
}

impl RandomStream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream_id);
        Self { seed, stream_id, rng }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// Uniform on (0, 1].
    pub fn open_unit(&mut self) -> f64 {
        1.0 - self.rng.random::<f64>()
    }

    pub fn standard_normal(&mut self) -> f64 {
        StandardNormal.sample(&mut self.rng)
    }

    /// Exponential with unit rate, strictly positive.
    fn unit_exponential(&mut self) -> f64 {
        loop {
            let e: f64 = Exp1.sample(&mut self.rng);
            if e > 0.0 {
                return e;
            }
        }
    }
}

/// Exponential sample with the given rate.
pub fn sample_exponential(rate: f64, stream: &mut RandomStream) -> f64 {
    debug_assert!(rate > 0.0);
    stream.unit_exponential() / rate
}

/// Interarrival law family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum Family {
    Exponential,
    /// Uniform on [0, 2/rate].
    Uniform,
    /// Sum of `k` exponential stages, each with rate `k·rate`.
    Erlang { k: u32 },
    /// Mixture: weight 1/3 on Exp(rate/2), 2/3 on Exp(2·rate).
    HyperExponential,
}

impl Family {
    pub const NAMES: &'static str = "exp|exponential, uniform, erlang|erlang2|erlang<k>, hyperexp|hyperexponential";

    /// The four families of the reference experiment grid.
    pub fn reference_set() -> [Family; 4] {
        [
            Family::Exponential,
            Family::Uniform,
            Family::Erlang { k: 2 },
            Family::HyperExponential,
        ]
    }

    /// Short stable label used in tables and file names.
    pub fn label(&self) -> String {
        match self {
            Family::Exponential => "exponential".into(),
            Family::Uniform => "uniform".into(),
            Family::Erlang { k } => format!("erlang{k}"),
            Family::HyperExponential => "hyperexponential".into(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let name = s.trim().to_ascii_lowercase().replace(['-', '_'], "");
        match name.as_str() {
            "exp" | "exponential" | "poisson" => Ok(Family::Exponential),
            "uniform" | "unif" => Ok(Family::Uniform),
            "erlang" => Ok(Family::Erlang { k: 2 }),
            "hyperexp" | "hyperexponential" | "hyper" => Ok(Family::HyperExponential),
            other => {
                if let Some(k) = other.strip_prefix("erlang").and_then(|k| k.parse::<u32>().ok()) {
                    if k >= 1 {
                        return Ok(Family::Erlang { k });
                    }
                }
                Err(Error::Config(format!(
                    "unknown interarrival distribution '{s}'; valid names: {}",
                    Family::NAMES
                )))
            }
        }
    }
}

/// How the interarrival standard deviation is read off a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SdConvention {
    /// The true standard deviation of the sampled law.
    Exact,
    /// The convention behind the published reference moment tables: identical
    /// to `Exact` except that the exponential family uses 1/√rate.
    #[default]
    Tabulated,
}

impl FromStr for SdConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exact" => Ok(SdConvention::Exact),
            "tabulated" => Ok(SdConvention::Tabulated),
            other => Err(Error::Config(format!(
                "unknown sd convention '{other}'; valid: exact, tabulated"
            ))),
        }
    }
}

/// A renewal interarrival law with mean 1/rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InterarrivalModel {
    #[serde(flatten)]
    pub family: Family,
    pub rate: f64,
}

impl InterarrivalModel {
    pub fn new(family: Family, rate: f64) -> Result<Self> {
        ensure(rate > 0.0 && rate.is_finite(), || {
            format!("interarrival rate must be positive and finite, got {rate}")
        })?;
        if let Family::Erlang { k } = family {
            ensure(k >= 1, || "erlang stage count must be at least 1".into())?;
        }
        Ok(Self { family, rate })
    }

    pub fn exponential(rate: f64) -> Result<Self> {
        Self::new(Family::Exponential, rate)
    }

    pub fn mean(&self) -> f64 {
        1.0 / self.rate
    }

    /// True standard deviation of the law.
    pub fn sd(&self) -> f64 {
        match self.family {
            Family::Exponential => 1.0 / self.rate,
            Family::Uniform => 1.0 / (3f64.sqrt() * self.rate),
            Family::Erlang { k } => 1.0 / ((k as f64).sqrt() * self.rate),
            Family::HyperExponential => 2f64.sqrt() / self.rate,
        }
    }

    pub fn sd_with(&self, convention: SdConvention) -> f64 {
        match (convention, self.family) {
            (SdConvention::Tabulated, Family::Exponential) => 1.0 / self.rate.sqrt(),
            _ => self.sd(),
        }
    }

    pub fn sample(&self, stream: &mut RandomStream) -> f64 {
        sample_interarrival(self, stream)
    }
}

/// One interarrival time drawn from `model`; always strictly positive.
pub fn sample_interarrival(model: &InterarrivalModel, stream: &mut RandomStream) -> f64 {
    let rate = model.rate;
    match model.family {
        Family::Exponential => sample_exponential(rate, stream),
        Family::Uniform => 2.0 / rate * stream.open_unit(),
        Family::Erlang { k } => {
            let stage_rate = k as f64 * rate;
            (0..k).map(|_| sample_exponential(stage_rate, stream)).sum()
        }
        Family::HyperExponential => {
            if stream.open_unit() <= 1.0 / 3.0 {
                sample_exponential(0.5 * rate, stream)
            } else {
                sample_exponential(2.0 * rate, stream)
            }
        }
    }
}
