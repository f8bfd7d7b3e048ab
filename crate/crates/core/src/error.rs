use thiserror::Error;

/// Failure modes shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A hard resource cap (support size, iteration budget) was reached.
    #[error("resource limit reached: {0}")]
    Resource(String),
    /// Probability mass escaped a truncated state space.
    #[error("truncation error: {0}")]
    Truncation(String),
    /// A quantity is not representable as a finite double.
    #[error("overflow: {0}")]
    Overflow(String),
    /// The requested closed form only exists for a special parameter case.
    #[error("unsupported case: {0}")]
    Unsupported(String),
    /// Malformed or unknown configuration input.
    #[error("configuration error: {0}")]
    Config(String),
}

impl Error {
    /// `true` for errors caused by user configuration rather than numerics.
    pub fn is_config(&self) -> bool {
        matches!(self, Error::Config(_) | Error::Domain(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}
