//! Double-ended queues with abandonment: the exact Poisson chain, fluid and
//! diffusion approximations, a discrete-event simulator and a comparison
//! harness.

pub mod des;
pub mod diffusion;
mod error;
pub mod fluid;
pub mod harness;
pub mod numerics;
mod params;
pub mod poisson;

pub use error::{Error, Result};
pub use params::QueueParams;
