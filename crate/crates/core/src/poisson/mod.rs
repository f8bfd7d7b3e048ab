//! Exact analysis of the Poisson-arrival chain.

mod moments;
mod pmf;
mod transient;

pub use moments::{
    asymptotic_moment_approximations, gamma_moment_summary, poisson_moment_estimates, AsymptoticMoments,
    GammaMomentSummary,
};
pub use pmf::{
    limiting_expectation, stationary_distribution, total_variation, Expectation, LatticePmf, SignedMoments,
    StationaryPmf, MAX_SUPPORT_BOUND,
};
pub use transient::{
    equal_rate_mean, second_moment_lower_bound, second_moment_lower_bound_limit, transient_moments,
    transient_moments_on_box, transient_support_bound, MomentSnapshot, MAX_BOUNDARY_LEAK,
};
