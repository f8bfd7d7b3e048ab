//! Special functions, Gaussian kernels and random samplers.

mod normal;
mod sampling;
mod special;

pub use normal::{
    inverse_mills, ln_std_normal_cdf, ln_std_normal_pdf, ln_std_normal_sf, normal_cdf, normal_pdf,
    std_normal_cdf, std_normal_pdf, std_normal_sf, truncated_normal_moments, HalfLine,
};
pub use sampling::{
    sample_exponential, sample_interarrival, Family, InterarrivalModel, RandomStream, SdConvention,
};
pub use special::{
    gamma_fn, ln_gamma, ln_lower_incomplete_gamma, lower_incomplete_gamma, regularized_lower_gamma,
    regularized_upper_gamma,
};

/// ∫₀^t e^{-2r(t-u)} |level + offset·e^{-r u}| du.
///
/// The integrand's affine part changes sign at most once, so the integral
/// splits into at most two closed-form pieces.
pub fn discounted_abs_relaxation(rate: f64, level: f64, offset: f64, t: f64) -> f64 {
    debug_assert!(rate > 0.0 && t >= 0.0);
    // ∫_{u0}^{u1} e^{-2r(t-u)} (K0 + K1 e^{-r u}) du with exponents kept ≤ 0
    let piece = |k0: f64, k1: f64, u0: f64, u1: f64| -> f64 {
        let a = k0 / (2.0 * rate) * ((-2.0 * rate * (t - u1)).exp() - (-2.0 * rate * (t - u0)).exp());
        let b = k1 / rate * ((-2.0 * rate * t + rate * u1).exp() - (-2.0 * rate * t + rate * u0).exp());
        a + b
    };
    let signed = |sign: f64, u0: f64, u1: f64| piece(sign * level, sign * offset, u0, u1);
    let at = |u: f64| level + offset * (-rate * u).exp();
    let start = at(0.0);
    // crossing where level + offset e^{-r u} = 0
    let crossing = if offset != 0.0 && level != 0.0 {
        let ratio = -level / offset;
        if ratio > 0.0 && ratio < 1.0 {
            Some(-ratio.ln() / rate)
        } else {
            None
        }
    } else {
        None
    };
    match crossing {
        Some(u_star) if u_star < t => {
            let s0 = if start >= 0.0 { 1.0 } else { -1.0 };
            signed(s0, 0.0, u_star) + signed(-s0, u_star, t)
        }
        _ => {
            let mid = at(0.5 * t);
            let s = if mid >= 0.0 { 1.0 } else { -1.0 };
            signed(s, 0.0, t)
        }
    }
}
