//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod tables;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adaptive Simpson quadrature on [a, b].
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        (m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb))
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        m: f64,
        fm: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (lm, flm, left) = simpson(f, a, fa, m, fm);
        let (rm, frm, right) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)
            + recurse(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1)
    }
    let (fa, fb) = (f(a), f(b));
    let (m, fm, whole) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, m, fm, whole, tol, 30)
}

/// Adaptive Simpson over `panels` equal sub-intervals, so that narrow
/// features of `f` are not missed by the first coarse samples.
pub fn paneled_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize, tol: f64) -> f64 {
    let w = (b - a) / panels as f64;
    (0..panels)
        .map(|k| adaptive_simpson(f, a + k as f64 * w, a + (k + 1) as f64 * w, tol / panels as f64))
        .sum()
}

/// erf by its Maclaurin series; accurate for |x| ≤ 4.
pub fn erf_series(x: f64) -> f64 {
    let mut term = x;
    let mut sum = x;
    let x2 = x * x;
    for n in 1..200 {
        term *= -x2 / n as f64;
        let add = term / (2 * n + 1) as f64;
        sum += add;
        if add.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    2.0 / std::f64::consts::PI.sqrt() * sum
}

pub fn normal_cdf_series(x: f64, mean: f64, variance: f64) -> f64 {
    0.5 * (1.0 + erf_series((x - mean) / (2.0 * variance).sqrt()))
}

/// Unnormalized stationary weights π_i/π_0 of the birth–death chain by
/// plain products, for states −n..=n.
pub fn series_weights(alpha: f64, beta: f64, theta: f64, gamma: f64, n: usize) -> Vec<f64> {
    let mut pos = vec![1.0];
    let mut neg = vec![1.0];
    for j in 1..=n {
        pos.push(pos[j - 1] * alpha / (beta + j as f64 * theta));
        neg.push(neg[j - 1] * beta / (alpha + j as f64 * gamma));
    }
    neg[1..].iter().rev().chain(pos.iter()).copied().collect()
}

/// (p1, p2) as plain sums of the weights on either side of 0.
pub fn series_p(alpha: f64, beta: f64, theta: f64, gamma: f64, n: usize) -> (f64, f64) {
    let w = series_weights(alpha, beta, theta, gamma, n);
    let p2: f64 = w[..n].iter().sum();
    let p1: f64 = w[n + 1..].iter().sum();
    (p1, p2)
}

/// X(t) of the birth–death chain (birth α + i⁻γ, death β + i⁺θ) by the
/// Gillespie algorithm.
pub fn gillespie_state(alpha: f64, beta: f64, theta: f64, gamma: f64, x0: i64, t: f64, rng: &mut ChaCha8Rng) -> i64 {
    let mut x = x0;
    let mut now = 0.0;
    loop {
        let birth = alpha + (-x).max(0) as f64 * gamma;
        let death = beta + x.max(0) as f64 * theta;
        let total = birth + death;
        let u: f64 = 1.0 - rng.random::<f64>();
        now += -u.ln() / total;
        if now > t {
            return x;
        }
        if rng.random::<f64>() * total < birth {
            x += 1;
        } else {
            x -= 1;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Decimal places of a printed table value.
pub fn printed_decimals(printed: &str) -> usize {
    printed.split_once('.').map_or(0, |(_, frac)| frac.len())
}

/// Rounds `value` to the printed precision (at most 4 decimals) and checks
/// it against the printed value within 5e-4.
pub fn matches_printed(value: f64, printed: &str) -> bool {
    let want: f64 = printed.parse().expect("numeric table cell");
    let digits = printed_decimals(printed).min(4) as i32;
    let scale = 10f64.powi(digits);
    let rounded = (value * scale).round() / scale;
    (rounded - want).abs() <= 5e-4
}

/// Time-average of X² over [warmup, horizon] for uniform(0, 2/rate)
/// renewal arrivals, with reneging handled as one exponential clock of
/// rate θX⁺ + γX⁻ (valid by memorylessness).
pub fn aggregate_reneging_second_moment(
    alpha: f64,
    beta: f64,
    theta: f64,
    gamma: f64,
    warmup: f64,
    horizon: f64,
    rng: &mut ChaCha8Rng,
) -> f64 {
    let mut x: i64 = 0;
    let mut t = 0.0;
    let mut next_seller = 2.0 / alpha * rng.random::<f64>();
    let mut next_buyer = 2.0 / beta * rng.random::<f64>();
    let mut acc = 0.0;
    loop {
        let rate = if x > 0 { theta * x as f64 } else { gamma * (-x) as f64 };
        let next_renege = if rate > 0.0 { t - (1.0 - rng.random::<f64>()).ln() / rate } else { f64::INFINITY };
        let next = next_seller.min(next_buyer).min(next_renege).min(horizon);
        let from = t.max(warmup);
        if next > from {
            acc += (next - from) * (x * x) as f64;
        }
        t = next;
        if t >= horizon {
            return acc / (horizon - warmup);
        }
        if next_seller <= next_buyer && next_seller <= next_renege {
            x += 1;
            next_seller += 2.0 / alpha * rng.random::<f64>();
        } else if next_buyer <= next_renege {
            x -= 1;
            next_buyer += 2.0 / beta * rng.random::<f64>();
        } else {
            x -= x.signum();
        }
    }
}
