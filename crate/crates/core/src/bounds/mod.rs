//! Exact verification of the closed-word and privileged-word inequalities.
//!
//! Every pass/fail decision compares exact integers or rationals. Floating
//! point is confined to display ratios, iterated logarithms and the
//! asymptotic envelope report in [`asymptotic`].

pub mod asymptotic;
mod chains;
mod report;

pub use asymptotic::{
    check_loglimit, envelope_report, iter_log, iter_log_of_log, ln_bounds, loglimit_ratio, t_star,
    t_star_solutions, EnvelopeRow, LogLimitReport, LogLimitRow,
};
pub use chains::{
    check_b_bounded_by_a, check_corollary8, check_correlation_order, check_lemma15,
    closed_by_min_ratio, CorrelationOrderReport, CorrelationViolation,
};
pub use report::{decimal_ratio, ratio_f64, BoundReport, Quantity};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::avoid::RunAvoidance;
use crate::word::check_alphabet;
use crate::{Error, Rational, Result};

fn int(x: usize) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// `β_k(t) = k - (k-1) / k^{t+1}`.
pub fn beta(k: usize, t: usize) -> Result<Rational> {
    check_alphabet(k)?;
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    let denom = BigInt::from(k).pow(t + 1);
    Ok(int(k) - Rational::new(BigInt::from(k - 1), denom))
}

/// `k - (k-1) β_k(t)^{-t} <= β_k(t)`.
pub fn check_beta_fixedpoint(k: usize, t: usize) -> Result<BoundReport> {
    let b = beta(k, t)?;
    let lhs = int(k) - int(k - 1) * b.clone().pow(t).recip();
    Ok(BoundReport::new("beta", k, Quantity::Rational(lhs), Quantity::Rational(b)).with_t(t))
}

/// `A_k(n, 0^t) <= β_k(t)^n` for every `2t <= n <= n_max`.
pub fn check_a_beta_bound(k: usize, t: usize, n_max: usize) -> Result<Vec<BoundReport>> {
    if t < 2 {
        return Err(Error::Precondition(format!(
            "t must be at least 2, got {t}"
        )));
    }
    if n_max < 2 * t {
        return Err(Error::Precondition(format!(
            "n_max must be at least 2t = {}, got {n_max}",
            2 * t
        )));
    }
    let b = beta(k, t)?;
    let mut memo = RunAvoidance::new(k, t)?;
    // β^{2t} once, then one multiplication per step
    let mut power = b.clone().pow(2 * t);
    let mut reports = Vec::with_capacity(n_max - 2 * t + 1);
    for n in 2 * t..=n_max {
        let lhs = Quantity::Count(memo.get(n).clone());
        reports.push(
            BoundReport::new("betaA", k, lhs, Quantity::Rational(power.clone()))
                .with_n(n)
                .with_t(t),
        );
        power *= &b;
    }
    Ok(reports)
}

/// Both sides of `k^t - γ t k^{t-1} <= (k-γ)^t <= k^t - γ t k^{t-1} + γ² t(t-1) k^{t-2} / 2`
/// for `0 < γ <= 6/t`, as a lower and an upper report.
pub fn check_binomial_ineq(k: usize, t: usize, gamma: &Rational) -> Result<Vec<BoundReport>> {
    check_alphabet(k)?;
    if t < 2 {
        return Err(Error::Precondition(format!(
            "t must be at least 2, got {t}"
        )));
    }
    if !gamma.is_positive() || *gamma > Rational::new(BigInt::from(6), BigInt::from(t)) {
        return Err(Error::Precondition(format!(
            "gamma must satisfy 0 < gamma <= 6/{t}, got {gamma}"
        )));
    }
    let kr = int(k);
    let linear = kr.clone().pow(t) - gamma * int(t) * kr.clone().pow(t - 1);
    let middle = (kr.clone() - gamma).pow(t);
    let quadratic = gamma.clone().pow(2) * int(t * (t - 1)) * kr.pow(t - 2)
        / Rational::from_integer(BigInt::from(2));
    let upper = linear.clone() + quadratic;
    Ok(vec![
        BoundReport::new(
            "binomial",
            k,
            Quantity::Rational(linear),
            Quantity::Rational(middle.clone()),
        )
        .with_t(t)
        .with_detail(format!("lower gamma={gamma}")),
        BoundReport::new(
            "binomial",
            k,
            Quantity::Rational(middle),
            Quantity::Rational(upper),
        )
        .with_t(t)
        .with_detail(format!("upper gamma={gamma}")),
    ])
}

/// The γ grid `{1/8, 2/8, ...}` up to and including `6/t`.
pub fn gamma_grid(t: usize) -> Vec<Rational> {
    let cap = Rational::new(BigInt::from(6), BigInt::from(t));
    let step = Rational::new(BigInt::one(), BigInt::from(8));
    let mut grid = Vec::new();
    let mut g = step.clone();
    while g < cap {
        grid.push(g.clone());
        g += &step;
    }
    if !cap.is_zero() {
        grid.push(cap);
    }
    grid
}
