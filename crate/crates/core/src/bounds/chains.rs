//! Upper-bound chains over exact counts: closed-by-pattern counts against
//! run-avoiding counts, the resulting bounds on `C_k(n)` and `P_k(n,t)`, and
//! the correlation-polynomial ordering of avoidance counts.

use num_bigint::BigUint;
use num_traits::Pow;

use super::report::{ratio_f64, BoundReport, Quantity};
use crate::avoid::RunAvoidanceCache;
use crate::counting::{closure_row, count_avoiding, count_closed_by_all, count_privileged};
use crate::enumerate::{plain_state_count, EnumerationConfig};
use crate::word::{autocorrelation, check_alphabet, Word};
use crate::{Count, Error, Result};

fn pow(k: usize, e: usize) -> Count {
    Count::from(k).pow(e)
}

/// `B_k(n,u) <= A_k(n-2t, 0^t)` for every length-`t` word `u`, one report per
/// pattern in rank order.
pub fn check_b_bounded_by_a(
    k: usize,
    n: usize,
    t: usize,
    config: &EnumerationConfig,
) -> Result<Vec<BoundReport>> {
    check_alphabet(k)?;
    if t == 0 || n < 2 * t {
        return Err(Error::Precondition(format!(
            "need n >= 2t >= 2, got n={n}, t={t}"
        )));
    }
    let bound = RunAvoidanceCache::new().get(k, n - 2 * t, t)?;
    let counts = count_closed_by_all(k, n, t, config)?;
    counts
        .into_iter()
        .enumerate()
        .map(|(rank, b)| {
            let u = Word::from_rank(rank as u128, t, k)?;
            Ok(BoundReport::new(
                "lemma6",
                k,
                Quantity::Count(b),
                Quantity::Count(bound.clone()),
            )
            .with_n(n)
            .with_t(t)
            .with_detail(format!("u={u}")))
        })
        .collect()
}

/// `C_k(n) <= sum_{t=1}^{floor(n/2)} k^t A_k(n-2t,0^t) + n k^{ceil(n/2)}`.
///
/// The first report is the total; it is followed by the per-length reports
/// `C_k(n,t) <= k^t A_k(n-2t,0^t)` for `1 <= t <= n/2` (check name `lemma7`).
pub fn check_corollary8(
    k: usize,
    n: usize,
    config: &EnumerationConfig,
) -> Result<Vec<BoundReport>> {
    check_alphabet(k)?;
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let row = closure_row(k, n, config)?;
    let cache = RunAvoidanceCache::new();
    let mut per_length = Vec::with_capacity(n / 2);
    let mut sum = Count::default();
    for t in 1..=n / 2 {
        let bound = pow(k, t) * cache.get(k, n - 2 * t, t)?;
        sum += &bound;
        per_length.push(
            BoundReport::new(
                "lemma7",
                k,
                Quantity::Count(row.closed(t)),
                Quantity::Count(bound),
            )
            .with_n(n)
            .with_t(t),
        );
    }
    let rhs = sum + Count::from(n) * pow(k, n.div_ceil(2));
    let mut reports = vec![BoundReport::new(
        "corollary8",
        k,
        Quantity::Count(row.closed_total),
        Quantity::Count(rhs),
    )
    .with_n(n)];
    reports.extend(per_length);
    Ok(reports)
}

/// `P_k(n,t) <= P_k(t) A_k(n-2t, 0^t)` for `1 <= t <= n/2`.
pub fn check_lemma15(k: usize, n: usize, config: &EnumerationConfig) -> Result<Vec<BoundReport>> {
    check_alphabet(k)?;
    if n < 2 {
        return Err(Error::Precondition(format!(
            "n must be at least 2, got {n}"
        )));
    }
    let row = closure_row(k, n, config)?;
    let cache = RunAvoidanceCache::new();
    (1..=n / 2)
        .map(|t| {
            let rhs = count_privileged(k, t, config)? * cache.get(k, n - 2 * t, t)?;
            Ok(BoundReport::new(
                "lemma15",
                k,
                Quantity::Count(row.privileged(t)),
                Quantity::Count(rhs),
            )
            .with_n(n)
            .with_t(t))
        })
        .collect()
}

/// `min_u B_k(n,u) n^2 / k^n` over all length-`t` words at `t = t_star(k, n)`.
/// Reported only; the constant it would be compared against is unknown.
pub fn closed_by_min_ratio(k: usize, n: usize, config: &EnumerationConfig) -> Result<(usize, f64)> {
    let t = super::asymptotic::t_star(k, n)?;
    if t == 0 || t > n {
        return Err(Error::Domain(format!(
            "t_star({k}, {n}) = {t} is not a usable pattern length"
        )));
    }
    let counts = count_closed_by_all(k, n, t, config)?;
    let min = counts.into_iter().min().unwrap_or_default();
    let ratio = ratio_f64(&(min * BigUint::from(n * n)), &pow(k, n));
    Ok((t, ratio))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationViolation {
    pub u: Word,
    pub v: Word,
    pub m: usize,
    pub avoid_u: Count,
    pub avoid_v: Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationOrderReport {
    pub k: usize,
    pub t: usize,
    pub m_max: usize,
    /// Ordered pairs `(u, v)` with `f_u(2) > f_v(2)`.
    pub pairs_checked: usize,
    pub violations: Vec<CorrelationViolation>,
    /// Whether `0^t` attains the maximum of `f(2)` over all length-`t` words.
    pub run_maximizes: bool,
    /// `f(2)` of `0^t`.
    pub run_value: Count,
}

impl CorrelationOrderReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.run_maximizes
    }
}

/// For every pair of length-`t` words with `f_u(2) > f_v(2)`, checks
/// `A_k(m,u) >= A_k(m,v)` for `1 <= m <= m_max`.
pub fn check_correlation_order(
    k: usize,
    t: usize,
    m_max: usize,
    config: &EnumerationConfig,
) -> Result<CorrelationOrderReport> {
    check_alphabet(k)?;
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    let patterns = plain_state_count(k, t);
    if patterns > u128::from(config.max_states) {
        return Err(Error::BudgetExceeded {
            states: patterns,
            limit: config.max_states,
        });
    }
    let two = Count::from(2u32);
    let mut rows = Vec::with_capacity(patterns as usize);
    for rank in 0..patterns {
        let u = Word::from_rank(rank, t, k)?;
        let f = autocorrelation(&u)?.eval(&two);
        let avoid = (1..=m_max)
            .map(|m| count_avoiding(m, &u, config))
            .collect::<Result<Vec<_>>>()?;
        rows.push((u, f, avoid));
    }
    let run_value = autocorrelation(&Word::run(0, t, k)?)?.eval(&two);
    let run_maximizes = rows.iter().all(|(_, f, _)| *f <= run_value);

    let mut pairs_checked = 0;
    let mut violations = Vec::new();
    for (u, fu, avoid_u) in &rows {
        for (v, fv, avoid_v) in &rows {
            if fu <= fv {
                continue;
            }
            pairs_checked += 1;
            for (i, (au, av)) in avoid_u.iter().zip(avoid_v).enumerate() {
                if au < av {
                    violations.push(CorrelationViolation {
                        u: u.clone(),
                        v: v.clone(),
                        m: i + 1,
                        avoid_u: au.clone(),
                        avoid_v: av.clone(),
                    });
                }
            }
        }
    }
    Ok(CorrelationOrderReport {
        k,
        t,
        m_max,
        pairs_checked,
        violations,
        run_maximizes,
        run_value,
    })
}
