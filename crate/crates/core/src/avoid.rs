//! `A_k(n, 0^t)`, the number of length-`n` words with no run of `t` zeros,
//! without enumeration.
//!
//! The fast path uses three branches:
//!
//! ```text
//! A(n) = k^n                                        n < t
//!      = k^{n-t}(k^t - 1) - (n-t) k^{n-t-1} (k-1)   t <= n <= 2t
//!      = k A(n-1) - (k-1) A(n-t-1)                  n > 2t
//! ```
//!
//! [`sum_recurrence`] evaluates the independent route
//! `A(n) = (k-1) sum_{i=1}^{t} A(n-i)` for `n >= t`, used to cross-check it.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::{One, Pow};

use crate::table::{CountKind, CountTable, Provenance};
use crate::word::check_alphabet;
use crate::{Count, Error, Result};

fn check_params(k: usize, t: usize) -> Result<()> {
    check_alphabet(k)?;
    if t == 0 {
        return Err(Error::Precondition(
            "run length t must be at least 1".into(),
        ));
    }
    Ok(())
}

/// Middle branch, defined for `t <= n <= 2t`.
pub fn closed_form(k: usize, n: usize, t: usize) -> Option<Count> {
    if n < t || n > 2 * t || k < 2 || t == 0 {
        return None;
    }
    let kk = Count::from(k);
    if n == t {
        return Some(kk.clone().pow(t) - Count::one());
    }
    // k^{n-t-1} (k (k^t - 1) - (n-t)(k-1)); the bracket is positive because n-t <= t.
    let bracket = &kk * (kk.clone().pow(t) - Count::one()) - Count::from((n - t) * (k - 1));
    Some(kk.pow(n - t - 1) * bracket)
}

/// `A_k(0..=n_max, 0^t)` by the plain sum recurrence.
pub fn sum_recurrence(k: usize, t: usize, n_max: usize) -> Result<Vec<Count>> {
    check_params(k, t)?;
    let kk = Count::from(k);
    let mut values: Vec<Count> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let value = if n < t {
            kk.clone().pow(n)
        } else {
            let window: Count = values[n - t..n].iter().sum();
            window * Count::from(k - 1)
        };
        values.push(value);
    }
    Ok(values)
}

/// Memoized `A_k(n, 0^t)` for fixed `k` and `t`.
#[derive(Debug, Clone)]
pub struct RunAvoidance {
    k: usize,
    t: usize,
    values: Vec<Count>,
}

impl RunAvoidance {
    pub fn new(k: usize, t: usize) -> Result<Self> {
        check_params(k, t)?;
        Ok(Self {
            k,
            t,
            values: Vec::new(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Branch that produces `A(n)`.
    pub fn provenance(&self, n: usize) -> Provenance {
        if n <= 2 * self.t {
            Provenance::ClosedForm
        } else {
            Provenance::Recurrence
        }
    }

    fn extend_to(&mut self, n: usize) {
        let (k, t) = (self.k, self.t);
        let kk = Count::from(k);
        while self.values.len() <= n {
            let m = self.values.len();
            let value = if m < t {
                kk.clone().pow(m)
            } else if m <= 2 * t {
                closed_form(k, m, t).expect("t <= m <= 2t")
            } else {
                &kk * &self.values[m - 1] - Count::from(k - 1) * &self.values[m - t - 1]
            };
            self.values.push(value);
        }
    }

    pub fn get(&mut self, n: usize) -> &Count {
        self.extend_to(n);
        &self.values[n]
    }

    /// `A(0), ..., A(n_max)`.
    pub fn sequence(&mut self, n_max: usize) -> &[Count] {
        self.extend_to(n_max);
        &self.values[..=n_max]
    }
}

/// `A_k(n, 0^t)` via the three-branch rule.
pub fn count_avoiding_run(k: usize, n: usize, t: usize) -> Result<Count> {
    let mut memo = RunAvoidance::new(k, t)?;
    Ok(memo.get(n).clone())
}

/// Avoid-kind table with entries `(n, t)` for `n` in `lengths`.
pub fn avoid_table(
    k: usize,
    t: usize,
    lengths: impl IntoIterator<Item = usize>,
) -> Result<CountTable> {
    let mut memo = RunAvoidance::new(k, t)?;
    let mut table = CountTable::new(CountKind::Avoid, k, Provenance::Recurrence);
    for n in lengths {
        table.insert(n, t, memo.get(n).clone());
    }
    Ok(table)
}

/// Shared memo tables keyed by `(k, t)`.
#[derive(Debug, Default)]
pub struct RunAvoidanceCache {
    tables: Mutex<HashMap<(usize, usize), RunAvoidance>>,
}

impl RunAvoidanceCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, k: usize, n: usize, t: usize) -> Result<Count> {
        let mut tables = self.tables.lock().unwrap_or_else(|e| e.into_inner());
        let memo = match tables.entry((k, t)) {
            std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::hash_map::Entry::Vacant(e) => e.insert(RunAvoidance::new(k, t)?),
        };
        Ok(memo.get(n).clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: u64) -> Count {
        Count::from(x)
    }

    #[test]
    fn small_cases() {
        assert_eq!(count_avoiding_run(2, 1, 2).unwrap(), c(2));
        assert_eq!(count_avoiding_run(2, 4, 2).unwrap(), c(8));
        assert_eq!(closed_form(2, 4, 2), Some(c(8)));
        assert_eq!(count_avoiding_run(3, 3, 3).unwrap(), c(26));
        assert_eq!(count_avoiding_run(2, 0, 5).unwrap(), c(1));
        // A_k(n, 0) = (k-1)^n
        assert_eq!(count_avoiding_run(3, 7, 1).unwrap(), c(128));
        assert_eq!(count_avoiding_run(2, 30, 1).unwrap(), c(1));
    }

    #[test]
    fn binary_no_double_zero_is_fibonacci() {
        let mut memo = RunAvoidance::new(2, 2).unwrap();
        let seq: Vec<Count> = memo.sequence(10).to_vec();
        let fib = [1u64, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144];
        assert_eq!(seq, fib.iter().map(|&x| c(x)).collect::<Vec<_>>());
    }

    #[test]
    fn exceeds_sixty_four_bits() {
        let big = count_avoiding_run(2, 100, 10).unwrap();
        assert!(big.bits() > 64);
        assert_eq!(big, sum_recurrence(2, 10, 100).unwrap()[100]);
    }

    #[test]
    fn closed_form_outside_window_is_none() {
        assert_eq!(closed_form(2, 1, 2), None);
        assert_eq!(closed_form(2, 5, 2), None);
        assert_eq!(closed_form(2, 3, 0), None);
    }

    #[test]
    fn parameter_errors() {
        assert!(RunAvoidance::new(2, 0).is_err());
        assert!(RunAvoidance::new(1, 3).is_err());
        assert!(sum_recurrence(0, 3, 4).is_err());
    }

    #[test]
    fn cache_agrees_with_fresh_tables() {
        let cache = RunAvoidanceCache::new();
        for k in 2..=4 {
            for t in 1..=5 {
                for n in [0, 3, 17, 40] {
                    assert_eq!(
                        cache.get(k, n, t).unwrap(),
                        count_avoiding_run(k, n, t).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn table_and_provenance() {
        let table = avoid_table(2, 3, 0..=8).unwrap();
        assert_eq!(table.value(4, 3), c(13));
        assert_eq!(table.provenance(), Provenance::Recurrence);
        let memo = RunAvoidance::new(2, 3).unwrap();
        assert_eq!(memo.provenance(6), Provenance::ClosedForm);
        assert_eq!(memo.provenance(7), Provenance::Recurrence);
    }
}
