//! Exhaustive enumeration of `Σ_k^n`.
//!
//! The word space is split into disjoint ranges sharing a fixed prefix. Each
//! range is walked with a base-`k` odometer over a single reusable buffer, and
//! the per-range accumulators are merged in prefix order, so any associative
//! merge yields the same result for every thread count.
//!
//! In canonical mode only restricted-growth words are visited (the first
//! occurrence of each symbol appears in increasing order). Every orbit of the
//! alphabet-permutation action has exactly one such representative, and the
//! orbit of a word using `m` distinct symbols has `k (k-1) ... (k-m+1)`
//! elements; that size is passed to the visitor as the multiplier.

use rayon::prelude::*;

use crate::word::{check_alphabet, Symbol};
use crate::{Error, Result};

/// Default cap on the number of visited words.
pub const DEFAULT_MAX_STATES: u64 = 1 << 26;

/// Target number of independent prefix ranges.
const TARGET_CHUNKS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_states: u64,
    /// Worker threads; `None` uses the global rayon pool, `Some(1)` runs inline.
    pub jobs: Option<usize>,
    pub canonical: bool,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self {
            max_states: DEFAULT_MAX_STATES,
            jobs: None,
            canonical: false,
        }
    }
}

impl EnumerationConfig {
    pub fn sequential() -> Self {
        Self {
            jobs: Some(1),
            ..Self::default()
        }
    }

    pub fn with_canonical(mut self, canonical: bool) -> Self {
        self.canonical = canonical;
        self
    }

    pub fn with_jobs(mut self, jobs: Option<usize>) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_max_states(mut self, max_states: u64) -> Self {
        self.max_states = max_states;
        self
    }
}

/// `k^n`, saturating at `u128::MAX`.
pub fn plain_state_count(k: usize, n: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.saturating_mul(k as u128);
    }
    total
}

/// Number of restricted-growth words of length `n` over `k` symbols, i.e.
/// `sum_{m <= k} S(n, m)` with `S` the Stirling numbers of the second kind.
pub fn canonical_state_count(k: usize, n: usize) -> u128 {
    let width = k.min(n) + 1;
    // row[m] = number of restricted-growth prefixes using exactly m symbols
    let mut row = vec![0u128; width];
    row[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; width];
        for m in 0..width {
            if row[m] == 0 {
                continue;
            }
            next[m] = next[m].saturating_add(row[m].saturating_mul(m as u128));
            if m + 1 < width {
                next[m + 1] = next[m + 1].saturating_add(row[m]);
            }
        }
        row = next;
    }
    row.iter().fold(0u128, |acc, &x| acc.saturating_add(x))
}

fn state_count(k: usize, n: usize, canonical: bool) -> u128 {
    if canonical {
        canonical_state_count(k, n)
    } else {
        plain_state_count(k, n)
    }
}

/// Checks the budget and returns the number of words that will be visited.
pub fn check_budget(k: usize, n: usize, config: &EnumerationConfig) -> Result<u128> {
    check_alphabet(k)?;
    let states = state_count(k, n, config.canonical);
    if states > u128::from(config.max_states) {
        return Err(Error::BudgetExceeded {
            states,
            limit: config.max_states,
        });
    }
    Ok(states)
}

/// Base-`k` odometer over positions `fixed..n` of a buffer whose first
/// `fixed` symbols are held constant.
struct Odometer {
    k: usize,
    fixed: usize,
    canonical: bool,
    word: Vec<Symbol>,
    /// `distinct[i]` = number of distinct symbols in `word[..=i]` (canonical mode).
    distinct: Vec<usize>,
    orbit_sizes: Vec<u64>,
}

impl Odometer {
    fn new(k: usize, n: usize, prefix: &[Symbol], canonical: bool, orbit_sizes: &[u64]) -> Self {
        let mut word = vec![0; n];
        word[..prefix.len()].copy_from_slice(prefix);
        let mut distinct = vec![0; n];
        let mut d = 0usize;
        for i in 0..n {
            if usize::from(word[i]) == d {
                d += 1;
            }
            distinct[i] = d;
        }
        Self {
            k,
            fixed: prefix.len(),
            canonical,
            word,
            distinct,
            orbit_sizes: orbit_sizes.to_vec(),
        }
    }

    fn limit(&self, i: usize) -> usize {
        if self.canonical {
            let before = if i == 0 { 0 } else { self.distinct[i - 1] };
            (before + 1).min(self.k)
        } else {
            self.k
        }
    }

    fn multiplier(&self) -> u64 {
        if self.canonical {
            self.orbit_sizes[self.distinct.last().copied().unwrap_or(0)]
        } else {
            1
        }
    }

    /// Advances to the next word; returns false once the range is exhausted.
    fn advance(&mut self) -> bool {
        let n = self.word.len();
        let mut i = n;
        while i > self.fixed {
            i -= 1;
            if usize::from(self.word[i]) + 1 < self.limit(i) {
                self.word[i] += 1;
                let before = if i == 0 { 0 } else { self.distinct[i - 1] };
                self.distinct[i] = if usize::from(self.word[i]) == before {
                    before + 1
                } else {
                    before
                };
                for j in i + 1..n {
                    self.word[j] = 0;
                    self.distinct[j] = self.distinct[j - 1].max(1);
                }
                return true;
            }
        }
        false
    }
}

/// `orbit_sizes[m] = k (k-1) ... (k-m+1)`.
fn orbit_sizes(k: usize) -> Vec<u64> {
    let mut sizes = Vec::with_capacity(k + 1);
    let mut acc = 1u64;
    sizes.push(acc);
    for m in 0..k {
        acc = acc.saturating_mul((k - m) as u64);
        sizes.push(acc);
    }
    sizes
}

/// All valid prefixes of length `len` in lexicographic order.
fn prefixes(k: usize, len: usize, canonical: bool) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * k);
        for p in &out {
            let limit = if canonical {
                let used = p.iter().map(|&s| usize::from(s) + 1).max().unwrap_or(0);
                (used + 1).min(k)
            } else {
                k
            };
            for s in 0..limit {
                let mut q = p.clone();
                q.push(s as Symbol);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

fn partition(k: usize, n: usize, canonical: bool) -> Vec<Vec<Symbol>> {
    let mut len = 0;
    let mut chunks = prefixes(k, 0, canonical);
    while len < n && chunks.len() < TARGET_CHUNKS {
        len += 1;
        chunks = prefixes(k, len, canonical);
    }
    chunks
}

fn walk_range<A, F>(
    k: usize,
    n: usize,
    prefix: &[Symbol],
    canonical: bool,
    sizes: &[u64],
    acc: &mut A,
    fold: &F,
) where
    F: Fn(&mut A, &[Symbol], u64),
{
    let mut odometer = Odometer::new(k, n, prefix, canonical, sizes);
    loop {
        fold(acc, &odometer.word, odometer.multiplier());
        if !odometer.advance() {
            break;
        }
    }
}

/// Folds over every word of length `n` (or every canonical representative),
/// merging per-range accumulators deterministically.
pub fn fold_words<A, I, F, M>(
    k: usize,
    n: usize,
    config: &EnumerationConfig,
    identity: I,
    fold: F,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &[Symbol], u64) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    check_budget(k, n, config)?;
    let canonical = config.canonical;
    let sizes = orbit_sizes(k);
    let chunks = partition(k, n, canonical);

    let run_chunk = |prefix: &Vec<Symbol>| {
        let mut acc = identity();
        walk_range(k, n, prefix, canonical, &sizes, &mut acc, &fold);
        acc
    };

    match config.jobs {
        Some(1) => Ok(chunks.iter().map(run_chunk).fold(identity(), &merge)),
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
            Ok(pool.install(|| chunks.par_iter().map(run_chunk).reduce(&identity, &merge)))
        }
        None => Ok(chunks.par_iter().map(run_chunk).reduce(&identity, &merge)),
    }
}

/// Calls `visitor(word, multiplier)` for every word, sequentially and in
/// lexicographic order.
pub fn enumerate_words<V>(
    k: usize,
    n: usize,
    config: &EnumerationConfig,
    mut visitor: V,
) -> Result<()>
where
    V: FnMut(&[Symbol], u64),
{
    check_budget(k, n, config)?;
    let sizes = orbit_sizes(k);
    let mut odometer = Odometer::new(k, n, &[], config.canonical, &sizes);
    loop {
        visitor(&odometer.word, odometer.multiplier());
        if !odometer.advance() {
            return Ok(());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(k: usize, n: usize, canonical: bool) -> Vec<(Vec<Symbol>, u64)> {
        let mut out = Vec::new();
        let config = EnumerationConfig::default().with_canonical(canonical);
        enumerate_words(k, n, &config, |w, m| out.push((w.to_vec(), m))).unwrap();
        out
    }

    #[test]
    fn binary_length_three() {
        let words = collect(2, 3, false);
        assert_eq!(words.len(), 8);
        assert_eq!(words[0].0, vec![0, 0, 0]);
        assert_eq!(words[7].0, vec![1, 1, 1]);
        assert!(words.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn canonical_ternary_length_two() {
        let words = collect(3, 2, true);
        assert_eq!(words, vec![(vec![0, 0], 3), (vec![0, 1], 6)]);
        assert_eq!(words.iter().map(|(_, m)| m).sum::<u64>(), 9);
    }

    #[test]
    fn empty_word_is_visited_once() {
        assert_eq!(collect(2, 0, false), vec![(vec![], 1)]);
        assert_eq!(collect(3, 0, true), vec![(vec![], 1)]);
    }

    #[test]
    fn canonical_multipliers_cover_the_space() {
        for k in 2..=4 {
            for n in 0..=7 {
                let words = collect(k, n, true);
                assert_eq!(words.len() as u128, canonical_state_count(k, n));
                let total: u64 = words.iter().map(|(_, m)| m).sum();
                assert_eq!(u128::from(total), plain_state_count(k, n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn canonical_words_have_restricted_growth() {
        for (w, _) in collect(4, 6, true) {
            let mut next = 0;
            for s in w {
                assert!(s <= next);
                if s == next {
                    next += 1;
                }
            }
        }
    }

    #[test]
    fn partitioned_fold_matches_sequential() {
        for canonical in [false, true] {
            for jobs in [Some(1), Some(3), None] {
                let config = EnumerationConfig::default()
                    .with_canonical(canonical)
                    .with_jobs(jobs);
                let (count, weight, checksum) = fold_words(
                    3,
                    9,
                    &config,
                    || (0u64, 0u64, 0u64),
                    |acc, w, m| {
                        acc.0 += 1;
                        acc.1 += m;
                        acc.2 = acc
                            .2
                            .wrapping_add(w.iter().fold(0u64, |h, &s| h * 3 + u64::from(s)));
                    },
                    |a, b| (a.0 + b.0, a.1 + b.1, a.2.wrapping_add(b.2)),
                )
                .unwrap();
                assert_eq!(weight, 19683);
                assert_eq!(u128::from(count), state_count(3, 9, canonical));
                if !canonical {
                    assert_eq!(checksum, (0..19683u64).sum::<u64>());
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let config = EnumerationConfig::default().with_max_states(1000);
        assert!(matches!(
            fold_words(2, 10, &config, || 0u8, |_, _, _| {}, |a, _| a),
            Err(Error::BudgetExceeded {
                states: 1024,
                limit: 1000
            })
        ));
        assert!(enumerate_words(2, 9, &config, |_, _| {}).is_ok());
        assert!(check_budget(1, 3, &config).is_err());
    }

    #[test]
    fn stirling_sums() {
        // Bell numbers when k >= n
        assert_eq!(canonical_state_count(10, 5), 52);
        assert_eq!(canonical_state_count(2, 5), 16);
        assert_eq!(plain_state_count(256, 40), u128::MAX);
    }
}
