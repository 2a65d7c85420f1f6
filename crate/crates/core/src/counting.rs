//! Exact counts by exhaustive enumeration.
//!
//! * `C_k(n,t)`: length-`n` words closed by a length-`t` word.
//! * `P_k(n,t)`: length-`n` privileged words closed by a length-`t` privileged word.
//! * `B_k(n,u)`: length-`n` words closed by `u`.
//! * `A_k(n,u)`: length-`n` words avoiding `u` as a factor.

use std::collections::BTreeMap;

use num_traits::Pow;

use crate::enumerate::{fold_words, EnumerationConfig};
use crate::table::{CountKind, CountTable, Provenance};
use crate::word::{check_alphabet, fill_border_table, Classifier, Symbol, Word};
use crate::{Count, Error, Result};

/// One row of closure statistics for fixed `k` and `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureRow {
    pub k: usize,
    pub n: usize,
    /// `closed_by_length[t] = C_k(n,t)` for `0 <= t < n`; entry 0 is always 0.
    pub closed_by_length: Vec<Count>,
    /// `privileged_by_length[t] = P_k(n,t)`.
    pub privileged_by_length: Vec<Count>,
    /// `C_k(n)` counted directly from the closure flag.
    pub closed_total: Count,
    /// `P_k(n)` counted directly from the privilege flag.
    pub privileged_total: Count,
}

impl ClosureRow {
    pub fn closed(&self, t: usize) -> Count {
        self.closed_by_length.get(t).cloned().unwrap_or_default()
    }

    pub fn privileged(&self, t: usize) -> Count {
        self.privileged_by_length
            .get(t)
            .cloned()
            .unwrap_or_default()
    }

    fn by_length(values: &[Count]) -> BTreeMap<usize, Count> {
        values
            .iter()
            .enumerate()
            .skip(1)
            .map(|(t, c)| (t, c.clone()))
            .collect()
    }

    pub fn closed_map(&self) -> BTreeMap<usize, Count> {
        Self::by_length(&self.closed_by_length)
    }

    pub fn privileged_map(&self) -> BTreeMap<usize, Count> {
        Self::by_length(&self.privileged_by_length)
    }

    /// Writes this row's per-length entries into `table`, which must be of kind
    /// closed or privileged for the same alphabet.
    pub fn record(&self, table: &mut CountTable) -> Result<()> {
        if table.k() != self.k {
            return Err(Error::Precondition(format!(
                "table is for k={}, row is for k={}",
                table.k(),
                self.k
            )));
        }
        let values = match table.kind() {
            CountKind::Closed => &self.closed_by_length,
            CountKind::Privileged => &self.privileged_by_length,
            other => {
                return Err(Error::Precondition(format!(
                    "cannot record a closure row into a {other} table"
                )))
            }
        };
        for (t, c) in values.iter().enumerate().skip(1) {
            table.insert(self.n, t, c.clone());
        }
        Ok(())
    }
}

#[derive(Clone)]
struct RowAcc {
    classifier: Classifier,
    // [closed_total, privileged_total, closed t=0..n, privileged t=0..n]
    tallies: Vec<u64>,
}

/// Classifies every length-`n` word over `Σ_k` and tallies closures by length.
pub fn closure_row(k: usize, n: usize, config: &EnumerationConfig) -> Result<ClosureRow> {
    check_alphabet(k)?;
    let width = n.max(1);
    let acc = fold_words(
        k,
        n,
        config,
        || RowAcc {
            classifier: Classifier::new(),
            tallies: vec![0; 2 + 2 * width],
        },
        |acc, w, weight| {
            let class = acc.classifier.classify(w);
            if class.closure.closed {
                acc.tallies[0] += weight;
                if let Some(t) = class.closure.border {
                    acc.tallies[2 + t] += weight;
                    if class.privileged {
                        acc.tallies[2 + width + t] += weight;
                    }
                }
            }
            if class.privileged {
                acc.tallies[1] += weight;
            }
        },
        |mut a, b| {
            for (x, y) in a.tallies.iter_mut().zip(b.tallies) {
                *x += y;
            }
            a
        },
    )?;
    let tallies = acc.tallies;
    let to_counts = |range: std::ops::Range<usize>| -> Vec<Count> {
        tallies[range].iter().map(|&x| Count::from(x)).collect()
    };
    let (closed_by_length, privileged_by_length) = if n <= 1 {
        (Vec::new(), Vec::new())
    } else {
        (to_counts(2..2 + n), to_counts(2 + width..2 + width + n))
    };
    Ok(ClosureRow {
        k,
        n,
        closed_by_length,
        privileged_by_length,
        closed_total: Count::from(tallies[0]),
        privileged_total: Count::from(tallies[1]),
    })
}

fn require_min_length(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::Precondition(format!(
            "n must be at least {min}, got {n}"
        )));
    }
    Ok(())
}

/// `t ↦ C_k(n,t)` for `1 <= t <= n-1`, zeros included.
pub fn count_closed_by_length(
    k: usize,
    n: usize,
    config: &EnumerationConfig,
) -> Result<BTreeMap<usize, Count>> {
    require_min_length(n, 2)?;
    Ok(closure_row(k, n, config)?.closed_map())
}

/// `t ↦ P_k(n,t)` for `1 <= t <= n-1`, zeros included.
pub fn count_privileged_by_length(
    k: usize,
    n: usize,
    config: &EnumerationConfig,
) -> Result<BTreeMap<usize, Count>> {
    require_min_length(n, 2)?;
    Ok(closure_row(k, n, config)?.privileged_map())
}

pub fn count_closed(k: usize, n: usize, config: &EnumerationConfig) -> Result<Count> {
    if n <= 1 {
        check_alphabet(k)?;
        return Ok(Count::from(k).pow(n));
    }
    Ok(closure_row(k, n, config)?.closed_total)
}

pub fn count_privileged(k: usize, n: usize, config: &EnumerationConfig) -> Result<Count> {
    if n <= 1 {
        check_alphabet(k)?;
        return Ok(Count::from(k).pow(n));
    }
    Ok(closure_row(k, n, config)?.privileged_total)
}

/// Builds closed or privileged count tables for every `n` in `lengths`.
pub fn closure_tables(
    k: usize,
    lengths: impl IntoIterator<Item = usize>,
    config: &EnumerationConfig,
) -> Result<(CountTable, CountTable)> {
    let mut closed = CountTable::new(CountKind::Closed, k, Provenance::BruteForce);
    let mut privileged = CountTable::new(CountKind::Privileged, k, Provenance::BruteForce);
    for n in lengths {
        let row = closure_row(k, n, config)?;
        row.record(&mut closed)?;
        row.record(&mut privileged)?;
    }
    Ok((closed, privileged))
}

struct PatternAcc {
    classifier: Classifier,
    buffer: Vec<Symbol>,
    count: u64,
}

/// `B_k(n,u)`: enumerates the `k^{n-|u|}` words with prefix `u` and keeps
/// those whose closing border has length `|u|`.
pub fn count_closed_by(n: usize, u: &Word, config: &EnumerationConfig) -> Result<Count> {
    let t = u.len();
    if t == 0 || t > n {
        return Err(Error::Precondition(format!(
            "pattern length must satisfy 1 <= |u| <= n, got |u|={t}, n={n}"
        )));
    }
    let config = config.with_canonical(false);
    let acc = fold_words(
        u.alphabet_size(),
        n - t,
        &config,
        || PatternAcc {
            classifier: Classifier::new(),
            buffer: u.symbols().to_vec(),
            count: 0,
        },
        |acc, tail, _| {
            acc.buffer.truncate(t);
            acc.buffer.extend_from_slice(tail);
            if acc.classifier.classify(&acc.buffer).closure.border == Some(t) {
                acc.count += 1;
            }
        },
        |mut a, b| {
            a.count += b.count;
            a
        },
    )?;
    Ok(Count::from(acc.count))
}

/// `B_k(n,u)` for every length-`t` pattern `u` in one pass over `Σ_k^n`,
/// indexed by [`Word::rank`] of `u`.
pub fn count_closed_by_all(
    k: usize,
    n: usize,
    t: usize,
    config: &EnumerationConfig,
) -> Result<Vec<Count>> {
    if t == 0 || t > n {
        return Err(Error::Precondition(format!(
            "pattern length must satisfy 1 <= t <= n, got t={t}, n={n}"
        )));
    }
    let patterns = crate::enumerate::plain_state_count(k, t);
    let patterns = usize::try_from(patterns)
        .ok()
        .filter(|&p| u128::try_from(p).unwrap_or(u128::MAX) <= u128::from(config.max_states))
        .ok_or(Error::BudgetExceeded {
            states: patterns,
            limit: config.max_states,
        })?;
    let config = config.with_canonical(false);
    let acc = fold_words(
        k,
        n,
        &config,
        || (Classifier::new(), vec![0u64; patterns]),
        |(classifier, tallies), w, _| {
            if classifier.classify(w).closure.border == Some(t) {
                let rank = w[..t].iter().fold(0usize, |r, &s| r * k + usize::from(s));
                tallies[rank] += 1;
            }
        },
        |mut a, b| {
            for (x, y) in a.1.iter_mut().zip(b.1) {
                *x += y;
            }
            a
        },
    )?;
    Ok(acc.1.into_iter().map(Count::from).collect())
}

/// Pattern matcher reused across words: prefix function of the pattern plus
/// the scan state.
struct Avoidance {
    pattern: Vec<Symbol>,
    table: Vec<usize>,
}

impl Avoidance {
    fn new(pattern: &[Symbol]) -> Self {
        let mut table = Vec::new();
        fill_border_table(pattern, &mut table);
        Self {
            pattern: pattern.to_vec(),
            table,
        }
    }

    fn contains(&self, text: &[Symbol]) -> bool {
        let mut matched = 0usize;
        for &c in text {
            while matched > 0 && self.pattern[matched] != c {
                matched = self.table[matched - 1];
            }
            if self.pattern[matched] == c {
                matched += 1;
                if matched == self.pattern.len() {
                    return true;
                }
            }
        }
        false
    }
}

/// `A_k(n,u)` by enumeration.
pub fn count_avoiding(n: usize, u: &Word, config: &EnumerationConfig) -> Result<Count> {
    if u.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let matcher = Avoidance::new(u.symbols());
    let config = config.with_canonical(false);
    let count = fold_words(
        u.alphabet_size(),
        n,
        &config,
        || 0u64,
        |acc, w, _| {
            if !matcher.contains(w) {
                *acc += 1;
            }
        },
        |a, b| a + b,
    )?;
    Ok(Count::from(count))
}
