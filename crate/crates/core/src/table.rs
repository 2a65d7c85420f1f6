use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::{Count, Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CountKind {
    Closed,
    Privileged,
    ClosedByPattern,
    Avoid,
}

impl CountKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CountKind::Closed => "closed",
            CountKind::Privileged => "privileged",
            CountKind::ClosedByPattern => "closed_by_pattern",
            CountKind::Avoid => "avoid",
        }
    }
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CountKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "closed" => Ok(CountKind::Closed),
            "privileged" => Ok(CountKind::Privileged),
            "closed_by_pattern" => Ok(CountKind::ClosedByPattern),
            "avoid" => Ok(CountKind::Avoid),
            other => Err(Error::Precondition(format!("unknown count kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    BruteForce,
    Recurrence,
    ClosedForm,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::BruteForce => "brute_force",
            Provenance::Recurrence => "recurrence",
            Provenance::ClosedForm => "closed_form",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "brute_force" => Ok(Provenance::BruteForce),
            "recurrence" => Ok(Provenance::Recurrence),
            "closed_form" => Ok(Provenance::ClosedForm),
            other => Err(Error::Precondition(format!("unknown provenance {other:?}"))),
        }
    }
}

/// Exact counts keyed by `(n, column)`.
///
/// The column is the closing-border length `t` for closed and privileged
/// tables, the run length `t` of `0^t` for avoid tables, and the base-`k` rank
/// of the pattern for closed-by-pattern tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    kind: CountKind,
    k: usize,
    provenance: Provenance,
    entries: BTreeMap<(usize, usize), Count>,
}

impl CountTable {
    pub fn new(kind: CountKind, k: usize, provenance: Provenance) -> Self {
        Self {
            kind,
            k,
            provenance,
            entries: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> CountKind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn insert(&mut self, n: usize, column: usize, count: Count) -> Option<Count> {
        self.entries.insert((n, column), count)
    }

    pub fn get(&self, n: usize, column: usize) -> Option<&Count> {
        self.entries.get(&(n, column))
    }

    /// Entry value with absent cells read as zero.
    pub fn value(&self, n: usize, column: usize) -> Count {
        self.get(n, column).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries sorted by `(n, column)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Count)> + '_ {
        self.entries.iter().map(|(&(n, t), c)| (n, t, c))
    }

    pub fn lengths(&self) -> Vec<usize> {
        let mut ns: Vec<usize> = self.entries.keys().map(|&(n, _)| n).collect();
        ns.dedup();
        ns
    }

    pub fn row_sum(&self, n: usize) -> Count {
        self.entries
            .range((n, 0)..=(n, usize::MAX))
            .map(|(_, c)| c)
            .sum()
    }

    /// Returns the lengths `n > 1` whose row sum disagrees with `totals[n]`.
    pub fn sum_identity_violations(&self, totals: &BTreeMap<usize, Count>) -> Vec<usize> {
        totals
            .iter()
            .filter(|(&n, total)| n > 1 && self.row_sum(n) != **total)
            .map(|(&n, _)| n)
            .collect()
    }

    /// Keeps the entries for `n`, dropping all others.
    pub fn restricted_to(&self, n: usize) -> CountTable {
        CountTable {
            kind: self.kind,
            k: self.k,
            provenance: self.provenance,
            entries: self
                .entries
                .range((n, 0)..=(n, usize::MAX))
                .map(|(&key, c)| (key, c.clone()))
                .collect(),
        }
    }

    /// Copies every entry of `other` into `self`.
    pub fn merge(&mut self, other: &CountTable) {
        for (n, t, c) in other.entries() {
            self.insert(n, t, c.clone());
        }
    }
}
