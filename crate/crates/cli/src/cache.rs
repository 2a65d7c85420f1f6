//! JSON results cache for count tables.
//!
//! One file per `(kind, k, n)` row:
//! `{"kind", "k", "provenance", "entries": [{"n", "t", "count"}]}` with counts
//! as decimal strings.

use std::path::{Path, PathBuf};

use cwl_core::table::{CountKind, CountTable, Provenance};
use cwl_core::Count;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const DEFAULT_DIR: &str = ".cwl-cache";

#[derive(Debug, Serialize, Deserialize)]
struct EntryDoc {
    n: usize,
    t: usize,
    count: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableDoc {
    kind: String,
    k: usize,
    provenance: String,
    entries: Vec<EntryDoc>,
}

pub fn to_json(table: &CountTable) -> String {
    let doc = TableDoc {
        kind: table.kind().to_string(),
        k: table.k(),
        provenance: table.provenance().to_string(),
        entries: table
            .entries()
            .map(|(n, t, c)| EntryDoc {
                n,
                t,
                count: c.to_string(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("table documents always serialize")
}

pub fn from_json(text: &str) -> Result<CountTable, CliError> {
    let doc: TableDoc = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let kind: CountKind = doc.kind.parse()?;
    let provenance: Provenance = doc.provenance.parse()?;
    let mut table = CountTable::new(kind, doc.k, provenance);
    for entry in doc.entries {
        if entry.count.is_empty() || !entry.count.bytes().all(|b| b.is_ascii_digit()) {
            return Err(CliError::Parse(format!(
                "count {:?} at n={}, t={} is not a decimal integer",
                entry.count, entry.n, entry.t
            )));
        }
        let count: Count = entry
            .count
            .parse()
            .map_err(|_| CliError::Parse(format!("bad count {:?}", entry.count)))?;
        table.insert(entry.n, entry.t, count);
    }
    Ok(table)
}

/// Outcome of a cache lookup.
#[derive(Debug)]
pub enum Lookup {
    Hit(CountTable),
    Miss,
    /// The file existed but was unusable; the message explains why.
    Corrupt(String),
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn row_path(&self, kind: CountKind, k: usize, n: usize) -> PathBuf {
        self.dir.join(format!("{kind}-k{k}-n{n}.json"))
    }

    /// Writes one row of `table` (the entries for `n`).
    pub fn store(&self, table: &CountTable, n: usize) -> Result<PathBuf, CliError> {
        std::fs::create_dir_all(&self.dir)?;
        let path = self.row_path(table.kind(), table.k(), n);
        std::fs::write(&path, to_json(&table.restricted_to(n)))?;
        Ok(path)
    }

    /// Loads the row for `(kind, k, n)`, accepting it only if it holds exactly
    /// the entries `t = 1..n-1` for that row.
    pub fn load(&self, kind: CountKind, k: usize, n: usize) -> Lookup {
        let path = self.row_path(kind, k, n);
        let text = match std::fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => return Lookup::Corrupt(format!("{}: {e}", path.display())),
        };
        let table = match from_json(&text) {
            Ok(table) => table,
            Err(e) => return Lookup::Corrupt(format!("{}: {e}", path.display())),
        };
        let expected: Vec<(usize, usize)> = (1..n).map(|t| (n, t)).collect();
        let actual: Vec<(usize, usize)> = table.entries().map(|(n, t, _)| (n, t)).collect();
        if table.kind() != kind || table.k() != k || actual != expected {
            return Lookup::Corrupt(format!(
                "{}: does not describe the {kind} row k={k}, n={n}",
                path.display()
            ));
        }
        Lookup::Hit(table)
    }
}
