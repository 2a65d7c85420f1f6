//! OEIS b-file reading: one `index value` pair per line, `#` comments.

use std::fmt::Write as _;
use std::path::Path;

use cwl_core::Count;

use crate::error::CliError;

/// Closed binary words, offset 0.
pub const CLOSED_SNAPSHOT: &str = include_str!("../data/b226452.txt");
/// Privileged binary words, offset 0.
pub const PRIVILEGED_SNAPSHOT: &str = include_str!("../data/b231208.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFile {
    pub offset: usize,
    pub terms: Vec<(usize, Count)>,
}

fn parse_count(s: &str) -> Option<Count> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl SequenceFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut terms: Vec<(usize, Count)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || {
                CliError::Parse(format!(
                    "line {}: expected `index value`, got {raw:?}",
                    lineno + 1
                ))
            };
            let mut fields = line.split_whitespace();
            let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(bad());
            };
            let index: usize = index.parse().map_err(|_| bad())?;
            let value = parse_count(value).ok_or_else(bad)?;
            if let Some(&(prev, _)) = terms.last() {
                if index != prev + 1 {
                    return Err(CliError::Parse(format!(
                        "line {}: index {index} does not follow {prev}",
                        lineno + 1
                    )));
                }
            }
            terms.push((index, value));
        }
        let offset = terms
            .first()
            .map(|&(i, _)| i)
            .ok_or_else(|| CliError::Parse("b-file contains no terms".into()))?;
        Ok(Self { offset, terms })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn get(&self, index: usize) -> Option<&Count> {
        index
            .checked_sub(self.offset)
            .and_then(|i| self.terms.get(i))
            .map(|(_, c)| c)
    }

    pub fn last_index(&self) -> usize {
        self.terms.last().map(|&(i, _)| i).unwrap_or(self.offset)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, c) in &self.terms {
            let _ = writeln!(out, "{i} {c}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let f = SequenceFile::parse("# A000001\n\n3 10\n4 20\n  5   30  \n").unwrap();
        assert_eq!(f.offset, 3);
        assert_eq!(f.get(4), Some(&Count::from(20u32)));
        assert_eq!(f.get(2), None);
        assert_eq!(f.last_index(), 5);
        assert_eq!(SequenceFile::parse(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn rejects_malformed_lines() {
        for text in [
            "abc\n",
            "1\n",
            "1 2 3\n",
            "1 -2\n",
            "1 2x\n",
            "0 1\n2 3\n",
            "1 1\n1 1\n",
            "# only\n",
        ] {
            assert!(
                matches!(SequenceFile::parse(text), Err(CliError::Parse(_))),
                "{text:?}"
            );
        }
    }

    #[test]
    fn bundled_snapshots_parse() {
        let closed = SequenceFile::parse(CLOSED_SNAPSHOT).unwrap();
        assert_eq!(closed.offset, 0);
        assert_eq!(closed.get(10), Some(&Count::from(204u32)));
        let privileged = SequenceFile::parse(PRIVILEGED_SNAPSHOT).unwrap();
        assert_eq!(privileged.get(10), Some(&Count::from(60u32)));
        assert_eq!(closed.last_index(), privileged.last_index());
    }
}
