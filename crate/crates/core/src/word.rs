//! Words over `{0, 1, ..., k-1}`, their borders, and the closed/privileged
//! classification built on top of the border table.
//!
//! A border of `w` is a non-empty proper prefix that is also a suffix. `w` is
//! closed when `|w| <= 1` or its longest border occurs exactly twice in `w`;
//! it is privileged when `|w| <= 1` or it is closed by a privileged border.

use std::fmt;

use num_traits::{One, Zero};

use crate::{Count, Error, Result};

pub type Symbol = u8;

/// Largest supported alphabet; symbols are stored as bytes.
pub const MAX_ALPHABET: usize = 256;

/// Finite word over a `k`-letter alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<Symbol>,
    k: usize,
}

pub(crate) fn check_alphabet(k: usize) -> Result<()> {
    if (2..=MAX_ALPHABET).contains(&k) {
        Ok(())
    } else {
        Err(Error::AlphabetSize(k))
    }
}

impl Word {
    pub fn new(symbols: Vec<Symbol>, k: usize) -> Result<Self> {
        check_alphabet(k)?;
        if let Some((position, &symbol)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| usize::from(s) >= k)
        {
            return Err(Error::SymbolOutOfRange {
                position,
                symbol: symbol.into(),
                k,
            });
        }
        Ok(Self { symbols, k })
    }

    pub fn empty(k: usize) -> Result<Self> {
        Self::new(Vec::new(), k)
    }

    /// `symbol` repeated `len` times.
    pub fn run(symbol: Symbol, len: usize, k: usize) -> Result<Self> {
        Self::new(vec![symbol; len], k)
    }

    /// Parses a string of decimal digits, e.g. `"0110"`, as symbol indices.
    pub fn from_digits(digits: &str, k: usize) -> Result<Self> {
        let mut symbols = Vec::with_capacity(digits.len());
        for (position, c) in digits.chars().enumerate() {
            let d = c.to_digit(10).ok_or_else(|| {
                Error::Precondition(format!("'{c}' at position {position} is not a digit"))
            })?;
            symbols.push(d as Symbol);
        }
        Self::new(symbols, k)
    }

    /// Maps ASCII letters and digits to symbol indices in order of first
    /// appearance. When `k` is omitted the alphabet is the set of distinct
    /// characters, padded to at least two letters.
    pub fn from_text(text: &str, k: Option<usize>) -> Result<Self> {
        let mut seen: Vec<char> = Vec::new();
        let mut symbols = Vec::with_capacity(text.len());
        for (position, c) in text.chars().enumerate() {
            if !c.is_ascii_alphanumeric() {
                return Err(Error::Precondition(format!(
                    "character {c:?} at position {position} is not an ASCII letter or digit"
                )));
            }
            let index = match seen.iter().position(|&s| s == c) {
                Some(i) => i,
                None => {
                    seen.push(c);
                    seen.len() - 1
                }
            };
            if index >= MAX_ALPHABET {
                return Err(Error::AlphabetSize(index + 1));
            }
            symbols.push(index as Symbol);
        }
        let k = match k {
            Some(k) if k < seen.len() => {
                check_alphabet(k)?;
                return Err(Error::TooManyLetters {
                    distinct: seen.len(),
                    k,
                });
            }
            Some(k) => k,
            None => seen.len().max(2),
        };
        Self::new(symbols, k)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    /// Length-`len` prefix; panics if `len > self.len()`.
    pub fn prefix(&self, len: usize) -> Word {
        Word {
            symbols: self.symbols[..len].to_vec(),
            k: self.k,
        }
    }

    /// Applies a permutation of the alphabet given as `perm[old] = new`.
    pub fn permuted(&self, perm: &[Symbol]) -> Result<Word> {
        if perm.len() != self.k {
            return Err(Error::Precondition(format!(
                "permutation has {} entries, alphabet has {}",
                perm.len(),
                self.k
            )));
        }
        Word::new(
            self.symbols.iter().map(|&s| perm[usize::from(s)]).collect(),
            self.k,
        )
    }

    /// Rank of the word read as a base-`k` numeral, most significant first.
    pub fn rank(&self) -> u128 {
        self.symbols
            .iter()
            .fold(0u128, |acc, &s| acc * self.k as u128 + u128::from(s))
    }

    /// Inverse of [`Word::rank`] for a fixed length.
    pub fn from_rank(mut rank: u128, len: usize, k: usize) -> Result<Word> {
        check_alphabet(k)?;
        let mut symbols = vec![0; len];
        for slot in symbols.iter_mut().rev() {
            *slot = (rank % k as u128) as Symbol;
            rank /= k as u128;
        }
        if rank != 0 {
            return Err(Error::Precondition(format!(
                "rank does not fit in {len} base-{k} digits"
            )));
        }
        Ok(Word { symbols, k })
    }
}

fn symbol_char(s: Symbol) -> Option<char> {
    char::from_digit(u32::from(s), 36)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k <= 36 {
            for &s in &self.symbols {
                write!(f, "{}", symbol_char(s).unwrap_or('?'))?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

/// Longest-proper-border length for every prefix of a word (the KMP prefix
/// function).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BorderTable {
    longest_border: Vec<usize>,
}

/// Fills `out` with the prefix function of `symbols`, reusing its allocation.
pub fn fill_border_table(symbols: &[Symbol], out: &mut Vec<usize>) {
    out.clear();
    out.resize(symbols.len(), 0);
    let mut len = 0usize;
    for i in 1..symbols.len() {
        while len > 0 && symbols[i] != symbols[len] {
            len = out[len - 1];
        }
        if symbols[i] == symbols[len] {
            len += 1;
        }
        out[i] = len;
    }
}

pub fn border_table(w: &Word) -> BorderTable {
    let mut longest_border = Vec::with_capacity(w.len());
    fill_border_table(w.symbols(), &mut longest_border);
    BorderTable { longest_border }
}

impl BorderTable {
    pub fn entries(&self) -> &[usize] {
        &self.longest_border
    }

    /// Length of the longest border of the whole word (0 if unbordered or empty).
    pub fn longest(&self) -> usize {
        self.longest_border.last().copied().unwrap_or(0)
    }

    /// All border lengths of the whole word, longest first.
    pub fn border_lengths(&self) -> BorderChain<'_> {
        BorderChain {
            table: &self.longest_border,
            current: self.longest(),
        }
    }
}

/// Iterator over the border lengths of a word in decreasing order.
#[derive(Debug, Clone)]
pub struct BorderChain<'a> {
    table: &'a [usize],
    current: usize,
}

impl Iterator for BorderChain<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.current == 0 {
            return None;
        }
        let len = self.current;
        self.current = self.table[len - 1];
        Some(len)
    }
}

/// Number of (possibly overlapping) occurrences of `u` as a factor of `w`.
pub fn occurrences(w: &Word, u: &Word) -> Result<usize> {
    if u.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if w.alphabet_size() != u.alphabet_size() {
        return Err(Error::AlphabetMismatch {
            word: w.alphabet_size(),
            pattern: u.alphabet_size(),
        });
    }
    let pattern = u.symbols();
    let table = border_table(u);
    let table = table.entries();
    let mut matched = 0usize;
    let mut count = 0usize;
    for &c in w.symbols() {
        while matched > 0 && (matched == pattern.len() || pattern[matched] != c) {
            matched = table[matched - 1];
        }
        if pattern[matched] == c {
            matched += 1;
        }
        if matched == pattern.len() {
            count += 1;
        }
    }
    Ok(count)
}

/// Outcome of the closure test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Closure {
    pub closed: bool,
    /// Length of the closing border; `None` when not closed or `|w| <= 1`.
    pub border: Option<usize>,
}

/// Per-word classification produced by [`Classifier`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub closure: Closure,
    pub privileged: bool,
}

/// Classifies words using preallocated buffers.
///
/// For a prefix of length `m >= 2` with longest border `L = pi[m-1]`, the border
/// occurs strictly inside the prefix iff some earlier position `j <= m-2` has
/// `pi[j] >= L`. Keeping the running maximum of the prefix function therefore
/// makes the closure test O(1) per prefix, and privilege costs one pass down
/// the closing-border chain.
#[derive(Debug, Default, Clone)]
pub struct Classifier {
    border: Vec<usize>,
    running_max: Vec<usize>,
}

impl Classifier {
    pub fn new() -> Self {
        Self::default()
    }

    fn load(&mut self, symbols: &[Symbol]) {
        fill_border_table(symbols, &mut self.border);
        self.running_max.clear();
        let mut best = 0;
        for &b in &self.border {
            best = best.max(b);
            self.running_max.push(best);
        }
    }

    /// Closing border length of the length-`m` prefix, if that prefix is
    /// closed and `m >= 2`.
    fn closing_border(&self, m: usize) -> Option<usize> {
        let longest = self.border[m - 1];
        (longest > 0 && self.running_max[m - 2] < longest).then_some(longest)
    }

    pub fn classify(&mut self, symbols: &[Symbol]) -> Classification {
        let n = symbols.len();
        if n <= 1 {
            return Classification {
                closure: Closure {
                    closed: true,
                    border: None,
                },
                privileged: true,
            };
        }
        self.load(symbols);
        let border = self.closing_border(n);
        let mut privileged = border.is_some();
        let mut m = border.unwrap_or(0);
        while privileged && m >= 2 {
            match self.closing_border(m) {
                Some(b) => m = b,
                None => privileged = false,
            }
        }
        Classification {
            closure: Closure {
                closed: border.is_some(),
                border,
            },
            privileged,
        }
    }
}

pub fn is_closed(w: &Word) -> Closure {
    Classifier::new().classify(w.symbols()).closure
}

pub fn is_privileged(w: &Word) -> bool {
    Classifier::new().classify(w.symbols()).privileged
}

/// Auto-correlation `a_1 ... a_t` of a non-empty word: `a_1` is the
/// full-length self-match and, for `i >= 2`, `a_i = 1` iff the word has a border
/// of length `t - i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutoCorrelation {
    bits: Vec<bool>,
}

pub fn autocorrelation(u: &Word) -> Result<AutoCorrelation> {
    if u.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let t = u.len();
    let mut bits = vec![false; t];
    bits[0] = true;
    for len in border_table(u).border_lengths() {
        bits[t - len] = true;
    }
    Ok(AutoCorrelation { bits })
}

impl AutoCorrelation {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// `bits()[i - 1]` is `a_i`.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Evaluates `f(z) = sum_{i=0}^{t-1} a_{t-i} z^i` exactly by Horner's rule.
    pub fn eval(&self, z: &Count) -> Count {
        self.bits.iter().fold(Count::zero(), |acc, &bit| {
            let acc = acc * z;
            if bit {
                acc + Count::one()
            } else {
                acc
            }
        })
    }
}

impl fmt::Display for AutoCorrelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &bit in &self.bits {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn correlation_poly_eval(a: &AutoCorrelation, z: u64) -> Count {
    a.eval(&Count::from(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(s: &str) -> Word {
        Word::from_text(s, None).unwrap()
    }

    fn bin(s: &str) -> Word {
        Word::from_digits(s, 2).unwrap()
    }

    #[test]
    fn alfalfa_border_chain() {
        let table = border_table(&text("alfalfa"));
        assert_eq!(table.longest(), 4);
        assert_eq!(table.border_lengths().collect::<Vec<_>>(), vec![4, 1]);
    }

    #[test]
    fn unbordered_and_runs() {
        assert_eq!(border_table(&bin("01")).longest(), 0);
        let run = border_table(&bin("0000"));
        assert_eq!(run.entries(), &[0, 1, 2, 3]);
        assert_eq!(run.border_lengths().collect::<Vec<_>>(), vec![3, 2, 1]);
        assert_eq!(border_table(&Word::empty(2).unwrap()).longest(), 0);
    }

    #[test]
    fn occurrence_counts() {
        let w = text("entanglement");
        // "ent" is the first three symbols under the first-appearance map
        assert_eq!(occurrences(&w, &w.prefix(3)).unwrap(), 2);
        let eerie = text("eerie");
        assert_eq!(occurrences(&eerie, &eerie.prefix(1)).unwrap(), 3);
        assert_eq!(occurrences(&bin("0000"), &bin("00")).unwrap(), 3);
        assert_eq!(occurrences(&bin("0"), &bin("00")).unwrap(), 0);
    }

    #[test]
    fn occurrence_errors() {
        assert_eq!(
            occurrences(&bin("01"), &Word::empty(2).unwrap()),
            Err(Error::EmptyPattern)
        );
        let ternary = Word::from_digits("0", 3).unwrap();
        assert!(matches!(
            occurrences(&bin("01"), &ternary),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn example_words() {
        assert_eq!(
            is_closed(&text("entanglement")),
            Closure {
                closed: true,
                border: Some(3)
            }
        );
        assert!(!is_privileged(&text("entanglement")));

        assert_eq!(is_closed(&text("alfalfa")).border, Some(4));
        assert!(is_privileged(&text("alfalfa")));
        assert!(is_privileged(&text("alfa")));

        assert_eq!(
            is_closed(&text("eerie")),
            Closure {
                closed: false,
                border: None
            }
        );
        assert!(!is_privileged(&text("eerie")));

        assert_eq!(is_closed(&text("aa")).border, Some(1));
    }

    #[test]
    fn short_words_are_closed_and_privileged() {
        for w in [Word::empty(2).unwrap(), bin("0"), bin("1")] {
            assert_eq!(
                is_closed(&w),
                Closure {
                    closed: true,
                    border: None
                }
            );
            assert!(is_privileged(&w));
        }
        assert!(!is_closed(&bin("01")).closed);
    }

    #[test]
    fn deep_privilege_chain() {
        // 0^n is closed by 0^{n-1}, which is closed by 0^{n-2}, and so on.
        assert!(is_privileged(&Word::run(0, 200, 2).unwrap()));
        assert!(!is_privileged(&bin("0100110")));
    }

    #[test]
    fn autocorrelation_examples() {
        let a = autocorrelation(&text("entente")).unwrap();
        assert_eq!(a.to_string(), "1001001");
        assert_eq!(correlation_poly_eval(&a, 2), Count::from(73u32));

        let run = autocorrelation(&bin("0000")).unwrap();
        assert_eq!(run.to_string(), "1111");
        assert_eq!(correlation_poly_eval(&run, 3), Count::from((81u32 - 1) / 2));

        let a = autocorrelation(&bin("01")).unwrap();
        assert_eq!(a.to_string(), "10");
        assert_eq!(correlation_poly_eval(&a, 2), Count::from(2u32));

        assert_eq!(
            autocorrelation(&Word::empty(2).unwrap()),
            Err(Error::EmptyPattern)
        );
    }

    #[test]
    fn text_mapping() {
        let w = text("entanglement");
        assert_eq!(w.alphabet_size(), 7);
        assert_eq!(&w.symbols()[..4], &[0, 1, 2, 3]);
        assert_eq!(text("a").alphabet_size(), 2);
        assert!(matches!(
            Word::from_text("abc", Some(2)),
            Err(Error::TooManyLetters { distinct: 3, k: 2 })
        ));
        assert!(Word::from_text("ab-c", None).is_err());
        assert_eq!(Word::from_text("ab", Some(5)).unwrap().alphabet_size(), 5);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Word::new(vec![0, 2], 2),
            Err(Error::SymbolOutOfRange { position: 1, .. })
        ));
        assert_eq!(Word::new(vec![], 1), Err(Error::AlphabetSize(1)));
        assert!(Word::from_digits("012", 2).is_err());
    }

    #[test]
    fn rank_round_trip() {
        let w = Word::from_digits("2101", 3).unwrap();
        assert_eq!(w.rank(), 2 * 27 + 9 + 1);
        assert_eq!(Word::from_rank(w.rank(), 4, 3).unwrap(), w);
        assert!(Word::from_rank(81, 4, 3).is_err());
    }
}
