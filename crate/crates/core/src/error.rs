use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be between 2 and 256, got {0}")]
    AlphabetSize(usize),

    #[error("symbol {symbol} at position {position} is not below alphabet size {k}")]
    SymbolOutOfRange {
        position: usize,
        symbol: usize,
        k: usize,
    },

    #[error("word uses {distinct} distinct letters but alphabet size is {k}")]
    TooManyLetters { distinct: usize, k: usize },

    #[error("pattern must be non-empty")]
    EmptyPattern,

    #[error("alphabet mismatch: word over {word} letters, pattern over {pattern}")]
    AlphabetMismatch { word: usize, pattern: usize },

    #[error("enumeration of {states} words exceeds the budget of {limit}")]
    BudgetExceeded { states: u128, limit: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("outside the domain: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
