//! Exact counting and bound verification for closed and privileged words.
//!
//! The crate is split along the lines of the computation:
//!
//! * [`word`] holds the word type, border tables, closure and privilege
//!   tests, and auto-correlation machinery.
//! * [`enumerate`] walks every word of a given length, optionally in
//!   parallel and optionally one representative per alphabet-permutation orbit.
//! * [`counting`] turns enumeration into exact counts `C_k(n,t)`, `P_k(n,t)`,
//!   `B_k(n,u)` and `A_k(n,u)`.
//! * [`avoid`] evaluates `A_k(n, 0^t)` by recurrence without enumeration.
//! * [`bounds`] checks the closed-word and privileged-word inequalities exactly
//!   and reports the asymptotic envelopes numerically.
//! * [`table`] is the keyed count table with provenance used by the CLI cache.

pub mod avoid;
pub mod bounds;
pub mod counting;
pub mod enumerate;
mod error;
pub mod table;
pub mod word;

pub use error::{Error, Result};

/// Exact nonnegative count.
pub type Count = num_bigint::BigUint;

/// Exact rational used by the inequality checks.
pub type Rational = num_rational::BigRational;
