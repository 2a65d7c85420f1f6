use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::{Count, Rational};

/// One side of a checked inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quantity {
    Count(Count),
    Rational(Rational),
}

impl Quantity {
    pub fn to_rational(&self) -> Rational {
        match self {
            Quantity::Count(c) => {
                Rational::from_integer(BigInt::from_biguint(Sign::Plus, c.clone()))
            }
            Quantity::Rational(r) => r.clone(),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Count(c) => write!(f, "{c}"),
            Quantity::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Quantity::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// Result of one exact comparison `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub check: &'static str,
    pub k: usize,
    pub n: Option<usize>,
    pub t: Option<usize>,
    /// Free-form qualifier: pattern, γ, or which side of a two-sided bound.
    pub detail: String,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub holds: bool,
}

impl BoundReport {
    pub fn new(check: &'static str, k: usize, lhs: Quantity, rhs: Quantity) -> Self {
        let holds = lhs.to_rational() <= rhs.to_rational();
        Self {
            check,
            k,
            n: None,
            t: None,
            detail: String::new(),
            lhs,
            rhs,
            holds,
        }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_t(mut self, t: usize) -> Self {
        self.t = Some(t);
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    /// `lhs / rhs` truncated to six decimals; display only.
    pub fn ratio(&self) -> String {
        decimal_ratio(&(self.lhs.to_rational()), &self.rhs.to_rational(), 6)
    }
}

/// Exact decimal expansion of `a / b` truncated toward zero to `digits`
/// places; `"inf"` when `b` is zero.
pub fn decimal_ratio(a: &Rational, b: &Rational, digits: u32) -> String {
    if b.is_zero() {
        return "inf".to_string();
    }
    let q = a / b;
    let negative = q.is_negative();
    let q = q.abs();
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (q.numer() * &scale) / q.denom();
    let whole = &scaled / &scale;
    let frac = &scaled % &scale;
    let sign = if negative && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{whole}");
    }
    format!(
        "{sign}{whole}.{:0>width$}",
        frac.to_string(),
        width = digits as usize
    )
}

/// `a / b` as a float with roughly 60 bits of precision, for any magnitude.
pub fn ratio_f64(a: &BigUint, b: &BigUint) -> f64 {
    if b.is_zero() {
        return f64::INFINITY;
    }
    if a.is_zero() {
        return 0.0;
    }
    let shift = 64 + b.bits() as i64 - a.bits() as i64;
    let q = if shift >= 0 {
        (a << shift as u64) / b
    } else {
        (a >> (-shift) as u64) / b
    };
    q.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(shift as i32))
}
