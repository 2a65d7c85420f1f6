//! Length selection, iterated logarithms, and the numeric envelope report.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, ToPrimitive, Zero};

use super::report::ratio_f64;
use crate::counting::closure_row;
use crate::enumerate::EnumerationConfig;
use crate::word::check_alphabet;
use crate::{Count, Error, Rational, Result};

/// Bounds on `atanh(x) = sum_j x^{2j+1}/(2j+1)` for `0 <= x < 1` from the first
/// `terms` terms and a geometric tail bound.
fn atanh_bounds(x: &Rational, terms: usize) -> (Rational, Rational) {
    if x.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    let x2 = x * x;
    let mut power = x.clone();
    let mut sum = Rational::zero();
    for j in 0..terms {
        sum += &power / Rational::from_integer(BigInt::from(2 * j + 1));
        power *= &x2;
    }
    // remaining terms are at most power/(2N+1) * 1/(1-x^2)
    let tail =
        &power / (Rational::from_integer(BigInt::from(2 * terms + 1)) * (Rational::one() - &x2));
    let upper = &sum + tail;
    (sum, upper)
}

/// Rational enclosure `lo <= ln k <= hi` whose width shrinks geometrically
/// with `terms`.
pub fn ln_bounds(k: usize, terms: usize) -> (Rational, Rational) {
    assert!(k >= 1, "ln_bounds needs k >= 1");
    let m = (usize::BITS - 1 - k.leading_zeros()) as usize;
    // k = 2^m r with 1 <= r < 2; ln r = 2 atanh((r-1)/(r+1)) = 2 atanh((k - 2^m)/(k + 2^m))
    let base = 1usize << m;
    let two = Rational::from_integer(BigInt::from(2));
    let (ln2_lo, ln2_hi) = atanh_bounds(&Rational::new(BigInt::one(), BigInt::from(3)), terms);
    let (r_lo, r_hi) = atanh_bounds(
        &Rational::new(BigInt::from(k - base), BigInt::from(k + base)),
        terms,
    );
    let mm = Rational::from_integer(BigInt::from(m));
    (&two * (&mm * ln2_lo + r_lo), &two * (&mm * ln2_hi + r_hi))
}

/// Sign of `ln(k) * a - b`. Never `Equal` for `a > 0` since `ln k` is irrational.
fn compare_ln_product(k: usize, a: &BigUint, b: &BigUint) -> Result<Ordering> {
    if a.is_zero() {
        return Ok(if b.is_zero() {
            Ordering::Equal
        } else {
            Ordering::Less
        });
    }
    if let (Some(af), Some(bf)) = (a.to_f64(), b.to_f64()) {
        let x = (k as f64).ln() * af;
        if x.is_finite() && (x - bf).abs() > 1e-9 * bf.max(1.0) {
            return Ok(x.partial_cmp(&bf).unwrap_or(Ordering::Equal));
        }
    }
    let a = Rational::from_integer(BigInt::from(a.clone()));
    let b = Rational::from_integer(BigInt::from(b.clone()));
    let mut terms = 32;
    while terms <= 1 << 14 {
        let (lo, hi) = ln_bounds(k, terms);
        if &lo * &a > b {
            return Ok(Ordering::Greater);
        }
        if &hi * &a < b {
            return Ok(Ordering::Less);
        }
        terms *= 2;
    }
    Err(Error::Domain(format!(
        "could not separate ln({k}) * {a} from {b}"
    )))
}

/// Every integer `t >= 0` with `(ln k/(k-1)) k^t <= n - t < (ln k/(k-1)) k^{t+1}`.
///
/// Both inequalities are decided exactly by comparing `ln(k) k^t` with the
/// integer `(k-1)(n-t)`.
pub fn t_star_solutions(k: usize, n: usize) -> Result<Vec<usize>> {
    check_alphabet(k)?;
    let ln_k = (k as f64).ln();
    let mut solutions = Vec::new();
    // k^t; u128 until it overflows, which only happens once k^t >> n
    let mut power: u128 = 1;
    for t in 0..=n {
        let slack = ((k - 1) * (n - t)) as u128;
        // left inequality fails from here on: ln(k) k^t grows, n - t shrinks
        if compare_small(k, ln_k, power, slack)? == Ordering::Greater {
            break;
        }
        let Some(next) = power.checked_mul(k as u128) else {
            // ln(k) k^{t+1} > k^{t+1} > u128::MAX > slack
            solutions.push(t);
            break;
        };
        if compare_small(k, ln_k, next, slack)? == Ordering::Greater {
            solutions.push(t);
        }
        power = next;
    }
    Ok(solutions)
}

/// [`compare_ln_product`] for machine-sized operands, skipping the big-integer
/// conversion when the float comparison is decisive.
fn compare_small(k: usize, ln_k: f64, a: u128, b: u128) -> Result<Ordering> {
    let (af, bf) = (a as f64, b as f64);
    let x = ln_k * af;
    if a > 0 && (x - bf).abs() > 1e-9 * bf.max(1.0) {
        return Ok(x.partial_cmp(&bf).unwrap_or(Ordering::Equal));
    }
    compare_ln_product(k, &BigUint::from(a), &BigUint::from(b))
}

/// The unique `t` selected by [`t_star_solutions`].
///
/// The selection intervals in `n` leave a gap of one integer after each `t`
/// (for `k = 2`: `n = 2, 4, 8, 15, 27, ...`); those `n` have no solution and
/// yield a domain error.
pub fn t_star(k: usize, n: usize) -> Result<usize> {
    let solutions = t_star_solutions(k, n)?;
    match solutions.as_slice() {
        [t] => Ok(*t),
        [] => Err(Error::Domain(format!(
            "no integer t satisfies the length-selection inequality for k={k}, n={n}"
        ))),
        many => Err(Error::Domain(format!(
            "length selection is not unique for k={k}, n={n}: {many:?}"
        ))),
    }
}

/// Height-`j` tower of `k`: `1, k, k^k, ...`, saturating to infinity.
fn tower(k: f64, j: usize) -> f64 {
    let mut value = 1.0f64;
    for _ in 0..j {
        value = k.powf(value);
        if !value.is_finite() {
            return f64::INFINITY;
        }
    }
    value
}

/// `log_k^{∘j}(n)` for `n` strictly above the height-`j` tower of `k`, the
/// range where the result exceeds 1.
pub fn iter_log(k: usize, j: usize, n: f64) -> Result<f64> {
    check_alphabet(k)?;
    let kf = k as f64;
    let threshold = tower(kf, j);
    if n.is_nan() || n <= threshold || !n.is_finite() {
        return Err(Error::Domain(format!(
            "log_{k}^{j}({n}) needs n > {threshold}"
        )));
    }
    let ln_k = kf.ln();
    Ok((0..j).fold(n, |x, _| x.ln() / ln_k))
}

/// `log_k^{∘j}(n)` given `log_n = log_k(n)`, for `j >= 1`; lets `n` exceed
/// the float range.
pub fn iter_log_of_log(k: usize, j: usize, log_n: f64) -> Result<f64> {
    if j == 0 {
        return Err(Error::Precondition("iter_log_of_log needs j >= 1".into()));
    }
    iter_log(k, j - 1, log_n)
}

/// `log_k^{∘i}(n^γ) / log_k^{∘i}(n)` with `n = k^{log_n}`.
pub fn loglimit_ratio(k: usize, i: usize, gamma: f64, log_n: f64) -> Result<f64> {
    if gamma.is_nan() || gamma <= 0.0 {
        return Err(Error::Precondition(format!(
            "gamma must be positive, got {gamma}"
        )));
    }
    let num = iter_log_of_log(k, i, gamma * log_n)?;
    let den = iter_log_of_log(k, i, log_n)?;
    Ok(num / den)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LogLimitRow {
    /// `log_k(n)` for this sample.
    pub log_n: f64,
    pub ratio: f64,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LogLimitReport {
    pub k: usize,
    pub i: usize,
    pub gamma: f64,
    /// `γ` for `i = 1`, otherwise 1.
    pub target: f64,
    pub rows: Vec<LogLimitRow>,
    /// Ladder points skipped because the iterated logarithm was not above 1.
    pub skipped: usize,
}

impl LogLimitReport {
    /// Whether the distance to the target never grows along the ladder.
    pub fn approaches_target(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].distance <= w[0].distance + 1e-12)
    }
}

/// Evaluates the ratio on the ladder `log_k(n) = 2^{2^{s+2}}`, `s = 0..n_samples`
/// (`n = k^16, k^256, k^65536, ...`), stopping before the exponent overflows.
pub fn check_loglimit(k: usize, i: usize, gamma: f64, n_samples: usize) -> Result<LogLimitReport> {
    check_alphabet(k)?;
    if i == 0 {
        return Err(Error::Precondition("i must be at least 1".into()));
    }
    if gamma.is_nan() || gamma <= 0.0 || !gamma.is_finite() {
        return Err(Error::Precondition(format!(
            "gamma must be positive, got {gamma}"
        )));
    }
    let target = if i == 1 { gamma } else { 1.0 };
    let mut rows = Vec::new();
    let mut skipped = 0;
    for s in 0..n_samples {
        let log_n = 2f64.powf(2f64.powi(s as i32 + 2));
        if !(gamma * log_n).is_finite() || !log_n.is_finite() {
            break;
        }
        match loglimit_ratio(k, i, gamma, log_n) {
            Ok(ratio) => rows.push(LogLimitRow {
                log_n,
                ratio,
                distance: (ratio - target).abs(),
            }),
            Err(Error::Domain(_)) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(LogLimitReport {
        k,
        i,
        gamma,
        target,
        rows,
        skipped,
    })
}

/// Normalized counts against the asymptotic shapes.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeRow {
    pub k: usize,
    pub n: usize,
    pub j: usize,
    pub closed: Count,
    pub privileged: Count,
    /// `C_k(n) n / k^n`.
    pub closed_ratio: f64,
    /// `P_k(n) n prod_{i=1}^{j} log_k^{∘i}(n) / k^n`; `None` below the
    /// iterated-log threshold.
    pub privileged_upper_ratio: Option<f64>,
    /// `P_k(n) n log_k^{∘j}(n) prod_{i=1}^{j} log_k^{∘i}(n) / k^n`.
    pub privileged_lower_ratio: Option<f64>,
}

pub fn envelope_report(
    k: usize,
    lengths: impl IntoIterator<Item = usize>,
    j: usize,
    config: &EnumerationConfig,
) -> Result<Vec<EnvelopeRow>> {
    check_alphabet(k)?;
    lengths
        .into_iter()
        .map(|n| {
            if n == 0 {
                return Err(Error::Precondition("envelope lengths start at 1".into()));
            }
            let (closed, privileged) = if n <= 1 {
                let all = Count::from(k).pow(n);
                (all.clone(), all)
            } else {
                let row = closure_row(k, n, config)?;
                (row.closed_total, row.privileged_total)
            };
            let total = Count::from(k).pow(n);
            let scale = Count::from(n);
            let closed_ratio = ratio_f64(&(&closed * &scale), &total);
            let p_ratio = ratio_f64(&(&privileged * &scale), &total);
            let logs: Option<Vec<f64>> = (1..=j).map(|i| iter_log(k, i, n as f64).ok()).collect();
            let (upper, lower) = match logs {
                Some(logs) => {
                    let product: f64 = logs.iter().product();
                    let outer = logs.last().copied().unwrap_or(n as f64);
                    (Some(p_ratio * product), Some(p_ratio * product * outer))
                }
                None => (None, None),
            };
            Ok(EnvelopeRow {
                k,
                n,
                j,
                closed,
                privileged,
                closed_ratio,
                privileged_upper_ratio: upper,
                privileged_lower_ratio: lower,
            })
        })
        .collect()
}
