//! Subcommand implementations. Each returns an [`Outcome`] or a [`CliError`];
//! the binary maps them to exit codes 0, 1 and 2.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cwl_core::bounds::{
    check_a_beta_bound, check_b_bounded_by_a, check_beta_fixedpoint, check_binomial_ineq,
    check_corollary8, check_correlation_order, check_lemma15, check_loglimit, envelope_report,
    gamma_grid, t_star_solutions, BoundReport,
};
use cwl_core::counting::{closure_row, count_avoiding, count_closed_by};
use cwl_core::enumerate::{EnumerationConfig, DEFAULT_MAX_STATES};
use cwl_core::table::{CountKind, CountTable, Provenance};
use cwl_core::word::{autocorrelation, border_table, is_closed, is_privileged, Word};
use cwl_core::{Count, Rational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::bfile::{SequenceFile, CLOSED_SNAPSHOT, PRIVILEGED_SNAPSHOT};
use crate::cache::{Cache, Lookup, DEFAULT_DIR};
use crate::error::CliError;
use crate::golden::{self, GoldenTable};

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Mismatch,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::Mismatch => 1,
        }
    }

    fn from_clean(clean: bool) -> Self {
        if clean {
            Outcome::Success
        } else {
            Outcome::Mismatch
        }
    }
}

/// Inclusive range written `A..B` or `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Self { start, end }
    }

    pub fn single(value: usize) -> Self {
        Self::new(value, value)
    }

    pub fn iter(self) -> RangeInclusive<usize> {
        self.start..=self.end
    }

    pub fn contains(self, x: usize) -> bool {
        self.iter().contains(&x)
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |p: &str| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| format!("{p:?} is not a non-negative integer"))
        };
        let span = match s.split_once("..") {
            Some((a, b)) => Span::new(parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => Span::single(parse(s)?),
        };
        if span.start > span.end {
            return Err(format!("empty range {s:?}"));
        }
        Ok(span)
    }
}

/// Accepts `2^26` as well as plain integers.
fn parse_states(s: &str) -> Result<u64, String> {
    match s.split_once('^') {
        Some((base, exp)) => {
            let base: u64 = base
                .trim()
                .parse()
                .map_err(|_| format!("bad base in {s:?}"))?;
            let exp: u32 = exp
                .trim()
                .parse()
                .map_err(|_| format!("bad exponent in {s:?}"))?;
            base.checked_pow(exp)
                .ok_or_else(|| format!("{s} overflows u64"))
        }
        None => s
            .trim()
            .parse()
            .map_err(|_| format!("{s:?} is not an integer")),
    }
}

/// Accepts `p/q`, integers and decimals such as `0.5`.
fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("{s:?} is not a rational number");
    let int = |p: &str| p.trim().parse::<BigInt>().map_err(|_| bad());
    if let Some((p, q)) = s.split_once('/') {
        let q = int(q)?;
        if q == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(Rational::new(int(p)?, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = int(&format!("{whole}{frac}"))?;
        return Ok(Rational::new(
            digits,
            BigInt::from(10).pow(frac.len() as u32),
        ));
    }
    Ok(Rational::from_integer(int(s)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Closed,
    Privileged,
}

impl From<TableKind> for CountKind {
    fn from(kind: TableKind) -> Self {
        match kind {
            TableKind::Closed => CountKind::Closed,
            TableKind::Privileged => CountKind::Privileged,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountTarget {
    Closed,
    Privileged,
    /// Words closed by `--pattern`.
    ClosedByPattern,
    /// Words avoiding `--pattern` as a factor.
    Avoid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Beta,
    Binomial,
    Lemma6,
    Corollary8,
    Lemma15,
    #[value(name = "betaA")]
    BetaA,
    Envelope,
    Tstar,
    Loglimit,
    Corrorder,
}

#[derive(Debug, Args, Clone)]
pub struct EnumArgs {
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Upper bound on enumerated words, e.g. `2^26`.
    #[arg(long, value_parser = parse_states, default_value_t = DEFAULT_MAX_STATES)]
    pub max_states: u64,
    /// Visit one word per alphabet-permutation orbit.
    #[arg(long)]
    pub canonical: bool,
}

impl EnumArgs {
    pub fn config(&self) -> Result<EnumerationConfig, CliError> {
        if self.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        Ok(EnumerationConfig::default()
            .with_jobs(self.jobs)
            .with_max_states(self.max_states)
            .with_canonical(self.canonical))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cwl",
    version,
    about = "Closed and privileged words: counts, tables and bound checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Border chain, closure, privilege and autocorrelation of one word.
    Classify {
        word: String,
        /// Alphabet size (default: number of distinct letters, at least 2).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Per-length closed or privileged counts as CSV `n,t,count`.
    Tables {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value = "10..20")]
        n: Span,
        #[arg(long, default_value = "1..10")]
        t: Span,
        /// Compare against the reference tables; exit 1 on any mismatch.
        #[arg(long)]
        diff_golden: bool,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value = DEFAULT_DIR)]
        cache_dir: PathBuf,
        #[arg(long)]
        no_cache: bool,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
    /// Compare binary totals against an OEIS b-file.
    Oeis {
        #[arg(long, value_enum)]
        kind: TableKind,
        /// b-file path (default: the bundled snapshot).
        #[arg(long)]
        bfile: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
    /// Run one inequality check and print its reports as CSV.
    Bounds(BoundsArgs),
    /// A single exact count.
    Count {
        #[arg(long, value_enum)]
        kind: CountTarget,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Pattern digits for `closed-by-pattern` and `avoid`, e.g. `0110`.
        #[arg(long)]
        pattern: Option<String>,
        #[command(flatten)]
        enumeration: EnumArgs,
    },
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(value_enum)]
    pub check: Check,
    #[arg(long)]
    pub k: Option<Span>,
    #[arg(long)]
    pub n: Option<Span>,
    #[arg(long)]
    pub t: Option<Span>,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Rational `p/q` or decimal; the binomial check defaults to a grid.
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub j: usize,
    #[arg(long, default_value_t = 2)]
    pub i: usize,
    #[arg(long, default_value_t = 4)]
    pub samples: usize,
    #[arg(long, default_value_t = 12)]
    pub m_max: usize,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[command(flatten)]
    pub enumeration: EnumArgs,
}

/// Where CSV goes: a file, or the command's stdout.
fn emit(csv: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match csv {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Classify { word, k } => classify(&word, k, out),
        Command::Tables {
            kind,
            k,
            n,
            t,
            diff_golden,
            csv,
            cache_dir,
            no_cache,
            enumeration,
        } => {
            let cache = (!no_cache).then(|| Cache::new(cache_dir));
            let request = TablesRequest {
                kind: kind.into(),
                k,
                n,
                t,
                diff_golden,
                config: enumeration.config()?,
            };
            tables(&request, cache.as_ref(), csv.as_deref(), out, err)
        }
        Command::Oeis {
            kind,
            bfile,
            n_max,
            enumeration,
        } => oeis(
            kind.into(),
            bfile.as_deref(),
            n_max,
            &enumeration.config()?,
            out,
            err,
        ),
        Command::Bounds(args) => bounds_cmd(&args, out),
        Command::Count {
            kind,
            k,
            n,
            pattern,
            enumeration,
        } => count(kind, k, n, pattern.as_deref(), &enumeration.config()?, out),
    }
}

pub fn classify(text: &str, k: Option<usize>, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let word = Word::from_text(text, k)?;
    let chain: Vec<String> = border_table(&word)
        .border_lengths()
        .map(|len| text[..len].to_string())
        .collect();
    let closure = is_closed(&word);
    writeln!(out, "word: {text}")?;
    writeln!(out, "k: {}", word.alphabet_size())?;
    writeln!(
        out,
        "borders: {}",
        if chain.is_empty() {
            "(none)".to_string()
        } else {
            chain.join(" ")
        }
    )?;
    let closed = match (closure.closed, closure.border) {
        (true, Some(t)) => format!("yes ({})", &text[..t]),
        (true, None) => "yes (length <= 1)".to_string(),
        (false, _) => "no".to_string(),
    };
    writeln!(out, "closed: {closed}")?;
    writeln!(
        out,
        "privileged: {}",
        if is_privileged(&word) { "yes" } else { "no" }
    )?;
    if !word.is_empty() {
        let a = autocorrelation(&word)?;
        writeln!(out, "autocorrelation: {a}")?;
        writeln!(out, "f(2): {}", a.eval(&Count::from(2u32)))?;
    }
    Ok(Outcome::Success)
}

#[derive(Debug, Clone)]
pub struct TablesRequest {
    pub kind: CountKind,
    pub k: usize,
    pub n: Span,
    pub t: Span,
    pub diff_golden: bool,
    pub config: EnumerationConfig,
}

/// Fills one row per length, from the cache when possible. Rows computed
/// here are stored for both kinds since one pass yields both.
pub fn build_table(
    kind: CountKind,
    k: usize,
    lengths: Span,
    config: &EnumerationConfig,
    cache: Option<&Cache>,
    err: &mut dyn Write,
) -> Result<CountTable, CliError> {
    let mut table = CountTable::new(kind, k, Provenance::BruteForce);
    for n in lengths.iter().filter(|&n| n >= 2) {
        if let Some(cache) = cache {
            match cache.load(kind, k, n) {
                Lookup::Hit(row) => {
                    table.merge(&row);
                    continue;
                }
                Lookup::Miss => {}
                Lookup::Corrupt(why) => {
                    writeln!(err, "warning: ignoring cache file {why}; recomputing")?;
                }
            }
        }
        let row = closure_row(k, n, config)?;
        row.record(&mut table)?;
        if let Some(cache) = cache {
            for other in [CountKind::Closed, CountKind::Privileged] {
                let mut single = CountTable::new(other, k, Provenance::BruteForce);
                row.record(&mut single)?;
                if let Err(e) = cache.store(&single, n) {
                    writeln!(err, "warning: could not write cache: {e}")?;
                }
            }
        }
    }
    Ok(table)
}

pub fn tables(
    request: &TablesRequest,
    cache: Option<&Cache>,
    csv: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let golden = if request.diff_golden {
        if request.k != 2 {
            return Err(CliError::Usage("--diff-golden needs --k 2".into()));
        }
        Some(GoldenTable::for_kind(request.kind).expect("table kinds have reference data"))
    } else {
        None
    };
    let table = build_table(
        request.kind,
        request.k,
        request.n,
        &request.config,
        cache,
        err,
    )?;
    let mut text = String::from("n,t,count\n");
    for (n, t, c) in table.entries().filter(|&(_, t, _)| request.t.contains(t)) {
        text.push_str(&format!("{n},{t},{c}\n"));
    }
    emit(csv, &text, out)?;

    let Some(golden) = golden else {
        return Ok(Outcome::Success);
    };
    let diff = golden.diff(&table, |n, t| {
        request.n.contains(n) && request.t.contains(t)
    });
    for m in &diff.mismatches {
        writeln!(err, "{},{},{},{}", m.n, m.t, m.expected, m.actual)?;
    }
    let window = (golden::LAST_N - golden::FIRST_N + 1) * (golden::LAST_T - golden::FIRST_T + 1);
    writeln!(
        err,
        "golden {}: {} of {} cells compared, {} mismatches",
        request.kind,
        diff.compared,
        window,
        diff.mismatches.len()
    )?;
    Ok(Outcome::from_clean(diff.is_clean()))
}

pub fn oeis(
    kind: CountKind,
    bfile: Option<&Path>,
    n_max: usize,
    config: &EnumerationConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let file = match bfile {
        Some(path) => SequenceFile::read(path)?,
        None => SequenceFile::parse(match kind {
            CountKind::Closed => CLOSED_SNAPSHOT,
            _ => PRIVILEGED_SNAPSHOT,
        })?,
    };
    if n_max > file.last_index() {
        return Err(CliError::Usage(format!(
            "--n-max {n_max} is past the last b-file index {}",
            file.last_index()
        )));
    }
    let mut mismatches = 0;
    let mut checked = 0;
    for n in file.offset..=n_max {
        let expected = file.get(n).expect("indices are contiguous");
        let actual = match kind {
            CountKind::Closed => cwl_core::counting::count_closed(2, n, config)?,
            _ => cwl_core::counting::count_privileged(2, n, config)?,
        };
        checked += 1;
        if &actual != expected {
            mismatches += 1;
            writeln!(err, "{n},{expected},{actual}")?;
        }
    }
    writeln!(
        out,
        "{kind}: {checked} terms checked (n = {}..{n_max}), {mismatches} mismatches",
        file.offset
    )?;
    Ok(Outcome::from_clean(mismatches == 0))
}

pub fn count(
    kind: CountTarget,
    k: usize,
    n: usize,
    pattern: Option<&str>,
    config: &EnumerationConfig,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let pattern = || -> Result<Word, CliError> {
        let digits = pattern.ok_or_else(|| CliError::Usage("this kind needs --pattern".into()))?;
        Ok(Word::from_digits(digits, k)?)
    };
    let value = match kind {
        CountTarget::Closed => cwl_core::counting::count_closed(k, n, config)?,
        CountTarget::Privileged => cwl_core::counting::count_privileged(k, n, config)?,
        CountTarget::ClosedByPattern => count_closed_by(n, &pattern()?, config)?,
        CountTarget::Avoid => count_avoiding(n, &pattern()?, config)?,
    };
    writeln!(out, "{value}")?;
    Ok(Outcome::Success)
}

fn report_csv(reports: &[BoundReport]) -> String {
    let mut text = String::from("check,k,n,t,detail,lhs,rhs,ratio,holds\n");
    let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
    for r in reports {
        text.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.check,
            r.k,
            opt(r.n),
            opt(r.t),
            r.detail,
            r.lhs,
            r.rhs,
            r.ratio(),
            r.holds
        ));
    }
    text
}

pub fn bounds_cmd(args: &BoundsArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let config = args.enumeration.config()?;
    let ks = |default: Span| args.k.unwrap_or(default);
    let gamma = args
        .gamma
        .as_deref()
        .map(parse_rational)
        .transpose()
        .map_err(CliError::Usage)?;
    let csv = args.csv.as_deref();

    let mut reports: Vec<BoundReport> = Vec::new();
    match args.check {
        Check::Beta => {
            for k in ks(Span::new(2, 5)).iter() {
                for t in args.t.unwrap_or(Span::new(1, 30)).iter() {
                    reports.push(check_beta_fixedpoint(k, t)?);
                }
            }
        }
        Check::Binomial => {
            for k in ks(Span::new(2, 5)).iter() {
                for t in args.t.unwrap_or(Span::new(2, 12)).iter() {
                    let grid = match &gamma {
                        Some(g) => vec![g.clone()],
                        None => gamma_grid(t),
                    };
                    for g in &grid {
                        reports.extend(check_binomial_ineq(k, t, g)?);
                    }
                }
            }
        }
        Check::BetaA => {
            let n_max = args.n_max.unwrap_or(60);
            for k in ks(Span::single(2)).iter() {
                for t in args.t.unwrap_or(Span::new(2, 6)).iter() {
                    reports.extend(check_a_beta_bound(k, t, n_max)?);
                }
            }
        }
        Check::Lemma6 => {
            for k in ks(Span::single(2)).iter() {
                for n in args.n.unwrap_or(Span::single(12)).iter() {
                    let ts = args.t.unwrap_or(Span::new(1, n / 2));
                    for t in ts.iter() {
                        reports.extend(check_b_bounded_by_a(k, n, t, &config)?);
                    }
                }
            }
        }
        Check::Corollary8 | Check::Lemma15 => {
            for k in ks(Span::single(2)).iter() {
                for n in args.n.unwrap_or(Span::new(10, 20)).iter() {
                    reports.extend(if args.check == Check::Corollary8 {
                        check_corollary8(k, n, &config)?
                    } else {
                        check_lemma15(k, n, &config)?
                    });
                }
            }
        }
        Check::Envelope => return envelope_cmd(args, &config, csv, out),
        Check::Tstar => return tstar_cmd(args, csv, out),
        Check::Loglimit => return loglimit_cmd(args, csv, out),
        Check::Corrorder => return corrorder_cmd(args, &config, csv, out),
    }
    emit(csv, &report_csv(&reports), out)?;
    Ok(Outcome::from_clean(reports.iter().all(|r| r.holds)))
}

fn opt_f64(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.6}")).unwrap_or_default()
}

fn envelope_cmd(
    args: &BoundsArgs,
    config: &EnumerationConfig,
    csv: Option<&Path>,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let mut text = String::from(
        "k,n,j,closed,privileged,closed_ratio,privileged_upper_ratio,privileged_lower_ratio\n",
    );
    for k in args.k.unwrap_or(Span::single(2)).iter() {
        let lengths = args.n.unwrap_or(Span::new(10, 20));
        for row in envelope_report(k, lengths.iter(), args.j, config)? {
            text.push_str(&format!(
                "{},{},{},{},{},{:.6},{},{}\n",
                row.k,
                row.n,
                row.j,
                row.closed,
                row.privileged,
                row.closed_ratio,
                opt_f64(row.privileged_upper_ratio),
                opt_f64(row.privileged_lower_ratio)
            ));
        }
    }
    emit(csv, &text, out)?;
    Ok(Outcome::Success)
}

fn tstar_cmd(
    args: &BoundsArgs,
    csv: Option<&Path>,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let mut text = String::from("k,n,solutions,t_star,log_bound_holds\n");
    let mut clean = true;
    for k in args.k.unwrap_or(Span::single(2)).iter() {
        for n in args.n.unwrap_or(Span::new(2, 100)).iter() {
            let solutions = t_star_solutions(k, n)?;
            let t = solutions.first().copied();
            // t <= log_k(n) + 1, i.e. k^{t-1} <= n
            let log_ok =
                t.is_none_or(|t| t == 0 || Count::from(k).pow(t as u32 - 1) <= Count::from(n));
            clean &= solutions.len() <= 1 && log_ok;
            text.push_str(&format!(
                "{k},{n},{},{},{}\n",
                solutions.len(),
                t.map(|t| t.to_string()).unwrap_or_default(),
                log_ok
            ));
        }
    }
    emit(csv, &text, out)?;
    Ok(Outcome::from_clean(clean))
}

fn loglimit_cmd(
    args: &BoundsArgs,
    csv: Option<&Path>,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let gamma: f64 = match args.gamma.as_deref() {
        Some(g) => {
            let r = parse_rational(g).map_err(CliError::Usage)?;
            r.to_f64()
                .ok_or_else(|| CliError::Usage(format!("gamma {g} is out of range")))?
        }
        None => 2.0,
    };
    let mut text = String::from("k,i,gamma,log_n,ratio,target,distance\n");
    for k in args.k.unwrap_or(Span::single(2)).iter() {
        let report = check_loglimit(k, args.i, gamma, args.samples)?;
        for row in &report.rows {
            text.push_str(&format!(
                "{},{},{},{:e},{:.9},{},{:.9}\n",
                report.k, report.i, report.gamma, row.log_n, row.ratio, report.target, row.distance
            ));
        }
    }
    emit(csv, &text, out)?;
    Ok(Outcome::Success)
}

fn corrorder_cmd(
    args: &BoundsArgs,
    config: &EnumerationConfig,
    csv: Option<&Path>,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let mut text = String::from("k,t,m_max,pairs_checked,violations,run_maximizes\n");
    let mut clean = true;
    for k in args.k.unwrap_or(Span::single(2)).iter() {
        for t in args.t.unwrap_or(Span::single(3)).iter() {
            let report = check_correlation_order(k, t, args.m_max, config)?;
            clean &= report.holds();
            text.push_str(&format!(
                "{},{},{},{},{},{}\n",
                report.k,
                report.t,
                report.m_max,
                report.pairs_checked,
                report.violations.len(),
                report.run_maximizes
            ));
        }
    }
    emit(csv, &text, out)?;
    Ok(Outcome::from_clean(clean))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("10..20".parse::<Span>(), Ok(Span::new(10, 20)));
        assert_eq!("3".parse::<Span>(), Ok(Span::single(3)));
        assert_eq!("2..=5".parse::<Span>(), Ok(Span::new(2, 5)));
        assert!("5..2".parse::<Span>().is_err());
        assert!("a..2".parse::<Span>().is_err());
    }

    #[test]
    fn states_and_rationals() {
        assert_eq!(parse_states("2^26"), Ok(1 << 26));
        assert_eq!(parse_states("1000"), Ok(1000));
        assert!(parse_states("2^70").is_err());
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(parse_rational("1/2"), Ok(half.clone()));
        assert_eq!(parse_rational("0.5"), Ok(half));
        assert_eq!(
            parse_rational("3"),
            Ok(Rational::from_integer(BigInt::from(3)))
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn classify_example_words() {
        let mut out = Vec::new();
        classify("entanglement", None, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("closed: yes (ent)"), "{text}");
        assert!(text.contains("privileged: no"), "{text}");
    }
}
