//! The `balancing` command line tool.
//!
//! Five subcommands: `gen` prints the first members of a sequence family,
//! `series` expands a catalogued generating function, `verify` runs a
//! verification suite, `check` evaluates an identity file, and `bfile`
//! exports an integer specialization in OEIS b-file format.
//!
//! Exit codes: 0 when every requested verification HOLDS (or the command
//! does not verify anything), 1 when any record FAILS, 2 on usage or
//! parse errors.

mod output;

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use balancing_core::arith::{BigRational, DensePolynomial, RationalFunction};
use balancing_core::dsl;
use balancing_core::identity::{self, Depth, Profile, ReadingFilter, Suite, VerificationReport};
use balancing_core::seq::{self, Family};
use balancing_core::series::{egf_expand, ogf_expand, GfFamily, Series};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;
use output::Format;

type QPoly = DensePolynomial<BigRational>;

#[derive(Parser)]
#[command(
    name = "balancing",
    version,
    about = "Balancing and Lucas-balancing polynomials: tables, generating functions, and exact identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first members of a sequence family.
    Gen {
        /// Sequence family: B, C, T, U, V, W, F, or L.
        #[arg(long)]
        family: String,
        /// How many members, starting from index 0.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Evaluate each member at this rational point (p or p/q).
        #[arg(long)]
        at: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Expand a catalogued generating function.
    Series {
        /// Generating function: ogf-<f> or egf-<f> with f one of b,
        /// b-odd, b-even, c, c-odd, c-even.
        #[arg(long)]
        which: String,
        /// Truncation order: coefficients of z^0 through z^order.
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite and report HOLDS or FAILS per record.
    Verify {
        /// Suite name, or cor-fib-eps-grid for the epsilon corollaries
        /// under both readings.
        #[arg(long)]
        suite: String,
        /// Grid depth: quick, standard, or deep.
        #[arg(long, default_value = "standard")]
        depth: String,
        /// Readings to include: canonical (default), literal, or all.
        #[arg(long)]
        readings: Option<String>,
        /// Ceiling override for the s and m axes.
        #[arg(long)]
        s_max: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate every identity in a DSL file.
    Check {
        /// Identity file: one identity per line, `#` comments.
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print an OEIS-style b-file for an integer specialization.
    Bfile {
        /// Sequence family: B, C, T, U, V, W, F, or L.
        #[arg(long)]
        family: String,
        /// How many entries, starting from n = 0.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Rational evaluation point; defaults to 1.
        #[arg(long, default_value = "1")]
        at: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Gen { family, count, at, format } => {
            cmd_gen(&family, count, at.as_deref(), format)
        }
        Command::Series { which, order, format } => cmd_series(&which, order, format),
        Command::Verify { suite, depth, readings, s_max, format } => {
            cmd_verify(&suite, &depth, readings.as_deref(), s_max, format)
        }
        Command::Check { file, format } => cmd_check(&file, format),
        Command::Bfile { family, count, at } => cmd_bfile(&family, count, &at),
    }
}

/// Folds a closed output pipe into quiet success so piping into `head`
/// stays clean.
fn emit(result: io::Result<()>) -> Result<(), String> {
    match result {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_family(text: &str) -> Result<Family, String> {
    Family::parse(text)
        .ok_or_else(|| format!("unknown family `{text}`; expected one of B, C, T, U, V, W, F, L"))
}

/// "p" or "p/q" with optional sign, as an exact rational.
fn parse_rational(text: &str) -> Result<BigRational, String> {
    let invalid = || format!("invalid rational `{text}`; expected p or p/q");
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| invalid())?;
    let den: BigInt = den.trim().parse().map_err(|_| invalid())?;
    if den.is_zero() {
        return Err(format!("invalid rational `{text}`: zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// The n-th member of the family as a polynomial; the integer families F
/// and L are constants.
fn family_member(family: Family, n: u64) -> QPoly {
    match family {
        Family::B => seq::balancing(n),
        Family::C => seq::lucas_balancing(n),
        Family::T | Family::U | Family::V | Family::W => seq::chebyshev(family, n),
        Family::F => QPoly::constant(BigRational::from(seq::fibonacci(n))),
        Family::L => QPoly::constant(BigRational::from(seq::lucas(n))),
    }
}

fn cmd_gen(family: &str, count: u64, at: Option<&str>, format: Format) -> Result<ExitCode, String> {
    let family = parse_family(family)?;
    match at {
        None => {
            let rows: Vec<(u64, QPoly)> =
                (0..count).map(|n| (n, family_member(family, n))).collect();
            emit(output::print_polynomials(format, "n", &rows))?;
        }
        Some(text) => {
            let point = parse_rational(text)?;
            let rows: Vec<(u64, BigRational)> = (0..count)
                .map(|n| (n, family_member(family, n).eval(&point)))
                .collect();
            emit(output::print_values(format, "n", &rows))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn expand_gf(which: &str, order: usize) -> Result<Series<RationalFunction>, String> {
    let unknown = || {
        format!(
            "unknown generating function `{which}`; expected ogf-<f> or egf-<f> \
             with f one of b, b-odd, b-even, c, c-odd, c-even"
        )
    };
    if let Some(rest) = which.strip_prefix("ogf-") {
        Ok(ogf_expand(GfFamily::parse(rest).ok_or_else(unknown)?, order))
    } else if let Some(rest) = which.strip_prefix("egf-") {
        Ok(egf_expand(GfFamily::parse(rest).ok_or_else(unknown)?, order))
    } else {
        Err(unknown())
    }
}

fn cmd_series(which: &str, order: usize, format: Format) -> Result<ExitCode, String> {
    let series = expand_gf(which, order)?;
    let coeffs = series
        .polynomial_coefficients()
        .expect("catalogued expansions have polynomial coefficients");
    let rows: Vec<(u64, QPoly)> =
        coeffs.into_iter().enumerate().map(|(k, p)| (k as u64, p)).collect();
    emit(output::print_polynomials(format, "k", &rows))?;
    Ok(ExitCode::SUCCESS)
}

fn verdict_exit(reports: &[VerificationReport]) -> ExitCode {
    if output::all_hold(reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_verify(
    suite: &str,
    depth: &str,
    readings: Option<&str>,
    s_max: Option<i64>,
    format: Format,
) -> Result<ExitCode, String> {
    let (suite, default_filter) = if suite == identity::EPS_GRID_ALIAS {
        (Suite::FibonacciEps, ReadingFilter::All)
    } else {
        let parsed = Suite::parse(suite).ok_or_else(|| {
            format!(
                "unknown suite `{suite}`; expected one of {}, or {}",
                Suite::names().join(", "),
                identity::EPS_GRID_ALIAS
            )
        })?;
        (parsed, ReadingFilter::Canonical)
    };
    let depth = Depth::parse(depth)
        .ok_or_else(|| format!("unknown depth `{depth}`; expected quick, standard, or deep"))?;
    let filter = match readings {
        Some(text) => ReadingFilter::parse(text).ok_or_else(|| {
            format!("unknown readings filter `{text}`; expected canonical, literal, or all")
        })?,
        None => default_filter,
    };
    let profile = Profile { depth, n_max: None, s_max };
    let reports = identity::verify_suite(suite, &profile, filter).map_err(|e| e.to_string())?;
    emit(output::print_reports(format, &reports))?;
    Ok(verdict_exit(&reports))
}

fn cmd_check(file: &Path, format: Format) -> Result<ExitCode, String> {
    let text =
        std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let entries =
        dsl::parse_corpus(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    let mut reports = Vec::with_capacity(entries.len());
    for entry in &entries {
        let mut report = dsl::eval_identity(&entry.ast)
            .map_err(|e| format!("{}:{}: {e}", file.display(), entry.line))?;
        report.id = entry
            .label
            .clone()
            .unwrap_or_else(|| format!("line-{}", entry.line));
        reports.push(report);
    }
    emit(output::print_reports(format, &reports))?;
    Ok(verdict_exit(&reports))
}

fn cmd_bfile(family: &str, count: u64, at: &str) -> Result<ExitCode, String> {
    let family = parse_family(family)?;
    let point = parse_rational(at)?;
    let mut out = String::new();
    for n in 0..count {
        let value = family_member(family, n).eval(&point);
        if !value.is_integer() {
            return Err(format!(
                "{}_{n}({at}) = {value} is not an integer",
                family.name()
            ));
        }
        out.push_str(&format!("{n} {}\n", value.to_integer()));
    }
    emit(io::stdout().lock().write_all(out.as_bytes()))?;
    Ok(ExitCode::SUCCESS)
}
