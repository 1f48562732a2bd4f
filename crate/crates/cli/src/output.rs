//! Output encodings for the command line: polynomial tables, evaluated
//! tables, and verification reports, each as text, JSON, or CSV.
//!
//! Text keeps one item per line and omits timing so runs are directly
//! comparable; JSON serializes reports with their full schema including
//! the `millis` field; CSV flattens the same fields into one row per
//! item.

use std::io::{self, Write};

use balancing_core::arith::{BigRational, DensePolynomial};
use balancing_core::identity::{AxisSummary, ParamValue, Verdict, VerificationReport};
use clap::ValueEnum;

type QPoly = DensePolynomial<BigRational>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn to_io(e: impl std::error::Error + Send + Sync + 'static) -> io::Error {
    io::Error::other(e)
}

/// Unwraps the io layer of a csv error so callers can still recognize a
/// closed pipe.
fn csv_io(e: csv::Error) -> io::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => io::Error::other(format!("{other:?}")),
    }
}

/// Ascending coefficient strings; the zero polynomial keeps a single "0".
fn coefficient_strings(poly: &QPoly) -> Vec<String> {
    if poly.is_zero() {
        return vec!["0".to_string()];
    }
    poly.coeffs().iter().map(|c| c.to_string()).collect()
}

fn json_row(index_name: &str, index: u64, field: &str, value: serde_json::Value) -> serde_json::Value {
    let mut row = serde_json::Map::new();
    row.insert(index_name.to_string(), index.into());
    row.insert(field.to_string(), value);
    serde_json::Value::Object(row)
}

/// Prints one polynomial per row: rendered ascending in text, as
/// coefficient lists in JSON and CSV.
pub fn print_polynomials(
    format: Format,
    index_name: &str,
    rows: &[(u64, QPoly)],
) -> io::Result<()> {
    let mut out = io::stdout().lock();
    match format {
        Format::Text => {
            for (_, poly) in rows {
                writeln!(out, "{poly}")?;
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, poly)| {
                    json_row(index_name, *n, "coefficients", coefficient_strings(poly).into())
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&items).map_err(to_io)?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([index_name, "coefficients"]).map_err(csv_io)?;
            for (n, poly) in rows {
                w.write_record([n.to_string(), coefficient_strings(poly).join(" ")])
                    .map_err(csv_io)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Prints one exact rational value per row.
pub fn print_values(
    format: Format,
    index_name: &str,
    rows: &[(u64, BigRational)],
) -> io::Result<()> {
    let mut out = io::stdout().lock();
    match format {
        Format::Text => {
            for (_, value) in rows {
                writeln!(out, "{value}")?;
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, value)| json_row(index_name, *n, "value", value.to_string().into()))
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&items).map_err(to_io)?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([index_name, "value"]).map_err(csv_io)?;
            for (n, value) in rows {
                w.write_record([n.to_string(), value.to_string()]).map_err(csv_io)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn axes_text(axes: &[AxisSummary], sep: &str) -> String {
    axes.iter()
        .map(|a| format!("{} in {}..{}", a.name, a.min, a.max))
        .collect::<Vec<_>>()
        .join(sep)
}

fn witness_text(params: &[ParamValue], sep: &str) -> String {
    params
        .iter()
        .map(|p| format!("{} = {}", p.name, p.value))
        .collect::<Vec<_>>()
        .join(sep)
}

/// Prints verification reports, one per record.
pub fn print_reports(format: Format, reports: &[VerificationReport]) -> io::Result<()> {
    let mut out = io::stdout().lock();
    match format {
        Format::Text => {
            for r in reports {
                let head = format!(
                    "{}  {}  {}  {}  points={}",
                    r.id,
                    r.reading.name(),
                    r.ring,
                    axes_text(&r.params_tested, ", "),
                    r.points
                );
                match &r.counterexample {
                    Some(w) => writeln!(
                        out,
                        "{head}  FAILS at {}: difference = {}",
                        witness_text(&w.params, ", "),
                        w.difference
                    )?,
                    None => writeln!(out, "{head}  {}", r.verdict)?,
                }
            }
        }
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(reports).map_err(to_io)?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "id", "reading", "ring", "params", "points", "verdict", "witness",
                "difference", "millis",
            ])
            .map_err(csv_io)?;
            for r in reports {
                let (witness, difference) = match &r.counterexample {
                    Some(c) => (witness_text(&c.params, "; "), c.difference.clone()),
                    None => (String::new(), String::new()),
                };
                w.write_record([
                    r.id.clone(),
                    r.reading.name().to_string(),
                    r.ring.clone(),
                    axes_text(&r.params_tested, "; "),
                    r.points.to_string(),
                    r.verdict.to_string(),
                    witness,
                    difference,
                    r.millis.to_string(),
                ])
                .map_err(csv_io)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// True when no report carries a FAILS verdict.
pub fn all_hold(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.verdict == Verdict::Holds)
}
