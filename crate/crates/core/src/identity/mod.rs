//! The identity catalog and verification engine.
//!
//! Every displayed identity in the collection is an [`IdentityRecord`]: a
//! closure that evaluates `LHS - RHS` exactly in its declared ring at one
//! grid point, together with the parameter ranges the verification profiles
//! resolve against. The engine walks grids in lexicographic order, stops at
//! the first nonzero difference, and reports `HOLDS` or `FAILS` with the
//! minimal counterexample.
//!
//! Records come in two readings. A `canonical` record states the identity
//! in the form that actually holds; a `literal` record transcribes a
//! displayed form verbatim even where that form is wrong (an index range
//! starting one term late, a misprinted factor, a subscript from a
//! neighboring line). Literal records are expected to FAIL and their
//! counterexamples document exactly where; every literal record has a
//! canonical sibling under the same id stem.
//!
//! Domain errors (an evaluation that would divide by zero or leave the
//! ring) are reported as errors, never as FAILS: a verdict always means the
//! difference was evaluated exactly.

pub mod catalog;
mod quadfrac;

pub use quadfrac::{QuadBasis, QuadFrac};

use crate::arith::{
    BigRational, DensePolynomial, GaussianRational, QuadExt, RationalFunction, Ring,
};
use crate::series::{Series, SeriesError};
use once_cell::sync::Lazy;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::time::Instant;

type QPoly = DensePolynomial<BigRational>;

/// An exact `LHS - RHS` value in whichever ring a record evaluates in.
#[derive(Debug, Clone)]
pub enum RingValue {
    Rational(BigRational),
    Gauss(GaussianRational),
    Poly(QPoly),
    RatFunc(RationalFunction),
    QuadRat(QuadExt<RationalFunction>),
    QuadGauss(QuadExt<GaussianRational>),
    QuadFrac(QuadFrac),
}

impl RingValue {
    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Rational(v) => num_traits::Zero::is_zero(v),
            RingValue::Gauss(v) => v.is_zero(),
            RingValue::Poly(v) => v.is_zero(),
            RingValue::RatFunc(v) => v.is_zero(),
            RingValue::QuadRat(v) => v.is_zero(),
            RingValue::QuadGauss(v) => v.is_zero(),
            RingValue::QuadFrac(v) => v.is_zero(),
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Rational(v) => write!(f, "{v}"),
            RingValue::Gauss(v) => write!(f, "{v}"),
            RingValue::Poly(v) => write!(f, "{v}"),
            RingValue::RatFunc(v) => write!(f, "{v}"),
            RingValue::QuadRat(v) => write!(f, "{v}"),
            RingValue::QuadGauss(v) => write!(f, "{v}"),
            RingValue::QuadFrac(v) => write!(f, "{v}"),
        }
    }
}

/// Whether a record transcribes a display verbatim or states the corrected
/// form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Reading {
    Canonical,
    Literal,
}

impl Reading {
    pub fn name(self) -> &'static str {
        match self {
            Reading::Canonical => "canonical",
            Reading::Literal => "literal",
        }
    }
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which readings a suite run selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReadingFilter {
    Canonical,
    Literal,
    All,
}

impl ReadingFilter {
    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "canonical" => Some(ReadingFilter::Canonical),
            "literal" => Some(ReadingFilter::Literal),
            "all" => Some(ReadingFilter::All),
            _ => None,
        }
    }

    pub fn admits(self, reading: Reading) -> bool {
        match self {
            ReadingFilter::Canonical => reading == Reading::Canonical,
            ReadingFilter::Literal => reading == Reading::Literal,
            ReadingFilter::All => true,
        }
    }
}

/// One integer parameter of a record: its floor and the ceilings the quick
/// and standard profiles resolve to.
#[derive(Debug, Clone, Copy)]
pub struct ParamRange {
    pub name: &'static str,
    pub min: i64,
    pub quick: i64,
    pub standard: i64,
}

/// Verification depth. `Deep` is `Standard` ceilings plus whatever explicit
/// overrides the profile carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    Quick,
    Standard,
    Deep,
}

impl Depth {
    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "quick" => Some(Depth::Quick),
            "standard" => Some(Depth::Standard),
            "deep" => Some(Depth::Deep),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Depth::Quick => "quick",
            Depth::Standard => "standard",
            Depth::Deep => "deep",
        }
    }
}

/// Resolves record parameter ranges to concrete grid bounds.
#[derive(Debug, Clone, Copy)]
pub struct Profile {
    pub depth: Depth,
    /// Override for the order-like axes (`n`, `order`).
    pub n_max: Option<i64>,
    /// Override for the index-like axes (`s`, `m`).
    pub s_max: Option<i64>,
}

impl Profile {
    pub fn quick() -> Self {
        Profile { depth: Depth::Quick, n_max: None, s_max: None }
    }

    pub fn standard() -> Self {
        Profile { depth: Depth::Standard, n_max: None, s_max: None }
    }

    pub fn axis_max(&self, param: &ParamRange) -> i64 {
        let base = match self.depth {
            Depth::Quick => param.quick,
            Depth::Standard | Depth::Deep => param.standard,
        };
        match param.name {
            "n" | "order" => self.n_max.unwrap_or(base),
            "s" | "m" => self.s_max.unwrap_or(base),
            _ => base,
        }
    }
}

/// A bound set of parameter values, in record declaration order.
#[derive(Debug, Clone)]
pub struct Assignment {
    vals: Vec<(&'static str, i64)>,
}

impl Assignment {
    pub fn new(vals: Vec<(&'static str, i64)>) -> Self {
        Assignment { vals }
    }

    /// Value of a named parameter. Records only query parameters they
    /// declare, so a missing name is a catalog bug.
    pub fn get(&self, name: &str) -> i64 {
        self.vals
            .iter()
            .find(|(n, _)| *n == name)
            .unwrap_or_else(|| panic!("parameter `{name}` not bound"))
            .1
    }

    pub fn values(&self) -> &[(&'static str, i64)] {
        &self.vals
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("parameter `{name}` = {value} is below the record minimum {min}")]
    OutOfRange { name: String, value: i64, min: i64 },
    #[error("missing parameter `{0}`")]
    MissingParameter(String),
    #[error("domain error: {0}")]
    Domain(String),
}

impl From<SeriesError> for EngineError {
    fn from(err: SeriesError) -> Self {
        EngineError::Domain(err.to_string())
    }
}

pub type EvalFn = Box<dyn Fn(&Assignment) -> Result<RingValue, EngineError> + Send + Sync>;

/// One catalogued identity: locator, reading, ring, grid shape, and the
/// exact `LHS - RHS` evaluator.
pub struct IdentityRecord {
    pub id: &'static str,
    pub source: &'static str,
    pub reading: Reading,
    pub ring: &'static str,
    pub params: Vec<ParamRange>,
    pub eval: EvalFn,
}

impl IdentityRecord {
    pub fn new(
        id: &'static str,
        source: &'static str,
        reading: Reading,
        ring: &'static str,
        params: Vec<ParamRange>,
        eval: impl Fn(&Assignment) -> Result<RingValue, EngineError> + Send + Sync + 'static,
    ) -> Self {
        IdentityRecord { id, source, reading, ring, params, eval: Box::new(eval) }
    }
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("source", &self.source)
            .field("reading", &self.reading)
            .field("ring", &self.ring)
            .finish_non_exhaustive()
    }
}

/// Named groups of records, selected by id stem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    GfClosedForms,
    Lemmas,
    OgfTheorems,
    EgfTheorems,
    Chebyshev,
    FibonacciHalf,
    FibonacciEps,
}

impl Suite {
    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "all" => Some(Suite::All),
            "gf-closed-forms" => Some(Suite::GfClosedForms),
            "lemmas" => Some(Suite::Lemmas),
            "ogf-theorems" => Some(Suite::OgfTheorems),
            "egf-theorems" => Some(Suite::EgfTheorems),
            "chebyshev" => Some(Suite::Chebyshev),
            "fibonacci-x-half" => Some(Suite::FibonacciHalf),
            "fibonacci-eps" => Some(Suite::FibonacciEps),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::GfClosedForms => "gf-closed-forms",
            Suite::Lemmas => "lemmas",
            Suite::OgfTheorems => "ogf-theorems",
            Suite::EgfTheorems => "egf-theorems",
            Suite::Chebyshev => "chebyshev",
            Suite::FibonacciHalf => "fibonacci-x-half",
            Suite::FibonacciEps => "fibonacci-eps",
        }
    }

    pub fn names() -> &'static [&'static str] {
        &[
            "all",
            "gf-closed-forms",
            "lemmas",
            "ogf-theorems",
            "egf-theorems",
            "chebyshev",
            "fibonacci-x-half",
            "fibonacci-eps",
        ]
    }

    pub fn contains(self, id: &str) -> bool {
        match self {
            Suite::All => true,
            Suite::GfClosedForms => {
                id.starts_with("ogf-") || id.starts_with("egf-") || id.starts_with("fe-")
            }
            Suite::Lemmas => id.starts_with("lem-"),
            Suite::OgfTheorems => id.starts_with("thm-ogf-"),
            Suite::EgfTheorems => id.starts_with("thm-egf-"),
            Suite::Chebyshev => id.starts_with("cor-cheb-") || id.starts_with("rem-cheb-"),
            Suite::FibonacciHalf => {
                id.starts_with("cor-fib-sum-") || id.starts_with("cor-fib-binom-")
            }
            Suite::FibonacciEps => id.starts_with("cor-fib-eps-"),
        }
    }
}

/// Grid id accepted by `verify` that expands to the whole ε-corollary
/// suite, reported record by record.
pub const EPS_GRID_ALIAS: &str = "cor-fib-eps-grid";

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AxisSummary {
    pub name: String,
    pub min: i64,
    pub max: i64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ParamValue {
    pub name: String,
    pub value: i64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    pub params: Vec<ParamValue>,
    pub difference: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "HOLDS")]
    Holds,
    #[serde(rename = "FAILS")]
    Fails,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
        })
    }
}

/// Outcome of one record over one resolved grid.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub source: String,
    pub reading: Reading,
    pub ring: String,
    pub params_tested: Vec<AxisSummary>,
    pub points: u64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub millis: u64,
}

/// All records, in catalog order (literal variants directly after their
/// canonical siblings).
pub fn all_records() -> &'static [IdentityRecord] {
    static CATALOG: Lazy<Vec<IdentityRecord>> = Lazy::new(catalog::build);
    &CATALOG
}

pub fn find(id: &str) -> Option<&'static IdentityRecord> {
    all_records().iter().find(|r| r.id == id)
}

/// Records of a suite matching a reading filter, in catalog order.
pub fn suite_records(suite: Suite, filter: ReadingFilter) -> Vec<&'static IdentityRecord> {
    all_records()
        .iter()
        .filter(|r| suite.contains(r.id) && filter.admits(r.reading))
        .collect()
}

fn resolved_axes(record: &IdentityRecord, profile: &Profile) -> Vec<AxisSummary> {
    record
        .params
        .iter()
        .map(|p| AxisSummary { name: p.name.to_string(), min: p.min, max: profile.axis_max(p) })
        .collect()
}

fn grid_is_empty(axes: &[AxisSummary]) -> bool {
    axes.iter().any(|a| a.max < a.min)
}

/// Walks the record's grid in lexicographic order (parameters in
/// declaration order, each ascending) and stops at the first nonzero
/// difference, which is therefore the minimal counterexample in that
/// order. An empty grid yields a vacuous `HOLDS` over zero points.
pub fn verify_record(
    record: &IdentityRecord,
    profile: &Profile,
) -> Result<VerificationReport, EngineError> {
    let axes = resolved_axes(record, profile);
    let started = Instant::now();
    let mut points = 0u64;
    let mut verdict = Verdict::Holds;
    let mut counterexample = None;

    if !grid_is_empty(&axes) {
        let mut cursor: Vec<i64> = axes.iter().map(|a| a.min).collect();
        'grid: loop {
            let assignment = Assignment::new(
                record
                    .params
                    .iter()
                    .zip(&cursor)
                    .map(|(p, v)| (p.name, *v))
                    .collect(),
            );
            let difference = (record.eval)(&assignment)?;
            points += 1;
            if !difference.is_zero() {
                verdict = Verdict::Fails;
                counterexample = Some(Counterexample {
                    params: assignment
                        .values()
                        .iter()
                        .map(|(n, v)| ParamValue { name: n.to_string(), value: *v })
                        .collect(),
                    difference: difference.to_string(),
                });
                break;
            }
            // Odometer step, last axis fastest.
            for i in (0..cursor.len()).rev() {
                cursor[i] += 1;
                if cursor[i] <= axes[i].max {
                    continue 'grid;
                }
                cursor[i] = axes[i].min;
            }
            break;
        }
    }

    Ok(VerificationReport {
        id: record.id.to_string(),
        source: record.source.to_string(),
        reading: record.reading,
        ring: record.ring.to_string(),
        params_tested: axes,
        points,
        verdict,
        counterexample,
        millis: started.elapsed().as_millis() as u64,
    })
}

/// Verifies a single record by id.
pub fn verify(id: &str, profile: &Profile) -> Result<VerificationReport, EngineError> {
    let record = find(id).ok_or_else(|| EngineError::UnknownIdentity(id.to_string()))?;
    verify_record(record, profile)
}

/// Verifies every suite record admitted by the filter. Records whose
/// resolved grid is empty are omitted from the result, so a profile that
/// empties all grids produces an empty report list.
pub fn verify_suite(
    suite: Suite,
    profile: &Profile,
    filter: ReadingFilter,
) -> Result<Vec<VerificationReport>, EngineError> {
    let mut reports = Vec::new();
    for record in suite_records(suite, filter) {
        if grid_is_empty(&resolved_axes(record, profile)) {
            continue;
        }
        reports.push(verify_record(record, profile)?);
    }
    Ok(reports)
}

/// Exact `LHS - RHS` of one record at one grid point. Parameters below the
/// record minimum are rejected; extra names are ignored.
pub fn difference(id: &str, params: &[(&str, i64)]) -> Result<RingValue, EngineError> {
    let record = find(id).ok_or_else(|| EngineError::UnknownIdentity(id.to_string()))?;
    let mut vals = Vec::with_capacity(record.params.len());
    for p in &record.params {
        let value = params
            .iter()
            .find(|(n, _)| *n == p.name)
            .ok_or_else(|| EngineError::MissingParameter(p.name.to_string()))?
            .1;
        if value < p.min {
            return Err(EngineError::OutOfRange {
                name: p.name.to_string(),
                value,
                min: p.min,
            });
        }
        vals.push((p.name, value));
    }
    (record.eval)(&Assignment::new(vals))
}

/// Series memo shared by the closed-form and functional-equation records:
/// expansions are computed in chunks of 32 so a grid walk reuses one
/// expansion instead of re-expanding per point.
static SERIES_CACHE: Lazy<Mutex<HashMap<String, Series<RationalFunction>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

const SERIES_CHUNK: usize = 32;

pub(crate) fn cached_coeff(
    key: &str,
    order: usize,
    build: impl Fn(usize) -> Result<Series<RationalFunction>, EngineError>,
) -> Result<RationalFunction, EngineError> {
    let mut cache = SERIES_CACHE.lock().expect("series cache poisoned");
    let stale = match cache.get(key) {
        Some(series) => series.order() < order,
        None => true,
    };
    if stale {
        let target = (order / SERIES_CHUNK + 1) * SERIES_CHUNK;
        let series = build(target)?;
        cache.insert(key.to_string(), series);
    }
    Ok(cache[key].coeff(order).clone())
}

#[cfg(test)]
mod tests;
