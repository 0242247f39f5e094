//! Identity registry and grid runner.
//!
//! Every registry entry expands its parameter grid into independent cases.
//! Cases run in parallel, and the reports are returned sorted by
//! `(identity, params)`, so output does not depend on scheduling.

mod grid;
mod registry;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

pub use grid::{lambda_grid, y_grid};

use crate::bernoulli::bernoulli;
use crate::error::{Error, Result};
use crate::exact::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(Error::UnknownProfile(other.to_string())),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::Quick => "quick",
            Profile::Full => "full",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped-precondition")]
    SkippedPrecondition,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedPrecondition => "skipped-precondition",
        }
    }
}

/// A parameter value: an index or a rational sample point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    Rat(Rat),
}

impl ParamValue {
    fn as_rat(&self) -> Rat {
        match self {
            ParamValue::Int(i) => Rat::int(*i),
            ParamValue::Rat(r) => r.clone(),
        }
    }
}

impl Ord for ParamValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ParamValue::Int(a), ParamValue::Int(b)) => a.cmp(b),
            _ => self.as_rat().cmp(&other.as_rat()),
        }
    }
}

impl PartialOrd for ParamValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(i) => write!(f, "{i}"),
            ParamValue::Rat(r) => write!(f, "{r}"),
        }
    }
}

/// Integers serialize as JSON numbers, rationals as literal strings.
impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ParamValue::Int(i) => serializer.serialize_i64(*i),
            ParamValue::Rat(r) => r.serialize(serializer),
        }
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<Rat> for ParamValue {
    fn from(v: Rat) -> Self {
        ParamValue::Rat(v)
    }
}

impl From<&Rat> for ParamValue {
    fn from(v: &Rat) -> Self {
        ParamValue::Rat(v.clone())
    }
}

/// Ordered parameter binding. Each identity always uses the same names in
/// the same order, so comparing bindings compares values.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Params(Vec<(&'static str, ParamValue)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn with(mut self, name: &'static str, value: impl Into<ParamValue>) -> Self {
        self.0.push((name, value.into()));
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &ParamValue)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.0.iter().find(|(k, _)| *k == name).map(|(_, v)| v)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: Params,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub elapsed_us: u64,
}

/// Outcome of evaluating the printed (uncorrected) form of an errata entry at
/// its witness point. `refuted` must be true.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessReport {
    pub identity: String,
    pub params: Params,
    pub printed_lhs: String,
    pub printed_rhs: String,
    pub refuted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub equation: &'static str,
    pub quote: &'static str,
}

/// Upper bounds for an entry's parameter grid. `None` means the entry does
/// not use that parameter.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Bounds {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

impl Bounds {
    pub fn n(&self) -> usize {
        self.n_max.unwrap_or(0)
    }

    pub fn m(&self) -> usize {
        self.m_max.unwrap_or(0)
    }

    pub fn k(&self) -> usize {
        self.k_max.unwrap_or(0)
    }

    pub fn p(&self) -> usize {
        self.p_max.unwrap_or(0)
    }

    pub fn samples(&self) -> usize {
        self.samples.unwrap_or(grid::DEFAULT_SAMPLES)
    }

    /// Replace every bound the override sets and this entry uses.
    pub fn apply(mut self, o: &Bounds) -> Bounds {
        fn merge(slot: &mut Option<usize>, v: Option<usize>) {
            if slot.is_some() && v.is_some() {
                *slot = v;
            }
        }
        merge(&mut self.n_max, o.n_max);
        merge(&mut self.m_max, o.m_max);
        merge(&mut self.k_max, o.k_max);
        merge(&mut self.p_max, o.p_max);
        merge(&mut self.samples, o.samples);
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RegistryEntry {
    pub identity: &'static str,
    pub anchor: Anchor,
    pub statement: &'static str,
    pub corrected: bool,
    /// Absolute tolerance for entries whose oracle is a truncated series or
    /// numerical quadrature. Exact entries have none.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub quick: Bounds,
    pub full: Bounds,
    #[serde(skip)]
    pub(crate) cases: fn(&Bounds) -> Vec<Case>,
    #[serde(skip)]
    pub(crate) witness: Option<fn() -> Witness>,
}

impl RegistryEntry {
    pub fn bounds(&self, profile: Profile) -> Bounds {
        match profile {
            Profile::Quick => self.quick,
            Profile::Full => self.full,
        }
    }
}

/// Knobs that perturb evaluation, used to demonstrate that the harness
/// actually detects wrong values.
#[derive(Debug, Clone, Default)]
pub struct Context {
    /// Add 1 to `B_n` for this `n` wherever the verifier reads a Bernoulli
    /// number as one side of an identity.
    pub bernoulli_fault: Option<usize>,
}

impl Context {
    pub fn bernoulli(&self, n: usize) -> Rat {
        let b = bernoulli(n);
        if self.bernoulli_fault == Some(n) {
            b + Rat::int(1)
        } else {
            b
        }
    }
}

pub(crate) enum Outcome {
    Compared {
        lhs: String,
        rhs: String,
        pass: bool,
    },
    Skipped,
}

pub(crate) type Eval = Box<dyn Fn(&Context) -> Outcome + Send + Sync>;

pub(crate) struct Case {
    params: Params,
    eval: Eval,
}

impl Case {
    pub(crate) fn new(
        params: Params,
        eval: impl Fn(&Context) -> Outcome + Send + Sync + 'static,
    ) -> Self {
        Case {
            params,
            eval: Box::new(eval),
        }
    }
}

pub(crate) struct Witness {
    params: Params,
    printed_lhs: String,
    printed_rhs: String,
}

impl Witness {
    pub(crate) fn new(params: Params, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Witness {
            params,
            printed_lhs: lhs.to_string(),
            printed_rhs: rhs.to_string(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub identities: usize,
    pub reports: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub witnesses: usize,
    pub witnesses_unrefuted: usize,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.witnesses_unrefuted == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<Profile>,
    pub summary: Summary,
    pub reports: Vec<IdentityReport>,
    pub witnesses: Vec<WitnessReport>,
}

impl RunResult {
    fn new(
        profile: Option<Profile>,
        identities: usize,
        reports: Vec<IdentityReport>,
        witnesses: Vec<WitnessReport>,
    ) -> Self {
        let count = |s| reports.iter().filter(|r| r.status == s).count();
        let summary = Summary {
            identities,
            reports: reports.len(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::SkippedPrecondition),
            witnesses: witnesses.len(),
            witnesses_unrefuted: witnesses.iter().filter(|w| !w.refuted).count(),
        };
        RunResult {
            profile,
            summary,
            reports,
            witnesses,
        }
    }
}

pub fn list_identities() -> &'static [RegistryEntry] {
    registry::entries()
}

pub fn find_identity(id: &str) -> Result<&'static RegistryEntry> {
    list_identities()
        .iter()
        .find(|e| e.identity == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Run one identity on its full-profile grid, with any bounds in `overrides`
/// replacing the defaults.
pub fn verify(id: &str, overrides: &Bounds) -> Result<Vec<IdentityReport>> {
    verify_with(id, overrides, &Context::default())
}

pub fn verify_with(id: &str, overrides: &Bounds, ctx: &Context) -> Result<Vec<IdentityReport>> {
    let entry = find_identity(id)?;
    Ok(run_entries(&[(entry, entry.full.apply(overrides))], ctx))
}

/// Evaluate the printed form of a corrected entry at its witness point.
pub fn check_witness(id: &str) -> Result<Option<WitnessReport>> {
    Ok(witness_report(find_identity(id)?))
}

fn witness_report(entry: &RegistryEntry) -> Option<WitnessReport> {
    entry.witness.map(|w| {
        let w = w();
        WitnessReport {
            identity: entry.identity.to_string(),
            refuted: w.printed_lhs != w.printed_rhs,
            params: w.params,
            printed_lhs: w.printed_lhs,
            printed_rhs: w.printed_rhs,
        }
    })
}

pub fn verify_all(profile: Profile) -> RunResult {
    verify_all_with(profile, &Context::default())
}

pub fn verify_all_with(profile: Profile, ctx: &Context) -> RunResult {
    let entries = list_identities();
    let jobs: Vec<_> = entries.iter().map(|e| (e, e.bounds(profile))).collect();
    let reports = run_entries(&jobs, ctx);
    let witnesses = entries.iter().filter_map(witness_report).collect();
    RunResult::new(Some(profile), entries.len(), reports, witnesses)
}

/// Run a single identity and its witness, packaged like a profile run.
pub fn verify_report(id: &str, overrides: &Bounds, ctx: &Context) -> Result<RunResult> {
    let reports = verify_with(id, overrides, ctx)?;
    let witnesses = check_witness(id)?.into_iter().collect();
    Ok(RunResult::new(None, 1, reports, witnesses))
}

fn run_entries(jobs: &[(&RegistryEntry, Bounds)], ctx: &Context) -> Vec<IdentityReport> {
    let cases: Vec<(&'static str, Case)> = jobs
        .iter()
        .flat_map(|(e, b)| (e.cases)(b).into_iter().map(move |c| (e.identity, c)))
        .collect();
    let mut reports: Vec<IdentityReport> = cases
        .into_par_iter()
        .map(|(id, case)| {
            let start = Instant::now();
            let outcome = (case.eval)(ctx);
            let elapsed_us = start.elapsed().as_micros() as u64;
            let (status, lhs, rhs) = match outcome {
                Outcome::Compared { lhs, rhs, pass } => {
                    (if pass { Status::Pass } else { Status::Fail }, lhs, rhs)
                }
                Outcome::Skipped => (Status::SkippedPrecondition, String::new(), String::new()),
            };
            IdentityReport {
                identity: id.to_string(),
                params: case.params,
                status,
                lhs,
                rhs,
                elapsed_us,
            }
        })
        .collect();
    reports.sort_by(|a, b| (&a.identity, &a.params).cmp(&(&b.identity, &b.params)));
    reports
}
