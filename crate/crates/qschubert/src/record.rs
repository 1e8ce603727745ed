//! Structured output: one top-level object per command invocation.

use std::collections::BTreeMap;

use qschubert_core::{BoundedPartition, ClassSum, ExtremalData, Partition, QuantumClassSum, RectContext, SkewTableau};
use serde::{Deserialize, Serialize};

use crate::harness::{Failure, VerificationReport};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Context {
    pub k: usize,
    pub n: usize,
}

impl From<RectContext> for Context {
    fn from(c: RectContext) -> Self {
        Context { k: c.k(), n: c.n() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    /// Absent only for commands that do not fix a Grassmannian.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<Context>,
    pub payload: Payload,
}

impl OutputRecord {
    pub fn new(context: Option<RectContext>, payload: Payload) -> Self {
        OutputRecord { schema_version: SCHEMA_VERSION.to_string(), context: context.map(Context::from), payload }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records contain only plain data")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub partition: Vec<usize>,
    pub coefficient: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumTerm {
    pub d: usize,
    pub partition: Vec<usize>,
    pub coefficient: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub d_min: i64,
    pub d_max: i64,
    pub a: i64,
    pub b: i64,
    pub lambda_min: Vec<usize>,
    pub mu_min: Vec<usize>,
    pub lambda_max: Vec<usize>,
    pub mu_max: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuResult {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    pub nu: Vec<usize>,
    pub coefficient: u64,
    /// Rows of the LR filling of `nu / lambda` (classical case only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<u32>>>,
    /// All rows of the left-justified box (quantum case only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu_tilde: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub kind: String,
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<Vec<usize>>,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub check: String,
    pub status: String,
    pub cases_run: u64,
    pub skipped: u64,
    pub subcases: u64,
    pub failures: Vec<FailureRecord>,
    pub observations: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Product { lambda: Vec<usize>, mu: Vec<usize>, terms: Vec<Term> },
    QuantumProduct { lambda: Vec<usize>, mu: Vec<usize>, terms: Vec<QuantumTerm> },
    Bounds(Bounds),
    Nu(NuResult),
    LrCoefficient { lambda: Vec<usize>, mu: Vec<usize>, nu: Vec<usize>, value: u64 },
    Verify { reports: Vec<ReportRecord> },
    Render { diagram: String, style: String, document: String },
}

fn parts(p: &Partition) -> Vec<usize> {
    p.parts().to_vec()
}

/// Terms in decreasing order of the zero-padded parts.
pub fn product_terms(sum: &ClassSum) -> Vec<Term> {
    sum.terms().iter().rev().map(|(nu, &c)| Term { partition: parts(nu), coefficient: c }).collect()
}

/// Terms by increasing degree, then decreasing partition.
pub fn quantum_terms(sum: &QuantumClassSum) -> Vec<QuantumTerm> {
    let mut out: Vec<QuantumTerm> =
        sum.terms().iter().map(|((d, nu), &c)| QuantumTerm { d: *d, partition: parts(nu), coefficient: c }).collect();
    out.sort_by(|x, y| x.d.cmp(&y.d).then_with(|| y.partition.cmp(&x.partition)));
    out
}

pub fn bounds(lambda: &BoundedPartition, mu: &BoundedPartition, e: &ExtremalData) -> Bounds {
    Bounds {
        lambda: lambda.parts().to_vec(),
        mu: mu.parts().to_vec(),
        d_min: e.d_min,
        d_max: e.d_max,
        a: e.a,
        b: e.b,
        lambda_min: e.lambda_min.parts().to_vec(),
        mu_min: e.mu_min.parts().to_vec(),
        lambda_max: e.lambda_max.parts().to_vec(),
        mu_max: e.mu_max.parts().to_vec(),
    }
}

pub fn witness_rows(t: &SkewTableau) -> Vec<Vec<u32>> {
    t.rows().to_vec()
}

fn failure(f: &Failure) -> FailureRecord {
    FailureRecord {
        kind: f.kind.name().to_string(),
        lambda: parts(&f.lambda),
        mu: parts(&f.mu),
        d: f.d,
        nu: f.nu.as_ref().map(parts),
        expected: f.expected.clone(),
        actual: f.actual.clone(),
    }
}

pub fn report(r: &VerificationReport, timings: bool) -> ReportRecord {
    ReportRecord {
        check: r.check.name().to_string(),
        status: r.status.name().to_string(),
        cases_run: r.cases_run,
        skipped: r.skipped,
        subcases: r.subcases,
        failures: r.failures.iter().map(failure).collect(),
        observations: r.observations.clone(),
        elapsed_ms: timings.then_some(r.elapsed.as_millis() as u64),
    }
}
