//! Exhaustive checks over every pair of Schubert classes of one Grassmannian.
//!
//! Each check maps a pair `(lambda, mu)` to a [`PairOutcome`]; outcomes are
//! collected in enumeration order, so a report does not depend on how many
//! worker threads produced it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use qschubert_core::{
    all_bounded_partitions, is_nonoverlapping, lr_coefficient, nu_classical, pieri_row, point_pairing, q_support,
    quantum_slide, rho, schubert_product, slide, toric_support, BoundedPartition, ClassSum, Error, GwEvaluator,
    Partition, RectContext,
};
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    Classical,
    Extremal,
    Support,
    Chain,
    Conjecture,
}

impl CheckKind {
    pub const ALL: [CheckKind; 5] =
        [CheckKind::Classical, CheckKind::Extremal, CheckKind::Support, CheckKind::Chain, CheckKind::Conjecture];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Classical => "classical",
            CheckKind::Extremal => "extremal",
            CheckKind::Support => "support",
            CheckKind::Chain => "chain",
            CheckKind::Conjecture => "conjecture",
        }
    }

    /// Whether a failure of this check refutes a theorem (as opposed to a
    /// conjecture).
    pub fn is_theorem(self) -> bool {
        self != CheckKind::Conjecture
    }

    /// Only pairs with a nonzero classical product are examined.
    pub fn needs_nonoverlap(self) -> bool {
        matches!(self, CheckKind::Classical | CheckKind::Chain)
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckKind::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            format!("unknown check `{s}` (expected one of classical, extremal, support, chain, conjecture, all)")
        })
    }
}

/// Parses `all` or a comma-separated list of check names.
pub fn parse_checks(s: &str) -> Result<Vec<CheckKind>, String> {
    if s.trim() == "all" {
        return Ok(CheckKind::ALL.to_vec());
    }
    let mut out = Vec::new();
    for name in s.split(',') {
        let c: CheckKind = name.trim().parse()?;
        if !out.contains(&c) {
            out.push(c);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    /// A proven statement did not hold.
    Mismatch,
    /// The conjectured class does not have coefficient one.
    Counterexample,
    /// The quantum slide could not be carried out.
    Anomaly,
    /// Two independent computations disagree, or an internal invariant broke.
    Internal,
}

impl FailureKind {
    pub fn name(self) -> &'static str {
        match self {
            FailureKind::Mismatch => "mismatch",
            FailureKind::Counterexample => "counterexample",
            FailureKind::Anomaly => "anomaly",
            FailureKind::Internal => "internal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub kind: FailureKind,
    pub lambda: Partition,
    pub mu: Partition,
    pub d: Option<i64>,
    pub nu: Option<Partition>,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Anomaly,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Anomaly => "anomaly",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub ctx: RectContext,
    pub check: CheckKind,
    /// Pairs examined.
    pub cases_run: u64,
    /// Pairs excluded by the check's precondition.
    pub skipped: u64,
    /// Individual assertions evaluated.
    pub subcases: u64,
    pub failures: Vec<Failure>,
    /// Counters that are recorded but not asserted.
    pub observations: BTreeMap<String, u64>,
    pub elapsed: Duration,
    pub status: Status,
}

impl VerificationReport {
    pub fn count(&self, kind: FailureKind) -> usize {
        self.failures.iter().filter(|f| f.kind == kind).count()
    }

    pub fn has_internal_failure(&self) -> bool {
        self.count(FailureKind::Internal) > 0
    }

    /// A proven statement failed.
    pub fn refutes_theorem(&self) -> bool {
        self.check.is_theorem() && self.count(FailureKind::Mismatch) > 0
    }
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    /// Worker threads; `None` lets rayon decide.
    pub jobs: Option<usize>,
    /// Visit each unordered pair once instead of every ordered pair.
    pub unordered: bool,
}

#[derive(Debug, Default)]
struct PairOutcome {
    skipped: bool,
    subcases: u64,
    failures: Vec<Failure>,
    observations: Vec<&'static str>,
}

impl PairOutcome {
    fn fail(
        &mut self,
        kind: FailureKind,
        pair: (&BoundedPartition, &BoundedPartition),
        d: Option<i64>,
        nu: Option<&BoundedPartition>,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        self.failures.push(Failure {
            kind,
            lambda: pair.0.partition().clone(),
            mu: pair.1.partition().clone(),
            d,
            nu: nu.map(|v| v.partition().clone()),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn error(&mut self, pair: (&BoundedPartition, &BoundedPartition), d: Option<i64>, err: Error) {
        let kind = match err {
            Error::GeometricAnomaly(_) => FailureKind::Anomaly,
            _ => FailureKind::Internal,
        };
        self.fail(kind, pair, d, None, "no error", err);
    }

    fn expect<T: PartialEq + fmt::Debug>(
        &mut self,
        pair: (&BoundedPartition, &BoundedPartition),
        d: Option<i64>,
        nu: Option<&BoundedPartition>,
        expected: T,
        actual: T,
    ) {
        self.subcases += 1;
        if expected != actual {
            self.fail(FailureKind::Mismatch, pair, d, nu, format!("{expected:?}"), format!("{actual:?}"));
        }
    }
}

fn pairs(ctx: RectContext, unordered: bool) -> Vec<(BoundedPartition, BoundedPartition)> {
    let all = all_bounded_partitions(ctx);
    let mut out = Vec::new();
    for (i, l) in all.iter().enumerate() {
        let start = if unordered { i } else { 0 };
        for m in &all[start..] {
            out.push((l.clone(), m.clone()));
        }
    }
    out
}

/// Runs one check over every pair of the Grassmannian.
pub fn run_check(ctx: RectContext, check: CheckKind, options: &Options) -> VerificationReport {
    let started = Instant::now();
    let work = pairs(ctx, options.unordered);
    let eval = |pair: &(BoundedPartition, BoundedPartition)| -> PairOutcome {
        let (l, m) = (&pair.0, &pair.1);
        match check {
            CheckKind::Classical => classical_pair(l, m),
            CheckKind::Extremal => extremal_pair(l, m),
            CheckKind::Support => support_pair(l, m),
            CheckKind::Chain => chain_pair(l, m),
            CheckKind::Conjecture => conjecture_pair(l, m),
        }
    };
    let outcomes: Vec<PairOutcome> = match options.jobs {
        Some(1) => work.iter().map(eval).collect(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(|| work.par_iter().map(eval).collect()),
        None => work.par_iter().map(eval).collect(),
    };

    let mut report = VerificationReport {
        ctx,
        check,
        cases_run: 0,
        skipped: 0,
        subcases: 0,
        failures: Vec::new(),
        observations: BTreeMap::new(),
        elapsed: Duration::ZERO,
        status: Status::Pass,
    };
    for o in outcomes {
        if o.skipped {
            report.skipped += 1;
            continue;
        }
        report.cases_run += 1;
        report.subcases += o.subcases;
        report.failures.extend(o.failures);
        for key in o.observations {
            *report.observations.entry(key.to_string()).or_insert(0) += 1;
        }
    }
    report.status = if report.failures.is_empty() {
        Status::Pass
    } else if report.failures.iter().all(|f| f.kind == FailureKind::Anomaly) {
        Status::Anomaly
    } else {
        Status::Fail
    };
    report.elapsed = started.elapsed();
    report
}

pub fn verify_classical(ctx: RectContext, options: &Options) -> VerificationReport {
    run_check(ctx, CheckKind::Classical, options)
}

pub fn verify_extremal(ctx: RectContext, options: &Options) -> VerificationReport {
    run_check(ctx, CheckKind::Extremal, options)
}

pub fn verify_support(ctx: RectContext, options: &Options) -> VerificationReport {
    run_check(ctx, CheckKind::Support, options)
}

pub fn verify_chain(ctx: RectContext, options: &Options) -> VerificationReport {
    run_check(ctx, CheckKind::Chain, options)
}

pub fn verify_conjecture(ctx: RectContext, options: &Options) -> VerificationReport {
    run_check(ctx, CheckKind::Conjecture, options)
}

fn classical_pair(l: &BoundedPartition, m: &BoundedPartition) -> PairOutcome {
    let mut out = PairOutcome::default();
    if !is_nonoverlapping(l, m).unwrap_or(false) {
        out.skipped = true;
        return out;
    }
    let pair = (l, m);
    let s = match slide(l, m) {
        Ok(s) => s,
        Err(e) => {
            out.error(pair, None, e);
            return out;
        }
    };
    match nu_classical(l, m) {
        Ok(nu) => out.expect(pair, None, Some(&s.nu), nu, s.nu.clone()),
        Err(e) => out.error(pair, None, e),
    }
    out.expect(pair, None, Some(&s.nu), true, s.witness.is_lr_filling(m.partition()));
    out.expect(pair, None, Some(&s.nu), true, s.trace.preserves_labels());
    out.expect(pair, None, Some(&s.nu), 1, lr_coefficient(l.partition(), m.partition(), s.nu.partition()));
    out
}

fn extremal_pair(l: &BoundedPartition, m: &BoundedPartition) -> PairOutcome {
    let mut out = PairOutcome::default();
    let pair = (l, m);
    let ev = match GwEvaluator::new(l, m) {
        Ok(ev) => ev,
        Err(e) => {
            out.error(pair, None, e);
            return out;
        }
    };
    let e = ev.extremal().clone();
    let (lo, hi) = (e.d_min as usize, e.d_max as usize);
    for nu in all_bounded_partitions(l.ctx()) {
        let oracle_lo = ev.product().coefficient(lo, nu.partition());
        let oracle_hi = ev.product().coefficient(hi, nu.partition());
        out.subcases += 2;
        if ev.at_d_min(&nu) != oracle_lo {
            out.fail(FailureKind::Internal, pair, Some(e.d_min), Some(&nu), oracle_lo, ev.at_d_min(&nu));
        }
        if ev.at_d_max(&nu) != oracle_hi {
            out.fail(FailureKind::Internal, pair, Some(e.d_max), Some(&nu), oracle_hi, ev.at_d_max(&nu));
        }
    }
    match nu_classical(&e.lambda_min, &e.mu_min) {
        Ok(nu) => match ev.invariant(&nu, e.d_min) {
            Ok(c) => out.expect(pair, Some(e.d_min), Some(&nu), 1, c),
            Err(err) => out.error(pair, Some(e.d_min), err),
        },
        Err(err) => out.fail(FailureKind::Mismatch, pair, Some(e.d_min), None, "nonoverlapping rotated pair", err),
    }
    match nu_classical(&e.lambda_max, &e.mu_max) {
        Ok(nu) => {
            let nu = nu.complement();
            match ev.invariant(&nu, e.d_max) {
                Ok(c) => out.expect(pair, Some(e.d_max), Some(&nu), 1, c),
                Err(err) => out.error(pair, Some(e.d_max), err),
            }
        }
        Err(err) => out.fail(FailureKind::Mismatch, pair, Some(e.d_max), None, "nonoverlapping rotated pair", err),
    }
    out
}

fn support_pair(l: &BoundedPartition, m: &BoundedPartition) -> PairOutcome {
    let mut out = PairOutcome::default();
    let pair = (l, m);
    let ev = match GwEvaluator::new(l, m) {
        Ok(ev) => ev,
        Err(e) => {
            out.error(pair, None, e);
            return out;
        }
    };
    let e = ev.extremal();
    let interval: Vec<usize> = (e.d_min as usize..=e.d_max as usize).collect();
    let q: Vec<usize> = ev.product().degrees().into_iter().collect();
    out.expect(pair, None, None, interval.clone(), q);
    match toric_support(l, m) {
        Ok(t) => out.expect(pair, None, None, interval, t.into_iter().collect()),
        Err(err) => out.error(pair, None, err),
    }
    out.expect(pair, None, None, false, ev.product().is_zero());
    out.expect(pair, None, None, true, ev.product().is_nonzero_mod2());
    match schubert_product(l, m) {
        Ok(classical) => {
            if ev.product().slice(0) != classical {
                out.fail(FailureKind::Internal, pair, Some(0), None, "classical product", "different d = 0 slice");
            }
        }
        Err(err) => out.error(pair, None, err),
    }
    if let Ok(support) = q_support(m, l) {
        // commutativity, checked through the support only to keep the run short
        out.expect(pair, None, None, ev.product().degrees(), support);
    }
    out
}

/// Survivors of the first Pieri step, the next column of rho, and whether
/// the product collapses onto the single survivor.
type FirstStep = (usize, usize, bool);

fn chain_pair(l: &BoundedPartition, m: &BoundedPartition) -> PairOutcome {
    let mut out = PairOutcome::default();
    if !is_nonoverlapping(l, m).unwrap_or(false) {
        out.skipped = true;
        return out;
    }
    let pair = (l, m);
    let ctx = l.ctx();
    let steps = match rho(l, m) {
        Ok(r) => r.conjugate(),
        Err(err) => {
            out.error(pair, None, err);
            return out;
        }
    };
    let run = || -> Result<(u64, Option<FirstStep>), Error> {
        let mut class = ClassSum::basis(l);
        for &p in steps.parts() {
            class = class.times_pieri(p)?;
        }
        let mut total = 0u64;
        for (nu, &c) in class.terms() {
            let nu = BoundedPartition::from_partition(nu.clone(), ctx)?;
            total += c * point_pairing(&nu, m, &ctx.empty())?;
        }
        let Some(&first) = steps.parts().first() else {
            return Ok((total, None));
        };
        // after the first Pieri step exactly one term still pairs with mu
        let survivors: Vec<BoundedPartition> = pieri_row(l, first)?
            .terms()
            .keys()
            .map(|nu| BoundedPartition::from_partition(nu.clone(), ctx))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .filter(|nu| is_nonoverlapping(nu, m).unwrap_or(false))
            .collect();
        let [tilde] = survivors.as_slice() else {
            return Ok((total, Some((survivors.len(), 0, false))));
        };
        let next = rho(tilde, m)?.conjugate().part(0);
        let mut lhs = ClassSum::zero(ctx);
        for nu in pieri_row(l, first)?.terms().keys() {
            let nu = BoundedPartition::from_partition(nu.clone(), ctx)?;
            for (t, &c) in schubert_product(&nu, m)?.terms() {
                lhs.add_term(t.clone(), c)?;
            }
        }
        let collapses = lhs == schubert_product(tilde, m)?;
        Ok((total, Some((1, next, collapses))))
    };
    match run() {
        Ok((total, step)) => {
            out.expect(pair, None, None, 1, total);
            if let Some((survivors, next, collapses)) = step {
                out.expect(pair, None, None, 1, survivors);
                if survivors == 1 {
                    out.expect(pair, None, None, steps.part(1), next);
                    out.expect(pair, None, None, true, collapses);
                }
            }
        }
        Err(err) => out.error(pair, None, err),
    }
    out
}

fn conjecture_pair(l: &BoundedPartition, m: &BoundedPartition) -> PairOutcome {
    let mut out = PairOutcome::default();
    let pair = (l, m);
    let ev = match GwEvaluator::new(l, m) {
        Ok(ev) => ev,
        Err(e) => {
            out.error(pair, None, e);
            return out;
        }
    };
    let e = ev.extremal().clone();
    for d in e.d_min..=e.d_max {
        out.subcases += 1;
        let qs = match quantum_slide(l, m, d) {
            Ok(qs) => qs,
            Err(err) => {
                out.error(pair, Some(d), err);
                continue;
            }
        };
        match ev.invariant(&qs.nu, d) {
            Ok(1) => {}
            Ok(c) => out.fail(FailureKind::Counterexample, pair, Some(d), Some(&qs.nu), 1, c),
            Err(err) => out.error(pair, Some(d), err),
        }
        if d == e.d_min {
            let rotated = nu_classical(&e.lambda_min, &e.mu_min).ok();
            out.observations.push(if rotated.as_ref() == Some(&qs.nu) {
                "d_min slide equals rotated classical slide"
            } else {
                "d_min slide differs from rotated classical slide"
            });
        }
        if d == e.d_max {
            let rotated = nu_classical(&e.lambda_max, &e.mu_max).ok().map(|v| v.complement());
            out.observations.push(if rotated.as_ref() == Some(&qs.nu) {
                "d_max slide equals rotated classical slide"
            } else {
                "d_max slide differs from rotated classical slide"
            });
        }
    }
    out
}
