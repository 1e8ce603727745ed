//! Acceptance criteria 1 to 10. Runs without the libtest harness so that one
//! PASS/FAIL line per criterion is always printed; exits nonzero on any FAIL.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use qschubert::harness::{run_check, CheckKind, FailureKind, Options, VerificationReport};
use qschubert_core::*;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ctx(k: usize, n: usize) -> RectContext {
    RectContext::new(k, n).unwrap()
}

fn bp(parts: &[usize], c: RectContext) -> BoundedPartition {
    BoundedPartition::new(parts.to_vec(), c).unwrap()
}

fn options() -> Options {
    Options { jobs: None, unordered: false }
}

fn criterion_1() -> Check {
    let l = bp(&[6, 5, 4, 2], ctx(5, 11));
    ensure!(l.word().bits() == [1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1], "word {:?}", l.word().bits());
    let phi: Vec<i64> = (1..=11).map(|i| l.phi(i)).collect();
    ensure!(phi == [1, 1, 1, 2, 2, 2, 3, 3, 4, 4, 5], "phi {phi:?}");
    ensure!(l.complement().parts() == [6, 4, 2, 1], "complement {}", l.complement());
    ensure!(l.conjugate().parts() == [4, 4, 3, 3, 2, 1], "conjugate {}", l.conjugate());
    Ok(())
}

fn criterion_2() -> Check {
    let l = bp(&[6, 5, 4, 2], ctx(5, 11));
    let s = l.cyclic_shift(2);
    ensure!(s.parts() == [5, 5, 4, 3, 1], "S^2 = {s}");
    ensure!(s.word().bits() == [0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0], "word {:?}", s.word().bits());
    Ok(())
}

fn criterion_3() -> Check {
    let c = ctx(5, 11);
    let (l, m) = (bp(&[4, 3, 1], c), bp(&[5, 4, 4], c));
    let r = rho(&l, &m).map_err(|e| e.to_string())?;
    ensure!(r.parts() == [2, 2, 2, 2, 1], "rho = {r}");
    let s = slide(&l, &m).map_err(|e| e.to_string())?;
    ensure!(s.nu.parts() == [6, 6, 6, 2, 1], "nu = {}", s.nu);
    let c = lr_coefficient(l.partition(), m.partition(), s.nu.partition());
    ensure!(c == 1, "coefficient {c}");
    let all: Vec<SkewTableau> = enumerate_lr_fillings(l.partition(), m.partition(), s.nu.partition()).collect();
    ensure!(all == vec![s.witness.clone()], "{} fillings, witness {:?}", all.len(), s.witness.rows());
    Ok(())
}

fn criterion_4() -> Check {
    let c = ctx(5, 11);
    let (l, m) = (bp(&[6, 5, 4, 2], c), bp(&[6, 4, 3, 3, 2], c));
    let nu = nu_quantum(&l, &m, 2).map_err(|e| e.to_string())?;
    ensure!(nu.parts() == [6, 6, 1], "nu = {nu}");
    let gw = gw_invariant(&l, &m, &nu, 2).map_err(|e| e.to_string())?;
    ensure!(gw == 1, "invariant {gw}");
    let (lo, hi) = (d_min(&l, &m).unwrap(), d_max(&l, &m).unwrap());
    ensure!((lo, hi) == (1, 3), "d_min, d_max = {lo}, {hi}");
    let rim: Vec<usize> = quantum_product(&l, &m).unwrap().degrees().into_iter().collect();
    let toric: Vec<usize> = toric_support(&l, &m).unwrap().into_iter().collect();
    ensure!(rim == [1, 2, 3], "rim-hook support {rim:?}");
    ensure!(toric == [1, 2, 3], "toric support {toric:?}");
    Ok(())
}

/// Ordered pairs whose product is nonzero, counted by containment.
fn nonoverlapping_pairs(c: RectContext) -> u64 {
    let all = all_bounded_partitions(c);
    let mut count = 0;
    for l in &all {
        for m in &all {
            if contains(l.partition(), m.complement().partition()) {
                count += 1;
            }
        }
    }
    count
}

fn sweep(check: CheckKind, contexts: &[(usize, usize)], expect_pairs: impl Fn(RectContext) -> u64) -> Check {
    for &(k, n) in contexts {
        let c = ctx(k, n);
        let r: VerificationReport = run_check(c, check, &options());
        ensure!(
            r.failures.is_empty(),
            "{check} Gr({k},{n}): {} failures, first {:?}",
            r.failures.len(),
            r.failures.first()
        );
        let want = expect_pairs(c);
        ensure!(r.cases_run == want, "{check} Gr({k},{n}): {} pairs, expected {want}", r.cases_run);
    }
    Ok(())
}

fn all_pairs(c: RectContext) -> u64 {
    let m = all_bounded_partitions(c).len() as u64;
    m * m
}

fn criterion_5() -> Check {
    sweep(CheckKind::Classical, &[(2, 4), (2, 5), (3, 6), (3, 7)], nonoverlapping_pairs)
}

fn criterion_6() -> Check {
    sweep(CheckKind::Extremal, &[(2, 4), (2, 5), (3, 6)], all_pairs)
}

fn criterion_7() -> Check {
    sweep(CheckKind::Support, &[(2, 5), (3, 6), (3, 7)], all_pairs)
}

fn criterion_8() -> Check {
    sweep(CheckKind::Chain, &[(3, 6)], nonoverlapping_pairs)
}

fn criterion_9() -> Check {
    for (k, n) in [(2, 5), (3, 6), (3, 7)] {
        let r = run_check(ctx(k, n), CheckKind::Conjecture, &options());
        let (ce, an) = (r.count(FailureKind::Counterexample), r.count(FailureKind::Anomaly));
        for f in &r.failures {
            println!(
                "  Gr({k},{n}) {}: lambda={} mu={} d={:?} nu={:?} {}",
                f.kind.name(),
                f.lambda,
                f.mu,
                f.d,
                f.nu,
                f.actual
            );
        }
        ensure!(r.failures.is_empty(), "Gr({k},{n}): {ce} counterexamples, {an} anomalies, {} total", r.failures.len());
        ensure!(r.cases_run == all_pairs(ctx(k, n)), "Gr({k},{n}): {} pairs", r.cases_run);
    }
    Ok(())
}

// Criterion 10: the invariant families, exhaustively over small contexts, and
// LR coefficients against a label-by-label enumeration.

fn at(v: &[usize], i: usize) -> usize {
    v.get(i).copied().unwrap_or(0)
}

fn partitions_of(m: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (1..=m.min(cap)).rev() {
            cur.push(v);
            rec(m - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

fn brute_lr(lambda: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    let total: usize = lambda.iter().chain(mu).sum();
    if total != nu.iter().sum::<usize>() || (0..lambda.len()).any(|i| lambda[i] > at(nu, i)) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..nu.len()).flat_map(|r| (at(lambda, r)..nu[r]).map(move |c| (r, c))).collect();
    let labels = mu.len().max(1) as u32;
    let mut fill = vec![1u32; cells.len()];
    let mut count = 0;
    loop {
        let entry: BTreeMap<(usize, usize), u32> = cells.iter().copied().zip(fill.iter().copied()).collect();
        let semistandard = entry.iter().all(|(&(r, c), &v)| {
            entry.get(&(r, c + 1)).is_none_or(|&x| v <= x) && entry.get(&(r + 1, c)).is_none_or(|&x| v < x)
        });
        if semistandard {
            let mut seen = vec![0usize; labels as usize + 1];
            let mut lattice = true;
            for r in 0..nu.len() {
                for c in (at(lambda, r)..nu[r]).rev() {
                    let x = entry[&(r, c)] as usize;
                    seen[x] += 1;
                    lattice &= x == 1 || seen[x] <= seen[x - 1];
                }
            }
            if lattice && (1..=labels as usize).all(|i| seen[i] == at(mu, i - 1)) {
                count += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == fill.len() {
                return count;
            }
            if fill[i] < labels {
                fill[i] += 1;
                break;
            }
            fill[i] = 1;
            i += 1;
        }
    }
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn criterion_10() -> Check {
    for (k, n) in [(1, 2), (2, 4), (2, 5), (3, 6), (3, 7)] {
        let c = ctx(k, n);
        let (ki, ni) = (k as i64, n as i64);
        let all = all_bounded_partitions(c);
        for l in &all {
            ensure!(partition_of(l.word().bits(), c).as_ref() == Ok(l), "word round trip {l}");
            ensure!(l.phi(0) == 0 && l.phi(ni) == ki, "phi ends {l}");
            for i in -2 * ni..2 * ni {
                ensure!(l.phi(i + ni) == l.phi(i) + ki, "phi period {l} at {i}");
                ensure!(matches!(l.phi(i + 1) - l.phi(i), 0 | 1), "phi step {l} at {i}");
            }
            ensure!(l.complement().complement() == *l, "complement involution {l}");
            ensure!(l.conjugate().conjugate() == *l.partition(), "conjugate involution {l}");
            ensure!(l.cyclic_shift(ni) == *l, "rotation period {l}");
            for i in -ni..=2 * ni {
                ensure!(l.cyclic_shift(i).cyclic_shift(-i) == *l, "rotation inverse {l} {i}");
                ensure!(l.cyclic_shift(i).cyclic_shift(1) == l.cyclic_shift(i + 1), "rotation law {l} {i}");
                ensure!(frame_view(l, i) == (l.cyclic_shift(i), l.phi(i)), "frame view {l} {i}");
            }
        }
    }
    for a in 0..=4 {
        for b in 0..=4 - a {
            for l in partitions_of(a) {
                for m in partitions_of(b) {
                    for nu in partitions_of(a + b) {
                        let (pl, pm, pn) = (part(&l), part(&m), part(&nu));
                        let v = lr_coefficient(&pl, &pm, &pn);
                        ensure!(v == brute_lr(&l, &m, &nu), "c({l:?},{m:?};{nu:?}) = {v}");
                        ensure!(v == lr_coefficient(&pm, &pl, &pn), "symmetry {l:?} {m:?} {nu:?}");
                        ensure!(
                            v == lr_coefficient(&pl.conjugate(), &pm.conjugate(), &pn.conjugate()),
                            "conjugation {l:?} {m:?} {nu:?}"
                        );
                    }
                    // wrong degree is always zero
                    for nu in partitions_of(a + b + 1) {
                        ensure!(lr_coefficient(&part(&l), &part(&m), &part(&nu)) == 0, "degree {l:?} {m:?} {nu:?}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("border encodings of (6,5,4,2)", criterion_1, Duration::from_millis(1)),
        ("rotation S^2 of (6,5,4,2)", criterion_2, Duration::from_millis(1)),
        ("classical slide example", criterion_3, Duration::from_millis(100)),
        ("quantum slide example", criterion_4, Duration::from_secs(5)),
        ("classical slide, exhaustive", criterion_5, Duration::from_secs(300)),
        ("extremal degrees, exhaustive", criterion_6, Duration::from_secs(300)),
        ("q-support, exhaustive", criterion_7, Duration::from_secs(300)),
        ("Pieri chain, exhaustive", criterion_8, Duration::from_secs(60)),
        ("intermediate degree sweep", criterion_9, Duration::from_secs(600)),
        ("invariants and oracles", criterion_10, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed <= *limit {
                Ok(())
            } else {
                Err(format!("took {elapsed:?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({elapsed:.2?}, limit {limit:?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({elapsed:.2?}, limit {limit:?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
