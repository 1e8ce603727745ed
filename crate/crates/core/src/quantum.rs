//! Quantum products of Schubert classes.
//!
//! The least and greatest powers of `q` in `sigma_lambda * sigma_mu` come from
//! the `phi` sequences; at those two degrees the Gromov-Witten invariants are
//! classical LR coefficients of cyclically rotated partitions. For every
//! degree there is also a full oracle: expand `s_lambda s_mu` over partitions
//! with at most `k` rows and reduce each term by removing `n`-rim hooks.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grassmann::{same_ctx, BoundedPartition, Partition, RectContext};
use crate::lr::{lr_coefficient, lr_expand, schubert_product, ClassSum};

/// `-min_i (phi_i(lambda) + phi_{-i}(mu))` over `1 <= i <= n`.
pub fn d_min(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<i64> {
    Ok(min_witness(lambda, mu)?.0)
}

/// `-max_i (phi_{-i}(lambda) + phi_{i-(n-k)}(mu))` over `1 <= i <= n`.
pub fn d_max(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<i64> {
    Ok(max_witness(lambda, mu)?.0)
}

fn min_witness(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<(i64, i64)> {
    let ctx = same_ctx(lambda, mu)?;
    let (pl, pm) = (lambda.phi_sequence(), mu.phi_sequence());
    let (best, at) = (1..=ctx.n() as i64).map(|i| (pl.at(i) + pm.at(-i), i)).min().expect("n >= 2");
    Ok((-best, at))
}

fn max_witness(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<(i64, i64)> {
    let ctx = same_ctx(lambda, mu)?;
    let w = ctx.width() as i64;
    let (pl, pm) = (lambda.phi_sequence(), mu.phi_sequence());
    // least index among the maximisers
    let (best, at) = (1..=ctx.n() as i64).map(|i| (pl.at(-i) + pm.at(i - w), -i)).max().expect("n >= 2");
    Ok((-best, -at))
}

/// The extremal degrees, the indices realising them (least index on ties)
/// and the rotated partitions whose classical LR coefficients give the
/// Gromov-Witten invariants there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalData {
    pub d_min: i64,
    pub d_max: i64,
    pub a: i64,
    pub b: i64,
    pub lambda_min: BoundedPartition,
    pub mu_min: BoundedPartition,
    pub lambda_max: BoundedPartition,
    pub mu_max: BoundedPartition,
}

pub fn extremal_data(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<ExtremalData> {
    let ctx = same_ctx(lambda, mu)?;
    let (d_min, a) = min_witness(lambda, mu)?;
    let (d_max, b) = max_witness(lambda, mu)?;
    Ok(ExtremalData {
        d_min,
        d_max,
        a,
        b,
        lambda_min: lambda.cyclic_shift(a),
        mu_min: mu.cyclic_shift(-a),
        lambda_max: lambda.complement().cyclic_shift(b),
        mu_max: mu.complement().cyclic_shift(ctx.width() as i64 - b),
    })
}

/// Result of reducing a partition with at most `k` rows into the rectangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimHookReduction {
    pub degree: usize,
    pub sign: i8,
    pub reduced: BoundedPartition,
}

/// Remove `n`-rim hooks starting at the end of the first row until the
/// partition fits the rectangle. `None` means the class vanishes: too many
/// rows, a hook that runs out of rim, or a removal that leaves a
/// non-partition.
pub fn rim_hook_reduce(nu: &Partition, ctx: RectContext) -> Option<RimHookReduction> {
    let (k, n) = (ctx.k(), ctx.n());
    if nu.len() > k {
        return None;
    }
    let mut rows = nu.padded(k);
    let mut degree = 0;
    let mut sign = 1i8;
    while rows[0] > ctx.width() {
        let (mut r, mut c) = (0usize, rows[0] - 1);
        let mut trimmed = rows.clone();
        for _ in 1..n {
            if r + 1 < k && rows[r + 1] > c {
                trimmed[r] = c;
                r += 1;
            } else if c > 0 {
                c -= 1;
            } else {
                return None;
            }
        }
        if r + 1 < k && rows[r + 1] > c {
            return None;
        }
        trimmed[r] = c;
        rows = trimmed;
        degree += 1;
        if (k - (r + 1)) % 2 == 1 {
            sign = -sign;
        }
    }
    let reduced = BoundedPartition::new(rows, ctx).ok()?;
    Some(RimHookReduction { degree, sign, reduced })
}

/// An element of `QH^*(Gr(k, n))`: coefficients indexed by `(d, nu)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuantumClassSum {
    ctx: RectContext,
    terms: BTreeMap<(usize, Partition), u64>,
}

impl QuantumClassSum {
    pub fn ctx(&self) -> RectContext {
        self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<(usize, Partition), u64> {
        &self.terms
    }

    pub fn coefficient(&self, d: usize, nu: &Partition) -> u64 {
        // BTreeMap lookup needs an owned key
        self.terms.get(&(d, nu.clone())).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Powers of `q` with at least one nonzero term.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(|(d, _)| *d).collect()
    }

    /// The `q^d` slice as a classical class.
    pub fn slice(&self, d: usize) -> ClassSum {
        let mut out = ClassSum::zero(self.ctx);
        for ((e, nu), &c) in &self.terms {
            if *e == d {
                out.add_term(nu.clone(), c).expect("slice of a valid sum");
            }
        }
        out
    }

    /// Whether some coefficient is odd.
    pub fn is_nonzero_mod2(&self) -> bool {
        self.terms.values().any(|c| c % 2 == 1)
    }
}

/// `sigma_lambda * sigma_mu` in quantum cohomology, by rim-hook reduction.
pub fn quantum_product(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<QuantumClassSum> {
    let ctx = same_ctx(lambda, mu)?;
    let mut signed: BTreeMap<(usize, Partition), i64> = BTreeMap::new();
    for (nu, c) in lr_expand(lambda.partition(), mu.partition(), ctx.k()) {
        let Some(red) = rim_hook_reduce(&nu, ctx) else { continue };
        let c = i64::try_from(c).map_err(|_| Error::Overflow)?;
        let slot = signed.entry((red.degree, red.reduced.into_partition())).or_insert(0);
        *slot = slot.checked_add(i64::from(red.sign) * c).ok_or(Error::Overflow)?;
    }
    let mut terms = BTreeMap::new();
    for ((d, nu), c) in signed {
        match c {
            0 => {}
            c if c < 0 => return Err(Error::NegativeCoefficient { degree: d, parts: nu.parts().to_vec(), value: c }),
            c => {
                terms.insert((d, nu), c as u64);
            }
        }
    }
    Ok(QuantumClassSum { ctx, terms })
}

/// Evaluates `c_{lambda mu}^nu(d)` for one pair, reusing the oracle product.
#[derive(Debug, Clone)]
pub struct GwEvaluator {
    lambda: BoundedPartition,
    mu: BoundedPartition,
    extremal: ExtremalData,
    product: QuantumClassSum,
}

impl GwEvaluator {
    pub fn new(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<Self> {
        Ok(Self {
            lambda: lambda.clone(),
            mu: mu.clone(),
            extremal: extremal_data(lambda, mu)?,
            product: quantum_product(lambda, mu)?,
        })
    }

    pub fn extremal(&self) -> &ExtremalData {
        &self.extremal
    }

    pub fn product(&self) -> &QuantumClassSum {
        &self.product
    }

    /// `c^nu(d_min)` as the classical `c_{lambda^min mu^min}^nu`.
    pub fn at_d_min(&self, nu: &BoundedPartition) -> u64 {
        let e = &self.extremal;
        lr_coefficient(e.lambda_min.partition(), e.mu_min.partition(), nu.partition())
    }

    /// `c^nu(d_max)` as the classical `c_{lambda^max mu^max}^{nu^vee}`.
    pub fn at_d_max(&self, nu: &BoundedPartition) -> u64 {
        let e = &self.extremal;
        lr_coefficient(e.lambda_max.partition(), e.mu_max.partition(), nu.complement().partition())
    }

    /// Prefers the rotated classical route at the extremal degrees, checking
    /// it against the rim-hook product.
    pub fn invariant(&self, nu: &BoundedPartition, d: i64) -> Result<u64> {
        let ctx = same_ctx(&self.lambda, nu)?;
        if d < 0 {
            return Err(Error::NegativeDegree(d));
        }
        let lhs = self.lambda.weight() + self.mu.weight();
        if lhs != nu.weight() + d as usize * ctx.n() {
            return Ok(0);
        }
        let oracle = self.product.coefficient(d as usize, nu.partition());
        let mut routes = Vec::new();
        if d == self.extremal.d_min {
            routes.push(("d_min", self.at_d_min(nu)));
        }
        if d == self.extremal.d_max {
            routes.push(("d_max", self.at_d_max(nu)));
        }
        for (name, value) in &routes {
            if *value != oracle {
                return Err(Error::OracleDisagreement(format!(
                    "c_{{{},{}}}^{}({d}): {name} rule gives {value}, rim-hook product gives {oracle}",
                    self.lambda, self.mu, nu
                )));
            }
        }
        Ok(routes.first().map_or(oracle, |r| r.1))
    }
}

/// `c_{lambda mu}^nu(d)`.
pub fn gw_invariant(lambda: &BoundedPartition, mu: &BoundedPartition, nu: &BoundedPartition, d: i64) -> Result<u64> {
    if d < 0 {
        return Err(Error::NegativeDegree(d));
    }
    same_ctx(lambda, nu)?;
    GwEvaluator::new(lambda, mu)?.invariant(nu, d)
}

/// Powers of `q` appearing in `sigma_lambda * sigma_mu`.
pub fn q_support(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<BTreeSet<usize>> {
    Ok(quantum_product(lambda, mu)?.degrees())
}

/// The `d = 0` slice must be the classical product.
pub fn classical_slice_matches(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<bool> {
    Ok(quantum_product(lambda, mu)?.slice(0) == schubert_product(lambda, mu)?)
}
