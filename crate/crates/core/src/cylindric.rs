//! Cylindric loops `lambda[d]`, frames, and the cylindric/toric shape tests.
//!
//! Coordinates are matrix coordinates: `(row, col)` is `row` steps down and
//! `col` steps right of the origin, and the rectangle `R_kn` has its SW corner
//! at `(k, 0)`. Loops are never materialised; every predicate scans one period
//! of columns.

use alloc::collections::BTreeSet;

use crate::error::Result;
use crate::grassmann::{same_ctx, BoundedPartition, RectContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub row: i64,
    pub col: i64,
}

impl LatticePoint {
    pub const fn new(row: i64, col: i64) -> Self {
        Self { row, col }
    }
}

/// The border of `base`, translated by `(shift, shift)` and continued
/// periodically under `(-k, n-k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylindricLoop {
    base: BoundedPartition,
    shift: i64,
}

impl CylindricLoop {
    pub fn new(base: BoundedPartition, shift: i64) -> Self {
        Self { base, shift }
    }

    pub fn base(&self) -> &BoundedPartition {
        &self.base
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    fn ctx(&self) -> RectContext {
        self.base.ctx()
    }

    /// The point reached after `j` steps NE from the translated SW corner;
    /// negative `j` walks backwards.
    pub fn vertex(&self, j: i64) -> LatticePoint {
        let k = self.ctx().k() as i64;
        let phi = self.base.phi(j);
        LatticePoint::new(k - phi + self.shift, j - phi + self.shift)
    }

    /// Smallest and largest row of the loop on the vertical line `col`.
    pub fn height_at(&self, col: i64) -> (i64, i64) {
        let ctx = self.ctx();
        let (k, n, w) = (ctx.k() as i64, ctx.n() as i64, ctx.width() as i64);
        let rel = col - self.shift;
        let periods = rel.div_euclid(w);
        let target = rel.rem_euclid(w);
        let phi = self.base.phi_sequence();
        // j - phi_j is monotone and target lies in [0, n-k), so the matching
        // steps all lie strictly between -n and n
        let (lo, hi) = (-n + 1..n)
            .filter(|&j| j - phi.at(j) == target)
            .map(|j| phi.at(j))
            .fold((i64::MAX, i64::MIN), |(a, b), p| (a.min(p), b.max(p)));
        let top = k - hi + self.shift - periods * k;
        let bottom = k - lo + self.shift - periods * k;
        (top, bottom)
    }

    /// Row of the horizontal edge spanning `[col, col+1]`; unit cells of that
    /// column with top row `< edge_row(col)` lie NW of the loop.
    pub fn edge_row(&self, col: i64) -> i64 {
        self.height_at(col).0
    }
}

/// Free-function form of [`CylindricLoop::height_at`].
pub fn loop_height_at(lp: &CylindricLoop, col: i64) -> (i64, i64) {
    lp.height_at(col)
}

/// A translate of `R_kn`, located by its SW corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frame {
    pub anchor: LatticePoint,
    pub ctx: RectContext,
}

impl Frame {
    /// Half-open row range covered by the frame's cells.
    pub fn rows(&self) -> (i64, i64) {
        (self.anchor.row - self.ctx.k() as i64, self.anchor.row)
    }

    pub fn cols(&self) -> (i64, i64) {
        (self.anchor.col, self.anchor.col + self.ctx.width() as i64)
    }
}

/// `mu[d]` lies weakly right of and below `lambda[0]`.
pub fn is_cylindric_shape(mu: &BoundedPartition, d: i64, lambda: &BoundedPartition) -> Result<bool> {
    let ctx = same_ctx(mu, lambda)?;
    let upper = CylindricLoop::new(lambda.clone(), 0);
    let lower = CylindricLoop::new(mu.clone(), d);
    Ok((0..ctx.width() as i64).all(|c| lower.edge_row(c) >= upper.edge_row(c)))
}

/// `mu[d]` lies weakly between `lambda[0]` and its translate by `(k, 0)`.
pub fn is_toric(mu: &BoundedPartition, d: i64, lambda: &BoundedPartition) -> Result<bool> {
    let ctx = same_ctx(mu, lambda)?;
    let k = ctx.k() as i64;
    let upper = CylindricLoop::new(lambda.clone(), 0);
    let lower = CylindricLoop::new(mu.clone(), d);
    Ok((0..ctx.width() as i64).all(|c| {
        let (top, row) = (upper.edge_row(c), lower.edge_row(c));
        top <= row && row <= top + k
    }))
}

/// `{d >= 0 : mu^vee / d / lambda is toric}`.
pub fn toric_support(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<BTreeSet<usize>> {
    let ctx = same_ctx(lambda, mu)?;
    let dual = mu.complement();
    // the strip between the two loops holds |lambda| + |mu| - k(n-k) + dn boxes
    // per period, at most k(n-k)
    let bound = (lambda.weight() + mu.weight()) / ctx.n();
    let mut out = BTreeSet::new();
    for d in 0..=bound {
        if is_toric(&dual, d as i64, lambda)? {
            out.insert(d);
        }
    }
    Ok(out)
}

/// Slide a frame `i` steps NE along `lambda[0]`; returns the partition cut out
/// of the frame and how far the frame moved up.
pub fn frame_view(lambda: &BoundedPartition, i: i64) -> (BoundedPartition, i64) {
    let ctx = lambda.ctx();
    let k = ctx.k() as i64;
    let lp = CylindricLoop::new(lambda.clone(), 0);
    let frame = Frame { anchor: lp.vertex(i), ctx };
    let (top, bottom) = frame.rows();
    let (left, right) = frame.cols();
    let parts = (top..bottom).map(|row| (left..right).filter(|&c| row < lp.edge_row(c)).count()).collect();
    let partition = BoundedPartition::new(parts, ctx).expect("a frame on the loop cuts out a partition");
    (partition, k - frame.anchor.row)
}
