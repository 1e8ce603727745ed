//! Littlewood-Richardson coefficients by explicit enumeration of LR fillings,
//! classical Schubert products, the Pieri rule and the point-class pairing.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grassmann::{same_ctx, BoundedPartition, Partition, RectContext};

/// The cells of `outer` not in `inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::NotSkew { inner: inner.parts().to_vec(), outer: outer.parts().to_vec() });
        }
        Ok(Self { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Half-open column range `[inner_r, outer_r)` of row `r` (0-indexed).
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r), self.outer.part(r))
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        let (a, b) = self.row_span(row);
        a <= col && col < b
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }
}

/// A filling of a skew shape by positive integers. Rows and columns are
/// 0-indexed; `rows[r][j]` is the entry in column `inner_r + j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    /// Rows must have exactly the lengths the shape dictates.
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Option<Self> {
        let ok = (0..shape.rows().max(rows.len())).all(|r| {
            let (a, b) = shape.row_span(r);
            rows.get(r).map_or(0, Vec::len) == b - a
        });
        if !ok {
            return None;
        }
        let mut rows = rows;
        rows.resize(shape.rows(), Vec::new());
        Some(Self { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<u32> {
        let (a, b) = self.shape.row_span(row);
        (a..b).contains(&col).then(|| self.rows[row][col - a])
    }

    /// Rows read right to left, top row first.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }

    pub fn is_semistandard(&self) -> bool {
        if self.rows.iter().flatten().any(|&v| v == 0) {
            return false;
        }
        let rows_weak = self.rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let cols_strict = (1..self.rows.len()).all(|r| {
            let (a, b) = self.shape.row_span(r);
            (a..b).all(|c| match self.entry(r - 1, c) {
                Some(up) => up < self.rows[r][c - a],
                None => true,
            })
        });
        rows_weak && cols_strict
    }

    /// Semistandard with a Yamanouchi reading word of content `mu`.
    pub fn is_lr_filling(&self, mu: &Partition) -> bool {
        self.is_semistandard() && is_yamanouchi(&self.reading_word(), mu)
    }
}

/// Every prefix has at least as many `i`s as `(i+1)`s, and the total content
/// is exactly `mu`.
pub fn is_yamanouchi(word: &[u32], mu: &Partition) -> bool {
    let mut counts = vec![0usize; mu.len() + 1];
    for &v in word {
        let v = v as usize;
        if v == 0 || v > mu.len() {
            return false;
        }
        counts[v] += 1;
        if v > 1 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    (1..=mu.len()).all(|i| counts[i] == mu.part(i - 1))
}

/// Streams every LR filling of `nu / lambda` with content `mu`.
///
/// Cells are filled in reading order; row weakness, column strictness and the
/// Yamanouchi prefix condition are maintained incrementally, so every dead
/// branch is cut at the first offending cell.
#[derive(Debug, Clone)]
pub struct LrFillings {
    shape: Option<SkewShape>,
    mu: Vec<usize>,
    cells: Vec<Cell>,
    vals: Vec<u32>,
    counts: Vec<usize>,
    pos: usize,
    started: bool,
    done: bool,
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    /// 1-based row number; entries in row `r` never exceed `r`.
    row_bound: u32,
    right: Option<usize>,
    above: Option<usize>,
}

impl LrFillings {
    pub fn new(lambda: &Partition, mu: &Partition, nu: &Partition) -> Self {
        let feasible =
            lambda.is_contained_in(nu) && mu.is_contained_in(nu) && lambda.weight() + mu.weight() == nu.weight();
        let shape = feasible.then(|| SkewShape::new(nu.clone(), lambda.clone()).unwrap());
        let mut cells = Vec::new();
        if let Some(shape) = &shape {
            let mut index_of = BTreeMap::new();
            for r in 0..shape.rows() {
                let (a, b) = shape.row_span(r);
                for c in (a..b).rev() {
                    let right = (c + 1 < b).then(|| index_of[&(r, c + 1)]);
                    let above = (r > 0 && shape.contains_cell(r - 1, c)).then(|| index_of[&(r - 1, c)]);
                    index_of.insert((r, c), cells.len());
                    cells.push(Cell { row_bound: r as u32 + 1, right, above });
                }
            }
        }
        let len = cells.len();
        Self {
            shape,
            mu: mu.parts().to_vec(),
            cells,
            vals: vec![0; len],
            counts: vec![0; mu.len() + 1],
            pos: 0,
            started: false,
            done: false,
        }
    }

    fn admissible(&self, cell: &Cell, v: u32) -> bool {
        let vi = v as usize;
        if self.counts[vi] >= self.mu[vi - 1] {
            return false;
        }
        if vi > 1 && self.counts[vi] >= self.counts[vi - 1] {
            return false;
        }
        cell.right.is_none_or(|i| v <= self.vals[i])
    }

    fn snapshot(&self) -> SkewTableau {
        let shape = self.shape.clone().expect("only feasible shapes yield");
        let mut rows = Vec::with_capacity(shape.rows());
        let mut it = self.vals.iter();
        for r in 0..shape.rows() {
            let (a, b) = shape.row_span(r);
            let mut row: Vec<u32> = it.by_ref().take(b - a).copied().collect();
            row.reverse();
            rows.push(row);
        }
        SkewTableau { shape, rows }
    }
}

impl Iterator for LrFillings {
    type Item = SkewTableau;

    fn next(&mut self) -> Option<SkewTableau> {
        if self.done || self.shape.is_none() {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.cells.is_empty() {
                self.done = true;
                return Some(self.snapshot());
            }
            self.pos = 0;
        } else {
            self.pos = self.cells.len() - 1;
        }
        let top = self.mu.len() as u32;
        loop {
            let cell = self.cells[self.pos];
            let cur = self.vals[self.pos];
            if cur > 0 {
                self.counts[cur as usize] -= 1;
            }
            let low = cell.above.map_or(1, |i| self.vals[i] + 1).max(cur + 1);
            let high = cell.row_bound.min(top);
            let next = (low..=high).find(|&v| self.admissible(&cell, v));
            match next {
                Some(v) => {
                    self.vals[self.pos] = v;
                    self.counts[v as usize] += 1;
                    if self.pos + 1 == self.cells.len() {
                        return Some(self.snapshot());
                    }
                    self.pos += 1;
                    self.vals[self.pos] = 0;
                }
                None => {
                    self.vals[self.pos] = 0;
                    if self.pos == 0 {
                        self.done = true;
                        return None;
                    }
                    self.pos -= 1;
                }
            }
        }
    }
}

/// All LR fillings of `nu / lambda` of content `mu`; empty when the shape is
/// infeasible.
pub fn enumerate_lr_fillings(lambda: &Partition, mu: &Partition, nu: &Partition) -> LrFillings {
    LrFillings::new(lambda, mu, nu)
}

/// `c_{lambda mu}^nu`. No rectangle is assumed: `nu_1` may be arbitrarily
/// large.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    LrFillings::new(lambda, mu, nu).count() as u64
}

/// The expansion of `s_lambda * s_mu` restricted to partitions with at most
/// `max_rows` rows.
pub fn lr_expand(lambda: &Partition, mu: &Partition, max_rows: usize) -> BTreeMap<Partition, u64> {
    let total = lambda.weight() + mu.weight();
    let width = lambda.first() + mu.first();
    let rows = max_rows.min(lambda.len() + mu.len());
    let lower: Vec<usize> = (0..rows).map(|i| lambda.part(i).max(mu.part(i))).collect();
    if lambda.len().max(mu.len()) > rows {
        return BTreeMap::new();
    }
    let mut out = BTreeMap::new();
    let mut current = Vec::with_capacity(rows);
    candidates(&lower, width, total, &mut current, &mut |parts| {
        let nu = Partition::new(parts.to_vec()).unwrap();
        let c = lr_coefficient(lambda, mu, &nu);
        if c > 0 {
            out.insert(nu, c);
        }
    });
    out
}

/// Partitions `nu` with `lower <= nu` row-wise, `nu_1 <= cap` and `|nu| = remaining`.
fn candidates(lower: &[usize], cap: usize, remaining: usize, current: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    let i = current.len();
    if i == lower.len() {
        if remaining == 0 {
            emit(current);
        }
        return;
    }
    let rest_min: usize = lower[i + 1..].iter().sum();
    let rows_left = lower.len() - i;
    for v in lower[i]..=cap.min(remaining) {
        if v + rest_min > remaining || v * rows_left < remaining {
            continue;
        }
        current.push(v);
        candidates(lower, v, remaining - v, current, emit);
        current.pop();
    }
}

/// A cohomology class: integer combination of Schubert classes of one
/// Grassmannian.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassSum {
    ctx: RectContext,
    terms: BTreeMap<Partition, u64>,
}

impl ClassSum {
    pub fn zero(ctx: RectContext) -> Self {
        Self { ctx, terms: BTreeMap::new() }
    }

    pub fn basis(lambda: &BoundedPartition) -> Self {
        let mut s = Self::zero(lambda.ctx());
        s.terms.insert(lambda.partition().clone(), 1);
        s
    }

    pub fn ctx(&self) -> RectContext {
        self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn coefficient(&self, nu: &Partition) -> u64 {
        self.terms.get(nu).copied().unwrap_or(0)
    }

    /// Coefficient of the point class `sigma_{(n-k)^k}`.
    pub fn point_coefficient(&self) -> u64 {
        self.coefficient(self.ctx.full().partition())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, nu: Partition, c: u64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        debug_assert!(nu.fits(self.ctx));
        let slot = self.terms.entry(nu).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        Ok(())
    }

    /// `self * sigma_p` by the Pieri rule, extended linearly.
    pub fn times_pieri(&self, p: usize) -> Result<ClassSum> {
        let mut out = ClassSum::zero(self.ctx);
        for (lambda, &c) in &self.terms {
            let lambda = BoundedPartition::from_partition(lambda.clone(), self.ctx)?;
            for (nu, &e) in pieri_row(&lambda, p)?.terms() {
                out.add_term(nu.clone(), c.checked_mul(e).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }
}

/// `sigma_lambda * sigma_mu` in `H^*(Gr(k, n))`.
pub fn schubert_product(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<ClassSum> {
    let ctx = same_ctx(lambda, mu)?;
    let mut out = ClassSum::zero(ctx);
    if lambda.weight() + mu.weight() > ctx.area() {
        return Ok(out);
    }
    for (nu, c) in lr_expand(lambda.partition(), mu.partition(), ctx.k()) {
        if nu.first() <= ctx.width() {
            out.add_term(nu, c)?;
        }
    }
    Ok(out)
}

/// `sigma_lambda * sigma_p`: add a horizontal strip of `p` boxes inside the
/// rectangle in every possible way.
pub fn pieri_row(lambda: &BoundedPartition, p: usize) -> Result<ClassSum> {
    let ctx = lambda.ctx();
    if p > ctx.width() {
        return Err(Error::PieriOutOfRange { p, max: ctx.width() });
    }
    let base = lambda.padded();
    let mut out = ClassSum::zero(ctx);
    let mut current = Vec::with_capacity(ctx.k());
    strips(&base, ctx.width(), p, &mut current, &mut |parts| {
        let nu = Partition::new(parts.to_vec()).unwrap();
        out.terms.insert(nu, 1);
    });
    Ok(out)
}

/// Interlacing sequences `base_i <= nu_i <= base_{i-1}` (with `base_0 = cap`).
fn strips(base: &[usize], cap: usize, remaining: usize, current: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    let i = current.len();
    if i == base.len() {
        if remaining == 0 {
            emit(current);
        }
        return;
    }
    let upper = if i == 0 { cap } else { base[i - 1] };
    for v in base[i]..=upper.min(base[i] + remaining) {
        current.push(v);
        strips(base, cap, remaining - (v - base[i]), current, emit);
        current.pop();
    }
}

/// Coefficient of the point class in `sigma_lambda sigma_mu sigma_nu`, which
/// is `c_{lambda mu}^{nu^vee}`.
pub fn point_pairing(lambda: &BoundedPartition, mu: &BoundedPartition, nu: &BoundedPartition) -> Result<u64> {
    let ctx = same_ctx(lambda, mu)?;
    same_ctx(lambda, nu)?;
    if lambda.weight() + mu.weight() + nu.weight() != ctx.area() {
        return Ok(0);
    }
    Ok(lr_coefficient(lambda.partition(), mu.partition(), nu.complement().partition()))
}
