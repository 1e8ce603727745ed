//! The sliding construction: push the columns of the 180-degree rotation of
//! `mu` up against `lambda`, then left-justify every row. The result carries
//! an LR filling with coefficient exactly one. The same slide, run inside a
//! box spanned by two frames on the cylinder, gives the candidate class for
//! an intermediate power of `q`.

use alloc::format;
use alloc::vec::Vec;

use crate::cylindric::{CylindricLoop, LatticePoint};
use crate::error::{Error, Result};
use crate::grassmann::{same_ctx, BoundedPartition, Partition};
use crate::lr::{SkewShape, SkewTableau};
use crate::quantum::{d_max, d_min};

/// Labeled cells stored column by column. Column `c` holds a contiguous run
/// of labels starting `offsets[c]` rows below the top of the working box;
/// `inner[c]` is the height of the shaded (`lambda`) part of that column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnDiagram {
    pub height: usize,
    pub inner: Vec<usize>,
    pub offsets: Vec<usize>,
    pub labels: Vec<Vec<u32>>,
}

impl ColumnDiagram {
    pub fn width(&self) -> usize {
        self.labels.len()
    }

    /// Label at `(row, col)`, if that cell is occupied by a labeled box.
    pub fn label(&self, row: usize, col: usize) -> Option<u32> {
        let off = self.offsets[col];
        (row >= off).then(|| self.labels[col].get(row - off).copied()).flatten()
    }

    pub fn is_inner(&self, row: usize, col: usize) -> bool {
        row < self.inner[col]
    }

    /// Rows top to bottom, each read right to left.
    pub fn reading_word(&self) -> Vec<u32> {
        (0..self.height).flat_map(|r| (0..self.width()).rev().filter_map(move |c| self.label(r, c))).collect()
    }

    /// Multiset of labels, sorted.
    fn label_multiset(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.labels.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

/// Snapshots of the slide: before, after the vertical slide, after
/// left-justification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlideTrace {
    pub stages: Vec<(&'static str, ColumnDiagram)>,
}

impl SlideTrace {
    pub fn initial(&self) -> &ColumnDiagram {
        &self.stages[0].1
    }

    pub fn theta(&self) -> &ColumnDiagram {
        &self.stages[1].1
    }

    pub fn justified(&self) -> &ColumnDiagram {
        &self.stages[2].1
    }

    pub fn preserves_labels(&self) -> bool {
        let first = self.initial().label_multiset();
        self.stages.iter().all(|(_, d)| d.label_multiset() == first)
    }
}

#[derive(Debug, Clone)]
struct Slid {
    /// Row lengths of the left-justified shape, one per box row.
    rows: Vec<usize>,
    /// Labels of the non-shaded cells, row by row, left to right.
    labels: Vec<Vec<u32>>,
    trace: SlideTrace,
}

#[derive(Debug)]
enum SlideFailure {
    Overlap(usize),
    NotPartition,
    Ragged(usize),
}

/// `inner` are the shaded column heights (weakly decreasing), `lower` the
/// heights of the bottom-aligned labeled columns (weakly increasing).
fn slide_columns(inner: &[usize], lower: &[usize], height: usize) -> core::result::Result<Slid, SlideFailure> {
    let width = inner.len();
    if let Some(c) = (0..width).find(|&c| inner[c] + lower[c] > height) {
        return Err(SlideFailure::Overlap(c));
    }
    let column_labels: Vec<Vec<u32>> = lower.iter().map(|&g| (1..=g as u32).collect()).collect();
    let initial = ColumnDiagram {
        height,
        inner: inner.to_vec(),
        offsets: lower.iter().map(|&g| height - g).collect(),
        labels: column_labels.clone(),
    };
    let theta = ColumnDiagram { offsets: inner.to_vec(), ..initial.clone() };

    let mut rows = Vec::with_capacity(height);
    let mut labels = Vec::with_capacity(height);
    for r in 0..height {
        let shaded = inner.iter().filter(|&&h| h > r).count();
        let row: Vec<u32> = (0..width).filter_map(|c| theta.label(r, c)).collect();
        rows.push(shaded + row.len());
        labels.push(row);
    }
    if rows.windows(2).any(|w| w[0] < w[1]) {
        return Err(SlideFailure::NotPartition);
    }
    let shaded_rows: Vec<usize> = (0..height).map(|r| inner.iter().filter(|&&h| h > r).count()).collect();
    let mut offsets = Vec::with_capacity(width);
    let mut justified_labels = Vec::with_capacity(width);
    for c in 0..width {
        let occupied: Vec<usize> = (0..height).filter(|&r| shaded_rows[r] <= c && c < rows[r]).collect();
        if occupied.windows(2).any(|w| w[1] != w[0] + 1) {
            return Err(SlideFailure::Ragged(c));
        }
        offsets.push(occupied.first().copied().unwrap_or(inner[c]));
        justified_labels.push(occupied.iter().map(|&r| labels[r][c - shaded_rows[r]]).collect());
    }
    let justified = ColumnDiagram { height, inner: inner.to_vec(), offsets, labels: justified_labels };
    let trace =
        SlideTrace { stages: alloc::vec![("initial", initial), ("slid up", theta), ("left-justified", justified)] };
    Ok(Slid { rows, labels, trace })
}

/// Sorted heights of the gaps between the columns of `lambda` and of the
/// rotated `mu`.
pub fn rho(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<Partition> {
    let ctx = same_ctx(lambda, mu)?;
    let (k, w) = (ctx.k(), ctx.width());
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let mut gaps = Vec::with_capacity(w);
    for i in 1..=w {
        let used = lc.part(i - 1) + mc.part(w - i);
        gaps.push(k.checked_sub(used).ok_or(Error::Overlap)?);
    }
    gaps.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(gaps)
}

/// `(rho')^vee`.
pub fn nu_classical(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<BoundedPartition> {
    let r = rho(lambda, mu)?;
    Ok(BoundedPartition::from_partition(r.conjugate(), lambda.ctx())?.complement())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlideResult {
    pub nu: BoundedPartition,
    pub witness: SkewTableau,
    pub trace: SlideTrace,
}

/// The geometric slide inside `R_kn`.
pub fn slide(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<SlideResult> {
    let ctx = same_ctx(lambda, mu)?;
    let (k, w) = (ctx.k(), ctx.width());
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let inner: Vec<usize> = (0..w).map(|c| lc.part(c)).collect();
    let lower: Vec<usize> = (0..w).map(|c| mc.part(w - 1 - c)).collect();
    let slid = slide_columns(&inner, &lower, k).map_err(|_| Error::Overlap)?;
    let nu = BoundedPartition::new(slid.rows, ctx)?;
    let shape = SkewShape::new(nu.partition().clone(), lambda.partition().clone())?;
    let witness = SkewTableau::new(shape, slid.labels).expect("rows match the skew shape");
    Ok(SlideResult { nu, witness, trace: slid.trace })
}

/// The working box and outcome of the sliding construction at degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumSlide {
    pub d: i64,
    /// SW corner of the frame translated by `(d, d)`.
    pub anchor: LatticePoint,
    /// Lowest point of `lambda[0]` on column `d` not below `anchor`.
    pub upper_anchor: LatticePoint,
    /// Top-left corner of the working box.
    pub origin: LatticePoint,
    pub height: usize,
    /// Left-justified rows of the whole box.
    pub nu_tilde: Vec<usize>,
    pub nu: BoundedPartition,
    pub trace: SlideTrace,
}

/// Run the slide inside the union of the frame anchored at `(k+d, d)` and the
/// frame anchored on `lambda[0]` directly above it.
pub fn quantum_slide(lambda: &BoundedPartition, mu: &BoundedPartition, d: i64) -> Result<QuantumSlide> {
    let ctx = same_ctx(lambda, mu)?;
    let (lo, hi) = (d_min(lambda, mu)?, d_max(lambda, mu)?);
    if d < lo || d > hi {
        return Err(Error::DegreeOutOfRange { d, min: lo, max: hi });
    }
    let (k, w) = (ctx.k() as i64, ctx.width() as i64);
    let anchor = LatticePoint::new(k + d, d);
    let upper = CylindricLoop::new(lambda.clone(), 0);
    let lower = CylindricLoop::new(mu.complement(), d);
    let anomaly = |msg: alloc::string::String| Error::GeometricAnomaly(format!("{lambda} * {mu} at d={d}: {msg}"));

    let (top, bottom) = upper.height_at(d);
    if top > anchor.row {
        return Err(anomaly(format!("lambda[0] passes below the anchor on column {d}")));
    }
    let upper_anchor = LatticePoint::new(bottom.min(anchor.row), d);
    let origin = LatticePoint::new(upper_anchor.row - k, d);
    let height = (anchor.row - origin.row) as usize;

    let mut inner = Vec::with_capacity(w as usize);
    let mut rotated = Vec::with_capacity(w as usize);
    for c in d..d + w {
        let h = upper.edge_row(c) - origin.row;
        let g = anchor.row - lower.edge_row(c);
        if !(0..=height as i64).contains(&h) || !(0..=k).contains(&g) {
            return Err(anomaly(format!("column {c} leaves the working box")));
        }
        inner.push(h as usize);
        rotated.push(g as usize);
    }
    let slid = slide_columns(&inner, &rotated, height).map_err(|f| match f {
        SlideFailure::Overlap(c) => anomaly(format!("regions overlap in column {}", d + c as i64)),
        SlideFailure::NotPartition => anomaly("slid rows are not a partition".into()),
        SlideFailure::Ragged(c) => anomaly(format!("column {} is not contiguous", d + c as i64)),
    })?;
    let tail = slid.rows[slid.rows.len() - ctx.k()..].to_vec();
    let nu = BoundedPartition::new(tail, ctx)?;
    Ok(QuantumSlide { d, anchor, upper_anchor, origin, height, nu_tilde: slid.rows, nu, trace: slid.trace })
}

/// The candidate class `nu(lambda, mu, d)`.
pub fn nu_quantum(lambda: &BoundedPartition, mu: &BoundedPartition, d: i64) -> Result<BoundedPartition> {
    Ok(quantum_slide(lambda, mu, d)?.nu)
}
