//! Partitions in a `k x (n-k)` rectangle and the encodings used to move between
//! them: 01-words, the quasi-periodic `phi` sequence, complements, conjugates
//! and cyclic rotation.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// The Grassmannian `Gr(k, n)`, equivalently the `k x (n-k)` rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RectContext {
    k: usize,
    n: usize,
}

impl RectContext {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k < 1 || k >= n {
            return Err(Error::InvalidContext { k, n });
        }
        Ok(Self { k, n })
    }

    /// Number of rows of the rectangle.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of columns, `n - k`.
    pub fn width(&self) -> usize {
        self.n - self.k
    }

    /// `k(n-k)`, the weight of the point class.
    pub fn area(&self) -> usize {
        self.k * self.width()
    }

    /// The full rectangle `((n-k)^k)`, indexing the point class.
    pub fn full(&self) -> BoundedPartition {
        BoundedPartition { partition: Partition(vec![self.width(); self.k]), ctx: *self }
    }

    pub fn empty(&self) -> BoundedPartition {
        BoundedPartition { partition: Partition::empty(), ctx: *self }
    }
}

impl fmt::Display for RectContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({}, {})", self.k, self.n)
    }
}

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros.
///
/// The derived ordering is lexicographic on the zero-padded parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotPartition { index: i + 1, parts });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The `i`-th part, 0-indexed, with zeros past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros (or truncated) to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.part(i)).collect()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|lambda|`, the number of boxes.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.first();
        let parts = (1..=first).map(|c| self.0.iter().take_while(|&&p| p >= c).count()).collect();
        Partition(parts)
    }

    /// Whether the diagram of `self` lies inside the diagram of `outer`.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        self.len() <= outer.len() && self.0.iter().zip(&outer.0).all(|(a, b)| a <= b)
    }

    pub fn fits(&self, ctx: RectContext) -> bool {
        self.len() <= ctx.k && self.first() <= ctx.width()
    }
}

/// `inner` is contained in `outer`, box by box.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.is_contained_in(outer)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// A partition together with the rectangle it is known to fit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundedPartition {
    partition: Partition,
    ctx: RectContext,
}

impl BoundedPartition {
    pub fn new(parts: Vec<usize>, ctx: RectContext) -> Result<Self> {
        Self::from_partition(Partition::new(parts)?, ctx)
    }

    pub fn from_partition(partition: Partition, ctx: RectContext) -> Result<Self> {
        if !partition.fits(ctx) {
            return Err(Error::OutsideRectangle { parts: partition.0, k: ctx.k, n: ctx.n });
        }
        Ok(Self { partition, ctx })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn into_partition(self) -> Partition {
        self.partition
    }

    pub fn ctx(&self) -> RectContext {
        self.ctx
    }

    pub fn parts(&self) -> &[usize] {
        self.partition.parts()
    }

    /// Parts padded with zeros to exactly `k` entries.
    pub fn padded(&self) -> Vec<usize> {
        self.partition.padded(self.ctx.k)
    }

    pub fn weight(&self) -> usize {
        self.partition.weight()
    }

    /// `lambda^vee = (n-k-lambda_k, ..., n-k-lambda_1)`.
    pub fn complement(&self) -> BoundedPartition {
        let w = self.ctx.width();
        let parts = self.padded().iter().rev().map(|p| w - p).collect();
        BoundedPartition {
            partition: Partition::new(parts).expect("complement of a partition is a partition"),
            ctx: self.ctx,
        }
    }

    /// Column lengths, as a partition in the transposed rectangle.
    pub fn conjugate(&self) -> Partition {
        self.partition.conjugate()
    }

    /// The border path from the SW to the NE corner: 0 = right, 1 = up.
    pub fn word(&self) -> Word01 {
        let RectContext { k, n } = self.ctx;
        let padded = self.padded();
        let mut bits = vec![0u8; n];
        // 1-based position of the m-th up step is lambda_{k+1-m} + m
        for m in 1..=k {
            bits[padded[k - m] + m - 1] = 1;
        }
        Word01 { bits, ctx: self.ctx }
    }

    pub fn phi_sequence(&self) -> PhiSequence {
        let mut acc = 0i64;
        let base = self
            .word()
            .bits
            .iter()
            .map(|&b| {
                acc += i64::from(b);
                acc
            })
            .collect();
        PhiSequence { base, k: self.ctx.k as i64 }
    }

    /// `phi_i(lambda)` for any integer `i`.
    pub fn phi(&self, i: i64) -> i64 {
        self.phi_sequence().at(i)
    }

    /// `S^i(lambda)`: rotate the 01-word `i` places to the left.
    pub fn cyclic_shift(&self, i: i64) -> BoundedPartition {
        self.word().rotate_left(i).partition()
    }

    /// `lambda_i + mu_{k+1-i} <= n-k` for all rows, i.e. `lambda` and the
    /// 180-degree rotation of `mu` do not overlap.
    pub fn is_nonoverlapping(&self, other: &BoundedPartition) -> Result<bool> {
        same_ctx(self, other)?;
        let w = self.ctx.width();
        let a = self.padded();
        let b = other.padded();
        Ok(a.iter().zip(b.iter().rev()).all(|(x, y)| x + y <= w))
    }
}

impl fmt::Display for BoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.partition.fmt(f)
    }
}

pub(crate) fn same_ctx(a: &BoundedPartition, b: &BoundedPartition) -> Result<RectContext> {
    if a.ctx != b.ctx {
        return Err(Error::ContextMismatch);
    }
    Ok(a.ctx)
}

/// Free-function form of [`BoundedPartition::is_nonoverlapping`].
pub fn is_nonoverlapping(lambda: &BoundedPartition, mu: &BoundedPartition) -> Result<bool> {
    lambda.is_nonoverlapping(mu)
}

/// Length-`n` word over {0, 1} with exactly `k` ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word01 {
    bits: Vec<u8>,
    ctx: RectContext,
}

impl Word01 {
    pub fn new(bits: Vec<u8>, ctx: RectContext) -> Result<Self> {
        if bits.len() != ctx.n {
            return Err(Error::WordLength { expected: ctx.n, found: bits.len() });
        }
        let ones = bits.iter().filter(|&&b| b == 1).count();
        if ones != ctx.k || bits.iter().any(|&b| b > 1) {
            return Err(Error::WordContent { expected_ones: ctx.k, found_ones: ones });
        }
        Ok(Self { bits, ctx })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn ctx(&self) -> RectContext {
        self.ctx
    }

    pub fn rotate_left(&self, i: i64) -> Word01 {
        let n = self.ctx.n as i64;
        let mut bits = self.bits.clone();
        bits.rotate_left(i.rem_euclid(n) as usize);
        Word01 { bits, ctx: self.ctx }
    }

    /// Inverse of [`BoundedPartition::word`].
    pub fn partition(&self) -> BoundedPartition {
        let k = self.ctx.k;
        let mut parts = vec![0usize; k];
        let ones = self.bits.iter().enumerate().filter(|(_, &b)| b == 1).map(|(i, _)| i + 1);
        for (m, pos) in (1..=k).zip(ones) {
            parts[k - m] = pos - m;
        }
        BoundedPartition::new(parts, self.ctx).expect("a valid 01-word encodes a bounded partition")
    }
}

/// Free-function form of [`BoundedPartition::word`].
pub fn word_of(lambda: &BoundedPartition) -> Word01 {
    lambda.word()
}

/// Decode a 01-word; rejects words of the wrong length or content.
pub fn partition_of(bits: &[u8], ctx: RectContext) -> Result<BoundedPartition> {
    Ok(Word01::new(bits.to_vec(), ctx)?.partition())
}

/// `phi_1 .. phi_n`, extended to all of Z by `phi_{i+n} = phi_i + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiSequence {
    base: Vec<i64>,
    k: i64,
}

impl PhiSequence {
    /// The stored values `phi_1 .. phi_n`.
    pub fn base(&self) -> &[i64] {
        &self.base
    }

    pub fn at(&self, i: i64) -> i64 {
        let n = self.base.len() as i64;
        let q = i.div_euclid(n);
        let r = i.rem_euclid(n);
        let within = if r == 0 { 0 } else { self.base[(r - 1) as usize] };
        within + q * self.k
    }
}
