//! Schubert calculus on the Grassmannian `Gr(k, n)`.
//!
//! Schubert classes are indexed by partitions in the `k x (n-k)` rectangle.
//! This crate multiplies them classically (Littlewood-Richardson fillings,
//! Pieri rule) and quantum mechanically (rim-hook reduction), computes the
//! extremal powers of `q` from the `phi` sequences and cylindric loops, and
//! builds, by sliding columns, a class that appears with coefficient one.
//!
//! Everything is exact integer arithmetic and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cylindric;
pub mod error;
pub mod grassmann;
pub mod lr;
pub mod quantum;
pub mod slide;

pub use crate::cylindric::{
    frame_view, is_cylindric_shape, is_toric, loop_height_at, toric_support, CylindricLoop, Frame, LatticePoint,
};
pub use crate::error::{Error, Result};
pub use crate::grassmann::{
    contains, is_nonoverlapping, partition_of, word_of, BoundedPartition, Partition, PhiSequence, RectContext, Word01,
};
pub use crate::lr::{
    enumerate_lr_fillings, is_yamanouchi, lr_coefficient, lr_expand, pieri_row, point_pairing, schubert_product,
    ClassSum, LrFillings, SkewShape, SkewTableau,
};
pub use crate::quantum::{
    d_max, d_min, extremal_data, gw_invariant, q_support, quantum_product, rim_hook_reduce, ExtremalData, GwEvaluator,
    QuantumClassSum, RimHookReduction,
};
pub use crate::slide::{
    nu_classical, nu_quantum, quantum_slide, rho, slide, ColumnDiagram, QuantumSlide, SlideResult, SlideTrace,
};

/// Every partition in the rectangle, in increasing lexicographic order of the
/// zero-padded parts (empty partition first, full rectangle last).
pub fn all_bounded_partitions(ctx: RectContext) -> alloc::vec::Vec<BoundedPartition> {
    let (k, w) = (ctx.k(), ctx.width());
    let mut out = alloc::vec::Vec::new();
    let mut current = alloc::vec::Vec::with_capacity(k);
    fn rec(
        k: usize,
        cap: usize,
        current: &mut alloc::vec::Vec<usize>,
        ctx: RectContext,
        out: &mut alloc::vec::Vec<BoundedPartition>,
    ) {
        if current.len() == k {
            out.push(BoundedPartition::new(current.clone(), ctx).unwrap());
            return;
        }
        for v in 0..=cap {
            current.push(v);
            rec(k, v, current, ctx, out);
            current.pop();
        }
    }
    rec(k, w, &mut current, ctx, &mut out);
    out
}
