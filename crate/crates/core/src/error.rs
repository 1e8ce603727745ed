use core::fmt;

use alloc::string::String;
use alloc::vec::Vec;

/// Everything that can go wrong in the core crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `k` and `n` do not satisfy `1 <= k < n`.
    InvalidContext { k: usize, n: usize },
    /// Parts are not weakly decreasing; `index` is the first offending part.
    NotPartition { index: usize, parts: Vec<usize> },
    /// The partition does not fit the `k x (n-k)` rectangle.
    OutsideRectangle { parts: Vec<usize>, k: usize, n: usize },
    /// A 01-word has the wrong length.
    WordLength { expected: usize, found: usize },
    /// A 01-word has the wrong number of ones, or a letter other than 0/1.
    WordContent { expected_ones: usize, found_ones: usize },
    /// `inner` is not contained in `outer`.
    NotSkew { inner: Vec<usize>, outer: Vec<usize> },
    /// Two operands live in different Grassmannians.
    ContextMismatch,
    /// The operation requires `sigma_lambda * sigma_mu != 0`.
    Overlap,
    /// Pieri row length out of `0..=n-k`.
    PieriOutOfRange { p: usize, max: usize },
    /// A q-degree below zero.
    NegativeDegree(i64),
    /// A q-degree outside the powers appearing in the product.
    DegreeOutOfRange { d: i64, min: i64, max: i64 },
    /// A quantum coefficient came out negative after rim-hook reduction.
    NegativeCoefficient { degree: usize, parts: Vec<usize>, value: i64 },
    /// Two independent routes to the same number disagree.
    OracleDisagreement(String),
    /// Coefficient arithmetic overflowed.
    Overflow,
    /// The quantum sliding box did not carry well-formed regions.
    GeometricAnomaly(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidContext { k, n } => {
                write!(f, "invalid Grassmannian Gr({k}, {n}): need 1 <= k < n")
            }
            Error::NotPartition { index, parts } => write!(
                f,
                "{parts:?} is not weakly decreasing: part {} ({}) exceeds its predecessor",
                index + 1,
                parts[*index]
            ),
            Error::OutsideRectangle { parts, k, n } => {
                write!(f, "{parts:?} does not fit the {k}x{} rectangle", n - k)
            }
            Error::WordLength { expected, found } => {
                write!(f, "01-word has length {found}, expected {expected}")
            }
            Error::WordContent { expected_ones, found_ones } => {
                write!(f, "01-word must consist of 0/1 with exactly {expected_ones} ones, found {found_ones}")
            }
            Error::NotSkew { inner, outer } => {
                write!(f, "{inner:?} is not contained in {outer:?}")
            }
            Error::ContextMismatch => f.write_str("operands belong to different Grassmannians"),
            Error::Overlap => f.write_str("partitions overlap: the classical product is zero"),
            Error::PieriOutOfRange { p, max } => {
                write!(f, "Pieri class sigma_{p} out of range 0..={max}")
            }
            Error::NegativeDegree(d) => write!(f, "negative q-degree {d}"),
            Error::DegreeOutOfRange { d, min, max } => {
                write!(f, "q-degree {d} outside the valid range {min}..={max}")
            }
            Error::NegativeCoefficient { degree, parts, value } => {
                write!(f, "rim-hook reduction produced coefficient {value} for q^{degree} sigma{parts:?}")
            }
            Error::OracleDisagreement(msg) => write!(f, "oracle disagreement: {msg}"),
            Error::Overflow => f.write_str("coefficient overflow"),
            Error::GeometricAnomaly(msg) => write!(f, "geometric anomaly: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
