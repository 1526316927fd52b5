use thiserror::Error;

/// Errors surfaced by the partition, series, and bijection layers.
///
/// Internal invariants (for example a negative insertion count while a
/// symmetric diagram is being rebuilt) are bugs, not user errors, and panic
/// instead of returning one of these variants.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts handed to `Partition::new` were not positive and non-increasing.
    #[error("invalid partition: parts must be positive and non-increasing (got {0:?})")]
    InvalidPartition(Vec<u32>),

    /// A cell index fell outside the Young diagram.
    #[error("cell ({row}, {col}) lies outside the diagram")]
    CellOutOfRange { row: usize, col: usize },

    /// An operation restricted to partitions with all parts odd saw an even part.
    #[error("expected a partition into odd parts, found part {0}")]
    ExpectedOddParts(u32),

    /// An operation restricted to partitions with distinct parts saw a repeat.
    #[error("expected a partition into distinct parts, found repeated part {0}")]
    ExpectedDistinctParts(u32),

    /// A pair was passed to the injection outside its domain set.
    #[error("pair is not in the domain for L = {l}: {reason}")]
    PairOutsideDomain { l: u32, reason: String },

    /// Series inversion/division needs the lowest coefficient to be a unit
    /// (＋1 or −1) once any common monomial factor is removed.
    #[error("series division requires a leading coefficient of ±1")]
    NonUnitDivisor,

    /// `divide_exact` was asked for a quotient that is not a polynomial
    /// within the truncation window.
    #[error("inexact division: nonzero remainder inside the truncation window")]
    InexactDivision,

    /// A CLI-level name (generating function, verification target, …) was not
    /// recognised.
    #[error("unknown name: {0}")]
    UnknownName(String),

    /// A parameter was missing or malformed for the requested operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
