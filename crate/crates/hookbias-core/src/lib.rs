//! Exact-arithmetic toolkit for partition statistics built around hooks of
//! length two: censuses, Sylvester-style bijections, and truncated q-series.

pub mod bivariate;
pub mod census;
pub mod error;
pub mod genfun;
pub mod partition;
pub mod report;
pub mod series;
pub mod sylvester;
pub mod verify;

pub use bivariate::BivariateSeries;
pub use census::{Bound, CensusTable, CrossoverRow, RefinedCensus, Side, Weight};
pub use error::{Error, Result};
pub use report::{Status, VerificationReport, Violation};
pub use partition::{Partition, PartitionClass, Render};
pub use series::{gaussian_binomial, poch, ProductLength, TruncatedSeries};
pub use sylvester::{inject_pair, psi, sigma, InjectionCheck, PairPartition};
pub use verify::{Overrides, ScanTarget, Target};
