//! Enumeration, file formats and verification suites.

pub mod census;
pub mod formats;
pub mod suites;

use thiserror::Error;

pub use census::{census_bound, enumerate_shifted, enumerate_shifted_multicomplexes, enumerate_shifted_with};
pub use formats::FormatError;
pub use suites::SuiteReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("{0}")]
    Bounds(String),
}
