//! Combined-cycle power plant dataset ingestion.
//!
//! Loads the five-column CSV (ambient temperature, exhaust vacuum,
//! ambient pressure, relative humidity, net electrical output) into a
//! column-oriented table, resolving the public file's `AT` header to the
//! canonical `T`. Validation helpers check values against the published
//! per-column ranges and screen rows by squared Mahalanobis distance.
//!
//! The full dataset is not bundled; a 50-row synthetic fixture with the
//! same schema ships under `testdata/` for offline tests.

mod error;
mod load;
mod outliers;
mod schema;
mod table;
mod validate;

pub use error::DataError;
pub use load::load_csv;
pub use outliers::{mahalanobis_outliers, OutlierReport};
pub use schema::{CcppSchema, COLUMN_ENVELOPE};
pub use table::DataTable;
pub use validate::{validate_ranges, RangeViolation};
