//! Shared input handling: CSV loading, design assembly, and digests.

use std::path::Path;

use nalgebra::{DMatrix, DVector};
use sha2::{Digest, Sha256};

use ig_data::{load_csv, CcppSchema, DataTable};

use crate::failure::Failure;

pub fn load_table(path: &Path) -> Result<DataTable, Failure> {
    Ok(load_csv(path, &CcppSchema)?)
}

/// SHA-256 of the raw input bytes, as lowercase hex.
pub fn file_digest(path: &Path) -> Result<String, Failure> {
    let bytes = std::fs::read(path)?;
    let digest = Sha256::digest(&bytes);
    Ok(digest.iter().map(|b| format!("{b:02x}")).collect())
}

/// Predictor matrix in the order the columns were requested. The
/// intercept is not a column here; the fit configuration adds it.
pub fn design(table: &DataTable, predictors: &[String]) -> Result<DMatrix<f64>, Failure> {
    let n = table.n_rows();
    let mut x = DMatrix::zeros(n, predictors.len());
    for (j, name) in predictors.iter().enumerate() {
        let column = table.column(name)?;
        for (i, &value) in column.iter().enumerate() {
            x[(i, j)] = value;
        }
    }
    Ok(x)
}

pub fn response(table: &DataTable, name: &str) -> Result<DVector<f64>, Failure> {
    Ok(DVector::from_column_slice(table.column(name)?))
}
