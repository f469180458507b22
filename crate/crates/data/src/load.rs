use std::path::Path;

use crate::error::DataError;
use crate::schema::CcppSchema;
use crate::table::DataTable;

fn translate(path: &Path, err: csv::Error, row_hint: Option<usize>) -> DataError {
    match err.kind() {
        csv::ErrorKind::Io(io) if io.kind() == std::io::ErrorKind::NotFound => {
            DataError::FileNotFound {
                path: path.display().to_string(),
            }
        }
        csv::ErrorKind::UnequalLengths { expected_len, len, .. } => DataError::RaggedRow {
            row: row_hint.unwrap_or(0),
            expected: *expected_len as usize,
            got: *len as usize,
        },
        _ => DataError::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        },
    }
}

/// Loads the power-plant CSV into a table with canonically named and
/// ordered columns (`T, V, AP, RH, PE`), resolving header aliases via
/// the schema. Every cell must parse as a finite number; blank cells are
/// reported as missing with their data-row index (counted from zero,
/// header excluded). Headers that resolve to no canonical column are
/// ignored.
pub fn load_csv(path: impl AsRef<Path>, schema: &CcppSchema) -> Result<DataTable, DataError> {
    let path = path.as_ref();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| translate(path, e, None))?;

    let headers = reader
        .headers()
        .map_err(|e| translate(path, e, None))?
        .clone();

    let canonical = schema.canonical_names();
    // position of each canonical column in the file, in canonical order
    let mut mapping: [Option<usize>; 5] = [None; 5];
    for (pos, cell) in headers.iter().enumerate() {
        if let Some(name) = schema.resolve(cell) {
            let slot = canonical.iter().position(|c| *c == name).unwrap();
            if mapping[slot].is_some() {
                return Err(DataError::DuplicateColumn {
                    name: name.to_string(),
                });
            }
            mapping[slot] = Some(pos);
        }
    }
    let missing: Vec<String> = canonical
        .iter()
        .zip(mapping.iter())
        .filter(|(_, m)| m.is_none())
        .map(|(c, _)| c.to_string())
        .collect();
    if !missing.is_empty() {
        return Err(DataError::HeaderMismatch { missing });
    }

    let mut columns: Vec<Vec<f64>> = vec![Vec::new(); 5];
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| translate(path, e, Some(row)))?;
        for (slot, pos) in mapping.iter().enumerate() {
            let cell = record.get(pos.unwrap()).unwrap_or("");
            if cell.is_empty() {
                return Err(DataError::MissingValue {
                    row,
                    column: canonical[slot].to_string(),
                });
            }
            let value: f64 = cell.parse().map_err(|_| DataError::ParseError {
                row,
                column: canonical[slot].to_string(),
                content: cell.to_string(),
            })?;
            if !value.is_finite() {
                return Err(DataError::ParseError {
                    row,
                    column: canonical[slot].to_string(),
                    content: cell.to_string(),
                });
            }
            columns[slot].push(value);
        }
    }

    DataTable::new(canonical.iter().map(|c| c.to_string()).collect(), columns)
}
