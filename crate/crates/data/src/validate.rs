use crate::schema::COLUMN_ENVELOPE;
use crate::table::DataTable;

/// A value outside the published min-max envelope of its column.
/// Advisory only: the envelope describes the published sample, not
/// physical limits, so violations are warnings rather than load errors.
#[derive(Debug, Clone, PartialEq)]
pub struct RangeViolation {
    pub column: String,
    pub row: usize,
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
}

/// Checks every envelope-covered column of the table against the
/// published ranges, in row order within column order.
pub fn validate_ranges(table: &DataTable) -> Vec<RangeViolation> {
    let mut out = Vec::new();
    for (name, lo, hi) in COLUMN_ENVELOPE {
        let Ok(column) = table.column(name) else {
            continue;
        };
        for (row, &value) in column.iter().enumerate() {
            if value < lo || value > hi {
                out.push(RangeViolation {
                    column: name.to_string(),
                    row,
                    value,
                    lo,
                    hi,
                });
            }
        }
    }
    out
}
