/// Published per-column value envelope of the dataset, as
/// `(canonical name, min, max)`.
pub const COLUMN_ENVELOPE: [(&str, f64, f64); 5] = [
    ("T", 1.81, 37.11),
    ("V", 25.36, 81.56),
    ("AP", 992.89, 1033.30),
    ("RH", 25.56, 100.16),
    ("PE", 420.26, 495.76),
];

/// Header schema for the power-plant CSV.
///
/// The alias map is closed: matching is case-insensitive and `AT` (the
/// public file's name for ambient temperature) resolves to `T`. Nothing
/// else is guessed; unknown headers are ignored, and loading fails if any
/// of the five canonical columns stays unresolved.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CcppSchema;

impl CcppSchema {
    /// Canonical column names in canonical order.
    pub fn canonical_names(&self) -> [&'static str; 5] {
        ["T", "V", "AP", "RH", "PE"]
    }

    /// Maps one header cell to its canonical column, if any.
    pub fn resolve(&self, header: &str) -> Option<&'static str> {
        match header.trim().to_ascii_uppercase().as_str() {
            "T" | "AT" => Some("T"),
            "V" => Some("V"),
            "AP" => Some("AP"),
            "RH" => Some("RH"),
            "PE" => Some("PE"),
            _ => None,
        }
    }
}
