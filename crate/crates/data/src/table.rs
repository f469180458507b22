use crate::error::DataError;

/// Column-oriented numeric table with named columns of equal length.
/// Immutable after construction; no entry is ever missing.
#[derive(Debug, Clone, PartialEq)]
pub struct DataTable {
    names: Vec<String>,
    columns: Vec<Vec<f64>>,
}

impl DataTable {
    pub fn new(names: Vec<String>, columns: Vec<Vec<f64>>) -> Result<Self, DataError> {
        if names.len() != columns.len() || columns.is_empty() {
            return Err(DataError::ColumnLengthMismatch);
        }
        let len = columns[0].len();
        if len == 0 || columns.iter().any(|c| c.len() != len) {
            return Err(DataError::ColumnLengthMismatch);
        }
        for (i, a) in names.iter().enumerate() {
            if names[i + 1..].contains(a) {
                return Err(DataError::DuplicateColumn { name: a.clone() });
            }
        }
        Ok(DataTable { names, columns })
    }

    pub fn n_rows(&self) -> usize {
        self.columns[0].len()
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn column(&self, name: &str) -> Result<&[f64], DataError> {
        self.column_index(name)
            .map(|i| self.columns[i].as_slice())
            .ok_or_else(|| DataError::UnknownColumn {
                name: name.to_string(),
            })
    }

    pub fn column_at(&self, index: usize) -> &[f64] {
        &self.columns[index]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn construction_checks_shape_and_name_uniqueness() {
        let t = DataTable::new(names(&["a", "b"]), vec![vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(t.n_rows(), 2);
        assert_eq!(t.n_cols(), 2);
        assert_eq!(t.column("b").unwrap(), &[3.0, 4.0]);
        assert_eq!(t.column_at(0), &[1.0, 2.0]);

        assert_eq!(
            DataTable::new(names(&["a", "b"]), vec![vec![1.0], vec![2.0, 3.0]]).unwrap_err(),
            DataError::ColumnLengthMismatch
        );
        assert_eq!(
            DataTable::new(names(&["a"]), vec![vec![]]).unwrap_err(),
            DataError::ColumnLengthMismatch
        );
        assert!(matches!(
            DataTable::new(names(&["a", "a"]), vec![vec![1.0], vec![2.0]]).unwrap_err(),
            DataError::DuplicateColumn { .. }
        ));
    }

    #[test]
    fn unknown_column_lookup_is_an_error() {
        let t = DataTable::new(names(&["a"]), vec![vec![1.0]]).unwrap();
        assert!(matches!(
            t.column("z"),
            Err(DataError::UnknownColumn { .. })
        ));
        assert_eq!(t.column_index("z"), None);
    }
}
