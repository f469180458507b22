//! Report serialization and schema checking shared between the `ig`
//! binary and its integration tests.
//!
//! The binary itself lives in `main.rs`; this library holds the two
//! pieces with independent value: the JSON report writer with its
//! full-precision float format, and a small structural validator for
//! the published report schema.

pub mod report;
pub mod validator;
