//! Report envelope and the JSON writer behind every command.
//!
//! Reports are pretty-printed JSON with two deviations from the serde
//! defaults. Finite floats are written with 17 significant digits in
//! scientific notation, enough to round-trip any `f64` bit pattern, so
//! that two runs are byte-comparable exactly when their numbers are
//! bit-identical. Non-finite floats, which JSON cannot represent as
//! numbers, become the strings `"inf"`, `"-inf"`, and `"nan"` instead
//! of the `null` a default serializer would emit.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter, Serializer};

/// Identifier stamped into every report, success or failure.
pub const SCHEMA_VERSION: &str = "report.v1";

/// Common wrapper around each command's payload.
///
/// `input_digest` is the SHA-256 of the input file for commands that
/// read one, `seed` is present for commands with a randomized step,
/// and `timestamp` is the only field excluded from reproducibility
/// guarantees.
#[derive(Debug, Serialize)]
pub struct ReportEnvelope<P: Serialize> {
    pub command: &'static str,
    pub schema_version: &'static str,
    pub input_digest: Option<String>,
    pub seed: Option<u64>,
    pub timestamp: String,
    pub payload: P,
}

/// Failure wrapper emitted on the same stream a report would have used.
#[derive(Debug, Serialize)]
pub struct ErrorEnvelope {
    pub command: &'static str,
    pub schema_version: &'static str,
    pub error: ErrorBody,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    /// Stable machine-readable discriminator in snake case.
    pub kind: &'static str,
    pub message: String,
    /// Deviance after each accepted step, present only when the
    /// iteration limit stopped a fit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<Num>>,
}

/// Report float. Finite values reach the formatter's full-precision
/// format; non-finite values become the string sentinels here, because
/// the serializer diverts them to `null` before any formatter runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl From<f64> for Num {
    fn from(value: f64) -> Self {
        Num(value)
    }
}

impl Serialize for Num {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let value = self.0;
        if value.is_finite() {
            serializer.serialize_f64(value)
        } else if value.is_nan() {
            serializer.serialize_str("nan")
        } else if value > 0.0 {
            serializer.serialize_str("inf")
        } else {
            serializer.serialize_str("-inf")
        }
    }
}

pub fn nums(values: &[f64]) -> Vec<Num> {
    values.iter().copied().map(Num).collect()
}

pub fn num_pairs(pairs: &[(f64, f64)]) -> Vec<(Num, Num)> {
    pairs.iter().map(|&(a, b)| (Num(a), Num(b))).collect()
}

/// Serializes any report value to its canonical textual form plus a
/// trailing newline.
pub fn to_report_string<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = Serializer::with_formatter(&mut buf, ReportFormatter::new());
    value
        .serialize(&mut ser)
        .expect("in-memory serialization of report types cannot fail");
    buf.push(b'\n');
    String::from_utf8(buf).expect("the report serializer emits UTF-8")
}

/// Pretty formatter with the float conventions described in the module
/// docs. Values must be serialized directly from typed structs: going
/// through `serde_json::Value` first would turn non-finite floats into
/// `null` before this formatter ever sees them.
pub struct ReportFormatter<'a> {
    inner: PrettyFormatter<'a>,
}

impl ReportFormatter<'_> {
    pub fn new() -> Self {
        ReportFormatter {
            inner: PrettyFormatter::new(),
        }
    }
}

impl Default for ReportFormatter<'_> {
    fn default() -> Self {
        Self::new()
    }
}

impl Formatter for ReportFormatter<'_> {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        if value.is_finite() {
            // 16 digits after the point = 17 significant digits.
            write!(writer, "{value:.16e}")
        } else if value.is_nan() {
            writer.write_all(b"\"nan\"")
        } else if value > 0.0 {
            writer.write_all(b"\"inf\"")
        } else {
            writer.write_all(b"\"-inf\"")
        }
    }

    fn begin_array<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_array(writer)
    }

    fn end_array<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.end_array(writer)
    }

    fn begin_array_value<W>(&mut self, writer: &mut W, first: bool) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_array_value(writer, first)
    }

    fn end_array_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.end_array_value(writer)
    }

    fn begin_object<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_object(writer)
    }

    fn end_object<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.end_object(writer)
    }

    fn begin_object_key<W>(&mut self, writer: &mut W, first: bool) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_object_key(writer, first)
    }

    fn begin_object_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_object_value(writer)
    }

    fn end_object_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.end_object_value(writer)
    }
}
