//! Command implementations behind the `aitool` binary: input parsing, the
//! analyze / construct / certify / scan commands and their reports.

mod analyze;
mod certify;
mod construct;
mod input;
pub mod oracle;
mod scan;

use std::collections::BTreeMap;

use serde::Serialize;

pub use analyze::{cmd_analyze, AnalysisReport, AnalyzeOptions, CertifyMethod, ExactAi};
pub use certify::{cmd_certify, CertifyReport, CertifyRequest};
pub use construct::{cmd_construct, Construction, Family, EXAMPLE1_VECTOR};
pub use input::{format_function, necklace_count, parse_function, FunctionInput, InputFormat};
pub use scan::{cmd_scan, Check, Counterexample, ScanMode, ScanOptions, ScanReport};

use crate::error::Error;

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_COST_LIMIT: i32 = 2;

/// Process exit status for a failed command.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::CostLimit { .. } => EXIT_COST_LIMIT,
        _ => EXIT_INVALID,
    }
}

/// Stable machine-readable name of an error.
pub fn error_code(error: &Error) -> &'static str {
    match error {
        Error::VariableCount(_) => "VARIABLE_COUNT",
        Error::PointOutOfRange { .. } => "POINT_OUT_OF_RANGE",
        Error::DimensionMismatch { .. } => "N_MISMATCH",
        Error::Inconsistent => "INCONSISTENT",
        Error::DegenerateForm => "DEGENERATE_FORM",
        Error::ZeroDimension => "ZERO_DIMENSION",
        Error::DegreeOutOfRange { .. } => "DEGREE_OUT_OF_RANGE",
        Error::NotBalanced => "NOT_BALANCED",
        Error::NotSymmetric => "NOT_SYMMETRIC",
        Error::NotRotationSymmetric => "NOT_ROTATION_SYMMETRIC",
        Error::CostLimit { .. } => "COST_LIMIT",
        Error::PatternMismatch(_) => "PATTERN_MISMATCH",
        Error::Parse { .. } => "PARSE",
        Error::InvalidParameter(_) => "INVALID_PARAMETER",
        Error::IncompleteAssignment(_) => "INCOMPLETE_ASSIGNMENT",
    }
}

/// JSON body printed for a failed command.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorReport {
    pub error: &'static str,
    pub message: String,
}

impl From<&Error> for ErrorReport {
    fn from(e: &Error) -> Self {
        Self {
            error: error_code(e),
            message: e.to_string(),
        }
    }
}

/// A structured notice kept apart from the data fields of a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Warning {
    pub code: &'static str,
    pub message: String,
    #[serde(flatten)]
    pub details: BTreeMap<String, serde_json::Value>,
}

impl Warning {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
            details: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        self.details.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable detail"),
        );
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

/// Reports print either as pretty JSON or as `key: value` lines (keys sorted).
pub trait Report: Serialize {
    fn to_text(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable report");
        let mut out = String::new();
        text_lines(&value, "", &mut out);
        out
    }

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable report");
                s.push('\n');
                s
            }
            OutputFormat::Text => self.to_text(),
        }
    }
}

impl Report for ErrorReport {}

fn text_lines(value: &serde_json::Value, prefix: &str, out: &mut String) {
    use serde_json::Value;
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                text_lines(v, &key, out);
            }
        }
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let joined: Vec<String> = items.iter().map(scalar_text).collect();
            out.push_str(&format!("{prefix}: [{}]\n", joined.join(", ")));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                text_lines(v, &format!("{prefix}[{i}]"), out);
            }
        }
        v => out.push_str(&format!("{prefix}: {}\n", scalar_text(v))),
    }
}

fn scalar_text(value: &serde_json::Value) -> String {
    match value {
        serde_json::Value::String(s) if s.contains('\n') => format!("{s:?}"),
        serde_json::Value::String(s) => s.clone(),
        v => v.to_string(),
    }
}
