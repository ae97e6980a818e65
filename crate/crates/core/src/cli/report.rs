//! The machine-readable report emitted by `--json`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::PolyError;
use crate::polycore::PolyMap;

/// Bumped whenever a field is renamed, removed or changes meaning.
pub const SCHEMA: &str = "polyldc-report/1";

pub mod exit {
    pub const OK: i32 = 0;
    pub const LAW_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const SIZE_CAP: i32 = 4;
    pub const DOMAIN_MISMATCH: i32 = 5;
    pub const NOT_REPRESENTABLE: i32 = 6;
    pub const INVALID_INPUT: i32 = 7;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    LawFailed,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema: String,
    pub command: Vec<String>,
    pub status: Status,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub results: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

pub fn exit_code(e: &PolyError) -> i32 {
    match e {
        PolyError::Parse { .. } => exit::PARSE,
        PolyError::SizeCap { .. } => exit::SIZE_CAP,
        PolyError::DomainMismatch(_) => exit::DOMAIN_MISMATCH,
        PolyError::NotRepresentable(_) => exit::NOT_REPRESENTABLE,
        PolyError::InvalidMap(_) | PolyError::InvalidMonoid(_) | PolyError::InvalidInput(_) => exit::INVALID_INPUT,
    }
}

impl ErrorInfo {
    pub fn from_error(e: &PolyError) -> ErrorInfo {
        let kind = match e {
            PolyError::Parse { .. } => "parse",
            PolyError::SizeCap { .. } => "size_cap",
            PolyError::DomainMismatch(_) => "domain_mismatch",
            PolyError::NotRepresentable(_) => "not_representable",
            PolyError::InvalidMap(_) => "invalid_map",
            PolyError::InvalidMonoid(_) => "invalid_monoid",
            PolyError::InvalidInput(_) => "invalid_input",
        };
        let (line, column, expected) = match e {
            PolyError::Parse {
                line, column, expected, ..
            } => (Some(*line), Some(*column), expected.clone()),
            _ => (None, None, Vec::new()),
        };
        ErrorInfo {
            kind: kind.to_string(),
            message: e.to_string(),
            line,
            column,
            expected,
        }
    }
}

/// A map with its endpoints in literal notation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapRecord {
    pub dom: String,
    pub cod: String,
    pub on_positions: Vec<usize>,
    pub on_directions: Vec<Vec<usize>>,
}

impl From<&PolyMap> for MapRecord {
    fn from(m: &PolyMap) -> Self {
        MapRecord {
            dom: m.dom.notation(),
            cod: m.cod.notation(),
            on_positions: m.on_positions.clone(),
            on_directions: m.on_directions.clone(),
        }
    }
}
