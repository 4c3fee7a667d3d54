//! Structured CLI output: every subcommand produces one [`OutputRecord`]
//! that can be rendered as text or serialized to JSON without losing data.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// The machine-readable payload of a CLI invocation.
///
/// `provenance` lists the repo-local assets the result is checked against
/// (embedded golden table files, the orbit data file, or the module path of
/// a closed-form rule); an empty list means the result is pure computation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    /// Subcommand name.
    pub command: String,
    /// Echo of the parsed arguments.
    pub inputs: Value,
    /// Structured result payload.
    pub result: Value,
    /// Repo-local asset identifiers backing the result.
    pub provenance: Vec<String>,
}

impl OutputRecord {
    pub fn new(
        command: &str,
        inputs: Value,
        result: Value,
        provenance: Vec<String>,
    ) -> OutputRecord {
        OutputRecord {
            command: command.to_string(),
            inputs,
            result,
            provenance,
        }
    }

    /// Pretty JSON; guaranteed to parse back into an equal record.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }
}
