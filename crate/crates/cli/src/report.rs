//! The JSON document written for every invocation.

use serde_json::{json, Map, Value};

use crate::error::CliError;

pub const SCHEMA_VERSION: &str = "report-v1";

/// The published JSON Schema for [`SCHEMA_VERSION`].
pub const SCHEMA: &str = include_str!("../schema/report-v1.json");

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds(bool),
    /// Generators and computations without a yes/no question.
    Ok,
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Holds(true) | Verdict::Ok => 0,
            Verdict::Holds(false) => 1,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Verdict::Holds(b) => Value::Bool(*b),
            Verdict::Ok => Value::String("ok".into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub verdict: Verdict,
    pub witness: Value,
}

impl Report {
    pub fn new(command: &str, verdict: Verdict) -> Self {
        Self {
            command: command.to_string(),
            inputs: Map::new(),
            verdict,
            witness: Value::Null,
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn witness(mut self, witness: Value) -> Self {
        self.witness = witness;
        self
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict.to_json(),
            "witness": self.witness,
            "versions": versions(),
        })
    }
}

fn versions() -> Value {
    json!({ "tool": concat!("pfaff ", env!("CARGO_PKG_VERSION")), "schema": SCHEMA_VERSION })
}

/// The document emitted instead of a report when the input is rejected.
pub fn error_document(command: Option<&str>, err: &CliError) -> Value {
    let mut error = Map::new();
    error.insert("kind".into(), err.kind().into());
    error.insert("message".into(), err.to_string().into());
    if let CliError::Syntax { flag, error: e, .. } = err {
        error.insert("flag".into(), flag.clone().into());
        error.insert("line".into(), e.pos.line.into());
        error.insert("column".into(), e.pos.column.into());
    }
    json!({
        "schema": SCHEMA_VERSION,
        "command": command,
        "verdict": "error",
        "error": error,
        "versions": versions(),
    })
}

pub fn render(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("JSON values always serialize");
    s.push('\n');
    s
}
