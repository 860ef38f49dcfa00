use std::time::Duration;

use hurwitz_core::bsgs::BsgsError;
use hurwitz_core::ff::FieldError;
use hurwitz_core::forms::FormError;
use hurwitz_core::matlin::MatrixError;
use hurwitz_core::pipeline::PipelineError;
use hurwitz_core::seeds::SeedError;
use hurwitz_core::tensor::TensorError;
use serde_json::{json, Map, Value};

/// Result of a successful command run.
pub struct Outcome {
    pub field: Option<String>,
    pub inputs: Value,
    pub results: Value,
    /// false when a checked condition failed (exit 1)
    pub pass: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.pass {
            0
        } else {
            CliError::CHECKED
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Checked(String),
    Budget { message: String, partial: Vec<usize> },
}

impl CliError {
    pub const CHECKED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const BUDGET: u8 = 3;

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => Self::USAGE,
            CliError::Checked(_) => Self::CHECKED,
            CliError::Budget { .. } => Self::BUDGET,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Checked(_) => "checked_failure",
            CliError::Budget { .. } => "budget_exceeded",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Checked(m) => m.clone(),
            CliError::Budget { message, .. } => message.clone(),
        }
    }
}

impl From<SeedError> for CliError {
    fn from(e: SeedError) -> Self {
        match e {
            SeedError::RInSubfield | SeedError::NotFound(_) => CliError::Checked(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<BsgsError> for CliError {
    fn from(e: BsgsError) -> Self {
        match e {
            BsgsError::BudgetExceeded { ref partial, .. } => CliError::Budget { partial: partial.clone(), message: e.to_string() },
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Precondition(m) => CliError::Checked(m),
            PipelineError::Seed(s) => s.into(),
            PipelineError::Bsgs(b) => b.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

macro_rules! usage_from {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Usage(e.to_string())
            }
        })*
    };
}

usage_from!(FieldError, MatrixError, FormError, TensorError, std::io::Error);

pub struct Report {
    value: Value,
    pub error: Result<(), String>,
}

fn timing(elapsed: Option<Duration>) -> Option<Value> {
    elapsed.map(|d| json!({ "total_ms": d.as_millis().to_string() }))
}

impl Report {
    fn base(command: Vec<String>) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
        m.insert("command".into(), json!(command));
        m
    }

    pub fn from_outcome(command: Vec<String>, out: Outcome, elapsed: Option<Duration>) -> Self {
        let mut m = Self::base(command);
        m.insert("field".into(), out.field.map_or(Value::Null, Value::String));
        m.insert("inputs".into(), out.inputs);
        m.insert("results".into(), out.results);
        m.insert("status".into(), json!(if out.pass { "pass" } else { "fail" }));
        if let Some(t) = timing(elapsed) {
            m.insert("timings".into(), t);
        }
        Report { value: Value::Object(m), error: Ok(()) }
    }

    pub fn from_error(command: Vec<String>, e: &CliError, elapsed: Option<Duration>) -> Self {
        let mut m = Self::base(command);
        let mut err = json!({ "kind": e.kind(), "message": e.message() });
        if let CliError::Budget { partial, .. } = e {
            err["partial_orbit_sizes"] = json!(partial);
        }
        m.insert("error".into(), err);
        m.insert("status".into(), json!(e.kind()));
        if let Some(t) = timing(elapsed) {
            m.insert("timings".into(), t);
        }
        Report { value: Value::Object(m), error: Err(e.message()) }
    }

    /// Pretty JSON; `serde_json::Map` keeps keys sorted.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.value).expect("report serializes")
    }
}
