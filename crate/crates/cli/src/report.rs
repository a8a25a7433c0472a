use std::time::Instant;

use dchase_core::Error;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

/// The outcome of one subcommand.
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub verdicts: Vec<(String, bool)>,
    pub tables: Map<String, Value>,
    pub details: Map<String, Value>,
    /// Lines for human output beyond verdicts and tables.
    pub notes: Vec<String>,
    /// Forces exit code 2 even when every verdict holds (input rejected).
    pub input_rejected: bool,
}

impl Report {
    pub fn new(command: &str, input_digest: String) -> Report {
        Report {
            command: command.to_string(),
            input_digest,
            verdicts: Vec::new(),
            tables: Map::new(),
            details: Map::new(),
            notes: Vec::new(),
            input_rejected: false,
        }
    }

    pub fn verdict(&mut self, name: impl Into<String>, holds: bool) {
        self.verdicts.push((name.into(), holds));
    }

    pub fn table(&mut self, name: &str, value: impl Into<Value>) {
        self.tables.insert(name.to_string(), value.into());
    }

    pub fn detail(&mut self, name: &str, value: impl Into<Value>) {
        self.details.insert(name.to_string(), value.into());
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn exit_code(&self) -> i32 {
        if self.verdicts.iter().any(|(_, ok)| !ok) {
            if self.input_rejected {
                EXIT_INPUT
            } else {
                EXIT_ASSERTION
            }
        } else {
            EXIT_OK
        }
    }

    pub fn to_json(&self, started: Option<Instant>) -> Value {
        let mut out = json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "exit_code": self.exit_code(),
            "verdicts": self.verdicts.iter().map(|(n, ok)| json!({"name": n, "holds": ok})).collect::<Vec<_>>(),
            "tables": self.tables,
            "details": self.details,
        });
        if let Some(t) = started {
            out["elapsed_ms"] = json!(t.elapsed().as_millis() as u64);
        }
        out
    }

    pub fn to_text(&self, started: Option<Instant>) -> String {
        let mut lines = vec![format!("{} ({})", self.command, &self.input_digest[..12])];
        for (name, ok) in &self.verdicts {
            lines.push(format!("  [{}] {name}", if *ok { "pass" } else { "FAIL" }));
        }
        for (name, value) in &self.tables {
            lines.push(format!("  {name}: {value}"));
        }
        lines.extend(self.notes.iter().map(|n| format!("  {}", n.trim_end().replace('\n', "\n    "))));
        if let Some(t) = started {
            lines.push(format!("  elapsed: {} ms", t.elapsed().as_millis()));
        }
        lines.join("\n")
    }
}

pub fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p);
    }
    hex::encode(h.finalize())
}

/// Exit code for a library error: theorem violations are assertion
/// failures, everything else is bad input.
pub fn error_exit_code(e: &Error) -> i32 {
    if e.is_theorem_violation() {
        EXIT_ASSERTION
    } else {
        EXIT_INPUT
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::TheoremViolation(_) => "theorem_violation",
        Error::Parse(_) => "parse",
        Error::Hypothesis(_) | Error::InvalidGrid(_) => "hypothesis",
        Error::RegionMissing { .. } | Error::Position { .. } => "position",
        Error::Orientation { .. } => "orientation",
        Error::Shape(_) => "shape",
        _ => "input",
    }
}

pub fn error_json(command: &str, input_digest: &str, e: &Error) -> Value {
    json!({
        "command": command,
        "input_digest": input_digest,
        "exit_code": error_exit_code(e),
        "error": {"kind": error_kind(e), "message": e.to_string()},
    })
}
