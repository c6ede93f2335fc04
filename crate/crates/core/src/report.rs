use std::time::Duration;

use serde_json::{json, Value};

/// Outcome of one structural check on one instance.
///
/// A failed report always carries a witness.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub instance_id: String,
    pub passed: bool,
    pub witness: Option<Value>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, instance_id: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            instance_id: instance_id.into(),
            passed: true,
            witness: None,
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn fail(name: impl Into<String>, instance_id: impl Into<String>, witness: Value) -> Self {
        Self {
            passed: false,
            witness: Some(witness),
            ..Self::pass(name, instance_id)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub(crate) fn timed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }

    /// JSON object for the report stream. Timing is omitted unless asked for
    /// so that repeated runs produce identical bytes.
    pub fn to_json(&self, with_timing: bool) -> Value {
        let mut v = json!({
            "name": self.name,
            "instance": self.instance_id,
            "passed": self.passed,
        });
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        if !self.notes.is_empty() {
            v["notes"] = json!(self.notes);
        }
        if with_timing {
            v["elapsed_ms"] = json!(self.elapsed.as_secs_f64() * 1e3);
        }
        v
    }
}
