use std::time::Duration;

use equistable::EquistableStructure;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Yes,
    No,
    Error,
}

/// The single JSON object every subcommand prints. Field order is part of
/// the output format; absent values are `null`.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub status: Status,
    pub k: Option<u64>,
    pub target: Option<u64>,
    pub structure: Option<EquistableStructure>,
    pub reason: Option<String>,
    pub details: serde_json::Value,
    pub error: Option<String>,
    pub timing_ms: f64,
}

impl Report {
    pub fn new(command: &'static str, status: Status) -> Self {
        Report {
            command,
            status,
            k: None,
            target: None,
            structure: None,
            reason: None,
            details: serde_json::Value::Null,
            error: None,
            timing_ms: 0.0,
        }
    }

    pub fn error(command: &'static str, message: impl Into<String>) -> Self {
        Report {
            error: Some(message.into()),
            ..Report::new(command, Status::Error)
        }
    }

    pub fn timed(mut self, elapsed: Duration) -> Self {
        self.timing_ms = elapsed.as_secs_f64() * 1e3;
        self
    }

    pub fn summary(&self) -> String {
        let status = match self.status {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Error => "error",
        };
        let mut line = format!("{}: {status}", self.command);
        if let Some(k) = self.k {
            line += &format!(", k = {k}");
        }
        if let Some(t) = self.target {
            line += &format!(", target = {t}");
        }
        if let Some(r) = &self.reason {
            line += &format!(", reason {r}");
        }
        if let Some(e) = &self.error {
            line += &format!(": {e}");
        }
        line
    }
}
