use std::fmt::Write as _;

use serde::Serialize;
use ydlong_core::report::ValidationReport;
use ydlong_core::Error;

/// Exit codes; a stable contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Pass = 0,
    CheckFailed = 1,
    ParseError = 2,
    SemanticError = 3,
}

impl Exit {
    pub fn of_error(e: &Error) -> Exit {
        if e.is_parse() || matches!(e, Error::Io(_)) {
            Exit::ParseError
        } else {
            Exit::SemanticError
        }
    }
}

/// Everything one command found out.
#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub command: String,
    pub artifacts: Vec<String>,
    pub field: String,
    pub passed: bool,
    pub elapsed_ms: f64,
    pub sections: Vec<ValidationReport>,
}

impl CheckReport {
    pub fn new(
        command: &str,
        artifacts: Vec<String>,
        field: String,
        sections: Vec<ValidationReport>,
        elapsed_ms: f64,
    ) -> Self {
        CheckReport {
            command: command.to_string(),
            artifacts,
            field,
            passed: sections.iter().all(ValidationReport::passed),
            elapsed_ms,
            sections,
        }
    }

    pub fn exit(&self) -> Exit {
        if self.passed {
            Exit::Pass
        } else {
            Exit::CheckFailed
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.command, self.artifacts.join(" ")).unwrap();
        writeln!(out, "field: {}", self.field).unwrap();
        for s in &self.sections {
            out.push_str(&s.to_string());
        }
        let total: usize = self.sections.iter().map(|s| s.results.len()).sum();
        let failed: usize = self.sections.iter().map(|s| s.failures().count()).sum();
        writeln!(
            out,
            "result: {} ({total} checks, {failed} failed, {:.1} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed_ms
        )
        .unwrap();
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    command: &'a str,
    error: &'static str,
    exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<usize>,
    message: String,
}

pub fn render_error(command: &str, e: &Error, json: bool) -> String {
    let exit = Exit::of_error(e);
    let kind = if exit == Exit::ParseError {
        "parse error"
    } else {
        "semantic error"
    };
    if json {
        let line = match e {
            Error::Parse { line, .. } | Error::At { line, .. } => Some(*line),
            _ => None,
        };
        let r = ErrorReport {
            command,
            error: kind,
            exit_code: exit as i32,
            line,
            message: e.to_string(),
        };
        serde_json::to_string_pretty(&r).expect("error serializes")
    } else {
        format!("{command}: {kind}: {e}")
    }
}
