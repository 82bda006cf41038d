//! Pass/fail reports for axiom suites.

use std::fmt;

use serde::Serialize;

use crate::exactlin::{Matrix, Mismatch};

/// Where an identity failed: the input basis index, the output coordinate,
/// and both sides' values at that coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub input: Vec<usize>,
    pub output: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl From<Mismatch> for Witness {
    fn from(m: Mismatch) -> Self {
        Witness {
            input: m.input,
            output: m.output,
            lhs: m.lhs.to_string(),
            rhs: m.rhs.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Informational entries are reported but never fail a report.
    pub informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            informational: false,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            informational: false,
            witness: None,
            detail: Some(detail.into()).filter(|d: &String| !d.is_empty()),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, detail)
        }
    }

    pub fn from_mismatch(name: impl Into<String>, mismatch: Option<Mismatch>) -> Self {
        match mismatch {
            None => Self::pass(name),
            Some(m) => CheckResult {
                name: name.into(),
                passed: false,
                informational: false,
                witness: Some(m.into()),
                detail: None,
            },
        }
    }

    /// Entrywise matrix equality; the witness is the first differing entry.
    pub fn matrices_equal(name: impl Into<String>, lhs: &Matrix, rhs: &Matrix) -> Self {
        let name = name.into();
        if lhs.shape() != rhs.shape() {
            return Self::fail(name, format!("shapes differ: {:?} vs {:?}", lhs.shape(), rhs.shape()));
        }
        match lhs.first_difference(rhs) {
            None => Self::pass(name),
            Some((r, c)) => CheckResult {
                name,
                passed: false,
                informational: false,
                witness: Some(Witness {
                    input: vec![c],
                    output: vec![r],
                    lhs: lhs.get(r, c).to_string(),
                    rhs: rhs.get(r, c).to_string(),
                }),
                detail: None,
            },
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Ordered list of check results about one subject.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub subject: String,
    pub results: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport {
            subject: subject.into(),
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, result: CheckResult) {
        self.results.push(result);
    }

    /// Appends another report's entries, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for mut r in other.results {
            if !prefix.is_empty() {
                r.name = format!("{prefix}: {}", r.name);
            }
            self.results.push(r);
        }
    }

    /// True when every non-informational entry passed.
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed || r.informational)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.name == name)
    }

    /// Whether the named entry exists and passed.
    pub fn passed_named(&self, name: &str) -> bool {
        self.get(name).is_some_and(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed && !r.informational)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.failures().map(|r| r.name.as_str()).collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for r in &self.results {
            let tag = match (r.passed, r.informational) {
                (true, false) => "PASS",
                (false, false) => "FAIL",
                (true, true) => "info: yes",
                (false, true) => "info: no",
            };
            write!(f, "  [{tag}] {}", r.name)?;
            if let Some(w) = &r.witness {
                write!(
                    f,
                    " at input {:?}, output {:?}: lhs = {}, rhs = {}",
                    w.input, w.output, w.lhs, w.rhs
                )?;
            }
            if let Some(d) = &r.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
