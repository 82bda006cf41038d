//! Python bindings. Objects cross the boundary as documents in the text
//! format; results come back as [`Report`]s.
//!
//! ```python
//! import ydlong
//! r = ydlong.check(ydlong.sweedler())
//! assert r.passed, str(r)
//! ```

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use ydlong_core::exactlin::FieldCtx;
use ydlong_core::format::{self, Document};
use ydlong_core::grpalg::{check_graded, closed_form_index_report, oracle_report};
use ydlong_core::hopf::{sweedler_h4, validate_hopf};
use ydlong_core::involution::check_iso_pair;
use ydlong_core::report::ValidationReport;
use ydlong_core::tcat::{braiding, left_dual, right_dual};
use ydlong_core::ydl::{full_report, YdlModule};
use ydlong_core::Error;

create_exception!(ydlong, ParseError, PyValueError, "The text could not be parsed.");
create_exception!(
    ydlong,
    SemanticError,
    PyValueError,
    "The input parsed but is inconsistent."
);

fn to_py(e: Error) -> PyErr {
    if e.is_parse() {
        ParseError::new_err(e.to_string())
    } else {
        SemanticError::new_err(e.to_string())
    }
}

/// The outcome of a check: one section per group of axioms.
#[pyclass(frozen, module = "ydlong")]
pub struct Report {
    field: String,
    sections: Vec<ValidationReport>,
}

#[pymethods]
impl Report {
    /// True when every non-informational check passed.
    #[getter]
    fn passed(&self) -> bool {
        self.sections.iter().all(ValidationReport::passed)
    }

    #[getter]
    fn field(&self) -> &str {
        &self.field
    }

    /// Names of the failed checks, prefixed by their section.
    #[getter]
    fn failures(&self) -> Vec<String> {
        self.sections
            .iter()
            .flat_map(|s| s.failures().map(move |r| format!("{}: {}", s.subject, r.name)))
            .collect()
    }

    /// `(section, name, passed, informational)` for every check.
    fn checks(&self) -> Vec<(String, String, bool, bool)> {
        self.sections
            .iter()
            .flat_map(|s| {
                s.results
                    .iter()
                    .map(move |r| (s.subject.clone(), r.name.clone(), r.passed, r.informational))
            })
            .collect()
    }

    fn to_json(&self) -> String {
        serde_json::json!({ "field": self.field, "passed": self.passed(), "sections": self.sections }).to_string()
    }

    fn __bool__(&self) -> bool {
        self.passed()
    }

    fn __str__(&self) -> String {
        self.sections.iter().map(ToString::to_string).collect()
    }

    fn __repr__(&self) -> String {
        let n: usize = self.sections.iter().map(|s| s.results.len()).sum();
        format!(
            "<Report {} over {}: {n} checks, {} failed>",
            if self.passed() { "PASS" } else { "FAIL" },
            self.field,
            self.failures().len()
        )
    }
}

fn report(field: FieldCtx, sections: Vec<ValidationReport>) -> Report {
    Report {
        field: field.to_string(),
        sections,
    }
}

fn module(text: &str) -> Result<YdlModule, Error> {
    match format::parse(text)? {
        Document::Module(m) => Ok(m),
        Document::Graded(g) => g.to_generic(),
        d => Err(Error::Parse {
            line: 1,
            message: format!("expected a module, found a {} document", d.kind()),
        }),
    }
}

/// Kind of a document: "hopf", "module", "quadruple" or "graded".
#[pyfunction]
fn kind(text: &str) -> PyResult<&'static str> {
    format::parse(text).map(|d| d.kind()).map_err(to_py)
}

/// Validate a Hopf algebra, module or graded module document.
#[pyfunction]
fn check(text: &str) -> PyResult<Report> {
    let run = || -> Result<Report, Error> {
        Ok(match format::parse(text)? {
            Document::Hopf(h) => report(h.field(), vec![validate_hopf(&h)]),
            Document::Module(m) => report(m.field(), vec![full_report(&m)]),
            Document::Graded(g) => {
                let generic = g.to_generic()?;
                let sections = vec![
                    check_graded(&g),
                    full_report(&generic),
                    oracle_report(&g, &g)?,
                    closed_form_index_report(&g, &g)?,
                ];
                report(g.field(), sections)
            }
            Document::Quadruple(_) => {
                return Err(Error::Parse {
                    line: 1,
                    message: "a quadruple is checked against a module; use `iso`".into(),
                })
            }
        })
    };
    run().map_err(to_py)
}

/// Build the braiding of two modules and check it.
#[pyfunction]
fn braid(m: &str, n: &str) -> PyResult<Report> {
    let run = || -> Result<Report, Error> {
        let (m, n) = (module(m)?, module(n)?);
        let c = braiding(&m, &n)?;
        Ok(report(m.field(), vec![c.check(&m, &n)?]))
    };
    run().map_err(to_py)
}

/// Build the left or right dual of a module and check evaluation,
/// coevaluation and the snake identities.
#[pyfunction]
#[pyo3(signature = (m, side = "left"))]
fn dual(m: &str, side: &str) -> PyResult<Report> {
    let build = match side {
        "left" => left_dual,
        "right" => right_dual,
        _ => {
            return Err(PyValueError::new_err(format!(
                "side must be 'left' or 'right', not {side:?}"
            )))
        }
    };
    let run = || -> Result<Report, Error> {
        let m = module(m)?;
        Ok(report(m.field(), vec![build(&m)?.check(&m)?]))
    };
    run().map_err(to_py)
}

/// Check that the functors of a quadruple in involution are mutually
/// inverse on a module.
#[pyfunction]
fn iso(m: &str, quadruple: &str) -> PyResult<Report> {
    let run = || -> Result<Report, Error> {
        let m = module(m)?;
        let q = match format::parse(quadruple)? {
            Document::Quadruple(q) => q,
            d => {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("expected a quadruple, found a {} document", d.kind()),
                })
            }
        };
        Ok(report(m.field(), vec![check_iso_pair(&m, &q)?]))
    };
    run().map_err(to_py)
}

/// Sweedler's four-dimensional algebra as a document, over the rationals
/// or over F_p.
#[pyfunction]
#[pyo3(signature = (prime = None))]
fn sweedler(prime: Option<u64>) -> PyResult<String> {
    let field = match prime {
        None => FieldCtx::Rational,
        Some(p) => FieldCtx::prime(p).map_err(to_py)?,
    };
    let h = sweedler_h4(field).map_err(to_py)?;
    Ok(format::write(&Document::Hopf(h)))
}

#[pymodule]
pub fn ydlong(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Report>()?;
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add("SemanticError", m.py().get_type::<SemanticError>())?;
    m.add_function(wrap_pyfunction!(kind, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(braid, m)?)?;
    m.add_function(wrap_pyfunction!(dual, m)?)?;
    m.add_function(wrap_pyfunction!(iso, m)?)?;
    m.add_function(wrap_pyfunction!(sweedler, m)?)?;
    Ok(())
}
