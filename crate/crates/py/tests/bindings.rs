use std::ffi::CString;

use pyo3::prelude::*;
use pyo3::types::PyDict;

/// Run a Python snippet with the module bound to `ydlong`.
fn run(code: &str) {
    Python::attach(|py| {
        let m = PyModule::new(py, "ydlong").unwrap();
        ydlong::ydlong(&m).unwrap();
        let globals = PyDict::new(py);
        globals.set_item("ydlong", m).unwrap();
        let code = CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn sweedler_passes_over_both_fields() {
    run(r#"
for p in (None, 7):
    text = ydlong.sweedler(p)
    assert ydlong.kind(text) == "hopf"
    r = ydlong.check(text)
    assert r.passed and bool(r), str(r)
    assert r.failures == []
assert ydlong.check(ydlong.sweedler(7)).field == "prime 7"
"#);
}

#[test]
fn corrupted_antipode_is_reported() {
    run(r#"
lines = ydlong.sweedler().splitlines()
start = lines.index("map antipode 4 -> 4")
lines[start + 1] = lines[start + 1].rsplit(" ", 1)[0] + " 5"
r = ydlong.check("\n".join(lines))
assert not r.passed
assert any("antipode" in f for f in r.failures), r.failures
import json
assert json.loads(r.to_json())["passed"] is False
"#);
}

#[test]
fn errors_map_to_exceptions() {
    run(r#"
try:
    ydlong.check("field rational\nhopf 2\nnonsense")
except ydlong.ParseError as e:
    assert "line" in str(e)
else:
    raise AssertionError("no ParseError")
assert issubclass(ydlong.SemanticError, ValueError)
try:
    ydlong.dual(ydlong.sweedler(), side="up")
except ValueError:
    pass
else:
    raise AssertionError("bad side accepted")
"#);
}
