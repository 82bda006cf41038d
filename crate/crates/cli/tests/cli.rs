use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn ydlong(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ydlong"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = ydlong(&full);
    let v: Value = serde_json::from_str(&stdout(&out)).expect("valid JSON on stdout");
    (code(&out), v)
}

fn f(name: &str) -> String {
    fixture(name).display().to_string()
}

/// The result entry with this name, searched through all sections.
fn entry<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["sections"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|s| s["results"].as_array().unwrap())
        .find(|r| r["name"] == name)
        .unwrap_or_else(|| panic!("no entry `{name}`"))
}

#[test]
fn demos_round_trip_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("sweedler", "hopf"),
        ("group:S3", "hopf"),
        ("group:C4", "hopf"),
        ("dual-group:S3", "hopf"),
        ("trivial-module", "module"),
        ("sign-module", "module"),
        ("h4-block", "module"),
        ("graded-demo", "graded"),
    ];
    for prime in [None, Some("7")] {
        for (name, kind) in cases {
            let path = dir.path().join(name.replace(':', "_"));
            let p = path.to_str().unwrap();
            let mut args = vec!["demo", name, "--out", p];
            if let Some(q) = prime {
                args.extend(["--prime", q]);
            }
            assert_eq!(code(&ydlong(&args)), 0, "demo {name}");
            let out = ydlong(&["check", kind, p]);
            assert_eq!(code(&out), 0, "check {kind} {name}:\n{}", stdout(&out));
        }
    }
}

#[test]
fn demo_output_matches_the_fixtures() {
    for (name, file) in [
        ("sweedler", "sweedler.hopf"),
        ("trivial-module", "trivial.mod"),
        ("sign-module", "sign.mod"),
        ("sign-quadruple", "sign.quad"),
        ("graded-demo", "s3.graded"),
    ] {
        let out = ydlong(&["demo", name]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out), std::fs::read_to_string(fixture(file)).unwrap(), "{name}");
    }
}

#[test]
fn corrupted_antipode_exits_one_and_names_the_axiom() {
    let out = ydlong(&["check", "hopf", &f("corrupt_antipode.hopf")]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("[FAIL] left antipode at input [3]"), "{text}");
    assert!(text.contains("result: FAIL"));

    let (c, v) = json(&["check", "hopf", &f("corrupt_antipode.hopf")]);
    assert_eq!(c, 1);
    assert_eq!(v["passed"], false);
    let e = entry(&v, "left antipode");
    assert_eq!(e["passed"], false);
    assert_eq!(e["witness"]["input"], serde_json::json!([3]));
}

#[test]
fn parse_errors_exit_two() {
    let out = ydlong(&["check", "hopf", &f("malformed.hopf")]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("parse error") && err.contains("line 6"), "{err}");
    let (c, v) = json(&["check", "hopf", &f("malformed.hopf")]);
    assert_eq!((c, v["line"].as_u64()), (2, Some(6)));
    // the wrong kind of file, a missing file, and bad arguments
    assert_eq!(code(&ydlong(&["check", "hopf", &f("trivial.mod")])), 2);
    assert_eq!(code(&ydlong(&["check", "module", &f("no_such_file.mod")])), 2);
    assert_eq!(code(&ydlong(&["check", "algebra", &f("sweedler.hopf")])), 2);
    assert_eq!(code(&ydlong(&["demo", "no-such-demo"])), 2);
}

#[test]
fn semantic_errors_exit_three() {
    let out = ydlong(&["check", "module", &f("bad_alpha.mod")]);
    assert_eq!(code(&out), 3);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("semantic error") && err.contains("not a Hopf automorphism"),
        "{err}"
    );
    // different algebras, different fields
    assert_eq!(code(&ydlong(&["braid", &f("trivial.mod"), &f("s3.graded")])), 3);
    assert_eq!(code(&ydlong(&["braid", &f("sign.mod"), &f("sign_f7.mod")])), 3);
    // a quadruple that is not in involution with the module's component
    assert_eq!(
        code(&ydlong(&["iso", &f("h4_block.mod"), "--quadruple", &f("counit.quad")])),
        3
    );
    let (c, v) = json(&["check", "module", &f("bad_alpha.mod")]);
    assert_eq!(c, 3);
    assert_eq!(v["error"], "semantic error");
}

#[test]
fn trivial_modules_braid_by_the_flip() {
    let (c, v) = json(&["braid", &f("trivial.mod"), &f("trivial.mod")]);
    assert_eq!(c, 0);
    assert_eq!(entry(&v, "braiding is the flip")["passed"], true);
    assert_eq!(entry(&v, "braiding is a permutation matrix")["passed"], true);
}

#[test]
fn h4_braiding_inverse_is_reported() {
    let out = ydlong(&["braid", &f("h4_block.mod"), &f("sign.mod"), "--inverse"]);
    let text = stdout(&out);
    assert_eq!(code(&out), 0, "{text}");
    assert!(text.contains("[PASS] inverse after braiding is the identity"));
    assert!(text.contains("[PASS] explicit inverse equals the matrix inverse"));
}

#[test]
fn graded_pair_with_hexagons_and_phi() {
    let (m, n) = (f("s3.graded"), f("s3_second.graded"));
    let (c, v) = json(&["braid", &m, &n, "--hexagons", &m, "--phi", &n]);
    assert_eq!(c, 0, "{v:#}");
    assert_eq!(entry(&v, "braiding into a tensor product")["passed"], true);
    assert_eq!(entry(&v, "braiding agrees")["passed"], true);
    assert_eq!(entry(&v, "braiding is invariant under conjugation")["passed"], true);
}

#[test]
fn unit_is_self_dual_on_both_sides() {
    for side in ["left", "right"] {
        let (c, v) = json(&["dual", &f("trivial.mod"), "--side", side]);
        assert_eq!(c, 0);
        assert_eq!(entry(&v, "dual equals the module")["passed"], true);
    }
    for m in ["sign.mod", "h4_block.mod"] {
        assert_eq!(code(&ydlong(&["dual", &f(m), "--side", "right"])), 0, "{m}");
    }
}

#[test]
fn involution_round_trips() {
    assert_eq!(
        code(&ydlong(&["iso", &f("sign.mod"), "--quadruple", &f("sign.quad")])),
        0
    );
    assert_eq!(
        code(&ydlong(&["iso", &f("trivial.mod"), "--quadruple", &f("counit.quad")])),
        0
    );
}

#[test]
fn json_report_has_the_documented_fields() {
    let (c, v) = json(&["check", "graded", &f("s3.graded")]);
    assert_eq!(c, 0);
    for key in ["command", "artifacts", "field", "passed", "elapsed_ms", "sections"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["field"], "rational");
    // the closed-form tensor index is reported, never fatal
    let closed_form = entry(&v, "tensor decomposition index");
    assert_eq!(closed_form["informational"], true);
}

#[test]
fn demo_list_names_the_catalog() {
    let out = ydlong(&["demo", "list"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("graded-demo"));
}
