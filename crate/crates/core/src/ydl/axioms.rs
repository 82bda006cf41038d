//! The axiom suite, each identity compiled to a pair of tensor pipelines.
//!
//! Sweedler notation: `Δ(h) = h₁ ⊗ h₂`, `ρ1(m) = m₍₋₁₎ ⊗ m₍₀₎`,
//! `ρ2(m) = m₍₀₎ ⊗ m₍₁₎`. Comments beside each pipeline list the tensor
//! factors after the step.

use crate::exactlin::{compare_pipelines, TensorVec};
use crate::report::{CheckResult, ValidationReport};

use super::YdlModule;

/// Report entry names.
pub mod names {
    pub const LEFT_ASSOC: &str = "left action associative";
    pub const LEFT_UNIT: &str = "left action unital";
    pub const RIGHT_ASSOC: &str = "right action associative";
    pub const RIGHT_UNIT: &str = "right action unital";
    pub const ACTIONS_COMMUTE: &str = "actions commute";
    pub const LEFT_COASSOC: &str = "left coaction coassociative";
    pub const LEFT_COUNIT: &str = "left coaction counital";
    pub const RIGHT_COASSOC: &str = "right coaction coassociative";
    pub const RIGHT_COUNIT: &str = "right coaction counital";
    pub const COACTIONS_COMMUTE: &str = "coactions commute";

    /// α(h₁)m₍₋₁₎ ⊗ h₂▷m₍₀₎ = (h₁▷m)₍₋₁₎β(h₂) ⊗ (h₁▷m)₍₀₎
    pub const LEFT_LONG: &str = "left twisted Yetter-Drinfeld condition";
    /// (h▷m)₍₀₎ ⊗ (h▷m)₍₁₎ = h▷m₍₀₎ ⊗ m₍₁₎
    pub const LEFT_ACTION_RIGHT_COLINEAR: &str = "left action right-colinear";
    /// m₍₀₎◁h₁ ⊗ m₍₁₎δ(h₂) = (m◁h₂)₍₀₎ ⊗ γ(h₁)(m◁h₂)₍₁₎
    pub const RIGHT_LONG: &str = "right twisted Yetter-Drinfeld condition";
    /// (m◁h)₍₋₁₎ ⊗ (m◁h)₍₀₎ = m₍₋₁₎ ⊗ m₍₀₎◁h
    pub const RIGHT_ACTION_LEFT_COLINEAR: &str = "right action left-colinear";

    /// (h▷m)₍₋₁₎ ⊗ (h▷m)₍₀₎ = α(h₁)m₍₋₁₎β(S h₃) ⊗ h₂▷m₍₀₎
    pub const LEFT_COACTION_OF_ACTION: &str = "left coaction of an action";
    /// (m◁h)₍₀₎ ⊗ (m◁h)₍₁₎ = m₍₀₎◁h₂ ⊗ γ(S h₁)m₍₁₎δ(h₃)
    pub const RIGHT_COACTION_OF_ACTION: &str = "right coaction of an action";
    pub const LEFT_FORMS_AGREE: &str = "left condition holds iff its explicit form holds";
    pub const RIGHT_FORMS_AGREE: &str = "right condition holds iff its explicit form holds";
}

use names::*;

/// Bimodule and bicomodule identities.
pub fn check_bimodule_bicomodule(m: &YdlModule) -> ValidationReport {
    let f = m.field();
    let h1 = m.h1();
    let h2 = m.h2();
    let (n1, n2, d) = (h1.dim(), h2.dim(), m.dim());
    let id = |v: TensorVec| v;
    let mut r = ValidationReport::new("bimodule and bicomodule structure");

    r.push(CheckResult::from_mismatch(
        LEFT_ASSOC,
        compare_pipelines(
            f,
            &[n1, n1, d],
            |v| m.act_left_at(&h1.mul_at(&v, 0), 0),
            |v| m.act_left_at(&m.act_left_at(&v, 1), 0),
        ),
    ));
    r.push(CheckResult::from_mismatch(
        LEFT_UNIT,
        compare_pipelines(f, &[d], |v| m.act_left_at(&h1.unit_at(&v, 0), 0), id),
    ));
    r.push(CheckResult::from_mismatch(
        RIGHT_ASSOC,
        compare_pipelines(
            f,
            &[d, n2, n2],
            |v| m.act_right_at(&h2.mul_at(&v, 1), 0),
            |v| m.act_right_at(&m.act_right_at(&v, 0), 0),
        ),
    ));
    r.push(CheckResult::from_mismatch(
        RIGHT_UNIT,
        compare_pipelines(f, &[d], |v| m.act_right_at(&h2.unit_at(&v, 1), 0), id),
    ));
    r.push(CheckResult::from_mismatch(
        ACTIONS_COMMUTE,
        compare_pipelines(
            f,
            &[n1, d, n2],
            |v| m.act_right_at(&m.act_left_at(&v, 0), 0),
            |v| m.act_left_at(&m.act_right_at(&v, 1), 0),
        ),
    ));
    r.push(CheckResult::from_mismatch(
        LEFT_COASSOC,
        compare_pipelines(
            f,
            &[d],
            |v| h1.comul_at(&m.coact_left_at(&v, 0), 0),
            |v| m.coact_left_at(&m.coact_left_at(&v, 0), 1),
        ),
    ));
    r.push(CheckResult::from_mismatch(
        LEFT_COUNIT,
        compare_pipelines(f, &[d], |v| h1.counit_at(&m.coact_left_at(&v, 0), 0), id),
    ));
    r.push(CheckResult::from_mismatch(
        RIGHT_COASSOC,
        compare_pipelines(
            f,
            &[d],
            |v| m.coact_right_at(&m.coact_right_at(&v, 0), 0),
            |v| h2.comul_at(&m.coact_right_at(&v, 0), 1),
        ),
    ));
    r.push(CheckResult::from_mismatch(
        RIGHT_COUNIT,
        compare_pipelines(f, &[d], |v| h2.counit_at(&m.coact_right_at(&v, 0), 1), id),
    ));
    r.push(CheckResult::from_mismatch(
        COACTIONS_COMMUTE,
        compare_pipelines(
            f,
            &[d],
            |v| m.coact_right_at(&m.coact_left_at(&v, 0), 1),
            |v| m.coact_left_at(&m.coact_right_at(&v, 0), 0),
        ),
    ));
    r
}

fn left_long(m: &YdlModule) -> CheckResult {
    let h1 = m.h1();
    let alpha = m.component().alpha().map();
    let beta = m.component().beta().map();
    CheckResult::from_mismatch(
        LEFT_LONG,
        compare_pipelines(
            m.field(),
            &[h1.dim(), m.dim()],
            |v| {
                let v = h1.comul_at(&v, 0); // h1 h2 m
                let v = m.coact_left_at(&v, 2).map(0, alpha); // α(h1) h2 m-1 m0
                let v = h1.mul_at(&v.permute(&[0, 2, 1, 3]), 0); // α(h1)m-1 h2 m0
                m.act_left_at(&v, 1)
            },
            |v| {
                let v = h1.comul_at(&v, 0).permute(&[1, 0, 2]); // h2 h1 m
                let v = m.coact_left_at(&m.act_left_at(&v, 1), 1); // h2 x-1 x0
                let v = v.map(0, beta).permute(&[1, 0, 2]); // x-1 β(h2) x0
                h1.mul_at(&v, 0)
            },
        ),
    )
}

fn left_action_right_colinear(m: &YdlModule) -> CheckResult {
    CheckResult::from_mismatch(
        LEFT_ACTION_RIGHT_COLINEAR,
        compare_pipelines(
            m.field(),
            &[m.h1().dim(), m.dim()],
            |v| m.coact_right_at(&m.act_left_at(&v, 0), 0),
            |v| m.act_left_at(&m.coact_right_at(&v, 1), 0),
        ),
    )
}

fn right_long(m: &YdlModule) -> CheckResult {
    let h2 = m.h2();
    let gamma = m.component().gamma().map();
    let delta = m.component().delta().map();
    CheckResult::from_mismatch(
        RIGHT_LONG,
        compare_pipelines(
            m.field(),
            &[m.dim(), h2.dim()],
            |v| {
                let v = m.coact_right_at(&v, 0); // m0 m1 h
                let v = h2.comul_at(&v, 2).map(3, delta); // m0 m1 h1 δ(h2)
                let v = m.act_right_at(&v.permute(&[0, 2, 1, 3]), 0); // m0◁h1 m1 δ(h2)
                h2.mul_at(&v, 1)
            },
            |v| {
                let v = h2.comul_at(&v, 1).permute(&[0, 2, 1]); // m h2 h1
                let v = m.coact_right_at(&m.act_right_at(&v, 0), 0); // x0 x1 h1
                let v = v.map(2, gamma).permute(&[0, 2, 1]); // x0 γ(h1) x1
                h2.mul_at(&v, 1)
            },
        ),
    )
}

fn right_action_left_colinear(m: &YdlModule) -> CheckResult {
    CheckResult::from_mismatch(
        RIGHT_ACTION_LEFT_COLINEAR,
        compare_pipelines(
            m.field(),
            &[m.dim(), m.h2().dim()],
            |v| m.coact_left_at(&m.act_right_at(&v, 0), 0),
            |v| m.act_right_at(&m.coact_left_at(&v, 0), 1),
        ),
    )
}

fn left_coaction_of_action(m: &YdlModule) -> CheckResult {
    let h1 = m.h1();
    let alpha = m.component().alpha().map();
    let beta = m.component().beta().map();
    CheckResult::from_mismatch(
        LEFT_COACTION_OF_ACTION,
        compare_pipelines(
            m.field(),
            &[h1.dim(), m.dim()],
            |v| m.coact_left_at(&m.act_left_at(&v, 0), 0),
            |v| {
                let v = h1.comul_at(&h1.comul_at(&v, 0), 1); // h1 h2 h3 m
                let v = m.coact_left_at(&v, 3); // h1 h2 h3 m-1 m0
                let v = h1.antipode_at(&v.map(0, alpha), 2).map(2, beta);
                let v = v.permute(&[0, 3, 2, 1, 4]); // α(h1) m-1 βS(h3) h2 m0
                let v = h1.mul_at(&h1.mul_at(&v, 0), 0);
                m.act_left_at(&v, 1)
            },
        ),
    )
}

fn right_coaction_of_action(m: &YdlModule) -> CheckResult {
    let h2 = m.h2();
    let gamma = m.component().gamma().map();
    let delta = m.component().delta().map();
    CheckResult::from_mismatch(
        RIGHT_COACTION_OF_ACTION,
        compare_pipelines(
            m.field(),
            &[m.dim(), h2.dim()],
            |v| m.coact_right_at(&m.act_right_at(&v, 0), 0),
            |v| {
                let v = h2.comul_at(&h2.comul_at(&v, 1), 2); // m h1 h2 h3
                let v = m.coact_right_at(&v, 0); // m0 m1 h1 h2 h3
                let v = h2.antipode_at(&v, 2).map(2, gamma).map(4, delta);
                let v = v.permute(&[0, 3, 2, 1, 4]); // m0 h2 γS(h1) m1 δ(h3)
                let v = m.act_right_at(&v, 0);
                h2.mul_at(&h2.mul_at(&v, 1), 1)
            },
        ),
    )
}

/// The four compatibility conditions between actions and coactions.
pub fn check_ydl_axioms(m: &YdlModule) -> ValidationReport {
    let mut r = ValidationReport::new("Yetter-Drinfeld-Long conditions");
    r.push(left_long(m));
    r.push(left_action_right_colinear(m));
    r.push(right_long(m));
    r.push(right_action_left_colinear(m));
    r
}

/// The explicit coaction-of-action forms, and their agreement with the
/// twisted conditions on this module.
pub fn check_equivalent_forms(m: &YdlModule) -> ValidationReport {
    let mut r = ValidationReport::new("equivalent forms");
    let ll = left_long(m).passed;
    let rl = right_long(m).passed;
    let le = left_coaction_of_action(m);
    let re = right_coaction_of_action(m);
    let agree = |name: &str, a: bool, b: bool| {
        CheckResult::from_bool(name, a == b, format!("twisted condition {a}, explicit form {b}"))
    };
    let (lp, rp) = (le.passed, re.passed);
    r.push(le);
    r.push(re);
    r.push(agree(LEFT_FORMS_AGREE, ll, lp));
    r.push(agree(RIGHT_FORMS_AGREE, rl, rp));
    r
}

/// Every module check in one report.
pub fn full_report(m: &YdlModule) -> ValidationReport {
    let mut r = ValidationReport::new(format!(
        "{}-dimensional module over ({}, {})",
        m.dim(),
        m.h1().name(),
        m.h2().name()
    ));
    r.absorb("", check_bimodule_bicomodule(m));
    r.absorb("", check_ydl_axioms(m));
    r.absorb("", check_equivalent_forms(m));
    r
}
