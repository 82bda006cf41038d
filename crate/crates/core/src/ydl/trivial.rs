use std::sync::Arc;

use crate::autgroup::AutQuadruple;
use crate::error::{Error, Result};
use crate::exactlin::{compare_pipelines, materialize, LinMap, Matrix, Scalar, TensorVec};
use crate::hopf::{same_algebra, HopfAlgebra};
use crate::report::{CheckResult, ValidationReport};

use super::YdlModule;

/// Characters `f1, f2` and grouplikes `g1, g2` of (H1, H2).
///
/// Such a quadruple is in involution with (α, β, γ, δ) when
///
/// ```text
/// α(h) = g1 f1(h₁) β(h₂) f1(S h₃) g1⁻¹
/// δ(h) = g2⁻¹ f2(S h₁) γ(h₂) f2(h₃) g2
/// ```
#[derive(Clone, Debug)]
pub struct InvolutionQuadruple {
    h1: Arc<HopfAlgebra>,
    h2: Arc<HopfAlgebra>,
    pub f1: Vec<Scalar>,
    pub g1: Vec<Scalar>,
    pub f2: Vec<Scalar>,
    pub g2: Vec<Scalar>,
}

impl InvolutionQuadruple {
    /// Shape-checked; the character and grouplike conditions are part of
    /// [`check_involution_quadruple`].
    pub fn new(
        h1: Arc<HopfAlgebra>,
        h2: Arc<HopfAlgebra>,
        f1: Vec<Scalar>,
        g1: Vec<Scalar>,
        f2: Vec<Scalar>,
        g2: Vec<Scalar>,
    ) -> Result<Self> {
        let (n1, n2) = (h1.dim(), h2.dim());
        for (what, v, n) in [("f1", &f1, n1), ("g1", &g1, n1), ("f2", &f2, n2), ("g2", &g2, n2)] {
            if v.len() != n {
                return Err(Error::Dimension(format!(
                    "{what} has {} entries, expected {n}",
                    v.len()
                )));
            }
        }
        Ok(InvolutionQuadruple { h1, h2, f1, g1, f2, g2 })
    }

    /// (ε1, 1, ε2, 1), in involution with every (α, α, γ, γ).
    pub fn counits(h1: Arc<HopfAlgebra>, h2: Arc<HopfAlgebra>) -> Self {
        InvolutionQuadruple {
            f1: h1.counit().matrix().row(0).to_vec(),
            g1: h1.one(),
            f2: h2.counit().matrix().row(0).to_vec(),
            g2: h2.one(),
            h1,
            h2,
        }
    }

    pub fn h1(&self) -> &Arc<HopfAlgebra> {
        &self.h1
    }

    pub fn h2(&self) -> &Arc<HopfAlgebra> {
        &self.h2
    }

    pub fn f1_map(&self) -> LinMap {
        covector(&self.f1)
    }

    pub fn f2_map(&self) -> LinMap {
        covector(&self.f2)
    }

    /// g1⁻¹ = S(g1).
    pub fn g1_inv(&self) -> Vec<Scalar> {
        self.h1.antipode().apply(&self.g1)
    }

    /// g2⁻¹ = S(g2).
    pub fn g2_inv(&self) -> Vec<Scalar> {
        self.h2.antipode().apply(&self.g2)
    }

    /// The automorphism `h ↦ g1 f1(h₁) β(h₂) f1(S h₃) g1⁻¹` determined by β.
    pub fn predicted_alpha(&self, beta: &LinMap) -> LinMap {
        let h = &self.h1;
        let (f1, n) = (self.f1_map(), h.dim());
        let twist = materialize(h.field(), &[n], n, |v| {
            let v = h.comul_at(&h.comul_at(&v, 0), 1); // h1 h2 h3
            let v = v.apply(0, 1, &f1, &[]); // h2 h3
            let v = h.antipode_at(&v, 1).apply(1, 1, &f1, &[]);
            v.map(0, beta)
        });
        let conj = h
            .left_mult_by(&self.g1)
            .compose(&h.right_mult_by(&self.g1_inv()))
            .unwrap();
        conj.compose(&twist).unwrap()
    }

    /// The automorphism `h ↦ g2⁻¹ f2(S h₁) γ(h₂) f2(h₃) g2` determined by γ.
    pub fn predicted_delta(&self, gamma: &LinMap) -> LinMap {
        let h = &self.h2;
        let (f2, n) = (self.f2_map(), h.dim());
        let twist = materialize(h.field(), &[n], n, |v| {
            let v = h.comul_at(&h.comul_at(&v, 0), 1);
            let v = h.antipode_at(&v, 0).apply(0, 1, &f2, &[]); // h2 h3
            let v = v.apply(1, 1, &f2, &[]);
            v.map(0, gamma)
        });
        let conj = h
            .left_mult_by(&self.g2_inv())
            .compose(&h.right_mult_by(&self.g2))
            .unwrap();
        conj.compose(&twist).unwrap()
    }
}

fn covector(v: &[Scalar]) -> LinMap {
    let f = v[0].field();
    LinMap::new(Matrix::from_fn(f, 1, v.len(), |_, c| v[c].clone()))
}

fn character_checks(h: &HopfAlgebra, f: &[Scalar], name: &str, r: &mut ValidationReport) {
    let n = h.dim();
    let fm = covector(f);
    r.push(CheckResult::from_mismatch(
        format!("{name} multiplicative"),
        compare_pipelines(
            h.field(),
            &[n, n],
            |v| h.mul_at(&v, 0).apply(0, 1, &fm, &[]),
            |v| v.apply(1, 1, &fm, &[]).apply(0, 1, &fm, &[]),
        ),
    ));
    let at_one = fm.apply(&h.one());
    r.push(CheckResult::from_bool(
        format!("{name} unital"),
        at_one[0].is_one(),
        format!("{name}(1) = {}", at_one[0]),
    ));
}

fn grouplike_checks(h: &HopfAlgebra, g: &[Scalar], name: &str, r: &mut ValidationReport) {
    let f = h.field();
    let n = h.dim();
    let gv = TensorVec::from_dense(f, &[n], g);
    let lhs = h.comul_at(&gv, 0);
    let rhs = crate::hopf::tensor_pair(&gv, &gv);
    r.push(CheckResult::from_bool(
        format!("{name} grouplike"),
        lhs == rhs,
        format!("Δ({name}) ≠ {name}⊗{name}"),
    ));
    let e = h.counit().apply(g);
    r.push(CheckResult::from_bool(
        format!("{name} has counit 1"),
        e[0].is_one(),
        format!("ε({name}) = {}", e[0]),
    ));
}

/// Character and grouplike conditions plus both convolution equations.
pub fn check_involution_quadruple(q: &InvolutionQuadruple, target: &AutQuadruple) -> Result<ValidationReport> {
    if !same_algebra(q.h1(), target.h1()) || !same_algebra(q.h2(), target.h2()) {
        return Err(Error::AlgebraMismatch(
            "quadruple and component are over different algebras".into(),
        ));
    }
    let mut r = ValidationReport::new("quadruple in involution");
    character_checks(q.h1(), &q.f1, "f1", &mut r);
    grouplike_checks(q.h1(), &q.g1, "g1", &mut r);
    character_checks(q.h2(), &q.f2, "f2", &mut r);
    grouplike_checks(q.h2(), &q.g2, "g2", &mut r);
    r.push(CheckResult::matrices_equal(
        "alpha is the twist of beta",
        target.alpha().map().matrix(),
        q.predicted_alpha(target.beta().map()).matrix(),
    ));
    r.push(CheckResult::matrices_equal(
        "delta is the twist of gamma",
        target.delta().map().matrix(),
        q.predicted_delta(target.gamma().map()).matrix(),
    ));
    Ok(r)
}

/// The module `V = k^v_dim` in component `target` with
/// `h ▷ v = f1(h)v`, `ρ1(v) = g1 ⊗ v`, `v ◁ h = f2(h)v`, `ρ2(v) = v ⊗ g2`.
pub fn trivial_module(v_dim: usize, q: &InvolutionQuadruple, target: &AutQuadruple) -> Result<YdlModule> {
    let report = check_involution_quadruple(q, target)?;
    if !report.passed() {
        return Err(Error::InvalidQuadruple(report.failed_names().join(", ")));
    }
    let f = q.h1().field();
    let (n1, n2, d) = (q.h1().dim(), q.h2().dim(), v_dim);
    let la = Matrix::from_fn(
        f,
        d,
        n1 * d,
        |r, c| {
            if c % d == r {
                q.f1[c / d].clone()
            } else {
                f.zero()
            }
        },
    );
    let ra = Matrix::from_fn(
        f,
        d,
        d * n2,
        |r, c| {
            if c / n2 == r {
                q.f2[c % n2].clone()
            } else {
                f.zero()
            }
        },
    );
    let lc = Matrix::from_fn(
        f,
        n1 * d,
        d,
        |r, c| {
            if r % d == c {
                q.g1[r / d].clone()
            } else {
                f.zero()
            }
        },
    );
    let rc = Matrix::from_fn(
        f,
        d * n2,
        d,
        |r, c| {
            if r / n2 == c {
                q.g2[r % n2].clone()
            } else {
                f.zero()
            }
        },
    );
    YdlModule::new(target.clone(), la.into(), ra.into(), lc.into(), rc.into())
}
