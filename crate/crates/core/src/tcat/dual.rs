use serde::Serialize;

use crate::autgroup::{inv_g, AutPair2, AutQuadruple};
use crate::error::Result;
use crate::exactlin::{LinMap, Matrix};
use crate::report::{CheckResult, ValidationReport};
use crate::ydl::axioms::names;
use crate::ydl::{check_ydl_axioms, full_report, is_ydl_morphism, YdlModule};

use super::{tensor_module, unit_module};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A dual object with its evaluation and coevaluation.
///
/// Left: `ev: M* ⊗ M → k`, `coev: k → M ⊗ M*`.
/// Right: `ev: M ⊗ *M → k`, `coev: k → *M ⊗ M`.
#[derive(Clone, Debug)]
pub struct DualityData {
    pub side: Side,
    pub dual: YdlModule,
    pub ev: LinMap,
    pub coev: LinMap,
}

/// `M* = Hom(M, k)` in component (α, β, γ, δ)⁻¹ with
///
/// ```text
/// (h ▷ f)(m) = f(S h ▷ m)
/// f₍₋₁₎ ⊗ f₍₀₎(m) = α⁻¹β⁻¹S⁻¹(m₍₋₁₎) ⊗ f(m₍₀₎)
/// (f ◁ h)(m) = f(m ◁ δ⁻¹γ⁻¹S⁻¹ h)
/// f₍₀₎(m) ⊗ f₍₁₎ = f(m₍₀₎) ⊗ S(m₍₁₎)
/// ```
pub fn left_dual(m: &YdlModule) -> Result<DualityData> {
    build(m, Side::Left)
}

/// `*M`: the same formulas with S and S⁻¹ exchanged.
pub fn right_dual(m: &YdlModule) -> Result<DualityData> {
    build(m, Side::Right)
}

fn build(m: &YdlModule, side: Side) -> Result<DualityData> {
    let f = m.field();
    let h1 = m.h1();
    let h2 = m.h2();
    let x = m.component();
    let (n1, n2, d) = (h1.dim(), h2.dim(), m.dim());
    let (s1, s1_inv, s2, s2_inv) = (
        h1.antipode().matrix(),
        h1.antipode_inv().matrix(),
        h2.antipode().matrix(),
        h2.antipode_inv().matrix(),
    );
    let (act1, coact1, act2, coact2) = match side {
        Side::Left => (s1, s1_inv, s2_inv, s2),
        Side::Right => (s1_inv, s1, s2, s2_inv),
    };
    let ab_inv = x.alpha().inverse_map().compose(x.beta().inverse_map())?;
    let x_mat = ab_inv.matrix().mul(coact1)?;
    let dg_inv = x.delta().inverse_map().compose(x.gamma().inverse_map())?;
    let y_mat = dg_inv.matrix().mul(act2)?;

    let l = m.left_action().matrix();
    let lam = m.left_coaction().matrix();
    let r = m.right_action().matrix();
    let rho = m.right_coaction().matrix();

    let la = Matrix::from_fn(f, d, n1 * d, |j, col| {
        let (a, i) = (col / d, col % d);
        sum(f, n1, |b| act1.get(b, a) * l.get(i, b * d + j))
    });
    let lc = Matrix::from_fn(f, n1 * d, d, |row, i| {
        let (b, j) = (row / d, row % d);
        sum(f, n1, |a| x_mat.get(b, a) * lam.get(a * d + i, j))
    });
    let ra = Matrix::from_fn(f, d, d * n2, |j, col| {
        let (i, a) = (col / n2, col % n2);
        sum(f, n2, |b| y_mat.get(b, a) * r.get(i, j * n2 + b))
    });
    let rc = Matrix::from_fn(f, d * n2, d, |row, i| {
        let (j, b) = (row / n2, row % n2);
        sum(f, n2, |a| coact2.get(b, a) * rho.get(i * n2 + a, j))
    });
    let dual = YdlModule::new(inv_g(x), la.into(), ra.into(), lc.into(), rc.into())?;

    let pairing = Matrix::from_fn(f, 1, d * d, |_, c| if c / d == c % d { f.one() } else { f.zero() });
    Ok(DualityData {
        side,
        dual,
        ev: LinMap::new(pairing.clone()),
        coev: LinMap::new(pairing.transpose()),
    })
}

fn sum(
    f: crate::exactlin::FieldCtx,
    n: usize,
    term: impl Fn(usize) -> crate::exactlin::Scalar,
) -> crate::exactlin::Scalar {
    let mut acc = f.zero();
    for k in 0..n {
        let t = term(k);
        if !t.is_zero() {
            acc += &t;
        }
    }
    acc
}

impl DualityData {
    /// Snake identities, component bookkeeping, the dual's axiom suite, and
    /// that ev and coev are morphisms to and from the unit object.
    pub fn check(&self, m: &YdlModule) -> Result<ValidationReport> {
        let f = m.field();
        let d = m.dim();
        let id = LinMap::identity(f, d);
        let mut r = ValidationReport::new(match self.side {
            Side::Left => "left duality",
            Side::Right => "right duality",
        });
        let (snake_m, snake_dual) = match self.side {
            // (id ⊗ ev)(coev ⊗ id), (ev ⊗ id)(id ⊗ coev)
            Side::Left => (
                id.tensor(&self.ev)?.compose(&self.coev.tensor(&id)?)?,
                self.ev.tensor(&id)?.compose(&id.tensor(&self.coev)?)?,
            ),
            // (ev ⊗ id)(id ⊗ coev), (id ⊗ ev)(coev ⊗ id)
            Side::Right => (
                self.ev.tensor(&id)?.compose(&id.tensor(&self.coev)?)?,
                id.tensor(&self.ev)?.compose(&self.coev.tensor(&id)?)?,
            ),
        };
        r.push(CheckResult::matrices_equal(
            "snake on the module",
            snake_m.matrix(),
            id.matrix(),
        ));
        r.push(CheckResult::matrices_equal(
            "snake on the dual",
            snake_dual.matrix(),
            id.matrix(),
        ));
        r.push(CheckResult::from_bool(
            "dual component is the inverse",
            *self.dual.component() == inv_g(m.component()),
            "component differs from the group inverse",
        ));
        r.absorb("dual", full_report(&self.dual));

        let k = unit_module(m);
        let (ev_src, coev_dst) = match self.side {
            Side::Left => (tensor_module(&self.dual, m)?, tensor_module(m, &self.dual)?),
            Side::Right => (tensor_module(m, &self.dual)?, tensor_module(&self.dual, m)?),
        };
        r.absorb("ev", is_ydl_morphism(&self.ev, &ev_src, &k)?);
        r.absorb("coev", is_ydl_morphism(&self.coev, &k, &coev_dst)?);

        for (label, delta) in delta_readings(m.component())? {
            let probe = self.dual.with_component(delta)?;
            let ok = check_ydl_axioms(&probe).passed_named(names::RIGHT_LONG);
            r.push(CheckResult::from_bool(format!("right condition with δ-slot {label}"), ok, "fails").informational());
        }
        Ok(r)
    }
}

/// The dual's component with δ-slot γδ⁻¹γ⁻¹ (the group inverse) and with
/// the alternative γδγ⁻¹.
fn delta_readings(x: &AutQuadruple) -> Result<Vec<(&'static str, AutQuadruple)>> {
    let inv = inv_g(x);
    let (g, dl) = (x.gamma(), x.delta());
    let alt = g.compose(dl)?.compose(&g.inverse())?;
    let mut alt_q = inv.clone();
    alt_q.pair2 = AutPair2::new(inv.gamma().clone(), alt)?;
    Ok(vec![("γδ⁻¹γ⁻¹", inv), ("γδγ⁻¹", alt_q)])
}
