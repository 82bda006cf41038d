//! Ready-made algebras, automorphisms, quadruples and modules used by the
//! demos and test suites.

use std::sync::Arc;

use crate::autgroup::AutQuadruple;
use crate::error::Result;
use crate::exactlin::{materialize, FieldCtx, LinMap, Matrix};
use crate::grpalg::{lift_automorphism, GroupTable};
use crate::hopf::{group_algebra, h4_scaling, sweedler_h4, HopfAlgebra, HopfAutomorphism};
use crate::ydl::{InvolutionQuadruple, YdlModule};

/// Sweedler's algebra behind an `Arc`.
pub fn h4(field: FieldCtx) -> Result<Arc<HopfAlgebra>> {
    Ok(Arc::new(sweedler_h4(field)?))
}

pub fn group(table: &GroupTable, field: FieldCtx) -> Arc<HopfAlgebra> {
    Arc::new(group_algebra(table, field))
}

/// The automorphism `x ↦ λx` of Sweedler's algebra.
pub fn h4_aut(h: &Arc<HopfAlgebra>, lambda: i64) -> Result<HopfAutomorphism> {
    HopfAutomorphism::new(h.clone(), h4_scaling(h.field(), &h.field().from_i64(lambda)))
}

/// (α_a, α_b, α_c, α_d) over (H4, H4).
pub fn h4_component(h: &Arc<HopfAlgebra>, scales: [i64; 4]) -> Result<AutQuadruple> {
    let [a, b, c, d] = scales;
    AutQuadruple::from_maps(h4_aut(h, a)?, h4_aut(h, b)?, h4_aut(h, c)?, h4_aut(h, d)?)
}

/// A component whose four automorphisms are induced by the given group
/// automorphisms of G1 and G2.
pub fn group_component(
    g1: &GroupTable,
    h1: &Arc<HopfAlgebra>,
    g2: &GroupTable,
    h2: &Arc<HopfAlgebra>,
    perms: [&[usize]; 4],
) -> Result<AutQuadruple> {
    AutQuadruple::from_maps(
        lift_automorphism(g1, h1, perms[0])?,
        lift_automorphism(g1, h1, perms[1])?,
        lift_automorphism(g2, h2, perms[2])?,
        lift_automorphism(g2, h2, perms[3])?,
    )
}

/// The quadruple (f1, 1, ε2, 1) on (H4, H2) with `f1(g) = −1`, `f1(x) = 0`;
/// it is in involution with (α₋₁, id, γ, γ).
pub fn h4_sign_quadruple(h1: &Arc<HopfAlgebra>, h2: &Arc<HopfAlgebra>) -> Result<InvolutionQuadruple> {
    let f = h1.field();
    let base = InvolutionQuadruple::counits(h1.clone(), h2.clone());
    InvolutionQuadruple::new(
        h1.clone(),
        h2.clone(),
        vec![f.one(), f.from_i64(-1), f.zero(), f.zero()],
        base.g1,
        base.f2,
        base.g2,
    )
}

/// `H1 ⊗ H2` with the twisted regular structures of any component:
///
/// ```text
/// h ▷ (a⊗b) = α(h₁) a β(S h₂) ⊗ b        ρ1(a⊗b) = a₁ ⊗ (a₂⊗b)
/// (a⊗b) ◁ h = a ⊗ γ(S h₁) b δ(h₂)        ρ2(a⊗b) = (a⊗b₁) ⊗ b₂
/// ```
pub fn twisted_regular(component: &AutQuadruple) -> Result<YdlModule> {
    let h1 = component.h1();
    let h2 = component.h2();
    let f = h1.field();
    let (n1, n2) = (h1.dim(), h2.dim());
    let d = n1 * n2;
    let (alpha, beta) = (component.alpha().map(), component.beta().map());
    let (gamma, delta) = (component.gamma().map(), component.delta().map());
    let la = materialize(f, &[n1, n1, n2], d, |v| {
        let v = h1.comul_at(&v, 0).map(0, alpha); // α(h1) h2 a b
        let v = h1.antipode_at(&v, 1).map(1, beta).permute(&[0, 2, 1, 3]); // α(h1) a βS(h2) b
        h1.mul_at(&h1.mul_at(&v, 0), 0)
    });
    let ra = materialize(f, &[n1, n2, n2], d, |v| {
        let v = h2.comul_at(&v, 2); // a b h1 h2
        let v = h2.antipode_at(&v, 2).map(2, gamma).map(3, delta);
        let v = v.permute(&[0, 2, 1, 3]); // a γS(h1) b δ(h2)
        h2.mul_at(&h2.mul_at(&v, 1), 1)
    });
    let lc = materialize(f, &[n1, n2], n1 * d, |v| h1.comul_at(&v, 0));
    let rc = materialize(f, &[n1, n2], d * n2, |v| h2.comul_at(&v, 1));
    YdlModule::new(component.clone(), la, ra, lc, rc)
}

/// The submodule of [`twisted_regular`] spanned by `e_a ⊗ e_b` for `a` in
/// `left` and `b` in `right`.
pub fn regular_block(component: &AutQuadruple, left: &[usize], right: &[usize]) -> Result<YdlModule> {
    let m = twisted_regular(component)?;
    let f = m.field();
    let n2 = component.h2().dim();
    let cols: Vec<usize> = left
        .iter()
        .flat_map(|&a| right.iter().map(move |&b| a * n2 + b))
        .collect();
    let basis = Matrix::from_fn(
        f,
        m.dim(),
        cols.len(),
        |r, c| {
            if cols[c] == r {
                f.one()
            } else {
                f.zero()
            }
        },
    );
    m.restrict(&basis)
}

/// Invariant blocks of the twisted regular structure of Sweedler's algebra.
pub mod h4_blocks {
    /// `span{1, x}`, stable on the left.
    pub const LEFT_EVEN: &[usize] = &[0, 2];
    /// `span{g, gx}`, stable on the left.
    pub const LEFT_ODD: &[usize] = &[1, 3];
    /// `span{1, gx}`, stable on the right.
    pub const RIGHT_EVEN: &[usize] = &[0, 3];
    /// `span{g, x}`, stable on the right.
    pub const RIGHT_ODD: &[usize] = &[1, 2];
    /// `span{1}`: stable on the left when α = β, on the right when γ = δ.
    pub const UNIT: &[usize] = &[0];
}

/// Multiplication-by-`h` on the left with Δ as coaction and trivial H2
/// structure. A bimodule and bicomodule, not in general a Yetter-Drinfeld-Long
/// module.
pub fn regular_left_module(component: &AutQuadruple) -> Result<YdlModule> {
    let h1 = component.h1();
    let h2 = component.h2();
    let f = h1.field();
    let n1 = h1.dim();
    let eps2 = h2.counit().matrix().clone();
    let ra = Matrix::from_fn(f, n1, n1 * h2.dim(), |r, c| {
        if c / h2.dim() == r {
            eps2.get(0, c % h2.dim()).clone()
        } else {
            f.zero()
        }
    });
    let unit2 = h2.one();
    let rc = Matrix::from_fn(f, n1 * h2.dim(), n1, |r, c| {
        if r / h2.dim() == c {
            unit2[r % h2.dim()].clone()
        } else {
            f.zero()
        }
    });
    YdlModule::new(
        component.clone(),
        h1.mult().clone(),
        LinMap::new(ra),
        h1.comult().clone(),
        LinMap::new(rc),
    )
}
