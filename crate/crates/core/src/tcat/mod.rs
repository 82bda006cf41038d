//! The braided crossed structure on Yetter-Drinfeld-Long modules: tensor
//! products, the conjugation action of G, the braiding and rigid duals.

mod braiding;
mod dual;

use crate::autgroup::{inv_g, mul_g, unit_g, AutQuadruple};
use crate::error::{Error, Result};
use crate::exactlin::{materialize, LinMap};
use crate::hopf::same_algebra;
use crate::ydl::{trivial_module, InvolutionQuadruple, YdlModule};

pub use braiding::{braiding, check_braiding_naturality, check_hexagons, check_phi_compat, BraidingMap};
pub use dual::{left_dual, right_dual, DualityData, Side};

pub(crate) fn same_pair(m: &YdlModule, n: &YdlModule) -> Result<()> {
    if same_algebra(m.h1(), n.h1()) && same_algebra(m.h2(), n.h2()) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch(
            "modules are over different algebra pairs".into(),
        ))
    }
}

/// The monoidal unit: `k` with counit actions and unit coactions.
pub fn unit_module(m: &YdlModule) -> YdlModule {
    let q = InvolutionQuadruple::counits(m.h1().clone(), m.h2().clone());
    trivial_module(1, &q, &unit_g(m.h1().clone(), m.h2().clone())).expect("counit quadruple fits the unit component")
}

/// `M ⊗ N` in component `comp(M) ∗ comp(N)`. With comp(M) = (α1, β1, γ1, δ1)
/// and comp(N) = (α2, β2, γ2, δ2):
///
/// ```text
/// h ▷ (m⊗n) = h₁▷m ⊗ h₂▷n
/// ρ1(m⊗n) = α2(m₍₋₁₎) α2β1α2⁻¹(n₍₋₁₎) ⊗ m₍₀₎ ⊗ n₍₀₎
/// (m⊗n) ◁ h = m◁γ2(h₁) ⊗ n◁γ2⁻¹δ1γ2(h₂)
/// ρ2(m⊗n) = m₍₀₎ ⊗ n₍₀₎ ⊗ m₍₁₎n₍₁₎
/// ```
pub fn tensor_module(m: &YdlModule, n: &YdlModule) -> Result<YdlModule> {
    same_pair(m, n)?;
    let (x, y) = (m.component(), n.component());
    let h1 = m.h1();
    let h2 = m.h2();
    let f = m.field();
    let (n1, n2, dm, dn) = (h1.dim(), h2.dim(), m.dim(), n.dim());
    let d = dm * dn;

    let a2 = y.alpha();
    let twist1 = a2.compose(x.beta())?.compose(&a2.inverse())?;
    let g2 = y.gamma();
    let twist2 = g2.inverse().compose(x.delta())?.compose(g2)?;

    let la = materialize(f, &[n1, dm, dn], d, |v| {
        let v = h1.comul_at(&v, 0).permute(&[0, 2, 1, 3]); // h1 m h2 n
        n.act_left_at(&m.act_left_at(&v, 0), 1)
    });
    let lc = materialize(f, &[dm, dn], n1 * d, |v| {
        let v = n.coact_left_at(&m.coact_left_at(&v, 0), 2); // m-1 m0 n-1 n0
        let v = v.map(0, a2.map()).map(2, twist1.map()).permute(&[0, 2, 1, 3]);
        h1.mul_at(&v, 0)
    });
    let ra = materialize(f, &[dm, dn, n2], d, |v| {
        let v = h2.comul_at(&v, 2).map(2, g2.map()).map(3, twist2.map()); // m n h1 h2
        let v = m.act_right_at(&v.permute(&[0, 2, 1, 3]), 0); // m◁ n h2
        n.act_right_at(&v, 1)
    });
    let rc = materialize(f, &[dm, dn], d * n2, |v| {
        let v = n.coact_right_at(&m.coact_right_at(&v, 0), 2); // m0 m1 n0 n1
        h2.mul_at(&v.permute(&[0, 2, 1, 3]), 2)
    });
    YdlModule::new(mul_g(x, y)?, la, ra, lc, rc)
}

/// The conjugate `ˣN` in component `x ∗ comp(N) ∗ x⁻¹`. With
/// x = (α1, β1, γ1, δ1) and comp(N) = (α2, β2, γ2, δ2):
///
/// ```text
/// h ⇀ n = β1⁻¹α1(h) ▷ n
/// ρ1'(n) = α1⁻¹α2β1α2⁻¹(n₍₋₁₎) ⊗ n₍₀₎
/// n ↼ h = n ◁ γ2⁻¹δ1γ2γ1⁻¹(h)
/// ρ2'(n) = n₍₀₎ ⊗ γ1δ1⁻¹(n₍₁₎)
/// ```
pub fn conjugate_module(x: &AutQuadruple, n: &YdlModule) -> Result<YdlModule> {
    if !same_algebra(x.h1(), n.h1()) || !same_algebra(x.h2(), n.h2()) {
        return Err(Error::AlgebraMismatch(
            "conjugating element is over different algebras".into(),
        ));
    }
    let y = n.component();
    let (a1, b1, g1, d1) = (x.alpha(), x.beta(), x.gamma(), x.delta());
    let (a2, g2) = (y.alpha(), y.gamma());
    let la_twist = b1.inverse().compose(a1)?;
    let lc_twist = a1.inverse().compose(a2)?.compose(b1)?.compose(&a2.inverse())?;
    let ra_twist = g2.inverse().compose(d1)?.compose(g2)?.compose(&g1.inverse())?;
    let rc_twist = g1.compose(&d1.inverse())?;

    let f = n.field();
    let id_n = LinMap::identity(f, n.dim());
    let la = n.left_action().compose(&la_twist.map().tensor(&id_n)?)?;
    let lc = lc_twist.map().tensor(&id_n)?.compose(n.left_coaction())?;
    let ra = n.right_action().compose(&id_n.tensor(ra_twist.map())?)?;
    let rc = id_n.tensor(rc_twist.map())?.compose(n.right_coaction())?;
    let component = mul_g(&mul_g(x, y)?, &inv_g(x))?;
    YdlModule::new(component, la, ra, lc, rc)
}
