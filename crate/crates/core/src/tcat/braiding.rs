use crate::autgroup::{inv_g, mul_g};
use crate::error::{Error, Result};
use crate::exactlin::{materialize, LinMap};
use crate::report::{CheckResult, ValidationReport};
use crate::ydl::{is_ydl_morphism, YdlModule};

use super::{conjugate_module, same_pair, tensor_module};

/// `c_{M,N}: M ⊗ N → ᴹN ⊗ M` with its explicit inverse.
#[derive(Clone, Debug)]
pub struct BraidingMap {
    pub map: LinMap,
    pub inverse: LinMap,
    /// `ᴹN`, the conjugate of N by the component of M.
    pub conjugated: YdlModule,
}

/// With comp(M) = (α1, β1, γ1, δ1):
///
/// ```text
/// c(m ⊗ n)   = β1⁻¹(m₍₋₁₎) ▷ n₍₀₎ ⊗ m₍₀₎ ◁ δ1⁻¹(n₍₁₎)
/// c⁻¹(n ⊗ m) = m₍₀₎ ◁ δ1⁻¹S⁻¹(n₍₁₎) ⊗ β1⁻¹S⁻¹(m₍₋₁₎) ▷ n₍₀₎
/// ```
///
/// where the coactions of N are its own (not those of ᴹN).
pub fn braiding(m: &YdlModule, n: &YdlModule) -> Result<BraidingMap> {
    same_pair(m, n)?;
    let x = m.component();
    let h1 = m.h1();
    let h2 = m.h2();
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let b_inv = x.beta().inverse_map();
    let d_inv = x.delta().inverse_map();

    let map = materialize(f, &[dm, dn], dn * dm, |v| {
        let v = n.coact_right_at(&m.coact_left_at(&v, 0), 2); // m-1 m0 n0 n1
        let v = v.map(0, b_inv).map(3, d_inv).permute(&[0, 2, 1, 3]); // b n0 m0 d
        m.act_right_at(&n.act_left_at(&v, 0), 1)
    });
    let inverse = materialize(f, &[dn, dm], dm * dn, |v| {
        let v = m.coact_left_at(&n.coact_right_at(&v, 0), 2); // n0 n1 m-1 m0
        let v = h2.antipode_inv_at(&v, 1).map(1, d_inv);
        let v = h1.antipode_inv_at(&v, 2).map(2, b_inv);
        let v = v.permute(&[3, 1, 2, 0]); // m0 d b n0
        n.act_left_at(&m.act_right_at(&v, 0), 1)
    });
    Ok(BraidingMap {
        map,
        inverse,
        conjugated: conjugate_module(x, n)?,
    })
}

impl BraidingMap {
    /// Invertibility, the target component, and that `c` is a morphism
    /// `M ⊗ N → ᴹN ⊗ M`.
    pub fn check(&self, m: &YdlModule, n: &YdlModule) -> Result<ValidationReport> {
        let mut r = ValidationReport::new("braiding");
        let f = m.field();
        let d = m.dim() * n.dim();
        let id = LinMap::identity(f, d);
        r.push(CheckResult::matrices_equal(
            "inverse after braiding is the identity",
            self.inverse.compose(&self.map)?.matrix(),
            id.matrix(),
        ));
        r.push(CheckResult::matrices_equal(
            "braiding after inverse is the identity",
            self.map.compose(&self.inverse)?.matrix(),
            id.matrix(),
        ));
        let x = m.component();
        let expected = mul_g(&mul_g(x, n.component())?, &inv_g(x))?;
        r.push(CheckResult::from_bool(
            "conjugated component",
            *self.conjugated.component() == expected,
            "component of the conjugate differs from x∗y∗x⁻¹",
        ));
        let source = tensor_module(m, n)?;
        let target = tensor_module(&self.conjugated, m)?;
        let morphism = is_ydl_morphism(&self.map, &source, &target)?;
        r.absorb("braiding", morphism);
        Ok(r)
    }
}

/// Both hexagon identities
///
/// ```text
/// c_{M⊗N,P} = (c_{M,ᴺP} ⊗ id_N)(id_M ⊗ c_{N,P})
/// c_{M,N⊗P} = (id_{ᴹN} ⊗ c_{M,P})(c_{M,N} ⊗ id_P)
/// ```
///
/// together with the conjugation identities that make both sides land in
/// the same module: `ᴹ(ᴺP) = ^{M⊗N}P` and `ᴹ(N⊗P) = ᴹN ⊗ ᴹP`.
pub fn check_hexagons(m: &YdlModule, n: &YdlModule, p: &YdlModule) -> Result<ValidationReport> {
    same_pair(m, n)?;
    same_pair(m, p)?;
    let f = m.field();
    let (id_m, id_n, id_p) = (
        LinMap::identity(f, m.dim()),
        LinMap::identity(f, n.dim()),
        LinMap::identity(f, p.dim()),
    );
    let mut r = ValidationReport::new("hexagons");

    let mn = tensor_module(m, n)?;
    let c_np = braiding(n, p)?;
    let n_p = &c_np.conjugated;
    let c_m_np = braiding(m, n_p)?;
    let c_mn_p = braiding(&mn, p)?;
    r.push(CheckResult::from_bool(
        "iterated conjugation equals conjugation by the tensor product",
        c_m_np.conjugated == c_mn_p.conjugated,
        "structure maps or components differ",
    ));
    let rhs = c_m_np.map.tensor(&id_n)?.compose(&id_m.tensor(&c_np.map)?)?;
    r.push(CheckResult::matrices_equal(
        "braiding out of a tensor product",
        c_mn_p.map.matrix(),
        rhs.matrix(),
    ));

    let np = tensor_module(n, p)?;
    let c_mn = braiding(m, n)?;
    let c_mp = braiding(m, p)?;
    let c_m_np2 = braiding(m, &np)?;
    let conj_tensor = tensor_module(&c_mn.conjugated, &c_mp.conjugated)?;
    r.push(CheckResult::from_bool(
        "conjugation preserves tensor products",
        c_m_np2.conjugated == conj_tensor,
        "structure maps or components differ",
    ));
    let id_conj_n = LinMap::identity(f, n.dim());
    let rhs = id_conj_n.tensor(&c_mp.map)?.compose(&c_mn.map.tensor(&id_p)?)?;
    r.push(CheckResult::matrices_equal(
        "braiding into a tensor product",
        c_m_np2.map.matrix(),
        rhs.matrix(),
    ));
    Ok(r)
}

/// `(g ⊗ f) ∘ c_{M,N} = c_{M',N'} ∘ (f ⊗ g)` for morphisms `f: M → M'`,
/// `g: N → N'`.
pub fn check_braiding_naturality(
    f: &LinMap,
    g: &LinMap,
    m: &YdlModule,
    m2: &YdlModule,
    n: &YdlModule,
    n2: &YdlModule,
) -> Result<CheckResult> {
    for (map, src, dst, what) in [(f, m, m2, "f"), (g, n, n2, "g")] {
        let report = is_ydl_morphism(map, src, dst)?;
        if !report.passed() {
            return Err(Error::NotMorphism(format!(
                "{what} fails: {}",
                report.failed_names().join(", ")
            )));
        }
    }
    let lhs = g.tensor(f)?.compose(&braiding(m, n)?.map)?;
    let rhs = braiding(m2, n2)?.map.compose(&f.tensor(g)?)?;
    Ok(CheckResult::matrices_equal(
        "braiding is natural",
        lhs.matrix(),
        rhs.matrix(),
    ))
}

/// `c_{ᴾM, ᴾN} = c_{M,N}`, conjugating by the component of P.
pub fn check_phi_compat(p: &YdlModule, m: &YdlModule, n: &YdlModule) -> Result<CheckResult> {
    same_pair(p, m)?;
    same_pair(p, n)?;
    let x = p.component();
    let pm = conjugate_module(x, m)?;
    let pn = conjugate_module(x, n)?;
    Ok(CheckResult::matrices_equal(
        "braiding is invariant under conjugation",
        braiding(&pm, &pn)?.map.matrix(),
        braiding(m, n)?.map.matrix(),
    ))
}
