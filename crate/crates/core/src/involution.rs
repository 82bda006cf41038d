//! The isomorphism between the component of (α, β, γ, δ) and the unit
//! component induced by a quadruple in involution.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::autgroup::unit_g;
use crate::error::{Error, Result};
use crate::exactlin::{materialize, LinMap, Matrix};
use crate::hopf::same_algebra;
use crate::report::{CheckResult, ValidationReport};
use crate::ydl::{check_involution_quadruple, full_report, hom_space, is_ydl_morphism, InvolutionQuadruple, YdlModule};

/// How F twists the left coaction by g1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoactionTwist {
    /// `g1⁻¹ m₍₋₁₎ ⊗ m₍₀₎`, the inverse of G's coaction.
    Inverse,
    /// `g1 m₍₋₁₎ ⊗ m₍₀₎`, kept for comparison only.
    Direct,
}

fn require_quadruple(q: &InvolutionQuadruple, m: &YdlModule) -> Result<()> {
    if !same_algebra(q.h1(), m.h1()) || !same_algebra(q.h2(), m.h2()) {
        return Err(Error::AlgebraMismatch(
            "quadruple and module are over different algebras".into(),
        ));
    }
    let r = check_involution_quadruple(q, m.component())?;
    if r.passed() {
        Ok(())
    } else {
        Err(Error::InvalidQuadruple(r.failed_names().join(", ")))
    }
}

/// F: from the component of `m` to the unit component.
///
/// ```text
/// h → m = f1(β⁻¹S h₁) β⁻¹(h₂) ▷ m        m₍₋₁₎ ⊗ m₍₀₎ ↦ g1⁻¹m₍₋₁₎ ⊗ m₍₀₎
/// m ↼ h = m ◁ γ⁻¹(h₁) f2(γ⁻¹S h₂)        m₍₀₎ ⊗ m₍₁₎ ↦ m₍₀₎ ⊗ m₍₁₎g2⁻¹
/// ```
pub fn functor_f(m: &YdlModule, q: &InvolutionQuadruple) -> Result<YdlModule> {
    functor_f_with(m, q, CoactionTwist::Inverse)
}

pub fn functor_f_with(m: &YdlModule, q: &InvolutionQuadruple, twist: CoactionTwist) -> Result<YdlModule> {
    require_quadruple(q, m)?;
    let x = m.component();
    let (h1, h2) = (m.h1(), m.h2());
    let f = m.field();
    let (n1, n2, d) = (h1.dim(), h2.dim(), m.dim());
    let (f1, f2) = (q.f1_map(), q.f2_map());
    let b_inv = x.beta().inverse_map();
    let g_inv = x.gamma().inverse_map();

    let la = materialize(f, &[n1, d], d, |v| {
        let v = h1.comul_at(&v, 0); // h1 h2 m
        let v = h1.antipode_at(&v, 0).map(0, b_inv).apply(0, 1, &f1, &[]);
        m.act_left_at(&v.map(0, b_inv), 0)
    });
    let ra = materialize(f, &[d, n2], d, |v| {
        let v = h2.comul_at(&v, 1); // m h1 h2
        let v = h2.antipode_at(&v, 2).map(2, g_inv).apply(2, 1, &f2, &[]);
        m.act_right_at(&v.map(1, g_inv), 0)
    });
    let g1_side = match twist {
        CoactionTwist::Inverse => q.g1_inv(),
        CoactionTwist::Direct => q.g1.clone(),
    };
    let lc = h1
        .left_mult_by(&g1_side)
        .tensor(&LinMap::identity(f, d))?
        .compose(m.left_coaction())?;
    let rc = LinMap::identity(f, d)
        .tensor(&h2.right_mult_by(&q.g2_inv()))?
        .compose(m.right_coaction())?;
    YdlModule::new(unit_g(h1.clone(), h2.clone()), la, ra, lc, rc)
}

/// G: from the unit component to `target`.
///
/// ```text
/// h ▷ n = f1(h₁) β(h₂) → n        n₍₋₁₎ ⊗ n₍₀₎ ↦ g1 n₍₋₁₎ ⊗ n₍₀₎
/// n ◁ h = n ↼ γ(h₁) f2(h₂)        n₍₀₎ ⊗ n₍₁₎ ↦ n₍₀₎ ⊗ n₍₁₎g2
/// ```
pub fn functor_g(n: &YdlModule, q: &InvolutionQuadruple, target: &crate::autgroup::AutQuadruple) -> Result<YdlModule> {
    if !n.component().is_unit() {
        return Err(Error::ComponentMismatch(
            "G expects a module in the unit component".into(),
        ));
    }
    let probe = n.with_component(target.clone())?;
    require_quadruple(q, &probe)?;
    let (h1, h2) = (n.h1(), n.h2());
    let f = n.field();
    let (n1, n2, d) = (h1.dim(), h2.dim(), n.dim());
    let (f1, f2) = (q.f1_map(), q.f2_map());

    let la = materialize(f, &[n1, d], d, |v| {
        let v = h1.comul_at(&v, 0).apply(0, 1, &f1, &[]); // h2 n
        n.act_left_at(&v.map(0, target.beta().map()), 0)
    });
    let ra = materialize(f, &[d, n2], d, |v| {
        let v = h2.comul_at(&v, 1).apply(2, 1, &f2, &[]); // n h1
        n.act_right_at(&v.map(1, target.gamma().map()), 0)
    });
    let lc = h1
        .left_mult_by(&q.g1)
        .tensor(&LinMap::identity(f, d))?
        .compose(n.left_coaction())?;
    let rc = LinMap::identity(f, d)
        .tensor(&h2.right_mult_by(&q.g2))?
        .compose(n.right_coaction())?;
    YdlModule::new(target.clone(), la, ra, lc, rc)
}

/// `f: M → N` is a morphism iff it is one between F(M) and F(N).
pub fn check_morphism_transport(
    f: &LinMap,
    m: &YdlModule,
    n: &YdlModule,
    q: &InvolutionQuadruple,
) -> Result<CheckResult> {
    let before = is_ydl_morphism(f, m, n)?.passed();
    let after = is_ydl_morphism(f, &functor_f(m, q)?, &functor_f(n, q)?)?.passed();
    Ok(CheckResult::from_bool(
        "morphism property is preserved by F",
        before == after,
        format!("morphism before: {before}, after: {after}"),
    ))
}

/// Both round trips on structure maps, validity of F(m), and transport of
/// morphisms. Also reports, for comparison, what happens if F's left
/// coaction uses g1 instead of g1⁻¹.
pub fn check_iso_pair(m: &YdlModule, q: &InvolutionQuadruple) -> Result<ValidationReport> {
    let mut r = ValidationReport::new("involution isomorphism");
    let fm = functor_f(m, q)?;
    r.absorb("F(M)", full_report(&fm));
    let gfm = functor_g(&fm, q, m.component())?;
    r.push(CheckResult::from_bool(
        "G after F is the identity",
        gfm == *m,
        first_structure_difference(&gfm, m),
    ));
    let fgfm = functor_f(&gfm, q)?;
    r.push(CheckResult::from_bool(
        "F after G is the identity",
        fgfm == fm,
        first_structure_difference(&fgfm, &fm),
    ));

    let homs = hom_space(m, m)?;
    let homs_f = hom_space(&fm, &fm)?;
    r.push(CheckResult::from_bool(
        "F is bijective on endomorphisms",
        homs.len() == homs_f.len() && span_contains(&homs_f, &homs)?,
        format!("dim End(M) = {}, dim End(F M) = {}", homs.len(), homs_f.len()),
    ));
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let f = m.field();
    let d = m.dim();
    let mut combo = LinMap::zero(f, d, d);
    for h in &homs {
        combo = combo.add(&h.scale(&f.from_i64(rng.gen_range(-5..=5))))?;
    }
    r.push(check_morphism_transport(&combo, m, m, q)?.with_detail("random endomorphism"));
    let noise = LinMap::new(Matrix::from_fn(f, d, d, |_, _| f.from_i64(rng.gen_range(-3..=3))));
    r.push(check_morphism_transport(&noise, m, m, q)?.with_detail("random linear map"));

    let alt = functor_f_with(m, q, CoactionTwist::Direct)?;
    r.push(
        CheckResult::from_bool(
            "F with g1 in the left coaction is valid",
            full_report(&alt).passed(),
            "axioms fail",
        )
        .informational(),
    );
    r.push(
        CheckResult::from_bool(
            "F with g1 in the left coaction is inverse to G",
            functor_g(&alt, q, m.component())? == *m,
            "round trip differs",
        )
        .informational(),
    );
    Ok(r)
}

fn first_structure_difference(a: &YdlModule, b: &YdlModule) -> String {
    use crate::ydl::Structure;
    Structure::ALL
        .iter()
        .find(|&&s| a.structure(s) != b.structure(s))
        .map(|s| format!("{} differs", s.name()))
        .unwrap_or_else(|| "component differs".into())
}

/// Whether every map of `sub` is a combination of `basis`.
fn span_contains(basis: &[LinMap], sub: &[LinMap]) -> Result<bool> {
    let Some(first) = basis.first().or(sub.first()) else {
        return Ok(true);
    };
    let f = first.matrix().field();
    let size = first.matrix().rows() * first.matrix().cols();
    let flatten = |m: &LinMap| -> Vec<crate::exactlin::Scalar> {
        let mat = m.matrix();
        (0..mat.rows())
            .flat_map(|i| (0..mat.cols()).map(move |j| mat.get(i, j).clone()))
            .collect()
    };
    let cols: Vec<Vec<_>> = basis.iter().map(flatten).collect();
    let a = Matrix::from_fn(f, size, cols.len(), |i, j| cols[j][i].clone());
    for s in sub {
        let v = flatten(s);
        let rhs = Matrix::from_fn(f, size, 1, |i, _| v[i].clone());
        if basis.is_empty() {
            if !rhs.is_zero() {
                return Ok(false);
            }
            continue;
        }
        if a.solve(&rhs)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
