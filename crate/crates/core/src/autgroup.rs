//! The groups G1, G2 and G = G1 ⊕ G2 of automorphism pairs.
//!
//! G1 consists of pairs (α, β) of Hopf automorphisms of H1 with
//!
//! ```text
//! (α1, β1) ∗ (α2, β2) = (α2α1, α2β1α2⁻¹β2),   (α, β)⁻¹ = (α⁻¹, α⁻¹β⁻¹α)
//! ```
//!
//! and G2 of pairs (γ, δ) of automorphisms of H2 with
//!
//! ```text
//! (γ1, δ1) ∗ (γ2, δ2) = (γ1γ2, δ2γ2⁻¹δ1γ2),   (γ, δ)⁻¹ = (γ⁻¹, γδ⁻¹γ⁻¹).
//! ```
//!
//! The δ-slot of the G2 law is the one forced by the component of a tensor
//! product of modules; the variant `δ2γ2⁻¹δ1δ2` is kept
//! as [`mul2_variant`] so the difference can be tested.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, HopfAutomorphism};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutPair1 {
    pub alpha: HopfAutomorphism,
    pub beta: HopfAutomorphism,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutPair2 {
    pub gamma: HopfAutomorphism,
    pub delta: HopfAutomorphism,
}

/// An element (α, β, γ, δ) of G.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutQuadruple {
    pub pair1: AutPair1,
    pub pair2: AutPair2,
}

impl AutPair1 {
    pub fn new(alpha: HopfAutomorphism, beta: HopfAutomorphism) -> Result<Self> {
        if !crate::hopf::same_algebra(alpha.algebra(), beta.algebra()) {
            return Err(Error::AlgebraMismatch("α and β act on different algebras".into()));
        }
        Ok(AutPair1 { alpha, beta })
    }

    pub fn unit(h1: Arc<HopfAlgebra>) -> Self {
        let id = HopfAutomorphism::identity(h1);
        AutPair1 {
            alpha: id.clone(),
            beta: id,
        }
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        self.alpha.algebra()
    }

    pub fn inverse(&self) -> Self {
        let a_inv = self.alpha.inverse();
        let beta = a_inv
            .compose(&self.beta.inverse())
            .and_then(|x| x.compose(&self.alpha))
            .expect("components share an algebra");
        AutPair1 { alpha: a_inv, beta }
    }
}

impl AutPair2 {
    pub fn new(gamma: HopfAutomorphism, delta: HopfAutomorphism) -> Result<Self> {
        if !crate::hopf::same_algebra(gamma.algebra(), delta.algebra()) {
            return Err(Error::AlgebraMismatch("γ and δ act on different algebras".into()));
        }
        Ok(AutPair2 { gamma, delta })
    }

    pub fn unit(h2: Arc<HopfAlgebra>) -> Self {
        let id = HopfAutomorphism::identity(h2);
        AutPair2 {
            gamma: id.clone(),
            delta: id,
        }
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        self.gamma.algebra()
    }

    pub fn inverse(&self) -> Self {
        let g_inv = self.gamma.inverse();
        let delta = self
            .gamma
            .compose(&self.delta.inverse())
            .and_then(|x| x.compose(&g_inv))
            .expect("components share an algebra");
        AutPair2 { gamma: g_inv, delta }
    }
}

/// (α1, β1) ∗ (α2, β2) = (α2α1, α2β1α2⁻¹β2).
pub fn mul1(p: &AutPair1, q: &AutPair1) -> Result<AutPair1> {
    let (a1, b1, a2, b2) = (&p.alpha, &p.beta, &q.alpha, &q.beta);
    Ok(AutPair1 {
        alpha: a2.compose(a1)?,
        beta: a2.compose(b1)?.compose(&a2.inverse())?.compose(b2)?,
    })
}

/// (γ1, δ1) ∗ (γ2, δ2) = (γ1γ2, δ2γ2⁻¹δ1γ2).
pub fn mul2(p: &AutPair2, q: &AutPair2) -> Result<AutPair2> {
    let (g1, d1, g2, d2) = (&p.gamma, &p.delta, &q.gamma, &q.delta);
    Ok(AutPair2 {
        gamma: g1.compose(g2)?,
        delta: d2.compose(&g2.inverse())?.compose(d1)?.compose(g2)?,
    })
}

/// The variant law (γ1γ2, δ2γ2⁻¹δ1δ2). It is not a group law compatible
/// with tensor products; kept only to test the difference.
pub fn mul2_variant(p: &AutPair2, q: &AutPair2) -> Result<AutPair2> {
    let (g1, d1, g2, d2) = (&p.gamma, &p.delta, &q.gamma, &q.delta);
    Ok(AutPair2 {
        gamma: g1.compose(g2)?,
        delta: d2.compose(&g2.inverse())?.compose(d1)?.compose(d2)?,
    })
}

impl AutQuadruple {
    pub fn new(pair1: AutPair1, pair2: AutPair2) -> Self {
        AutQuadruple { pair1, pair2 }
    }

    pub fn from_maps(
        alpha: HopfAutomorphism,
        beta: HopfAutomorphism,
        gamma: HopfAutomorphism,
        delta: HopfAutomorphism,
    ) -> Result<Self> {
        Ok(AutQuadruple {
            pair1: AutPair1::new(alpha, beta)?,
            pair2: AutPair2::new(gamma, delta)?,
        })
    }

    pub fn alpha(&self) -> &HopfAutomorphism {
        &self.pair1.alpha
    }

    pub fn beta(&self) -> &HopfAutomorphism {
        &self.pair1.beta
    }

    pub fn gamma(&self) -> &HopfAutomorphism {
        &self.pair2.gamma
    }

    pub fn delta(&self) -> &HopfAutomorphism {
        &self.pair2.delta
    }

    pub fn h1(&self) -> &Arc<HopfAlgebra> {
        self.pair1.algebra()
    }

    pub fn h2(&self) -> &Arc<HopfAlgebra> {
        self.pair2.algebra()
    }

    pub fn is_unit(&self) -> bool {
        [self.alpha(), self.beta(), self.gamma(), self.delta()]
            .iter()
            .all(|a| a.is_identity())
    }
}

/// The unit (id, id, id, id).
pub fn unit_g(h1: Arc<HopfAlgebra>, h2: Arc<HopfAlgebra>) -> AutQuadruple {
    AutQuadruple {
        pair1: AutPair1::unit(h1),
        pair2: AutPair2::unit(h2),
    }
}

pub fn mul_g(x: &AutQuadruple, y: &AutQuadruple) -> Result<AutQuadruple> {
    Ok(AutQuadruple {
        pair1: mul1(&x.pair1, &y.pair1)?,
        pair2: mul2(&x.pair2, &y.pair2)?,
    })
}

pub fn inv_g(x: &AutQuadruple) -> AutQuadruple {
    AutQuadruple {
        pair1: x.pair1.inverse(),
        pair2: x.pair2.inverse(),
    }
}
