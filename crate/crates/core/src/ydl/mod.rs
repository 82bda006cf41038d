//! Yetter-Drinfeld-Long bimodules over a pair of Hopf algebras (H1, H2).
//!
//! A module `M` of dimension `d` carries four structure maps, stored as
//! matrices under the flat tensor index convention:
//!
//! * left action `H1 ⊗ M → M`, `h ⊗ m ↦ h ▷ m` (`d × n1·d`)
//! * right action `M ⊗ H2 → M`, `m ⊗ h ↦ m ◁ h` (`d × d·n2`)
//! * left coaction `M → H1 ⊗ M`, `m ↦ m₍₋₁₎ ⊗ m₍₀₎` (`n1·d × d`)
//! * right coaction `M → M ⊗ H2`, `m ↦ m₍₀₎ ⊗ m₍₁₎` (`d·n2 × d`)
//!
//! together with the component (α, β, γ, δ) it lives in. Construction only
//! checks shapes; the axioms are verified by the functions in [`axioms`].

pub mod axioms;
mod morphism;
mod trivial;

use std::fmt;
use std::sync::Arc;

use crate::autgroup::AutQuadruple;
use crate::error::{Error, Result};
use crate::exactlin::{FieldCtx, LinMap, Matrix, TensorVec};
use crate::hopf::HopfAlgebra;

pub use axioms::{check_bimodule_bicomodule, check_equivalent_forms, check_ydl_axioms, full_report};
pub use morphism::{hom_space, is_ydl_morphism};
pub use trivial::{check_involution_quadruple, trivial_module, InvolutionQuadruple};

#[derive(Clone)]
pub struct YdlModule {
    component: AutQuadruple,
    dim: usize,
    left_action: LinMap,
    right_action: LinMap,
    left_coaction: LinMap,
    right_coaction: LinMap,
}

/// Which of the four structure maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Structure {
    LeftAction,
    RightAction,
    LeftCoaction,
    RightCoaction,
}

impl Structure {
    pub const ALL: [Structure; 4] = [
        Structure::LeftAction,
        Structure::RightAction,
        Structure::LeftCoaction,
        Structure::RightCoaction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Structure::LeftAction => "left action",
            Structure::RightAction => "right action",
            Structure::LeftCoaction => "left coaction",
            Structure::RightCoaction => "right coaction",
        }
    }
}

impl YdlModule {
    pub fn new(
        component: AutQuadruple,
        left_action: LinMap,
        right_action: LinMap,
        left_coaction: LinMap,
        right_coaction: LinMap,
    ) -> Result<Self> {
        let d = left_action.codomain_dim();
        let n1 = component.h1().dim();
        let n2 = component.h2().dim();
        let field = component.h1().field();
        if component.h2().field() != field {
            return Err(Error::FieldMismatch {
                left: field,
                right: component.h2().field(),
            });
        }
        let expected = [
            (Structure::LeftAction, &left_action, (d, n1 * d)),
            (Structure::RightAction, &right_action, (d, d * n2)),
            (Structure::LeftCoaction, &left_coaction, (n1 * d, d)),
            (Structure::RightCoaction, &right_coaction, (d * n2, d)),
        ];
        for (which, map, shape) in expected {
            if map.field() != field {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: map.field(),
                });
            }
            let got = (map.codomain_dim(), map.domain_dim());
            if got != shape {
                return Err(Error::Dimension(format!(
                    "{} is {}×{}, expected {}×{} for a {d}-dimensional module",
                    which.name(),
                    got.0,
                    got.1,
                    shape.0,
                    shape.1
                )));
            }
        }
        Ok(YdlModule {
            component,
            dim: d,
            left_action,
            right_action,
            left_coaction,
            right_coaction,
        })
    }

    pub fn component(&self) -> &AutQuadruple {
        &self.component
    }

    pub fn h1(&self) -> &Arc<HopfAlgebra> {
        self.component.h1()
    }

    pub fn h2(&self) -> &Arc<HopfAlgebra> {
        self.component.h2()
    }

    pub fn field(&self) -> FieldCtx {
        self.left_action.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_action(&self) -> &LinMap {
        &self.left_action
    }

    pub fn right_action(&self) -> &LinMap {
        &self.right_action
    }

    pub fn left_coaction(&self) -> &LinMap {
        &self.left_coaction
    }

    pub fn right_coaction(&self) -> &LinMap {
        &self.right_coaction
    }

    pub fn structure(&self, which: Structure) -> &LinMap {
        match which {
            Structure::LeftAction => &self.left_action,
            Structure::RightAction => &self.right_action,
            Structure::LeftCoaction => &self.left_coaction,
            Structure::RightCoaction => &self.right_coaction,
        }
    }

    /// Replaces one structure map (shape-checked).
    pub fn with_structure(&self, which: Structure, map: LinMap) -> Result<Self> {
        let mut maps = [
            self.left_action.clone(),
            self.right_action.clone(),
            self.left_coaction.clone(),
            self.right_coaction.clone(),
        ];
        maps[which as usize] = map;
        let [la, ra, lc, rc] = maps;
        YdlModule::new(self.component.clone(), la, ra, lc, rc)
    }

    /// The same structure maps declared in another component.
    pub fn with_component(&self, component: AutQuadruple) -> Result<Self> {
        YdlModule::new(
            component,
            self.left_action.clone(),
            self.right_action.clone(),
            self.left_coaction.clone(),
            self.right_coaction.clone(),
        )
    }

    /// Entrywise equality of the four structure maps (components ignored).
    pub fn same_structure(&self, other: &YdlModule) -> bool {
        self.left_action == other.left_action
            && self.right_action == other.right_action
            && self.left_coaction == other.left_coaction
            && self.right_coaction == other.right_coaction
    }

    // Pipeline steps on tensor vectors. The module factor sits at `at`
    // (for actions, the algebra factor is adjacent on the acting side).

    /// Factors `at` (H1) and `at + 1` (M) become `h ▷ m`.
    pub fn act_left_at(&self, v: &TensorVec, at: usize) -> TensorVec {
        v.apply(at, 2, &self.left_action, &[self.dim])
    }

    /// Factors `at` (M) and `at + 1` (H2) become `m ◁ h`.
    pub fn act_right_at(&self, v: &TensorVec, at: usize) -> TensorVec {
        v.apply(at, 2, &self.right_action, &[self.dim])
    }

    /// Factor `at` (M) becomes `m₍₋₁₎ ⊗ m₍₀₎`.
    pub fn coact_left_at(&self, v: &TensorVec, at: usize) -> TensorVec {
        v.apply(at, 1, &self.left_coaction, &[self.h1().dim(), self.dim])
    }

    /// Factor `at` (M) becomes `m₍₀₎ ⊗ m₍₁₎`.
    pub fn coact_right_at(&self, v: &TensorVec, at: usize) -> TensorVec {
        v.apply(at, 1, &self.right_coaction, &[self.dim, self.h2().dim()])
    }

    /// The operator `m ↦ e_h ▷ m` of a basis element of H1.
    pub fn left_action_of(&self, h: usize) -> Matrix {
        let d = self.dim;
        let l = self.left_action.matrix();
        Matrix::from_fn(self.field(), d, d, |r, c| l.get(r, h * d + c).clone())
    }

    /// The operator `m ↦ m ◁ e_h` of a basis element of H2.
    pub fn right_action_of(&self, h: usize) -> Matrix {
        let d = self.dim;
        let n2 = self.h2().dim();
        let r = self.right_action.matrix();
        Matrix::from_fn(self.field(), d, d, |i, c| r.get(i, c * n2 + h).clone())
    }

    /// The `e_a`-coefficient operator of the left coaction.
    pub fn left_coaction_part(&self, a: usize) -> Matrix {
        let d = self.dim;
        let l = self.left_coaction.matrix();
        Matrix::from_fn(self.field(), d, d, |r, c| l.get(a * d + r, c).clone())
    }

    /// The `e_b`-coefficient operator of the right coaction.
    pub fn right_coaction_part(&self, b: usize) -> Matrix {
        let d = self.dim;
        let n2 = self.h2().dim();
        let rc = self.right_coaction.matrix();
        Matrix::from_fn(self.field(), d, d, |r, c| rc.get(r * n2 + b, c).clone())
    }

    /// The module structure induced on the span of the columns of `basis`
    /// (a `d × k` matrix of full column rank), in coordinates relative to
    /// those columns. Fails unless the span is stable under all four maps.
    pub fn restrict(&self, basis: &Matrix) -> Result<YdlModule> {
        let f = self.field();
        let (d, k) = basis.shape();
        if d != self.dim {
            return Err(Error::Dimension(format!(
                "basis has {d} rows for a {}-dimensional module",
                self.dim
            )));
        }
        if basis.rank() != k {
            return Err(Error::Invalid("basis columns are linearly dependent".into()));
        }
        let n1 = self.h1().dim();
        let n2 = self.h2().dim();
        let b = LinMap::new(basis.clone());
        let id1 = LinMap::identity(f, n1);
        let id2 = LinMap::identity(f, n2);
        let solve = |lhs: &LinMap, rhs: &LinMap, which: Structure| -> Result<LinMap> {
            lhs.matrix()
                .solve(rhs.matrix())?
                .map(LinMap::new)
                .ok_or_else(|| Error::Invalid(format!("subspace is not stable under the {}", which.name())))
        };
        let la = solve(&b, &self.left_action.compose(&id1.tensor(&b)?)?, Structure::LeftAction)?;
        let ra = solve(
            &b,
            &self.right_action.compose(&b.tensor(&id2)?)?,
            Structure::RightAction,
        )?;
        let lc = solve(
            &id1.tensor(&b)?,
            &self.left_coaction.compose(&b)?,
            Structure::LeftCoaction,
        )?;
        let rc = solve(
            &b.tensor(&id2)?,
            &self.right_coaction.compose(&b)?,
            Structure::RightCoaction,
        )?;
        YdlModule::new(self.component.clone(), la, ra, lc, rc)
    }

    /// The isomorphic module obtained by the change of coordinates `t`,
    /// so that `t` itself is a module isomorphism `self → result`.
    pub fn transport(&self, t: &Matrix) -> Result<YdlModule> {
        self.restrict(&t.inverse()?)
    }
}

impl PartialEq for YdlModule {
    fn eq(&self, other: &Self) -> bool {
        self.component == other.component && self.same_structure(other)
    }
}

impl fmt::Debug for YdlModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("YdlModule")
            .field("h1", &self.h1().name())
            .field("h2", &self.h2().name())
            .field("dim", &self.dim)
            .finish_non_exhaustive()
    }
}
