//! Graded bimodules over group algebras.

mod graded;
mod group;
mod random;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{LinMap, Matrix};
use crate::hopf::{HopfAlgebra, HopfAutomorphism};

pub use graded::{
    check_graded, closed_form_index_report, graded_braiding, graded_conjugate, graded_dual, graded_tensor,
    grading_shift, oracle_report, Blocks, Degree, GradedBimodule, GradedBraiding, GradedSetting, GroupQuadruple,
};
pub use group::{compose_perm, invert_perm, GroupTable};
pub use random::{random_graded, shift_orbit, sign_characters, RandomShape};

/// The permutation matrix `e_g ↦ e_{perm[g]}`.
pub fn permutation_matrix(field: crate::exactlin::FieldCtx, perm: &[usize]) -> Matrix {
    let n = perm.len();
    Matrix::from_fn(
        field,
        n,
        n,
        |r, c| if perm[c] == r { field.one() } else { field.zero() },
    )
}

/// The Hopf automorphism of `k[G]` induced by a group automorphism.
pub fn lift_automorphism(g: &GroupTable, h: &Arc<HopfAlgebra>, perm: &[usize]) -> Result<HopfAutomorphism> {
    if h.dim() != g.order() {
        return Err(Error::Dimension(format!(
            "group of order {} and algebra of dimension {}",
            g.order(),
            h.dim()
        )));
    }
    if !g.is_automorphism(perm) {
        return Err(Error::NotAutomorphism(format!("{perm:?} is not a group automorphism")));
    }
    let f = h.field();
    Ok(HopfAutomorphism::from_parts(
        h.clone(),
        LinMap::new(permutation_matrix(f, perm)),
        LinMap::new(permutation_matrix(f, &invert_perm(perm))),
    ))
}
