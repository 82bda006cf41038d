use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{compare_pipelines, LinMap};
use crate::report::{CheckResult, ValidationReport};

use super::HopfAlgebra;

/// Checks that `a` is a bijective Hopf-algebra map of `h`.
pub fn is_automorphism(h: &HopfAlgebra, a: &LinMap) -> Result<ValidationReport> {
    let n = h.dim();
    if a.domain_dim() != n || a.codomain_dim() != n {
        return Err(Error::Dimension(format!(
            "automorphism candidate is {}→{}, algebra has dimension {n}",
            a.domain_dim(),
            a.codomain_dim()
        )));
    }
    if a.field() != h.field() {
        return Err(Error::FieldMismatch {
            left: h.field(),
            right: a.field(),
        });
    }
    let f = h.field();
    let mut report = ValidationReport::new(format!("automorphism of {}", h.name()));
    report.push(CheckResult::from_bool(
        "invertible",
        a.matrix().rank() == n,
        "map is singular",
    ));
    report.push(CheckResult::from_mismatch(
        "multiplicative",
        compare_pipelines(
            f,
            &[n, n],
            |v| h.mul_at(&v, 0).map(0, a),
            |v| h.mul_at(&v.map(0, a).map(1, a), 0),
        ),
    ));
    report.push(CheckResult::matrices_equal(
        "unital",
        &a.compose(h.unit())?.into_matrix(),
        h.unit().matrix(),
    ));
    report.push(CheckResult::from_mismatch(
        "comultiplicative",
        compare_pipelines(
            f,
            &[n],
            |v| h.comul_at(&v.map(0, a), 0),
            |v| h.comul_at(&v, 0).map(0, a).map(1, a),
        ),
    ));
    report.push(CheckResult::matrices_equal(
        "counital",
        &h.counit().compose(a)?.into_matrix(),
        h.counit().matrix(),
    ));
    report.push(CheckResult::matrices_equal(
        "commutes with antipode",
        &a.compose(h.antipode())?.into_matrix(),
        &h.antipode().compose(a)?.into_matrix(),
    ));
    Ok(report)
}

/// A Hopf automorphism together with the algebra it acts on.
#[derive(Clone)]
pub struct HopfAutomorphism {
    algebra: Arc<HopfAlgebra>,
    map: LinMap,
    inverse: LinMap,
}

impl HopfAutomorphism {
    /// Validates `map` with [`is_automorphism`].
    pub fn new(algebra: Arc<HopfAlgebra>, map: LinMap) -> Result<Self> {
        let report = is_automorphism(&algebra, &map)?;
        if !report.passed() {
            return Err(Error::NotAutomorphism(format!(
                "fails {}",
                report.failed_names().join(", ")
            )));
        }
        let inverse = map.inverse()?;
        Ok(HopfAutomorphism { algebra, map, inverse })
    }

    /// For maps known to be automorphisms by construction.
    pub(crate) fn from_parts(algebra: Arc<HopfAlgebra>, map: LinMap, inverse: LinMap) -> Self {
        HopfAutomorphism { algebra, map, inverse }
    }

    pub fn identity(algebra: Arc<HopfAlgebra>) -> Self {
        let id = LinMap::identity(algebra.field(), algebra.dim());
        HopfAutomorphism {
            algebra,
            map: id.clone(),
            inverse: id,
        }
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        &self.algebra
    }

    pub fn map(&self) -> &LinMap {
        &self.map
    }

    pub fn inverse_map(&self) -> &LinMap {
        &self.inverse
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(format!(
                "automorphisms of {} and {}",
                self.algebra.name(),
                other.algebra.name()
            )))
        }
    }

    /// `self ∘ other`. Composites of automorphisms are automorphisms, so the
    /// result is not revalidated.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(HopfAutomorphism {
            algebra: self.algebra.clone(),
            map: self.map.compose(&other.map)?,
            inverse: other.inverse.compose(&self.inverse)?,
        })
    }

    pub fn inverse(&self) -> Self {
        HopfAutomorphism {
            algebra: self.algebra.clone(),
            map: self.inverse.clone(),
            inverse: self.map.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_identity()
    }
}

/// Pointer identity first, structural equality otherwise.
pub fn same_algebra(a: &Arc<HopfAlgebra>, b: &Arc<HopfAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for HopfAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && same_algebra(&self.algebra, &other.algebra)
    }
}

impl Eq for HopfAutomorphism {}

impl fmt::Debug for HopfAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Aut({}) {:?}", self.algebra.name(), self.map.matrix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldCtx;
    use crate::hopf::{h4_scaling, sweedler_h4};

    #[test]
    fn h4_scalings_compose_multiplicatively() {
        let q = FieldCtx::Rational;
        let h = Arc::new(sweedler_h4(q).unwrap());
        let a = |l: i64| HopfAutomorphism::new(h.clone(), h4_scaling(q, &q.from_i64(l))).unwrap();
        assert_eq!(a(2).compose(&a(3)).unwrap(), a(6));
        assert!(a(5).compose(&a(5).inverse()).unwrap().is_identity());
        let zero = h4_scaling(q, &q.zero());
        assert!(!is_automorphism(&h, &zero).unwrap().passed());
        assert!(HopfAutomorphism::new(h, zero).is_err());
    }

    #[test]
    fn cross_algebra_composition_fails() {
        let q = FieldCtx::Rational;
        let h4 = Arc::new(sweedler_h4(q).unwrap());
        let c4 = Arc::new(crate::hopf::group_algebra(&crate::grpalg::GroupTable::cyclic(4), q));
        let a = HopfAutomorphism::identity(h4);
        let b = HopfAutomorphism::identity(c4);
        assert!(matches!(a.compose(&b), Err(Error::AlgebraMismatch(_))));
    }
}
