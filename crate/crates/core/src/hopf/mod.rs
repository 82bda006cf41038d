//! Finite-dimensional Hopf algebras as structure constants.
//!
//! Every structure map is a [`LinMap`] on the tensor powers of the algebra
//! under the flat index convention `e_i ⊗ e_j ↦ i·n + j`:
//!
//! | map       | shape    |
//! |-----------|----------|
//! | `mult`    | `n × n²` |
//! | `unit`    | `n × 1`  |
//! | `comult`  | `n² × n` |
//! | `counit`  | `1 × n`  |
//! | `antipode`| `n × n`  |
//!
//! Axioms are checked by evaluating both sides of each identity on every
//! basis tensor with [`TensorVec`] pipelines.

mod automorphism;
mod catalog;

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{compare_pipelines, materialize, FieldCtx, LinMap, Matrix, Scalar, TensorVec};
use crate::report::{CheckResult, ValidationReport};

pub use automorphism::{is_automorphism, same_algebra, HopfAutomorphism};
pub use catalog::{dual_hopf, group_algebra, h4_scaling, sweedler_h4};

#[derive(Clone)]
pub struct HopfAlgebra {
    name: String,
    labels: Vec<String>,
    mult: LinMap,
    unit: LinMap,
    comult: LinMap,
    counit: LinMap,
    antipode: LinMap,
    antipode_inv: LinMap,
}

/// The raw structure maps of a Hopf algebra, before validation.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub name: String,
    pub labels: Vec<String>,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
    pub antipode: Matrix,
}

impl HopfAlgebra {
    /// Checks shapes and fields and inverts the antipode. The axioms are
    /// not checked here; see [`validate_hopf`].
    pub fn new(data: HopfData) -> Result<Self> {
        let n = data.labels.len();
        let field = data.mult.field();
        let shapes = [
            ("mult", &data.mult, (n, n * n)),
            ("unit", &data.unit, (n, 1)),
            ("comult", &data.comult, (n * n, n)),
            ("counit", &data.counit, (1, n)),
            ("antipode", &data.antipode, (n, n)),
        ];
        for (what, m, shape) in shapes {
            if m.field() != field {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: m.field(),
                });
            }
            if m.shape() != shape {
                return Err(Error::Dimension(format!(
                    "{what} of `{}` has shape {:?}, expected {:?}",
                    data.name,
                    m.shape(),
                    shape
                )));
            }
        }
        if n == 0 {
            return Err(Error::Dimension("zero-dimensional algebra".into()));
        }
        let antipode_inv = data.antipode.inverse()?;
        Ok(HopfAlgebra {
            name: data.name,
            labels: data.labels,
            mult: data.mult.into(),
            unit: data.unit.into(),
            comult: data.comult.into(),
            counit: data.counit.into(),
            antipode: data.antipode.into(),
            antipode_inv: antipode_inv.into(),
        })
    }

    pub fn to_data(&self) -> HopfData {
        HopfData {
            name: self.name.clone(),
            labels: self.labels.clone(),
            mult: self.mult.matrix().clone(),
            unit: self.unit.matrix().clone(),
            comult: self.comult.matrix().clone(),
            counit: self.counit.matrix().clone(),
            antipode: self.antipode.matrix().clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldCtx {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &LinMap {
        &self.antipode_inv
    }

    // Pipeline steps. `at` is the position of the (first) affected factor.

    /// Multiplies factors `at` and `at + 1`.
    pub fn mul_at(&self, v: &TensorVec, at: usize) -> TensorVec {
        v.apply(at, 2, &self.mult, &[self.dim()])
    }

    /// Splits factor `at` by Δ.
    pub fn comul_at(&self, v: &TensorVec, at: usize) -> TensorVec {
        v.apply(at, 1, &self.comult, &[self.dim(), self.dim()])
    }

    /// Inserts the unit as a new factor at `at`.
    pub fn unit_at(&self, v: &TensorVec, at: usize) -> TensorVec {
        v.apply(at, 0, &self.unit, &[self.dim()])
    }

    /// Applies ε to factor `at`, removing it.
    pub fn counit_at(&self, v: &TensorVec, at: usize) -> TensorVec {
        v.apply(at, 1, &self.counit, &[])
    }

    pub fn antipode_at(&self, v: &TensorVec, at: usize) -> TensorVec {
        v.map(at, &self.antipode)
    }

    pub fn antipode_inv_at(&self, v: &TensorVec, at: usize) -> TensorVec {
        v.map(at, &self.antipode_inv)
    }

    /// `a · b` for dense coordinate vectors.
    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let n = self.dim();
        let v = TensorVec::from_dense(f, &[n], a);
        let w = TensorVec::from_dense(f, &[n], b);
        let mut terms = vec![f.zero(); n * n];
        for (i, x) in v.terms() {
            for (j, y) in w.terms() {
                terms[i * n + j] = x * y;
            }
        }
        self.mult.apply(&terms)
    }

    /// Left multiplication by a fixed element, as an `n × n` matrix.
    pub fn left_mult_by(&self, a: &[Scalar]) -> LinMap {
        let f = self.field();
        let n = self.dim();
        let a = TensorVec::from_dense(f, &[n], a);
        materialize(f, &[n], n, |v| {
            let mut acc = TensorVec::zero(f, &[n]);
            for (i, x) in a.terms() {
                let e = TensorVec::basis_flat(f, &[n], i).scale(x);
                let pair = tensor_pair(&e, &v);
                acc = acc.add(&self.mul_at(&pair, 0));
            }
            acc
        })
    }

    /// Right multiplication by a fixed element.
    pub fn right_mult_by(&self, a: &[Scalar]) -> LinMap {
        let f = self.field();
        let n = self.dim();
        let a = TensorVec::from_dense(f, &[n], a);
        materialize(f, &[n], n, |v| {
            let mut acc = TensorVec::zero(f, &[n]);
            for (i, x) in a.terms() {
                let e = TensorVec::basis_flat(f, &[n], i).scale(x);
                let pair = tensor_pair(&v, &e);
                acc = acc.add(&self.mul_at(&pair, 0));
            }
            acc
        })
    }

    /// The unit element as a dense vector.
    pub fn one(&self) -> Vec<Scalar> {
        self.unit.matrix().col(0)
    }
}

/// `a ⊗ b` for two single-factor vectors.
pub(crate) fn tensor_pair(a: &TensorVec, b: &TensorVec) -> TensorVec {
    let f = a.field();
    let (n, m) = (a.total_dim(), b.total_dim());
    let mut out = vec![f.zero(); n * m];
    for (i, x) in a.terms() {
        for (j, y) in b.terms() {
            out[i * m + j] = x * y;
        }
    }
    TensorVec::from_dense(f, &[n, m], &out)
}

impl PartialEq for HopfAlgebra {
    /// Structural equality of the structure maps; names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.field() == other.field()
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl Eq for HopfAlgebra {}

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfAlgebra({}, dim {}, {})", self.name, self.dim(), self.field())
    }
}

/// Runs every Hopf-algebra axiom; failures carry the first offending basis
/// tensor.
pub fn validate_hopf(h: &HopfAlgebra) -> ValidationReport {
    let f = h.field();
    let n = h.dim();
    let mut report = ValidationReport::new(format!("Hopf algebra {}", h.name()));
    let id = |v: TensorVec| v;

    report.push(CheckResult::from_mismatch(
        "associativity",
        compare_pipelines(
            f,
            &[n, n, n],
            |v| h.mul_at(&h.mul_at(&v, 0), 0),
            |v| h.mul_at(&h.mul_at(&v, 1), 0),
        ),
    ));
    report.push(CheckResult::from_mismatch(
        "left unit",
        compare_pipelines(f, &[n], |v| h.mul_at(&h.unit_at(&v, 0), 0), id),
    ));
    report.push(CheckResult::from_mismatch(
        "right unit",
        compare_pipelines(f, &[n], |v| h.mul_at(&h.unit_at(&v, 1), 0), id),
    ));
    report.push(CheckResult::from_mismatch(
        "coassociativity",
        compare_pipelines(
            f,
            &[n],
            |v| h.comul_at(&h.comul_at(&v, 0), 0),
            |v| h.comul_at(&h.comul_at(&v, 0), 1),
        ),
    ));
    report.push(CheckResult::from_mismatch(
        "left counit",
        compare_pipelines(f, &[n], |v| h.counit_at(&h.comul_at(&v, 0), 0), id),
    ));
    report.push(CheckResult::from_mismatch(
        "right counit",
        compare_pipelines(f, &[n], |v| h.counit_at(&h.comul_at(&v, 0), 1), id),
    ));
    report.push(CheckResult::from_mismatch(
        "comultiplication is multiplicative",
        compare_pipelines(
            f,
            &[n, n],
            |v| h.comul_at(&h.mul_at(&v, 0), 0),
            |v| {
                // a1 a2 b1 b2 -> a1 b1 a2 b2 -> (a1 b1)(a2 b2)
                let w = h.comul_at(&h.comul_at(&v, 1), 0).permute(&[0, 2, 1, 3]);
                h.mul_at(&h.mul_at(&w, 2), 0)
            },
        ),
    ));
    report.push(CheckResult::matrices_equal(
        "comultiplication is unital",
        &h.comult.compose(&h.unit).expect("shapes checked").into_matrix(),
        &h.unit.tensor(&h.unit).expect("same field").into_matrix(),
    ));
    report.push(CheckResult::from_mismatch(
        "counit is multiplicative",
        compare_pipelines(
            f,
            &[n, n],
            |v| h.counit_at(&h.mul_at(&v, 0), 0),
            |v| h.counit_at(&h.counit_at(&v, 1), 0),
        ),
    ));
    report.push(CheckResult::matrices_equal(
        "counit is unital",
        &h.counit.compose(&h.unit).expect("shapes checked").into_matrix(),
        &Matrix::identity(f, 1),
    ));
    report.push(CheckResult::from_mismatch(
        "left antipode",
        compare_pipelines(
            f,
            &[n],
            |v| h.mul_at(&h.antipode_at(&h.comul_at(&v, 0), 0), 0),
            |v| h.unit_at(&h.counit_at(&v, 0), 0),
        ),
    ));
    report.push(CheckResult::from_mismatch(
        "right antipode",
        compare_pipelines(
            f,
            &[n],
            |v| h.mul_at(&h.antipode_at(&h.comul_at(&v, 0), 1), 0),
            |v| h.unit_at(&h.counit_at(&v, 0), 0),
        ),
    ));
    report.push(CheckResult::from_bool(
        "antipode inverse",
        h.antipode.compose(&h.antipode_inv).is_ok_and(|m| m.is_identity())
            && h.antipode_inv.compose(&h.antipode).is_ok_and(|m| m.is_identity()),
        "cached inverse does not invert the antipode",
    ));
    report
}
