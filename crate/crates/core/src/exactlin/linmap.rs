use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

use super::matrix::Matrix;
use super::scalar::{FieldCtx, Scalar};

type SparseColumns = Arc<[Vec<(usize, Scalar)>]>;

/// A linear map `k^domain_dim → k^codomain_dim`, stored as its
/// `codomain_dim × domain_dim` matrix.
///
/// The nonzero pattern of each column is computed on first use and cached;
/// it drives the sparse evaluation in [`super::TensorVec`].
#[derive(Clone)]
pub struct LinMap {
    matrix: Matrix,
    columns: OnceLock<SparseColumns>,
}

impl LinMap {
    pub fn new(matrix: Matrix) -> Self {
        LinMap {
            matrix,
            columns: OnceLock::new(),
        }
    }

    pub fn identity(field: FieldCtx, n: usize) -> Self {
        Self::new(Matrix::identity(field, n))
    }

    pub fn zero(field: FieldCtx, codomain: usize, domain: usize) -> Self {
        Self::new(Matrix::zeros(field, codomain, domain))
    }

    /// The tensor-factor swap `A ⊗ B → B ⊗ A`, `e_i ⊗ e_j ↦ e_j ⊗ e_i`.
    pub fn flip(field: FieldCtx, dim_a: usize, dim_b: usize) -> Self {
        let n = dim_a * dim_b;
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..dim_a {
            for j in 0..dim_b {
                m.set(j * dim_a + i, i * dim_b + j, field.one());
            }
        }
        Self::new(m)
    }

    pub fn field(&self) -> FieldCtx {
        self.matrix.field()
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    /// Image of the `j`-th basis vector as sparse `(row, value)` pairs.
    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        let cols = self.columns.get_or_init(|| {
            let m = &self.matrix;
            let mut cols = vec![Vec::new(); m.cols()];
            for (r, c, v) in m.nonzeros() {
                cols[c].push((r, v.clone()));
            }
            cols.into()
        });
        &cols[j]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinMap) -> Result<LinMap> {
        if self.domain_dim() != inner.codomain_dim() {
            return Err(Error::Dimension(format!(
                "cannot compose {}→{} after {}→{}",
                self.domain_dim(),
                self.codomain_dim(),
                inner.domain_dim(),
                inner.codomain_dim()
            )));
        }
        Ok(LinMap::new(self.matrix.mul(&inner.matrix)?))
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &LinMap) -> Result<LinMap> {
        Ok(LinMap::new(self.matrix.kron(&other.matrix)?))
    }

    pub fn inverse(&self) -> Result<LinMap> {
        Ok(LinMap::new(self.matrix.inverse()?))
    }

    pub fn transpose(&self) -> LinMap {
        LinMap::new(self.matrix.transpose())
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap::new(self.matrix.scale(s))
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        Ok(LinMap::new(self.matrix.add(&other.matrix)?))
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Applies the map to a dense vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.domain_dim());
        let mut out = vec![self.field().zero(); self.codomain_dim()];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in self.column(j) {
                out[*r] += &(a * x);
            }
        }
        out
    }
}

impl PartialEq for LinMap {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for LinMap {}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinMap {}→{} {:?}",
            self.domain_dim(),
            self.codomain_dim(),
            self.matrix
        )
    }
}

impl From<Matrix> for LinMap {
    fn from(m: Matrix) -> Self {
        LinMap::new(m)
    }
}
