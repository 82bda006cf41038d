use std::fmt;

use crate::error::{Error, Result};

use super::scalar::{FieldCtx, Scalar};

/// Dense row-major matrix over an exact field.
///
/// Tensor products use the fixed convention that basis vector `(i, j)` of
/// `A ⊗ B` has flat index `i * dim(B) + j`; [`Matrix::kron`] follows it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldCtx, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldCtx, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: FieldCtx, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Small integer matrices, mostly for tests and catalog data.
    pub fn from_i64(field: FieldCtx, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions add up.
    pub fn from_triples(
        field: FieldCtx,
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut m = Self::zeros(field, rows, cols);
        for (r, c, v) in triples {
            if r >= rows || c >= cols {
                return Err(Error::Dimension(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            if !field.owns(&v) {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: v.field(),
                });
            }
            m.data[r * cols + c] += &v;
        }
        Ok(m)
    }

    /// Column vector.
    pub fn column(field: FieldCtx, entries: Vec<Scalar>) -> Self {
        let rows = entries.len();
        Matrix {
            field,
            rows,
            cols: 1,
            data: entries,
        }
    }

    pub fn field(&self) -> FieldCtx {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(self.field.owns(&v), "scalar from a different field");
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        Ok(())
    }

    /// Exact product `self · rhs`. Zero entries of `self` are skipped, so
    /// sparse structure maps compose cheaply.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * rhs.cols + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.shape() != rhs.shape() {
            return Err(Error::Dimension(format!(
                "shape {:?} vs {:?}",
                self.shape(),
                rhs.shape()
            )));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Kronecker product; row `(i, k)` maps to `i * rhs.rows + k`, column
    /// `(j, l)` to `j * rhs.cols + l`.
    pub fn kron(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        let (r2, c2) = rhs.shape();
        let mut out = Matrix::zeros(self.field, self.rows * r2, self.cols * c2);
        let cols = self.cols * c2;
        for (i, j, a) in self.nonzeros() {
            for (k, l, b) in rhs.nonzeros() {
                out.data[(i * r2 + k) * cols + j * c2 + l] = a * b;
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Integer power of a square matrix; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("power of a non-square matrix".into()));
        }
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// First position where the two matrices differ, in row-major order.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inverse().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.data[row * m.cols + c] = v;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let delta = &factor * m.get(row, c);
                    m.data[r * m.cols + c] -= &delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact inverse by Gauss-Jordan elimination on `[A | I]`.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.data[r * 2 * n + c] = self.get(r, c).clone();
            }
            aug.data[r * 2 * n + n + r] = self.field.one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(self.field, n, n, |r, c| red.get(r, n + c).clone()))
    }

    /// Basis of the right kernel, one column vector per basis element.
    pub fn nullspace(&self) -> Vec<Matrix> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -red.get(row, f);
                }
                Matrix::column(self.field, v)
            })
            .collect()
    }

    /// Solves `self · X = rhs` exactly when a solution exists.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        self.same_field(rhs)?;
        if self.rows != rhs.rows {
            return Err(Error::Dimension("solve: row counts differ".into()));
        }
        let (n, k) = (self.cols, rhs.cols);
        let aug = Matrix::from_fn(self.field, self.rows, n + k, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else {
                rhs.get(r, c - n).clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, n, k);
        for (row, &p) in pivots.iter().enumerate() {
            for c in 0..k {
                x.data[p * k + c] = red.get(row, n + c).clone();
            }
        }
        Ok(Some(x))
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), cols.len(), |r, c| {
            self.get(rows[r], cols[c]).clone()
        })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldCtx = FieldCtx::Rational;

    fn q(n: i64, d: i64) -> Scalar {
        Q.from_ratio(n, d).unwrap()
    }

    #[test]
    fn product_with_fractions() {
        let a = Matrix::from_fn(Q, 2, 2, |r, c| [[q(1, 2), q(1, 3)], [q(0, 1), q(1, 1)]][r][c].clone());
        let b = Matrix::from_i64(Q, &[&[2, 0], &[3, 0]]);
        // hand expansion: row 0 = (1/2*2 + 1/3*3, 0), row 1 = (3, 0)
        assert_eq!(a.mul(&b).unwrap(), Matrix::from_i64(Q, &[&[2, 0], &[3, 0]]));
        let m = Matrix::from_i64(Q, &[&[4, -1], &[7, 9]]);
        assert_eq!(Matrix::identity(Q, 2).mul(&m).unwrap(), m);
    }

    #[test]
    fn product_over_f5() {
        let f5 = FieldCtx::prime(5).unwrap();
        let a = Matrix::from_i64(f5, &[&[2]]);
        let b = Matrix::from_i64(f5, &[&[3]]);
        assert_eq!(a.mul(&b).unwrap(), Matrix::from_i64(f5, &[&[1]]));
    }

    #[test]
    fn product_errors() {
        let a = Matrix::zeros(Q, 2, 3);
        assert!(matches!(a.mul(&a), Err(Error::Dimension(_))));
        let b = Matrix::zeros(FieldCtx::Prime(7), 3, 1);
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn inverse_cases() {
        assert!(Matrix::identity(Q, 3).inverse().unwrap().is_identity());
        let swap = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.inverse().unwrap(), swap);
        let singular = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        assert!(matches!(singular.inverse(), Err(Error::Singular)));
        assert!(matches!(Matrix::zeros(Q, 2, 3).inverse(), Err(Error::Dimension(_))));
    }

    #[test]
    fn kron_expansion() {
        let two = Matrix::from_i64(Q, &[&[2]]);
        let swap = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        assert_eq!(two.kron(&swap).unwrap(), Matrix::from_i64(Q, &[&[0, 2], &[2, 0]]));
        assert!(Matrix::identity(Q, 2)
            .kron(&Matrix::identity(Q, 3))
            .unwrap()
            .is_identity());
        // (i⊗j) ↦ i·dim_b + j
        let a = Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(Q, &[&[5, 6], &[7, 8]]);
        let k = a.kron(&b).unwrap();
        assert_eq!(k.get(2, 1), &Q.from_i64(3 * 6)); // row 1⊗0, column 0⊗1
    }

    #[test]
    fn nullspace_and_solve() {
        let a = Matrix::from_i64(Q, &[&[1, 1, 0], &[0, 0, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul(&ns[0]).unwrap().is_zero());
        let rhs = Matrix::from_i64(Q, &[&[3], &[4]]);
        let x = a.solve(&rhs).unwrap().unwrap();
        assert_eq!(a.mul(&x).unwrap(), rhs);
        let inconsistent = Matrix::from_i64(Q, &[&[1], &[1]]);
        assert!(Matrix::from_i64(Q, &[&[1], &[2]])
            .mul(&Matrix::from_i64(Q, &[&[1]]))
            .unwrap()
            .solve(&inconsistent)
            .unwrap()
            .is_none());
    }
}
