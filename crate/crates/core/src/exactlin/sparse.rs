use std::collections::BTreeMap;

use super::{FieldCtx, Matrix, Scalar};

/// Row echelon form built one sparse equation at a time.
///
/// Redundant equations are discarded as they arrive, so memory stays
/// bounded by the rank rather than the number of equations. Suited to
/// homogeneous systems with many short rows.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    field: FieldCtx,
    cols: usize,
    /// Pivot column → row with leading coefficient 1 at that column.
    rows: BTreeMap<usize, BTreeMap<usize, Scalar>>,
}

impl SparseEchelon {
    pub fn new(field: FieldCtx, cols: usize) -> Self {
        SparseEchelon {
            field,
            cols,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds the equation `Σ row[c]·x_c = 0`. Returns whether it raised the rank.
    pub fn insert(&mut self, mut row: BTreeMap<usize, Scalar>) -> bool {
        row.retain(|_, v| !v.is_zero());
        while let Some(lead) = row.keys().copied().find(|c| self.rows.contains_key(c)) {
            let factor = row[&lead].clone();
            let pivot = &self.rows[&lead];
            for (&c, v) in pivot {
                let delta = &factor * v;
                let entry = row.entry(c).or_insert_with(|| self.field.zero());
                *entry -= &delta;
                if entry.is_zero() {
                    row.remove(&c);
                }
            }
        }
        let Some((&lead, lead_val)) = row.iter().next() else {
            return false;
        };
        let inv = lead_val.inverse().expect("leading entry is nonzero");
        for v in row.values_mut() {
            *v *= &inv;
        }
        self.rows.insert(lead, row);
        true
    }

    /// A basis of the solution space, one column per free variable.
    pub fn nullspace(&self) -> Vec<Matrix> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.rows.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (&p, row) in self.rows.iter().rev() {
                    let mut acc = self.field.zero();
                    for (&c, a) in row.range(p + 1..) {
                        if !v[c].is_zero() {
                            acc += &(a * &v[c]);
                        }
                    }
                    v[p] = -acc;
                }
                Matrix::column(self.field, v)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldCtx = FieldCtx::Rational;

    #[test]
    fn agrees_with_dense_nullspace() {
        let a = Matrix::from_i64(Q, &[&[1, 2, 0, -1], &[2, 4, 1, 0], &[3, 6, 1, -1], &[0, 0, 0, 0]]);
        let mut e = SparseEchelon::new(Q, 4);
        for r in 0..a.rows() {
            e.insert((0..4).map(|c| (c, a.get(r, c).clone())).collect());
        }
        assert_eq!(e.rank(), a.rank());
        let basis = e.nullspace();
        assert_eq!(basis.len(), a.nullspace().len());
        for v in basis {
            assert!(a.mul(&v).unwrap().is_zero());
        }
    }
}
