use std::collections::BTreeMap;

use super::linmap::LinMap;
use super::matrix::Matrix;
use super::scalar::{FieldCtx, Scalar};

/// A sparse vector in a tensor product `V_0 ⊗ V_1 ⊗ … ⊗ V_{r-1}`.
///
/// Flat indices follow the repo-wide convention: the last factor varies
/// fastest. Linear maps are applied to a contiguous run of factors and
/// factors can be permuted, which is enough to evaluate any composite of
/// structure maps written in Sweedler notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVec {
    field: FieldCtx,
    dims: Vec<usize>,
    terms: BTreeMap<usize, Scalar>,
}

fn product(dims: &[usize]) -> usize {
    dims.iter().product()
}

impl TensorVec {
    pub fn zero(field: FieldCtx, dims: &[usize]) -> Self {
        TensorVec {
            field,
            dims: dims.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(field: FieldCtx, dims: &[usize], index: &[usize]) -> Self {
        assert_eq!(dims.len(), index.len());
        let flat = index.iter().zip(dims).fold(0, |acc, (&i, &d)| {
            assert!(i < d, "basis index out of range");
            acc * d + i
        });
        Self::basis_flat(field, dims, flat)
    }

    pub fn basis_flat(field: FieldCtx, dims: &[usize], flat: usize) -> Self {
        assert!(flat < product(dims));
        let mut terms = BTreeMap::new();
        terms.insert(flat, field.one());
        TensorVec {
            field,
            dims: dims.to_vec(),
            terms,
        }
    }

    pub fn from_dense(field: FieldCtx, dims: &[usize], values: &[Scalar]) -> Self {
        assert_eq!(values.len(), product(dims));
        let terms = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k, v.clone()))
            .collect();
        TensorVec {
            field,
            dims: dims.to_vec(),
            terms,
        }
    }

    pub fn field(&self) -> FieldCtx {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        product(&self.dims)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coefficient(&self, flat: usize) -> Scalar {
        self.terms.get(&flat).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Splits a flat index into per-factor indices.
    pub fn multi_index(&self, flat: usize) -> Vec<usize> {
        unflatten(&self.dims, flat)
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.total_dim()];
        for (k, v) in &self.terms {
            out[*k] = v.clone();
        }
        out
    }

    /// Applies `map` to factors `at .. at + arity`, replacing them with
    /// factors of dimensions `out`. `arity = 0` inserts new factors
    /// (the map's domain is then `k`); an empty `out` contracts the factors
    /// to a scalar.
    pub fn apply(&self, at: usize, arity: usize, map: &LinMap, out: &[usize]) -> TensorVec {
        assert!(at + arity <= self.dims.len(), "factor range out of bounds");
        let mid = product(&self.dims[at..at + arity]);
        let suf = product(&self.dims[at + arity..]);
        let out_mid = product(out);
        assert_eq!(map.domain_dim(), mid, "map domain does not match factors");
        assert_eq!(map.codomain_dim(), out_mid, "map codomain does not match output");
        let mut dims = Vec::with_capacity(self.dims.len() - arity + out.len());
        dims.extend_from_slice(&self.dims[..at]);
        dims.extend_from_slice(out);
        dims.extend_from_slice(&self.dims[at + arity..]);
        let mut terms: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (&flat, v) in &self.terms {
            let p = flat / (mid * suf);
            let m = (flat / suf) % mid;
            let s = flat % suf;
            for (r, a) in map.column(m) {
                let key = (p * out_mid + r) * suf + s;
                let term = a * v;
                match terms.get_mut(&key) {
                    Some(acc) => *acc += &term,
                    None => {
                        terms.insert(key, term);
                    }
                }
            }
        }
        terms.retain(|_, v| !v.is_zero());
        TensorVec {
            field: self.field,
            dims,
            terms,
        }
    }

    /// Applies an endomorphism to a single factor.
    pub fn map(&self, at: usize, map: &LinMap) -> TensorVec {
        self.apply(at, 1, map, &[map.codomain_dim()])
    }

    /// Reorders factors: factor `j` of the result is factor `perm[j]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> TensorVec {
        assert_eq!(perm.len(), self.dims.len());
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let terms = self
            .terms
            .iter()
            .map(|(&flat, v)| {
                let old = unflatten(&self.dims, flat);
                let new = perm.iter().zip(&dims).fold(0, |acc, (&p, &d)| acc * d + old[p]);
                (new, v.clone())
            })
            .collect();
        TensorVec {
            field: self.field,
            dims,
            terms,
        }
    }

    /// Swaps two adjacent factors `at` and `at + 1`.
    pub fn swap(&self, at: usize) -> TensorVec {
        let mut perm: Vec<usize> = (0..self.dims.len()).collect();
        perm.swap(at, at + 1);
        self.permute(&perm)
    }

    pub fn add(&self, other: &TensorVec) -> TensorVec {
        assert_eq!(self.dims, other.dims);
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            match terms.get_mut(k) {
                Some(acc) => *acc += v,
                None => {
                    terms.insert(*k, v.clone());
                }
            }
        }
        terms.retain(|_, v| !v.is_zero());
        TensorVec {
            field: self.field,
            dims: self.dims.clone(),
            terms,
        }
    }

    pub fn scale(&self, s: &Scalar) -> TensorVec {
        let mut terms: BTreeMap<usize, Scalar> = self.terms.iter().map(|(k, v)| (*k, v * s)).collect();
        terms.retain(|_, v| !v.is_zero());
        TensorVec {
            field: self.field,
            dims: self.dims.clone(),
            terms,
        }
    }

    /// First flat index where the two vectors disagree.
    pub fn first_difference(&self, other: &TensorVec) -> Option<usize> {
        let keys: std::collections::BTreeSet<usize> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.into_iter().find(|k| self.terms.get(k) != other.terms.get(k))
    }
}

fn unflatten(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for (slot, &d) in idx.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    idx
}

/// Builds the matrix of `f` by evaluating it on every basis vector of
/// `V_0 ⊗ … ⊗ V_{r-1}`.
pub fn materialize(field: FieldCtx, in_dims: &[usize], out_dim: usize, f: impl Fn(TensorVec) -> TensorVec) -> LinMap {
    let n = product(in_dims);
    let mut m = Matrix::zeros(field, out_dim, n);
    for j in 0..n {
        let img = f(TensorVec::basis_flat(field, in_dims, j));
        assert_eq!(img.total_dim(), out_dim, "materialized image has wrong size");
        for (r, v) in img.terms() {
            m.set(r, j, v.clone());
        }
    }
    LinMap::new(m)
}

/// Where two composites first disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub input: Vec<usize>,
    pub output: Vec<usize>,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

/// Compares two linear maps given as evaluation pipelines on every input
/// basis vector; returns the first disagreement.
pub fn compare_pipelines(
    field: FieldCtx,
    in_dims: &[usize],
    lhs: impl Fn(TensorVec) -> TensorVec,
    rhs: impl Fn(TensorVec) -> TensorVec,
) -> Option<Mismatch> {
    let n = product(in_dims);
    for j in 0..n {
        let x = TensorVec::basis_flat(field, in_dims, j);
        let a = lhs(x.clone());
        let b = rhs(x);
        assert_eq!(a.dims(), b.dims(), "composites land in different spaces");
        if let Some(k) = a.first_difference(&b) {
            return Some(Mismatch {
                input: unflatten(in_dims, j),
                output: a.multi_index(k),
                lhs: a.coefficient(k),
                rhs: b.coefficient(k),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldCtx = FieldCtx::Rational;

    #[test]
    fn apply_matches_kron() {
        let a = LinMap::new(Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]));
        let b = LinMap::new(Matrix::from_i64(Q, &[&[0, 1, 5], &[2, 0, 1]]));
        let k = a.tensor(&b).unwrap();
        let via_pipeline = materialize(Q, &[2, 3], 4, |v| v.map(0, &a).apply(1, 1, &b, &[2]));
        assert_eq!(via_pipeline, k);
    }

    #[test]
    fn permute_is_flip() {
        let m = materialize(Q, &[2, 3], 6, |v| v.swap(0));
        assert_eq!(m, LinMap::flip(Q, 2, 3));
    }

    #[test]
    fn insert_and_contract() {
        let unit = LinMap::new(Matrix::from_i64(Q, &[&[1], &[0]]));
        let counit = LinMap::new(Matrix::from_i64(Q, &[&[1, 1]]));
        let v = TensorVec::basis(Q, &[3], &[2]);
        let w = v.apply(0, 0, &unit, &[2]);
        assert_eq!(w.dims(), &[2, 3]);
        assert_eq!(w.multi_index(w.terms().next().unwrap().0), vec![0, 2]);
        let back = w.apply(0, 1, &counit, &[]);
        assert_eq!(back, v);
    }
}
