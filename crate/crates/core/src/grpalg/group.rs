use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
///
/// Elements are indices `0..order`; `mult[a][b]` is the index of `a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    labels: Vec<String>,
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates associativity, identity and inverses.
    pub fn new(labels: Vec<String>, mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = mult.len();
        let bad = |msg: String| Err(Error::InvalidGroup(msg));
        if n == 0 {
            return bad("empty table".into());
        }
        if labels.len() != n {
            return bad(format!("{} labels for order {n}", labels.len()));
        }
        for (a, row) in mult.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {a} has length {}", row.len()));
            }
            if let Some(&c) = row.iter().find(|&&c| c >= n) {
                return bad(format!("entry {c} in row {a} out of range"));
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|a| mult[e][a] == a && mult[a][e] == a)) else {
            return bad("no identity element".into());
        };
        let mut inverse = vec![0; n];
        for a in 0..n {
            match (0..n).find(|&b| mult[a][b] == identity && mult[b][a] == identity) {
                Some(b) => inverse[a] = b,
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return bad(format!("not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(GroupTable {
            labels,
            mult,
            identity,
            inverse,
        })
    }

    /// The cyclic group of order `n`, generated by `a`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            })
            .collect();
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(labels, mult).expect("cyclic table is a group")
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// The symmetric group on three letters.
    ///
    /// Elements are the permutations of `{0,1,2}` in lexicographic order of
    /// their images; the product is composition, `(στ)(i) = σ(τ(i))`.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mult = perms
            .iter()
            .map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect())
            .collect();
        let labels = ["e", "(12)", "(01)", "(012)", "(021)", "(02)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Self::new(labels, mult).expect("S3 table is a group")
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Looks up an element by label.
    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Whether `perm` is a group automorphism.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.order();
        if perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        (0..n).all(|a| (0..n).all(|b| perm[self.mul(a, b)] == self.mul(perm[a], perm[b])))
    }

    /// Inner automorphism `g ↦ t g t⁻¹`.
    pub fn conjugation(&self, t: usize) -> Vec<usize> {
        (0..self.order())
            .map(|g| self.mul(self.mul(t, g), self.inv(t)))
            .collect()
    }

    /// Automorphism `g ↦ g^k`; valid when `k` is coprime to the exponent
    /// of an abelian group.
    pub fn power_map(&self, k: usize) -> Vec<usize> {
        (0..self.order())
            .map(|g| (0..k).fold(self.identity, |acc, _| self.mul(acc, g)))
            .collect()
    }

    /// All automorphisms, by brute force over permutations fixing the
    /// identity. Only meant for the small groups in the catalog.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        permutations(&mut perm, 0, &mut |p| {
            if self.is_automorphism(p) {
                out.push(p.to_vec());
            }
        });
        out.sort();
        out
    }
}

fn permutations(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// Composition of index permutations, `(a ∘ b)[g] = a[b[g]]`.
pub fn compose_perm(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&g| a[g]).collect()
}

pub fn invert_perm(a: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; a.len()];
    for (g, &img) in a.iter().enumerate() {
        inv[img] = g;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian_of_order_six() {
        let g = GroupTable::symmetric3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), 0);
        assert_ne!(g.mul(1, 2), g.mul(2, 1));
        assert_eq!(g.automorphisms().len(), 6);
    }

    #[test]
    fn cyclic_automorphisms() {
        assert_eq!(GroupTable::cyclic(4).automorphisms().len(), 2);
        assert!(GroupTable::cyclic(4).is_automorphism(&GroupTable::cyclic(4).power_map(3)));
    }

    #[test]
    fn rejects_non_group() {
        let labels = vec!["a".into(), "b".into()];
        assert!(GroupTable::new(labels.clone(), vec![vec![0, 0], vec![0, 1]]).is_err());
        assert!(GroupTable::new(labels, vec![vec![0, 1], vec![1, 1]]).is_err());
    }
}
