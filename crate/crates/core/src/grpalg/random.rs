use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::exactlin::Matrix;

use super::graded::{grading_shift, Blocks, Degree, GradedBimodule, GradedSetting, GroupQuadruple};
use super::group::GroupTable;

/// All homomorphisms `G → {±1}`, as sign vectors.
pub fn sign_characters(g: &GroupTable) -> Vec<Vec<i64>> {
    let n = g.order();
    (0u32..1 << n)
        .map(|mask| {
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect::<Vec<i64>>()
        })
        .filter(|chi| (0..n).all(|a| (0..n).all(|b| chi[g.mul(a, b)] == chi[a] * chi[b])))
        .collect()
}

/// A random invertible integer matrix with small entries.
fn random_invertible(setting: &GradedSetting, k: usize, rng: &mut impl Rng) -> Matrix {
    let f = setting.field();
    loop {
        let m = Matrix::from_fn(f, k, k, |_, _| f.from_i64(rng.gen_range(-2..=2)));
        if m.rank() == k {
            return m;
        }
    }
}

/// The orbit of a bidegree under the two shift actions; it is the product
/// of the left orbit of `g` and the right orbit of `h`.
pub fn shift_orbit(setting: &GradedSetting, x: &GroupQuadruple, d: Degree) -> Vec<Degree> {
    let (g1, g2) = (setting.g1(), setting.g2());
    let left: BTreeSet<usize> = (0..g1.order())
        .map(|gp| grading_shift(setting, x, gp, d.0, g2.identity(), d.1).0)
        .collect();
    let right: BTreeSet<usize> = (0..g2.order())
        .map(|hp| grading_shift(setting, x, g1.identity(), d.0, hp, d.1).1)
        .collect();
    left.iter().flat_map(|&g| right.iter().map(move |&h| (g, h))).collect()
}

/// Size limits for [`random_graded`].
#[derive(Clone, Copy, Debug)]
pub struct RandomShape {
    /// Keep adding orbits until this many components exist.
    pub min_components: usize,
    /// Largest component dimension.
    pub max_mult: usize,
    /// Orbits that would push the total dimension past this are skipped
    /// (the first orbit is always taken, with multiplicity one if needed).
    pub max_dim: usize,
}

/// A random graded module in component `x`: a direct sum of permutation
/// modules on shift orbits, each twisted by sign characters, taken with
/// multiplicity, and with a random change of basis inside every component.
pub fn random_graded(
    setting: &Arc<GradedSetting>,
    x: &GroupQuadruple,
    shape: RandomShape,
    rng: &mut impl Rng,
) -> Result<GradedBimodule> {
    let (g1, g2) = (setting.g1(), setting.g2());
    let f = setting.field();
    let chars1 = sign_characters(g1);
    let chars2 = sign_characters(g2);
    let mut points: Vec<Degree> = (0..g1.order())
        .flat_map(|g| (0..g2.order()).map(move |h| (g, h)))
        .collect();
    points.shuffle(rng);

    let mut used: BTreeSet<Degree> = BTreeSet::new();
    let mut degrees: Vec<Degree> = Vec::new();
    // per component: (orbit index, multiplicity, change of basis)
    let mut comps: BTreeMap<Degree, (usize, usize, Matrix)> = BTreeMap::new();
    let mut orbit_chars: Vec<(usize, usize)> = Vec::new();
    for p in points {
        if comps.len() >= shape.min_components.max(1) {
            break;
        }
        if used.contains(&p) {
            continue;
        }
        let orbit = shift_orbit(setting, x, p);
        let mut mult = rng.gen_range(1..=shape.max_mult.max(1));
        if degrees.len() + orbit.len() * mult > shape.max_dim {
            mult = 1;
            if !degrees.is_empty() && degrees.len() + orbit.len() > shape.max_dim {
                continue;
            }
        }
        let chi = (rng.gen_range(0..chars1.len()), rng.gen_range(0..chars2.len()));
        let oi = orbit_chars.len();
        orbit_chars.push(chi);
        for d in orbit {
            used.insert(d);
            comps.insert(d, (oi, mult, random_invertible(setting, mult, rng)));
            degrees.extend(std::iter::repeat_n(d, mult));
        }
    }

    let mut left: Blocks = vec![BTreeMap::new(); g1.order()];
    for (gp, fam) in left.iter_mut().enumerate() {
        for (&d, (oi, _, t)) in &comps {
            let target = grading_shift(setting, x, gp, d.0, g2.identity(), d.1);
            let s = f.from_i64(chars1[orbit_chars[*oi].0][gp]);
            let t_target = &comps[&target].2;
            let block = t_target.mul(&t.inverse()?)?.scale(&s);
            fam.insert(d, block);
        }
    }
    let mut right: Blocks = vec![BTreeMap::new(); g2.order()];
    for (hp, fam) in right.iter_mut().enumerate() {
        for (&d, (oi, _, t)) in &comps {
            let target = grading_shift(setting, x, g1.identity(), d.0, hp, d.1);
            let s = f.from_i64(chars2[orbit_chars[*oi].1][hp]);
            let t_target = &comps[&target].2;
            let block = t_target.mul(&t.inverse()?)?.scale(&s);
            fam.insert(d, block);
        }
    }
    GradedBimodule::new(setting.clone(), x.clone(), degrees, left, right)
}
