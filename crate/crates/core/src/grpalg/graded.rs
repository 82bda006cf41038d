use std::collections::BTreeMap;
use std::sync::Arc;

use crate::autgroup::AutQuadruple;
use crate::error::{Error, Result};
use crate::exactlin::{FieldCtx, Matrix, Scalar};
use crate::hopf::{group_algebra, HopfAlgebra};
use crate::report::{CheckResult, ValidationReport};
use crate::ydl::YdlModule;

use super::group::{compose_perm, invert_perm, GroupTable};
use super::lift_automorphism;

/// A bidegree `(g, h)` in `G1 × G2`.
pub type Degree = (usize, usize);

/// The two groups, their group algebras and the ground field.
#[derive(Debug)]
pub struct GradedSetting {
    g1: GroupTable,
    g2: GroupTable,
    h1: Arc<HopfAlgebra>,
    h2: Arc<HopfAlgebra>,
}

impl GradedSetting {
    pub fn new(g1: GroupTable, g2: GroupTable, field: FieldCtx) -> Arc<Self> {
        let h1 = Arc::new(group_algebra(&g1, field));
        let h2 = Arc::new(group_algebra(&g2, field));
        Arc::new(GradedSetting { g1, g2, h1, h2 })
    }

    pub fn g1(&self) -> &GroupTable {
        &self.g1
    }

    pub fn g2(&self) -> &GroupTable {
        &self.g2
    }

    pub fn h1(&self) -> &Arc<HopfAlgebra> {
        &self.h1
    }

    pub fn h2(&self) -> &Arc<HopfAlgebra> {
        &self.h2
    }

    pub fn field(&self) -> FieldCtx {
        self.h1.field()
    }

    fn same(&self, other: &GradedSetting) -> bool {
        std::ptr::eq(self, other)
            || (self.g1.table() == other.g1.table()
                && self.g2.table() == other.g2.table()
                && self.field() == other.field())
    }
}

/// A component given by group automorphisms `(α, β)` of G1 and `(γ, δ)` of
/// G2, stored as index permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupQuadruple {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub gamma: Vec<usize>,
    pub delta: Vec<usize>,
}

impl GroupQuadruple {
    pub fn new(
        setting: &GradedSetting,
        alpha: Vec<usize>,
        beta: Vec<usize>,
        gamma: Vec<usize>,
        delta: Vec<usize>,
    ) -> Result<Self> {
        for (name, p, g) in [
            ("alpha", &alpha, &setting.g1),
            ("beta", &beta, &setting.g1),
            ("gamma", &gamma, &setting.g2),
            ("delta", &delta, &setting.g2),
        ] {
            if p.len() != g.order() || !g.is_automorphism(p) {
                return Err(Error::NotAutomorphism(format!("{name} = {p:?}")));
            }
        }
        Ok(GroupQuadruple {
            alpha,
            beta,
            gamma,
            delta,
        })
    }

    pub fn identity(setting: &GradedSetting) -> Self {
        let id1: Vec<usize> = (0..setting.g1.order()).collect();
        let id2: Vec<usize> = (0..setting.g2.order()).collect();
        GroupQuadruple {
            alpha: id1.clone(),
            beta: id1,
            gamma: id2.clone(),
            delta: id2,
        }
    }

    /// `x ∗ y` by index arithmetic; the same law as [`crate::autgroup::mul_g`].
    pub fn mul(&self, y: &GroupQuadruple) -> GroupQuadruple {
        let c = |a: &[usize], b: &[usize]| compose_perm(a, b);
        let a2_inv = invert_perm(&y.alpha);
        let g2_inv = invert_perm(&y.gamma);
        GroupQuadruple {
            alpha: c(&y.alpha, &self.alpha),
            beta: c(&c(&c(&y.alpha, &self.beta), &a2_inv), &y.beta),
            gamma: c(&self.gamma, &y.gamma),
            delta: c(&c(&c(&y.delta, &g2_inv), &self.delta), &y.gamma),
        }
    }

    pub fn inverse(&self) -> GroupQuadruple {
        let a_inv = invert_perm(&self.alpha);
        let g_inv = invert_perm(&self.gamma);
        GroupQuadruple {
            beta: compose_perm(&compose_perm(&a_inv, &invert_perm(&self.beta)), &self.alpha),
            delta: compose_perm(&compose_perm(&self.gamma, &invert_perm(&self.delta)), &g_inv),
            alpha: a_inv,
            gamma: g_inv,
        }
    }

    pub fn is_identity(&self) -> bool {
        let id = |p: &[usize]| p.iter().enumerate().all(|(i, &v)| i == v);
        id(&self.alpha) && id(&self.beta) && id(&self.gamma) && id(&self.delta)
    }

    /// The corresponding quadruple of Hopf automorphisms.
    pub fn lift(&self, setting: &GradedSetting) -> Result<AutQuadruple> {
        AutQuadruple::from_maps(
            lift_automorphism(&setting.g1, &setting.h1, &self.alpha)?,
            lift_automorphism(&setting.g1, &setting.h1, &self.beta)?,
            lift_automorphism(&setting.g2, &setting.h2, &self.gamma)?,
            lift_automorphism(&setting.g2, &setting.h2, &self.delta)?,
        )
    }
}

/// Left shift `g ↦ α(g')·g·β(g'⁻¹)`.
fn shift_left(s: &GradedSetting, x: &GroupQuadruple, gp: usize, g: usize) -> usize {
    let g1 = &s.g1;
    g1.mul(g1.mul(x.alpha[gp], g), x.beta[g1.inv(gp)])
}

/// Right shift `h ↦ γ(h'⁻¹)·h·δ(h')`.
fn shift_right(s: &GradedSetting, x: &GroupQuadruple, hp: usize, h: usize) -> usize {
    let g2 = &s.g2;
    g2.mul(g2.mul(x.gamma[g2.inv(hp)], h), x.delta[hp])
}

/// Where `g' ▷ (·) ◁ h'` sends the bidegree `(g, h)`:
/// `(α(g')·g·β(g'⁻¹), γ(h'⁻¹)·h·δ(h'))`.
pub fn grading_shift(setting: &GradedSetting, x: &GroupQuadruple, gp: usize, g: usize, hp: usize, h: usize) -> Degree {
    (shift_left(setting, x, gp, g), shift_right(setting, x, hp, h))
}

/// Per-group-element action blocks, keyed by source bidegree.
pub type Blocks = Vec<BTreeMap<Degree, Matrix>>;

/// A bigraded `G1`-`G2`-bimodule `M = ⊕ ₍g₎M₍h₎` whose actions shift degrees
/// by [`grading_shift`]. The basis is that of the underlying vector space;
/// each basis vector is homogeneous of degree `degrees[i]`, and a component
/// `₍g₎M₍h₎` is spanned by the basis vectors of that degree, in order.
#[derive(Clone, Debug)]
pub struct GradedBimodule {
    setting: Arc<GradedSetting>,
    component: GroupQuadruple,
    degrees: Vec<Degree>,
    comps: BTreeMap<Degree, Vec<usize>>,
    local: Vec<usize>,
    left: Blocks,
    right: Blocks,
}

fn layout(degrees: &[Degree]) -> (BTreeMap<Degree, Vec<usize>>, Vec<usize>) {
    let mut comps: BTreeMap<Degree, Vec<usize>> = BTreeMap::new();
    let mut local = vec![0; degrees.len()];
    for (i, d) in degrees.iter().enumerate() {
        let v = comps.entry(*d).or_default();
        local[i] = v.len();
        v.push(i);
    }
    (comps, local)
}

impl GradedBimodule {
    /// Checks that every block exists, has the shape demanded by the shift
    /// rule and lands in a component of the support.
    pub fn new(
        setting: Arc<GradedSetting>,
        component: GroupQuadruple,
        degrees: Vec<Degree>,
        left: Blocks,
        right: Blocks,
    ) -> Result<Self> {
        let (o1, o2) = (setting.g1.order(), setting.g2.order());
        if let Some(d) = degrees.iter().find(|(g, h)| *g >= o1 || *h >= o2) {
            return Err(Error::Grading(format!("degree {d:?} out of range")));
        }
        if left.len() != o1 || right.len() != o2 {
            return Err(Error::Grading(format!(
                "expected {o1} left and {o2} right block families, got {} and {}",
                left.len(),
                right.len()
            )));
        }
        let (comps, local) = layout(&degrees);
        let field = setting.field();
        for (side, blocks) in [("left", &left), ("right", &right)] {
            for (el, fam) in blocks.iter().enumerate() {
                for (src, pos) in &comps {
                    let target = if side == "left" {
                        (shift_left(&setting, &component, el, src.0), src.1)
                    } else {
                        (src.0, shift_right(&setting, &component, el, src.1))
                    };
                    let Some(tpos) = comps.get(&target) else {
                        return Err(Error::Grading(format!(
                            "{side} action of element {el} sends {src:?} to {target:?}, outside the support"
                        )));
                    };
                    let block = fam
                        .get(src)
                        .ok_or_else(|| Error::Grading(format!("missing {side} block for element {el} at {src:?}")))?;
                    if block.shape() != (tpos.len(), pos.len()) || block.field() != field {
                        return Err(Error::Grading(format!(
                            "{side} block for element {el} at {src:?} is {:?}, expected {:?} ({src:?} → {target:?})",
                            block.shape(),
                            (tpos.len(), pos.len())
                        )));
                    }
                }
                if let Some(extra) = fam.keys().find(|k| !comps.contains_key(k)) {
                    return Err(Error::Grading(format!(
                        "{side} block for element {el} at {extra:?}, which is not in the support"
                    )));
                }
            }
        }
        Ok(GradedBimodule {
            setting,
            component,
            degrees,
            comps,
            local,
            left,
            right,
        })
    }

    pub fn setting(&self) -> &Arc<GradedSetting> {
        &self.setting
    }

    pub fn component(&self) -> &GroupQuadruple {
        &self.component
    }

    pub fn field(&self) -> FieldCtx {
        self.setting.field()
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    /// Components in degree order with the basis positions spanning each.
    pub fn components(&self) -> &BTreeMap<Degree, Vec<usize>> {
        &self.comps
    }

    pub fn left_blocks(&self) -> &Blocks {
        &self.left
    }

    pub fn right_blocks(&self) -> &Blocks {
        &self.right
    }

    fn left_target(&self, gp: usize, d: Degree) -> Degree {
        (shift_left(&self.setting, &self.component, gp, d.0), d.1)
    }

    fn right_target(&self, hp: usize, d: Degree) -> Degree {
        (d.0, shift_right(&self.setting, &self.component, hp, d.1))
    }

    /// The generic module over `(k[G1], k[G2])`: actions assembled from the
    /// blocks, coactions `ρ1(m) = g ⊗ m`, `ρ2(m) = m ⊗ h` on `₍g₎M₍h₎`.
    pub fn to_generic(&self) -> Result<YdlModule> {
        let s = &self.setting;
        let f = self.field();
        let (n1, n2, d) = (s.g1.order(), s.g2.order(), self.dim());
        let mut la = Matrix::zeros(f, d, n1 * d);
        let mut ra = Matrix::zeros(f, d, d * n2);
        for (gp, fam) in self.left.iter().enumerate() {
            for (src, block) in fam {
                let rows = &self.comps[&self.left_target(gp, *src)];
                let cols = &self.comps[src];
                for (r, c, v) in block.nonzeros() {
                    la.set(rows[r], gp * d + cols[c], v.clone());
                }
            }
        }
        for (hp, fam) in self.right.iter().enumerate() {
            for (src, block) in fam {
                let rows = &self.comps[&self.right_target(hp, *src)];
                let cols = &self.comps[src];
                for (r, c, v) in block.nonzeros() {
                    ra.set(rows[r], cols[c] * n2 + hp, v.clone());
                }
            }
        }
        let mut lc = Matrix::zeros(f, n1 * d, d);
        let mut rc = Matrix::zeros(f, d * n2, d);
        for (i, &(g, h)) in self.degrees.iter().enumerate() {
            lc.set(g * d + i, i, f.one());
            rc.set(i * n2 + h, i, f.one());
        }
        YdlModule::new(self.component.lift(s)?, la.into(), ra.into(), lc.into(), rc.into())
    }

    /// Reads a generic module over `(k[G1], k[G2])` back into graded form.
    /// The coactions must be diagonal in the given basis and the actions
    /// must shift degrees as the component prescribes.
    pub fn from_generic(setting: Arc<GradedSetting>, component: GroupQuadruple, m: &YdlModule) -> Result<Self> {
        let s = &setting;
        let (n1, n2, d) = (s.g1.order(), s.g2.order(), m.dim());
        if m.h1().dim() != n1 || m.h2().dim() != n2 {
            return Err(Error::AlgebraMismatch(
                "module is not over the setting's group algebras".into(),
            ));
        }
        let mut degrees = Vec::with_capacity(d);
        for i in 0..d {
            let g = (0..n1).filter(|&g| !m.left_coaction().matrix().get(g * d + i, i).is_zero());
            let h = (0..n2).filter(|&h| !m.right_coaction().matrix().get(i * n2 + h, i).is_zero());
            let (g, h): (Vec<_>, Vec<_>) = (g.collect(), h.collect());
            if g.len() != 1 || h.len() != 1 {
                return Err(Error::Grading(format!("basis vector {i} is not homogeneous")));
            }
            degrees.push((g[0], h[0]));
        }
        let (comps, _) = layout(&degrees);
        let la = m.left_action().matrix();
        let ra = m.right_action().matrix();
        let mut left = vec![BTreeMap::new(); n1];
        let mut right = vec![BTreeMap::new(); n2];
        for (src, cols) in &comps {
            for (gp, slot) in left.iter_mut().enumerate() {
                let target = (shift_left(s, &component, gp, src.0), src.1);
                let rows = comps.get(&target).cloned().unwrap_or_default();
                let block = Matrix::from_fn(s.field(), rows.len(), cols.len(), |r, c| {
                    la.get(rows[r], gp * d + cols[c]).clone()
                });
                slot.insert(*src, block);
            }
            for (hp, slot) in right.iter_mut().enumerate() {
                let target = (src.0, shift_right(s, &component, hp, src.1));
                let rows = comps.get(&target).cloned().unwrap_or_default();
                let block = Matrix::from_fn(s.field(), rows.len(), cols.len(), |r, c| {
                    ra.get(rows[r], cols[c] * n2 + hp).clone()
                });
                slot.insert(*src, block);
            }
        }
        let graded = GradedBimodule::new(setting, component, degrees, left, right)?;
        // entries off the shifted blocks, or coaction weights other than one,
        // are lost above; the round trip catches them
        if !graded.to_generic()?.same_structure(m) {
            return Err(Error::Grading("module is not graded by its coactions".into()));
        }
        Ok(graded)
    }
}

/// Unit, associativity and commutation of the block actions.
pub fn check_graded(m: &GradedBimodule) -> ValidationReport {
    let s = &m.setting;
    let mut r = ValidationReport::new("graded bimodule");
    let (g1, g2) = (&s.g1, &s.g2);
    let first_bad = |ok: &mut dyn FnMut(Degree) -> bool| m.comps.keys().copied().find(|d| !ok(*d));

    let bad = first_bad(&mut |d| m.left[g1.identity()][&d].is_identity());
    r.push(CheckResult::from_bool(
        "left action is unital",
        bad.is_none(),
        format!("at {bad:?}"),
    ));
    let bad = first_bad(&mut |d| m.right[g2.identity()][&d].is_identity());
    r.push(CheckResult::from_bool(
        "right action is unital",
        bad.is_none(),
        format!("at {bad:?}"),
    ));

    let mut witness = None;
    'outer: for a in 0..g1.order() {
        for b in 0..g1.order() {
            for d in m.comps.keys() {
                let lhs = &m.left[g1.mul(a, b)][d];
                let rhs = m.left[a][&m.left_target(b, *d)]
                    .mul(&m.left[b][d])
                    .expect("shapes checked");
                if *lhs != rhs {
                    witness = Some((a, b, *d));
                    break 'outer;
                }
            }
        }
    }
    r.push(CheckResult::from_bool(
        "left action is associative",
        witness.is_none(),
        format!("(g'₁, g'₂, degree) = {witness:?}"),
    ));
    let mut witness = None;
    'outer: for a in 0..g2.order() {
        for b in 0..g2.order() {
            for d in m.comps.keys() {
                let lhs = &m.right[g2.mul(a, b)][d];
                let rhs = m.right[b][&m.right_target(a, *d)]
                    .mul(&m.right[a][d])
                    .expect("shapes checked");
                if *lhs != rhs {
                    witness = Some((a, b, *d));
                    break 'outer;
                }
            }
        }
    }
    r.push(CheckResult::from_bool(
        "right action is associative",
        witness.is_none(),
        format!("(h'₁, h'₂, degree) = {witness:?}"),
    ));
    let mut witness = None;
    'outer: for a in 0..g1.order() {
        for b in 0..g2.order() {
            for d in m.comps.keys() {
                let lhs = m.right[b][&m.left_target(a, *d)]
                    .mul(&m.left[a][d])
                    .expect("shapes checked");
                let rhs = m.left[a][&m.right_target(b, *d)]
                    .mul(&m.right[b][d])
                    .expect("shapes checked");
                if lhs != rhs {
                    witness = Some((a, b, *d));
                    break 'outer;
                }
            }
        }
    }
    r.push(CheckResult::from_bool(
        "actions commute",
        witness.is_none(),
        format!("(g', h', degree) = {witness:?}"),
    ));
    r
}

/// Accumulates entries given in global basis coordinates into blocks keyed by
/// source degree, rejecting entries that land off the shifted degree.
struct BlockBuilder<'a> {
    degrees: &'a [Degree],
    local: &'a [usize],
    blocks: BTreeMap<Degree, (Degree, Matrix)>,
}

impl<'a> BlockBuilder<'a> {
    fn new(
        field: FieldCtx,
        comps: &'a BTreeMap<Degree, Vec<usize>>,
        degrees: &'a [Degree],
        local: &'a [usize],
        target: impl Fn(Degree) -> Degree,
    ) -> Self {
        let blocks = comps
            .iter()
            .map(|(d, pos)| {
                let t = target(*d);
                let rows = comps.get(&t).map_or(0, Vec::len);
                (*d, (t, Matrix::zeros(field, rows, pos.len())))
            })
            .collect();
        BlockBuilder { degrees, local, blocks }
    }

    fn add(&mut self, row: usize, col: usize, v: &Scalar) -> Result<()> {
        let (target, block) = self
            .blocks
            .get_mut(&self.degrees[col])
            .expect("every degree has a block");
        if self.degrees[row] != *target {
            return Err(Error::Grading(format!(
                "basis vector {col} is sent to {row} of degree {:?}, expected {target:?}",
                self.degrees[row]
            )));
        }
        let (r, c) = (self.local[row], self.local[col]);
        *block.get_mut(r, c) += v;
        Ok(())
    }

    fn finish(self) -> BTreeMap<Degree, Matrix> {
        self.blocks.into_iter().map(|(d, (_, b))| (d, b)).collect()
    }
}

/// Runs `f` on every nonzero `(row, col, value)` of the action of `el` on
/// `m`, in global coordinates.
fn for_each_entry<'a>(m: &'a GradedBimodule, left: bool, el: usize, mut f: impl FnMut(usize, usize, &'a Scalar)) {
    let fam = if left { &m.left[el] } else { &m.right[el] };
    for (src, block) in fam {
        let target = if left {
            m.left_target(el, *src)
        } else {
            m.right_target(el, *src)
        };
        let rows = &m.comps[&target];
        let cols = &m.comps[src];
        for (r, c, v) in block.nonzeros() {
            f(rows[r], cols[c], v);
        }
    }
}

/// Column `col` of the action of `el`, as `(row, value)` pairs.
fn action_column(m: &GradedBimodule, left: bool, el: usize, col: usize) -> Vec<(usize, Scalar)> {
    let src = m.degrees[col];
    let (fam, target) = if left {
        (&m.left[el], m.left_target(el, src))
    } else {
        (&m.right[el], m.right_target(el, src))
    };
    let block = &fam[&src];
    let rows = &m.comps[&target];
    let c = m.local[col];
    (0..block.rows())
        .filter(|&r| !block.get(r, c).is_zero())
        .map(|r| (rows[r], block.get(r, c).clone()))
        .collect()
}

fn same_setting(m: &GradedBimodule, n: &GradedBimodule) -> Result<()> {
    if m.setting.same(&n.setting) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch(
            "graded modules over different groups or fields".into(),
        ))
    }
}

fn build(
    setting: Arc<GradedSetting>,
    component: GroupQuadruple,
    degrees: Vec<Degree>,
    fill: impl Fn(bool, usize, &mut dyn FnMut(usize, usize, &Scalar)),
) -> Result<GradedBimodule> {
    let s = setting.clone();
    let (comps, local) = layout(&degrees);
    let field = s.field();
    let mut left = Vec::with_capacity(s.g1.order());
    for gp in 0..s.g1.order() {
        let mut b = BlockBuilder::new(field, &comps, &degrees, &local, |d| {
            (shift_left(&s, &component, gp, d.0), d.1)
        });
        let mut err = None;
        fill(true, gp, &mut |r, c, v| {
            if let Err(e) = b.add(r, c, v) {
                err.get_or_insert(e);
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        left.push(b.finish());
    }
    let mut right = Vec::with_capacity(s.g2.order());
    for hp in 0..s.g2.order() {
        let mut b = BlockBuilder::new(field, &comps, &degrees, &local, |d| {
            (d.0, shift_right(&s, &component, hp, d.1))
        });
        let mut err = None;
        fill(false, hp, &mut |r, c, v| {
            if let Err(e) = b.add(r, c, v) {
                err.get_or_insert(e);
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        right.push(b.finish());
    }
    GradedBimodule::new(setting, component, degrees, left, right)
}

/// `M ⊗ N` with `g ▷ (m⊗n) = g▷m ⊗ g▷n`,
/// `(m⊗n) ◁ h = m◁γ2(h) ⊗ n◁γ2⁻¹δ1γ2(h)` and degree
/// `(α2(g_m)·α2β1α2⁻¹(g_n), h_m·h_n)`.
pub fn graded_tensor(m: &GradedBimodule, n: &GradedBimodule) -> Result<GradedBimodule> {
    same_setting(m, n)?;
    let s = &m.setting;
    let (x, y) = (&m.component, &n.component);
    let twist1 = compose_perm(&compose_perm(&y.alpha, &x.beta), &invert_perm(&y.alpha));
    let twist2 = compose_perm(&compose_perm(&invert_perm(&y.gamma), &x.delta), &y.gamma);
    let dn = n.dim();
    let mut degrees = Vec::with_capacity(m.dim() * dn);
    for &(gm, hm) in &m.degrees {
        for &(gn, hn) in &n.degrees {
            degrees.push((s.g1.mul(y.alpha[gm], twist1[gn]), s.g2.mul(hm, hn)));
        }
    }
    build(s.clone(), x.mul(y), degrees, |left, el, emit| {
        let (em, en) = if left { (el, el) } else { (y.gamma[el], twist2[el]) };
        let mut nm = Vec::new();
        for_each_entry(m, left, em, |r, c, v| nm.push((r, c, v)));
        let mut nn = Vec::new();
        for_each_entry(n, left, en, |r, c, v| nn.push((r, c, v)));
        for &(r1, c1, v1) in &nm {
            for &(r2, c2, v2) in &nn {
                emit(r1 * dn + r2, c1 * dn + c2, &(v1 * v2));
            }
        }
    })
}

/// `ˣN` with `g ⇀ n = β1⁻¹α1(g) ▷ n`, `n ↼ h = n ◁ γ2⁻¹δ1γ2γ1⁻¹(h)` and
/// degree `(α1⁻¹α2β1α2⁻¹(g_n), γ1δ1⁻¹(h_n))`.
pub fn graded_conjugate(x: &GroupQuadruple, n: &GradedBimodule) -> Result<GradedBimodule> {
    let s = &n.setting;
    let y = &n.component;
    let c = |a: &[usize], b: &[usize]| compose_perm(a, b);
    let on_g = c(
        &c(&c(&invert_perm(&x.alpha), &y.alpha), &x.beta),
        &invert_perm(&y.alpha),
    );
    let on_h = c(&x.gamma, &invert_perm(&x.delta));
    let act_l = c(&invert_perm(&x.beta), &x.alpha);
    let act_r = c(
        &c(&c(&invert_perm(&y.gamma), &x.delta), &y.gamma),
        &invert_perm(&x.gamma),
    );
    let degrees = n.degrees.iter().map(|&(g, h)| (on_g[g], on_h[h])).collect();
    build(s.clone(), x.mul(y).mul(&x.inverse()), degrees, |left, el, emit| {
        let el = if left { act_l[el] } else { act_r[el] };
        for_each_entry(n, left, el, emit);
    })
}

/// The braiding `M ⊗ N → ᴹN ⊗ M` of graded modules.
#[derive(Clone, Debug)]
pub struct GradedBraiding {
    pub map: Matrix,
    pub conjugated: GradedBimodule,
}

/// `c(m ⊗ n) = β1⁻¹(g_m) ▷ n ⊗ m ◁ δ1⁻¹(h_n)` on homogeneous elements.
pub fn graded_braiding(m: &GradedBimodule, n: &GradedBimodule) -> Result<GradedBraiding> {
    same_setting(m, n)?;
    let x = &m.component;
    let (dm, dn) = (m.dim(), n.dim());
    let b_inv = invert_perm(&x.beta);
    let d_inv = invert_perm(&x.delta);
    let mut map = Matrix::zeros(m.field(), dn * dm, dm * dn);
    for i in 0..dm {
        let a = b_inv[m.degrees[i].0];
        for j in 0..dn {
            let b = d_inv[n.degrees[j].1];
            let col_n = action_column(n, true, a, j);
            let col_m = action_column(m, false, b, i);
            for (rn, vn) in &col_n {
                for (rm, vm) in &col_m {
                    map.set(rn * dm + rm, i * dn + j, vn * vm);
                }
            }
        }
    }
    Ok(GradedBraiding {
        map,
        conjugated: graded_conjugate(x, n)?,
    })
}

impl GradedBraiding {
    /// `ᴹN ⊗ M`, built on demand.
    pub fn target(&self, m: &GradedBimodule) -> Result<GradedBimodule> {
        graded_tensor(&self.conjugated, m)
    }

    /// For every pair of components `(₍g₁₎M₍h₁₎, ₍g₂₎N₍h₂₎)`, the pair of
    /// components (of N and of M, in their own gradings) that the braiding
    /// sends it into. Errors if some pair is spread over several targets.
    pub fn component_targets(
        &self,
        m: &GradedBimodule,
        n: &GradedBimodule,
    ) -> Result<BTreeMap<(Degree, Degree), (Degree, Degree)>> {
        let (dm, dn) = (m.dim(), n.dim());
        let mut out: BTreeMap<(Degree, Degree), (Degree, Degree)> = BTreeMap::new();
        for (r, c, _) in self.map.nonzeros() {
            let src = (m.degrees[c / dn], n.degrees[c % dn]);
            let dst = (n.degrees[r / dm], m.degrees[r % dm]);
            if let Some(prev) = out.insert(src, dst) {
                if prev != dst {
                    return Err(Error::Grading(format!(
                        "braiding spreads {src:?} over {prev:?} and {dst:?}"
                    )));
                }
            }
        }
        Ok(out)
    }
}

/// `M*` with `(g ▷ f)(m) = f(g⁻¹ ▷ m)`, `(f ◁ h)(m) = f(m ◁ δ⁻¹γ⁻¹(h⁻¹))` and
/// the dual basis vector of a vector of degree `(g, h)` in degree
/// `(α⁻¹β⁻¹(g⁻¹), h⁻¹)`. Left and right duals coincide for group algebras.
pub fn graded_dual(m: &GradedBimodule) -> Result<GradedBimodule> {
    let s = &m.setting;
    let x = &m.component;
    let (g1, g2) = (&s.g1, &s.g2);
    let ab_inv = compose_perm(&invert_perm(&x.alpha), &invert_perm(&x.beta));
    let dg_inv = compose_perm(&invert_perm(&x.delta), &invert_perm(&x.gamma));
    let degrees = m.degrees.iter().map(|&(g, h)| (ab_inv[g1.inv(g)], g2.inv(h))).collect();
    build(s.clone(), x.inverse(), degrees, |left, el, emit| {
        let el = if left { g1.inv(el) } else { dg_inv[g2.inv(el)] };
        for_each_entry(m, left, el, |r, c, v| emit(c, r, v));
    })
}

/// Compares closed-form decomposition indices for the group-algebra case
/// with the gradings computed from the coaction formulas. All entries are
/// informational: the computed gradings are the normative ones, and the
/// closed form for the tensor product does not match them.
pub fn closed_form_index_report(m: &GradedBimodule, n: &GradedBimodule) -> Result<ValidationReport> {
    same_setting(m, n)?;
    let s = &m.setting;
    let (g1, g2) = (&s.g1, &s.g2);
    let (x, y) = (&m.component, &n.component);
    let c = |a: &[usize], b: &[usize]| compose_perm(a, b);
    let mut r = ValidationReport::new("closed-form decomposition indices");

    // tensor: α2⁻¹(g1)·α2β1⁻¹α2⁻¹(g2)
    let t = graded_tensor(m, n)?;
    let a2_inv = invert_perm(&y.alpha);
    let twist = c(&c(&y.alpha, &invert_perm(&x.beta)), &a2_inv);
    let dn = n.dim();
    let bad = (0..t.dim()).find(|&k| {
        let (gm, gn) = (m.degrees[k / dn].0, n.degrees[k % dn].0);
        g1.mul(a2_inv[gm], twist[gn]) != t.degrees[k].0
    });
    r.push(
        CheckResult::from_bool(
            "tensor decomposition index",
            bad.is_none(),
            bad.map_or_else(String::new, |k| format!("differs at basis vector {k}")),
        )
        .informational(),
    );

    // conjugation: component (g, h) of ˣN is ₍α2β1⁻¹α2⁻¹α1(g)₎N₍δ1γ1⁻¹(h)₎
    let cn = graded_conjugate(x, n)?;
    let back_g = c(&c(&c(&y.alpha, &invert_perm(&x.beta)), &a2_inv), &x.alpha);
    let back_h = c(&x.delta, &invert_perm(&x.gamma));
    let bad = (0..n.dim()).find(|&k| {
        let (g, h) = cn.degrees[k];
        (back_g[g], back_h[h]) != n.degrees[k]
    });
    r.push(
        CheckResult::from_bool(
            "conjugation decomposition index",
            bad.is_none(),
            bad.map_or_else(String::new, |k| format!("differs at basis vector {k}")),
        )
        .informational(),
    );

    // braiding: ₍g₁₎M₍h₁₎ ⊗ ₍g₂₎N₍h₂₎ → ₍α2β1⁻¹(g1)g2β2β1⁻¹(g1⁻¹)₎N₍h₂₎ ⊗ ₍g₁₎M₍γ1δ1⁻¹(h2⁻¹)h1h2₎
    let br = graded_braiding(m, n)?;
    let b1_inv = invert_perm(&x.beta);
    let gd = c(&x.gamma, &invert_perm(&x.delta));
    let targets = br.component_targets(m, n)?;
    let bad = targets.iter().find(|(&((ga, ha), (gb, hb)), &dst)| {
        let g = g1.mul(g1.mul(y.alpha[b1_inv[ga]], gb), y.beta[b1_inv[g1.inv(ga)]]);
        let h = g2.mul(g2.mul(gd[g2.inv(hb)], ha), hb);
        dst != ((g, hb), (ga, h))
    });
    r.push(
        CheckResult::from_bool(
            "braiding component targets",
            bad.is_none(),
            bad.map_or_else(String::new, |(k, _)| format!("differs for the component pair {k:?}")),
        )
        .informational(),
    );

    // dual: component (g, h) of M* is (₍βα(g⁻¹)₎M₍h⁻¹₎)*
    let dual = graded_dual(m)?;
    let ba = c(&x.beta, &x.alpha);
    let bad = (0..m.dim()).find(|&k| {
        let (g, h) = dual.degrees[k];
        (ba[g1.inv(g)], g2.inv(h)) != m.degrees[k]
    });
    r.push(
        CheckResult::from_bool(
            "dual decomposition index",
            bad.is_none(),
            bad.map_or_else(String::new, |k| format!("differs at basis vector {k}")),
        )
        .informational(),
    );
    Ok(r)
}

/// Entrywise agreement of every graded operation with its generic
/// counterpart on the images under [`GradedBimodule::to_generic`].
pub fn oracle_report(m: &GradedBimodule, n: &GradedBimodule) -> Result<ValidationReport> {
    use crate::tcat::{braiding, conjugate_module, left_dual, right_dual, tensor_module};
    same_setting(m, n)?;
    let (gm, gn) = (m.to_generic()?, n.to_generic()?);
    let mut r = ValidationReport::new("graded versus generic");
    let t = graded_tensor(m, n)?;
    r.push(CheckResult::from_bool(
        "tensor agrees",
        t.to_generic()? == tensor_module(&gm, &gn)?,
        "structure maps or component differ",
    ));
    let x = &m.component;
    let cn = graded_conjugate(x, n)?;
    r.push(CheckResult::from_bool(
        "conjugation agrees",
        cn.to_generic()? == conjugate_module(gm.component(), &gn)?,
        "structure maps or component differ",
    ));
    let br = graded_braiding(m, n)?;
    let generic = braiding(&gm, &gn)?;
    r.push(CheckResult::matrices_equal(
        "braiding agrees",
        &br.map,
        generic.map.matrix(),
    ));
    r.push(CheckResult::from_bool(
        "braiding is block-permutation structured",
        br.component_targets(m, n).is_ok(),
        "some pair of components is spread over several targets",
    ));
    let dual = graded_dual(m)?.to_generic()?;
    r.push(CheckResult::from_bool(
        "left dual agrees",
        dual == left_dual(&gm)?.dual,
        "structure maps or component differ",
    ));
    r.push(CheckResult::from_bool(
        "right dual agrees",
        dual == right_dual(&gm)?.dual,
        "structure maps or component differ",
    ));
    Ok(r)
}
