use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::{compare_pipelines, LinMap, Matrix, Scalar, SparseEchelon};
use crate::hopf::same_algebra;
use crate::report::{CheckResult, ValidationReport};

use super::YdlModule;

fn compatible(m: &YdlModule, n: &YdlModule) -> Result<()> {
    if !same_algebra(m.h1(), n.h1()) || !same_algebra(m.h2(), n.h2()) {
        return Err(Error::AlgebraMismatch("modules over different algebra pairs".into()));
    }
    if m.component() != n.component() {
        return Err(Error::ComponentMismatch(
            "morphisms only exist between modules of one component".into(),
        ));
    }
    Ok(())
}

/// Whether `f: m → n` intertwines both actions and both coactions.
pub fn is_ydl_morphism(f: &LinMap, m: &YdlModule, n: &YdlModule) -> Result<ValidationReport> {
    compatible(m, n)?;
    if f.domain_dim() != m.dim() || f.codomain_dim() != n.dim() {
        return Err(Error::Dimension(format!(
            "map is {}→{}, modules have dimensions {} and {}",
            f.domain_dim(),
            f.codomain_dim(),
            m.dim(),
            n.dim()
        )));
    }
    let k = m.field();
    let (n1, n2, dm) = (m.h1().dim(), m.h2().dim(), m.dim());
    let mut r = ValidationReport::new("module morphism");
    r.push(CheckResult::from_mismatch(
        "preserves left action",
        compare_pipelines(
            k,
            &[n1, dm],
            |v| m.act_left_at(&v, 0).map(0, f),
            |v| n.act_left_at(&v.map(1, f), 0),
        ),
    ));
    r.push(CheckResult::from_mismatch(
        "preserves right action",
        compare_pipelines(
            k,
            &[dm, n2],
            |v| m.act_right_at(&v, 0).map(0, f),
            |v| n.act_right_at(&v.map(0, f), 0),
        ),
    ));
    r.push(CheckResult::from_mismatch(
        "preserves left coaction",
        compare_pipelines(
            k,
            &[dm],
            |v| n.coact_left_at(&v.map(0, f), 0),
            |v| m.coact_left_at(&v, 0).map(1, f),
        ),
    ));
    r.push(CheckResult::from_mismatch(
        "preserves right coaction",
        compare_pipelines(
            k,
            &[dm],
            |v| n.coact_right_at(&v.map(0, f), 0),
            |v| m.coact_right_at(&v, 0).map(0, f),
        ),
    ));
    Ok(r)
}

/// A basis of the space of module morphisms `m → n`, found as the solution
/// space of the linear conditions `f·X = Y·f` for every structure operator.
pub fn hom_space(m: &YdlModule, n: &YdlModule) -> Result<Vec<LinMap>> {
    compatible(m, n)?;
    let k = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let mut pairs: Vec<(Matrix, Matrix)> = Vec::new();
    for h in 0..m.h1().dim() {
        pairs.push((m.left_action_of(h), n.left_action_of(h)));
        pairs.push((m.left_coaction_part(h), n.left_coaction_part(h)));
    }
    for h in 0..m.h2().dim() {
        pairs.push((m.right_action_of(h), n.right_action_of(h)));
        pairs.push((m.right_coaction_part(h), n.right_coaction_part(h)));
    }
    // unknown f[r][c] at position r·dm + c; one equation per (pair, r, c')
    let mut system = SparseEchelon::new(k, dn * dm);
    for (x, y) in &pairs {
        for r in 0..dn {
            for c2 in 0..dm {
                let mut row: BTreeMap<usize, Scalar> = BTreeMap::new();
                for c in 0..dm {
                    let v = x.get(c, c2);
                    if !v.is_zero() {
                        *row.entry(r * dm + c).or_insert_with(|| k.zero()) += v;
                    }
                }
                for r2 in 0..dn {
                    let v = y.get(r, r2);
                    if !v.is_zero() {
                        *row.entry(r2 * dm + c2).or_insert_with(|| k.zero()) -= v;
                    }
                }
                system.insert(row);
            }
        }
    }
    Ok(system
        .nullspace()
        .into_iter()
        .map(|v| LinMap::new(Matrix::from_fn(k, dn, dm, |r, c| v.get(r * dm + c, 0).clone())))
        .collect())
}
