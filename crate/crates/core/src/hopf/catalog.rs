use crate::error::{Error, Result};
use crate::exactlin::{FieldCtx, LinMap, Matrix, Scalar};
use crate::grpalg::GroupTable;

use super::{HopfAlgebra, HopfData};

/// The group algebra `k[G]`: Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹.
pub fn group_algebra(table: &GroupTable, field: FieldCtx) -> HopfAlgebra {
    let n = table.order();
    let one = field.one();
    let mut mult = Matrix::zeros(field, n, n * n);
    let mut comult = Matrix::zeros(field, n * n, n);
    let mut antipode = Matrix::zeros(field, n, n);
    for a in 0..n {
        for b in 0..n {
            mult.set(table.mul(a, b), a * n + b, one.clone());
        }
        comult.set(a * n + a, a, one.clone());
        antipode.set(table.inv(a), a, one.clone());
    }
    let mut unit = Matrix::zeros(field, n, 1);
    unit.set(table.identity(), 0, one.clone());
    let counit = Matrix::from_fn(field, 1, n, |_, _| one.clone());
    HopfAlgebra::new(HopfData {
        name: format!("k[G{n}]"),
        labels: table.labels().to_vec(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    })
    .expect("group algebra data is well-formed")
}

/// The dual Hopf algebra on the dual basis: every structure map is
/// transposed, with multiplication and comultiplication trading places.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    HopfAlgebra::new(HopfData {
        name: format!("{}*", h.name()),
        labels: h.labels().iter().map(|l| format!("{l}*")).collect(),
        mult: h.comult().matrix().transpose(),
        unit: h.counit().matrix().transpose(),
        comult: h.mult().matrix().transpose(),
        counit: h.unit().matrix().transpose(),
        antipode: h.antipode().matrix().transpose(),
    })
    .expect("transposed data is well-formed")
}

/// Sweedler's four-dimensional algebra on the basis `{1, g, x, gx}`:
/// g² = 1, x² = 0, xg = −gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, S(x) = −gx.
pub fn sweedler_h4(field: FieldCtx) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::InvalidField(
            "Sweedler's algebra needs characteristic other than 2".into(),
        ));
    }
    const ONE: usize = 0;
    const G: usize = 1;
    const X: usize = 2;
    const GX: usize = 3;
    let n = 4;
    let idx = |a: usize, b: usize| a * n + b;

    // (a, b, product, sign); products not listed vanish
    let table = [
        (ONE, ONE, ONE, 1),
        (ONE, G, G, 1),
        (ONE, X, X, 1),
        (ONE, GX, GX, 1),
        (G, ONE, G, 1),
        (X, ONE, X, 1),
        (GX, ONE, GX, 1),
        (G, G, ONE, 1),
        (G, X, GX, 1),
        (G, GX, X, 1),
        (X, G, GX, -1),
        (GX, G, X, -1),
    ];
    let mut mult = Matrix::zeros(field, n, n * n);
    for (a, b, c, s) in table {
        mult.set(c, idx(a, b), field.from_i64(s));
    }

    let comult = Matrix::from_triples(
        field,
        n * n,
        n,
        [
            (idx(ONE, ONE), ONE, 1),
            (idx(G, G), G, 1),
            (idx(X, ONE), X, 1),
            (idx(G, X), X, 1),
            (idx(GX, G), GX, 1),
            (idx(ONE, GX), GX, 1),
        ]
        .into_iter()
        .map(|(r, c, v)| (r, c, field.from_i64(v))),
    )?;
    let unit = Matrix::column(field, vec![field.one(), field.zero(), field.zero(), field.zero()]);
    let counit = Matrix::from_i64(field, &[&[1, 1, 0, 0]]);
    let antipode = Matrix::from_triples(
        field,
        n,
        n,
        [(ONE, ONE, 1), (G, G, 1), (GX, X, -1), (X, GX, 1)]
            .into_iter()
            .map(|(r, c, v)| (r, c, field.from_i64(v))),
    )?;
    HopfAlgebra::new(HopfData {
        name: "H4".into(),
        labels: ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    })
}

/// The Hopf endomorphism of Sweedler's algebra fixing `1, g` and scaling
/// `x, gx` by `lambda`; an automorphism iff `lambda ≠ 0`.
pub fn h4_scaling(field: FieldCtx, lambda: &Scalar) -> LinMap {
    let mut m = Matrix::identity(field, 4);
    m.set(2, 2, lambda.clone());
    m.set(3, 3, lambda.clone());
    LinMap::new(m)
}
