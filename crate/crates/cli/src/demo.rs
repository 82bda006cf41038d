//! Named catalog objects written by `ydlong demo`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ydlong_core::autgroup::unit_g;
use ydlong_core::catalog::{self, h4_blocks};
use ydlong_core::exactlin::FieldCtx;
use ydlong_core::format::Document;
use ydlong_core::grpalg::{random_graded, GradedSetting, GroupQuadruple, GroupTable, RandomShape};
use ydlong_core::hopf::{dual_hopf, sweedler_h4};
use ydlong_core::ydl::{trivial_module, InvolutionQuadruple};
use ydlong_core::Result;

pub const NAMES: &[&str] = &[
    "sweedler",
    "group:<S3|C<n>|trivial>",
    "dual-group:<S3|C<n>|trivial>",
    "trivial-module",
    "sign-module",
    "h4-block",
    "counit-quadruple",
    "sign-quadruple",
    "graded-demo[:<seed>]",
];

fn group_by_name(name: &str) -> Option<GroupTable> {
    match name {
        "S3" => Some(GroupTable::symmetric3()),
        "trivial" => Some(GroupTable::trivial()),
        _ => match name.strip_prefix('C')?.parse::<usize>() {
            Ok(n) if (1..=64).contains(&n) => Some(GroupTable::cyclic(n)),
            _ => None,
        },
    }
}

/// `None` when the name is not in the catalog.
pub fn build(name: &str, field: FieldCtx) -> Option<Result<Document>> {
    let h4 = || catalog::h4(field);
    let doc = match name {
        "sweedler" => sweedler_h4(field).map(Document::Hopf),
        "trivial-module" => h4().and_then(|h| {
            let q = InvolutionQuadruple::counits(h.clone(), h.clone());
            trivial_module(1, &q, &unit_g(h.clone(), h)).map(Document::Module)
        }),
        "sign-module" => h4().and_then(|h| {
            let q = catalog::h4_sign_quadruple(&h, &h)?;
            let x = catalog::h4_component(&h, [-1, 1, 3, 3])?;
            trivial_module(2, &q, &x).map(Document::Module)
        }),
        "h4-block" => h4().and_then(|h| {
            let x = catalog::h4_component(&h, [2, 3, -1, 5])?;
            catalog::regular_block(&x, h4_blocks::LEFT_EVEN, h4_blocks::RIGHT_ODD).map(Document::Module)
        }),
        "counit-quadruple" => h4().map(|h| Document::Quadruple(InvolutionQuadruple::counits(h.clone(), h))),
        "sign-quadruple" => h4().and_then(|h| catalog::h4_sign_quadruple(&h, &h).map(Document::Quadruple)),
        _ => {
            if let Some(g) = name.strip_prefix("group:") {
                let g = group_by_name(g)?;
                Ok(Document::Hopf((*catalog::group(&g, field)).clone()))
            } else if let Some(g) = name.strip_prefix("dual-group:") {
                let g = group_by_name(g)?;
                Ok(Document::Hopf(dual_hopf(&catalog::group(&g, field))))
            } else if name == "graded-demo" || name.starts_with("graded-demo:") {
                let seed = match name.strip_prefix("graded-demo:") {
                    Some(s) => s.parse().ok()?,
                    None => 0,
                };
                graded_demo(field, seed)
            } else {
                return None;
            }
        }
    };
    Some(doc)
}

/// An S3×C2-graded module in a component with inner twists on both sides
/// of G1.
fn graded_demo(field: FieldCtx, seed: u64) -> Result<Document> {
    let s = GradedSetting::new(GroupTable::symmetric3(), GroupTable::cyclic(2), field);
    let g = s.g1();
    let id2: Vec<usize> = (0..2).collect();
    let x = GroupQuadruple::new(&s, g.conjugation(3), g.conjugation(1), id2.clone(), id2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = RandomShape {
        min_components: 3,
        max_mult: 2,
        max_dim: 4,
    };
    random_graded(&s, &x, shape, &mut rng).map(Document::Graded)
}
