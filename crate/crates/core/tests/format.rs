use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ydlong_core::catalog::{self, h4_blocks};
use ydlong_core::exactlin::{FieldCtx, LinMap, Matrix};
use ydlong_core::format::{self, Document};
use ydlong_core::grpalg::{random_graded, GradedSetting, GroupQuadruple, GroupTable, RandomShape};
use ydlong_core::hopf::{dual_hopf, same_algebra, sweedler_h4, HopfAlgebra};
use ydlong_core::ydl::{InvolutionQuadruple, Structure};
use ydlong_core::Error;

const Q: FieldCtx = FieldCtx::Rational;
const F7: FieldCtx = FieldCtx::Prime(7);

fn same_hopf(a: &HopfAlgebra, b: &HopfAlgebra) -> bool {
    let (a, b) = (std::sync::Arc::new(a.clone()), std::sync::Arc::new(b.clone()));
    a.name() == b.name() && a.labels() == b.labels() && a.field() == b.field() && same_algebra(&a, &b)
}

fn catalog_algebras(field: FieldCtx) -> Vec<HopfAlgebra> {
    let s3 = catalog::group(&GroupTable::symmetric3(), field);
    vec![
        sweedler_h4(field).unwrap(),
        (*catalog::group(&GroupTable::cyclic(2), field)).clone(),
        (*catalog::group(&GroupTable::cyclic(4), field)).clone(),
        (*s3).clone(),
        dual_hopf(&s3),
    ]
}

#[test]
fn algebras_round_trip() {
    for field in [Q, F7] {
        for h in catalog_algebras(field) {
            let text = format::write_hopf(&h);
            let back = format::parse_hopf(&text).unwrap();
            assert!(same_hopf(&h, &back), "{}", h.name());
            assert_eq!(format::write_hopf(&back), text);
        }
    }
}

#[test]
fn sweedler_file_is_readable() {
    let text = format::write_hopf(&sweedler_h4(Q).unwrap());
    assert!(text.starts_with("field rational\nhopf "));
    // one entry per nonzero structure constant, indices then value
    assert!(text.lines().any(|l| l == "0 0 0 1"));
    let f7 = format::write_hopf(&sweedler_h4(F7).unwrap());
    assert!(f7.starts_with("field prime 7\n"));
    let values = f7.lines().filter(|l| l.starts_with(|c: char| c.is_ascii_digit()));
    assert!(
        values.into_iter().all(|l| !l.contains('-')),
        "residues are written without sign"
    );
}

#[test]
fn modules_round_trip() {
    for field in [Q, F7] {
        let h = catalog::h4(field).unwrap();
        let x = catalog::h4_component(&h, [-1, 1, 3, 3]).unwrap();
        let c3 = catalog::group(&GroupTable::cyclic(3), field);
        let c2 = catalog::group(&GroupTable::cyclic(2), field);
        let unit = ydlong_core::autgroup::unit_g(c3, c2);
        for m in [
            catalog::twisted_regular(&x).unwrap(),
            catalog::regular_block(&x, h4_blocks::LEFT_EVEN, h4_blocks::RIGHT_ODD).unwrap(),
            catalog::twisted_regular(&unit).unwrap(),
        ] {
            let text = format::write_module(&m);
            let back = format::parse_module(&text).unwrap();
            assert!(back == m);
            assert_eq!(format::write_module(&back), text);
        }
    }
}

#[test]
fn shared_algebra_is_written_once() {
    let h = catalog::h4(Q).unwrap();
    let x = catalog::h4_component(&h, [1, 1, 1, 1]).unwrap();
    let text = format::write_module(&catalog::twisted_regular(&x).unwrap());
    assert!(text.contains("algebra h2 = h1\n"));
    let back = format::parse_module(&text).unwrap();
    assert!(std::sync::Arc::ptr_eq(back.h1(), back.h2()));
}

#[test]
fn quadruples_round_trip() {
    let h = catalog::h4(Q).unwrap();
    for q in [
        catalog::h4_sign_quadruple(&h, &h).unwrap(),
        InvolutionQuadruple::counits(h.clone(), h.clone()),
    ] {
        let text = format::write_quadruple(&q);
        let back = format::parse_quadruple(&text).unwrap();
        assert_eq!((&back.f1, &back.g1, &back.f2, &back.g2), (&q.f1, &q.g1, &q.f2, &q.g2));
        assert_eq!(format::write_quadruple(&back), text);
    }
}

#[test]
fn graded_modules_round_trip() {
    let s = GradedSetting::new(GroupTable::symmetric3(), GroupTable::cyclic(2), Q);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let shape = RandomShape {
        min_components: 4,
        max_mult: 2,
        max_dim: 10,
    };
    let m = random_graded(&s, &GroupQuadruple::identity(&s), shape, &mut rng).unwrap();
    let text = format::write_graded(&m);
    let back = format::parse_graded(&text).unwrap();
    assert_eq!(back.degrees(), m.degrees());
    assert!(back.to_generic().unwrap() == m.to_generic().unwrap());
    assert_eq!(format::write_graded(&back), text);
}

#[test]
fn catalog_group_names_are_accepted() {
    let text = "field rational\ngraded\ngroup g1 C3\ngroup g2 trivial\n\
                perm alpha 0 1 2\nperm beta 0 1 2\nperm gamma 0\nperm delta 0\n\
                component 0 0 1\n\
                block left 0 0 0\n0 0 1\nend\nblock left 1 0 0\n0 0 1\nend\n\
                block left 2 0 0\n0 0 1\nend\nblock right 0 0 0\n0 0 1\nend\n";
    let m = format::parse_graded(text).unwrap();
    assert_eq!(m.dim(), 1);
    assert!(ydlong_core::ydl::full_report(&m.to_generic().unwrap()).passed());
}

fn is_parse_at(e: &Error, line: usize) -> bool {
    matches!(e, Error::Parse { line: l, .. } if *l == line)
}

#[test]
fn syntax_errors_carry_their_line() {
    let good = format::write_hopf(&sweedler_h4(Q).unwrap());
    let e = format::parse("field real\n").unwrap_err();
    assert!(is_parse_at(&e, 1), "{e}");
    let e = format::parse(&good.replacen("0 0 0 1", "0 0 0 one", 1)).unwrap_err();
    let line = good.lines().position(|l| l == "0 0 0 1").unwrap() + 1;
    assert!(is_parse_at(&e, line), "{e}");
    let e = format::parse(&good.replacen("0 0 0 1", "0 0 9 1", 1)).unwrap_err();
    assert!(e.is_parse(), "{e}");
    let truncated: String = good.lines().take(5).map(|l| format!("{l}\n")).collect();
    assert!(format::parse(&truncated).unwrap_err().is_parse());
    assert!(format::parse(&format!("{good}extra\n")).unwrap_err().is_parse());
    assert!(format::parse_module(&good).unwrap_err().is_parse());
}

#[test]
fn semantic_errors_are_not_parse_errors() {
    let good = format::write_hopf(&sweedler_h4(Q).unwrap());
    // an antipode that is not invertible
    let start = good.find("map antipode").unwrap();
    let singular = format!("{}map antipode 4 -> 4\nend\n", &good[..start]);
    let e = format::parse(&singular).unwrap_err();
    assert!(!e.is_parse() && matches!(e, Error::At { .. }), "{e}");
    // declared dimensions disagree with the labels
    let e = format::parse(&good.replacen("map unit -> 4", "map unit -> 3", 1)).unwrap_err();
    assert!(!e.is_parse(), "{e}");
    let e = format::parse("field prime 8\nhopf x\n").unwrap_err();
    assert!(!e.is_parse(), "{e}");

    let h = catalog::h4(Q).unwrap();
    let x = catalog::h4_component(&h, [1, 1, 1, 1]).unwrap();
    let text = format::write_module(&catalog::twisted_regular(&x).unwrap());
    // an alpha that is not a Hopf automorphism
    let bad = text.replacen("map alpha 4 -> 4\n", "map alpha 4 -> 4\n0 1 7\n", 1);
    let e = format::parse(&bad).unwrap_err();
    assert!(matches!(&e, Error::At { source, .. } if !source.is_parse()), "{e}");
}

fn arb_scalar_text() -> impl Strategy<Value = (i64, i64)> {
    (-1_000_000_000i64..1_000_000_000, 1i64..50)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn arbitrary_entries_round_trip(
        entries in proptest::collection::vec((0usize..16, 0usize..64, arb_scalar_text()), 0..20),
        prime in prop::bool::ANY,
    ) {
        let field = if prime { F7 } else { Q };
        let h = catalog::h4(field).unwrap();
        let x = catalog::h4_component(&h, [1, 1, 1, 1]).unwrap();
        let m = catalog::twisted_regular(&x).unwrap();
        assert_eq!(m.dim(), 16);
        let mut la = Matrix::zeros(field, 16, 64);
        for (r, c, (n, d)) in entries {
            la.set(r, c, field.from_ratio(n, if prime && d % 7 == 0 { 1 } else { d }).unwrap());
        }
        let m = m.with_structure(Structure::LeftAction, LinMap::new(la)).unwrap();
        let text = format::write_module(&m);
        let back = format::parse_module(&text).unwrap();
        prop_assert!(back == m);
    }

    #[test]
    fn random_graded_round_trip(seed in any::<u64>(), c4 in prop::bool::ANY, prime in prop::bool::ANY) {
        let field = if prime { F7 } else { Q };
        let g1 = if c4 { GroupTable::cyclic(4) } else { GroupTable::symmetric3() };
        let s = GradedSetting::new(g1, GroupTable::cyclic(2), field);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = RandomShape { min_components: 3, max_mult: 2, max_dim: 8 };
        let m = random_graded(&s, &GroupQuadruple::identity(&s), shape, &mut rng).unwrap();
        let doc = Document::Graded(m.clone());
        let back = format::parse(&format::write(&doc)).unwrap();
        let Document::Graded(back) = back else { panic!("kind changed") };
        prop_assert!(back.to_generic().unwrap() == m.to_generic().unwrap());
    }
}
