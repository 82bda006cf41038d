use ydlong_core::autgroup::unit_g;
use ydlong_core::catalog::{self, h4_blocks};
use ydlong_core::exactlin::{FieldCtx, LinMap, Matrix};
use ydlong_core::grpalg::{compose_perm, GroupTable};
use ydlong_core::ydl::axioms::names;
use ydlong_core::ydl::{
    check_bimodule_bicomodule, check_equivalent_forms, check_involution_quadruple, check_ydl_axioms, full_report,
    hom_space, is_ydl_morphism, trivial_module, InvolutionQuadruple, Structure, YdlModule,
};
use ydlong_core::Error;

const Q: FieldCtx = FieldCtx::Rational;
const F7: FieldCtx = FieldCtx::Prime(7);

fn assert_valid(m: &YdlModule) {
    let r = full_report(m);
    assert!(r.passed(), "{r}");
}

#[test]
fn unit_module_over_c2() {
    let c2 = catalog::group(&GroupTable::cyclic(2), Q);
    let q = InvolutionQuadruple::counits(c2.clone(), c2.clone());
    let k = trivial_module(1, &q, &unit_g(c2.clone(), c2)).unwrap();
    assert_valid(&k);
}

#[test]
fn counit_quadruple_fits_any_alpha_alpha_gamma_gamma() {
    for field in [Q, F7] {
        let h = catalog::h4(field).unwrap();
        let x = catalog::h4_component(&h, [3, 3, -2, -2]).unwrap();
        let q = InvolutionQuadruple::counits(h.clone(), h.clone());
        assert!(check_involution_quadruple(&q, &x).unwrap().passed());
        assert_valid(&trivial_module(2, &q, &x).unwrap());
    }
}

#[test]
fn h4_sign_quadruple_pins_alpha() {
    let h = catalog::h4(Q).unwrap();
    let q = catalog::h4_sign_quadruple(&h, &h).unwrap();
    for lambda in [-1, 1, 2] {
        let x = catalog::h4_component(&h, [lambda, 1, 5, 5]).unwrap();
        let ok = check_involution_quadruple(&q, &x).unwrap().passed();
        assert_eq!(ok, lambda == -1, "λ = {lambda}");
    }
    let x = catalog::h4_component(&h, [-1, 1, 5, 5]).unwrap();
    let v = trivial_module(1, &q, &x).unwrap();
    assert_valid(&v);
    // wrong target is rejected
    let y = catalog::h4_component(&h, [2, 1, 5, 5]).unwrap();
    assert!(matches!(trivial_module(1, &q, &y), Err(Error::InvalidQuadruple(_))));
}

#[test]
fn counit_actions_would_break_the_sign_quadruple_example() {
    let h = catalog::h4(Q).unwrap();
    let x = catalog::h4_component(&h, [-1, 1, 5, 5]).unwrap();
    let q = catalog::h4_sign_quadruple(&h, &h).unwrap();
    let v = trivial_module(1, &q, &x).unwrap();
    let eps = LinMap::new(h.counit().matrix().clone());
    let with_counit = v.with_structure(Structure::LeftAction, eps).unwrap();
    let r = check_ydl_axioms(&with_counit);
    assert!(!r.passed_named(names::LEFT_LONG));
}

#[test]
fn group_quadruple_with_inner_twists() {
    let g = GroupTable::symmetric3();
    let h = catalog::group(&g, Q);
    let (t, u) = (3, 1);
    let id: Vec<usize> = (0..6).collect();
    let gamma = g.conjugation(2);
    let delta = compose_perm(&g.conjugation(g.inv(u)), &gamma);
    let x = catalog::group_component(&g, &h, &g, &h, [&g.conjugation(t), &id, &gamma, &delta]).unwrap();
    let f = Q;
    let e = |k: usize| {
        (0..6)
            .map(|i| if i == k { f.one() } else { f.zero() })
            .collect::<Vec<_>>()
    };
    let eps = vec![f.one(); 6];
    let q = InvolutionQuadruple::new(h.clone(), h.clone(), eps.clone(), e(t), eps, e(u)).unwrap();
    let r = check_involution_quadruple(&q, &x).unwrap();
    assert!(r.passed(), "{r}");
    assert_valid(&trivial_module(2, &q, &x).unwrap());
    // the inverse conjugator does not fit
    let wrong = catalog::group_component(&g, &h, &g, &h, [&g.conjugation(g.inv(t)), &id, &gamma, &delta]).unwrap();
    assert!(!check_involution_quadruple(&q, &wrong).unwrap().passed());
}

#[test]
fn twisted_regular_modules_are_valid() {
    for field in [Q, F7] {
        let h = catalog::h4(field).unwrap();
        for scales in [[1, 1, 1, 1], [2, 3, -1, 5], [-1, 1, 3, 3]] {
            let x = catalog::h4_component(&h, scales).unwrap();
            assert_valid(&catalog::twisted_regular(&x).unwrap());
        }
    }
    let g = GroupTable::symmetric3();
    let s3 = catalog::group(&g, Q);
    let c2 = catalog::group(&GroupTable::cyclic(2), Q);
    let c2t = GroupTable::cyclic(2);
    let id2 = vec![0, 1];
    let x = catalog::group_component(&g, &s3, &c2t, &c2, [&g.conjugation(1), &g.conjugation(3), &id2, &id2]).unwrap();
    assert_valid(&catalog::twisted_regular(&x).unwrap());
}

#[test]
fn h4_blocks_are_submodules() {
    let h = catalog::h4(Q).unwrap();
    let x = catalog::h4_component(&h, [2, 3, -1, 5]).unwrap();
    for left in [h4_blocks::LEFT_EVEN, h4_blocks::LEFT_ODD] {
        for right in [h4_blocks::RIGHT_EVEN, h4_blocks::RIGHT_ODD] {
            let m = catalog::regular_block(&x, left, right).unwrap();
            assert_eq!(m.dim(), 4);
            assert_valid(&m);
        }
    }
    assert!(catalog::regular_block(&x, h4_blocks::UNIT, h4_blocks::RIGHT_EVEN).is_err());
    let y = catalog::h4_component(&h, [2, 2, -1, -1]).unwrap();
    let m = catalog::regular_block(&y, h4_blocks::UNIT, h4_blocks::UNIT).unwrap();
    assert_eq!(m.dim(), 1);
    assert_valid(&m);
    // the right-hand blocks are not stable on the left
    assert!(catalog::regular_block(&x, h4_blocks::RIGHT_EVEN, h4_blocks::RIGHT_EVEN).is_err());
}

#[test]
fn regular_left_module_is_a_bimodule_bicomodule() {
    let h = catalog::h4(Q).unwrap();
    let c2 = catalog::group(&GroupTable::cyclic(2), Q);
    let x = unit_g(h, c2);
    let m = catalog::regular_left_module(&x).unwrap();
    assert!(check_bimodule_bicomodule(&m).passed());
}

#[test]
fn non_unital_action_is_caught() {
    let c2 = catalog::group(&GroupTable::cyclic(2), Q);
    let q = InvolutionQuadruple::counits(c2.clone(), c2.clone());
    let k = trivial_module(1, &q, &unit_g(c2.clone(), c2)).unwrap();
    let doubled = k.left_action().scale(&Q.from_i64(2));
    let bad = k.with_structure(Structure::LeftAction, doubled).unwrap();
    let r = check_bimodule_bicomodule(&bad);
    assert!(!r.passed_named(names::LEFT_UNIT));
}

/// Twisting one structure map by a nontrivial Hopf automorphism keeps the
/// bimodule/bicomodule axioms but breaks the twisted condition on that side
/// (and its explicit form), and nothing else.
#[test]
fn fault_injection_flips_exactly_the_predicted_conditions() {
    let h = catalog::h4(Q).unwrap();
    let x = catalog::h4_component(&h, [2, 3, -1, 5]).unwrap();
    let m = catalog::regular_block(&x, h4_blocks::LEFT_EVEN, h4_blocks::RIGHT_EVEN).unwrap();
    let phi = catalog::h4_aut(&h, 3).unwrap();
    let d = m.dim();
    let id_m = LinMap::identity(Q, d);
    let phi_id = phi.map().tensor(&id_m).unwrap();
    let id_phi = id_m.tensor(phi.map()).unwrap();
    let cases = [
        (Structure::LeftAction, m.left_action().compose(&phi_id).unwrap(), true),
        (
            Structure::LeftCoaction,
            phi_id.compose(m.left_coaction()).unwrap(),
            true,
        ),
        (
            Structure::RightAction,
            m.right_action().compose(&id_phi).unwrap(),
            false,
        ),
        (
            Structure::RightCoaction,
            id_phi.compose(m.right_coaction()).unwrap(),
            false,
        ),
    ];
    for (which, map, left_side) in cases {
        let bad = m.with_structure(which, map).unwrap();
        assert!(check_bimodule_bicomodule(&bad).passed(), "{which:?}");
        let ax = check_ydl_axioms(&bad);
        let eq = check_equivalent_forms(&bad);
        assert_eq!(ax.passed_named(names::LEFT_LONG), !left_side, "{which:?}");
        assert_eq!(ax.passed_named(names::RIGHT_LONG), left_side, "{which:?}");
        assert!(ax.passed_named(names::LEFT_ACTION_RIGHT_COLINEAR));
        assert!(ax.passed_named(names::RIGHT_ACTION_LEFT_COLINEAR));
        assert_eq!(eq.passed_named(names::LEFT_COACTION_OF_ACTION), !left_side);
        assert_eq!(eq.passed_named(names::RIGHT_COACTION_OF_ACTION), left_side);
        assert!(eq.passed_named(names::LEFT_FORMS_AGREE));
        assert!(eq.passed_named(names::RIGHT_FORMS_AGREE));
    }
}

#[test]
fn wrong_delta_breaks_the_right_condition() {
    let h = catalog::h4(Q).unwrap();
    let x = catalog::h4_component(&h, [2, 3, -1, 5]).unwrap();
    let m = catalog::regular_block(&x, h4_blocks::LEFT_EVEN, h4_blocks::RIGHT_EVEN).unwrap();
    let y = catalog::h4_component(&h, [2, 3, -1, 4]).unwrap();
    let bad = m.with_component(y).unwrap();
    let r = check_ydl_axioms(&bad);
    assert!(!r.passed_named(names::RIGHT_LONG));
    assert!(r.passed_named(names::LEFT_LONG));
}

#[test]
fn morphisms() {
    let h = catalog::h4(Q).unwrap();
    let x = catalog::h4_component(&h, [2, 3, -1, 5]).unwrap();
    let m = catalog::regular_block(&x, h4_blocks::LEFT_EVEN, h4_blocks::RIGHT_EVEN).unwrap();
    let d = m.dim();
    assert!(is_ydl_morphism(&LinMap::identity(Q, d), &m, &m).unwrap().passed());
    assert!(is_ydl_morphism(&LinMap::zero(Q, d, d), &m, &m).unwrap().passed());
    let random = LinMap::new(Matrix::from_fn(Q, d, d, |r, c| {
        Q.from_i64((3 * r + 5 * c) as i64 % 7 - 2)
    }));
    let r = is_ydl_morphism(&random, &m, &m).unwrap();
    assert!(!r.passed());
    assert!(!r.failed_names().is_empty());

    // a coordinate change is an isomorphism onto the transported module
    let t = Matrix::from_i64(Q, &[&[1, 2, 0, 0], &[0, 1, 0, 3], &[0, 0, 1, 0], &[1, 0, 0, 1]]);
    let m2 = m.transport(&t).unwrap();
    assert_valid(&m2);
    assert!(is_ydl_morphism(&LinMap::new(t.clone()), &m, &m2).unwrap().passed());
    let homs = hom_space(&m, &m2).unwrap();
    assert!(!homs.is_empty());
    for f in &homs {
        assert!(is_ydl_morphism(f, &m, &m2).unwrap().passed());
    }

    let other = catalog::h4_component(&h, [2, 3, -1, 4]).unwrap();
    let n = catalog::twisted_regular(&other).unwrap();
    assert!(matches!(
        is_ydl_morphism(&LinMap::zero(Q, n.dim(), d), &m, &n),
        Err(Error::ComponentMismatch(_))
    ));
}
