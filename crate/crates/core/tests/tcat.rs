use ydlong_core::autgroup::{inv_g, mul_g, unit_g};
use ydlong_core::catalog::{self, h4_blocks};
use ydlong_core::exactlin::{FieldCtx, LinMap, Matrix};
use ydlong_core::grpalg::GroupTable;
use ydlong_core::tcat::{
    braiding, check_braiding_naturality, check_hexagons, check_phi_compat, conjugate_module, left_dual, right_dual,
    tensor_module, unit_module,
};
use ydlong_core::ydl::{full_report, hom_space, is_ydl_morphism, trivial_module, YdlModule};
use ydlong_core::Error;

const Q: FieldCtx = FieldCtx::Rational;
const F7: FieldCtx = FieldCtx::Prime(7);

fn assert_valid(m: &YdlModule) {
    let r = full_report(m);
    assert!(r.passed(), "{r}");
}

fn block(field: FieldCtx, scales: [i64; 4], left: &[usize], right: &[usize]) -> YdlModule {
    let h = catalog::h4(field).unwrap();
    let x = catalog::h4_component(&h, scales).unwrap();
    catalog::regular_block(&x, left, right).unwrap()
}

/// Three H4 modules sharing one algebra instance, in different components.
fn h4_trio(field: FieldCtx) -> (YdlModule, YdlModule, YdlModule) {
    let h = catalog::h4(field).unwrap();
    let x = catalog::h4_component(&h, [2, 3, -1, 5]).unwrap();
    let y = catalog::h4_component(&h, [-1, 1, 3, 3]).unwrap();
    let z = catalog::h4_component(&h, [3, 3, 2, 2]).unwrap();
    let m = catalog::regular_block(&x, h4_blocks::LEFT_EVEN, h4_blocks::RIGHT_ODD).unwrap();
    let q = catalog::h4_sign_quadruple(&h, &h).unwrap();
    let n = trivial_module(1, &q, &y).unwrap();
    let p = catalog::regular_block(&z, h4_blocks::UNIT, h4_blocks::UNIT).unwrap();
    (m, n, p)
}

#[test]
fn tensor_products_are_modules() {
    for field in [Q, F7] {
        let (m, n, p) = h4_trio(field);
        for (a, b) in [(&m, &n), (&n, &m), (&m, &m), (&m, &p)] {
            let t = tensor_module(a, b).unwrap();
            assert_valid(&t);
            assert_eq!(*t.component(), mul_g(a.component(), b.component()).unwrap());
        }
    }
}

#[test]
fn unit_object_is_a_strict_unit() {
    let (m, _, _) = h4_trio(Q);
    let k = unit_module(&m);
    assert_valid(&k);
    let km = tensor_module(&k, &m).unwrap();
    let mk = tensor_module(&m, &k).unwrap();
    assert!(km == m, "k ⊗ M differs from M");
    assert!(mk == m, "M ⊗ k differs from M");
}

#[test]
fn tensor_product_is_strictly_associative() {
    let (m, n, p) = h4_trio(Q);
    let left = tensor_module(&tensor_module(&m, &n).unwrap(), &p).unwrap();
    let right = tensor_module(&m, &tensor_module(&n, &p).unwrap()).unwrap();
    assert!(left == right);
}

#[test]
fn tensor_of_different_algebras_is_rejected() {
    let a = block(Q, [1, 1, 1, 1], h4_blocks::LEFT_EVEN, h4_blocks::RIGHT_EVEN);
    let c2 = catalog::group(&GroupTable::cyclic(2), Q);
    let b = catalog::twisted_regular(&unit_g(c2.clone(), c2)).unwrap();
    assert!(matches!(tensor_module(&a, &b), Err(Error::AlgebraMismatch(_))));
    // separately built copies of the same algebra are interchangeable
    let c = block(Q, [1, 1, 1, 1], h4_blocks::LEFT_EVEN, h4_blocks::RIGHT_EVEN);
    assert!(tensor_module(&a, &c).is_ok());
}

#[test]
fn conjugation_is_a_group_action_preserving_tensor_products() {
    let (m, n, p) = h4_trio(Q);
    let (x, y) = (m.component(), n.component());
    let cp = conjugate_module(x, &p).unwrap();
    assert_valid(&cp);
    let twice = conjugate_module(x, &conjugate_module(y, &p).unwrap()).unwrap();
    let once = conjugate_module(&mul_g(x, y).unwrap(), &p).unwrap();
    assert!(twice == once);
    let unit = unit_g(m.h1().clone(), m.h2().clone());
    assert!(conjugate_module(&unit, &p).unwrap() == p);
    let back = conjugate_module(&inv_g(x), &cp).unwrap();
    assert!(back == p);
    let np = tensor_module(&n, &p).unwrap();
    let lhs = conjugate_module(x, &np).unwrap();
    let rhs = tensor_module(&conjugate_module(x, &n).unwrap(), &cp).unwrap();
    assert!(lhs == rhs);
}

#[test]
fn braiding_is_an_isomorphism_of_modules() {
    for field in [Q, F7] {
        let (m, n, p) = h4_trio(field);
        for (a, b) in [(&m, &n), (&n, &m), (&m, &m), (&p, &m), (&m, &p)] {
            let c = braiding(a, b).unwrap();
            let r = c.check(a, b).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn braiding_of_blocks_across_components() {
    let h = catalog::h4(Q).unwrap();
    let x = catalog::h4_component(&h, [2, 3, -1, 5]).unwrap();
    let y = catalog::h4_component(&h, [-1, 2, 5, 3]).unwrap();
    let m = catalog::regular_block(&x, h4_blocks::LEFT_ODD, h4_blocks::RIGHT_EVEN).unwrap();
    let n = catalog::regular_block(&y, h4_blocks::LEFT_EVEN, h4_blocks::RIGHT_ODD).unwrap();
    let r = braiding(&m, &n).unwrap().check(&m, &n).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn braiding_of_trivial_modules_is_the_flip() {
    let c2 = catalog::group(&GroupTable::cyclic(2), Q);
    let k = unit_module(&catalog::twisted_regular(&unit_g(c2.clone(), c2)).unwrap());
    let q = ydlong_core::ydl::InvolutionQuadruple::counits(k.h1().clone(), k.h2().clone());
    let a = trivial_module(2, &q, k.component()).unwrap();
    let b = trivial_module(3, &q, k.component()).unwrap();
    let c = braiding(&a, &b).unwrap();
    assert!(c.map.matrix() == LinMap::flip(Q, 2, 3).matrix());
}

#[test]
fn hexagons_hold() {
    for field in [Q, F7] {
        let (m, n, p) = h4_trio(field);
        for (a, b, c) in [(&m, &n, &p), (&n, &m, &p), (&p, &n, &m), (&n, &n, &m)] {
            let r = check_hexagons(a, b, c).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn hexagons_on_group_algebras() {
    let g = GroupTable::cyclic(3);
    let h = catalog::group(&g, Q);
    let inv = g.power_map(2);
    let id: Vec<usize> = (0..3).collect();
    let x = catalog::group_component(&g, &h, &g, &h, [&inv, &id, &id, &inv]).unwrap();
    let y = catalog::group_component(&g, &h, &g, &h, [&id, &inv, &inv, &id]).unwrap();
    let m = catalog::twisted_regular(&x).unwrap();
    let q = ydlong_core::ydl::InvolutionQuadruple::counits(h.clone(), h.clone());
    let z = catalog::group_component(&g, &h, &g, &h, [&inv, &inv, &id, &id]).unwrap();
    let n = trivial_module(2, &q, &z).unwrap();
    let p = catalog::twisted_regular(&y).unwrap();
    let r = check_hexagons(&n, &m, &n).unwrap();
    assert!(r.passed(), "{r}");
    let r = check_hexagons(&n, &n, &p).unwrap();
    assert!(r.passed(), "{r}");
    let r = braiding(&m, &p).unwrap().check(&m, &p).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn braiding_is_natural() {
    let (m, n, _) = h4_trio(Q);
    let t = Matrix::from_i64(Q, &[&[1, 2, 0, 0], &[0, 1, 0, 3], &[0, 0, 1, 0], &[1, 0, 0, 1]]);
    let m2 = m.transport(&t).unwrap();
    let homs = hom_space(&m, &m2).unwrap();
    assert!(!homs.is_empty());
    let g = LinMap::identity(Q, n.dim()).scale(&Q.from_i64(-3));
    for f in homs.iter().chain([&LinMap::new(t.clone())]) {
        let r = check_braiding_naturality(f, &g, &m, &m2, &n, &n).unwrap();
        assert!(r.passed, "{r:?}");
        let r = check_braiding_naturality(&g, f, &n, &n, &m, &m2).unwrap();
        assert!(r.passed, "{r:?}");
    }
    let bad = LinMap::new(Matrix::from_fn(Q, 4, 4, |r, c| Q.from_i64((r * c) as i64 + 1)));
    assert!(!is_ydl_morphism(&bad, &m, &m2).unwrap().passed());
    assert!(matches!(
        check_braiding_naturality(&bad, &g, &m, &m2, &n, &n),
        Err(Error::NotMorphism(_))
    ));
}

#[test]
fn braiding_is_invariant_under_conjugation() {
    let (m, n, p) = h4_trio(Q);
    for (a, b, c) in [(&p, &m, &n), (&m, &n, &m), (&n, &m, &p)] {
        assert!(check_phi_compat(a, b, c).unwrap().passed);
    }
}

#[test]
fn left_and_right_duals() {
    for field in [Q, F7] {
        let (m, n, p) = h4_trio(field);
        for x in [&m, &n, &p] {
            for d in [left_dual(x).unwrap(), right_dual(x).unwrap()] {
                let r = d.check(x).unwrap();
                assert!(r.passed(), "{r}");
                assert_eq!(d.dual.dim(), x.dim());
            }
        }
    }
}

#[test]
fn dual_delta_slot_reading() {
    let (m, _, _) = h4_trio(Q);
    let r = left_dual(&m).unwrap().check(&m).unwrap();
    println!("{r}");
    assert!(r.get("right condition with δ-slot γδ⁻¹γ⁻¹").unwrap().passed);
    // δ = α₅ has δ² ≠ id, so the other reading is distinguishable and fails
    assert!(!r.get("right condition with δ-slot γδγ⁻¹").unwrap().passed);
}

#[test]
fn duals_agree_for_group_algebras() {
    let g = GroupTable::symmetric3();
    let h = catalog::group(&g, Q);
    let c2t = GroupTable::cyclic(2);
    let c2 = catalog::group(&c2t, Q);
    let id2 = vec![0, 1];
    let x = catalog::group_component(&g, &h, &c2t, &c2, [&g.conjugation(1), &g.conjugation(3), &id2, &id2]).unwrap();
    let m = catalog::twisted_regular(&x).unwrap();
    let l = left_dual(&m).unwrap();
    let r = right_dual(&m).unwrap();
    assert!(l.check(&m).unwrap().passed());
    assert!(r.check(&m).unwrap().passed());
    assert!(l.dual == r.dual);
}
