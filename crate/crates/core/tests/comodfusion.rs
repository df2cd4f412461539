use hopfkernel::algebra::HopfAlgebra;
use hopfkernel::comodfusion::{
    dual_pair_certificate, find_iso, fuse, grouplike_comodule, hom_space, regular_block_comodule, simple_comodule,
    smash_blocks, smash_fusion, smash_simple, verify_fusion, verify_smash, verify_smash_fusion, window_simples,
    Comodule, FusionError, Simple, SmashBasis, SmashCoproduct, SmashSpec,
};
use hopfkernel::coanalysis::BlockClass;
use hopfkernel::families::{Monomial, TaftExtension, Tail, Window};
use hopfkernel::lin::Lin;
use hopfkernel::Field;
use proptest::prelude::*;
use std::collections::BTreeSet;

fn bigd_t(n: u32) -> TaftExtension {
    let f = Field::cyclotomic(if n == 2 { 2 } else { 2 * n }).unwrap();
    let w = f.primitive_root(n as u64).unwrap();
    TaftExtension::bigd(&f, n, n, w, vec![(1, f.t().unwrap())], f.one()).unwrap()
}

fn limit2() -> TaftExtension {
    let f = Field::cyclotomic(2).unwrap();
    TaftExtension::limit(&f, 2, f.int(-1), &[1]).unwrap()
}

fn w(e: u32) -> Window {
    Window {
        max_support: 1,
        max_abs_exp: e,
    }
}

#[test]
fn simple_of_a_matrix_block_has_dim_n() {
    for n in [2, 3] {
        let h = bigd_t(n);
        let s = simple_comodule(&h, &Tail::single(1, 1)).unwrap();
        assert_eq!(s.dim(), n as usize);
        assert!(s.check(&h).passed());
    }
}

#[test]
fn grouplike_row_is_one_dimensional() {
    let h = bigd_t(2);
    let r = grouplike_comodule(&h, &Monomial::grouplike(1, Tail::empty())).unwrap();
    assert_eq!(r.dim(), 1);
    assert!(matches!(
        simple_comodule(&h, &Tail::empty()),
        Err(FusionError::NotSimple(_))
    ));
}

#[test]
fn taft_block_simples_are_the_group_likes() {
    let f = Field::cyclotomic(3).unwrap();
    let h = TaftExtension::taft(&f, 3, f.primitive_root(3).unwrap()).unwrap();
    let s = window_simples(&h, w(1));
    let want: Vec<Simple> = (0..3).map(|t| Simple::GroupLike(Monomial::grouplike(t, Tail::empty()))).collect();
    assert_eq!(s, want);
}

#[test]
fn unit_object_is_neutral() {
    let h = bigd_t(3);
    let k = grouplike_comodule(&h, &Monomial::one()).unwrap();
    let s = simple_comodule(&h, &Tail::single(1, -1)).unwrap();
    let ks = Comodule::tensor(&h, &k, &s).unwrap();
    assert!(find_iso(&s, &ks).is_some());
}

#[test]
fn group_likes_multiply() {
    let f = Field::cyclotomic(2).unwrap();
    let h = TaftExtension::bigd(&f, 2, 2, f.int(-1), vec![(1, f.int(-1))], f.one()).unwrap();
    // q = -1: a{1} is group-like
    let a = Simple::GroupLike(Monomial::grouplike(1, Tail::single(1, 1)));
    let b = Simple::GroupLike(Monomial::grouplike(1, Tail::single(1, 1)));
    let r = fuse(&h, &a, &b).unwrap();
    assert!(r.certified);
    assert_eq!(r.summands, vec!["R(a{1}^2)".to_string()]);
}

#[test]
fn tensor_of_simples_has_dim_n_squared() {
    let h = bigd_t(3);
    let a = simple_comodule(&h, &Tail::single(1, 1)).unwrap();
    let b = simple_comodule(&h, &Tail::single(1, 2)).unwrap();
    assert_eq!(Comodule::tensor(&h, &a, &b).unwrap().dim(), 9);
}

#[test]
fn coefficient_spaces() {
    let h = bigd_t(2);
    let tail = Tail::single(1, 1);
    let s = simple_comodule(&h, &tail).unwrap();
    let (support, cf) = s.coefficient_space(&h);
    assert_eq!(support, h.monomials(std::slice::from_ref(&tail)));
    assert_eq!(cf.dim(), 4);
    let k = grouplike_comodule(&h, &Monomial::one()).unwrap();
    assert_eq!(k.coefficient_support(&h), BTreeSet::from([Monomial::one()]));
    let c = dual_pair_certificate(&h, &tail).unwrap();
    assert!(c.coefficient_is_taft);
    assert_eq!(c.hom_dims, vec![1, 1]);
    assert!(c.passed());
}

#[test]
fn generic_pair_gives_n_copies() {
    let h = bigd_t(3);
    let r = fuse(&h, &Simple::Block(Tail::single(1, 1)), &Simple::Block(Tail::single(1, 1))).unwrap();
    assert!(r.certified);
    assert_eq!(r.summands, vec!["S(a{1}^2)".to_string(); 3]);
}

#[test]
fn grouplike_times_simple() {
    let h = bigd_t(2);
    let u = Simple::GroupLike(Monomial::grouplike(1, Tail::empty()));
    let s = Simple::Block(Tail::single(1, -1));
    assert!(fuse(&h, &u, &s).unwrap().certified);
    assert!(fuse(&h, &s, &u).unwrap().certified);
}

#[test]
fn fusion_rules_hold_on_windows() {
    for (n, e) in [(2, 2), (3, 2)] {
        let h = bigd_t(n);
        let r = verify_fusion(&h, w(e));
        assert!(r.passed(), "{r}");
        assert!(r.total_cases() >= 20);
    }
}

#[test]
fn duals_are_negated_tails() {
    let h = bigd_t(3);
    for e in [1, -2] {
        let s = simple_comodule(&h, &Tail::single(1, e)).unwrap();
        let sd = Comodule::dual(&h, &s).unwrap();
        let neg = simple_comodule(&h, &Tail::single(1, -e)).unwrap();
        assert!(find_iso(&neg, &sd).is_some());
        assert!(find_iso(&s, &sd).is_none());
    }
}

#[test]
fn limit_rules() {
    let h = limit2();
    let r = verify_fusion(&h, w(2));
    assert!(r.passed(), "{r}");
    assert!(r.checks.iter().any(|c| c.name == "S_z (x) S_-z = H4"));
    // S_z ⊗ S_-z is the regular Sweedler comodule
    let s1 = simple_comodule(&h, &Tail::single(1, 1)).unwrap();
    let s2 = simple_comodule(&h, &Tail::single(1, -1)).unwrap();
    let t = Comodule::tensor(&h, &s1, &s2).unwrap();
    let h4 = regular_block_comodule(&h, &Tail::empty()).unwrap();
    assert!(find_iso(&h4, &t).is_some());
    let chi = Simple::GroupLike(Monomial::grouplike(1, Tail::empty()));
    let kk = fuse(&h, &chi, &chi).unwrap();
    assert_eq!(kk.summands, vec!["R(1)".to_string()]);
}

#[test]
fn hom_dims_count_socle() {
    let h = bigd_t(3);
    let c = dual_pair_certificate(&h, &Tail::single(1, 2)).unwrap();
    assert_eq!(c.hom_dims, vec![1, 1, 1]);
    assert_eq!(c.coefficient_dim, 9);
}

#[test]
fn non_comodule_rejected() {
    let h = bigd_t(2);
    let bad = vec![Lin::single((0, Monomial::new(1, 0, Tail::empty())), h.field().one())];
    assert!(matches!(Comodule::new(&h, bad), Err(FusionError::NotComodule(_))));
}

#[test]
fn coefficient_space_of_tensor_inside_products() {
    let h = bigd_t(2);
    let a = simple_comodule(&h, &Tail::single(1, 1)).unwrap();
    let b = simple_comodule(&h, &Tail::single(1, 2)).unwrap();
    let t = Comodule::tensor(&h, &a, &b).unwrap();
    let ca = a.coefficient_support(&h);
    let cb = b.coefficient_support(&h);
    let mut prod = BTreeSet::new();
    for x in &ca {
        for y in &cb {
            prod.extend(h.mul_basis(x, y).keys().cloned());
        }
    }
    let ct = t.coefficient_support(&h);
    assert!(ct.is_subset(&prod));
    assert_eq!(ct, prod);
}

#[test]
fn comodule_json() {
    let h = bigd_t(2);
    let s = simple_comodule(&h, &Tail::single(1, 1)).unwrap();
    let v = s.to_json();
    assert_eq!(v["dim"], 2);
    assert!(v["coaction"].as_array().unwrap().len() >= 4);
}

fn smash() -> SmashCoproduct {
    SmashCoproduct::new(SmashSpec::default()).unwrap()
}

#[test]
fn smash_coproduct_example() {
    let h = smash();
    let f = h.field().clone();
    let d = h.delta_basis(&SmashBasis { g: 1, k: 1 });
    let mut want = Lin::zero();
    want.add_term((SmashBasis { g: 1, k: 0 }, SmashBasis { g: 1, k: 1 }), f.one());
    want.add_term((SmashBasis { g: 1, k: 1 }, SmashBasis { g: -1, k: 0 }), f.one());
    assert_eq!(d, want);
    assert!(h.counit_basis(&SmashBasis { g: 3, k: 0 }).is_one());
    assert!(h.counit_basis(&SmashBasis { g: 3, k: 1 }).is_zero());
    let r = verify_smash(&h);
    assert!(r.passed(), "{r}");
}

#[test]
fn smash_needs_char_two() {
    assert!(SmashCoproduct::new(SmashSpec { p: 3, window: 8 }).is_err());
}

#[test]
fn smash_blocks_certified() {
    let h = smash();
    let blocks = smash_blocks(&h);
    assert_eq!(blocks.len(), 9);
    assert_eq!(blocks[0].class, BlockClass::FunctionAlgebraBlock(2));
    for b in &blocks {
        assert!(b.passed(), "{}", b.checks);
        if b.rep > 0 {
            assert_eq!(b.class, BlockClass::MatrixBlock(2));
        }
    }
}

#[test]
fn smash_fusion_examples() {
    let h = smash();
    let r = smash_fusion(&h, 2, 5).unwrap();
    assert!(r.certified);
    assert_eq!(r.summands, vec!["S_7".to_string(), "S_3".to_string()]);
    assert!(!r.non_semisimple);
    let r = smash_fusion(&h, 3, 3).unwrap();
    assert!(r.certified);
    assert_eq!(r.summands, vec!["S_6".to_string(), "k^C2".to_string()]);
    assert!(r.non_semisimple);
    let all = verify_smash_fusion(&h);
    assert!(all.passed(), "{all}");
}

#[test]
fn smash_simple_reps_agree() {
    let h = smash();
    let a = smash_simple(&h, 4).unwrap();
    let b = smash_simple(&h, -4).unwrap();
    assert_eq!(hom_space(&a, &b).len(), 1);
    assert!(find_iso(&a, &b).is_some());
    assert!(find_iso(&a, &smash_simple(&h, 3).unwrap()).is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn tensors_are_comodules_with_multiplied_dims(i in 0usize..6, j in 0usize..6) {
        let h = bigd_t(2);
        let simples = window_simples(&h, w(2));
        let (a, b) = (&simples[i], &simples[j]);
        let ma = a.comodule(&h).unwrap();
        let mb = b.comodule(&h).unwrap();
        let t = Comodule::tensor(&h, &ma, &mb).unwrap();
        prop_assert_eq!(t.dim(), ma.dim() * mb.dim());
        prop_assert!(t.check(&h).passed());
    }

    #[test]
    fn smash_summand_dims_add_up(a in -8i64..9, b in -8i64..9) {
        prop_assume!(a != 0 && b != 0);
        let h = smash();
        let r = smash_fusion(&h, a, b).unwrap();
        prop_assert!(r.certified);
        prop_assert_eq!(r.summands.len() * 2, 4);
        prop_assert_eq!(r.non_semisimple, a.abs() == b.abs());
    }
}
