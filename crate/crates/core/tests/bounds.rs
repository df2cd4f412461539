use hopfkernel::bounds::{
    bound_cor1, bound_refined, bound_tensor, category_data_from_extension, category_data_from_smash, check_bounds,
    uqsl2_fixture, BoundsError, CategoryData, Envelope, Factor, SimpleEntry, TensorData, E1,
};
use hopfkernel::comodfusion::{SmashCoproduct, SmashSpec};
use hopfkernel::families::{TaftExtension, Window};
use hopfkernel::Field;
use num_bigint::BigInt;
use proptest::prelude::*;

fn taft(n: u32) -> TaftExtension {
    let f = Field::cyclotomic(if n.is_multiple_of(2) { n } else { 2 * n }).unwrap();
    TaftExtension::taft(&f, n, f.primitive_root(n as u64).unwrap()).unwrap()
}

fn tiny() -> Window {
    Window {
        max_support: 1,
        max_abs_exp: 1,
    }
}

fn pointed(n: u64) -> CategoryData {
    CategoryData {
        simples: vec![SimpleEntry { name: "k".into(), dim: 1 }],
        inj_envelope: [("k".to_string(), Envelope { dim: Some(n), length: Some(n), factors: None })].into(),
        dim_e1: Some(n),
        comp_e1: Some(vec![Factor { name: "k".into(), mult: n }]),
        per_tensor: [(E1.to_string(), TensorData { dim_x: n, b: Some(1), factors: None, r: Some(n) })].into(),
        ..Default::default()
    }
}

#[test]
fn refined_bound_examples() {
    assert_eq!(bound_refined(&uqsl2_fixture()).unwrap(), BigInt::from(12));
    assert_eq!(bound_refined(&pointed(5)).unwrap(), BigInt::from(5));
    assert_eq!(bound_refined(&pointed(1)).unwrap(), BigInt::from(1));
}

#[test]
fn tensor_bound_examples() {
    assert_eq!(bound_tensor(&uqsl2_fixture(), E1).unwrap(), BigInt::from(18));
    let mut d = pointed(3);
    d.per_tensor.insert("k".into(), TensorData { dim_x: 1, b: Some(1), factors: None, r: Some(1) });
    assert_eq!(bound_tensor(&d, "k").unwrap(), BigInt::from(1));
    assert_eq!(bound_tensor(&pointed(4), E1).unwrap(), BigInt::from(4));
}

#[test]
fn cor1_examples() {
    assert_eq!(bound_cor1(&uqsl2_fixture(), E1, 2).unwrap(), BigInt::from(14));
    for r in 0..5 {
        assert_eq!(bound_cor1(&pointed(4), E1, r).unwrap(), BigInt::from(4));
    }
}

#[test]
fn missing_data_is_an_error() {
    let mut d = pointed(2);
    d.comp_e1 = None;
    assert!(matches!(bound_refined(&d), Err(BoundsError::Missing(_))));
    assert!(matches!(bound_tensor(&d, "X"), Err(BoundsError::Missing(_))));
}

#[test]
fn fixture_bounds_report() {
    let r = check_bounds(&uqsl2_fixture()).unwrap();
    assert!(r.passed(), "{}", r.report);
    let v1 = r.rows.iter().find(|row| row.simple == "V1").unwrap();
    assert_eq!(v1.length, 4);
    assert_eq!(v1.refined, BigInt::from(12));
    assert_eq!(v1.cor1, Some(BigInt::from(14)));
    assert!(r.report.checks.iter().any(|c| c.name == "r >= 2" && c.passed()));
    let v2 = r.rows.iter().find(|row| row.simple == "V2").unwrap();
    assert_eq!(v2.length, 1);
}

#[test]
fn kernel_taft_data_is_tight() {
    for n in [2, 3, 4] {
        let data = category_data_from_extension(&taft(n), tiny()).unwrap();
        assert_eq!(data.dim_e1, Some(n as u64));
        let r = check_bounds(&data).unwrap();
        assert!(r.passed(), "{}", r.report);
        for row in &r.rows {
            assert_eq!(row.length, n as u64);
            assert_eq!(row.refined, BigInt::from(n));
            assert_eq!(row.cor1, Some(BigInt::from(n)));
            assert!(row.tight);
        }
    }
}

#[test]
fn kernel_bigd_data() {
    let f = Field::cyclotomic(2).unwrap();
    let h = TaftExtension::bigd(&f, 2, 2, f.int(-1), vec![(1, f.t().unwrap())], f.one()).unwrap();
    let data = category_data_from_extension(&h, tiny()).unwrap();
    assert_eq!(data.dim_e1, Some(2));
    let names: Vec<_> = data.comp_e1.as_ref().unwrap().iter().map(|f| f.name.clone()).collect();
    assert_eq!(names, vec!["R(1)".to_string(), "R(u)".to_string()]);
    // matrix-block simples are injective
    assert_eq!(data.envelope_length("S(a{1})"), Some(1));
    assert!(check_bounds(&data).unwrap().passed());

    let h0 = TaftExtension::bigd(&f, 2, 2, f.int(-1), vec![(1, f.t().unwrap())], f.zero()).unwrap();
    let data0 = category_data_from_extension(&h0, tiny()).unwrap();
    for (name, e) in &data0.inj_envelope {
        assert_eq!(e.dim, Some(2), "{name}");
    }
}

#[test]
fn kernel_smash_data() {
    let h = SmashCoproduct::new(SmashSpec::default()).unwrap();
    let data = category_data_from_smash(&h).unwrap();
    assert_eq!(data.dim_e1, Some(2));
    assert_eq!(data.d().unwrap(), 1);
    assert!(check_bounds(&data).unwrap().passed());
}

#[test]
fn inconsistent_data_fails_invariants() {
    let mut d = uqsl2_fixture();
    d.dim_e1 = Some(7);
    let r = check_bounds(&d).unwrap();
    assert!(!r.passed());
}

#[test]
fn json_round_trip() {
    let d = uqsl2_fixture();
    assert_eq!(CategoryData::from_json(&d.to_json()).unwrap(), d);
    assert!(d.to_json().contains("\"dimE1\""));
    assert!(d.to_json().contains("\"injEnvelope\""));
}

proptest! {
    #[test]
    fn cor1_with_r_at_least_two(b in 1u64..20, dim in 1u64..50, r in 2u64..10) {
        let mut d = pointed(dim);
        d.per_tensor.insert(E1.into(), TensorData { dim_x: dim, b: Some(b), factors: None, r: Some(r) });
        let lhs = bound_cor1(&d, E1, r).unwrap();
        let rhs = bound_cor1(&d, E1, 2).unwrap();
        prop_assert!(lhs <= rhs);
    }

    #[test]
    fn enlarging_factors_never_decreases(extra in 0u64..4, which in 0usize..3) {
        let d = uqsl2_fixture();
        let mut e = d.clone();
        let name = ["V0", "V1", "V2"][which];
        let dim = e.simple_dim(name).unwrap();
        e.comp_e1.as_mut().unwrap().push(Factor { name: name.into(), mult: extra });
        e.dim_e1 = Some(e.dim_e1.unwrap() + extra * dim);
        prop_assert!(e.d().unwrap() >= d.d().unwrap());
        prop_assert!(bound_refined(&e).unwrap() >= bound_refined(&d).unwrap());
    }

    #[test]
    fn pointed_bounds_collapse(n in 1u64..40) {
        let d = pointed(n);
        prop_assert_eq!(bound_refined(&d).unwrap(), BigInt::from(n));
        prop_assert_eq!(bound_cor1(&d, E1, n).unwrap(), BigInt::from(n));
    }
}
