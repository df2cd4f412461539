use hopfkernel::{Field, Scalar};
use proptest::prelude::*;

fn field() -> Field {
    Field::cyclotomic(6).unwrap()
}

/// A polynomial in z and t with small integer coefficients.
fn poly() -> impl Strategy<Value = Vec<(i64, i64, u32)>> {
    prop::collection::vec((-3i64..=3, 0i64..6, 0u32..3), 0..4)
}

fn build(f: &Field, terms: &[(i64, i64, u32)]) -> Scalar {
    let t = f.t().unwrap();
    terms.iter().fold(f.zero(), |acc, &(c, z, d)| {
        acc + f.int(c) * f.zeta_pow(z).unwrap() * t.pow(d as i64).unwrap()
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly()).prop_map(|(n, d)| {
        let f = field();
        let num = build(&f, &n);
        let den = build(&f, &d);
        if den.is_zero() {
            num
        } else {
            num / den
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn print_parse_round_trip(a in scalar()) {
        let f = field();
        let printed = a.to_string();
        let back = f.parse(&printed).unwrap();
        prop_assert_eq!(&back, &a);
        // canonical form is idempotent: re-printing is stable
        prop_assert_eq!(back.to_string(), printed);
    }

    #[test]
    fn nonconstant_is_not_root_of_unity(a in scalar()) {
        if !a.is_zero() && !a.is_constant() {
            prop_assert_eq!(a.root_of_unity_order().unwrap(), None);
        }
    }
}

#[test]
fn primitive_roots_have_exact_order() {
    for n in 1..=24u32 {
        let f = Field::cyclotomic(n).unwrap();
        for k in 1..=2 * n as u64 {
            let Ok(r) = f.primitive_root(k) else { continue };
            assert!(r.pow(k as i64).unwrap().is_one());
            for j in 1..k {
                assert!(!r.pow(j as i64).unwrap().is_one(), "N={n} k={k} j={j}");
            }
            assert_eq!(r.root_of_unity_order().unwrap(), Some(k));
        }
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        let f = Field::prime(p).unwrap();
        for k in 1..p {
            if (p - 1) % k == 0 {
                let r = f.primitive_root(k).unwrap();
                assert_eq!(r.root_of_unity_order().unwrap(), Some(k));
            }
        }
    }
}
