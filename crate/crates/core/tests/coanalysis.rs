use hopfkernel::algebra::HopfAlgebra;
use hopfkernel::coanalysis::{
    block, block_decompose, classify_block, check_group_likes, finite_type, group_likes, hopf_socle, loewy_series, phi,
    taft_injective_summands, window_coalgebra, BlockClass, CoanalysisError, FiniteCoalgebra, FiniteComodule,
};
use hopfkernel::comodfusion::{identity_block_loewy, simple_comodule, SmashCoproduct, SmashSpec};
use hopfkernel::dualization::StructureConstants;
use hopfkernel::families::{Monomial, TaftExtension, Tail, Window};
use hopfkernel::lin::Lin;
use hopfkernel::linalg::Subspace;
use hopfkernel::Field;
use proptest::prelude::*;

fn bigd(n: u32, q: Vec<(u32, i64)>, alpha: i64) -> TaftExtension {
    let f = Field::cyclotomic(if n == 2 { 2 } else { 2 * n }).unwrap();
    let w = f.primitive_root(n as u64).unwrap();
    let q = q
        .into_iter()
        .map(|(i, v)| (i, if v == 0 { f.t().unwrap() } else { f.int(v) }))
        .collect();
    TaftExtension::bigd(&f, n, n, w, q, f.int(alpha)).unwrap()
}

fn small() -> Window {
    Window {
        max_support: 1,
        max_abs_exp: 2,
    }
}

#[test]
fn alpha_zero_blocks_are_closed_and_all_grouplike() {
    let h = bigd(2, vec![(1, 0)], 0);
    let blocks = block_decompose(&h, small()).unwrap();
    assert_eq!(blocks.len(), 5);
    let gl = group_likes(&h, small());
    assert_eq!(gl.len(), 5 * 2);
    for b in &blocks {
        let c = classify_block(&h, b);
        assert_eq!(c.class, BlockClass::TaftBlock);
        assert!(c.passed(), "{}", c.checks);
    }
}

#[test]
fn q_equals_t_block_has_dim_four() {
    let h = bigd(2, vec![(1, 0)], 1);
    let b = block(&h, &Tail::single(1, 1));
    assert_eq!(b.dim(), 4);
    assert!(block_decompose(&h, small()).unwrap().contains(&b));
    let c = classify_block(&h, &b);
    assert_eq!(c.class, BlockClass::MatrixBlock(2));
    assert!(c.passed(), "{}", c.checks);
}

#[test]
fn zero_tail_block_is_taft() {
    let h = bigd(3, vec![(1, 0)], 1);
    let blocks = block_decompose(&h, small()).unwrap();
    let f = h.field().clone();
    let taft = TaftExtension::taft(&f, 3, h.omega().clone()).unwrap();
    assert_eq!(blocks[0].tail, Tail::empty());
    assert_eq!(blocks[0].monomials, taft.monomials(&[Tail::empty()]));
    assert_eq!(classify_block(&h, &blocks[0]).class, BlockClass::TaftBlock);
}

#[test]
fn phi_on_the_diagonal() {
    let h = bigd(3, vec![(1, 0)], 1);
    let tail = Tail::single(1, -2);
    let p = phi(&h, &tail);
    for s in 0..3u32 {
        let img = &p[(s * 3 + s) as usize];
        assert_eq!(*img, Lin::single(Monomial::new(0, s, tail.clone()), h.field().one()));
    }
}

#[test]
fn root_of_unity_tail_gives_taft_block() {
    // q = -1, n = 2: q^{nE} = 1
    let h = bigd(2, vec![(1, -1)], 1);
    let c = classify_block(&h, &block(&h, &Tail::single(1, 1)));
    assert_eq!(c.class, BlockClass::TaftBlock);
    assert!(c.passed(), "{}", c.checks);
}

#[test]
fn phi_is_a_coalgebra_isomorphism_for_n_three() {
    let h = bigd(3, vec![(1, 0), (2, 0)], 1);
    for tail in [Tail::single(1, 1), Tail::single(2, -1), Tail::from_pairs([(1, 1), (2, 2)])] {
        let c = classify_block(&h, &block(&h, &tail));
        assert_eq!(c.class, BlockClass::MatrixBlock(3));
        assert!(c.passed(), "{}", c.checks);
        let r = c.report();
        assert_eq!(r.iso.as_ref().unwrap().len(), 9);
        assert!(r.certified);
    }
}

#[test]
fn block_report_json() {
    let h = bigd(2, vec![(1, 0)], 1);
    let c = classify_block(&h, &block(&h, &Tail::single(1, 1)));
    let v = serde_json::to_value(c.report()).unwrap();
    assert_eq!(v["dim"], 4);
    assert_eq!(v["class"], "MatrixBlock(2)");
    assert_eq!(v["tail"], "a{1}");
}

#[test]
fn group_likes_by_case() {
    let h = bigd(2, vec![(1, 0)], 1);
    let gl = group_likes(&h, small());
    assert!(!gl.iter().any(|g| g.tail == Tail::single(1, 1)));
    assert!(gl.contains(&Monomial::grouplike(1, Tail::empty())));
    assert_eq!(gl.len(), 2);
    assert!(check_group_likes(&h, &gl).passed());
    let h0 = bigd(2, vec![(1, 0)], 0);
    let gl0 = group_likes(&h0, small());
    assert!(gl0.contains(&Monomial::grouplike(1, Tail::single(1, -2))));
    assert!(check_group_likes(&h0, &gl0).passed());
}

#[test]
fn socle_cases() {
    let h0 = bigd(2, vec![(1, 0)], 0);
    let s0 = hopf_socle(&h0, small()).unwrap();
    assert_eq!(s0.dim, 10);
    assert!(s0.obstructions.is_empty());

    let h = bigd(2, vec![(1, 0)], 1);
    let s = hopf_socle(&h, small()).unwrap();
    assert_eq!(s.dim, 2);
    assert_eq!(s.socle_tails, vec!["(0,0)"]);
    assert_eq!(s.obstructions.len(), 4);
    assert!(s.obstructions.iter().all(|o| o.certified));

    let f = Field::cyclotomic(3).unwrap();
    let taft = TaftExtension::taft(&f, 3, f.primitive_root(3).unwrap()).unwrap();
    let st = hopf_socle(&taft, small()).unwrap();
    assert_eq!(st.dim, 3);
}

#[test]
fn finite_type_cases() {
    assert!(finite_type(&bigd(2, vec![(1, 0)], 0)).value);
    let ft = finite_type(&bigd(2, vec![(1, 0)], 1));
    assert!(!ft.value);
    assert_eq!(ft.offending, vec![(1, "t".to_string())]);
    let ok = finite_type(&bigd(3, vec![(1, -1), (2, 1)], 1));
    assert!(ok.value);
    assert_eq!(ok.orders, vec![(1, 2), (2, 1)]);
    let f = Field::cyclotomic(2).unwrap();
    let lim = TaftExtension::limit(&f, 2, f.int(-1), &[1]).unwrap();
    assert!(!finite_type(&lim).value);
}

fn taft_coalgebra(n: u32) -> (TaftExtension, FiniteCoalgebra) {
    let f = Field::cyclotomic(if n == 2 { 2 } else { n }).unwrap();
    let h = TaftExtension::taft(&f, n, f.primitive_root(n as u64).unwrap()).unwrap();
    let c = FiniteCoalgebra::from_hopf_basis(&h, &h.monomials(&[Tail::empty()])).unwrap();
    (h, c)
}

#[test]
fn taft_coradical_is_the_group_part() {
    for n in [2, 3, 4] {
        let (h, c) = taft_coalgebra(n);
        let c0 = c.coradical_char0().unwrap();
        assert_eq!(c0.dim(), n as usize);
        let basis = h.monomials(&[Tail::empty()]);
        for (i, m) in basis.iter().enumerate() {
            if m.s == 0 {
                assert!(c0.contains(&c.unit_vector(i)));
            }
        }
    }
}

#[test]
fn matrix_coalgebra_is_cosemisimple() {
    let f = Field::cyclotomic(1).unwrap();
    for n in [2, 3] {
        let c = FiniteCoalgebra::matrix(&f, n);
        assert!(c.check_axioms().passed());
        assert_eq!(c.coradical_char0().unwrap().dim(), n * n);
    }
}

#[test]
fn functions_on_c2_over_q_are_cosemisimple() {
    let f = Field::cyclotomic(1).unwrap();
    let sc = StructureConstants::function_algebra(&f, &[2]);
    let c = FiniteCoalgebra::from_hopf_basis(&sc, &sc.basis()).unwrap();
    assert_eq!(c.coradical_char0().unwrap().dim(), 2);
}

#[test]
fn char_p_coradical_refused() {
    let h = SmashCoproduct::new(SmashSpec::default()).unwrap();
    let basis = h.basis();
    let c = FiniteCoalgebra::from_hopf_basis(&h, &basis[..4]);
    // x^-8 # δ alone is not closed; the identity block is
    assert!(c.is_err());
    let zero: Vec<_> = basis.iter().filter(|b| b.g == 0).copied().collect();
    let c = FiniteCoalgebra::from_hopf_basis(&h, &zero).unwrap();
    assert_eq!(c.coradical_char0(), Err(CoanalysisError::CharP(2)));
}

#[test]
fn taft_regular_comodule_loewy_length_n() {
    for n in [2, 3, 4] {
        let (h, c) = taft_coalgebra(n);
        let c0 = c.coradical_char0().unwrap();
        let filt = c.coradical_filtration(&c0).unwrap();
        assert_eq!(filt.len(), n as usize);
        let reg = FiniteComodule::regular(&c);
        let ls = loewy_series(&c, &reg, &filt).unwrap();
        assert_eq!(ls.loewy_length, n as usize);
        assert_eq!(ls.composition_length, (n * n) as usize);
        assert!(ls.layers_in_coradical);
        let basis = h.monomials(&[Tail::empty()]);
        for e in taft_injective_summands(&h, &Tail::empty()) {
            let vecs = e
                .iter()
                .map(|m| c.unit_vector(basis.iter().position(|b| b == m).unwrap()))
                .collect();
            let w = Subspace::span(c.field(), c.dim(), vecs);
            assert!(reg.is_subcomodule(&w));
            let sub = reg.restrict(&w).unwrap();
            let ls = loewy_series(&c, &sub, &filt).unwrap();
            assert_eq!(ls.loewy_length, n as usize);
            assert_eq!(ls.composition_length, n as usize);
            assert_eq!(sub.dim(), n as usize);
        }
    }
}

#[test]
fn matrix_block_simple_has_length_one() {
    let h = bigd(2, vec![(1, 0)], 1);
    let s = simple_comodule(&h, &Tail::single(1, 1)).unwrap();
    let (c, m) = s.to_finite(&h).unwrap();
    assert_eq!(c.dim(), 4);
    let c0 = c.coradical_char0().unwrap();
    let filt = c.coradical_filtration(&c0).unwrap();
    let ls = loewy_series(&c, &m, &filt).unwrap();
    assert_eq!((ls.loewy_length, ls.composition_length), (1, 1));
}

#[test]
fn functions_on_c2_in_char_two_have_loewy_length_two() {
    let h = SmashCoproduct::new(SmashSpec::default()).unwrap();
    let ls = identity_block_loewy(&h).unwrap();
    assert_eq!(ls.loewy_length, 2);
    assert_eq!(ls.dims, vec![1, 2]);
    assert_eq!(ls.composition_length, 2);
}

#[test]
fn loewy_window_too_small() {
    let (_, c) = taft_coalgebra(3);
    let c0 = c.coradical_char0().unwrap();
    let filt = c.coradical_filtration(&c0).unwrap();
    let reg = FiniteComodule::regular(&c);
    assert_eq!(loewy_series(&c, &reg, &filt[..2]).unwrap_err(), CoanalysisError::WindowTooSmall);
}

#[test]
fn windowed_coradical_filtration_matches_injective_lengths() {
    let h = bigd(2, vec![(1, 0)], 1);
    let c = window_coalgebra(&h, small()).unwrap();
    let blocks = block_decompose(&h, small()).unwrap();
    assert_eq!(c.dim(), blocks.iter().map(|b| b.dim()).sum::<usize>());
    let c0 = c.coradical_char0().unwrap();
    // Taft part contributes n group-likes, each matrix block n²
    assert_eq!(c0.dim(), 2 + 4 * 4);
    let filt = c.coradical_filtration(&c0).unwrap();
    let reg = FiniteComodule::regular(&c);
    let basis: Vec<Monomial> = blocks.iter().flat_map(|b| b.monomials.clone()).collect();
    let mut max_ll = 0;
    for b in &blocks {
        let summands = if classify_block(&h, b).class == BlockClass::TaftBlock {
            taft_injective_summands(&h, &b.tail)
        } else {
            // a matrix block is a sum of its rows, each simple and injective
            vec![b.monomials.clone()]
        };
        for e in summands {
            let vecs = e
                .iter()
                .map(|m| c.unit_vector(basis.iter().position(|x| x == m).unwrap()))
                .collect();
            let w = Subspace::span(c.field(), c.dim(), vecs);
            let sub = reg.restrict(&w).unwrap();
            max_ll = max_ll.max(loewy_series(&c, &sub, &filt).unwrap().loewy_length);
        }
    }
    assert_eq!(max_ll, filt.len());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn blocks_partition_the_window(n in 2u32..4, e in 1u32..3) {
        let h = bigd(n, vec![(1, 0), (2, -1)], 1);
        let w = Window { max_support: 2, max_abs_exp: e };
        let blocks = block_decompose(&h, w).unwrap();
        let total: usize = blocks.iter().map(|b| b.dim()).sum();
        prop_assert_eq!(total, h.window_monomials(w).len());
    }

    #[test]
    fn phi_certified_for_random_tails(n in 2u32..4, e1 in -3i32..4, e2 in -3i32..4) {
        prop_assume!(e1 != 0 || e2 != 0);
        // q = (t, 2) keeps q_F^{nE} away from 1
        let h = bigd(n, vec![(1, 0), (2, 2)], 1);
        let tail = Tail::from_pairs([(1, e1), (2, e2)]);
        let c = classify_block(&h, &block(&h, &tail));
        prop_assert_eq!(c.class, BlockClass::MatrixBlock(n));
        prop_assert!(c.passed());
    }

    #[test]
    fn finite_type_invariant_under_permutation(a in -1i64..2, b in -1i64..2, alpha in 0i64..2) {
        let q = |v: i64| if v == 0 { 0 } else { v };
        let h1 = bigd(2, vec![(1, q(a)), (2, q(b))], alpha);
        let h2 = bigd(2, vec![(1, q(b)), (2, q(a))], alpha);
        prop_assert_eq!(finite_type(&h1).value, finite_type(&h2).value);
    }

    #[test]
    fn finite_type_alpha_zero_ignores_roots_of_unity(k in 0i64..4) {
        let f = Field::cyclotomic(4).unwrap();
        let w = f.primitive_root(2).unwrap();
        let z = f.zeta_pow(k).unwrap();
        let h = TaftExtension::bigd(&f, 2, 2, w.clone(), vec![(1, f.t().unwrap())], f.zero()).unwrap();
        let h2 = TaftExtension::bigd(&f, 2, 2, w, vec![(1, f.t().unwrap() * z)], f.zero()).unwrap();
        prop_assert_eq!(finite_type(&h).value, finite_type(&h2).value);
    }

    #[test]
    fn loewy_chain_strictly_increasing(n in 2u32..5) {
        let (_, c) = taft_coalgebra(n);
        let c0 = c.coradical_char0().unwrap();
        let filt = c.coradical_filtration(&c0).unwrap();
        let ls = loewy_series(&c, &FiniteComodule::regular(&c), &filt).unwrap();
        prop_assert!(ls.dims.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(*ls.dims.last().unwrap(), c.dim());
    }
}
