//! The Hopf-structure interface shared by every family, and the generic
//! axiom checks built on it.

use crate::lin::{Label, Lin, Tensor2, Tensor3};
use crate::report::{Check, VerificationReport, Witness};
use crate::scalars::{Field, Scalar};
use std::fmt::Debug;
use std::hash::Hash;

/// A Hopf algebra (or bialgebra with antipode) given on a basis.
pub trait HopfAlgebra: Sync {
    type Basis: Clone + Ord + Eq + Hash + Debug + Label + Send + Sync;

    fn field(&self) -> &Field;
    fn one(&self) -> Lin<Self::Basis>;
    fn mul_basis(&self, a: &Self::Basis, b: &Self::Basis) -> Lin<Self::Basis>;
    fn delta_basis(&self, a: &Self::Basis) -> Tensor2<Self::Basis>;
    fn counit_basis(&self, a: &Self::Basis) -> Scalar;
    fn antipode_basis(&self, a: &Self::Basis) -> Lin<Self::Basis>;

    fn basis_element(&self, a: &Self::Basis) -> Lin<Self::Basis> {
        Lin::single(a.clone(), self.field().one())
    }

    fn mul(&self, x: &Lin<Self::Basis>, y: &Lin<Self::Basis>) -> Lin<Self::Basis> {
        let mut out = Lin::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(&self.mul_basis(a, b), &(ca * cb));
            }
        }
        out
    }

    fn delta(&self, x: &Lin<Self::Basis>) -> Tensor2<Self::Basis> {
        x.map(|a| self.delta_basis(a))
    }

    fn counit(&self, x: &Lin<Self::Basis>) -> Scalar {
        let mut acc = self.field().zero();
        for (a, c) in x.iter() {
            acc += c * self.counit_basis(a);
        }
        acc
    }

    fn antipode(&self, x: &Lin<Self::Basis>) -> Lin<Self::Basis> {
        x.map(|a| self.antipode_basis(a))
    }

    /// Componentwise product in H ⊗ H.
    fn mul2(&self, x: &Tensor2<Self::Basis>, y: &Tensor2<Self::Basis>) -> Tensor2<Self::Basis> {
        let mut out = Lin::zero();
        for ((a1, a2), ca) in x.iter() {
            for ((b1, b2), cb) in y.iter() {
                let left = self.mul_basis(a1, b1);
                if left.is_zero() {
                    continue;
                }
                let right = self.mul_basis(a2, b2);
                let c = ca * cb;
                for (l, cl) in left.iter() {
                    for (r, cr) in right.iter() {
                        out.add_term((l.clone(), r.clone()), &c * &(cl * cr));
                    }
                }
            }
        }
        out
    }

    /// Product of a word of elements (empty word is 1).
    fn product(&self, word: &[Lin<Self::Basis>]) -> Lin<Self::Basis> {
        word.iter().fold(self.one(), |acc, w| self.mul(&acc, w))
    }
}

pub fn tensor_one<H: HopfAlgebra>(h: &H) -> Tensor2<H::Basis> {
    let one = h.one();
    let mut out = Lin::zero();
    for (a, ca) in one.iter() {
        for (b, cb) in one.iter() {
            out.add_term((a.clone(), b.clone()), ca * cb);
        }
    }
    out
}

/// (Δ ⊗ id)(T).
pub fn delta_left<H: HopfAlgebra>(h: &H, t: &Tensor2<H::Basis>) -> Tensor3<H::Basis> {
    let mut out = Lin::zero();
    for ((a, b), c) in t.iter() {
        for ((a1, a2), d) in h.delta_basis(a).iter() {
            out.add_term((a1.clone(), a2.clone(), b.clone()), c * d);
        }
    }
    out
}

/// (id ⊗ Δ)(T).
pub fn delta_right<H: HopfAlgebra>(h: &H, t: &Tensor2<H::Basis>) -> Tensor3<H::Basis> {
    let mut out = Lin::zero();
    for ((a, b), c) in t.iter() {
        for ((b1, b2), d) in h.delta_basis(b).iter() {
            out.add_term((a.clone(), b1.clone(), b2.clone()), c * d);
        }
    }
    out
}

/// (S ⊗ S) ∘ τ.
pub fn flip_antipode<H: HopfAlgebra>(h: &H, t: &Tensor2<H::Basis>) -> Tensor2<H::Basis> {
    let mut out = Lin::zero();
    for ((a, b), c) in t.iter() {
        let sb = h.antipode_basis(b);
        let sa = h.antipode_basis(a);
        for (x, cx) in sb.iter() {
            for (y, cy) in sa.iter() {
                out.add_term((x.clone(), y.clone()), c * &(cx * cy));
            }
        }
    }
    out
}

fn witness<T: std::fmt::Display>(case: &impl Label, lhs: &T, rhs: &T) -> Witness {
    Witness {
        case: case.label(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

fn cmp<K: Ord + Clone + Label>(case: &impl Label, lhs: Lin<K>, rhs: Lin<K>) -> Option<Witness> {
    (lhs != rhs).then(|| witness(case, &lhs, &rhs))
}

pub fn check_coassociativity<H: HopfAlgebra>(h: &H, basis: &[H::Basis]) -> Check {
    Check::run("coassociativity", basis, |b| {
        let d = h.delta_basis(b);
        cmp(b, delta_left(h, &d), delta_right(h, &d))
    })
}

pub fn check_counit<H: HopfAlgebra>(h: &H, basis: &[H::Basis]) -> Check {
    Check::run("counit", basis, |b| {
        let d = h.delta_basis(b);
        let e = h.basis_element(b);
        let left: Lin<H::Basis> = d
            .iter()
            .map(|((x, y), c)| (y.clone(), c * &h.counit_basis(x)))
            .collect();
        let right: Lin<H::Basis> = d
            .iter()
            .map(|((x, y), c)| (x.clone(), c * &h.counit_basis(y)))
            .collect();
        cmp(b, left, e.clone()).or_else(|| cmp(b, right, e))
    })
}

pub fn check_antipode<H: HopfAlgebra>(h: &H, basis: &[H::Basis]) -> Check {
    Check::run("antipode", basis, |b| {
        let d = h.delta_basis(b);
        let target = h.one().scaled(&h.counit_basis(b));
        let mut left = Lin::zero();
        let mut right = Lin::zero();
        for ((x, y), c) in d.iter() {
            let sx = h.antipode_basis(x);
            let sy = h.antipode_basis(y);
            let ey = h.basis_element(y);
            let ex = h.basis_element(x);
            left.add_scaled(&h.mul(&sx, &ey), c);
            right.add_scaled(&h.mul(&ex, &sy), c);
        }
        cmp(b, left, target.clone()).or_else(|| cmp(b, right, target))
    })
}

pub fn check_delta_multiplicative<H: HopfAlgebra>(h: &H, pairs: &[(H::Basis, H::Basis)]) -> Check {
    Check::run("delta_multiplicative", pairs, |(a, b)| {
        let prod = h.mul_basis(a, b);
        let lhs = h.delta(&prod);
        let rhs = h.mul2(&h.delta_basis(a), &h.delta_basis(b));
        cmp(&(a.clone(), b.clone()), lhs, rhs)
    })
}

pub fn check_counit_multiplicative<H: HopfAlgebra>(h: &H, pairs: &[(H::Basis, H::Basis)]) -> Check {
    Check::run("counit_multiplicative", pairs, |(a, b)| {
        let lhs = h.counit(&h.mul_basis(a, b));
        let rhs = h.counit_basis(a) * h.counit_basis(b);
        (lhs != rhs).then(|| Witness {
            case: (a.clone(), b.clone()).label(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    })
}

pub fn check_associativity<H: HopfAlgebra>(h: &H, triples: &[(H::Basis, H::Basis, H::Basis)]) -> Check {
    Check::run("associativity", triples, |(a, b, c)| {
        let ab = h.mul_basis(a, b);
        let bc = h.mul_basis(b, c);
        let lhs = h.mul(&ab, &h.basis_element(c));
        let rhs = h.mul(&h.basis_element(a), &bc);
        cmp(&(a.clone(), b.clone(), c.clone()), lhs, rhs)
    })
}

pub fn check_unit<H: HopfAlgebra>(h: &H, basis: &[H::Basis]) -> Check {
    Check::run("unit", basis, |b| {
        let e = h.basis_element(b);
        cmp(b, h.mul(&h.one(), &e), e.clone()).or_else(|| cmp(b, h.mul(&e, &h.one()), e))
    })
}

/// ε∘S = ε.
pub fn check_counit_antipode<H: HopfAlgebra>(h: &H, basis: &[H::Basis]) -> Check {
    Check::run("counit_antipode", basis, |b| {
        let lhs = h.counit(&h.antipode_basis(b));
        let rhs = h.counit_basis(b);
        (lhs != rhs).then(|| Witness {
            case: b.label(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    })
}

/// Δ∘S = (S⊗S)∘τ∘Δ.
pub fn check_delta_antipode<H: HopfAlgebra>(h: &H, basis: &[H::Basis]) -> Check {
    Check::run("delta_antipode", basis, |b| {
        let lhs = h.delta(&h.antipode_basis(b));
        let rhs = flip_antipode(h, &h.delta_basis(b));
        cmp(b, lhs, rhs)
    })
}

/// One side of a defining relation: Σ c·(word of generator elements).
#[derive(Clone, Debug)]
pub struct WordSum<B: Ord + Clone + Label> {
    pub terms: Vec<(Scalar, Vec<Lin<B>>)>,
}

impl<B: Ord + Clone + Label> WordSum<B> {
    pub fn word(c: Scalar, w: Vec<Lin<B>>) -> Self {
        WordSum { terms: vec![(c, w)] }
    }
}

/// A defining relation lhs = rhs between generator words.
#[derive(Clone, Debug)]
pub struct Relation<B: Ord + Clone + Label> {
    pub name: String,
    pub lhs: WordSum<B>,
    pub rhs: WordSum<B>,
}

struct Labelled(String);
impl Label for Labelled {
    fn label(&self) -> String {
        self.0.clone()
    }
}

fn eval_alg<H: HopfAlgebra>(h: &H, s: &WordSum<H::Basis>) -> Lin<H::Basis> {
    let mut out = Lin::zero();
    for (c, w) in &s.terms {
        out.add_scaled(&h.product(w), c);
    }
    out
}

fn eval_delta<H: HopfAlgebra>(h: &H, s: &WordSum<H::Basis>) -> Tensor2<H::Basis> {
    let mut out = Lin::zero();
    for (c, w) in &s.terms {
        let p = w
            .iter()
            .fold(tensor_one(h), |acc, g| h.mul2(&acc, &h.delta(g)));
        out.add_scaled(&p, c);
    }
    out
}

fn eval_counit<H: HopfAlgebra>(h: &H, s: &WordSum<H::Basis>) -> Scalar {
    let mut acc = h.field().zero();
    for (c, w) in &s.terms {
        let p = w.iter().fold(h.field().one(), |a, g| a * h.counit(g));
        acc += c * &p;
    }
    acc
}

fn eval_antipode<H: HopfAlgebra>(h: &H, s: &WordSum<H::Basis>) -> Lin<H::Basis> {
    let mut out = Lin::zero();
    for (c, w) in &s.terms {
        let images: Vec<_> = w.iter().rev().map(|g| h.antipode(g)).collect();
        out.add_scaled(&h.product(&images), c);
    }
    out
}

/// For every relation: it holds in H, and Δ, ε, S computed multiplicatively
/// from generator images agree on both sides.
pub fn check_relations<H: HopfAlgebra>(h: &H, rels: &[Relation<H::Basis>]) -> Vec<Check> {
    let case = |r: &Relation<H::Basis>| Labelled(r.name.clone());
    vec![
        Check::run("relations_hold", rels, |r| {
            cmp(&case(r), eval_alg(h, &r.lhs), eval_alg(h, &r.rhs))
        }),
        Check::run("relations_delta", rels, |r| {
            cmp(&case(r), eval_delta(h, &r.lhs), eval_delta(h, &r.rhs))
        }),
        Check::run("relations_counit", rels, |r| {
            let (l, rr) = (eval_counit(h, &r.lhs), eval_counit(h, &r.rhs));
            (l != rr).then(|| Witness {
                case: r.name.clone(),
                lhs: l.to_string(),
                rhs: rr.to_string(),
            })
        }),
        Check::run("relations_antipode", rels, |r| {
            cmp(&case(r), eval_antipode(h, &r.lhs), eval_antipode(h, &r.rhs))
        }),
    ]
}

/// The standard battery on a finite set of basis elements and pairs.
pub fn verify_axioms<H: HopfAlgebra>(
    h: &H,
    subject: impl Into<String>,
    basis: &[H::Basis],
    pairs: &[(H::Basis, H::Basis)],
) -> VerificationReport {
    let mut r = VerificationReport::new(subject);
    r.push(check_unit(h, basis));
    r.push(check_coassociativity(h, basis));
    r.push(check_counit(h, basis));
    r.push(check_antipode(h, basis));
    r.push(check_counit_antipode(h, basis));
    r.push(check_delta_antipode(h, basis));
    r.push(check_delta_multiplicative(h, pairs));
    r.push(check_counit_multiplicative(h, pairs));
    r
}

/// All ordered pairs when there are at most `cap` of them; otherwise every
/// element against a fixed spread of `cap / len` partners.
pub fn sample_pairs<B: Clone>(basis: &[B], cap: usize) -> Vec<(B, B)> {
    let n = basis.len();
    if n * n <= cap {
        return basis
            .iter()
            .flat_map(|a| basis.iter().map(move |b| (a.clone(), b.clone())))
            .collect();
    }
    let per = (cap / n.max(1)).max(1);
    let step = (n / per).max(1);
    let mut out = Vec::new();
    for a in basis {
        for k in 0..per {
            out.push((a.clone(), basis[(k * step) % n].clone()));
        }
    }
    out
}
