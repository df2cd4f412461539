//! The algebras generated by u, x and a_i^{±1}: Taft algebras, the deformed
//! family with parameters (m, ω, (q_i), α), and its q → 1 limit.

use super::monomial::{Monomial, Tail};
use super::FamilyError;
use crate::algebra::{HopfAlgebra, Relation, WordSum};
use crate::lin::{Lin, Tensor2};
use crate::qcombo::QContext;
use crate::scalars::{Field, Scalar};

/// How a_i^{±1} fails to be group-like.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TailCoproduct {
    /// Δ(a_i^{±1}) carries α(1 − q_i^{±n}).
    Deformed(Scalar),
    /// q_i = 1 and Δ(a_i^{±1}) carries ±1.
    Limit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionKind {
    Taft,
    BigD,
    Limit,
}

#[derive(Clone, Debug)]
pub struct TaftExtension {
    field: Field,
    kind: ExtensionKind,
    n: u32,
    m: u32,
    ctx: QContext,
    indices: Vec<u32>,
    q: Vec<Scalar>,
    q_order: Vec<Option<u64>>,
    coproduct: TailCoproduct,
}

/// A window of tails: support size and exponent bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Window {
    pub max_support: usize,
    pub max_abs_exp: u32,
}

impl Default for Window {
    fn default() -> Self {
        Window {
            max_support: 2,
            max_abs_exp: 2,
        }
    }
}

/// Every tail over `indices` with at most `w.max_support` keys and
/// exponents in [−max_abs_exp, max_abs_exp], in canonical order.
pub fn tails_in_window(indices: &[u32], w: Window) -> Vec<Tail> {
    let exps: Vec<i32> = (1..=w.max_abs_exp as i32).flat_map(|e| [e, -e]).collect();
    let mut out = vec![Tail::empty()];
    fn rec(indices: &[u32], exps: &[i32], left: usize, acc: &mut Vec<(u32, i32)>, out: &mut Vec<Tail>) {
        if left == 0 {
            return;
        }
        for (pos, &i) in indices.iter().enumerate() {
            for &e in exps {
                acc.push((i, e));
                out.push(Tail::from_pairs(acc.iter().copied()));
                rec(&indices[pos + 1..], exps, left - 1, acc, out);
                acc.pop();
            }
        }
    }
    rec(indices, &exps, w.max_support, &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl TaftExtension {
    /// T_n(ω).
    pub fn taft(field: &Field, n: u32, omega: Scalar) -> Result<Self, FamilyError> {
        Self::build(field, ExtensionKind::Taft, n, n, omega, Vec::new(), TailCoproduct::Deformed(field.zero()))
    }

    /// The deformed family: n | m, n = ord ω, m = n whenever α ≠ 0.
    pub fn bigd(
        field: &Field,
        m: u32,
        n: u32,
        omega: Scalar,
        q: Vec<(u32, Scalar)>,
        alpha: Scalar,
    ) -> Result<Self, FamilyError> {
        if n == 0 || !m.is_multiple_of(n) {
            return Err(FamilyError::Invalid(format!("n = {n} must divide m = {m}")));
        }
        if !alpha.is_zero() && m != n {
            return Err(FamilyError::Invalid(format!("alpha != 0 needs m = n, got m = {m}, n = {n}")));
        }
        if q.iter().any(|(_, v)| v.is_zero()) {
            return Err(FamilyError::Invalid("every q_i must be nonzero".into()));
        }
        Self::build(field, ExtensionKind::BigD, m, n, omega, q, TailCoproduct::Deformed(alpha))
    }

    /// The q → 1 limit with signed coproduct coefficients.
    pub fn limit(field: &Field, n: u32, omega: Scalar, indices: &[u32]) -> Result<Self, FamilyError> {
        let q = indices.iter().map(|&i| (i, field.one())).collect();
        Self::build(field, ExtensionKind::Limit, n, n, omega, q, TailCoproduct::Limit)
    }

    fn build(
        field: &Field,
        kind: ExtensionKind,
        m: u32,
        n: u32,
        omega: Scalar,
        mut q: Vec<(u32, Scalar)>,
        coproduct: TailCoproduct,
    ) -> Result<Self, FamilyError> {
        if n < 2 {
            return Err(FamilyError::Invalid(format!("n = {n} must be at least 2")));
        }
        if omega.field() != field {
            return Err(FamilyError::Invalid("omega lives in another field".into()));
        }
        let ctx = QContext::new(omega, n as usize)?;
        q.sort_by_key(|p| p.0);
        if q.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(FamilyError::Invalid("repeated index in I".into()));
        }
        let (indices, q): (Vec<u32>, Vec<Scalar>) = q.into_iter().unzip();
        let q_order = q
            .iter()
            .map(|v| v.root_of_unity_order())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TaftExtension {
            field: field.clone(),
            kind,
            n,
            m,
            ctx,
            indices,
            q,
            q_order,
            coproduct,
        })
    }

    pub fn kind(&self) -> ExtensionKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn omega(&self) -> &Scalar {
        self.ctx.omega()
    }

    pub fn qcontext(&self) -> &QContext {
        &self.ctx
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn q(&self, i: u32) -> Option<&Scalar> {
        self.indices.iter().position(|&j| j == i).map(|p| &self.q[p])
    }

    pub fn alpha(&self) -> Option<&Scalar> {
        match &self.coproduct {
            TailCoproduct::Deformed(a) => Some(a),
            TailCoproduct::Limit => None,
        }
    }

    pub fn coproduct_kind(&self) -> &TailCoproduct {
        &self.coproduct
    }

    pub fn describe(&self) -> String {
        match self.kind {
            ExtensionKind::Taft => format!("T_{}({})", self.n, self.omega()),
            ExtensionKind::BigD => {
                let qs: Vec<String> = self
                    .indices
                    .iter()
                    .zip(&self.q)
                    .map(|(i, q)| format!("q{i}={q}"))
                    .collect();
                format!(
                    "D(m={}, n={}, omega={}, {}, alpha={})",
                    self.m,
                    self.n,
                    self.omega(),
                    qs.join(", "),
                    self.alpha().unwrap()
                )
            }
            ExtensionKind::Limit => {
                format!("L(n={}, omega={}, I={:?})", self.n, self.omega(), self.indices)
            }
        }
    }

    fn pos(&self, i: u32) -> usize {
        self.indices
            .iter()
            .position(|&j| j == i)
            .unwrap_or_else(|| panic!("index {i} not in I"))
    }

    /// q_i^k.
    pub fn q_pow(&self, i: u32, k: i64) -> Scalar {
        let p = self.pos(i);
        let k = match self.q_order[p] {
            Some(o) => k.rem_euclid(o as i64),
            None => k,
        };
        self.q[p].pow(k).expect("q_i is nonzero")
    }

    /// q_F^{kE} = Π q_i^{k e_i}.
    pub fn q_tail_pow(&self, tail: &Tail, k: i64) -> Scalar {
        tail.iter()
            .fold(self.field.one(), |acc, &(i, e)| acc * self.q_pow(i, k * e as i64))
    }

    /// The coefficient μ(F,E) of the non-group-like tail of Δ(a_F^E).
    pub fn mu(&self, tail: &Tail) -> Scalar {
        match &self.coproduct {
            TailCoproduct::Deformed(alpha) => {
                if alpha.is_zero() {
                    return self.field.zero();
                }
                alpha * &(self.field.one() - self.q_tail_pow(tail, self.n as i64))
            }
            TailCoproduct::Limit => self.field.int(tail.total_degree()),
        }
    }

    pub fn is_valid(&self, m: &Monomial) -> bool {
        m.s < self.n && m.t < self.m && m.tail.support().all(|i| self.indices.contains(&i))
    }

    fn mono(&self, s: u32, t: i64, tail: &Tail) -> Monomial {
        Monomial::new(s, t.rem_euclid(self.m as i64) as u32, tail.clone())
    }

    /// The closed coproduct formula for x^s u^t a_F^E.
    pub fn delta_closed(&self, m: &Monomial) -> Tensor2<Monomial> {
        let n = self.n as usize;
        let s = m.s as usize;
        let t = m.t as i64;
        let mut out = Lin::zero();
        for l in 0..=s {
            let c = self.ctx.q_binomial(s, l).unwrap();
            out.add_term(
                (
                    self.mono(l as u32, (s - l) as i64 + t, &m.tail),
                    self.mono((s - l) as u32, t, &m.tail),
                ),
                c,
            );
        }
        let mu = self.mu(&m.tail);
        if !mu.is_zero() {
            let lead = self.ctx.q_factorial(s) * mu;
            for k in (s + 1)..n {
                let c = &lead * &self.ctx.inv_factorial_pair(k, n - k + s);
                out.add_term(
                    (
                        self.mono((n - k + s) as u32, k as i64 + t, &m.tail),
                        self.mono(k as u32, t, &m.tail),
                    ),
                    c,
                );
            }
        }
        out
    }

    /// Δ(a_i^{±1}) from the generator formula.
    pub fn delta_a(&self, i: u32, sign: i32) -> Tensor2<Monomial> {
        let n = self.n as usize;
        let tail = Tail::single(i, sign);
        let a = Monomial::grouplike(0, tail.clone());
        let mut out = Lin::single((a.clone(), a), self.field.one());
        let coeff = match &self.coproduct {
            TailCoproduct::Deformed(alpha) => {
                alpha * &(self.field.one() - self.q_pow(i, sign as i64 * self.n as i64))
            }
            TailCoproduct::Limit => self.field.int(sign as i64),
        };
        if coeff.is_zero() {
            return out;
        }
        for k in 1..n {
            let c = &coeff * &self.ctx.inv_factorial_pair(k, n - k);
            out.add_term(
                (
                    self.mono((n - k) as u32, k as i64, &tail),
                    self.mono(k as u32, 0, &tail),
                ),
                c,
            );
        }
        out
    }

    pub fn delta_u(&self) -> Tensor2<Monomial> {
        let u = self.mono(0, 1, &Tail::empty());
        Lin::single((u.clone(), u), self.field.one())
    }

    pub fn delta_x(&self) -> Tensor2<Monomial> {
        let one = Monomial::one();
        let x = self.mono(1, 0, &Tail::empty());
        let u = self.mono(0, 1, &Tail::empty());
        let mut out = Lin::single((u, x.clone()), self.field.one());
        out.add_term((x, one), self.field.one());
        out
    }

    /// Δ of a monomial as the product Δ(x)^s Δ(u)^t Π Δ(a_i^{±1})^{|e_i|}.
    pub fn delta_generated(&self, m: &Monomial) -> Tensor2<Monomial> {
        let mut acc = crate::algebra::tensor_one(self);
        let dx = self.delta_x();
        for _ in 0..m.s {
            acc = self.mul2(&acc, &dx);
        }
        let du = self.delta_u();
        for _ in 0..m.t {
            acc = self.mul2(&acc, &du);
        }
        for &(i, e) in m.tail.iter() {
            let da = self.delta_a(i, e.signum());
            for _ in 0..e.unsigned_abs() {
                acc = self.mul2(&acc, &da);
            }
        }
        acc
    }

    pub fn delta_generated_element(&self, e: &Lin<Monomial>) -> Tensor2<Monomial> {
        e.map(|m| self.delta_generated(m))
    }

    pub fn gen_u(&self) -> Lin<Monomial> {
        self.basis_element(&self.mono(0, 1, &Tail::empty()))
    }

    pub fn gen_x(&self) -> Lin<Monomial> {
        self.basis_element(&self.mono(1, 0, &Tail::empty()))
    }

    pub fn gen_a(&self, i: u32, sign: i32) -> Lin<Monomial> {
        self.basis_element(&Monomial::grouplike(0, Tail::single(i, sign)))
    }

    /// Every monomial with the given tails.
    pub fn monomials(&self, tails: &[Tail]) -> Vec<Monomial> {
        let mut out = Vec::new();
        for tail in tails {
            for s in 0..self.n {
                for t in 0..self.m {
                    out.push(Monomial::new(s, t, tail.clone()));
                }
            }
        }
        out.sort();
        out
    }

    pub fn window_monomials(&self, w: Window) -> Vec<Monomial> {
        self.monomials(&tails_in_window(&self.indices, w))
    }

    /// The defining relations as generator words.
    pub fn relations(&self) -> Vec<Relation<Monomial>> {
        let f = &self.field;
        let one = f.one();
        let u = self.gen_u();
        let x = self.gen_x();
        let w = |c: Scalar, word: Vec<Lin<Monomial>>| WordSum::word(c, word);
        let rel = |name: String, l: WordSum<Monomial>, r: WordSum<Monomial>| Relation { name, lhs: l, rhs: r };
        let mut rels = vec![
            rel("u^m = 1".into(), w(one.clone(), vec![u.clone(); self.m as usize]), w(one.clone(), vec![])),
            rel("x^n = 0".into(), w(one.clone(), vec![x.clone(); self.n as usize]), WordSum { terms: vec![] }),
            rel(
                "u x = omega x u".into(),
                w(one.clone(), vec![u.clone(), x.clone()]),
                w(self.omega().clone(), vec![x.clone(), u.clone()]),
            ),
        ];
        for &i in &self.indices {
            let a = self.gen_a(i, 1);
            let ai = self.gen_a(i, -1);
            rels.push(rel(format!("a{i} a{i}^-1 = 1"), w(one.clone(), vec![a.clone(), ai.clone()]), w(one.clone(), vec![])));
            rels.push(rel(format!("a{i}^-1 a{i} = 1"), w(one.clone(), vec![ai.clone(), a.clone()]), w(one.clone(), vec![])));
            for (sgn, g) in [(1, &a), (-1, &ai)] {
                rels.push(rel(
                    format!("u a{i}^{sgn} = a{i}^{sgn} u"),
                    w(one.clone(), vec![u.clone(), g.clone()]),
                    w(one.clone(), vec![g.clone(), u.clone()]),
                ));
                rels.push(rel(
                    format!("a{i}^{sgn} x = q{i}^{sgn} x a{i}^{sgn}"),
                    w(one.clone(), vec![g.clone(), x.clone()]),
                    w(self.q_pow(i, sgn), vec![x.clone(), g.clone()]),
                ));
            }
            for &j in self.indices.iter().filter(|&&j| j > i) {
                for si in [1, -1] {
                    for sj in [1, -1] {
                        let gi = self.gen_a(i, si);
                        let gj = self.gen_a(j, sj);
                        rels.push(rel(
                            format!("a{i}^{si} a{j}^{sj} = a{j}^{sj} a{i}^{si}"),
                            w(one.clone(), vec![gi.clone(), gj.clone()]),
                            w(one.clone(), vec![gj, gi]),
                        ));
                    }
                }
            }
        }
        rels
    }
}

impl HopfAlgebra for TaftExtension {
    type Basis = Monomial;

    fn field(&self) -> &Field {
        &self.field
    }

    fn one(&self) -> Lin<Monomial> {
        Lin::single(Monomial::one(), self.field.one())
    }

    fn mul_basis(&self, a: &Monomial, b: &Monomial) -> Lin<Monomial> {
        let s = a.s + b.s;
        if s >= self.n {
            return Lin::zero();
        }
        let s2 = b.s as i64;
        let mut c = self.ctx.omega_pow(a.t as i64 * s2).clone();
        if s2 != 0 && !a.tail.is_empty() && self.kind != ExtensionKind::Limit {
            c = c * self.q_tail_pow(&a.tail, s2);
        }
        let t = (a.t + b.t) % self.m;
        Lin::single(Monomial::new(s, t, a.tail.merge(&b.tail)), c)
    }

    fn delta_basis(&self, a: &Monomial) -> Tensor2<Monomial> {
        self.delta_closed(a)
    }

    fn counit_basis(&self, a: &Monomial) -> Scalar {
        if a.s == 0 {
            self.field.one()
        } else {
            self.field.zero()
        }
    }

    /// S(x^s u^t a^E) = S(a^E) S(u)^t S(x)^s.
    fn antipode_basis(&self, a: &Monomial) -> Lin<Monomial> {
        let ainv = self.basis_element(&Monomial::grouplike(0, a.tail.inverse()));
        let ut = self.basis_element(&self.mono(0, -(a.t as i64), &Tail::empty()));
        let um1 = self.basis_element(&self.mono(0, self.m as i64 - 1, &Tail::empty()));
        let sx = self.mul(&um1, &self.gen_x()).scaled(&-self.field.one());
        let mut acc = self.mul(&ainv, &ut);
        for _ in 0..a.s {
            acc = self.mul(&acc, &sx);
        }
        acc
    }
}
