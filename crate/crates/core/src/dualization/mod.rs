//! The dual D(G,g,χ,α) of a lifting H(G,g,χ,α), checked by exact pairing
//! against the basis of H, and duals of finite Hopf structures.

mod finite;

pub use finite::{find_isomorphism, StructureConstants};

use crate::algebra::HopfAlgebra;
use crate::families::monomial::write_word;
use crate::families::{FamilyError, LiftedMonomial, LiftedQuantumLine, Monomial, TaftExtension};
use crate::lin::{Label, Lin, Tensor2};
use crate::linalg::Matrix;
use crate::report::{Check, VerificationReport, Witness};
use crate::scalars::{Scalar, ScalarError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::fmt;

/// Default bound on dim H for dual computations.
pub const SIZE_CAP: usize = 512;

/// Seed for the averaging-identity replay.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DualError {
    #[error("dimension {dim} exceeds the cap {cap}")]
    TooLarge { dim: usize, cap: usize },
    #[error("no primitive {order}-th root xi with xi^{p} = eta in this field")]
    NoXi { order: usize, p: u32 },
    #[error("input is not a Hopf algebra: {0}")]
    NotHopf(String),
    #[error("structure constants: {0}")]
    Format(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// X^j U^t A_1^{e_1} … A_s^{e_s}.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualMonomial {
    pub j: u32,
    pub t: u32,
    pub e: Vec<u32>,
}

impl fmt::Display for DualMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_word(&mut s, "X", self.j as i64);
        write_word(&mut s, "U", self.t as i64);
        for (i, &e) in self.e.iter().enumerate() {
            write_word(&mut s, &format!("A{{{}}}", i + 1), e as i64);
        }
        if s.is_empty() {
            s.push('1');
        }
        f.write_str(&s)
    }
}

impl Label for DualMonomial {
    fn label(&self) -> String {
        self.to_string()
    }
}

/// A linear form on H, by its values on the basis of H.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional(pub Vec<Scalar>);

impl Functional {
    pub fn values(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn plus(&self, other: &Functional) -> Functional {
        Functional(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, c: &Scalar) -> Functional {
        Functional(self.0.iter().map(|a| a * c).collect())
    }
}

/// One term c·(f ⊗ g) of an element of D ⊗ D.
pub type DualTensor = Vec<(Scalar, Functional, Functional)>;

/// The data attached to H(G,g,χ,α) that present its dual.
#[derive(Clone, Debug)]
pub struct DualSpec {
    h: LiftedQuantumLine,
    basis: Vec<LiftedMonomial>,
    index: HashMap<LiftedMonomial, usize>,
    coproducts: Vec<Vec<(usize, usize, Scalar)>>,
    xi: Scalar,
    xi_pows: Vec<Scalar>,
    eta_pows: Vec<Scalar>,
    theta: Vec<u32>,
    gamma: u32,
    f: Vec<u32>,
    d: Vec<u32>,
}

impl DualSpec {
    pub fn new(h: LiftedQuantumLine) -> Result<Self, DualError> {
        Self::with_cap(h, SIZE_CAP)
    }

    pub fn with_cap(h: LiftedQuantumLine, cap: usize) -> Result<Self, DualError> {
        let dim = h.dim();
        if dim > cap {
            return Err(DualError::TooLarge { dim, cap });
        }
        let grp = h.group().clone();
        let order = grp.order();
        let p = grp.kernel_order();
        let eta = grp.eta.clone();
        let root = h.field().primitive_root(order as u64)?;
        let xi = (1..=order as u64)
            .filter(|&k| num_integer::gcd(k, order as u64) == 1)
            .map(|k| root.pow(k as i64).unwrap())
            .find(|c| c.pow(p as i64).unwrap() == eta)
            .ok_or(DualError::NoXi { order, p })?;
        let xi_pows = (0..order).map(|k| xi.pow(k as i64).unwrap()).collect();
        let eta_pows = (0..grp.m).map(|k| eta.pow(k as i64).unwrap()).collect();
        let d = grp.p.iter().map(|&pi| p / pi).collect();
        let g = h.g().clone();
        let basis = h.basis();
        let index: HashMap<_, _> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let coproducts = basis
            .iter()
            .map(|b| {
                h.delta_basis(b)
                    .iter()
                    .map(|((l, r), c)| (index[l], index[r], c.clone()))
                    .collect()
            })
            .collect();
        Ok(DualSpec {
            theta: grp.c.clone(),
            gamma: g.t,
            f: g.e.clone(),
            d,
            h,
            basis,
            index,
            coproducts,
            xi,
            xi_pows,
            eta_pows,
        })
    }

    pub fn lifted(&self) -> &LiftedQuantumLine {
        &self.h
    }

    pub fn basis(&self) -> &[LiftedMonomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn xi(&self) -> &Scalar {
        &self.xi
    }

    pub fn eta(&self) -> &Scalar {
        &self.h.group().eta
    }

    pub fn theta(&self) -> &[u32] {
        &self.theta
    }

    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    pub fn f(&self) -> &[u32] {
        &self.f
    }

    pub fn d(&self) -> &[u32] {
        &self.d
    }

    pub fn p_i(&self) -> &[u32] {
        &self.h.group().p
    }

    pub fn p(&self) -> u32 {
        self.h.group().kernel_order()
    }

    pub fn m(&self) -> u32 {
        self.h.group().m
    }

    pub fn n(&self) -> u32 {
        self.h.n()
    }

    /// Number of kernel generators s.
    pub fn rank(&self) -> usize {
        self.theta.len()
    }

    fn order(&self) -> usize {
        self.xi_pows.len()
    }

    fn xi_pow(&self, k: i64) -> &Scalar {
        &self.xi_pows[k.rem_euclid(self.order() as i64) as usize]
    }

    fn eta_pow(&self, k: i64) -> &Scalar {
        &self.eta_pows[k.rem_euclid(self.m() as i64) as usize]
    }

    fn field(&self) -> &crate::Field {
        self.h.field()
    }

    /// q_i = ξ^{d_i(θ_i γ + m f_i)}, the commutation scalar of A_i with X.
    pub fn q(&self) -> Vec<Scalar> {
        (0..self.rank())
            .map(|i| {
                let k = self.d[i] as i64 * (self.theta[i] as i64 * self.gamma as i64 + self.m() as i64 * self.f[i] as i64);
                self.xi_pow(k).clone()
            })
            .collect()
    }

    /// The spanning set {X^j U^t A^e : j < n, t < m, e_i < p_i}.
    pub fn dual_monomials(&self) -> Vec<DualMonomial> {
        let mut es: Vec<Vec<u32>> = vec![vec![]];
        for &pi in self.p_i() {
            es = es
                .into_iter()
                .flat_map(|v| {
                    (0..pi).map(move |k| {
                        let mut w = v.clone();
                        w.push(k);
                        w
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for j in 0..self.n() {
            for t in 0..self.m() {
                for e in &es {
                    out.push(DualMonomial { j, t, e: e.clone() });
                }
            }
        }
        out
    }

    /// ⟨X^{j'}U^{t'}A^{e'}, x^j u^t a^e⟩ from the closed evaluation formula.
    pub fn dual_eval(&self, f: &DualMonomial, b: &LiftedMonomial) -> Scalar {
        if f.j != b.j {
            return self.field().zero();
        }
        let mut k = 0i64;
        for i in 0..self.rank() {
            k += self.d[i] as i64
                * f.e[i] as i64
                * (self.theta[i] as i64 * b.g.t as i64 + self.m() as i64 * b.g.e[i] as i64);
        }
        self.xi_pow(k) * self.eta_pow(b.g.t as i64 * f.t as i64) * self.h.qcontext().q_factorial(f.j as usize)
    }

    pub fn eval_formula(&self, f: &DualMonomial) -> Functional {
        Functional(self.basis.iter().map(|b| self.dual_eval(f, b)).collect())
    }

    /// ⟨f, v⟩ for v ∈ H.
    pub fn pair(&self, f: &Functional, v: &Lin<LiftedMonomial>) -> Scalar {
        v.iter()
            .fold(self.field().zero(), |acc, (b, c)| acc + c * &f.0[self.index[b]])
    }

    /// ⟨f g, b⟩ = Σ ⟨f, b₍₁₎⟩⟨g, b₍₂₎⟩.
    pub fn convolve(&self, f: &Functional, g: &Functional) -> Functional {
        Functional(
            self.coproducts
                .iter()
                .map(|terms| {
                    terms.iter().fold(self.field().zero(), |acc, (l, r, c)| {
                        let a = &f.0[*l];
                        let b = &g.0[*r];
                        if a.is_zero() || b.is_zero() {
                            acc
                        } else {
                            acc + c * &(a * b)
                        }
                    })
                })
                .collect(),
        )
    }

    /// The unit of D, which is ε_H.
    pub fn unit(&self) -> Functional {
        Functional(self.basis.iter().map(|b| self.h.counit_basis(b)).collect())
    }

    pub fn zero(&self) -> Functional {
        Functional(vec![self.field().zero(); self.dim()])
    }

    pub fn pow(&self, f: &Functional, k: u32) -> Functional {
        (0..k).fold(self.unit(), |acc, _| self.convolve(&acc, f))
    }

    pub fn product(&self, word: &[&Functional]) -> Functional {
        word.iter().fold(self.unit(), |acc, f| self.convolve(&acc, f))
    }

    fn single(&self, j: u32, t: u32, i: Option<usize>) -> DualMonomial {
        let mut e = vec![0; self.rank()];
        if let Some(i) = i {
            e[i] = 1;
        }
        DualMonomial { j, t, e }
    }

    /// ⟨U, x^j u^t a^e⟩ = η^t δ_{j,0}.
    pub fn gen_u(&self) -> Functional {
        self.eval_formula(&self.single(0, 1, None))
    }

    /// ⟨X, x^j u^t a^e⟩ = δ_{j,1}.
    pub fn gen_x(&self) -> Functional {
        self.eval_formula(&self.single(1, 0, None))
    }

    /// ⟨A_i, x^j u^t a^e⟩ = ξ^{d_i(θ_i t + m e_i)} δ_{j,0}, with i 0-based.
    pub fn gen_a(&self, i: usize) -> Functional {
        self.eval_formula(&self.single(0, 0, Some(i)))
    }

    /// A_i^{-1} = A_i^{p_i − 1} U^{m − θ_i}.
    pub fn gen_a_inverse(&self, i: usize) -> Functional {
        let a = self.pow(&self.gen_a(i), self.p_i()[i] - 1);
        let u = self.pow(&self.gen_u(), (self.m() - self.theta[i] % self.m()) % self.m());
        self.convolve(&a, &u)
    }

    /// X^j U^t A^e as a convolution product of generators.
    pub fn word(&self, f: &DualMonomial) -> Functional {
        let mut acc = self.pow(&self.gen_x(), f.j);
        acc = self.convolve(&acc, &self.pow(&self.gen_u(), f.t));
        for (i, &e) in f.e.iter().enumerate() {
            acc = self.convolve(&acc, &self.pow(&self.gen_a(i), e));
        }
        acc
    }

    /// Δ_D(U) = U ⊗ U.
    pub fn delta_u(&self) -> DualTensor {
        vec![(self.field().one(), self.gen_u(), self.gen_u())]
    }

    /// Δ_D(X) = U ⊗ X + X ⊗ 1.
    pub fn delta_x(&self) -> DualTensor {
        let one = self.field().one();
        vec![
            (one.clone(), self.gen_u(), self.gen_x()),
            (one, self.gen_x(), self.unit()),
        ]
    }

    /// Δ_D(A_i) = A_i ⊗ A_i + α(1 − ξ^{d_i θ_i m}) Σ_k X^{n−k}U^kA_i ⊗ X^kA_i / ((k)!(n−k)!).
    pub fn delta_a(&self, i: usize) -> DualTensor {
        let a = self.gen_a(i);
        let x = self.gen_x();
        let u = self.gen_u();
        let mut out = vec![(self.field().one(), a.clone(), a.clone())];
        let k_exp = self.d[i] as i64 * self.theta[i] as i64 * self.m() as i64;
        let mu = self.h.alpha() * &(self.field().one() - self.xi_pow(k_exp));
        if mu.is_zero() {
            return out;
        }
        let n = self.n();
        let ctx = self.h.qcontext();
        for k in 1..n {
            let c = &mu * &ctx.inv_factorial_pair(k as usize, (n - k) as usize);
            let left = self.product(&[&self.pow(&x, n - k), &self.pow(&u, k), &a]);
            let right = self.convolve(&self.pow(&x, k), &a);
            out.push((c, left, right));
        }
        out
    }

    /// Δ of H as a table of basis-index pairs, for pairing with D ⊗ D.
    fn pair_tensor(&self, t: &DualTensor, b: usize, b2: usize) -> Scalar {
        t.iter()
            .fold(self.field().zero(), |acc, (c, f, g)| acc + c * &(&f.0[b] * &g.0[b2]))
    }

    /// The averaging element of H that pairs to λ_{j,t,e} against Σ λ X^{j'}U^{t'}A^{e'}.
    pub fn averaging_element(&self, target: &DualMonomial) -> Lin<LiftedMonomial> {
        let fld = self.field();
        let scale = (self.h.qcontext().q_factorial(target.j as usize) * fld.int(self.p() as i64 * self.m() as i64))
            .inv()
            .expect("(j)! is nonzero for j < n");
        let mut out = Lin::zero();
        for b in self.basis.iter().filter(|b| b.j == target.j) {
            let l = b.g.t as i64;
            let mut k = 0i64;
            for r in 0..self.rank() {
                k -= self.d[r] as i64
                    * target.e[r] as i64
                    * (self.m() as i64 * b.g.e[r] as i64 + self.theta[r] as i64 * l);
            }
            let c = self.eta_pow(-(target.t as i64) * l) * self.xi_pow(k) * &scale;
            out.add_term(b.clone(), c);
        }
        out
    }

    /// The instance of the deformed family with q_i = ξ^{d_i(θ_iγ + m f_i)}
    /// whose quotient by A_i^{p_i} = U^{θ_i} presents D.
    pub fn bigd(&self) -> Result<TaftExtension, DualError> {
        let q = self.q().into_iter().enumerate().map(|(i, v)| (i as u32 + 1, v)).collect();
        Ok(TaftExtension::bigd(
            self.field(),
            self.m(),
            self.n(),
            self.h.omega().clone(),
            q,
            self.h.alpha().clone(),
        )?)
    }

    /// The functional of a deformed-family monomial under u ↦ U, x ↦ X, a_i ↦ A_i.
    pub fn transport(&self, mono: &Monomial) -> Functional {
        let mut acc = self.pow(&self.gen_x(), mono.s);
        acc = self.convolve(&acc, &self.pow(&self.gen_u(), mono.t));
        for &(i, e) in mono.tail.iter() {
            let i = i as usize - 1;
            let g = if e > 0 { self.gen_a(i) } else { self.gen_a_inverse(i) };
            acc = self.convolve(&acc, &self.pow(&g, e.unsigned_abs()));
        }
        acc
    }

    fn transport_lin(&self, v: &Lin<Monomial>) -> Functional {
        v.iter()
            .fold(self.zero(), |acc, (m, c)| acc.plus(&self.transport(m).scaled(c)))
    }

    fn transport_tensor(&self, t: &Tensor2<Monomial>) -> DualTensor {
        t.iter()
            .map(|((l, r), c)| (c.clone(), self.transport(l), self.transport(r)))
            .collect()
    }

    fn pointwise(&self, name: impl Into<String>, lhs: &Functional, rhs: &Functional) -> Check {
        let idx: Vec<usize> = (0..self.dim()).collect();
        Check::run(name, &idx, |&b| {
            (lhs.0[b] != rhs.0[b]).then(|| Witness {
                case: self.basis[b].to_string(),
                lhs: lhs.0[b].to_string(),
                rhs: rhs.0[b].to_string(),
            })
        })
    }

    pub fn describe(&self) -> String {
        format!("dual of {}", self.h.describe())
    }

    /// The generators of D with their names, A_i 1-based.
    fn generators(&self) -> Vec<(String, Functional)> {
        let mut out = vec![("U".to_string(), self.gen_u()), ("X".to_string(), self.gen_x())];
        for i in 0..self.rank() {
            out.push((format!("A{}", i + 1), self.gen_a(i)));
        }
        out
    }
}

/// Word functionals by convolution agree with the evaluation formula, and
/// every defining relation of D holds on each basis element of H.
pub fn verify_dual_relations(ds: &DualSpec) -> VerificationReport {
    let mut r = VerificationReport::new(ds.describe());
    let monos = ds.dual_monomials();
    r.push(Check::run("evaluation_formula", &monos, |f| {
        let a = ds.word(f);
        let b = ds.eval_formula(f);
        (0..ds.dim()).find(|&i| a.0[i] != b.0[i]).map(|i| Witness {
            case: format!("{f} on {}", ds.basis[i]),
            lhs: a.0[i].to_string(),
            rhs: b.0[i].to_string(),
        })
    }));
    let u = ds.gen_u();
    let x = ds.gen_x();
    let one = ds.unit();
    let omega = ds.h.omega().clone();
    r.push(ds.pointwise("U^m = 1", &ds.pow(&u, ds.m()), &one));
    r.push(ds.pointwise("X^n = 0", &ds.pow(&x, ds.n()), &ds.zero()));
    r.push(ds.pointwise(
        "U X = omega X U",
        &ds.convolve(&u, &x),
        &ds.convolve(&x, &u).scaled(&omega),
    ));
    let q = ds.q();
    for i in 0..ds.rank() {
        let a = ds.gen_a(i);
        let k = i + 1;
        r.push(ds.pointwise(
            format!("A{k}^{} = U^{}", ds.p_i()[i], ds.theta[i]),
            &ds.pow(&a, ds.p_i()[i]),
            &ds.pow(&u, ds.theta[i]),
        ));
        r.push(ds.pointwise(format!("U A{k} = A{k} U"), &ds.convolve(&u, &a), &ds.convolve(&a, &u)));
        r.push(ds.pointwise(
            format!("A{k} X = q{k} X A{k}"),
            &ds.convolve(&a, &x),
            &ds.convolve(&x, &a).scaled(&q[i]),
        ));
        for l in (i + 1)..ds.rank() {
            let b = ds.gen_a(l);
            r.push(ds.pointwise(
                format!("A{k} A{} = A{} A{k}", l + 1, l + 1),
                &ds.convolve(&a, &b),
                &ds.convolve(&b, &a),
            ));
        }
    }
    r
}

/// ⟨Δ_D(Y), b ⊗ b'⟩ = ⟨Y, b b'⟩ for Y ∈ {U, X, A_i} and all basis pairs,
/// plus ε_D(Y) = ⟨Y, 1⟩ and ⟨S_D(Y), b⟩ = ⟨Y, S_H(b)⟩.
pub fn verify_dual_coproduct(ds: &DualSpec) -> VerificationReport {
    let mut r = VerificationReport::new(ds.describe());
    let n = ds.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let products: Vec<Lin<LiftedMonomial>> = pairs
        .iter()
        .map(|&(a, b)| ds.h.mul_basis(&ds.basis[a], &ds.basis[b]))
        .collect();
    let mut coproducts = vec![("U".to_string(), ds.gen_u(), ds.delta_u()), ("X".to_string(), ds.gen_x(), ds.delta_x())];
    for i in 0..ds.rank() {
        coproducts.push((format!("A{}", i + 1), ds.gen_a(i), ds.delta_a(i)));
    }
    let idx: Vec<usize> = (0..pairs.len()).collect();
    for (name, y, dy) in &coproducts {
        r.push(Check::run(format!("delta({name})"), &idx, |&k| {
            let (a, b) = pairs[k];
            let lhs = ds.pair_tensor(dy, a, b);
            let rhs = ds.pair(y, &products[k]);
            (lhs != rhs).then(|| Witness {
                case: format!("{} (x) {}", ds.basis[a], ds.basis[b]),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            })
        }));
    }
    let one = ds.h.one();
    for (name, y) in ds.generators() {
        let expected = if name == "X" { ds.field().zero() } else { ds.field().one() };
        let got = ds.pair(&y, &one);
        r.push(Check::single(format!("counit({name})"), got == expected, name.clone(), got.to_string(), expected.to_string()));
    }
    let mut antipodes = vec![
        ("U".to_string(), ds.gen_u(), ds.pow(&ds.gen_u(), ds.m() - 1)),
        (
            "X".to_string(),
            ds.gen_x(),
            ds.convolve(&ds.pow(&ds.gen_u(), ds.m() - 1), &ds.gen_x()).scaled(&-ds.field().one()),
        ),
    ];
    for i in 0..ds.rank() {
        antipodes.push((format!("A{}", i + 1), ds.gen_a(i), ds.gen_a_inverse(i)));
    }
    let s_h: Vec<Lin<LiftedMonomial>> = ds.basis.iter().map(|b| ds.h.antipode_basis(b)).collect();
    let bidx: Vec<usize> = (0..n).collect();
    for (name, y, sy) in &antipodes {
        r.push(Check::run(format!("antipode({name})"), &bidx, |&b| {
            let lhs = &sy.0[b];
            let rhs = ds.pair(y, &s_h[b]);
            (*lhs != rhs).then(|| Witness {
                case: ds.basis[b].to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            })
        }));
    }
    r
}

/// The pairing matrix between the spanning set of D and the basis of H is
/// invertible, and the averaging elements recover random coefficients.
pub fn verify_dual_basis_independence(ds: &DualSpec, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new(ds.describe());
    let monos = ds.dual_monomials();
    let rows: Vec<Vec<Scalar>> = monos.iter().map(|f| ds.word(f).0).collect();
    let fld = ds.field();
    let m = Matrix::from_rows(fld, rows.clone());
    let rank = m.rank();
    r.push(Check::single(
        format!("pairing_matrix_nonsingular ({0}x{0})", monos.len()),
        rank == ds.dim() && monos.len() == ds.dim(),
        "rank",
        rank.to_string(),
        ds.dim().to_string(),
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lambda: Vec<Scalar> = monos.iter().map(|_| fld.int(rng.gen_range(-9..=9))).collect();
    let mut big = ds.zero();
    for (row, l) in rows.iter().zip(&lambda) {
        big = big.plus(&Functional(row.clone()).scaled(l));
    }
    let idx: Vec<usize> = (0..monos.len()).collect();
    r.push(Check::run("averaging_identity", &idx, |&k| {
        let got = ds.pair(&big, &ds.averaging_element(&monos[k]));
        (got != lambda[k]).then(|| Witness {
            case: monos[k].to_string(),
            lhs: got.to_string(),
            rhs: lambda[k].to_string(),
        })
    }));
    r
}

/// The relations and generator coproducts of the matching deformed-family
/// instance hold in D after u ↦ U, x ↦ X, a_i ↦ A_i.
pub fn compare_with_bigd(ds: &DualSpec) -> Result<VerificationReport, DualError> {
    let b = ds.bigd()?;
    let mut r = VerificationReport::new(format!("{} against {}", ds.describe(), b.describe()));
    let eval = |s: &crate::algebra::WordSum<Monomial>| {
        s.terms.iter().fold(ds.zero(), |acc, (c, w)| {
            let fs: Vec<Functional> = w.iter().map(|g| ds.transport_lin(g)).collect();
            let refs: Vec<&Functional> = fs.iter().collect();
            acc.plus(&ds.product(&refs).scaled(c))
        })
    };
    for rel in b.relations() {
        r.push(ds.pointwise(format!("relation {}", rel.name), &eval(&rel.lhs), &eval(&rel.rhs)));
    }
    let n = ds.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |c| (a, c))).collect();
    let mut gens: Vec<(String, Monomial, Tensor2<Monomial>)> = vec![
        ("u".into(), Monomial::new(0, 1, crate::families::Tail::empty()), b.delta_u()),
        ("x".into(), Monomial::new(1, 0, crate::families::Tail::empty()), b.delta_x()),
    ];
    for i in 0..ds.rank() as u32 {
        for sign in [1, -1] {
            let tail = crate::families::Tail::single(i + 1, sign);
            gens.push((format!("a{}^{sign}", i + 1), Monomial::grouplike(0, tail), b.delta_a(i + 1, sign)));
        }
    }
    for (name, mono, delta) in gens {
        let y = ds.transport(&mono);
        let dy = ds.transport_tensor(&delta);
        r.push(Check::run(format!("coproduct {name}"), &pairs, |&(a, c)| {
            let lhs = ds.pair_tensor(&dy, a, c);
            let rhs = ds.pair(&y, &ds.h.mul_basis(&ds.basis[a], &ds.basis[c]));
            (lhs != rhs).then(|| Witness {
                case: format!("{} (x) {}", ds.basis[a], ds.basis[c]),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            })
        }));
    }
    Ok(r)
}

/// All dual checks in one report.
pub fn verify_dual(ds: &DualSpec, seed: u64) -> Result<VerificationReport, DualError> {
    let mut r = verify_dual_relations(ds);
    r.extend(verify_dual_coproduct(ds));
    r.extend(verify_dual_basis_independence(ds, seed));
    r.extend(compare_with_bigd(ds)?);
    Ok(r)
}
