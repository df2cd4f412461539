//! Liftings of quantum lines H(G, g, χ, α): kG with x, σx = χ(σ)xσ,
//! x^n = α(1 − g^n), Δ(x) = x ⊗ 1 + g ⊗ x.

use super::group::{AdaptedGroup, Coord, CyclicProduct};
use super::monomial::write_word;
use super::FamilyError;
use crate::algebra::{HopfAlgebra, Relation, WordSum};
use crate::lin::{Label, Lin, Tensor2};
use crate::qcombo::QContext;
use crate::scalars::{Field, Scalar};
use std::fmt;

/// Basis element x^j σ with σ = u^t a^e.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LiftedMonomial {
    pub j: u32,
    pub g: Coord,
}

impl fmt::Display for LiftedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_word(&mut s, "x", self.j as i64);
        write_word(&mut s, "u", self.g.t as i64);
        for (i, &e) in self.g.e.iter().enumerate() {
            write_word(&mut s, &format!("a{{{}}}", i + 1), e as i64);
        }
        if s.is_empty() {
            s.push('1');
        }
        f.write_str(&s)
    }
}

impl Label for LiftedMonomial {
    fn label(&self) -> String {
        self.to_string()
    }
}

#[derive(Clone, Debug)]
pub struct LiftedQuantumLine {
    field: Field,
    group: AdaptedGroup,
    /// character values on the user's generators
    chi: Vec<Scalar>,
    g: Coord,
    g_pow_n: Coord,
    n: u32,
    ctx: QContext,
    alpha: Scalar,
}

impl LiftedQuantumLine {
    /// G = C_{orders[0]} × …, g an exponent vector, χ by its values on the
    /// cyclic generators.
    pub fn new(field: &Field, orders: Vec<u32>, g: Vec<i64>, chi: Vec<Scalar>, alpha: Scalar) -> Result<Self, FamilyError> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(FamilyError::Invalid("group needs positive cyclic orders".into()));
        }
        if g.len() != orders.len() {
            return Err(FamilyError::Invalid("g needs one exponent per cyclic factor".into()));
        }
        let ambient = CyclicProduct { orders };
        let gv = ambient.reduce(&g);
        let chi_g = gv
            .iter()
            .zip(&chi)
            .try_fold(field.one(), |acc, (&e, x)| x.pow(e as i64).map(|p| acc * p))?;
        let n = chi_g
            .root_of_unity_order()?
            .ok_or_else(|| FamilyError::Invalid("chi(g) is not a root of unity".into()))? as u32;
        if n < 2 {
            return Err(FamilyError::Invalid("chi(g) must have order n > 1".into()));
        }
        let nonzero = !alpha.is_zero();
        let group = AdaptedGroup::new(ambient, &chi, &gv, nonzero)?;
        if nonzero {
            if group.m != n {
                return Err(FamilyError::Invalid("alpha != 0 needs chi^n = 1".into()));
            }
            if group.ambient.is_identity(&group.ambient.scale(&gv, n as i64)) {
                return Err(FamilyError::Invalid("alpha != 0 needs g^n != 1".into()));
            }
        }
        let gc = group.coord(&gv).clone();
        let g_pow_n = group.pow(&gc, n as i64);
        let ctx = QContext::new(chi_g, n as usize)?;
        Ok(LiftedQuantumLine {
            field: field.clone(),
            group,
            chi,
            g: gc,
            g_pow_n,
            n,
            ctx,
            alpha,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn omega(&self) -> &Scalar {
        self.ctx.omega()
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn group(&self) -> &AdaptedGroup {
        &self.group
    }

    pub fn qcontext(&self) -> &QContext {
        &self.ctx
    }

    pub fn g(&self) -> &Coord {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.n as usize * self.group.order()
    }

    pub fn describe(&self) -> String {
        let orders: Vec<String> = self.group.ambient.orders.iter().map(|o| format!("C{o}")).collect();
        let chi: Vec<String> = self.chi.iter().map(|c| c.to_string()).collect();
        format!(
            "H({}, g={:?}, chi=[{}], alpha={})",
            orders.join("x"),
            self.group.vector(&self.g),
            chi.join(", "),
            self.alpha
        )
    }

    /// χ(σ) = η^t in adapted coordinates.
    pub fn chi(&self, s: &Coord) -> Scalar {
        self.group.eta.pow(s.t as i64).unwrap()
    }

    pub fn basis(&self) -> Vec<LiftedMonomial> {
        let mut out = Vec::new();
        for j in 0..self.n {
            for g in self.group.elements() {
                out.push(LiftedMonomial { j, g });
            }
        }
        out.sort();
        out
    }

    pub fn mono(&self, j: u32, g: Coord) -> LiftedMonomial {
        LiftedMonomial { j, g }
    }

    pub fn gen_x(&self) -> Lin<LiftedMonomial> {
        self.basis_element(&self.mono(1, self.group.identity()))
    }

    pub fn gen_group(&self, s: &Coord) -> Lin<LiftedMonomial> {
        self.basis_element(&self.mono(0, s.clone()))
    }

    /// The closed coproduct Σ_k binom(j,k) x^{j−k} g^k σ ⊗ x^k σ.
    pub fn delta_closed(&self, b: &LiftedMonomial) -> Tensor2<LiftedMonomial> {
        let mut out = Lin::zero();
        let mut gk = self.group.identity();
        for k in 0..=b.j {
            let c = self.ctx.q_binomial(b.j as usize, k as usize).unwrap();
            out.add_term(
                (self.mono(b.j - k, self.group.mul(&gk, &b.g)), self.mono(k, b.g.clone())),
                c,
            );
            gk = self.group.mul(&gk, &self.g);
        }
        out
    }

    /// Δ(x)^j Δ(σ).
    pub fn delta_generated(&self, b: &LiftedMonomial) -> Tensor2<LiftedMonomial> {
        let x = self.mono(1, self.group.identity());
        let one = self.mono(0, self.group.identity());
        let gm = self.mono(0, self.g.clone());
        let mut dx = Lin::single((x.clone(), one), self.field.one());
        dx.add_term((gm, x), self.field.one());
        let sg = self.mono(0, b.g.clone());
        let mut acc = Lin::single((sg.clone(), sg), self.field.one());
        for _ in 0..b.j {
            acc = self.mul2(&dx, &acc);
        }
        acc
    }

    /// Relations of G, σx = χ(σ)xσ for the generators, and x^n = α(1 − g^n).
    pub fn relations(&self) -> Vec<Relation<LiftedMonomial>> {
        let one = self.field.one();
        let amb = &self.group.ambient;
        let gens: Vec<Coord> = (0..amb.orders.len())
            .map(|i| {
                let mut v = amb.identity();
                v[i] = 1 % amb.orders[i];
                self.group.coord(&v).clone()
            })
            .collect();
        let x = self.gen_x();
        let mut rels = Vec::new();
        for (i, s) in gens.iter().enumerate() {
            let sg = self.gen_group(s);
            rels.push(Relation {
                name: format!("s{i}^{} = 1", amb.orders[i]),
                lhs: WordSum::word(one.clone(), vec![sg.clone(); amb.orders[i] as usize]),
                rhs: WordSum::word(one.clone(), vec![]),
            });
            rels.push(Relation {
                name: format!("s{i} x = chi(s{i}) x s{i}"),
                lhs: WordSum::word(one.clone(), vec![sg.clone(), x.clone()]),
                rhs: WordSum::word(self.chi(s), vec![x.clone(), sg.clone()]),
            });
            for (k, r) in gens.iter().enumerate().skip(i + 1) {
                let rg = self.gen_group(r);
                rels.push(Relation {
                    name: format!("s{i} s{k} = s{k} s{i}"),
                    lhs: WordSum::word(one.clone(), vec![sg.clone(), rg.clone()]),
                    rhs: WordSum::word(one.clone(), vec![rg, sg.clone()]),
                });
            }
        }
        let gn = self.gen_group(&self.g_pow_n);
        rels.push(Relation {
            name: "x^n = alpha(1 - g^n)".into(),
            lhs: WordSum::word(one.clone(), vec![x.clone(); self.n as usize]),
            rhs: WordSum {
                terms: vec![(self.alpha.clone(), vec![]), (-&self.alpha, vec![gn])],
            },
        });
        rels
    }
}

impl HopfAlgebra for LiftedQuantumLine {
    type Basis = LiftedMonomial;

    fn field(&self) -> &Field {
        &self.field
    }

    fn one(&self) -> Lin<LiftedMonomial> {
        self.basis_element(&self.mono(0, self.group.identity()))
    }

    fn mul_basis(&self, a: &LiftedMonomial, b: &LiftedMonomial) -> Lin<LiftedMonomial> {
        let c = self.chi(&a.g).pow(b.j as i64).unwrap();
        let g = self.group.mul(&a.g, &b.g);
        let j = a.j + b.j;
        if j < self.n {
            return Lin::single(self.mono(j, g), c);
        }
        if self.alpha.is_zero() {
            return Lin::zero();
        }
        let r = j - self.n;
        let c = c * &self.alpha;
        let mut out = Lin::single(self.mono(r, g.clone()), c.clone());
        out.add_term(self.mono(r, self.group.mul(&self.g_pow_n, &g)), -c);
        out
    }

    fn delta_basis(&self, a: &LiftedMonomial) -> Tensor2<LiftedMonomial> {
        self.delta_closed(a)
    }

    fn counit_basis(&self, a: &LiftedMonomial) -> Scalar {
        if a.j == 0 {
            self.field.one()
        } else {
            self.field.zero()
        }
    }

    /// S(x^j σ) = σ^{-1} (−g^{-1} x)^j.
    fn antipode_basis(&self, a: &LiftedMonomial) -> Lin<LiftedMonomial> {
        let sinv = self.gen_group(&self.group.inverse(&a.g));
        let ginv = self.gen_group(&self.group.inverse(&self.g));
        let sx = self.mul(&ginv, &self.gen_x()).scaled(&-self.field.one());
        let mut acc = sinv;
        for _ in 0..a.j {
            acc = self.mul(&acc, &sx);
        }
        acc
    }
}
