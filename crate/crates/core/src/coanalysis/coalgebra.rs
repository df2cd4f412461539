//! Finite coalgebras on a numbered basis, their comodules, coradical
//! filtrations and Loewy series.

use super::CoanalysisError;
use crate::algebra::HopfAlgebra;
use crate::lin::{Label, Lin, Tensor2};
use crate::linalg::{Matrix, Subspace};
use crate::report::{Check, VerificationReport, Witness};
use crate::scalars::{Field, Scalar};
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct FiniteCoalgebra {
    field: Field,
    labels: Vec<String>,
    delta: Vec<Tensor2<usize>>,
    counit: Vec<Scalar>,
}

impl FiniteCoalgebra {
    pub fn new(field: &Field, labels: Vec<String>, delta: Vec<Tensor2<usize>>, counit: Vec<Scalar>) -> Self {
        assert_eq!(labels.len(), delta.len());
        assert_eq!(labels.len(), counit.len());
        FiniteCoalgebra {
            field: field.clone(),
            labels,
            delta,
            counit,
        }
    }

    /// The span of `basis` inside `h`, which must be closed under Δ.
    pub fn from_hopf_basis<H: HopfAlgebra>(h: &H, basis: &[H::Basis]) -> Result<Self, CoanalysisError> {
        let index: HashMap<&H::Basis, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let delta = basis
            .iter()
            .map(|b| {
                h.delta_basis(b)
                    .iter()
                    .map(|((l, r), c)| match (index.get(l), index.get(r)) {
                        (Some(&i), Some(&j)) => Ok(((i, j), c.clone())),
                        _ => Err(CoanalysisError::NotClosed(format!("delta({}) leaves the span", b.label()))),
                    })
                    .collect::<Result<Tensor2<usize>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteCoalgebra {
            field: h.field().clone(),
            labels: basis.iter().map(|b| b.label()).collect(),
            delta,
            counit: basis.iter().map(|b| h.counit_basis(b)).collect(),
        })
    }

    /// M_n^c(k): Δ(c_st) = Σ_k c_sk ⊗ c_kt, ε(c_st) = δ_st; c_st at (s−1)n + (t−1).
    pub fn matrix(field: &Field, n: usize) -> Self {
        let idx = |s: usize, t: usize| s * n + t;
        let mut labels = Vec::new();
        let mut delta = Vec::new();
        let mut counit = Vec::new();
        for s in 0..n {
            for t in 0..n {
                labels.push(format!("c{}{}", s + 1, t + 1));
                delta.push((0..n).map(|k| ((idx(s, k), idx(k, t)), field.one())).collect());
                counit.push(if s == t { field.one() } else { field.zero() });
            }
        }
        FiniteCoalgebra::new(field, labels, delta, counit)
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn delta(&self, i: usize) -> &Tensor2<usize> {
        &self.delta[i]
    }

    pub fn counit(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    /// Δ of a coordinate vector.
    pub fn delta_vector(&self, v: &[Scalar]) -> Tensor2<usize> {
        let mut out = Lin::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.delta[i], c);
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Coassociativity and counit on every basis element.
    pub fn check_axioms(&self) -> VerificationReport {
        let mut r = VerificationReport::new(format!("coalgebra of dim {}", self.dim()));
        let basis: Vec<usize> = (0..self.dim()).collect();
        r.push(Check::run("coassociativity", &basis, |&i| {
            let mut left: Lin<(usize, usize, usize)> = Lin::zero();
            let mut right: Lin<(usize, usize, usize)> = Lin::zero();
            for ((a, b), c) in self.delta[i].iter() {
                for ((a1, a2), d) in self.delta[*a].iter() {
                    left.add_term((*a1, *a2, *b), c * d);
                }
                for ((b1, b2), d) in self.delta[*b].iter() {
                    right.add_term((*a, *b1, *b2), c * d);
                }
            }
            (left != right).then(|| Witness {
                case: self.labels[i].clone(),
                lhs: left.to_string(),
                rhs: right.to_string(),
            })
        }));
        r.push(Check::run("counit", &basis, |&i| {
            let mut l = Lin::zero();
            let mut rr = Lin::zero();
            for ((a, b), c) in self.delta[i].iter() {
                l.add_term(*b, c * &self.counit[*a]);
                rr.add_term(*a, c * &self.counit[*b]);
            }
            let one = Lin::single(i, self.field.one());
            (l != one || rr != one).then(|| Witness {
                case: self.labels[i].clone(),
                lhs: l.to_string(),
                rhs: rr.to_string(),
            })
        }));
        r
    }

    pub fn is_subcoalgebra(&self, w: &Subspace) -> bool {
        w.basis().iter().all(|v| {
            let d = self.delta_vector(v);
            // Δ(v) ∈ W ⊗ W iff both legs lie in W after contracting the other
            // with every coordinate functional.
            let mut left: HashMap<usize, Vec<Scalar>> = HashMap::new();
            let mut right: HashMap<usize, Vec<Scalar>> = HashMap::new();
            for ((a, b), c) in d.iter() {
                left.entry(*b).or_insert_with(|| vec![self.field.zero(); self.dim()])[*a] += c.clone();
                right.entry(*a).or_insert_with(|| vec![self.field.zero(); self.dim()])[*b] += c.clone();
            }
            left.values().chain(right.values()).all(|x| w.contains(x))
        })
    }

    /// V ∧ W = Δ^{-1}(V ⊗ C + C ⊗ W), the kernel of C → (C/V) ⊗ (C/W).
    pub fn wedge(&self, v: &Subspace, w: &Subspace) -> Subspace {
        let n = self.dim();
        let qv: Vec<Vec<Scalar>> = (0..n).map(|i| v.quotient_coords(&self.unit_vector(i))).collect();
        let qw: Vec<Vec<Scalar>> = (0..n).map(|i| w.quotient_coords(&self.unit_vector(i))).collect();
        let (cv, cw) = (v.codim(), w.codim());
        if cv == 0 || cw == 0 {
            return Subspace::full(&self.field, n);
        }
        let mut m = Matrix::zeros(&self.field, cv * cw, n);
        for (col, d) in self.delta.iter().enumerate() {
            for ((a, b), c) in d.iter() {
                for (x, va) in qv[*a].iter().enumerate() {
                    if va.is_zero() {
                        continue;
                    }
                    for (y, wb) in qw[*b].iter().enumerate() {
                        if wb.is_zero() {
                            continue;
                        }
                        let e = m.get(x * cw + y, col) + &(c * &(va * wb));
                        m.set(x * cw + y, col, e);
                    }
                }
            }
        }
        Subspace::span(&self.field, n, m.nullspace())
    }

    /// The coradical as the annihilator of the radical of the trace form
    /// (x, y) ↦ Tr(L_{xy}) on C*; characteristic zero only.
    pub fn coradical_char0(&self) -> Result<Subspace, CoanalysisError> {
        let ch = self.field.characteristic();
        if ch != 0 {
            return Err(CoanalysisError::CharP(ch));
        }
        let n = self.dim();
        // Tr(L_{f_c}) = Σ_k ⟨Δ(e_k), (c, k)⟩
        let mut tr = vec![self.field.zero(); n];
        for (k, d) in self.delta.iter().enumerate() {
            for ((a, b), c) in d.iter() {
                if *b == k {
                    tr[*a] += c.clone();
                }
            }
        }
        let mut gram = Matrix::zeros(&self.field, n, n);
        for (c, d) in self.delta.iter().enumerate() {
            if tr[c].is_zero() {
                continue;
            }
            for ((a, b), v) in d.iter() {
                let e = gram.get(*a, *b) + &(v * &tr[c]);
                gram.set(*a, *b, e);
            }
        }
        let radical = gram.nullspace();
        if radical.is_empty() {
            return Ok(Subspace::full(&self.field, n));
        }
        Ok(Subspace::span(&self.field, n, Matrix::from_rows(&self.field, radical).nullspace()))
    }

    /// C_0 ⊂ C_1 ⊂ … with C_k = C_0 ∧ C_{k−1}, ending at C.
    pub fn coradical_filtration(&self, c0: &Subspace) -> Result<Vec<Subspace>, CoanalysisError> {
        let mut out = vec![c0.clone()];
        while out.last().unwrap().dim() < self.dim() {
            let next = self.wedge(c0, out.last().unwrap());
            if next.dim() == out.last().unwrap().dim() {
                return Err(CoanalysisError::Stalled {
                    reached: next.dim(),
                    dim: self.dim(),
                });
            }
            out.push(next);
        }
        Ok(out)
    }

    /// dim Z(D*) for a subcoalgebra D: cocommutative functionals modulo D^⊥.
    pub fn dual_center_dim(&self, d: &Subspace) -> usize {
        let n = self.dim();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for v in d.basis() {
            let dv = self.delta_vector(v);
            let mut eq: HashMap<usize, Vec<Scalar>> = HashMap::new();
            for ((a, b), c) in dv.iter() {
                eq.entry(*b).or_insert_with(|| vec![self.field.zero(); n])[*a] += c.clone();
                eq.entry(*a).or_insert_with(|| vec![self.field.zero(); n])[*b] -= c.clone();
            }
            let mut keys: Vec<usize> = eq.keys().copied().collect();
            keys.sort();
            rows.extend(keys.into_iter().map(|k| eq.remove(&k).unwrap()));
        }
        let sol = if rows.is_empty() {
            n
        } else {
            Matrix::from_rows(&self.field, rows).nullspace().len()
        };
        sol - (n - d.dim())
    }
}

/// A right comodule: ρ(m_i) = Σ c · m_j ⊗ e_k stored as ((j, k), c).
#[derive(Clone, Debug)]
pub struct FiniteComodule {
    field: Field,
    coaction: Vec<Lin<(usize, usize)>>,
}

impl FiniteComodule {
    pub fn new(c: &FiniteCoalgebra, coaction: Vec<Lin<(usize, usize)>>) -> Result<Self, CoanalysisError> {
        let m = FiniteComodule {
            field: c.field.clone(),
            coaction,
        };
        let failed = m.check(c).failures().next().map(|f| f.name.clone());
        match failed {
            None => Ok(m),
            Some(name) => Err(CoanalysisError::NotComodule(name)),
        }
    }

    /// C over itself with ρ = Δ.
    pub fn regular(c: &FiniteCoalgebra) -> Self {
        FiniteComodule {
            field: c.field.clone(),
            coaction: c.delta.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coaction.len()
    }

    pub fn coaction(&self, i: usize) -> &Lin<(usize, usize)> {
        &self.coaction[i]
    }

    pub fn check(&self, c: &FiniteCoalgebra) -> VerificationReport {
        let mut r = VerificationReport::new(format!("comodule of dim {}", self.dim()));
        let basis: Vec<usize> = (0..self.dim()).collect();
        r.push(Check::run("coassociativity", &basis, |&i| {
            let mut left: Lin<(usize, usize, usize)> = Lin::zero();
            let mut right: Lin<(usize, usize, usize)> = Lin::zero();
            for ((j, k), v) in self.coaction[i].iter() {
                for ((j2, k2), w) in self.coaction[*j].iter() {
                    left.add_term((*j2, *k2, *k), v * w);
                }
                for ((a, b), w) in c.delta(*k).iter() {
                    right.add_term((*j, *a, *b), v * w);
                }
            }
            (left != right).then(|| Witness {
                case: format!("m{i}"),
                lhs: left.to_string(),
                rhs: right.to_string(),
            })
        }));
        r.push(Check::run("counit", &basis, |&i| {
            let mut l = Lin::zero();
            for ((j, k), v) in self.coaction[i].iter() {
                l.add_term(*j, v * c.counit(*k));
            }
            let one = Lin::single(i, self.field.one());
            (l != one).then(|| Witness {
                case: format!("m{i}"),
                lhs: l.to_string(),
                rhs: one.to_string(),
            })
        }));
        r
    }

    /// ρ(v) for a coordinate vector v.
    pub fn rho_vector(&self, v: &[Scalar]) -> Lin<(usize, usize)> {
        let mut out = Lin::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.coaction[i], c);
            }
        }
        out
    }

    pub fn is_subcomodule(&self, w: &Subspace) -> bool {
        w.basis().iter().all(|v| {
            let mut legs: HashMap<usize, Vec<Scalar>> = HashMap::new();
            for ((j, k), c) in self.rho_vector(v).iter() {
                legs.entry(*k).or_insert_with(|| vec![self.field.zero(); self.dim()])[*j] += c.clone();
            }
            legs.values().all(|x| w.contains(x))
        })
    }

    /// The subcomodule on the echelon basis of `w`.
    pub fn restrict(&self, w: &Subspace) -> Result<FiniteComodule, CoanalysisError> {
        if !self.is_subcomodule(w) {
            return Err(CoanalysisError::NotComodule("subspace is not a subcomodule".into()));
        }
        let coaction = w
            .basis()
            .iter()
            .map(|v| {
                let mut out = Lin::zero();
                for ((j, k), c) in self.rho_vector(v).iter() {
                    // left legs lie in W; echelon coordinates sit at the pivots
                    if let Some(pos) = w.pivots().iter().position(|p| p == j) {
                        out.add_term((pos, *k), c.clone());
                    }
                }
                out
            })
            .collect();
        Ok(FiniteComodule {
            field: self.field.clone(),
            coaction,
        })
    }

    /// Span of the coefficients of W/V, for subcomodules V ⊂ W.
    pub fn coefficient_space(&self, c: &FiniteCoalgebra, w: &Subspace, v: &Subspace) -> Subspace {
        let ann = annihilator(&self.field, self.dim(), v);
        let mut vecs = Vec::new();
        for b in w.basis() {
            let rho = self.rho_vector(b);
            for phi in &ann {
                let mut out = vec![self.field.zero(); c.dim()];
                for ((j, k), s) in rho.iter() {
                    if !phi[*j].is_zero() {
                        out[*k] += s * &phi[*j];
                    }
                }
                vecs.push(out);
            }
        }
        Subspace::span(&self.field, c.dim(), vecs)
    }
}

/// Functionals vanishing on v.
fn annihilator(field: &Field, n: usize, v: &Subspace) -> Vec<Vec<Scalar>> {
    if v.dim() == 0 {
        let id = Matrix::identity(field, n);
        return (0..n).map(|i| id.row(i).to_vec()).collect();
    }
    Matrix::from_rows(field, v.basis().to_vec()).nullspace()
}

/// Soc^1 ⊂ Soc^2 ⊂ … ⊂ M with layer lengths.
#[derive(Clone, Debug)]
pub struct LoewySeries {
    pub socles: Vec<Subspace>,
    pub dims: Vec<usize>,
    pub loewy_length: usize,
    pub layer_lengths: Vec<usize>,
    pub composition_length: usize,
    /// every layer's coefficient coalgebra lies in C_0
    pub layers_in_coradical: bool,
}

/// Soc^{k+1}(M) = ρ^{-1}(M ⊗ C_k) for the given filtration C_0 ⊂ C_1 ⊂ ….
/// Layer lengths use the simple dimension d with d² = dim D / dim Z(D*) for
/// the layer's coefficient coalgebra D, which needs D homogeneous.
pub fn loewy_series(c: &FiniteCoalgebra, m: &FiniteComodule, filtration: &[Subspace]) -> Result<LoewySeries, CoanalysisError> {
    let n = m.dim();
    let field = c.field();
    let mut socles: Vec<Subspace> = Vec::new();
    for ck in filtration {
        let codim = ck.codim();
        let soc = if codim == 0 {
            Subspace::full(field, n)
        } else {
            let q: Vec<Vec<Scalar>> = (0..c.dim()).map(|i| ck.quotient_coords(&c.unit_vector(i))).collect();
            let mut mat = Matrix::zeros(field, n * codim, n);
            for i in 0..n {
                for ((j, k), v) in m.coaction(i).iter() {
                    for (x, qx) in q[*k].iter().enumerate() {
                        if !qx.is_zero() {
                            let e = mat.get(j * codim + x, i) + &(v * qx);
                            mat.set(j * codim + x, i, e);
                        }
                    }
                }
            }
            Subspace::span(field, n, mat.nullspace())
        };
        let done = soc.dim() == n;
        socles.push(soc);
        if done {
            break;
        }
    }
    if socles.last().is_none_or(|s| s.dim() < n) {
        return Err(CoanalysisError::WindowTooSmall);
    }
    let c0 = &filtration[0];
    let mut layer_lengths = Vec::new();
    let mut in_c0 = true;
    let mut prev = Subspace::zero(field, n);
    for s in &socles {
        let layer_dim = s.dim() - prev.dim();
        let cf = m.coefficient_space(c, s, &prev);
        in_c0 &= c0.contains_subspace(&cf);
        let centre = c.dual_center_dim(&cf);
        let ratio = if centre == 0 { 0 } else { cf.dim() / centre };
        let d = (1..=ratio).find(|d| d * d == ratio);
        match d {
            Some(d) if centre * ratio == cf.dim() && layer_dim.is_multiple_of(d) => layer_lengths.push(layer_dim / d),
            _ => {
                return Err(CoanalysisError::NonHomogeneous {
                    coefficients: cf.dim(),
                    centre,
                })
            }
        }
        prev = s.clone();
    }
    Ok(LoewySeries {
        dims: socles.iter().map(Subspace::dim).collect(),
        loewy_length: socles.len(),
        composition_length: layer_lengths.iter().sum(),
        layer_lengths,
        socles,
        layers_in_coradical: in_c0,
    })
}
