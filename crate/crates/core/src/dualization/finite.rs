//! Finite-dimensional Hopf algebras given by structure constants on a
//! numbered basis, their duals, and a small isomorphism search.

use super::DualError;
use crate::algebra::{check_associativity, sample_pairs, verify_axioms, HopfAlgebra};
use crate::families::group::CyclicProduct;
use crate::families::PAIR_CAP;
use crate::lin::{Label, Lin, Tensor2};
use crate::linalg::Matrix;
use crate::report::VerificationReport;
use crate::scalars::{Field, FieldSpec, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug)]
pub struct StructureConstants {
    field: Field,
    labels: Vec<String>,
    /// b_a b_b, at a * dim + b
    mult: Vec<Lin<usize>>,
    unit: Lin<usize>,
    delta: Vec<Tensor2<usize>>,
    counit: Vec<Scalar>,
    antipode: Vec<Lin<usize>>,
}

#[derive(Serialize, Deserialize)]
struct Json {
    dim: usize,
    field: FieldSpec,
    labels: Vec<String>,
    mult: Vec<(usize, usize, usize, String)>,
    unit: Vec<(usize, String)>,
    delta: Vec<(usize, usize, usize, String)>,
    counit: Vec<(usize, String)>,
    antipode: Vec<(usize, usize, String)>,
}

impl StructureConstants {
    /// Tabulate `h` on a basis closed under the operations.
    pub fn from_hopf<H: HopfAlgebra>(h: &H, basis: &[H::Basis]) -> Result<Self, DualError> {
        let index: std::collections::HashMap<&H::Basis, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let look = |b: &H::Basis| {
            index
                .get(b)
                .copied()
                .ok_or_else(|| DualError::Format(format!("basis not closed: {b:?}")))
        };
        let lin = |v: &Lin<H::Basis>| -> Result<Lin<usize>, DualError> {
            v.iter().map(|(b, c)| Ok((look(b)?, c.clone()))).collect()
        };
        let mut mult = Vec::with_capacity(basis.len() * basis.len());
        for a in basis {
            for b in basis {
                mult.push(lin(&h.mul_basis(a, b))?);
            }
        }
        let delta = basis
            .iter()
            .map(|a| {
                h.delta_basis(a)
                    .iter()
                    .map(|((l, r), c)| Ok(((look(l)?, look(r)?), c.clone())))
                    .collect::<Result<Tensor2<usize>, DualError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(StructureConstants {
            field: h.field().clone(),
            labels: basis.iter().map(|b| b.label()).collect(),
            mult,
            unit: lin(&h.one())?,
            delta,
            counit: basis.iter().map(|b| h.counit_basis(b)).collect(),
            antipode: basis.iter().map(|b| lin(&h.antipode_basis(b))).collect::<Result<_, _>>()?,
        })
    }

    /// The group algebra of C_{n_1} × … × C_{n_r}, basis in lexicographic order.
    pub fn group_algebra(field: &Field, orders: &[u32]) -> Self {
        let g = CyclicProduct { orders: orders.to_vec() };
        let elems = g.elements();
        let pos = |v: &[u32]| elems.iter().position(|w| w == v).unwrap();
        let one = field.one();
        let n = elems.len();
        let mut mult = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                mult.push(Lin::single(pos(&g.add(a, b)), one.clone()));
            }
        }
        StructureConstants {
            field: field.clone(),
            labels: elems.iter().map(|v| format!("g{v:?}")).collect(),
            mult,
            unit: Lin::single(pos(&g.identity()), one.clone()),
            delta: (0..n).map(|i| Lin::single((i, i), one.clone())).collect(),
            counit: vec![one.clone(); n],
            antipode: elems.iter().map(|a| Lin::single(pos(&g.scale(a, -1)), one.clone())).collect(),
        }
    }

    /// Functions on C_{n_1} × … × C_{n_r}, basis δ_g in lexicographic order.
    pub fn function_algebra(field: &Field, orders: &[u32]) -> Self {
        let g = CyclicProduct { orders: orders.to_vec() };
        let elems = g.elements();
        let pos = |v: &[u32]| elems.iter().position(|w| w == v).unwrap();
        let one = field.one();
        let n = elems.len();
        let mut mult = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mult.push(if a == b { Lin::single(a, one.clone()) } else { Lin::zero() });
            }
        }
        let delta = elems
            .iter()
            .map(|c| {
                elems
                    .iter()
                    .map(|a| ((pos(a), pos(&g.add(c, &g.scale(a, -1)))), one.clone()))
                    .collect()
            })
            .collect();
        let e = pos(&g.identity());
        StructureConstants {
            field: field.clone(),
            labels: elems.iter().map(|v| format!("d{v:?}")).collect(),
            mult,
            unit: (0..n).map(|i| (i, one.clone())).collect(),
            delta,
            counit: (0..n).map(|i| if i == e { one.clone() } else { field.zero() }).collect(),
            antipode: elems.iter().map(|a| Lin::single(pos(&g.scale(a, -1)), one.clone())).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis(&self) -> Vec<usize> {
        (0..self.dim()).collect()
    }

    /// Every axiom on all basis elements, all pairs, and triples up to the pair cap.
    pub fn verify(&self) -> VerificationReport {
        let basis = self.basis();
        let pairs = sample_pairs(&basis, usize::MAX);
        let mut r = verify_axioms(self, format!("structure constants, dim {}", self.dim()), &basis, &pairs);
        let triples: Vec<(usize, usize, usize)> = pairs
            .iter()
            .flat_map(|&(a, b)| basis.iter().map(move |&c| (a, b, c)))
            .take(PAIR_CAP)
            .collect();
        r.push(check_associativity(self, &triples));
        r
    }

    /// The dual on the dual basis f_i: products from Δ, coproducts from the
    /// multiplication, unit ε, counit from the unit, antipode transposed.
    pub fn finite_dual(&self) -> Result<StructureConstants, DualError> {
        self.finite_dual_with_cap(super::SIZE_CAP)
    }

    pub fn finite_dual_with_cap(&self, cap: usize) -> Result<StructureConstants, DualError> {
        let n = self.dim();
        if n > cap {
            return Err(DualError::TooLarge { dim: n, cap });
        }
        let report = self.verify();
        if let Some(c) = report.failures().next() {
            let w = c
                .witness
                .as_ref()
                .map(|w| format!(" at {}: {} != {}", w.case, w.lhs, w.rhs))
                .unwrap_or_default();
            return Err(DualError::NotHopf(format!("{} fails{w}", c.name)));
        }
        let mut mult = vec![Lin::zero(); n * n];
        for (c, d) in self.delta.iter().enumerate() {
            for ((a, b), v) in d.iter() {
                mult[a * n + b].add_term(c, v.clone());
            }
        }
        let mut delta = vec![Lin::zero(); n];
        for a in 0..n {
            for b in 0..n {
                for (c, v) in self.mult[a * n + b].iter() {
                    delta[*c].add_term((a, b), v.clone());
                }
            }
        }
        let mut antipode = vec![Lin::zero(); n];
        for (j, s) in self.antipode.iter().enumerate() {
            for (i, v) in s.iter() {
                antipode[*i].add_term(j, v.clone());
            }
        }
        Ok(StructureConstants {
            field: self.field.clone(),
            labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
            mult,
            unit: self.counit.iter().enumerate().map(|(i, c)| (i, c.clone())).collect(),
            delta,
            counit: (0..n).map(|i| self.unit.coeff(&i).cloned().unwrap_or_else(|| self.field.zero())).collect(),
            antipode,
        })
    }

    /// Equal structure constants on the same numbered basis (labels ignored).
    pub fn structure_eq(&self, other: &StructureConstants) -> bool {
        self.field == other.field
            && self.mult == other.mult
            && self.unit == other.unit
            && self.delta == other.delta
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    pub fn to_json(&self) -> String {
        let s = |c: &Scalar| c.to_string();
        let n = self.dim();
        let mut mult = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for (c, v) in self.mult[a * n + b].iter() {
                    mult.push((a, b, *c, s(v)));
                }
            }
        }
        let json = Json {
            dim: n,
            field: self.field.spec(),
            labels: self.labels.clone(),
            mult,
            unit: self.unit.iter().map(|(i, c)| (*i, s(c))).collect(),
            delta: self
                .delta
                .iter()
                .enumerate()
                .flat_map(|(c, d)| d.iter().map(move |((a, b), v)| (c, *a, *b, s(v))).collect::<Vec<_>>())
                .collect(),
            counit: self
                .counit
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, s(c)))
                .collect(),
            antipode: self
                .antipode
                .iter()
                .enumerate()
                .flat_map(|(i, a)| a.iter().map(move |(j, v)| (i, *j, s(v))).collect::<Vec<_>>())
                .collect(),
        };
        serde_json::to_string_pretty(&json).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, DualError> {
        let json: Json = serde_json::from_str(text).map_err(|e| DualError::Format(e.to_string()))?;
        let field = Field::new(json.field)?;
        let n = json.dim;
        let bad = |what: &str| DualError::Format(format!("{what} index out of range"));
        let parse = |t: &str| field.parse(t).map_err(DualError::from);
        let mut mult = vec![Lin::zero(); n * n];
        for (a, b, c, v) in &json.mult {
            if *a >= n || *b >= n || *c >= n {
                return Err(bad("mult"));
            }
            mult[a * n + b].add_term(*c, parse(v)?);
        }
        let mut unit = Lin::zero();
        for (i, v) in &json.unit {
            if *i >= n {
                return Err(bad("unit"));
            }
            unit.add_term(*i, parse(v)?);
        }
        let mut delta = vec![Lin::zero(); n];
        for (c, a, b, v) in &json.delta {
            if *a >= n || *b >= n || *c >= n {
                return Err(bad("delta"));
            }
            delta[*c].add_term((*a, *b), parse(v)?);
        }
        let mut counit = vec![field.zero(); n];
        for (i, v) in &json.counit {
            if *i >= n {
                return Err(bad("counit"));
            }
            counit[*i] = &counit[*i] + &parse(v)?;
        }
        let mut antipode = vec![Lin::zero(); n];
        for (i, j, v) in &json.antipode {
            if *i >= n || *j >= n {
                return Err(bad("antipode"));
            }
            antipode[*i].add_term(*j, parse(v)?);
        }
        let labels = if json.labels.len() == n {
            json.labels
        } else {
            (0..n).map(|i| format!("b{i}")).collect()
        };
        Ok(StructureConstants {
            field,
            labels,
            mult,
            unit,
            delta,
            counit,
            antipode,
        })
    }
}

impl HopfAlgebra for StructureConstants {
    type Basis = usize;

    fn field(&self) -> &Field {
        &self.field
    }

    fn one(&self) -> Lin<usize> {
        self.unit.clone()
    }

    fn mul_basis(&self, a: &usize, b: &usize) -> Lin<usize> {
        self.mult[a * self.dim() + b].clone()
    }

    fn delta_basis(&self, a: &usize) -> Tensor2<usize> {
        self.delta[*a].clone()
    }

    fn counit_basis(&self, a: &usize) -> Scalar {
        self.counit[*a].clone()
    }

    fn antipode_basis(&self, a: &usize) -> Lin<usize> {
        self.antipode[*a].clone()
    }
}

/// Search for a Hopf isomorphism src → tgt. Generators of src are basis
/// indices `gens`; `words[i]` writes basis element i as a product of
/// generators (positions into `gens`). Images of generators range over
/// vectors with entries in `coeffs`; the first isomorphism in that order is
/// returned as the images of the basis.
pub fn find_isomorphism(
    src: &StructureConstants,
    tgt: &StructureConstants,
    gens: &[usize],
    words: &[Vec<usize>],
    coeffs: &[i64],
) -> Option<Vec<Lin<usize>>> {
    let n = src.dim();
    if tgt.dim() != n || words.len() != n {
        return None;
    }
    let f = &tgt.field;
    let mut candidates: Vec<Lin<usize>> = vec![Lin::zero()];
    for i in 0..n {
        candidates = candidates
            .into_iter()
            .flat_map(|v| {
                coeffs.iter().map(move |&c| {
                    let mut w = v.clone();
                    w.add_term(i, f.int(c));
                    w
                })
            })
            .collect();
    }
    // counit is preserved generator by generator
    let per_gen: Vec<Vec<&Lin<usize>>> = gens
        .iter()
        .map(|&g| {
            candidates
                .iter()
                .filter(|v| !v.is_zero() && tgt.counit(v) == src.counit_basis(&g))
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; gens.len()];
    if per_gen.iter().any(Vec::is_empty) {
        return None;
    }
    loop {
        let images: Vec<&Lin<usize>> = choice.iter().zip(&per_gen).map(|(&k, c)| c[k]).collect();
        if let Some(phi) = try_map(src, tgt, &images, words) {
            return Some(phi);
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return None;
            }
            choice[k] += 1;
            if choice[k] < per_gen[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn try_map(src: &StructureConstants, tgt: &StructureConstants, images: &[&Lin<usize>], words: &[Vec<usize>]) -> Option<Vec<Lin<usize>>> {
    let n = src.dim();
    let f = &tgt.field;
    let phi: Vec<Lin<usize>> = words
        .iter()
        .map(|w| w.iter().fold(tgt.one(), |acc, &g| tgt.mul(&acc, images[g])))
        .collect();
    let rows: Vec<Vec<Scalar>> = phi
        .iter()
        .map(|v| (0..n).map(|i| v.coeff(&i).cloned().unwrap_or_else(|| f.zero())).collect())
        .collect();
    if !Matrix::from_rows(f, rows).is_invertible() {
        return None;
    }
    let apply = |v: &Lin<usize>| -> Lin<usize> {
        let mut out = Lin::zero();
        for (i, c) in v.iter() {
            out.add_scaled(&phi[*i], c);
        }
        out
    };
    let apply2 = |t: &Tensor2<usize>| -> Tensor2<usize> {
        let mut out = Lin::zero();
        for ((a, b), c) in t.iter() {
            for (x, cx) in phi[*a].iter() {
                for (y, cy) in phi[*b].iter() {
                    out.add_term((*x, *y), c * &(cx * cy));
                }
            }
        }
        out
    };
    if apply(&src.unit) != tgt.one() {
        return None;
    }
    for a in 0..n {
        if tgt.counit(&phi[a]) != src.counit[a]
            || tgt.delta(&phi[a]) != apply2(&src.delta[a])
            || tgt.antipode(&phi[a]) != apply(&src.antipode[a])
        {
            return None;
        }
        for b in 0..n {
            if tgt.mul(&phi[a], &phi[b]) != apply(&src.mult[a * n + b]) {
                return None;
            }
        }
    }
    Some(phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_and_function_algebras_are_hopf() {
        let f = Field::cyclotomic(1).unwrap();
        for orders in [vec![2], vec![3], vec![2, 2]] {
            assert!(StructureConstants::group_algebra(&f, &orders).verify().passed());
            assert!(StructureConstants::function_algebra(&f, &orders).verify().passed());
        }
    }

    #[test]
    fn json_round_trip() {
        let f = Field::cyclotomic(1).unwrap();
        let h = StructureConstants::function_algebra(&f, &[3]);
        let back = StructureConstants::from_json(&h.to_json()).unwrap();
        assert!(back.structure_eq(&h));
        assert_eq!(back.labels(), h.labels());
    }
}
