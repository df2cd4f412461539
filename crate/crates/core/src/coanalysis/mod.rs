//! Block decomposition of the u, x, a families, classification of blocks,
//! group-likes, the windowed Hopf socle, the finite-type predicate, and
//! coradical and Loewy computations on finite coalgebras.

mod coalgebra;

pub use coalgebra::{loewy_series, FiniteCoalgebra, FiniteComodule, LoewySeries};

use crate::algebra::HopfAlgebra;
use crate::families::{tails_in_window, ExtensionKind, FamilyError, Monomial, TaftExtension, Tail, Window};
use crate::lin::{Lin, Tensor2};
use crate::linalg::Matrix;
use crate::report::{Check, VerificationReport, Witness};
use crate::scalars::Scalar;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoanalysisError {
    #[error("span is not closed under the coproduct: {0}")]
    NotClosed(String),
    #[error("coradical via the trace form needs characteristic 0, got {0}")]
    CharP(u64),
    #[error("coradical filtration stalls at dim {reached} of {dim}")]
    Stalled { reached: usize, dim: usize },
    #[error("filtration window too small for the Loewy series to reach M")]
    WindowTooSmall,
    #[error("layer is not homogeneous: coefficient coalgebra of dim {coefficients} with dual centre of dim {centre}")]
    NonHomogeneous { coefficients: usize, centre: usize },
    #[error("not a comodule: {0}")]
    NotComodule(String),
    #[error("block {0} escapes its tail under the coproduct")]
    BlockEscape(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// V_{(F,E)} = span{x^s u^t a_F^E}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub tail: Tail,
    pub monomials: Vec<Monomial>,
}

impl Block {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BlockClass {
    TaftBlock,
    MatrixBlock(u32),
    FunctionAlgebraBlock(u32),
}

impl std::fmt::Display for BlockClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BlockClass::TaftBlock => write!(f, "TaftBlock"),
            BlockClass::MatrixBlock(n) => write!(f, "MatrixBlock({n})"),
            BlockClass::FunctionAlgebraBlock(n) => write!(f, "FunctionAlgebraBlock({n})"),
        }
    }
}

/// A classified block with the images of the source basis under the
/// certified isomorphism: the (0,0) block for a Taft block, c_st (row-major,
/// 1-based labels) for a matrix block.
#[derive(Clone, Debug)]
pub struct Classification {
    pub block: Block,
    pub class: BlockClass,
    pub images: Vec<Lin<Monomial>>,
    pub checks: VerificationReport,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BlockReport {
    pub tail: String,
    pub dim: usize,
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso: Option<Vec<Vec<String>>>,
    pub certified: bool,
}

impl Classification {
    pub fn passed(&self) -> bool {
        self.checks.passed()
    }

    /// The isomorphism as a matrix: row i is the image of source element i
    /// in the block's monomial basis.
    pub fn iso_matrix(&self) -> Vec<Vec<Scalar>> {
        let f = self.checks_field();
        self.images
            .iter()
            .map(|v| {
                self.block
                    .monomials
                    .iter()
                    .map(|m| v.coeff(m).cloned().unwrap_or_else(|| f.zero()))
                    .collect()
            })
            .collect()
    }

    fn checks_field(&self) -> crate::Field {
        self.images
            .iter()
            .flat_map(|v| v.iter().map(|(_, c)| c.field().clone()))
            .next()
            .expect("an isomorphism has a nonzero image")
    }

    pub fn report(&self) -> BlockReport {
        BlockReport {
            tail: tail_label(&self.block.tail),
            dim: self.block.dim(),
            class: self.class.to_string(),
            iso: Some(
                self.iso_matrix()
                    .into_iter()
                    .map(|r| r.into_iter().map(|c| c.to_string()).collect())
                    .collect(),
            ),
            certified: self.passed(),
        }
    }
}

pub(crate) fn tail_label(t: &Tail) -> String {
    if t.is_empty() {
        "(0,0)".into()
    } else {
        t.to_string()
    }
}

/// Deterministic tail order: support size, then indices, then exponents.
pub fn sort_tails(tails: &mut [Tail]) {
    tails.sort_by_key(|t| {
        let idx: Vec<u32> = t.iter().map(|p| p.0).collect();
        let exp: Vec<i32> = t.iter().map(|p| p.1).collect();
        (t.support_size(), idx, exp)
    });
}

pub fn block(h: &TaftExtension, tail: &Tail) -> Block {
    Block {
        tail: tail.clone(),
        monomials: h.monomials(std::slice::from_ref(tail)),
    }
}

/// The windowed basis split into V_{(0,0)} and the V_{(F,E)}, each checked
/// to be Δ-closed.
pub fn block_decompose(h: &TaftExtension, w: Window) -> Result<Vec<Block>, CoanalysisError> {
    let mut tails = tails_in_window(h.indices(), w);
    sort_tails(&mut tails);
    let blocks: Vec<Block> = tails.iter().map(|t| block(h, t)).collect();
    for b in &blocks {
        for m in &b.monomials {
            for ((l, r), _) in h.delta_closed(m).iter() {
                if l.tail != b.tail || r.tail != b.tail {
                    return Err(CoanalysisError::BlockEscape(tail_label(&b.tail)));
                }
            }
        }
    }
    Ok(blocks)
}

fn map_tensor(phi: &dyn Fn(&Monomial) -> Lin<Monomial>, t: &Tensor2<Monomial>) -> Tensor2<Monomial> {
    let mut out = Lin::zero();
    for ((a, b), c) in t.iter() {
        let (pa, pb) = (phi(a), phi(b));
        for (x, cx) in pa.iter() {
            for (y, cy) in pb.iter() {
                out.add_term((x.clone(), y.clone()), c * &(cx * cy));
            }
        }
    }
    out
}

fn rank_of(h: &TaftExtension, images: &[Lin<Monomial>], basis: &[Monomial]) -> usize {
    let f = h.field();
    let rows = images
        .iter()
        .map(|v| basis.iter().map(|m| v.coeff(m).cloned().unwrap_or_else(|| f.zero())).collect())
        .collect();
    Matrix::from_rows(f, rows).rank()
}

/// Φ(c_st) for 1 ≤ s, t ≤ n, row-major.
pub fn phi(h: &TaftExtension, tail: &Tail) -> Vec<Lin<Monomial>> {
    let n = h.n();
    let ctx = h.qcontext();
    let mu = h.mu(tail);
    let mut out = Vec::new();
    for s in 1..=n {
        for t in 1..=n {
            let v = if s >= t {
                let c = ctx.q_binomial((s - 1) as usize, (t - 1) as usize).unwrap();
                Lin::single(Monomial::new(s - t, t - 1, tail.clone()), c)
            } else {
                let c = &mu * &ctx.q_factorial((s - 1) as usize)
                    * ctx.inv_factorial_pair((t - 1) as usize, (n + s - t) as usize);
                Lin::single(Monomial::new(n + s - t, t - 1, tail.clone()), c)
            };
            out.push(v);
        }
    }
    out
}

/// Taft block via right translation by a_F^E when μ = 0, matrix block via Φ
/// otherwise; the map is checked bijective, counit-preserving and
/// comultiplicative on every source basis element.
pub fn classify_block(h: &TaftExtension, b: &Block) -> Classification {
    let f = h.field();
    let mu = h.mu(&b.tail);
    let mut checks = VerificationReport::new(format!("block {} of {}", tail_label(&b.tail), h.describe()));
    if mu.is_zero() {
        let a = Monomial::grouplike(0, b.tail.clone());
        let taft = h.monomials(&[Tail::empty()]);
        let translate = |m: &Monomial| h.mul_basis(m, &a);
        let images: Vec<Lin<Monomial>> = taft.iter().map(translate).collect();
        checks.push(Check::single(
            "bijective",
            rank_of(h, &images, &b.monomials) == b.dim() && images.len() == b.dim(),
            "rank",
            rank_of(h, &images, &b.monomials).to_string(),
            b.dim().to_string(),
        ));
        checks.push(Check::run("counit", &taft, |m| {
            let (l, r) = (h.counit(&translate(m)), h.counit_basis(m));
            (l != r).then(|| Witness {
                case: m.to_string(),
                lhs: l.to_string(),
                rhs: r.to_string(),
            })
        }));
        checks.push(Check::run("comultiplicative", &taft, |m| {
            let l = h.delta(&translate(m));
            let r = map_tensor(&translate, &h.delta_basis(m));
            (l != r).then(|| Witness {
                case: m.to_string(),
                lhs: l.to_string(),
                rhs: r.to_string(),
            })
        }));
        return Classification {
            block: b.clone(),
            class: BlockClass::TaftBlock,
            images,
            checks,
        };
    }
    let n = h.n() as usize;
    let images = phi(h, &b.tail);
    checks.push(Check::single(
        "bijective",
        rank_of(h, &images, &b.monomials) == b.dim() && images.len() == b.dim(),
        "rank",
        rank_of(h, &images, &b.monomials).to_string(),
        b.dim().to_string(),
    ));
    let idx: Vec<(usize, usize)> = (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).collect();
    checks.push(Check::run("counit", &idx, |&(s, t)| {
        let l = h.counit(&images[s * n + t]);
        let r = if s == t { f.one() } else { f.zero() };
        (l != r).then(|| Witness {
            case: format!("c{}{}", s + 1, t + 1),
            lhs: l.to_string(),
            rhs: r.to_string(),
        })
    }));
    checks.push(Check::run("comultiplicative", &idx, |&(s, t)| {
        let l = h.delta(&images[s * n + t]);
        let mut r = Lin::zero();
        for k in 0..n {
            for (x, cx) in images[s * n + k].iter() {
                for (y, cy) in images[k * n + t].iter() {
                    r.add_term((x.clone(), y.clone()), cx * cy);
                }
            }
        }
        (l != r).then(|| Witness {
            case: format!("c{}{}", s + 1, t + 1),
            lhs: l.to_string(),
            rhs: r.to_string(),
        })
    }));
    Classification {
        block: b.clone(),
        class: BlockClass::MatrixBlock(n as u32),
        images,
        checks,
    }
}

/// Every u^t a_F^E in the window with Δ(m) = m ⊗ m and ε(m) = 1.
pub fn group_likes(h: &TaftExtension, w: Window) -> Vec<Monomial> {
    let mut tails = tails_in_window(h.indices(), w);
    sort_tails(&mut tails);
    let one = h.field().one();
    let mut out = Vec::new();
    for tail in &tails {
        for t in 0..h.m() {
            let m = Monomial::new(0, t, tail.clone());
            if h.delta_closed(&m) == Lin::single((m.clone(), m.clone()), one.clone()) && h.counit_basis(&m).is_one() {
                out.push(m);
            }
        }
    }
    out
}

/// Δ(g) = g ⊗ g, ε(g) = 1 and S(g) g = 1 for every listed element.
pub fn check_group_likes(h: &TaftExtension, gs: &[Monomial]) -> Check {
    let one = h.field().one();
    Check::run("group_likes", gs, |g| {
        let d = h.delta_closed(g);
        let dd = Lin::single((g.clone(), g.clone()), one.clone());
        let inv = h.mul(&h.antipode_basis(g), &h.basis_element(g));
        let ok = d == dd && h.counit_basis(g).is_one() && inv == h.one();
        (!ok).then(|| Witness {
            case: g.to_string(),
            lhs: format!("{d}; S(g)g = {inv}"),
            rhs: format!("{dd}; 1"),
        })
    })
}

/// A block outside the socle with the certificate that S ⊗ S* contains the
/// non-semisimple Taft block.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Obstruction {
    pub tail: String,
    pub certified: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HopfSocle {
    pub group_likes: Vec<String>,
    pub dim: usize,
    pub socle_tails: Vec<String>,
    pub obstructions: Vec<Obstruction>,
}

/// The windowed Hopf socle: the span of the window's group-likes, with an
/// obstruction record for every block carrying none.
pub fn hopf_socle(h: &TaftExtension, w: Window) -> Result<HopfSocle, CoanalysisError> {
    let gl = group_likes(h, w);
    let mut socle_tails: Vec<Tail> = Vec::new();
    for g in &gl {
        if !socle_tails.contains(&g.tail) {
            socle_tails.push(g.tail.clone());
        }
    }
    let mut obstructions = Vec::new();
    for b in block_decompose(h, w)? {
        if socle_tails.contains(&b.tail) {
            continue;
        }
        let cert = crate::comodfusion::dual_pair_certificate(h, &b.tail);
        obstructions.push(Obstruction {
            tail: tail_label(&b.tail),
            certified: cert.map(|c| c.passed()).unwrap_or(false),
        });
    }
    Ok(HopfSocle {
        dim: gl.len(),
        group_likes: gl.iter().map(|g| g.to_string()).collect(),
        socle_tails: socle_tails.iter().map(tail_label).collect(),
        obstructions,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FiniteType {
    pub value: bool,
    pub reason: String,
    /// (i, ν_i) with q_i a primitive ν_i-th root of unity
    pub orders: Vec<(u32, u64)>,
    /// the q_i that are not roots of unity
    pub offending: Vec<(u32, String)>,
}

/// True iff α = 0 or every q_i is a root of unity; the limit family is
/// never of finite type (its Hopf socle is finite dimensional).
pub fn finite_type(h: &TaftExtension) -> FiniteType {
    let mut orders = Vec::new();
    let mut offending = Vec::new();
    for &i in h.indices() {
        let q = h.q(i).unwrap();
        match q.root_of_unity_order() {
            Ok(Some(o)) => orders.push((i, o)),
            _ => offending.push((i, q.to_string())),
        }
    }
    let (value, reason) = match (h.kind(), h.alpha()) {
        (ExtensionKind::Limit, _) => (false, "limit family: the Hopf socle is finite dimensional".to_string()),
        (_, Some(a)) if a.is_zero() => (true, "alpha = 0: generated by x over the group-likes".to_string()),
        _ if offending.is_empty() => (true, "every q_i is a root of unity".to_string()),
        _ => (false, "some q_i is not a root of unity".to_string()),
    };
    FiniteType {
        value,
        reason,
        orders,
        offending,
    }
}

/// The windowed coalgebra of an extension family.
pub fn window_coalgebra(h: &TaftExtension, w: Window) -> Result<FiniteCoalgebra, CoanalysisError> {
    let mut basis = Vec::new();
    for b in block_decompose(h, w)? {
        basis.extend(b.monomials);
    }
    FiniteCoalgebra::from_hopf_basis(h, &basis)
}

/// E_t = span{x^s u^{t−s} a_F^E : s < n}, the injective summands of a
/// block with μ = 0 as a right comodule over itself (m = n).
pub fn taft_injective_summands(h: &TaftExtension, tail: &Tail) -> Vec<Vec<Monomial>> {
    let n = h.n() as i64;
    let m = h.m() as i64;
    (0..m)
        .map(|t| {
            (0..n)
                .map(|s| Monomial::new(s as u32, (t - s).rem_euclid(m) as u32, tail.clone()))
                .collect()
        })
        .collect()
}

/// Loewy length of one injective summand of the windowed coalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SummandLoewy {
    pub tail: String,
    pub summand: String,
    pub dim: usize,
    pub loewy_length: usize,
    pub composition_length: usize,
}

/// Coradical filtration of the windowed coalgebra against the Loewy
/// lengths of its injective summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LoewyProfile {
    pub dim: usize,
    pub coradical_dim: usize,
    pub coradical_filtration_length: usize,
    pub summands: Vec<SummandLoewy>,
    pub max_loewy_length: usize,
}

impl LoewyProfile {
    pub fn consistent(&self) -> bool {
        self.max_loewy_length == self.coradical_filtration_length
    }
}

/// Taft blocks split into the E_t; a matrix block is a sum of copies of one
/// injective simple, so it is taken whole.
pub fn loewy_profile(h: &TaftExtension, w: Window) -> Result<LoewyProfile, CoanalysisError> {
    let blocks = block_decompose(h, w)?;
    let basis: Vec<Monomial> = blocks.iter().flat_map(|b| b.monomials.clone()).collect();
    let c = FiniteCoalgebra::from_hopf_basis(h, &basis)?;
    let c0 = c.coradical_char0()?;
    let filt = c.coradical_filtration(&c0)?;
    let reg = FiniteComodule::regular(&c);
    let index: std::collections::HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut summands = Vec::new();
    for b in &blocks {
        let parts: Vec<(String, Vec<Monomial>)> = if classify_block(h, b).class == BlockClass::TaftBlock {
            taft_injective_summands(h, &b.tail)
                .into_iter()
                .enumerate()
                .map(|(t, e)| (format!("E_{t}"), e))
                .collect()
        } else {
            vec![("block".to_string(), b.monomials.clone())]
        };
        for (name, e) in parts {
            let vecs = e.iter().map(|m| c.unit_vector(index[m])).collect();
            let sub = reg.restrict(&crate::linalg::Subspace::span(c.field(), c.dim(), vecs))?;
            let ls = loewy_series(&c, &sub, &filt)?;
            summands.push(SummandLoewy {
                tail: tail_label(&b.tail),
                summand: name,
                dim: sub.dim(),
                loewy_length: ls.loewy_length,
                composition_length: ls.composition_length,
            });
        }
    }
    Ok(LoewyProfile {
        dim: c.dim(),
        coradical_dim: c0.dim(),
        coradical_filtration_length: filt.len(),
        max_loewy_length: summands.iter().map(|s| s.loewy_length).max().unwrap_or(0),
        summands,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Field;

    #[test]
    fn phi_diagonal_is_group_part() {
        let f = Field::cyclotomic(6).unwrap();
        let w = f.primitive_root(3).unwrap();
        let h = TaftExtension::bigd(&f, 3, 3, w, vec![(1, f.t().unwrap())], f.one()).unwrap();
        let tail = Tail::single(1, 1);
        let p = phi(&h, &tail);
        for s in 1..=3u32 {
            let i = ((s - 1) * 3 + (s - 1)) as usize;
            assert_eq!(p[i], Lin::single(Monomial::new(0, s - 1, tail.clone()), f.one()));
        }
    }
}
