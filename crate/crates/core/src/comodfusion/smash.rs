//! kG # k^K for G = Z with generator x and K = C₂ acting by inversion,
//! over F₂.

use super::{find_iso, is_morphism, matrix_strings, Comodule, FusionError};
use crate::algebra::{sample_pairs, verify_axioms, HopfAlgebra};
use crate::coanalysis::{loewy_series, BlockClass, CoanalysisError, FiniteCoalgebra, LoewySeries};
use crate::dualization::StructureConstants;
use crate::lin::{Label, Lin, Tensor2};
use crate::linalg::{Matrix, Subspace};
use crate::report::{Check, VerificationReport, Witness};
use crate::scalars::{Field, Scalar};
use serde::{Deserialize, Serialize};
use std::fmt;

const PAIR_CAP: usize = 4096;

/// g # δ_k with g = x^g and k ∈ {1, σ} stored as 0, 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmashBasis {
    pub g: i64,
    pub k: u8,
}

impl fmt::Display for SmashBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = if self.k == 0 { "d1" } else { "ds" };
        match self.g {
            0 => write!(f, "1#{d}"),
            1 => write!(f, "x#{d}"),
            g => write!(f, "x^{g}#{d}"),
        }
    }
}

impl Label for SmashBasis {
    fn label(&self) -> String {
        self.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmashSpec {
    pub p: u64,
    /// exponent bound |z| ≤ window
    pub window: u32,
}

impl Default for SmashSpec {
    fn default() -> Self {
        SmashSpec { p: 2, window: 8 }
    }
}

#[derive(Clone, Debug)]
pub struct SmashCoproduct {
    field: Field,
    window: u32,
}

fn act(k: u8, g: i64) -> i64 {
    if k == 0 {
        g
    } else {
        -g
    }
}

impl SmashCoproduct {
    pub fn new(spec: SmashSpec) -> Result<Self, FusionError> {
        if spec.p != 2 {
            return Err(FusionError::Smash(format!("char {} does not divide |K| = 2", spec.p)));
        }
        let field = Field::prime(2).map_err(|e| FusionError::Smash(e.to_string()))?;
        for z in 1..=spec.window as i64 {
            if act(1, z) == z {
                return Err(FusionError::Smash(format!("action fixes x^{z}")));
            }
        }
        Ok(SmashCoproduct {
            field,
            window: spec.window,
        })
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn describe(&self) -> String {
        format!("kZ # k^C2 over F_2, |z| <= {}", self.window)
    }

    pub fn basis(&self) -> Vec<SmashBasis> {
        let w = self.window as i64;
        (-w..=w).flat_map(|g| [0u8, 1].map(|k| SmashBasis { g, k })).collect()
    }
}

impl HopfAlgebra for SmashCoproduct {
    type Basis = SmashBasis;

    fn field(&self) -> &Field {
        &self.field
    }

    fn one(&self) -> Lin<SmashBasis> {
        let mut out = Lin::zero();
        for k in [0, 1] {
            out.add_term(SmashBasis { g: 0, k }, self.field.one());
        }
        out
    }

    fn mul_basis(&self, a: &SmashBasis, b: &SmashBasis) -> Lin<SmashBasis> {
        if a.k != b.k {
            return Lin::zero();
        }
        Lin::single(SmashBasis { g: a.g + b.g, k: a.k }, self.field.one())
    }

    fn delta_basis(&self, a: &SmashBasis) -> Tensor2<SmashBasis> {
        let mut out = Lin::zero();
        for t in [0u8, 1] {
            let l = SmashBasis { g: a.g, k: t };
            let r = SmashBasis {
                g: act(t, a.g),
                k: t ^ a.k,
            };
            out.add_term((l, r), self.field.one());
        }
        out
    }

    fn counit_basis(&self, a: &SmashBasis) -> Scalar {
        if a.k == 0 {
            self.field.one()
        } else {
            self.field.zero()
        }
    }

    fn antipode_basis(&self, a: &SmashBasis) -> Lin<SmashBasis> {
        Lin::single(SmashBasis { g: act(a.k, -a.g), k: a.k }, self.field.one())
    }
}

/// Hopf axioms on the window, freeness of the action and S² = id.
pub fn verify_smash(h: &SmashCoproduct) -> VerificationReport {
    let basis = h.basis();
    let pairs = sample_pairs(&basis, PAIR_CAP);
    let mut r = verify_axioms(h, format!("kZ # k^C2 over F2, |z| <= {}", h.window), &basis, &pairs);
    let orbits: Vec<i64> = (1..=h.window as i64).collect();
    r.push(Check::run("free_action", &orbits, |&z| {
        (act(1, z) == z).then(|| Witness {
            case: format!("x^{z}"),
            lhs: "orbit size 1".into(),
            rhs: "orbit size 2".into(),
        })
    }));
    r.push(Check::run("antipode_squared", &basis, |b| {
        let s2 = h.antipode(&h.antipode_basis(b));
        let e = h.basis_element(b);
        (s2 != e).then(|| Witness {
            case: b.to_string(),
            lhs: s2.to_string(),
            rhs: e.to_string(),
        })
    }));
    r
}

#[derive(Clone, Debug)]
pub struct SmashBlock {
    /// orbit representative z ≥ 0 of {x^z, x^-z}
    pub rep: i64,
    pub basis: Vec<SmashBasis>,
    pub class: BlockClass,
    pub checks: VerificationReport,
}

impl SmashBlock {
    pub fn passed(&self) -> bool {
        self.checks.passed()
    }
}

/// Certify b ↦ image[b] (an index of `target`) as a coalgebra isomorphism.
fn certify_map(
    h: &SmashCoproduct,
    subject: String,
    basis: &[SmashBasis],
    image: &(dyn Fn(&SmashBasis) -> usize + Sync),
    target: &(dyn Fn(usize) -> (Tensor2<usize>, Scalar) + Sync),
) -> VerificationReport {
    let mut r = VerificationReport::new(subject);
    let mut seen: Vec<usize> = basis.iter().map(image).collect();
    seen.sort();
    seen.dedup();
    r.push(Check::single("bijective", seen.len() == basis.len(), "images", seen.len().to_string(), basis.len().to_string()));
    r.push(Check::run("counit", basis, |b| {
        let (l, rr) = (h.counit_basis(b), target(image(b)).1);
        (l != rr).then(|| Witness {
            case: b.to_string(),
            lhs: l.to_string(),
            rhs: rr.to_string(),
        })
    }));
    r.push(Check::run("comultiplicative", basis, |b| {
        let mut lhs: Tensor2<usize> = Lin::zero();
        for ((x, y), c) in h.delta_basis(b).iter() {
            lhs.add_term((image(x), image(y)), c.clone());
        }
        let rhs = target(image(b)).0;
        (lhs != rhs).then(|| Witness {
            case: b.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }));
    r
}

/// k·O(x^z) # k^K for 0 ≤ z ≤ window: M₂^c via (k_i·g)#δ_{k_j} ↦ e_il with
/// k_i k_j = k_l for z > 0, and k^{C₂} for z = 0.
pub fn smash_blocks(h: &SmashCoproduct) -> Vec<SmashBlock> {
    let f = h.field.clone();
    let mut out = Vec::new();
    let fun = StructureConstants::function_algebra(&f, &[2]);
    let basis0: Vec<SmashBasis> = [0u8, 1].iter().map(|&k| SmashBasis { g: 0, k }).collect();
    let checks = certify_map(
        h,
        "identity orbit block".into(),
        &basis0,
        &|b| b.k as usize,
        &|i| (fun.delta_basis(&i), fun.counit_basis(&i)),
    );
    out.push(SmashBlock {
        rep: 0,
        basis: basis0,
        class: BlockClass::FunctionAlgebraBlock(2),
        checks,
    });
    let mat = FiniteCoalgebra::matrix(&f, 2);
    for z in 1..=h.window as i64 {
        let basis: Vec<SmashBasis> = [0u8, 1]
            .iter()
            .flat_map(|&i| [0u8, 1].map(move |j| SmashBasis { g: act(i, z), k: j }))
            .collect();
        // k_i·x^z determines i
        let image = move |b: &SmashBasis| {
            let i = if b.g == z { 0 } else { 1 };
            i * 2 + (i as u8 ^ b.k) as usize
        };
        let checks = certify_map(h, format!("orbit of x^{z}"), &basis, &image, &|i| {
            (mat.delta(i).clone(), mat.counit(i).clone())
        });
        out.push(SmashBlock {
            rep: z,
            basis,
            class: BlockClass::MatrixBlock(2),
            checks,
        });
    }
    out
}

/// S_{x^z} = span{x^z # δ_k}: ρ(v_l) = Σ_t v_t ⊗ (t·x^z # δ_{t⁻¹k_l}).
pub fn smash_simple(h: &SmashCoproduct, z: i64) -> Result<Comodule<SmashBasis>, FusionError> {
    let coaction = (0..2u8)
        .map(|l| {
            let mut out = Lin::zero();
            for ((a, b), c) in h.delta_basis(&SmashBasis { g: z, k: l }).iter() {
                out.add_term((a.k as usize, *b), c.clone());
            }
            out
        })
        .collect();
    Comodule::new(h, coaction)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SmashFusion {
    pub left: String,
    pub right: String,
    pub summands: Vec<String>,
    pub non_semisimple: bool,
    /// f: S_a ⊗ S_b → ⊕_r S_{(k_r·g)h}
    pub f: Vec<Vec<String>>,
    pub certified: bool,
}

fn simple_label(z: i64) -> String {
    if z == 0 {
        "k^C2".into()
    } else {
        format!("S_{}", z.abs())
    }
}

/// S_a ⊗ S_b ≅ S_{a+b} ⊕ S_{b−a} by the map f with
/// (g#δ_{k_l}) ⊗ (h#δ_{k_m}) ↦ (k_r·g)h # δ_{k_l k_r⁻¹}, k_r = k_m⁻¹k_l; each
/// summand is also matched with the orbit representative.
pub fn smash_fusion(h: &SmashCoproduct, a: i64, b: i64) -> Result<SmashFusion, FusionError> {
    let f = h.field.clone();
    let t = Comodule::tensor(h, &smash_simple(h, a)?, &smash_simple(h, b)?)?;
    let targets: Vec<i64> = [0u8, 1].iter().map(|&r| act(r, a) + b).collect();
    let parts = targets
        .iter()
        .map(|&g| smash_simple(h, g))
        .collect::<Result<Vec<_>, _>>()?;
    let sum = Comodule::direct_sum(h, &parts.iter().collect::<Vec<_>>())?;
    let mut map = Matrix::zeros(&f, 4, 4);
    for l in 0..2usize {
        for m in 0..2usize {
            let r = l ^ m;
            map.set(r * 2 + m, l * 2 + m, f.one());
        }
    }
    let mut certified = is_morphism(&map, &t, &sum) && map.is_invertible();
    for (&g, p) in targets.iter().zip(&parts) {
        if g != 0 {
            certified &= find_iso(&smash_simple(h, g.abs())?, p).is_some();
        }
    }
    Ok(SmashFusion {
        left: simple_label(a),
        right: simple_label(b),
        summands: targets.iter().map(|&g| simple_label(g)).collect(),
        non_semisimple: targets.contains(&0),
        f: matrix_strings(&map),
        certified,
    })
}

/// Every pair 1 ≤ n, m ≤ window: f certified, summands S_{n+m} ⊕ S_{|m−n|}
/// (k^{C₂} when m = n), and non-semisimplicity exactly when O(g) = O(h⁻¹).
pub fn verify_smash_fusion(h: &SmashCoproduct) -> VerificationReport {
    let w = h.window as i64;
    let pairs: Vec<(i64, i64)> = (1..=w).flat_map(|n| (1..=w).map(move |m| (n, m))).collect();
    let mut r = VerificationReport::new(format!("smash fusion, 1 <= n, m <= {w}"));
    r.push(Check::run("summand map f", &pairs, |&(n, m)| match smash_fusion(h, n, m) {
        Ok(s) if s.certified => None,
        Ok(_) => Some(Witness {
            case: format!("S_{n} (x) S_{m}"),
            lhs: "f".into(),
            rhs: "comodule isomorphism".into(),
        }),
        Err(e) => Some(Witness {
            case: format!("S_{n} (x) S_{m}"),
            lhs: e.to_string(),
            rhs: "comodule".into(),
        }),
    }));
    r.push(Check::run("summands", &pairs, |&(n, m)| {
        let s = smash_fusion(h, n, m).ok()?;
        let mut got = s.summands.clone();
        got.sort();
        let mut want = vec![simple_label(n + m), simple_label(m - n)];
        want.sort();
        (got != want).then(|| Witness {
            case: format!("S_{n} (x) S_{m}"),
            lhs: got.join(" + "),
            rhs: want.join(" + "),
        })
    }));
    let signed: Vec<(i64, i64)> = (-w..=w)
        .filter(|&z| z != 0)
        .flat_map(|a| (-w..=w).filter(|&z| z != 0).map(move |b| (a, b)))
        .collect();
    r.push(Check::run("non-semisimple iff O(g) = O(h^-1)", &signed, |&(a, b)| {
        let s = smash_fusion(h, a, b).ok()?;
        let same_orbit = a == -b || a == b;
        (s.non_semisimple != same_orbit).then(|| Witness {
            case: format!("x^{a}, x^{b}"),
            lhs: s.non_semisimple.to_string(),
            rhs: same_orbit.to_string(),
        })
    }));
    r
}

/// k^{C₂} = span{1#δ₁, 1#δ_σ} as a comodule over itself, with coradical
/// span{1#δ₁ + 1#δ_σ}.
pub fn identity_block_loewy(h: &SmashCoproduct) -> Result<LoewySeries, CoanalysisError> {
    let basis: Vec<SmashBasis> = [0u8, 1].iter().map(|&k| SmashBasis { g: 0, k }).collect();
    let c = FiniteCoalgebra::from_hopf_basis(h, &basis)?;
    let f = h.field.clone();
    let c0 = Subspace::span(&f, 2, vec![vec![f.one(), f.one()]]);
    let filtration = c.coradical_filtration(&c0)?;
    let m = crate::coanalysis::FiniteComodule::regular(&c);
    loewy_series(&c, &m, &filtration)
}
