//! Length bounds for indecomposable injectives, on declared category data
//! or on data assembled from the kernel's own computations.

use crate::coanalysis::{
    group_likes, loewy_series, sort_tails, taft_injective_summands, tail_label, CoanalysisError, FiniteCoalgebra,
    FiniteComodule,
};
use crate::comodfusion::{identity_block_loewy, FusionError, SmashCoproduct};
use crate::families::{tails_in_window, Monomial, TaftExtension, Window};
use crate::linalg::Subspace;
use crate::report::{Check, VerificationReport, Witness};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("missing category data: {0}")]
    Missing(String),
    #[error("unknown simple {0}")]
    UnknownSimple(String),
    #[error("invalid category data: {0}")]
    Json(String),
    #[error(transparent)]
    Coanalysis(#[from] CoanalysisError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleEntry {
    pub name: String,
    pub dim: u64,
}

/// A composition factor with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub name: String,
    pub mult: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Envelope {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<u64>,
    /// ℓ(E(S)), when stated without a factor list
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<Factor>>,
}

/// Data on E(1) ⊗ X* for one chosen X.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TensorData {
    pub dim_x: u64,
    /// b_X stated directly
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    /// composition factors of E(1) ⊗ X*
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<Factor>>,
    /// number of one-dimensional composition factors of X
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CategoryData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub simples: Vec<SimpleEntry>,
    #[serde(default)]
    pub inj_envelope: BTreeMap<String, Envelope>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_e1: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comp_e1: Option<Vec<Factor>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comp_e1_tensor_e1_dual: Option<Vec<Factor>>,
    #[serde(default)]
    pub per_tensor: BTreeMap<String, TensorData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinguished_group_like: Option<String>,
    /// where each field came from: "published", "derived" or "kernel"
    #[serde(default)]
    pub provenance: BTreeMap<String, String>,
}

/// The name under which E(1) appears in `per_tensor`.
pub const E1: &str = "E(1)";

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

impl CategoryData {
    pub fn from_json(text: &str) -> Result<Self, BoundsError> {
        serde_json::from_str(text).map_err(|e| BoundsError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("category data serializes")
    }

    pub fn simple_dim(&self, name: &str) -> Result<u64, BoundsError> {
        self.simples
            .iter()
            .find(|s| s.name == name)
            .map(|s| s.dim)
            .ok_or_else(|| BoundsError::UnknownSimple(name.into()))
    }

    fn factors_dim(&self, fs: &[Factor]) -> Result<BigInt, BoundsError> {
        let mut acc = BigInt::from(0);
        for f in fs {
            acc += big(self.simple_dim(&f.name)?) * big(f.mult);
        }
        Ok(acc)
    }

    fn max_dim(&self, fs: &[Factor]) -> Result<u64, BoundsError> {
        let mut d = 0;
        for f in fs.iter().filter(|f| f.mult > 0) {
            d = d.max(self.simple_dim(&f.name)?);
        }
        Ok(d)
    }

    /// d: the largest dimension of a composition factor of E(1).
    pub fn d(&self) -> Result<u64, BoundsError> {
        self.max_dim(self.comp_e1.as_deref().ok_or_else(|| BoundsError::Missing("compE1".into()))?)
    }

    pub fn dim_e1(&self) -> Result<u64, BoundsError> {
        self.dim_e1.ok_or_else(|| BoundsError::Missing("dimE1".into()))
    }

    /// b_X, stated or read off the factors of E(1) ⊗ X* (for X = E(1) the
    /// factors may also come from compE1TensorE1Dual).
    pub fn b(&self, x: &str) -> Result<u64, BoundsError> {
        let t = self.tensor(x)?;
        if let Some(b) = t.b {
            return Ok(b);
        }
        if let Some(fs) = &t.factors {
            return self.max_dim(fs);
        }
        match (&self.comp_e1_tensor_e1_dual, x == E1) {
            (Some(fs), true) => self.max_dim(fs),
            _ => Err(BoundsError::Missing(format!("b for {x}"))),
        }
    }

    pub fn tensor(&self, x: &str) -> Result<&TensorData, BoundsError> {
        self.per_tensor
            .get(x)
            .ok_or_else(|| BoundsError::Missing(format!("perTensor {x}")))
    }

    /// ℓ(E(S)) from the stated length or the factor list.
    pub fn envelope_length(&self, s: &str) -> Option<u64> {
        let e = self.inj_envelope.get(s)?;
        e.length
            .or_else(|| e.factors.as_ref().map(|fs| fs.iter().map(|f| f.mult).sum()))
    }

    /// dimE1 = Σ dims of compE1; every envelope's factors sum to its dim and
    /// agree with its stated length.
    pub fn check_invariants(&self) -> Check {
        let mut cases: Vec<(String, Result<bool, BoundsError>, String, String)> = Vec::new();
        if let (Some(d), Some(fs)) = (self.dim_e1, &self.comp_e1) {
            let s = self.factors_dim(fs);
            cases.push((
                "dimE1".into(),
                s.as_ref().map(|v| *v == big(d)).map_err(Clone::clone),
                s.map(|v| v.to_string()).unwrap_or_default(),
                d.to_string(),
            ));
        }
        for (name, e) in &self.inj_envelope {
            if let Err(err) = self.simple_dim(name) {
                cases.push((format!("E({name})"), Err(err), String::new(), String::new()));
                continue;
            }
            if let (Some(d), Some(fs)) = (e.dim, &e.factors) {
                let s = self.factors_dim(fs);
                cases.push((
                    format!("dim E({name})"),
                    s.as_ref().map(|v| *v == big(d)).map_err(Clone::clone),
                    s.map(|v| v.to_string()).unwrap_or_default(),
                    d.to_string(),
                ));
            }
            if let (Some(l), Some(fs)) = (e.length, &e.factors) {
                let s: u64 = fs.iter().map(|f| f.mult).sum();
                cases.push((format!("length E({name})"), Ok(s == l), s.to_string(), l.to_string()));
            }
        }
        Check::run("data invariants", &cases, |(case, ok, lhs, rhs)| match ok {
            Ok(true) => None,
            Ok(false) => Some(Witness {
                case: case.clone(),
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            }),
            Err(e) => Some(Witness {
                case: case.clone(),
                lhs: e.to_string(),
                rhs: "known simple".into(),
            }),
        })
    }
}

/// d · dim E(1).
pub fn bound_refined(data: &CategoryData) -> Result<BigInt, BoundsError> {
    Ok(big(data.d()?) * big(data.dim_e1()?))
}

/// b_X · dim X.
pub fn bound_tensor(data: &CategoryData, x: &str) -> Result<BigInt, BoundsError> {
    Ok(big(data.b(x)?) * big(data.tensor(x)?.dim_x))
}

/// b_X · dim X − r_X (b_X − 1).
pub fn bound_cor1(data: &CategoryData, x: &str, r: u64) -> Result<BigInt, BoundsError> {
    let b = big(data.b(x)?);
    Ok(bound_tensor(data, x)? - big(r) * (b - 1))
}

fn ser_big<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(i) => s.serialize_i64(i),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

fn ser_opt_big<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(b) => ser_big(b, s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundRow {
    pub simple: String,
    pub length: u64,
    #[serde(serialize_with = "ser_big")]
    pub refined: BigInt,
    #[serde(serialize_with = "ser_opt_big")]
    pub cor1: Option<BigInt>,
    pub tight: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundsReport {
    pub d: u64,
    pub dim_e1: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    pub rows: Vec<BoundRow>,
    pub report: VerificationReport,
}

impl BoundsReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// ℓ(E(S)) ≤ d·dim E(1) and ℓ(E(S)) ≤ b·dim E(1) − r(b − 1) for every simple
/// with envelope data, plus r ≥ 2 when E(1) is not simple.
pub fn check_bounds(data: &CategoryData) -> Result<BoundsReport, BoundsError> {
    let d = data.d()?;
    let dim_e1 = data.dim_e1()?;
    let refined = bound_refined(data)?;
    let mut report = VerificationReport::new(data.name.clone().unwrap_or_else(|| "category data".into()));
    report.push(data.check_invariants());
    let (b, r) = match data.per_tensor.get(E1) {
        Some(t) => {
            let b = data.b(E1)?;
            let r = match t.r {
                Some(r) => r,
                None => {
                    let fs = data.comp_e1.as_deref().unwrap_or_default();
                    let mut r = 0;
                    for f in fs {
                        if data.simple_dim(&f.name)? == 1 {
                            r += f.mult;
                        }
                    }
                    r
                }
            };
            (Some(b), Some(r))
        }
        None => (None, None),
    };
    let cor1 = match r {
        Some(r) => Some(bound_cor1(data, E1, r)?),
        None => None,
    };
    let mut rows = Vec::new();
    for s in &data.simples {
        if let Some(l) = data.envelope_length(&s.name) {
            let tight = big(l) == refined || cor1.as_ref().is_some_and(|c| big(l) == *c);
            rows.push(BoundRow {
                simple: s.name.clone(),
                length: l,
                refined: refined.clone(),
                cor1: cor1.clone(),
                tight,
            });
        }
    }
    if rows.is_empty() {
        return Err(BoundsError::Missing("injEnvelope".into()));
    }
    report.push(Check::run("refined bound", &rows, |row| {
        (big(row.length) > row.refined).then(|| Witness {
            case: format!("E({})", row.simple),
            lhs: row.length.to_string(),
            rhs: row.refined.to_string(),
        })
    }));
    if cor1.is_some() {
        report.push(Check::run("tensor bound", &rows, |row| {
            let c = row.cor1.as_ref().unwrap();
            (big(row.length) > *c).then(|| Witness {
                case: format!("E({})", row.simple),
                lhs: row.length.to_string(),
                rhs: c.to_string(),
            })
        }));
    }
    let e1_simple = data
        .comp_e1
        .as_ref()
        .map(|fs| fs.iter().map(|f| f.mult).sum::<u64>() <= 1)
        .unwrap_or(true);
    if let (Some(r), false) = (r, e1_simple) {
        report.push(Check::single("r >= 2", r >= 2, E1, r.to_string(), "2"));
    }
    Ok(BoundsReport {
        d,
        dim_e1,
        b,
        r,
        rows,
        report,
    })
}

fn unit(field: &crate::Field, n: usize, i: usize) -> Vec<crate::Scalar> {
    (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect()
}

/// The socle series of E(R_g) for g = u^t a_F^E, with one composition
/// factor per layer, each named by its group-like.
fn grouplike_envelope(h: &TaftExtension, g: &Monomial) -> Result<Envelope, BoundsError> {
    let basis = h.monomials(std::slice::from_ref(&g.tail));
    let c = FiniteCoalgebra::from_hopf_basis(h, &basis)?;
    let c0 = c.coradical_char0()?;
    let filt = c.coradical_filtration(&c0)?;
    let reg = FiniteComodule::regular(&c);
    let e = taft_injective_summands(h, &g.tail)
        .into_iter()
        .find(|e| e[0] == *g)
        .ok_or_else(|| BoundsError::Missing(format!("E({g})")))?;
    let pos = |m: &Monomial| basis.iter().position(|b| b == m).unwrap();
    let w = Subspace::span(c.field(), c.dim(), e.iter().map(|m| unit(c.field(), c.dim(), pos(m))).collect());
    let sub = reg.restrict(&w)?;
    let ls = loewy_series(&c, &sub, &filt)?;
    let mut factors = Vec::new();
    let mut prev = Subspace::zero(c.field(), sub.dim());
    for s in &ls.socles {
        let cf = sub.coefficient_space(&c, s, &prev);
        for (i, m) in basis.iter().enumerate() {
            if m.s == 0 && cf.contains(&unit(c.field(), c.dim(), i)) {
                factors.push(Factor {
                    name: format!("R({m})"),
                    mult: 1,
                });
            }
        }
        prev = s.clone();
    }
    if factors.len() != ls.composition_length {
        return Err(BoundsError::Missing(format!("layer simples of E({g})")));
    }
    Ok(Envelope {
        dim: Some(sub.dim() as u64),
        length: Some(ls.composition_length as u64),
        factors: Some(factors),
    })
}

/// Category data of an extension family over a window: every group-like
/// simple with its injective hull, every matrix-block simple (injective),
/// and E(1) inside the Taft block.
pub fn category_data_from_extension(h: &TaftExtension, w: Window) -> Result<CategoryData, BoundsError> {
    let n = h.n() as u64;
    let mut data = CategoryData {
        name: Some(format!("{}, window {}x{}", h.describe(), w.max_support, w.max_abs_exp)),
        ..Default::default()
    };
    let gl = group_likes(h, w);
    for g in &gl {
        data.simples.push(SimpleEntry {
            name: format!("R({g})"),
            dim: 1,
        });
    }
    let mut tails = tails_in_window(h.indices(), w);
    sort_tails(&mut tails);
    for t in tails.iter().filter(|t| !h.mu(t).is_zero()) {
        let name = format!("S({})", tail_label(t));
        data.simples.push(SimpleEntry { name: name.clone(), dim: n });
        data.inj_envelope.insert(
            name.clone(),
            Envelope {
                dim: Some(n),
                length: Some(1),
                factors: Some(vec![Factor { name, mult: 1 }]),
            },
        );
    }
    for g in &gl {
        data.inj_envelope.insert(format!("R({g})"), grouplike_envelope(h, g)?);
    }
    let e1 = data
        .inj_envelope
        .get(&format!("R({})", Monomial::one()))
        .cloned()
        .ok_or_else(|| BoundsError::Missing("E(1)".into()))?;
    data.dim_e1 = e1.dim;
    data.comp_e1 = e1.factors.clone();
    // E(1) ⊗ E(1)* lies in the Taft block, whose simples are group-likes
    data.per_tensor.insert(
        E1.into(),
        TensorData {
            dim_x: n,
            b: Some(1),
            factors: None,
            r: None,
        },
    );
    for k in ["simples", "injEnvelope", "dimE1", "compE1"] {
        data.provenance.insert(k.into(), "kernel".into());
    }
    data.provenance.insert("perTensor".into(), "derived".into());
    Ok(data)
}

/// kZ # k^{C₂} in characteristic 2: E(1) = k^{C₂} with two trivial layers,
/// the S_z simple and injective.
pub fn category_data_from_smash(h: &SmashCoproduct) -> Result<CategoryData, BoundsError> {
    let ls = identity_block_loewy(h)?;
    let mut data = CategoryData {
        name: Some(format!("kZ # k^C2 over F2, |z| <= {}", h.window())),
        ..Default::default()
    };
    data.simples.push(SimpleEntry { name: "k".into(), dim: 1 });
    let e1 = Envelope {
        dim: Some(2),
        length: Some(ls.composition_length as u64),
        factors: Some(vec![Factor {
            name: "k".into(),
            mult: ls.composition_length as u64,
        }]),
    };
    data.inj_envelope.insert("k".into(), e1.clone());
    for z in 1..=h.window() {
        let name = format!("S_{z}");
        data.simples.push(SimpleEntry { name: name.clone(), dim: 2 });
        data.inj_envelope.insert(
            name.clone(),
            Envelope {
                dim: Some(2),
                length: Some(1),
                factors: Some(vec![Factor { name, mult: 1 }]),
            },
        );
    }
    data.dim_e1 = e1.dim;
    data.comp_e1 = e1.factors;
    // the identity orbit block has k as its only simple
    data.per_tensor.insert(
        E1.into(),
        TensorData {
            dim_x: 2,
            b: Some(1),
            factors: None,
            r: None,
        },
    );
    for k in ["simples", "injEnvelope", "dimE1", "compE1"] {
        data.provenance.insert(k.into(), "kernel".into());
    }
    data.provenance.insert("perTensor".into(), "derived".into());
    Ok(data)
}

/// The bundled u_q(sl₂)* data at a primitive cube root of unity.
pub const UQSL2_Q3: &str = include_str!("../fixtures/uqsl2_q3.json");

pub fn uqsl2_fixture() -> CategoryData {
    CategoryData::from_json(UQSL2_Q3).expect("bundled fixture parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_numbers() {
        let d = uqsl2_fixture();
        assert_eq!(bound_refined(&d).unwrap(), BigInt::from(12));
        assert_eq!(bound_tensor(&d, E1).unwrap(), BigInt::from(18));
        assert_eq!(bound_cor1(&d, E1, 2).unwrap(), BigInt::from(14));
    }
}
