//! The five commands. Each validates its configuration completely before
//! any computation and returns the checks it ran plus a result document.

use crate::config::JobConfig;
use hopfkernel::algebra::HopfAlgebra;
use hopfkernel::lin::Label;
use hopfkernel::bounds::{category_data_from_extension, category_data_from_smash, check_bounds, uqsl2_fixture, CategoryData};
use hopfkernel::coanalysis::{
    block_decompose, check_group_likes, classify_block, finite_type, group_likes, hopf_socle, loewy_profile,
};
use hopfkernel::comodfusion::{
    identity_block_loewy, smash_blocks, smash_fusion, verify_fusion, verify_smash, verify_smash_fusion,
    window_simples, SmashCoproduct, SmashSpec,
};
use hopfkernel::dualization::{compare_with_bigd, verify_dual, DualSpec, StructureConstants, DEFAULT_SEED};
use hopfkernel::families::{verify_extension, verify_lifted, FamilySpec, LiftedQuantumLine, TaftExtension, Window};
use hopfkernel::report::{Check, VerificationReport, Witness};
use hopfkernel::Field;
use serde_json::{json, Value};

/// Usage or configuration problem: exit 2, nothing computed.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub struct Outcome {
    pub checks: Vec<VerificationReport>,
    pub result: Value,
}

/// A constructed job target.
pub enum Target {
    Extension(TaftExtension, Window),
    Lifted(LiftedQuantumLine),
    Smash(SmashCoproduct),
}

pub fn build_target(cfg: &JobConfig) -> Result<Option<Target>, UsageError> {
    let Some(spec) = &cfg.family else {
        return Ok(None);
    };
    let window = cfg.window.unwrap_or_default();
    if let FamilySpec::Smash { p } = spec {
        let spec = SmashSpec {
            p: *p,
            window: window.smash(),
        };
        return Ok(Some(Target::Smash(SmashCoproduct::new(spec)?)));
    }
    let field = Field::new(cfg.field.unwrap_or_else(|| spec.default_field()))?;
    Ok(Some(match spec.build(&field)? {
        hopfkernel::families::Family::Extension(h) => Target::Extension(h, window.tails()),
        hopfkernel::families::Family::Lifted(h) => Target::Lifted(h),
    }))
}

fn need_target(t: Option<Target>, command: &str) -> Result<Target, UsageError> {
    t.ok_or_else(|| UsageError(format!("{command} needs a family")))
}

/// A kernel error met after validation is a failed check, not a usage error.
fn error_check(subject: &str, name: &str, e: impl std::fmt::Display) -> VerificationReport {
    let mut r = VerificationReport::new(subject);
    r.push(Check::single(name, false, name, e.to_string(), "success"));
    r
}

pub fn verify(cfg: &JobConfig) -> Result<Outcome, UsageError> {
    let target = need_target(build_target(cfg)?, "verify")?;
    if cfg.options.dual && !matches!(target, Target::Lifted(_)) {
        return Err(UsageError("--dual applies to lifted families".into()));
    }
    Ok(match target {
        Target::Extension(h, w) => Outcome {
            result: json!({ "subject": h.describe(), "windowDim": h.window_monomials(w).len() }),
            checks: vec![verify_extension(&h, w)],
        },
        Target::Lifted(h) => {
            let mut checks = vec![verify_lifted(&h)];
            let mut result = json!({ "subject": h.describe(), "dim": h.dim() });
            if cfg.options.dual {
                let ds = DualSpec::new(h.clone())?;
                result["dual"] = json!({ "subject": ds.describe(), "dim": ds.dim() });
                let seed = cfg.options.seed.unwrap_or(DEFAULT_SEED);
                checks.push(verify_dual(&ds, seed).unwrap_or_else(|e| error_check(&ds.describe(), "dual suite", e)));
                if h.alpha().is_one() {
                    checks.push(
                        compare_with_bigd(&ds).unwrap_or_else(|e| error_check(&ds.describe(), "comparison", e)),
                    );
                }
            }
            Outcome { checks, result }
        }
        Target::Smash(h) => Outcome {
            result: json!({ "subject": h.describe(), "window": h.window(), "basis": h.basis().len() }),
            checks: vec![verify_smash(&h)],
        },
    })
}

pub fn analyze(cfg: &JobConfig) -> Result<Outcome, UsageError> {
    match need_target(build_target(cfg)?, "analyze")? {
        Target::Extension(h, w) => Ok(analyze_extension(&h, w)),
        Target::Smash(h) => Ok(analyze_smash(&h)),
        Target::Lifted(_) => Err(UsageError("analyze supports the taft, bigd, limit and smash families".into())),
    }
}

fn analyze_extension(h: &TaftExtension, w: Window) -> Outcome {
    let subject = h.describe();
    let mut checks = Vec::new();
    let mut result = json!({ "subject": subject });
    match block_decompose(h, w) {
        Ok(blocks) => {
            let mut reports = Vec::new();
            let mut blocks_report = VerificationReport::new(format!("blocks of {subject}"));
            for b in &blocks {
                let c = classify_block(h, b);
                let label = c.report().tail;
                for mut check in c.checks.checks.clone() {
                    check.name = format!("{label}: {}", check.name);
                    blocks_report.push(check);
                }
                reports.push(c.report());
            }
            result["blocks"] = json!(reports);
            checks.push(blocks_report);
        }
        Err(e) => checks.push(error_check(&subject, "block decomposition", e)),
    }
    let gl = group_likes(h, w);
    let mut glr = VerificationReport::new(format!("group-likes of {subject}"));
    glr.push(check_group_likes(h, &gl));
    checks.push(glr);
    result["groupLikes"] = json!(gl.iter().map(|g| g.to_string()).collect::<Vec<_>>());
    match hopf_socle(h, w) {
        Ok(s) => {
            let mut r = VerificationReport::new(format!("Hopf socle of {subject}"));
            r.push(Check::run("obstructions certified", &s.obstructions, |o| {
                (!o.certified).then(|| Witness {
                    case: o.tail.clone(),
                    lhs: "uncertified".into(),
                    rhs: "no group-like".into(),
                })
            }));
            r.push(Check::single(
                "socle is the span of the group-likes",
                s.dim == gl.len(),
                "window",
                s.dim.to_string(),
                gl.len().to_string(),
            ));
            checks.push(r);
            result["socle"] = json!(s);
        }
        Err(e) => checks.push(error_check(&subject, "Hopf socle", e)),
    }
    result["finiteType"] = json!(finite_type(h));
    match loewy_profile(h, w) {
        Ok(p) => {
            let mut r = VerificationReport::new(format!("Loewy profile of {subject}"));
            r.push(Check::single(
                "coradical filtration length = max Loewy length",
                p.consistent(),
                "window",
                p.coradical_filtration_length.to_string(),
                p.max_loewy_length.to_string(),
            ));
            checks.push(r);
            result["loewy"] = json!(p);
        }
        Err(e) => checks.push(error_check(&subject, "Loewy profile", e)),
    }
    Outcome { checks, result }
}

fn analyze_smash(h: &SmashCoproduct) -> Outcome {
    let mut checks = Vec::new();
    let mut blocks = Vec::new();
    for b in smash_blocks(h) {
        blocks.push(json!({
            "rep": b.rep,
            "dim": b.basis.len(),
            "class": b.class.to_string(),
            "certified": b.passed(),
        }));
        checks.push(b.checks);
    }
    let mut result = json!({ "subject": h.describe(), "blocks": blocks });
    match identity_block_loewy(h) {
        Ok(ls) => {
            result["identityBlockLoewy"] = json!({
                "dims": ls.dims,
                "loewyLength": ls.loewy_length,
                "compositionLength": ls.composition_length,
            })
        }
        Err(e) => checks.push(error_check(&h.describe(), "identity block Loewy series", e)),
    }
    Outcome { checks, result }
}

pub fn fusion(cfg: &JobConfig) -> Result<Outcome, UsageError> {
    Ok(match need_target(build_target(cfg)?, "fusion")? {
        Target::Extension(h, w) => Outcome {
            result: json!({
                "subject": h.describe(),
                "simples": window_simples(&h, w).iter().map(|s| s.label()).collect::<Vec<_>>(),
            }),
            checks: vec![verify_fusion(&h, w)],
        },
        Target::Smash(h) => {
            let n = h.window() as i64;
            let mut rules = Vec::new();
            for a in 1..=n {
                for b in a..=n {
                    match smash_fusion(&h, a, b) {
                        Ok(f) => rules.push(json!({
                            "left": f.left,
                            "right": f.right,
                            "summands": f.summands,
                            "nonSemisimple": f.non_semisimple,
                            "certified": f.certified,
                        })),
                        Err(e) => rules.push(json!({ "left": a, "right": b, "error": e.to_string() })),
                    }
                }
            }
            Outcome {
                result: json!({ "subject": h.describe(), "rules": rules }),
                checks: vec![verify_smash_fusion(&h)],
            }
        }
        Target::Lifted(_) => return Err(UsageError("fusion supports the extension and smash families".into())),
    })
}

fn load_data(cfg: &JobConfig) -> Result<Option<CategoryData>, UsageError> {
    match (&cfg.options.data, cfg.options.fixture.as_deref()) {
        (Some(_), Some(_)) => Err(UsageError("give either a data file or a fixture".into())),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            Ok(Some(CategoryData::from_json(&text)?))
        }
        (None, Some("fixture:uqsl2")) => Ok(Some(uqsl2_fixture())),
        (None, Some(other)) => Err(UsageError(format!("unknown fixture {other:?}"))),
        (None, None) => Ok(None),
    }
}

pub fn bounds(cfg: &JobConfig) -> Result<Outcome, UsageError> {
    let given = load_data(cfg)?;
    let target = build_target(cfg)?;
    if given.is_some() && target.is_some() {
        return Err(UsageError("bounds takes either category data or a family".into()));
    }
    let data = match (given, target) {
        (Some(d), _) => Ok(d),
        (None, Some(Target::Extension(h, w))) => category_data_from_extension(&h, w),
        (None, Some(Target::Smash(h))) => category_data_from_smash(&h),
        (None, Some(Target::Lifted(_))) => {
            return Err(UsageError("kernel-derived category data needs an extension or smash family".into()))
        }
        (None, None) => return Err(UsageError("bounds needs --data or a family".into())),
    };
    let data = match data {
        Ok(d) => d,
        Err(e) => {
            return Ok(Outcome {
                checks: vec![error_check("category data", "derive category data", e)],
                result: Value::Null,
            })
        }
    };
    let subject = data.name.clone().unwrap_or_else(|| "category data".into());
    Ok(match check_bounds(&data) {
        Ok(rep) => {
            let claims: Vec<String> = rep
                .rows
                .iter()
                .map(|row| {
                    let mut s = format!("l(E({})) = {} <= {}", row.simple, row.length, row.refined);
                    if let Some(c) = &row.cor1 {
                        s += &format!(", {} <= {c}", row.length);
                    }
                    if row.tight {
                        s += " (tight)";
                    }
                    s
                })
                .collect();
            let mut result = json!({
                "data": serde_json::from_str::<Value>(&data.to_json()).unwrap_or(Value::Null),
                "d": rep.d,
                "dimE1": rep.dim_e1,
                "rows": rep.rows,
                "claims": claims,
            });
            if let Some(b) = rep.b {
                result["b"] = json!(b);
            }
            if let Some(r) = rep.r {
                result["r"] = json!(r);
            }
            Outcome {
                checks: vec![rep.report],
                result,
            }
        }
        Err(e) => {
            let mut r = VerificationReport::new(subject);
            r.push(data.check_invariants());
            r.push(Check::single("bounds computable", false, "data", e.to_string(), "complete data"));
            Outcome {
                checks: vec![r],
                result: Value::Null,
            }
        }
    })
}

fn delta_table<H: HopfAlgebra>(h: &H, basis: &[H::Basis]) -> Value {
    json!(basis
        .iter()
        .map(|b| json!({
            "basis": b.label(),
            "delta": h.delta_basis(b).to_string(),
            "counit": h.counit_basis(b).to_string(),
        }))
        .collect::<Vec<_>>())
}

pub fn dump(cfg: &JobConfig) -> Result<Outcome, UsageError> {
    let result = match need_target(build_target(cfg)?, "dump")? {
        Target::Extension(h, w) => {
            json!({ "subject": h.describe(), "delta": delta_table(&h, &h.window_monomials(w)) })
        }
        Target::Smash(h) => json!({ "subject": h.describe(), "delta": delta_table(&h, &h.basis()) }),
        Target::Lifted(h) => {
            let sc = StructureConstants::from_hopf(&h, &h.basis())?;
            json!({
                "subject": h.describe(),
                "structureConstants": serde_json::from_str::<Value>(&sc.to_json())?,
            })
        }
    };
    Ok(Outcome {
        checks: Vec::new(),
        result,
    })
}
