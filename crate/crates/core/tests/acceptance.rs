//! Acceptance run: one PASS/FAIL line per criterion, exact equality
//! throughout. Criterion 10 reruns 1 through 9 and compares the JSON reports
//! byte for byte.

use hopfkernel::bounds::{
    bound_cor1, bound_refined, category_data_from_extension, check_bounds, uqsl2_fixture, E1,
};
use hopfkernel::coanalysis::{
    block_decompose, classify_block, finite_type, group_likes, hopf_socle, loewy_profile, BlockClass,
};
use hopfkernel::comodfusion::{
    dual_pair_certificate, smash_blocks, verify_fusion, verify_smash, verify_smash_fusion, SmashCoproduct, SmashSpec,
};
use hopfkernel::dualization::{verify_dual, DualSpec, DEFAULT_SEED};
use hopfkernel::families::{verify_extension, LiftedQuantumLine, TaftExtension, Tail, Window};
use hopfkernel::report::VerificationReport;
use hopfkernel::{Field, Scalar};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::time::Instant;

/// Outcome of one criterion: verdict, a one-line summary, and the report
/// compared across runs.
struct Verdict {
    ok: bool,
    summary: String,
    report: Value,
}

fn lcm2(n: u32) -> u32 {
    if n.is_multiple_of(2) {
        n
    } else {
        2 * n
    }
}

#[derive(Clone, Copy, Debug)]
enum QChoice {
    One,
    Omega,
    T,
}

fn bigd(n: u32, alpha: i64, q: QChoice, indices: u32) -> TaftExtension {
    let f = Field::cyclotomic(lcm2(n)).unwrap();
    let w = f.primitive_root(n as u64).unwrap();
    let qv: Scalar = match q {
        QChoice::One => f.one(),
        QChoice::Omega => w.clone(),
        QChoice::T => f.t().unwrap(),
    };
    let qs = (1..=indices).map(|i| (i, qv.clone())).collect();
    TaftExtension::bigd(&f, n, n, w, qs, f.int(alpha)).unwrap()
}

fn taft(n: u32) -> TaftExtension {
    let f = Field::cyclotomic(lcm2(n)).unwrap();
    TaftExtension::taft(&f, n, f.primitive_root(n as u64).unwrap()).unwrap()
}

fn full_window(indices: u32) -> Window {
    Window {
        max_support: indices as usize,
        max_abs_exp: 2,
    }
}

fn first_failure(r: &VerificationReport) -> String {
    match r.failures().next() {
        Some(c) => format!("{}: {} failed ({:?})", r.subject, c.name, c.witness),
        None => String::new(),
    }
}

fn axiom_specs() -> Vec<(u32, i64, QChoice, u32)> {
    let mut out = Vec::new();
    for n in [2, 3, 4, 6] {
        for alpha in [0, 1] {
            for q in [QChoice::One, QChoice::Omega, QChoice::T] {
                for i in [1, 2] {
                    out.push((n, alpha, q, i));
                }
            }
        }
    }
    out
}

/// Criteria 1 and 2 share the runs.
fn axiom_reports() -> Vec<VerificationReport> {
    axiom_specs()
        .into_iter()
        .map(|(n, alpha, q, i)| verify_extension(&bigd(n, alpha, q, i), full_window(i)))
        .collect()
}

fn criterion1(reports: &[VerificationReport]) -> Verdict {
    let mut ok = true;
    let mut summary = format!("{} specs, zero failures", reports.len());
    let mut json = Vec::new();
    for r in reports {
        let mut axioms = r.clone();
        axioms.checks.retain(|c| c.name != "delta_closed_equals_generated");
        if !axioms.passed() && ok {
            ok = false;
            summary = first_failure(&axioms);
        }
        json.push(json!(axioms));
    }
    Verdict {
        ok,
        summary,
        report: json!(json),
    }
}

fn criterion2(reports: &[VerificationReport]) -> Verdict {
    let mut ok = true;
    let mut cases = 0;
    let mut summary = String::new();
    let mut json = Vec::new();
    for r in reports {
        let c = r.checks.iter().find(|c| c.name == "delta_closed_equals_generated");
        match c {
            Some(c) => {
                cases += c.cases;
                if !c.passed() && ok {
                    ok = false;
                    summary = format!("{}: {:?}", r.subject, c.witness);
                }
                json.push(json!(c));
            }
            None => {
                ok = false;
                summary = format!("{}: no closed-formula check", r.subject);
            }
        }
    }
    if ok {
        summary = format!("{cases} window monomials agree");
    }
    Verdict {
        ok,
        summary,
        report: json!(json),
    }
}

fn criterion3() -> Verdict {
    let f = Field::cyclotomic(4).unwrap();
    let cases = [
        LiftedQuantumLine::new(&f, vec![4], vec![1], vec![f.int(-1)], f.one()).unwrap(),
        LiftedQuantumLine::new(&f, vec![2, 2], vec![1, 0], vec![f.int(-1), f.int(-1)], f.zero()).unwrap(),
    ];
    let mut ok = true;
    let mut summary = String::new();
    let mut json = Vec::new();
    for h in cases {
        let ds = DualSpec::new(h).unwrap();
        let r = verify_dual(&ds, DEFAULT_SEED).unwrap();
        let has = |p: &str| r.checks.iter().any(|c| c.name.starts_with(p));
        let complete = ds.dim() == 8 && has("pairing_matrix_nonsingular") && has("delta(A") && has("antipode(A");
        if (!r.passed() || !complete) && ok {
            ok = false;
            summary = if complete {
                first_failure(&r)
            } else {
                format!("{}: suite incomplete", r.subject)
            };
        }
        json.push(json!(r));
    }
    if ok {
        summary = "C4 (alpha = 1) and C2xC2 (alpha = 0): relations, coproducts, antipodes, 8x8 pairing".into();
    }
    Verdict {
        ok,
        summary,
        report: json!(json),
    }
}

fn criterion4() -> Verdict {
    let mut ok = true;
    let mut summary = String::new();
    let (mut matrix, mut taft_like) = (0, 0);
    let mut json = Vec::new();
    for n in [2, 3] {
        for q in [QChoice::T, QChoice::Omega] {
            for i in [1, 2] {
                let h = bigd(n, 1, q, i);
                let blocks = block_decompose(&h, full_window(i)).unwrap();
                for b in &blocks {
                    let c = classify_block(&h, b);
                    let want = if h.mu(&b.tail).is_zero() {
                        taft_like += 1;
                        BlockClass::TaftBlock
                    } else {
                        matrix += 1;
                        BlockClass::MatrixBlock(n)
                    };
                    let comult = c.checks.checks.iter().find(|k| k.name.contains("comultiplicative"));
                    let all_pairs = comult.is_some_and(|k| k.cases >= (n * n) as usize);
                    if (!c.passed() || c.class != want || !all_pairs) && ok {
                        ok = false;
                        summary = format!("{} block {}: {} vs {want} ({})", h.describe(), b.tail, c.class, c.checks);
                    }
                    json.push(json!(c.report()));
                }
            }
        }
    }
    if ok {
        summary = format!("{matrix} matrix blocks via Phi, {taft_like} Taft translates, all certified");
    }
    Verdict {
        ok,
        summary,
        report: json!(json),
    }
}

fn criterion5() -> Verdict {
    let mut fails = Vec::new();
    let mut json = Vec::new();
    for n in [2, 3, 4] {
        for (alpha, q, want) in [
            (0, QChoice::T, true),
            (0, QChoice::Omega, true),
            (1, QChoice::Omega, true),
            (1, QChoice::One, true),
            (1, QChoice::T, false),
        ] {
            for i in [1, 2] {
                let h = bigd(n, alpha, q, i);
                let ft = finite_type(&h);
                if ft.value != want {
                    fails.push(format!("{}: finite_type {} != {want}", h.describe(), ft.value));
                }
                let w = full_window(i);
                let gl = group_likes(&h, w);
                let s = hopf_socle(&h, w).unwrap();
                if s.dim != gl.len() || s.group_likes.len() != gl.len() {
                    fails.push(format!("{}: socle dim {} vs {} group-likes", h.describe(), s.dim, gl.len()));
                }
                if alpha == 1 && matches!(q, QChoice::T) && i == 1 {
                    let taft_gl: Vec<String> = (0..n)
                        .map(|k| hopfkernel::families::Monomial::grouplike(k, Tail::empty()).to_string())
                        .collect();
                    if s.dim != n as usize || s.group_likes != taft_gl || s.socle_tails != vec!["(0,0)".to_string()] {
                        fails.push(format!("{}: socle {:?}", h.describe(), s.group_likes));
                    }
                }
                json.push(json!({ "subject": h.describe(), "finiteType": ft, "socle": s }));
            }
        }
    }
    Verdict {
        ok: fails.is_empty(),
        summary: fails
            .first()
            .cloned()
            .unwrap_or_else(|| format!("{} specs: finite type and windowed socle as predicted", json.len())),
        report: json!(json),
    }
}

fn criterion6() -> Verdict {
    let mut fails = Vec::new();
    let mut json = Vec::new();
    let mut pairs = 0;
    for n in [2, 3] {
        let h = bigd(n, 1, QChoice::T, 1);
        let w = full_window(1);
        let r = verify_fusion(&h, w);
        let p: usize = r
            .checks
            .iter()
            .filter(|c| ["R (x) R'", "R (x) S", "S (x) S'"].contains(&c.name.as_str()))
            .map(|c| c.cases)
            .sum();
        pairs += p;
        if !r.passed() {
            fails.push(first_failure(&r));
        }
        if p < 20 {
            fails.push(format!("{}: only {p} pairs", h.describe()));
        }
        for e in [-2, -1, 1, 2] {
            let c = dual_pair_certificate(&h, &Tail::single(1, e)).unwrap();
            if !c.passed() || c.hom_dims != vec![1; n as usize] || !c.coefficient_is_taft {
                fails.push(format!("{}: S (x) S* at e = {e}: hom dims {:?}", h.describe(), c.hom_dims));
            }
            json.push(json!(c));
        }
        json.push(json!(r));
    }
    let f = Field::cyclotomic(2).unwrap();
    let limit = TaftExtension::limit(&f, 2, f.int(-1), &[1]).unwrap();
    let r = verify_fusion(
        &limit,
        Window {
            max_support: 1,
            max_abs_exp: 4,
        },
    );
    let names = ["k_chi (x) k_chi = k", "k_chi (x) S_z = S_z", "S_z (x) S_-z = H4", "S_z (x) S_z' = S_(z+z')^2"];
    if !names.iter().all(|n| r.checks.iter().any(|c| c.name == *n && c.cases > 0)) {
        fails.push("limit rules missing".into());
    }
    if !r.passed() {
        fails.push(first_failure(&r));
    }
    json.push(json!(r));
    Verdict {
        ok: fails.is_empty(),
        summary: fails
            .first()
            .cloned()
            .unwrap_or_else(|| format!("{pairs} pairs for n = 2, 3; duals give T_n; limit rules for |z| <= 4")),
        report: json!(json),
    }
}

fn criterion7() -> Verdict {
    let h = SmashCoproduct::new(SmashSpec { p: 2, window: 8 }).unwrap();
    let mut fails = Vec::new();
    let axioms = verify_smash(&h);
    if !axioms.passed() {
        fails.push(first_failure(&axioms));
    }
    let blocks = smash_blocks(&h);
    let mut json = vec![json!(axioms)];
    for b in &blocks {
        let want = if b.rep == 0 {
            BlockClass::FunctionAlgebraBlock(2)
        } else {
            BlockClass::MatrixBlock(2)
        };
        if !b.passed() || b.class != want {
            fails.push(format!("block {}: {} ({})", b.rep, b.class, b.checks));
        }
        json.push(json!({ "rep": b.rep, "class": b.class.to_string(), "checks": b.checks }));
    }
    if blocks.len() != 9 {
        fails.push(format!("{} blocks for |z| <= 8", blocks.len()));
    }
    let fusion = verify_smash_fusion(&h);
    if !fusion.passed() || fusion.checks.iter().any(|c| c.cases == 0) {
        fails.push(first_failure(&fusion));
    }
    let cases: usize = fusion.checks.iter().map(|c| c.cases).sum();
    json.push(json!(fusion));
    Verdict {
        ok: fails.is_empty(),
        summary: fails
            .first()
            .cloned()
            .unwrap_or_else(|| format!("axioms, 9 blocks, map f and fusion rules over {cases} cases")),
        report: json!(json),
    }
}

fn criterion8() -> Verdict {
    let mut fails = Vec::new();
    let data = uqsl2_fixture();
    let rep = check_bounds(&data).unwrap();
    let v1 = rep.rows.iter().find(|r| r.simple == "V1").unwrap();
    let refined = bound_refined(&data).unwrap();
    let cor1 = bound_cor1(&data, E1, 2).unwrap();
    let (d, dim_e1, b) = (data.d().unwrap(), data.dim_e1().unwrap(), data.b(E1).unwrap());
    if (d, dim_e1, b, rep.r) != (2, 6, 3, Some(2)) {
        fails.push(format!("data (d, dimE1, b, r) = ({d}, {dim_e1}, {b}, {:?})", rep.r));
    }
    if v1.length != 4 || v1.refined != BigInt::from(12) || v1.cor1 != Some(BigInt::from(14)) {
        fails.push(format!("E(V1): {} <= {} , {:?}", v1.length, v1.refined, v1.cor1));
    }
    if refined != BigInt::from(12) || cor1 != BigInt::from(3 * 6 - 2 * 2) || cor1 != BigInt::from(14) {
        fails.push(format!("bounds {refined}, {cor1}"));
    }
    if !rep.passed() {
        fails.push(first_failure(&rep.report));
    }
    let mut json = vec![json!(rep)];
    for n in [2, 3, 4, 5] {
        let h = taft(n);
        let data = category_data_from_extension(&h, Window::default()).unwrap();
        let rep = check_bounds(&data).unwrap();
        let n64 = n as u64;
        let tight = rep.rows.iter().all(|r| {
            r.length == n64 && r.refined == BigInt::from(n) && r.cor1 == Some(BigInt::from(n)) && r.tight
        });
        if rep.dim_e1 != n64 || !tight || rep.rows.len() != n as usize || !rep.passed() {
            fails.push(format!("Taft n = {n}: {}", serde_json::to_string(&rep).unwrap()));
        }
        json.push(json!(rep));
    }
    Verdict {
        ok: fails.is_empty(),
        summary: fails
            .first()
            .cloned()
            .unwrap_or_else(|| "fixture: 4 <= 12 and 4 <= 14 = 3*6 - 2*2; Taft n = 2..5: l(E(S)) = dimE1 = n, tight".into()),
        report: json!(json),
    }
}

fn criterion9() -> Verdict {
    let mut fails = Vec::new();
    let mut json = Vec::new();
    for n in 2..=6 {
        let p = loewy_profile(&taft(n), Window::default()).unwrap();
        let all_n = p.summands.len() == n as usize && p.summands.iter().all(|s| s.loewy_length == n as usize);
        if !all_n || !p.consistent() {
            fails.push(format!("T_{n}: {}", serde_json::to_string(&p).unwrap()));
        }
        json.push(json!(p));
    }
    // a window with matrix blocks as well
    for n in [2, 3] {
        let p = loewy_profile(&bigd(n, 1, QChoice::T, 1), full_window(1)).unwrap();
        if !p.consistent() || p.coradical_filtration_length != n as usize {
            fails.push(format!("BigD n = {n}: {}", serde_json::to_string(&p).unwrap()));
        }
        json.push(json!(p));
    }
    Verdict {
        ok: fails.is_empty(),
        summary: fails
            .first()
            .cloned()
            .unwrap_or_else(|| "T_n, n = 2..6: every E_t has Loewy length n = coradical filtration length".into()),
        report: json!(json),
    }
}

/// Criteria 1 through 9 in order.
fn run_all() -> Vec<(Verdict, u128)> {
    let mut out = Vec::new();
    let t = Instant::now();
    let axioms = axiom_reports();
    let shared = t.elapsed().as_millis();
    let t = Instant::now();
    let v = criterion1(&axioms);
    out.push((v, shared + t.elapsed().as_millis()));
    let t = Instant::now();
    let v = criterion2(&axioms);
    out.push((v, t.elapsed().as_millis()));
    let fs: [fn() -> Verdict; 7] = [criterion3, criterion4, criterion5, criterion6, criterion7, criterion8, criterion9];
    for f in fs {
        let t = Instant::now();
        let v = f();
        out.push((v, t.elapsed().as_millis()));
    }
    out
}

fn report_json(run: &[(Verdict, u128)]) -> String {
    let all: Vec<Value> = run
        .iter()
        .enumerate()
        .map(|(i, (v, _))| json!({ "criterion": i + 1, "pass": v.ok, "report": v.report }))
        .collect();
    serde_json::to_string(&all).unwrap()
}

fn main() {
    const NAMES: [&str; 10] = [
        "Hopf-axiom suite",
        "closed-formula cross-check",
        "dual construction",
        "block classification",
        "socle and finite type",
        "fusion rules",
        "smash coproduct suite",
        "bounds",
        "Loewy machinery",
        "determinism",
    ];
    let first = run_all();
    let second = run_all();
    let (a, b) = (report_json(&first), report_json(&second));
    let mut all_ok = true;
    for (i, (v, ms)) in first.iter().enumerate() {
        all_ok &= v.ok;
        let mark = if v.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {mark} {} ({ms} ms): {}", i + 1, NAMES[i], v.summary);
    }
    let same = a == b;
    all_ok &= same;
    println!(
        "criterion 10 {} {}: {}",
        if same { "PASS" } else { "FAIL" },
        NAMES[9],
        if same {
            format!("two runs, {} bytes of JSON, identical", a.len())
        } else {
            "reports differ between runs".to_string()
        }
    );
    if !all_ok {
        std::process::exit(1);
    }
}
