use serde_json::Value;
use std::process::{Command, Output};

const FIXTURE: &str = include_str!("../../core/fixtures/uqsl2_q3.json");

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfkernel")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v)
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn verify_bigd_inline() {
    let (code, v) = json(&["verify", "--family", "bigd", "--n", "2", "--m", "2", "--omega", "-1", "--alpha", "1", "--q", "t"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["config"]["family"]["q"]["1"], "t");
}

#[test]
fn verify_lifted_with_dual() {
    let (code, v) = json(&["verify", "--family", "lifted", "--G", "C4", "--g", "g", "--chi", "-1", "--alpha", "1", "--dual"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dim"], 8);
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()))
        .collect();
    assert!(names.iter().any(|n| n.starts_with("pairing_matrix_nonsingular")));
}

#[test]
fn malformed_config_exits_two_without_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.json");
    std::fs::write(&path, r#"{"family": {"kind": "taft", "n": 2}"#).unwrap();
    let out = run(&["verify", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    std::fs::write(&path, r#"{"family": {"kind": "taft", "n": 2, "omega": "-1"}, "extra": 1}"#).unwrap();
    assert_eq!(run(&["verify", "--config", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    // omega not a primitive root of the right order
    assert_eq!(run(&["verify", "--family", "taft", "--n", "3", "--omega", "2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--family", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--family", "bigd", "--omega", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--unknown-flag"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--family", "smash", "--p", "3"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--family", "taft", "--n", "2", "--omega", "-1", "--dual"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["analyze", "--family", "lifted", "--G", "C4", "--chi", "-1"]).status.code(), Some(2));
}

#[test]
fn config_file_matches_inline_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.json");
    std::fs::write(
        &path,
        r#"{"family": {"kind": "bigd", "m": 2, "n": 2, "omega": "-1", "q": {"1": "t"}, "alpha": "1"}}"#,
    )
    .unwrap();
    let (c1, a) = json(&["verify", "--config", path.to_str().unwrap()]);
    let (c2, b) = json(&["verify", "--family", "bigd", "--n", "2", "--omega", "-1", "--q", "t"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(without_timing(a), without_timing(b));
    assert_eq!(
        run(&["verify", "--config", path.to_str().unwrap(), "--n", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn analyze_reports_finite_type() {
    let (code, v) = json(&["analyze", "--family", "bigd", "--n", "2", "--omega", "-1", "--alpha", "1", "--q", "t"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["finiteType"]["value"], false);
    assert_eq!(v["result"]["socle"]["dim"], 2);
    let (code, v) = json(&["analyze", "--family", "bigd", "--n", "2", "--omega", "-1", "--alpha", "0", "--q", "t"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["finiteType"]["value"], true);
}

#[test]
fn analyze_taft_filtration_length() {
    for (n, omega) in [("2", "-1"), ("3", "z^2"), ("4", "z")] {
        let (code, v) = json(&["analyze", "--family", "taft", "--n", n, "--omega", omega]);
        assert_eq!(code, 0);
        let n: u64 = n.parse().unwrap();
        assert_eq!(v["result"]["loewy"]["coradicalFiltrationLength"], n);
        for s in v["result"]["loewy"]["summands"].as_array().unwrap() {
            assert_eq!(s["loewyLength"], n);
        }
    }
}

#[test]
fn analyze_smash() {
    let (code, v) = json(&["analyze", "--family", "smash", "--window", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["blocks"].as_array().unwrap().len(), 4);
    assert_eq!(v["result"]["identityBlockLoewy"]["loewyLength"], 2);
}

#[test]
fn fusion_smash_and_bigd() {
    let (code, v) = json(&["fusion", "--family", "smash", "--window", "4"]);
    assert_eq!(code, 0);
    let rules = v["result"]["rules"].as_array().unwrap();
    assert_eq!(rules.len(), 10);
    let r33 = rules.iter().find(|r| r["left"] == "S_3" && r["right"] == "S_3").unwrap();
    assert_eq!(r33["summands"], serde_json::json!(["S_6", "k^C2"]));
    let (code, _) = json(&["fusion", "--family", "bigd", "--n", "2", "--omega", "-1", "--q", "t", "--max-support", "1"]);
    assert_eq!(code, 0);
}

#[test]
fn empty_window_is_an_empty_pass() {
    let (code, v) = json(&["fusion", "--family", "smash", "--window", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["rules"], serde_json::json!([]));
    for r in v["checks"].as_array().unwrap() {
        for c in r["checks"].as_array().unwrap() {
            assert_eq!(c["cases"], 0);
        }
    }
}

#[test]
fn bounds_fixture() {
    let out = run(&["bounds", "--data", "fixture:uqsl2", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("l(E(V1)) = 4 <= 12, 4 <= 14"), "{text}");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("data.json");
    std::fs::write(&path, FIXTURE).unwrap();
    let (code, v) = json(&["bounds", "--data", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["b"], 3);
    assert_eq!(v["result"]["r"], 2);
}

#[test]
fn bounds_kernel_taft_is_tight() {
    let (code, v) = json(&["bounds", "--family", "taft", "--n", "3", "--omega", "z^2"]);
    assert_eq!(code, 0);
    for row in v["result"]["rows"].as_array().unwrap() {
        assert_eq!(row["length"], 3);
        assert_eq!(row["tight"], true);
    }
    assert_eq!(v["result"]["dimE1"], 3);
}

#[test]
fn inconsistent_data_exits_one() {
    let mut data: Value = serde_json::from_str(FIXTURE).unwrap();
    data["injEnvelope"]["V0"]["factors"][1]["mult"] = 3.into();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, data.to_string()).unwrap();
    let (code, v) = json(&["bounds", "--data", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "fail");
    // unparsable data is a configuration error
    std::fs::write(&path, "{").unwrap();
    assert_eq!(run(&["bounds", "--data", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = run(&[
            "analyze", "--family", "bigd", "--n", "3", "--omega", "z^2", "--q", "t", "--max-support", "1", "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let strip = |p: &std::path::Path| {
        let text = std::fs::read_to_string(p).unwrap();
        text.lines().filter(|l| !l.contains("\"millis\"")).collect::<Vec<_>>().join("\n")
    };
    let (ta, tb) = (strip(&a), strip(&b));
    assert_eq!(ta.replace(a.to_str().unwrap(), ""), tb.replace(b.to_str().unwrap(), ""));
}

#[test]
fn dump_tables() {
    let (code, v) = json(&["dump", "--family", "lifted", "--G", "C4", "--chi", "-1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["structureConstants"]["dim"], 8);
    let (code, v) = json(&["dump", "--family", "taft", "--n", "2", "--omega", "-1"]);
    assert_eq!(code, 0);
    let rows = v["result"]["delta"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().any(|r| r["basis"] == "x"));
}

#[test]
fn text_format() {
    let out = run(&["verify", "--family", "taft", "--n", "2", "--omega", "-1", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("verify"));
    assert!(text.contains("PASS coassociativity"));
}
