use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn qcg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcg")).args(args).output().expect("binary runs")
}

fn qcg_with_golden(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcg")).args(args).env("QCG_GOLDEN_DIR", dir).output().expect("binary runs")
}

fn text(args: &[&str]) -> String {
    let out = qcg(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&text(&full)).unwrap()
}

/// `"1": 1, "3": 2` rendered the way the text output does.
fn render_poly(v: &Value) -> String {
    let terms: Vec<(i64, i64)> =
        v.as_object().unwrap().iter().map(|(e, c)| (e.parse().unwrap(), c.as_i64().unwrap())).collect();
    qcg::LaurentPoly::from_terms(terms).to_string()
}

#[test]
fn qcg_text_and_json_agree() {
    for args in [
        &["qcg", "--n", "2", "--m", "0", "--level", "1"][..],
        &["qcg", "--n", "2", "--m", "2"],
        &["qcg", "--n", "3", "--m", "1", "--level", "2"],
    ] {
        let doc = json(args);
        assert_eq!(doc["command"], "qcg");
        let rebuilt: String = doc["result"]
            .as_array()
            .unwrap()
            .iter()
            .map(|row| format!("{}: {}\n", row["label"].as_str().unwrap(), render_poly(&row["poly"])))
            .collect();
        assert_eq!(rebuilt, text(args));
    }
}

#[test]
fn level_one_example() {
    assert_eq!(text(&["qcg", "--n", "2", "--m", "0", "--level", "1"]), "1: q\n5: q\n");
    let doc = json(&["qcg", "--n", "2", "--m", "0", "--level", "1"]);
    assert_eq!(doc["params"]["level"], "1");
    assert_eq!(doc["result"][1]["weight"], "0,1");
}

#[test]
fn paths_text_and_json_agree() {
    let args = ["paths", "--n", "3", "--m", "2", "--level", "1", "--end", "1,0"];
    assert_eq!(text(&args), "ae141 7\nae123 8\n");
    let doc = json(&args);
    let rebuilt: String = doc["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| format!("{} {}\n", p["word"].as_str().unwrap(), p["energy"]))
        .collect();
    assert_eq!(rebuilt, text(&args));
    assert_eq!(text(&["paths", "--n", "0", "--m", "0", "--level", "1", "--end", "0,0"]), "φ 0\n");
}

#[test]
fn graded_outputs_agree() {
    for args in [
        &["spinon", "--target", "0,0", "--level", "1", "--depth", "3"][..],
        &["oracle", "affine", "--target", "1,0", "--level", "1", "--depth", "2"],
    ] {
        let doc = json(args);
        let mut rebuilt = String::new();
        for layer in doc["result"].as_array().unwrap() {
            let terms: Vec<String> = layer["terms"]
                .as_array()
                .unwrap()
                .iter()
                .map(|t| format!("{}×{}", t["label"].as_str().unwrap(), t["mult"]))
                .collect();
            let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            rebuilt.push_str(&format!("{}: {body}\n", layer["depth"]));
        }
        assert_eq!(rebuilt, text(args));
    }
    assert_eq!(
        text(&["spinon", "--target", "0,0", "--level", "1", "--depth", "3"]),
        "0: 1×1\n1: 10×1\n2: 1×1 + 5×1 + 10×1 + 14×1\n3: 1×1 + 5×1 + 10×3 + 14×1 + 35×1\n"
    );
}

#[test]
fn mpoly_and_oracles() {
    assert_eq!(text(&["mpoly", "--lambda", "1,0", "--mu", "3,0"]), "q + q^2 + q^3\n");
    assert_eq!(render_poly(&json(&["mpoly", "--lambda", "1,0", "--mu", "3,0"])["result"]["poly"]), "q + q^2 + q^3");
    assert_eq!(text(&["oracle", "tensor", "--n", "2", "--m", "0"]), "1: 1\n5: 1\n10: 1\n");
    assert_eq!(text(&["oracle", "irrep", "--lambda", "1,0"]).lines().count(), 4);
}

#[test]
fn regression_checks_pass() {
    for check in ["appendix2", "appendix3", "eq1", "level1"] {
        let out = text(&["check", check]);
        assert!(out.contains(": pass ("), "{check}: {out}");
    }
    assert!(text(&["check", "appendix3"]).contains("(14 tables,"));
    let out = text(&["check", "conjecture1", "--max", "3"]);
    assert!(out.ends_with("0 different\n"), "{out}");
    let doc = json(&["check", "conjecture1", "--max", "2"]);
    assert_eq!(doc["result"]["all_exact"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(qcg(&["qcg", "--n", "2"]).status.code(), Some(2));
    assert_eq!(qcg(&["qcg", "--n", "2", "--m", "0", "--level", "zero"]).status.code(), Some(2));
    assert_eq!(qcg(&["spinon", "--target", "1,1", "--level", "1", "--depth", "2"]).status.code(), Some(2));
    assert_eq!(qcg(&["oracle", "affine", "--target", "0,0", "--level", "1", "--depth", "9"]).status.code(), Some(2));
    assert_eq!(qcg(&["check", "conjecture1", "--max", "0"]).status.code(), Some(2));
    assert_eq!(qcg(&["--version"]).status.code(), Some(0));
}

fn scratch_golden(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qcg-golden-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn corrupted_golden_data_fails_with_every_mismatch_listed() {
    let dir = scratch_golden("corrupt");
    std::fs::write(dir.join("level1_tables.txt"), "2 0 1\t1\tq^2\n2 0 1\t5\tq\n0 2 1\t1\tq^3\n").unwrap();
    let out = qcg_with_golden(&dir, &["check", "level1"]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("2 failures"), "{stdout}");
    assert!(stdout.contains("expected q^2, computed q"));
    assert!(stdout.contains("expected q^3, computed q^2"));

    let out = qcg_with_golden(&dir, &["check", "appendix2"]);
    assert_eq!(out.status.code(), Some(1), "missing file is a failed check");
    std::fs::remove_dir_all(dir).unwrap();
}
