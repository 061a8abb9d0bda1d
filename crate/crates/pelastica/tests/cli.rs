//! End-to-end tests of the command-line binary: outputs, exit codes, and
//! byte determinism.

use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pelastica"))
}

fn tmp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pelastica-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn eval_circle_reports_circle_values() {
    let out = tmp_dir("eval");
    let status = bin()
        .args(["eval", "--generator", "circle:1", "--p", "2", "--N", "1024"])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    assert!(out.join("manifest.json").exists());
    let csv = read(&out.join("eval.csv"));
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    let f_p: f64 = row[8].parse().unwrap();
    let q_p: f64 = row[10].parse().unwrap();
    assert!((f_p - std::f64::consts::PI).abs() < 1e-6);
    assert!((q_p - std::f64::consts::PI.powi(3)).abs() < 1e-3);
    // JSON mirror parses.
    let json: serde_json::Value = serde_json::from_str(&read(&out.join("eval.json"))).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 1);
}

#[test]
fn eval_rejects_bad_exponent_and_missing_file() {
    let out = tmp_dir("eval-bad");
    let status = bin()
        .args(["eval", "--generator", "circle:1", "--p", "0.5"])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));

    let missing = out.join("does-not-exist.json");
    let output = bin()
        .args(["eval", "--input"])
        .arg(&missing)
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(
        stderr.contains("does-not-exist.json"),
        "stderr must name the file: {stderr}"
    );
}

#[test]
fn minimize_writes_results_and_svgs() {
    let out = tmp_dir("minimize");
    let status = bin()
        .args([
            "minimize",
            "--generator",
            "ellipse:2:1",
            "--p",
            "2",
            "--N",
            "128",
        ])
        .args(["--area", "3.141592653589793"])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let result: serde_json::Value =
        serde_json::from_str(&read(&out.join("ellipse_2_1_p2_result.json"))).unwrap();
    assert_eq!(result["converged"], serde_json::Value::Bool(true));
    assert!(result["circularity"].as_f64().unwrap() < 1e-3);
    assert!(result["history"].as_array().unwrap().len() > 10);
    assert!(read(&out.join("ellipse_2_1_p2_final.svg")).starts_with("<svg"));
    assert!(out.join("ellipse_2_1_initial.svg").exists());
    assert!(out.join("ellipse_2_1_p2_history.csv").exists());
}

#[test]
fn minimize_distinguishes_not_converged() {
    let out = tmp_dir("minimize-short");
    let status = bin()
        .args([
            "minimize",
            "--generator",
            "ellipse:2:1",
            "--p",
            "2",
            "--N",
            "128",
        ])
        .args(["--max-outer", "1", "--tol", "1e-13"])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2), "not-converged must exit with 2");
}

#[test]
fn verify_family_passes_and_is_deterministic() {
    let out1 = tmp_dir("verify1");
    let out2 = tmp_dir("verify2");
    for out in [&out1, &out2] {
        let status = bin()
            .args(["verify", "--family", "mixed", "--n", "6", "--p", "1.5,2"])
            .args(["--seed", "42", "--N", "512"])
            .arg("--out")
            .arg(out)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
    }
    assert_eq!(
        read(&out1.join("checks.csv")),
        read(&out2.join("checks.csv")),
        "identical manifests must produce byte-identical CSV"
    );
    assert_eq!(
        read(&out1.join("manifest.json")).replace(&out1.display().to_string(), ""),
        read(&out2.join("manifest.json")).replace(&out2.display().to_string(), ""),
    );
}

#[test]
fn verify_rejects_unknown_check() {
    let out = tmp_dir("verify-bad");
    let status = bin()
        .args([
            "verify", "--family", "convex", "--n", "2", "--checks", "bogus",
        ])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));
}

#[test]
fn surgery_centrosymmetrize_ledger_and_svgs() {
    let out = tmp_dir("surgery");
    let status = bin()
        .args([
            "surgery",
            "--op",
            "centrosymmetrize",
            "--generator",
            "egg",
            "--N",
            "256",
        ])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&read(&out.join("egg_report.json"))).unwrap();
    let before = report["energy_before"].as_f64().unwrap();
    let after = report["energy_after"].as_f64().unwrap();
    assert!(after <= before * (1.0 + 1e-6));
    assert!(report["chord"]["area_split"].is_array());
    assert!(out.join("egg_before.svg").exists());
    assert!(out.join("egg_after.svg").exists());
}

#[test]
fn surgery_reduce_peanut_and_not_applicable_on_circle() {
    let out = tmp_dir("reduce");
    let status = bin()
        .args([
            "surgery",
            "--op",
            "reduce",
            "--generator",
            "peanut:0.6:2",
            "--N",
            "512",
        ])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&read(&out.join("peanut_0.6_2_report.json"))).unwrap();
    let cmp = &report["comparison"];
    assert!(cmp["e_input"].as_f64().unwrap() >= cmp["mean_e_halves"].as_f64().unwrap());
    assert!(cmp["mean_e_halves"].as_f64().unwrap() >= cmp["e_disc"].as_f64().unwrap());

    let status = bin()
        .args([
            "surgery",
            "--op",
            "reduce",
            "--generator",
            "circle:1",
            "--N",
            "256",
        ])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2), "convex input is not-applicable");
}

#[test]
fn curve_file_round_trip_through_eval() {
    // Write a points-format curve file, evaluate it, and check the row.
    let out = tmp_dir("roundtrip");
    let n = 64;
    let pts: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64;
            (2.0 * t.cos(), 2.0 * t.sin())
        })
        .collect();
    let file = out.join("bigcircle.json");
    std::fs::write(
        &file,
        serde_json::json!({"format": "points", "points": pts}).to_string(),
    )
    .unwrap();
    let status = bin()
        .args(["eval", "--p", "2", "--N", "256"])
        .arg("--input")
        .arg(&file)
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let csv = read(&out.join("eval.csv"));
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[0], "bigcircle");
    // The input is a 64-gon, whose area sits ~0.16% below 4 pi.
    let area: f64 = row[3].parse().unwrap();
    assert!(
        (area - 4.0 * std::f64::consts::PI).abs() < 0.05,
        "area {area}"
    );
}
