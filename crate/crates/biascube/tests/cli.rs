//! End-to-end binary tests: argument handling, output shapes, exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_biascube"))
}

fn write_spec(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).expect("write spec");
    path.to_str().expect("utf-8 path").to_string()
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn power_json_has_manifest_and_symmetric_rows() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "maj3.json", r#"{"kind": "majority", "n": 3}"#);
    let out = bin().args(["power", &spec]).output().unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["manifest"]["command"], "power");
    assert_eq!(v["manifest"]["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["data"]["method"], "subset_exact");
    let rows = v["data"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for row in rows {
        let value = row["value"].as_f64().unwrap();
        assert!((value - 1.0 / 3.0).abs() < 1e-12);
        assert!(row.get("stderr").is_none());
    }
    assert!((v["data"]["total"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn power_owen_and_banzhaf_methods() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "tribes.json",
        r#"{"kind": "tribes", "n": 4, "m": 2, "w": 2}"#,
    );
    let out = bin()
        .args(["power", &spec, "--method", "owen"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["data"]["method"], "owen_quadrature");
    assert_eq!(v["manifest"]["parameters"]["nodes_used"], "2");
    for row in v["data"]["rows"].as_array().unwrap() {
        assert!((row["value"].as_f64().unwrap() - 0.25).abs() < 1e-12);
    }

    let out = bin()
        .args(["power", &spec, "--method", "banzhaf"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["data"]["method"], "banzhaf");
    for row in v["data"]["rows"].as_array().unwrap() {
        assert_eq!(row["value"].as_f64().unwrap(), 0.375);
    }
}

#[test]
fn power_sampled_reports_stderr_and_exact_total() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "maj5.json", r#"{"kind": "majority", "n": 5}"#);
    let out = bin()
        .args([
            "power",
            &spec,
            "--method",
            "sampled",
            "--samples",
            "2048",
            "--seed",
            "3",
        ])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["data"]["method"], "permutation_sampled");
    assert_eq!(v["data"]["total"].as_f64().unwrap(), 1.0);
    for row in v["data"]["rows"].as_array().unwrap() {
        assert!(row["stderr"].as_f64().unwrap() > 0.0);
    }
}

#[test]
fn csv_output_carries_manifest_comments() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "and2.json", r#"{"kind": "and", "n": 2}"#);
    let out = bin()
        .args(["power", &spec, "--format", "csv"])
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.starts_with("# command=power\n"));
    assert!(text.contains("# version="));
    let data: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(data[0], "player,value,stderr");
    assert_eq!(data[1], "1,5.0000000000000000e-1,");
    assert_eq!(data.len(), 3);
}

#[test]
fn curve_is_monotone_for_majority() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "maj9.json", r#"{"kind": "majority", "n": 9}"#);
    let out = bin()
        .args(["curve", &spec, "--points", "19"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v["data"].as_array().unwrap();
    assert_eq!(rows.len(), 19);
    let mus: Vec<f64> = rows.iter().map(|r| r["mu"].as_f64().unwrap()).collect();
    assert!(mus.windows(2).all(|w| w[0] < w[1]));
    for r in rows {
        let i = r["total_influence"].as_f64().unwrap();
        let d = r["mu_derivative"].as_f64().unwrap();
        assert!((i - d).abs() < 1e-9);
    }
}

#[test]
fn threshold_bundle_reports_window_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "maj9.json", r#"{"kind": "majority", "n": 9}"#);
    let out = bin()
        .args(["threshold", &spec, "--eps", "0.1", "--grid", "11"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let t = &v["data"]["threshold"];
    assert!((t["p_lo"].as_f64().unwrap() + t["p_hi"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(t["grid"].as_array().unwrap().len(), 11);
    assert!(v["data"]["shapley_interval"]["witness_inequality_holds"]
        .as_bool()
        .unwrap());
    assert!(v["data"]["banzhaf_shapley"].is_object());
}

#[test]
fn spectrum_rows_cover_all_subsets() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "maj3.json", r#"{"kind": "majority", "n": 3}"#);
    let out = bin()
        .args(["spectrum", &spec, "--p", "0.5"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v["data"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0]["coefficient"].as_f64().unwrap(), 0.5);
    assert!((v["data"]["parseval_total"].as_f64().unwrap() - 0.5).abs() < 1e-12);
}

#[test]
fn out_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "or2.json", r#"{"kind": "or", "n": 2}"#);
    let target = dir.path().join("result.csv");
    let out = bin()
        .args([
            "power",
            &spec,
            "--format",
            "csv",
            "--out",
            target.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    assert!(written.contains("player,value,stderr"));
}

#[test]
fn verify_mcgarvey_suite_reports_counts() {
    let out = bin()
        .args(["verify", "--suite", "mcgarvey"])
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.contains("64/64 tournaments realized (m=4)"));
    assert!(text.contains("summary: 3 passed, 0 failed"));
}

#[test]
fn exit_code_2_for_unparsable_input() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "bad.json", r#"{"kind": "wat"}"#);
    let out = bin().args(["power", &spec]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["power", "/nonexistent/f.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let dir2 = tempfile::tempdir().unwrap();
    let spec = write_spec(dir2.path(), "maj.json", r#"{"kind": "majority", "n": 3}"#);
    let out = bin()
        .args(["power", &spec, "--method", "sampled"])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(2),
        "sampled without --seed must be a usage error"
    );
}

#[test]
fn exit_code_3_for_oversized_input() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "big.json", r#"{"kind": "majority", "n": 25}"#);
    let out = bin().args(["power", &spec]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_code_4_for_domain_errors() {
    let dir = tempfile::tempdir().unwrap();
    let parity = write_spec(dir.path(), "parity.json", r#"{"kind": "parity", "n": 3}"#);
    let out = bin().args(["threshold", &parity]).output().unwrap();
    assert_eq!(
        out.status.code(),
        Some(4),
        "threshold of a non-monotone function"
    );

    let maj = write_spec(dir.path(), "maj.json", r#"{"kind": "majority", "n": 3}"#);
    let out = bin()
        .args(["spectrum", &maj, "--p", "1.5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4), "bias outside (0,1)");
}
