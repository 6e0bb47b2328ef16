use std::process::{Command, Output};

use serde_json::Value;

fn factorlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factorlab"))
        .args(args)
        .env_remove("FACTORLAB_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_rows(args: &[&str]) -> Vec<Value> {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    match serde_json::from_str(&stdout(&factorlab(&all))).unwrap() {
        Value::Array(rows) => rows,
        other => panic!("expected an array, got {other}"),
    }
}

fn csv_rows(args: &[&str]) -> (Vec<String>, Vec<Vec<String>>) {
    let mut all = args.to_vec();
    all.extend(["--format", "csv"]);
    let text = stdout(&factorlab(&all));
    assert!(!text.contains('\r'));
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().unwrap().iter().map(String::from).collect();
    let rows = reader
        .records()
        .map(|r| r.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap_or_else(|| panic!("not a number: {v}"))
}

fn column(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap()
}

#[test]
fn classify_werner() {
    let rows = json_rows(&["classify", "werner", "0.5"]);
    let r = &rows[0];
    assert_eq!(r["ppt"], "NPT");
    assert!((num(&r["concurrence"]) - 0.25).abs() < 1e-12);
    assert!((num(&r["bmax"]) - 0.5f64.sqrt()).abs() < 1e-11);
    assert!((num(&r["maxent_weight"]) - 0.625).abs() < 1e-12);
    assert_eq!(r["maxent_weight_entangled"], true);
}

#[test]
fn classify_tracial() {
    let rows = json_rows(&["classify", "tracial", "4"]);
    let r = &rows[0];
    assert_eq!(r["ppt"], "PPT");
    assert_eq!(num(&r["concurrence"]), 0.0);
    assert_eq!(r["kz_member"], true);
}

#[test]
fn classify_gisin_reports_closed_form_concurrence() {
    let rows = json_rows(&["classify", "gisin", "0.8", "0.35"]);
    let r = &rows[0];
    let (l, t): (f64, f64) = (0.8, 0.35);
    let closed = 2.0 * (l * t.sin() * t.cos() - (1.0 - l) / 2.0);
    assert!((num(&r["concurrence"]) - closed).abs() < 1e-11);
    assert!(num(&r["bmax"]) < 1.0);
}

#[test]
fn classify_qutrits_leaves_two_qubit_fields_empty() {
    let rows = json_rows(&["classify", "weyl", "1", "2", "3"]);
    let r = &rows[0];
    assert_eq!(r["split"], "3x3");
    assert!(r["concurrence"].is_null());
    assert_eq!(r["ppt"], "NPT");
    assert!((num(&r["maxent_weight"]) - 1.0).abs() < 1e-12);
}

#[test]
fn sweep_rho_theta_matches_closed_forms() {
    let (header, rows) = csv_rows(&["sweep", "rho_theta"]);
    assert_eq!(header, ["theta", "C", "C_after_u_switch"]);
    assert_eq!(rows.len(), 101);
    for row in rows {
        let t: f64 = row[0].parse().unwrap();
        let c: f64 = row[1].parse().unwrap();
        let cu: f64 = row[2].parse().unwrap();
        assert!((c - (2.0 * t).sin()).abs() < 1e-8);
        assert!((cu - (2.0 * t).cos().abs()).abs() < 1e-8);
    }
}

#[test]
fn sweep_gisin_compare_has_three_concurrences() {
    let rows = json_rows(&["sweep", "gisin_compare", "--lambda", "0.8"]);
    assert_eq!(rows.len(), 1);
    let r = &rows[0];
    let (c, f, u) = (num(&r["C"]), num(&r["C_filtered"]), num(&r["C_unitary"]));
    assert!(c < f && f < u);
    assert!((u - 0.6).abs() < 1e-12);
}

#[test]
fn sweep_werner_sign_changes() {
    let (header, rows) = csv_rows(&["sweep", "werner", "--alpha", "0:1:0.01", "--outputs", "ppt,bmax"]);
    let (ppt, bmax) = (column(&header, "ppt"), column(&header, "bmax"));
    for row in rows {
        let a: f64 = row[0].parse().unwrap();
        assert_eq!(row[ppt] == "NPT", a > 1.0 / 3.0, "alpha {a}");
        let b: f64 = row[bmax].parse().unwrap();
        assert_eq!(b > 1.0, a > 1.0 / 2f64.sqrt(), "alpha {a}");
    }
}

#[test]
fn sweep_ghz_coincidence_point() {
    let rows = json_rows(&["sweep", "ghz_traced", "--theta", "pi/4"]);
    let r = &rows[0];
    assert!((num(&r["C_after_u12"]) - 0.5).abs() < 1e-10);
    assert!((num(&r["mixedness"]) - 0.5).abs() < 1e-10);
    assert_eq!(num(&r["C_after_u_switch"]), 0.0);
}

#[test]
fn teleport_traces() {
    let rows = json_rows(&["protocol", "teleport", "--d", "2", "--seed", "4"]);
    assert_eq!(rows.len(), 4);
    for r in &rows {
        assert_eq!(num(&r["probability"]), 0.25);
        assert_eq!(num(&r["fidelity"]), 1.0);
        assert_eq!(r["correction"], r["outcome"]);
    }
    let rows = json_rows(&["protocol", "teleport", "--d", "3"]);
    assert_eq!(rows.len(), 9);
    for r in &rows {
        assert!((num(&r["probability"]) - 1.0 / 9.0).abs() < 1e-11);
    }
}

#[test]
fn swap_identity_resources_labels() {
    for r in json_rows(&["protocol", "swap", "--d", "2"]) {
        assert_eq!(r["i14"], r["outcome"]);
        assert_eq!(num(&r["probability"]), 0.25);
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["protocol", "swap", "--d", "3", "--resources", "random", "--seed", "17"],
        vec!["sweep", "gisin", "--lambda", "0:1:0.05", "--theta", "0.1:0.7:0.2"],
    ] {
        let a = factorlab(&args);
        let b = factorlab(&args);
        assert_eq!(stdout(&a), stdout(&b));
    }
    let seeded = |s: &str| stdout(&factorlab(&["protocol", "swap", "--d", "3", "--resources", "random", "--seed", s]));
    assert_ne!(seeded("1"), seeded("2"));
}

#[test]
fn out_flag_and_state_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("after.json");
    let report = dir.path().join("report.json");
    let out = factorlab(&[
        "transform",
        "u",
        "--state",
        "bell psi-",
        "--emit-state",
        state.to_str().unwrap(),
        "--out",
        report.to_str().unwrap(),
    ]);
    assert!(stdout(&out).is_empty());
    let rows: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(rows[0]["ppt"], "NPT");
    assert_eq!(rows[1]["ppt"], "PPT");
    let again = json_rows(&["classify", "--file", state.to_str().unwrap()]);
    assert_eq!(again[0]["ppt"], "PPT");
    assert_eq!(num(&again[0]["purity"]), 1.0);
}

#[test]
fn negative_angles_are_arguments() {
    let rows = json_rows(&["transform", "u-theta", "-0.3", "--state", "rho-theta -0.3"]);
    assert!((num(&rows[1]["concurrence"]) - 1.0).abs() < 1e-12);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"split\": [2, 2],\n \"re\": [[1, 0] [0, 0]]}").unwrap();
    let out = factorlab(&["classify", "--file", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let not_hermitian = dir.path().join("bad.json");
    std::fs::write(&not_hermitian, r#"{"split":[2,1],"re":[[0.5,0.3],[0,0.5]]}"#).unwrap();
    let out = factorlab(&["classify", "--file", not_hermitian.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Hermitian"));

    let out = factorlab(&["sweep", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rho_theta"));

    assert_eq!(factorlab(&["classify", "werner", "1.5"]).status.code(), Some(1));
    assert_eq!(factorlab(&["protocol", "teleport", "--d", "1"]).status.code(), Some(2));
    assert_eq!(factorlab(&["transform", "u", "--state", "tracial 3"]).status.code(), Some(1));
    assert_eq!(factorlab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(factorlab(&["--help"]).status.code(), Some(0));
}

#[test]
fn tolerance_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("loose.json");
    std::fs::write(&path, r#"{"split":[2,1],"re":[[0.5000001,0],[0,0.5]]}"#).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(factorlab(&["classify", "--file", p]).status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_factorlab"))
        .args(["classify", "--file", p])
        .env("FACTORLAB_TOL", "1e-6")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(factorlab(&["classify", "--file", p, "--tol", "1e-6"]).status.code(), Some(0));
}

#[test]
fn list_names_every_registry() {
    let (_, rows) = csv_rows(&["list"]);
    let kinds: std::collections::BTreeSet<&str> = rows.iter().map(|r| r[0].as_str()).collect();
    assert_eq!(kinds.into_iter().collect::<Vec<_>>(), ["state", "sweep", "transform"]);
}
