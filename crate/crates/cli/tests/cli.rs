//! End-to-end runs of the `tricolor` binary.

use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tricolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn enumerate_sixvertex_n3() {
    let v = json(&["enumerate", "--model", "sixvertex", "--n", "3"]);
    assert_eq!(v["count"], 7);
    assert_eq!(v["states"].as_array().unwrap().len(), 7);
}

#[test]
fn enumerate_single_free_face() {
    let v = json(&[
        "enumerate",
        "--model",
        "coloring",
        "--rows",
        "1",
        "--cols",
        "1",
    ]);
    assert_eq!(v["count"], 3);
}

#[test]
fn enumerate_dwbc_colorings_with_corner() {
    let v = json(&[
        "enumerate",
        "--model",
        "coloring",
        "--bc",
        "dwbc",
        "--n",
        "2",
        "--corner",
        "0",
    ]);
    assert_eq!(v["count"], 2);
    for g in v["colorings"].as_array().unwrap() {
        assert_eq!(g[0][0], 0);
    }
    let all = json(&[
        "enumerate",
        "--model",
        "coloring",
        "--bc",
        "dwbc",
        "--rows",
        "3",
        "--cols",
        "3",
    ]);
    assert_eq!(all["count"], 6);
}

#[test]
fn census_single_face_weights() {
    let v = json(&[
        "census", "--rows", "1", "--cols", "1", "--z0", "2", "--z1", "3", "--z2", "5",
    ]);
    assert_eq!(v["total"], 3);
    assert_eq!(v["generating_function"]["re"], 10.0);
}

#[test]
fn census_toroidal_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("census.csv");
    let out = run(&[
        "census",
        "--rows",
        "2",
        "--cols",
        "2",
        "--bc",
        "toroidal",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(path).unwrap();
    assert!(text.starts_with("k0,k1,k2,count\n"));
    assert!(text.contains("# total = 18\n"));
    assert!(text.contains("# generating_function = 18\n"));
    let counted: u64 = text
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(counted, 18);
}

#[test]
fn verify_passes_and_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for path in [&a, &b] {
        let out = run(&[
            "verify",
            "--suite",
            "functional6v",
            "--seed",
            "7",
            "--samples",
            "20",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let (ta, tb) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let v: Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["pass"], true);
    assert!(v.get("wall_time").is_none());
}

#[test]
fn verify_reads_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("verify.toml");
    fs::write(&cfg, "tol_theta = 1e-11\ntiming = true\n").unwrap();
    let v = json(&[
        "verify",
        "--suite",
        "theta",
        "--samples",
        "5",
        "--config",
        cfg.to_str().unwrap(),
    ]);
    assert_eq!(v["config"]["tol_theta"], 1e-11);
    assert!(v["wall_time"].as_f64().is_some());
}

#[test]
fn appendix_suite_reports_identity_failure() {
    let out = run(&["verify", "--suite", "appendix", "--samples", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("theta1_match_literal"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["unexpected_failures"], 0);
}

#[test]
fn configuration_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.toml");
    fs::write(&cfg, "no_such_key = 1\n").unwrap();
    assert_eq!(
        run(&[
            "verify",
            "--suite",
            "theta",
            "--config",
            cfg.to_str().unwrap()
        ])
        .status
        .code(),
        Some(2)
    );
    let missing = dir.path().join("missing.toml");
    assert_eq!(
        run(&[
            "verify",
            "--suite",
            "theta",
            "--config",
            missing.to_str().unwrap()
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--suite", "nonsense"]).status.code(),
        Some(2)
    );
}

#[test]
fn guards_exit_2() {
    assert_eq!(
        run(&["enumerate", "--model", "sixvertex", "--n", "40"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "enumerate",
            "--model",
            "coloring",
            "--rows",
            "9",
            "--cols",
            "9"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "enumerate",
            "--model",
            "coloring",
            "--rows",
            "2",
            "--cols",
            "2",
            "--corner",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&["census", "--bc", "dwbc", "--rows", "3", "--cols", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "enumerate",
            "--model",
            "coloring",
            "--bc",
            "dwbc",
            "--n",
            "2",
            "--corner",
            "3"
        ])
        .status
        .code(),
        Some(2)
    );
}
