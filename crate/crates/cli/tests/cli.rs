use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn ossmax(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ossmax"))
        .args(args)
        .current_dir(dir)
        .env_remove("OSSMAX_OUT_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

/// Rows of a CSV file as header → cell maps.
fn rows(path: &Path) -> Vec<std::collections::HashMap<String, String>> {
    let mut r = csv::Reader::from_path(path).unwrap();
    let header = r.headers().unwrap().clone();
    r.records()
        .map(|rec| {
            header
                .iter()
                .zip(rec.unwrap().iter())
                .map(|(h, v)| (h.to_string(), v.to_string()))
                .collect()
        })
        .collect()
}

fn cell(row: &std::collections::HashMap<String, String>, key: &str) -> f64 {
    row[key].parse().unwrap()
}

/// `F = Σ x_i` written as a quadratic with a zero matrix.
fn linear_box(dir: &Path) -> PathBuf {
    let path = dir.join("linear.json");
    let doc = r#"{
  "id": "linear-box",
  "objective": { "kind": "quadratic-semimetric", "dimension": 3,
                 "m": [0, 0, 0, 0, 0, 0, 0, 0, 0], "b": [1, 1, 1], "sigma": 0 },
  "polytope": { "kind": "box", "dimension": 3, "upper": [1, 1, 1] }
}"#;
    std::fs::write(&path, doc).unwrap();
    path
}

fn collinear(dir: &Path) -> PathBuf {
    let path = dir.join("collinear.json");
    let doc = r#"{
  "id": "collinear",
  "objective": { "kind": "quadratic-semimetric", "dimension": 3,
                 "m": [0, 1, 3, 1, 0, 2, 3, 2, 0], "b": [0, 0, 0], "sigma": 1,
                 "points": [[0], [1], [3]] },
  "polytope": { "kind": "box", "dimension": 3, "upper": [1, 1, 1] }
}"#;
    std::fs::write(&path, doc).unwrap();
    path
}

#[test]
fn generate_is_byte_identical_per_seed() {
    let dir = TempDir::new().unwrap();
    for kind in ["coverage", "quadratic-semimetric"] {
        let a = ossmax(
            dir.path(),
            &[
                "generate", "--kind", kind, "--n", "6", "--seed", "42", "--out", "a.json",
            ],
        );
        let b = ossmax(
            dir.path(),
            &[
                "generate", "--kind", kind, "--n", "6", "--seed", "42", "--out", "b.json",
            ],
        );
        assert!(a.status.success() && b.status.success());
        let (x, y) = (
            std::fs::read(dir.path().join("a.json")).unwrap(),
            std::fs::read(dir.path().join("b.json")).unwrap(),
        );
        assert_eq!(x, y);
        let c = ossmax(
            dir.path(),
            &[
                "generate", "--kind", kind, "--n", "6", "--seed", "43", "--out", "c.json",
            ],
        );
        assert!(c.status.success());
        assert_ne!(x, std::fs::read(dir.path().join("c.json")).unwrap());
    }
}

#[test]
fn generate_uses_out_dir_from_environment() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("nested");
    let o = Command::new(env!("CARGO_BIN_EXE_ossmax"))
        .args([
            "generate",
            "--kind",
            "coverage",
            "--n",
            "3",
            "--seed",
            "1",
            "--polytope",
            "monotone-linear",
        ])
        .current_dir(dir.path())
        .env("OSSMAX_OUT_DIR", &out)
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(out.join("coverage-monotone-linear-n3-s1.json").exists());
}

#[test]
fn malformed_kind_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let o = ossmax(dir.path(), &["generate", "--kind", "cubic", "--n", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_none());
}

#[test]
fn invalid_config_is_a_validation_error() {
    let dir = TempDir::new().unwrap();
    let inst = linear_box(dir.path());
    let o = ossmax(
        dir.path(),
        &["solve", inst.to_str().unwrap(), "--epsilon", "1.5"],
    );
    assert_eq!(o.status.code(), Some(1));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"id\": 1}").unwrap();
    assert_eq!(
        ossmax(dir.path(), &["solve", "bad.json"]).status.code(),
        Some(1)
    );
}

#[test]
fn missing_instance_fails_without_writing() {
    let dir = TempDir::new().unwrap();
    let o = ossmax(dir.path(), &["solve", "nowhere.json", "--out", "runs.csv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!dir.path().join("runs.csv").exists());
}

#[test]
fn jspg_and_zero_noise_spg_on_linear_box() {
    let dir = TempDir::new().unwrap();
    let inst = linear_box(dir.path());
    let inst = inst.to_str().unwrap();
    let a = ossmax(dir.path(), &["solve", inst, "--solver", "jspg"]);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert!(stdout(&a).contains("jspg on linear-box"));
    let b = ossmax(
        dir.path(),
        &[
            "solve", inst, "--solver", "spg", "--theta", "0", "--batch", "256",
        ],
    );
    assert!(b.status.success());
    let rs = rows(&dir.path().join("runs.csv"));
    assert_eq!(rs.len(), 2);
    let (ra, rb) = (cell(&rs[0], "ratio_grid"), cell(&rs[1], "ratio_grid"));
    assert!(ra >= 0.99, "{ra}");
    assert!((ra - rb).abs() <= 0.02 * ra, "{ra} vs {rb}");
    assert_eq!(rs[1]["solver"], "spg");
    assert_eq!(rs[1]["batch"], "256");
}

#[test]
fn rows_replay_to_the_same_value() {
    let dir = TempDir::new().unwrap();
    let g = ossmax(
        dir.path(),
        &[
            "generate", "--kind", "coverage", "--n", "5", "--seed", "9", "--out", "c.json",
        ],
    );
    assert!(g.status.success());
    for _ in 0..2 {
        let o = ossmax(
            dir.path(),
            &[
                "solve", "c.json", "--solver", "spg", "--theta", "0.3", "--seed", "5", "--batch",
                "16",
            ],
        );
        assert!(o.status.success());
    }
    let rs = rows(&dir.path().join("runs.csv"));
    assert!((cell(&rs[0], "value") - cell(&rs[1], "value")).abs() <= 1e-9);
    assert_eq!(rs[0]["seed"], "5");
}

#[test]
fn grid_cells_empty_past_budget() {
    let dir = TempDir::new().unwrap();
    let g = ossmax(
        dir.path(),
        &[
            "generate", "--kind", "coverage", "--n", "10", "--out", "big.json",
        ],
    );
    assert!(g.status.success());
    let o = ossmax(dir.path(), &["solve", "big.json", "--solver", "serial"]);
    assert!(o.status.success());
    let rs = rows(&dir.path().join("runs.csv"));
    assert_eq!(rs[0]["opt_grid"], "");
    assert_eq!(rs[0]["ratio_grid"], "");
}

#[test]
fn verify_outcomes() {
    let dir = TempDir::new().unwrap();
    let g = ossmax(
        dir.path(),
        &[
            "generate", "--kind", "coverage", "--n", "4", "--out", "cov.json",
        ],
    );
    assert!(g.status.success());
    let o = ossmax(dir.path(), &["verify", "cov.json", "--sigma", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let q = collinear(dir.path());
    let q = q.to_str().unwrap();
    let o = ossmax(dir.path(), &["verify", q, "--sigma", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS semi-metric"));

    let o = ossmax(dir.path(), &["verify", q, "--sigma", "0.3"]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    assert!(
        text.contains("FAIL semi-metric") && text.contains("witness triple"),
        "{text}"
    );
}

#[test]
fn empty_suite_gives_header_only_csv() {
    let dir = TempDir::new().unwrap();
    std::fs::write(dir.path().join("suite.json"), r#"{"instances": []}"#).unwrap();
    let o = ossmax(dir.path(), &["bench", "suite.json", "--out", "out"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("out/runs.csv")).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("instance_id,"));
}

#[test]
fn bench_runs_the_product_and_summarizes() {
    let dir = TempDir::new().unwrap();
    for (n, seed) in [("4", "1"), ("4", "2"), ("6", "3")] {
        let out = format!("i{seed}.json");
        let g = ossmax(
            dir.path(),
            &[
                "generate", "--kind", "coverage", "--n", n, "--seed", seed, "--out", &out,
            ],
        );
        assert!(g.status.success());
    }
    let suite = r#"{
        "instances": ["i1.json", "i2.json", "i3.json"],
        "solvers": ["jspg", "serial"],
        "configs": [{"epsilon": 0.1}, {"epsilon": 0.2, "seed": 7}],
        "grid_res": 5
    }"#;
    std::fs::write(dir.path().join("suite.json"), suite).unwrap();
    let o = ossmax(dir.path(), &["bench", "suite.json", "--out", "out"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rs = rows(&dir.path().join("out/runs.csv"));
    assert_eq!(rs.len(), 12);
    assert!(rs.iter().all(|r| !r["opt_grid"].is_empty()));
    let summary = std::fs::read_to_string(dir.path().join("out/summary.txt")).unwrap();
    assert!(
        summary.lines().any(|l| l.starts_with("jspg\t4\t4\t")),
        "{summary}"
    );
    assert!(
        summary.lines().any(|l| l.starts_with("serial\t6\t2\t")),
        "{summary}"
    );
}

#[test]
fn bench_rejects_unknown_solver() {
    let dir = TempDir::new().unwrap();
    std::fs::write(
        dir.path().join("suite.json"),
        r#"{"instances": [], "solvers": ["magic"]}"#,
    )
    .unwrap();
    assert_eq!(
        ossmax(dir.path(), &["bench", "suite.json"]).status.code(),
        Some(1)
    );
}
