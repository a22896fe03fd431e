use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use semilinear_ast::ast::TriplePartition;
use semilinear_ast_cli::artifact;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semilinear-ast"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let doc = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    });
    (out.status.code().unwrap(), doc)
}

fn spec_args(p: &str, a: &str, w: &str, k: &str) -> Vec<String> {
    ["-p", p, "-a", a, "-w", w, "-k", k]
        .map(String::from)
        .to_vec()
}

fn with<'a>(cmd: &'a str, spec: &'a [String], extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![cmd];
    v.extend(spec.iter().map(String::as_str));
    v.extend_from_slice(extra);
    v
}

#[test]
fn build_summaries() {
    let s = spec_args("3", "1", "1", "2");
    let (c, doc) = json(&with("build", &s, &["--variant", "asl"]));
    assert_eq!(c, 0);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["partition"]["class_count"], 7);
    assert_eq!(doc["spec"]["omega_size"], 9);
    assert_eq!(doc["relations"][4]["name"], "R^2");

    let s = spec_args("2", "1", "1", "2");
    let (_, doc) = json(&with("build", &s, &[]));
    assert_eq!(doc["partition"]["class_count"], 5);
}

#[test]
fn k3_artifacts_have_identical_labels() {
    let dir = tempfile::tempdir().unwrap();
    let asl = dir.path().join("asl.ast");
    let agl = dir.path().join("agl.ast");
    let s = spec_args("2", "2", "1", "3");
    for (variant, path) in [("asl", &asl), ("agl", &agl)] {
        let p = path.to_str().unwrap();
        assert_eq!(
            code(&with("build", &s, &["--variant", variant, "-o", p])),
            0
        );
    }
    let (a, b) = (fs::read(&asl).unwrap(), fs::read(&agl).unwrap());
    assert_eq!(a.len(), b.len());
    let differing: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    // Only the variant byte of the header differs.
    assert_eq!(differing, [20]);
    let (_, pa) = artifact::decode(&a).unwrap();
    let (_, pb) = artifact::decode(&b).unwrap();
    assert_eq!(pa.labels(), pb.labels());
}

fn tampered(path: &Path) -> Vec<u8> {
    let (spec, p) = artifact::decode(&fs::read(path).unwrap()).unwrap();
    let mut labels = p.labels().to_vec();
    let s = p.omega_size() as usize;
    // Swap the label of (0, 1, 2) with that of the first (0, 1, z) in
    // another nontrivial class.
    let i = s + 2;
    let j = (s + 3..2 * s).find(|&j| labels[j] != labels[i]).unwrap();
    labels.swap(i, j);
    let bad = TriplePartition::from_labels(p.omega_size(), labels).unwrap();
    artifact::encode(&spec, &bad)
}

#[test]
fn verify_artifacts_and_negative_control() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.ast");
    let s = spec_args("2", "2", "1", "2");
    assert_eq!(code(&with("build", &s, &["-o", good.to_str().unwrap()])), 0);

    let (c, doc) = json(&["verify", "--artifact", good.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(doc["verification"]["passed"], true);
    assert_eq!(doc["verification"]["regularity_mode"], "full");

    let bad = dir.path().join("bad.ast");
    fs::write(&bad, tampered(&good)).unwrap();
    let (c, doc) = json(&["verify", "--artifact", bad.to_str().unwrap()]);
    assert_eq!(c, 2);
    assert_eq!(doc["verification"]["passed"], false);
    let failed: Vec<&Value> = doc["verification"]["conditions"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| c["witness"].is_string()));

    let corrupt = dir.path().join("corrupt.ast");
    let mut bytes = fs::read(&good).unwrap();
    bytes.truncate(bytes.len() - 3);
    fs::write(&corrupt, bytes).unwrap();
    assert_eq!(
        code(&["verify", "--artifact", corrupt.to_str().unwrap()]),
        5
    );
    assert_eq!(code(&["verify", "--artifact", "/nonexistent/x.ast"]), 5);
}

#[test]
fn verify_modes_and_oracle() {
    let s = spec_args("2", "3", "1", "2");
    let (c, doc) = json(&with("verify", &s, &["--regularity", "full", "--oracle"]));
    assert_eq!(c, 0);
    assert_eq!(doc["oracle"], "equal");
    assert_eq!(doc["verification"]["regularity_mode"], "full");
    let (c, doc) = json(&with(
        "verify",
        &s,
        &["--regularity", "sampled", "--seed", "7"],
    ));
    assert_eq!(c, 0);
    assert_eq!(doc["verification"]["regularity_mode"], "sampled");
    assert_eq!(doc["verification"]["seed"], 7);
    assert_eq!(doc["verification"]["samples_per_class"], 32);
    let s = spec_args("2", "4", "2", "2");
    let (c, doc) = json(&with("verify", &s, &[]));
    assert_eq!(c, 0);
    assert_eq!(doc["verification"]["regularity_mode"], "sampled");
}

#[test]
fn params_tables() {
    let s = spec_args("2", "2", "1", "2");
    let (c, doc) = json(&with("params", &s, &[]));
    assert_eq!(c, 0);
    let rel = doc["relations"].as_array().unwrap();
    let thirds: Vec<u64> = rel
        .iter()
        .map(|r| r["valencies"][2].as_u64().unwrap())
        .collect();
    assert_eq!(thirds, [0, 1, 1, 0, 2, 4, 8]);
    assert_eq!(thirds[4..].iter().sum::<u64>(), 16 - 2);
    assert_eq!(rel[4]["element_poly"], "x");
    let inter = doc["intersection"].as_array().unwrap();
    assert!(inter.iter().all(|e| e["p"].as_u64().unwrap() > 0));
    assert_eq!(inter[0]["names"][0], "R0");

    let out = run(&with("params", &s, &["--format", "csv"]));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap(), "quantity,i,j,k,l,names,value");
    assert!(text.contains("n3,1,,,,R1,1"));
}

#[test]
fn crosscheck_reports() {
    let s = spec_args("2", "2", "1", "2");
    let (c, doc) = json(&with("crosscheck", &s, &[]));
    assert_eq!(c, 0);
    assert_eq!(doc["crosscheck_summary"]["clean"], true);
    assert_eq!(doc["crosscheck_summary"]["mismatch"], 0);
    let lines = doc["crosscheck"].as_array().unwrap();
    assert_eq!(lines[0]["quantity"], "nontrivial relations");
    assert!(lines.iter().all(|l| l["status"] != "mismatch"));

    let s = spec_args("2", "2", "1", "3");
    let (c, doc) = json(&with("crosscheck", &s, &[]));
    assert_eq!(c, 0);
    let last = doc["crosscheck"]
        .as_array()
        .unwrap()
        .last()
        .unwrap()
        .clone();
    assert_eq!(last["actual"], "equal");
    assert_eq!(last["predicted"], "equal");

    let s = spec_args("3", "1", "1", "2");
    let out = run(&with("crosscheck", &s, &["--format", "csv"]));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines().next().unwrap(),
        "quantity,predicted,amended,actual,match,status,source"
    );
    assert!(text.lines().skip(1).all(|l| l.contains(",true,match,")));

    let s = spec_args("2", "2", "1", "2");
    assert_eq!(code(&with("crosscheck", &s, &["--variant", "agl"])), 1);
}

#[test]
fn comparisons() {
    let (c, doc) = json(&["compare", "asl:2:2:1:3", "agl:2:2:1:3"]);
    assert_eq!(c, 0);
    assert_eq!(doc["comparison"]["relation"], "equal");
    let (_, doc) = json(&["compare", "asl:2:2:1:2", "agl:2:2:1:2"]);
    assert_eq!(doc["comparison"]["relation"], "left_refines_right");
    assert!(doc["comparison"]["right_split"].is_object());
    let (_, doc) = json(&["compare", "agl:2:2:1:2", "asl:2:2:1:2"]);
    assert_eq!(doc["comparison"]["relation"], "right_refines_left");
    let (_, doc) = json(&["compare", "asl:3:1:1:2", "asl:3:1:1:2"]);
    assert_eq!(doc["comparison"]["relation"], "equal");
    assert_eq!(code(&["compare", "asl:2:2:1:2", "asl:2:1:1:2"]), 1);
    assert_eq!(code(&["compare", "asl:2:2:1:2", "no-such-file"]), 1);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.ast");
    let s = spec_args("2", "2", "1", "2");
    assert_eq!(code(&with("build", &s, &["-o", path.to_str().unwrap()])), 0);
    let (_, doc) = json(&["compare", path.to_str().unwrap(), "asl:2:2:1:2"]);
    assert_eq!(doc["comparison"]["relation"], "equal");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["build"]), 1);
    assert_eq!(code(&["build", "-p", "2", "-a", "1", "--bogus"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["build", "-p", "4", "-a", "1"]), 1);
    assert_eq!(code(&["build", "-p", "2", "-a", "2", "-w", "3"]), 1);
    assert_eq!(code(&["build", "-p", "2", "-a", "1", "-k", "1"]), 1);
    // 2^12 points: 2^36 triples exceed the labeling bound.
    assert_eq!(code(&["build", "-p", "2", "-a", "4", "-k", "3"]), 4);
    // The BFS oracle is limited to 64 points.
    assert_eq!(code(&["verify", "-p", "3", "-a", "2", "--oracle"]), 4);
    assert_eq!(
        code(&[
            "build",
            "-p",
            "2",
            "-a",
            "1",
            "-o",
            "/nonexistent/dir/x.ast"
        ]),
        5
    );
    assert_eq!(
        code(&[
            "params",
            "-p",
            "2",
            "-a",
            "1",
            "-o",
            "/nonexistent/dir/x.json"
        ]),
        5
    );
}

#[test]
fn outputs_do_not_depend_on_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let s = spec_args("3", "2", "1", "2");
    let mut seen: Vec<(Vec<u8>, Vec<u8>, Vec<u8>)> = Vec::new();
    for workers in ["1", "2", "5", "16"] {
        let art = dir.path().join(format!("w{workers}.ast"));
        let summary = run(&with(
            "build",
            &s,
            &[
                "--workers",
                workers,
                "-o",
                art.to_str().unwrap(),
                "--format",
                "json",
            ],
        ))
        .stdout;
        let params = run(&with(
            "params",
            &s,
            &["--workers", workers, "--format", "csv"],
        ))
        .stdout;
        seen.push((fs::read(&art).unwrap(), summary, params));
    }
    assert!(seen.windows(2).all(|w| w[0] == w[1]));
}
