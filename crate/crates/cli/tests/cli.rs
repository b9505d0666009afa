use std::process::{Command, Output};

use ncx_cli::parse::parse_tuple;
use ncx_core::randgen::{Gen, GenConfig};
use ncx_core::{FourTuple, Quaternion};
use proptest::prelude::*;
use serde_json::Value;

fn ncx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncx")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// Every number is an integer and no value is a boolean.
fn assert_exact(v: &Value) {
    match v {
        Value::Bool(b) => panic!("boolean {b} in output"),
        Value::Number(n) => {
            let s = n.to_string();
            assert!(
                s.trim_start_matches('-').chars().all(|c| c.is_ascii_digit()),
                "non-integer {s}"
            );
        }
        Value::Array(a) => a.iter().for_each(assert_exact),
        Value::Object(o) => o.values().for_each(assert_exact),
        Value::Null | Value::String(_) => {}
    }
}

fn json(o: &Output, from_stderr: bool) -> Value {
    let text = if from_stderr { stderr(o) } else { stdout(o) };
    let v: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    assert_exact(&v);
    v
}

#[test]
fn quaternion_cross_ratio() {
    let o = ncx(&["cross-ratio", "[1, i]", "[1, j]", "[1, k]", "[1, 1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1/2 - 1/2 i + 1/2 j + 1/2 k");
}

#[test]
fn json_output_is_exact() {
    let o = ncx(&["--json", "cross-ratio", "[1, i]", "[1, j]", "[1, k]", "[1, 1]"]);
    let v = json(&o, false);
    assert_eq!(v["value"], serde_json::json!([[1, 2], [-1, 2], [1, 2], [1, 2]]));

    let big = "[100000000000000000000000000007, 1]";
    let o = ncx(&["--json", "cross-ratio", big, "[1, 1]", "[2, 1]", "[3, 1]"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    json(&o, false);

    for args in [
        &["--json", "perms", "[1, i]", "[1, j]", "[1, k]", "[1, 1]"][..],
        &["--json", "cocycle", "[0, 1]", "[1, 1]", "[2, 1]", "[3, 1]", "[5, 1]"],
        &[
            "--json", "chain", "[1, 1]", "[2, 1]", "[3, 1]", "--z", "[5, 1]", "--t", "[7, 1]",
        ],
        &["--json", "verify", "--suite", "orbit", "--trials", "20"],
        &[
            "--json",
            "quasidet",
            "--matrix",
            "[1, 2; 3, 4]",
            "--row",
            "2",
            "--col",
            "2",
        ],
    ] {
        let o = ncx(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        json(&o, false);
    }
}

#[test]
fn degenerate_inputs_exit_3_with_blame() {
    let o = ncx(&["--json", "cross-ratio", "[0, 1]", "[1, 1]", "[1, 1]", "[2, 1]"]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o, true);
    assert_eq!(v["error"], "undefined");
    assert_eq!(v["operation"], "cross_ratio");
    assert_eq!(v["box"], serde_json::json!([1, 2]));

    let o = ncx(&["quasidet", "--matrix", "[1, 2; 0, 4]", "--row", "1", "--col", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("box: (1,2)"), "{}", stderr(&o));

    let o = ncx(&["perms", "[1, 0]", "[0, 1]", "[1, 1]", "[2, 2]"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn parse_and_usage_errors_exit_2() {
    let o = ncx(&["cross-ratio", "[1, i]", "[1, j]", "[1, + k]", "[1, 1]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains('^'), "{}", stderr(&o));

    for args in [
        &["cross-ratio", "[1, 1]"][..],
        &["frobnicate"],
        &["verify", "--suite", "nope"],
        &[
            "qplucker",
            "--matrix",
            "[1, 0, 1; 0, 1, 1]",
            "-i",
            "1",
            "-j",
            "2",
            "-k",
            "1",
        ],
        &["quasidet", "--matrix", "[1/0, 2; 3, 4]", "--row", "1", "--col", "1"],
    ] {
        assert_eq!(ncx(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn inputs_from_file() {
    let dir = std::env::temp_dir().join(format!("ncx-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let vectors = dir.join("vectors.txt");
    std::fs::write(&vectors, "[0, 1]\n[1, 1]\n\n[2, 1]\n[3, 1]\n").unwrap();
    let o = ncx(&["--file", vectors.to_str().unwrap(), "cross-ratio"]);
    assert_eq!(stdout(&o).trim(), "4/3");

    let matrix = dir.join("matrix.txt");
    std::fs::write(&matrix, "[1, 0, 1, 3; 0, 1, 1, 1]\n").unwrap();
    let o = ncx(&[
        "--file",
        matrix.to_str().unwrap(),
        "qplucker",
        "-i",
        "3",
        "-j",
        "4",
        "-k",
        "2",
    ]);
    assert_eq!(stdout(&o).trim(), "3");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn orbit_check_reports_both_outcomes() {
    let t = "[1, 2, 1, 0; 3, 4, 0, 1]";
    let o = ncx(&["orbit-check", t, t]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("same orbit"));

    let o = ncx(&["--json", "orbit-check", t, "[1, 5, 1, 0; 3, 4, 0, 1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o, false)["result"], "different_orbits");
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "permutations", "--trials", "50", "--seed", "3"];
    let (a, b) = (ncx(&args), ncx(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

proptest! {
    #[test]
    fn counterexample_tuples_parse_back(seed in any::<u64>()) {
        let t: FourTuple<Quaternion> = Gen::new(GenConfig::new(seed, 30)).tuple();
        prop_assert_eq!(parse_tuple(&t.to_string()).unwrap(), t);
    }
}
