use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbtg"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json", "--no-timing"]);
    let out = run(&full);
    (
        code(&out),
        serde_json::from_slice(&out.stdout).expect("json report"),
    )
}

fn write_instance(name: &str, text: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

/// Z4 with `F(p) = {a0, a2}`, so dense positions differ from universe indices.
const Z4_HALF: &str = r#"{
  "universe": ["a0", "a1", "a2", "a3"],
  "group": {
    "table": [
      ["a0", "a1", "a2", "a3"],
      ["a1", "a2", "a3", "a0"],
      ["a2", "a3", "a0", "a1"],
      ["a3", "a0", "a1", "a2"]
    ],
    "identity": "a0"
  },
  "parameters": ["p", "q"],
  "soft_set": {"p": ["a0", "a2"], "q": ["a0", "a1", "a2", "a3"]},
  "topologies": {
    "sierpinski": [{}, {"p": ["a2"]}, {"p": ["a0", "a2"], "q": ["a0", "a1", "a2", "a3"]}],
    "coarse": "indiscrete"
  }
}"#;

#[test]
fn fixtures_have_their_verdicts() {
    let cases = [
        ("examples/d8_pair.json", 0),
        ("examples/discrete_indiscrete.json", 0),
        ("examples/strict_union.json", 1),
        ("examples/z12_surrogate.json", 0),
        ("examples/z36_surrogate.json", 0),
        ("fixtures/trivial_group.json", 0),
    ];
    for (file, expected) in cases {
        let (c, rep) = json(&["check", file, "sbtg"]);
        assert_eq!(c, expected, "{file}");
        assert_eq!(rep["holds"], expected == 0, "{file}");
        let (c, _) = json(&["check", file, "axioms"]);
        assert_eq!(c, 0, "{file} axioms");
    }
}

#[test]
fn output_is_deterministic_without_timing() {
    for args in [
        &["check", "examples/d8_pair.json", "sbtg"][..],
        &["witness", "examples/d8_pair.json", "non-product-open"],
        &[
            "enumerate-se",
            "examples/z12_surrogate.json",
            "--cap-se",
            "4096",
        ],
    ] {
        for format in ["text", "json"] {
            let mut full = args.to_vec();
            full.extend(["--format", format, "--no-timing"]);
            let a = run(&full);
            let b = run(&full);
            assert_eq!(code(&a), 0, "{args:?}");
            assert_eq!(a.stdout, b.stdout, "{args:?} {format}");
        }
    }
}

#[test]
fn missing_union_is_a_load_error() {
    let out = run(&["check", "examples/d8_missing_union.json", "sbtg"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: topologies.tau1: union of"), "{err}");
    assert!(err.contains("missing"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn unreadable_and_malformed_inputs_exit_2() {
    assert_eq!(code(&run(&["check", "no_such_file.json", "sbtg"])), 2);
    let bad = write_instance("malformed.json", "{\"universe\": [\"e\"], \"extra\": 1}");
    let out = run(&["check", &bad, "sbtg"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .starts_with("error: "));
}

#[test]
fn witness_labels_use_the_universe() {
    let path = write_instance("z4_half.json", Z4_HALF);
    let (c, rep) = json(&["check", &path, "sbtg"]);
    assert_eq!(c, 1);
    let w = &rep["witnesses"][0];
    assert_eq!(w["kind"], "discontinuity");
    assert_eq!(w["param"], "p");
    assert_eq!(w["topology"], "sierpinski");
    for x in w["point"]
        .as_array()
        .unwrap()
        .iter()
        .chain(w["open"].as_array().unwrap())
    {
        assert!(["a0", "a2"].contains(&x.as_str().unwrap()), "{w}");
    }
    let (c, axioms) = json(&["check", &path, "axioms"]);
    assert_eq!(c, 0);
    assert_eq!(
        axioms["slices"]["p"]["sierpinski"],
        serde_json::json!([[], ["a2"], ["a0", "a2"]])
    );
}

#[test]
fn separation_and_connectedness_exit_codes() {
    let d8 = "examples/d8_pair.json";
    let (c, rep) = json(&[
        "check",
        d8,
        "separation",
        "--level",
        "2",
        "--topologies",
        "tau1,tau1",
    ]);
    assert_eq!(c, 1);
    assert_eq!(rep["witnesses"][0]["kind"], "unseparated");
    let di = "examples/discrete_indiscrete.json";
    assert_eq!(json(&["check", di, "connected"]).0, 1);
    assert_eq!(
        json(&["check", di, "connected", "--topologies", "tau_ind"]).0,
        0
    );
    assert_eq!(json(&["check", d8, "compactness"]).0, 0);
    assert_eq!(json(&["check", d8, "hom", "--map", "trivial"]).0, 0);
}

#[test]
fn witness_targets() {
    let d8 = "examples/d8_pair.json";
    let (c, rep) = json(&["witness", d8, "noncanonical-gap"]);
    assert_eq!(c, 0, "{rep}");
    let small = "examples/strict_union.json";
    let (c, a) = json(&["witness", small, "separation-converse"]);
    let (_, b) = json(&["witness", small, "prop3-converse"]);
    assert_eq!(c, 0);
    assert_eq!(a["witnesses"], b["witnesses"]);
    let out = run(&["witness", d8, "separation-converse"]);
    assert_eq!(code(&out), 2, "carrier above the search cap");
}

#[test]
fn enumeration_lists_every_soft_element() {
    let (c, rep) = json(&["enumerate-se", "examples/d8_pair.json"]);
    assert_eq!(c, 0);
    let listed = rep
        .as_object()
        .unwrap()
        .values()
        .find_map(|v| v.as_array().filter(|a| a.len() == 32));
    assert!(listed.is_some(), "{rep}");
}

#[test]
fn unknown_topology_name_is_rejected() {
    let out = run(&[
        "check",
        "examples/d8_pair.json",
        "sbtg",
        "--topologies",
        "tau9",
    ]);
    assert_eq!(code(&out), 2);
}
