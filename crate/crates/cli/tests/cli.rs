//! End-to-end runs of the `cozero` binary.

use std::process::{Command, Output};

fn cozero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cozero")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8")
}

#[test]
fn verify_paper_succeeds_and_is_reproducible() {
    let a = cozero(&["verify-paper", "--format", "json", "--budget", "300"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let b = cozero(&["verify-paper", "--format", "json", "--budget", "300"]);
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["budget"], 300);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["matches"] != false));
    assert!(checks.iter().all(|c| c.get("runtime_ms").is_none()));
    let cr = checks.iter().find(|c| c["id"] == "ex_5_2_1/CR").unwrap();
    assert_eq!(cr["verdict"], "Fails(v)");
    assert_eq!(cr["witness"]["condition"], "weak-unit-not-strong");
}

#[test]
fn timings_are_opt_in() {
    let o = cozero(&["check", "ex_5_4", "--class", "HA", "--format", "json", "--timings"]);
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(report["checks"][0].get("runtime_ms").is_some());
}

#[test]
fn check_exit_codes_follow_the_verdicts() {
    let holds = cozero(&["check", "ex_5_4", "--class", "Y", "--class", "CR", "--class", "M"]);
    assert_eq!(holds.status.code(), Some(0), "{}", stdout(&holds));
    assert!(stdout(&holds).contains("HoldsExact"));
    let fails = cozero(&["check", "ex_5_4", "--class", "HA"]);
    assert_eq!(fails.status.code(), Some(1));
    assert!(stdout(&fails).contains("Fails(a)"));
    let finite = cozero(&["check", "finite(3)", "--budget", "200"]);
    assert_eq!(finite.status.code(), Some(0));
}

#[test]
fn check_reads_presentation_files() {
    let dir = std::env::temp_dir().join(format!("cozero-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fv.json");
    std::fs::write(
        &path,
        r#"{"space": "alphaN", "family": "FV",
            "generators": {"v": {"modulus": 1, "tails": [["0", "1"]], "exceptions": {}, "alpha": "0"}}}"#,
    )
    .unwrap();
    let o = cozero(&["check", path.to_str().unwrap(), "--class", "CR"]);
    assert_eq!(o.status.code(), Some(1), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("Fails(v)"));

    std::fs::write(&path, r#"{"space": "alphaN", "generators": {"v": {"modulus": "x"}}}"#).unwrap();
    let bad = cozero(&["check", path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("$.generators.v"), "{}", stderr(&bad));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn element_predicates() {
    let cases: &[(&[&str], &str)] = &[
        (&["ex_5_2_1", "coz", "v"], "ℕ (all residues mod 1, alpha excluded)"),
        (&["ex_5_2_1", "weak-unit", "v"], "true"),
        (&["ex_5_2_1", "strong-unit", "v"], "false"),
        (&["ex_5_2_1", "in-principal", "v", "1"], "true, n=1"),
        (&["ex_5_2_1", "in-principal", "1", "v"], "false"),
        (&["ex_5_2_1", "in-polar", "1", "v"], "true"),
        (&["ex_5_3_2", "in-zkernel", "a", "b"], "true"),
        (&["ex_5_3_2", "in-principal", "a", "b"], "false"),
        (&["ex_5_3_2", "in-principal", "b", "a"], "true, n=1"),
        (&["ex_5_4", "coz-closed", "a"], "false"),
        (&["ex_5_4", "regular-open", "a"], "true"),
        (&["ex_5_2_2", "regular-open", "g"], "false"),
        (&["ex_5_2_2", "in-perp", "hat", "tent"], "false"),
        (&["finite(3)", "clcoz-open", "e0 + e2"], "true"),
    ];
    for (args, want) in cases {
        let mut full = vec!["element"];
        full.extend_from_slice(args);
        let o = cozero(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert_eq!(stdout(&o).trim_end(), *want, "{args:?}");
    }
}

#[test]
fn element_json_output() {
    let o = cozero(&["element", "ex_5_2_1", "in-principal", "v", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["value"], true);
    assert_eq!(v["result"]["n"], "1");
}

#[test]
fn bad_input_exits_with_two() {
    let cases: &[&[&str]] = &[
        &["element", "ex_5_2_1", "coz", "1/0"],
        &["element", "ex_5_2_1", "coz", "v +"],
        &["element", "ex_5_2_1", "coz", "w"],
        &["element", "ex_5_2_1", "coz", "v", "v"],
        &["element", "ex_5_2_1", "no-such-predicate", "v"],
        &["element", "no_such_group", "coz", "v"],
        &["check", "ex_5_4", "--class", "Z"],
        &["check", "/nonexistent/file.json"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = cozero(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stdout(&o));
        assert!(!stderr(&o).is_empty(), "{args:?}");
    }
}

#[test]
fn terms_may_start_with_a_minus() {
    let o = cozero(&["element", "ex_5_2_1", "in-principal", "--", "-v", "v"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim_end(), "true, n=1");
    let o = cozero(&["element", "ex_5_2_1", "strong-unit", "-1"]);
    assert_eq!(stdout(&o).trim_end(), "true");
}

#[test]
fn small_budget_keeps_exact_verdicts() {
    let o = cozero(&["verify-paper", "--budget", "50", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let exact: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["verdict"] == "HoldsExact")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    for id in ["ex_5_2_1/Y", "ex_5_3_2/CR", "ex_5_4/Y", "ex_5_4/CR", "ex_5_4/M"] {
        assert!(exact.contains(&id), "{id}");
    }
}

#[test]
fn witness_pair_for_failing_y() {
    let o = cozero(&["check", "ex_5_3_2", "--class", "Y", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let items = report["checks"][0]["witness"]["items"].as_array().unwrap();
    let terms: Vec<&str> = items.iter().map(|i| i["term"].as_str().unwrap()).collect();
    assert_eq!(terms, ["a", "b"]);
}

#[test]
fn finite_presentation_file_holds_everywhere() {
    let dir = std::env::temp_dir().join(format!("cozero-cli-finite-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k2.json");
    std::fs::write(&path, r#"{"space": "finite", "finite_size": 2, "generators": {}}"#).unwrap();
    let o = cozero(&["check", path.to_str().unwrap(), "--budget", "300"]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
}
