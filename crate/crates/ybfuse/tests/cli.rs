//! End-to-end checks of the command-line interface: exit codes, output
//! determinism, and the documented artifact formats.

use std::process::{Command, Output};

fn ybfuse(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ybfuse"))
        .args(args)
        .env_remove("YBFUSE_EMIT")
        .output()
        .expect("binary runs")
}

#[test]
fn reproduce_exit_codes() {
    let ok = ybfuse(&["reproduce", "mat-Sn"]);
    assert!(ok.status.success(), "{}", String::from_utf8_lossy(&ok.stderr));
    let ok = ybfuse(&["reproduce", "ex-Ra", "--q", "3/2"]);
    assert!(ok.status.success());
    let bad = ybfuse(&["reproduce", "bogus"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("unknown example id"));
}

#[test]
fn kernel_emission_formats() {
    let pretty = ybfuse(&["kernel", "--kind", "yang", "--N", "2"]);
    assert!(pretty.status.success());
    let text = String::from_utf8_lossy(&pretty.stdout);
    assert!(text.contains("(u - 1)/(u)"), "unexpected pretty output: {text}");

    let json = ybfuse(&["kernel", "--kind", "hecke", "--N", "2", "--q", "2", "--emit", "json"]);
    assert!(json.status.success());
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).expect("valid json");
    assert_eq!(v["rows"], 4);
    assert_eq!(v["cols"], 4);

    // emits are byte-identical across runs with identical flags
    let again = ybfuse(&["kernel", "--kind", "hecke", "--N", "2", "--q", "2", "--emit", "json"]);
    assert_eq!(json.stdout, again.stdout);
}

#[test]
fn env_var_overrides_default_format() {
    let out = Command::new(env!("CARGO_BIN_EXE_ybfuse"))
        .args(["kernel", "--kind", "yang", "--N", "2"])
        .env("YBFUSE_EMIT", "json")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert!(serde_json::from_slice::<serde_json::Value>(&out.stdout).is_ok());
}

#[test]
fn fuse_and_idempotent_artifacts() {
    let fuse = ybfuse(&[
        "fuse", "--kernel", "yang", "--N", "2", "--tableau", "[[1,2]]", "--tableau2", "[[1,2]]",
        "--emit", "json",
    ]);
    assert!(fuse.status.success(), "{}", String::from_utf8_lossy(&fuse.stderr));
    let v: serde_json::Value = serde_json::from_slice(&fuse.stdout).expect("valid json");
    assert_eq!(v["rows"], 9);

    let idem = ybfuse(&["idempotent", "--group", "sym", "--tableau", "[[1,2],[3]]", "--emit", "json"]);
    assert!(idem.status.success());
    let v: serde_json::Value = serde_json::from_slice(&idem.stdout).expect("valid json");
    // coefficients of one third times the three-letter evaluation
    assert_eq!(v["[1,2,3]"], "1/3");

    let bad_tableau = ybfuse(&["idempotent", "--group", "sym", "--tableau", "[[2,1]]"]);
    assert_eq!(bad_tableau.status.code(), Some(2));

    let bad_q = ybfuse(&[
        "idempotent", "--group", "hecke", "--q", "1", "--tableau", "[[1,2]]",
    ]);
    assert_eq!(bad_q.status.code(), Some(2));
}

#[test]
fn verify_unitarity_suite() {
    let out = ybfuse(&["verify", "unitarity", "--kind", "hecke", "--N", "2", "--q", "2", "--emit", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid json");
    assert_eq!(v["passed"], true);

    let unknown = ybfuse(&["verify", "no-such-suite"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn scan_reports_named_pairs() {
    let dir = std::env::temp_dir().join("ybfuse-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let pairs = dir.join("pairs.json");
    std::fs::write(&pairs, r#"[["1","2"],["2","1"],["0","5"],["3","7"]]"#).unwrap();
    let out = ybfuse(&["scan", "--n", "3", "--pairs", pairs.to_str().unwrap(), "--emit", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid json");
    let rows = v.as_array().expect("list");
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["idempotent"], true);
    assert_eq!(rows[0]["scale"], "6/1");
    assert_eq!(rows[1]["idempotent"], true);
    assert_eq!(rows[1]["scale"], "3/1");
    assert_eq!(rows[2]["singular"], true);
    assert_eq!(rows[3]["idempotent"], false);
    assert_eq!(rows[3]["invertible"], true);
}
