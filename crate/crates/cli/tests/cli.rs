use std::process::Command;

use serde_json::Value;

fn dst(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dst"))
        .args(args)
        .output()
        .expect("dst runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn dst_json(args: &[&str]) -> Value {
    let (code, out, err) = dst(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn group_report_c5() {
    let doc = dst_json(&["group", "report", "corpus:C5", "--json"]);
    assert_eq!(doc["primitive"], true);
    assert_eq!(doc["minimum_degree"], 5);
    assert_eq!(doc["distinguishing_number"], 2);
}

#[test]
fn group_report_s3_from_file() {
    let dir = std::env::temp_dir().join(format!("dst-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.grp");
    std::fs::write(&path, "degree 3\n# S3\n(1 2)\n(1 2 3)\n").unwrap();
    let doc = dst_json(&["group", "report", path.to_str().unwrap(), "--json"]);
    assert_eq!(doc["order"], "6");
    assert_eq!(doc["distinguishing_number"], 3);
    assert_eq!(doc["order_bound"], "holds");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn group_report_m11() {
    let doc = dst_json(&["group", "report", "corpus:M11", "--json"]);
    assert_eq!(doc["order"], "7920");
    assert_eq!(doc["primitive"], true);
    assert_eq!(doc["minimum_degree"], 8);
    let capped = dst_json(&[
        "group",
        "report",
        "corpus:M11",
        "--json",
        "--element-cap",
        "10",
    ]);
    assert_eq!(capped["minimum_degree"], Value::Null);
    assert!(capped["skipped"]["minimum_degree"]
        .as_str()
        .unwrap()
        .starts_with("SKIPPED(cap)"));
}

#[test]
fn text_matches_json() {
    let doc = dst_json(&["group", "report", "corpus:D6", "--json"]);
    let (_, text, _) = dst(&["group", "report", "corpus:D6"]);
    assert!(text.contains(&format!("order: {}", doc["order"].as_str().unwrap())));
    assert!(text.contains(&format!(
        "distinguishing number: {}",
        doc["distinguishing_number"]
    )));
    assert!(text.contains("primitive: false"));
}

#[test]
fn graph_reports() {
    let j = dst_json(&["graph", "report", "johnson 6 2", "--json"]);
    assert_eq!(j["vertices"], 15);
    assert_eq!(j["automorphism_group_order"], "720");
    assert_eq!(j["distinguishing_number"], 2);
    let cube = dst_json(&["graph", "report", "power K2 3", "--json"]);
    assert_eq!(cube["distinguishing_number"], 3);
    let t = dst_json(&["graph", "report", "tgraph 6", "--json"]);
    assert_eq!(t["asymmetric"], true);
}

#[test]
fn graph_export_round_trips() {
    let (code, out, _) = dst(&["graph", "export", "johnson 5 2"]);
    assert_eq!(code, 0);
    let dir = std::env::temp_dir().join(format!("dst-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("j52.txt");
    std::fs::write(&path, out).unwrap();
    let doc = dst_json(&["graph", "report", path.to_str().unwrap(), "--json"]);
    assert_eq!(doc["edges"], 30);
    assert_eq!(doc["automorphism_group_order"], "120");
    assert_eq!(doc["distinguishing_number"], 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn disting_checks_partitions() {
    let (code, out, _) = dst(&["group", "disting", "corpus:S3", "--partition", "1; 2; 3"]);
    assert_eq!(code, 0);
    assert!(out.contains("distinguishing: true"));
    let (_, out, _) = dst(&["group", "disting", "corpus:S3", "--partition", "1 2; 3"]);
    assert!(out.contains("distinguishing: false"));
    let (_, out, _) = dst(&["group", "disting", "corpus:M11"]);
    assert!(out.contains("distinguishing number: 4"));
}

#[test]
fn bounds_short_scan() {
    let (code, out, _) = dst(&["bounds", "threshold", "--scan", "400"]);
    assert_eq!(code, 0);
    assert!(out.contains("threshold: 336"));
    assert!(out.contains("last failure: 335"));
    // The scan ends inside the failing range.
    let (code, _, _) = dst(&["bounds", "babai", "--scan", "1000"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_with_small_cap_skips() {
    let (code, out, _) = dst(&["paper", "verify", "--element-cap", "10", "--json"]);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(code, 0);
    assert_eq!(doc["failed"], 0);
    let m11 = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "AC11")
        .unwrap();
    assert_eq!(m11["status"], "SKIPPED");
    assert!(doc["skipped"].as_u64().unwrap() > 0);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(dst(&["group", "report", "/nonexistent/file.grp"]).0, 2);
    assert_eq!(dst(&["group", "report", "corpus:Z99"]).0, 2);
    assert_eq!(dst(&["graph", "report", "wheel 5"]).0, 2);
    assert_eq!(
        dst(&["group", "disting", "corpus:S3", "--partition", "1 2"]).0,
        2
    );
    assert_eq!(
        dst(&["group", "report", "corpus:C5", "--element-cap", "0"]).0,
        2
    );
    assert_eq!(dst(&["frobnicate"]).0, 2);
}

#[test]
fn malformed_group_file_names_the_line() {
    let dir = std::env::temp_dir().join(format!("dst-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.grp");
    std::fs::write(&path, "degree 3\n(1 2)\n(1 4)\n").unwrap();
    let (code, _, err) = dst(&["group", "report", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    std::fs::remove_dir_all(dir).unwrap();
}
