use std::process::Command;

use friendship_cli::run;
use friendship_core::{Design, Digraph};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str], stdin: &str) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("friendship").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn wheel_as_dot() {
    let o = invoke(&["wheel", "--cycles", "4,3,2", "--format", "dot"], "");
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("digraph G {"));
    // 9 spokes each way plus 4 + 3 + 2 rim arcs
    assert_eq!(o.stdout.matches("->").count(), 27);
}

#[test]
fn wheel_json_reparses() {
    let o = invoke(&["wheel", "--cycles", "3,2"], "");
    assert_eq!(o.code, 0);
    let d = Digraph::from_json(&o.stdout).unwrap();
    assert_eq!(d.order(), 6);
    assert_eq!(invoke(&["wheel", "--cycles", "1"], "").code, 2);
}

#[test]
fn plane_pipes_into_classify() {
    let plane = invoke(&["plane", "--q", "2", "--emit", "digraph"], "");
    assert_eq!(plane.code, 0);
    let verdict = invoke(&["classify", "--digraph", "-"], &plane.stdout);
    assert_eq!(verdict.code, 0);
    let value: serde_json::Value = serde_json::from_str(&verdict.stdout).unwrap();
    assert_eq!(value["verdict"], "Regular");
    assert_eq!(value["k"], 3);
    assert_eq!(value["n"], 7);
}

#[test]
fn plane_design_and_errors() {
    let o = invoke(&["plane", "--q", "3"], "");
    assert_eq!(o.code, 0);
    let design = Design::from_json(&o.stdout).unwrap();
    assert_eq!((design.varieties(), design.block_count()), (13, 13));

    let o = invoke(&["plane", "--q", "6"], "");
    assert_eq!(o.code, 2);
    assert_eq!(o.stderr.lines().count(), 1);
    assert_eq!(invoke(&["plane", "--q", "2", "--format", "dot"], "").code, 2);
}

#[test]
fn verify_circulant_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("circulant7.json");
    std::fs::write(&path, Digraph::circulant(7, &[1, 2, 3]).unwrap().to_json()).unwrap();
    let o = invoke(&["verify", "--digraph", path.to_str().unwrap()], "");
    assert_eq!(o.code, 1);
    let report: serde_json::Value = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(report["holds"], false);
    assert_eq!(report["witness"]["u"], 0);
    assert_eq!(report["witness"]["v"], 1);
    assert_eq!(report["witness"]["common_out"], 2);
}

#[test]
fn verify_all_props_emits_seven_lines() {
    let wheel = invoke(&["wheel", "--cycles", "2,2"], "").stdout;
    let o = invoke(&["verify", "--digraph", "-", "--all-props"], &wheel);
    assert_eq!(o.code, 0);
    let lines: Vec<_> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 7);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["holds"], true);
        assert!(v["witness"].is_null());
    }
}

#[test]
fn build_from_design_file() {
    let design = invoke(&["plane", "--q", "3"], "").stdout;
    let o = invoke(&["build", "--design", "-"], &design);
    assert_eq!(o.code, 0);
    let d = Digraph::from_json(&o.stdout).unwrap();
    assert!((0..13).all(|v| d.out_degree(v) == 4));

    let bad = r#"{"v":7,"blocks":[[0,1,2],[0,1,3],[0,5,6],[1,3,5],[1,4,6],[2,3,6],[2,4,5]]}"#;
    assert_eq!(invoke(&["build", "--design", "-"], bad).code, 1);
    assert_eq!(invoke(&["build", "--design", "-"], "{").code, 2);
}

#[test]
fn hall_modes() {
    let fano = invoke(&["plane", "--q", "2"], "").stdout;
    let o = invoke(&["hall", "--design", "-", "--exhaustive"], &fano);
    assert_eq!(o.code, 0);
    let report: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(report["cases"]["singleton"], 3);

    let full = r#"{"v":2,"blocks":[[0,1],[0,1]]}"#;
    let o = invoke(&["hall", "--design", "-"], full);
    assert_eq!(o.code, 1);

    let big = invoke(&["plane", "--q", "4"], "").stdout;
    assert_eq!(invoke(&["hall", "--design", "-", "--exhaustive"], &big).code, 2);
    assert_eq!(invoke(&["hall", "--design", "-"], &big).code, 0);
}

#[test]
fn search_streams_json_lines_with_summary() {
    let o = invoke(&["search", "--n", "4"], "");
    assert_eq!(o.code, 0);
    let lines: Vec<_> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 9);
    for line in &lines[..8] {
        Digraph::from_json(line).unwrap();
    }
    let summary: serde_json::Value = serde_json::from_str(lines[8]).unwrap();
    assert_eq!(summary["summary"]["total"], 8);
    assert_eq!(summary["summary"]["fancy_wheel"], 8);
    assert_eq!(summary["summary"]["regular"], 0);

    assert_eq!(invoke(&["search", "--n", "8"], "").code, 2);
}

#[test]
fn usage_errors_exit_two_with_one_line() {
    for args in [&["frobnicate"][..], &["wheel", "--bogus"], &["classify"], &[]] {
        let o = invoke(args, "");
        assert_eq!(o.code, 2, "{args:?}");
        assert_eq!(o.stderr.lines().count(), 1, "{args:?}: {}", o.stderr);
    }
    let o = invoke(&["classify", "--digraph", "/definitely/missing.json"], "");
    assert_eq!(o.code, 2);
    let o = invoke(&["classify", "--digraph", "-"], r#"{"n":2,"arcs":[[1,1]]}"#);
    assert_eq!(o.code, 2);
}

#[test]
fn quiet_and_out_flags() {
    let o = invoke(&["wheel", "--cycles", "3", "--quiet"], "");
    assert_eq!((o.code, o.stdout.as_str()), (0, ""));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let o = invoke(&["wheel", "--cycles", "3", "--out", path.to_str().unwrap()], "");
    assert_eq!(o.code, 0);
    assert!(o.stdout.is_empty());
    let d = Digraph::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(d.order(), 4);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["plane", "--q", "4", "--emit", "digraph"][..],
        &["search", "--n", "5", "--modulo-iso"],
        &["plane", "--q", "3", "--emit", "digraph", "--seed", "11"],
    ] {
        assert_eq!(invoke(args, "").stdout, invoke(args, "").stdout);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_friendship");
    let out = Command::new(bin).args(["wheel", "--cycles", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"n\":3,\"arcs\":[[0,1],[0,2],[1,0],[1,2],[2,0],[2,1]]}\n");
    let out = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
