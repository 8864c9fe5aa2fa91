//! End-to-end checks of the `qverify` binary: exit codes, report formats,
//! and determinism of the JSON stream across parallelism levels.

use std::process::{Command, Output};

fn qverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qverify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = qverify(&["verify", "eq2.13", "--L", "0..20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("ok   eq2.13 L=20"), "{text}");
    assert!(text.contains("total=21 passed=21 failed=0 skipped=0"), "{text}");
}

#[test]
fn unknown_identity_exits_two() {
    let out = qverify(&["verify", "bogus-id"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unknown identity"), "{err}");
}

#[test]
fn bad_range_exits_two() {
    let out = qverify(&["verify", "eq2.13", "--L", "9..1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn grid_with_constraint_reports_skips() {
    let out = qverify(&["verify", "eq2.21", "--nu", "1..2", "--s", "0..1", "--L", "0..3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // nu=1 s=1 cells are skipped
    assert!(text.contains("skipped=4"), "{text}");
}

#[test]
fn expand_builders_print_exact_text() {
    let out = qverify(&["expand", "qbinom", "2", "2"]);
    assert_eq!(stdout(&out).trim(), "1 + q + 2*q^2 + q^3 + q^4");
    let out = qverify(&["expand", "kernel", "C", "1", "1"]);
    assert_eq!(stdout(&out).trim(), "q");
    let out = qverify(&[
        "expand", "g", "--N", "1", "--M", "1", "--alphaK", "5", "--betaK", "4", "--K", "3",
    ]);
    assert_eq!(stdout(&out).trim(), "1 + q");
    let out = qverify(&["expand", "nonsense", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_stream_parses_and_ends_with_summary() {
    let out = qverify(&["verify", "eq3.24", "--L", "0..3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    for line in &lines[..4] {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["identityId"], "eq3.24");
        assert_eq!(v["passed"], true);
    }
    let summary: serde_json::Value = serde_json::from_str(lines[4]).unwrap();
    assert_eq!(summary["total"], 4);
    assert_eq!(summary["failed"], 0);
}

#[test]
fn json_stream_is_stable_across_parallelism() {
    let strip_elapsed = |text: String| -> Vec<serde_json::Value> {
        text.lines()
            .map(|line| {
                let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
                if let Some(obj) = v.as_object_mut() {
                    obj.remove("elapsedMillis");
                }
                v
            })
            .collect()
    };
    let run = |threads: &str| {
        let out = qverify(&[
            "verify",
            "eq2.16",
            "eq3.4",
            "--L",
            "0..8",
            "--format",
            "json",
            "--parallelism",
            threads,
        ]);
        assert_eq!(out.status.code(), Some(0));
        strip_elapsed(stdout(&out))
    };
    let serial = run("1");
    let parallel = run("4");
    assert_eq!(serial, parallel);
    assert_eq!(serial, run("1"), "repeat runs must agree");
}

#[test]
fn series_identity_uses_cap_flag() {
    let out = qverify(&["verify", "eq2.17", "--cap", "40", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(first["cap"], 40);
}

#[test]
fn sweep_conjecture_small_grid_is_clean() {
    let out = qverify(&[
        "sweep-conjecture",
        "--K",
        "2..2",
        "--max-size",
        "6",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // only failures are reported individually, so a clean sweep is summary-only
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1, "{text}");
    let summary: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(summary["failed"], 0);
    assert!(summary["skipped"].as_u64().unwrap() > 0, "out-of-region points count as skipped");
}

#[test]
fn sweep_positivity_small_grid_passes() {
    let out = qverify(&["sweep-positivity", "--max-l", "4", "--nu-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("borwein-positivity"), "{text}");
    assert!(text.contains("theorem1-positivity"), "{text}");
    assert!(text.contains("failed=0"), "{text}");
}

#[test]
fn verify_all_is_a_single_green_entry_point() {
    let out = qverify(&["verify-all", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let summary: serde_json::Value =
        serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(summary["failed"], 0);
    assert!(summary["total"].as_u64().unwrap() > 1500, "{summary}");
    // every registered finite identity and every series identity shows up
    for id in ["eq1.6", "eq2.22", "eq3.25", "eq2.17", "eq3.21", "jtp"] {
        assert!(text.contains(&format!("\"identityId\":\"{id}\"")), "{id} missing");
    }
}

#[test]
fn parallelism_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_qverify"))
        .args(["verify", "eq2.13", "--L", "0..5"])
        .env("QVERIFY_PARALLELISM", "2")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_qverify"))
        .args(["verify", "eq2.13", "--L", "0..5"])
        .env("QVERIFY_PARALLELISM", "zero")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2), "junk env value is a config error");
}

#[test]
fn output_file_receives_the_stream() {
    let dir = std::env::temp_dir().join(format!("qverify-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = qverify(&[
        "verify",
        "eq1.6",
        "--n",
        "0..5",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = std::fs::read_to_string(&path).unwrap();
    assert_eq!(body.lines().count(), 7);
    std::fs::remove_dir_all(&dir).unwrap();
}
