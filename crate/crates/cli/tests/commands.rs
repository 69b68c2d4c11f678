use std::process::Command;

fn betadual(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_betadual")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn schur_case_jack_as_json() {
    let (code, out, _) = betadual(&["jack", "--lambda", "[2]", "--alpha", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["coeffs"]["[2]"], "1");
    assert_eq!(v["coeffs"]["[1,1]"], "1");
}

#[test]
fn rationals_stay_exact() {
    let (code, out, _) = betadual(&["jack", "--lambda", "[2]", "--alpha", "2/3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["coeffs"]["[1,1]"], "6/5");
}

#[test]
fn cauchy_verification_passes() {
    let (code, out, _) = betadual(&["verify", "cauchy", "--alpha", "1/2", "--cutoff", "4"]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["entries"][0]["status"], "pass");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(betadual(&["jack", "--lambda", "[1,2]", "--alpha", "1"]).0, 2);
    assert_eq!(betadual(&["jack", "--lambda", "[2]", "--alpha", "x"]).0, 2);
    assert_eq!(betadual(&["jack", "--lambda", "[2]", "--alpha", "1", "--bogus"]).0, 2);
    assert_eq!(betadual(&["verify", "nothing"]).0, 2);
    assert_eq!(betadual(&["avg", "--lambda", "[1]", "--beta", "-1", "--N", "2"]).0, 2);
}

#[test]
fn duality_ratio_and_exit_status() {
    let (code, out, _) = betadual(&["dual", "--lambda", "[2]", "--alpha", "2", "--N", "1", "--N-dual", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ratio"], "-1/2");
    assert_eq!(v["printed_matches"], false);
}

#[test]
fn sampling_is_reproducible_across_thread_counts() {
    let args = ["sample", "--beta", "1", "--N", "3", "--stat", "p2", "--samples", "20000", "--seed", "9"];
    let (c1, one, _) = betadual(&[&["--threads", "1"][..], &args[..]].concat());
    let (c4, four, _) = betadual(&[&["--threads", "4"][..], &args[..]].concat());
    assert_eq!((c1, c4), (0, 0));
    assert_eq!(one, four);
}

#[test]
fn edge_csv_rows_and_summary() {
    let (code, out, err) = betadual(&["--format", "csv", "edge", "--N", "50,100,200", "--s-min", "-1", "--s-max", "1"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "N,s,scaled,airy,error");
    assert_eq!(lines.len(), 1 + 3 * 5);
    let summary: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(summary["passed"], true);
}

#[test]
fn quick_suite_passes() {
    let (code, out, _) = betadual(&["--format", "text", "verify", "all", "--quick"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS criterion")).count(), 14);
}
