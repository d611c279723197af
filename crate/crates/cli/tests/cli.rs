//! End-to-end tests of the `xicalc` binary: exit codes, output schemas,
//! determinism, config precedence, and atomic file output.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn xicalc(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_xicalc"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("xicalc_test_{}_{name}", std::process::id()))
}

#[test]
fn usage_errors_exit_2_and_print_grammar_without_evaluating() {
    for args in [
        &["verify", "nosuchcheck"][..],
        &["frobnicate"][..],
        &["eval", "nosuchfn", "--x", "1"][..],
        &["eval", "j0", "--y", "1"][..],
        &["scan", "primes", "--y-max", "5"][..],
        &["eval", "Xi"][..],
        &["verify", "all", "--r", "0.5"][..],
        &["verify", "bvp_i", "--format", "yaml"][..],
        &["eval", "zeta", "--re", "2", "--format", "csv"][..],
    ] {
        let (code, stdout, stderr) = xicalc(args);
        assert_eq!(code, 2, "args {args:?}: stderr = {stderr}");
        assert!(stdout.is_empty(), "args {args:?}: evaluated something: {stdout}");
        assert!(stderr.contains("GRAMMAR"), "args {args:?}: no grammar in {stderr}");
    }
}

#[test]
fn eval_matches_documented_value() {
    let (code, stdout, _) = xicalc(&["eval", "Xi", "--y", "0"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("0.4971207781"), "got {stdout}");
}

#[test]
fn eval_emits_complex_json_as_re_im_object() {
    let (code, stdout, _) =
        xicalc(&["eval", "gamma", "--re", "0.5", "--im", "14.1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["function"], "gamma");
    assert!(v["value"]["re"].is_f64() && v["value"]["im"].is_f64());

    // Purely real results stay a bare number.
    let (code, stdout, _) = xicalc(&["eval", "zeta", "--re", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v["value"].is_f64());
    assert!((v["value"].as_f64().unwrap() - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
}

#[test]
fn numerical_failures_exit_3() {
    // ζ has a pole at s = 1.
    let (code, _, stderr) = xicalc(&["eval", "zeta", "--re", "1"]);
    assert_eq!(code, 3, "stderr = {stderr}");
    // The windowed-integral identity needs x√t > π; x = 1 violates it.
    let (code, _, stderr) = xicalc(&["verify", "thm_1_2", "--grid", "1"]);
    assert_eq!(code, 3, "stderr = {stderr}");
    assert!(stderr.contains("error:"));
}

#[test]
fn verify_single_check_emits_one_schema_valid_report() {
    let (code, stdout, _) =
        xicalc(&["verify", "bvp_i", "--t", "1.0", "--tol", "1e-10", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["check_id"], "bvp_i");
    assert_eq!(v["params"]["mode"], "exact");
    for key in ["lhs", "rhs", "abs_diff", "rel_diff", "tol", "passed", "wall_ms"] {
        assert!(!v[key].is_null(), "missing {key}");
    }
    assert_eq!(v["passed"], true);
    // EXACT mode carries no calibration block, and json output is
    // deterministic: the wall-clock field is zeroed.
    assert!(v.get("calibration").is_none());
    assert_eq!(v["wall_ms"], 0.0);
}

#[test]
fn verify_suite_csv_is_header_plus_19_rows_in_registry_order() {
    let (code, stdout, _) = xicalc(&["verify", "all", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 20);
    assert!(lines[0].starts_with("check_id,params,lhs,rhs,abs_diff,rel_diff,ratio,tol,passed"));
    assert!(lines[1].starts_with("eq_1_1,"));
    assert!(lines[19].starts_with("chain_3_12,"));
    // Calibrate-mode rows populate the calibration columns.
    let thm11 = lines.iter().find(|l| l.starts_with("thm_1_1,")).unwrap();
    assert!(thm11.contains("1.77245385090552"), "calibration constant missing: {thm11}");
}

#[test]
fn verify_suite_json_is_byte_identical_across_runs() {
    let (code_a, run_a, _) = xicalc(&["verify", "all", "--format", "json"]);
    let (code_b, run_b, _) = xicalc(&["verify", "all", "--format", "json"]);
    assert_eq!((code_a, code_b), (0, 0));
    assert_eq!(run_a, run_b, "identical invocations must emit identical bytes");

    // Round-trip: every numeric field survives parse → re-emit.
    let v: serde_json::Value = serde_json::from_str(&run_a).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 19);
    assert_eq!(v["all_passed"], true);
    let reemitted = serde_json::to_string_pretty(&v).unwrap();
    let reparsed: serde_json::Value = serde_json::from_str(&reemitted).unwrap();
    assert_eq!(v, reparsed);
}

#[test]
fn verify_exit_1_when_an_exact_check_fails() {
    // An impossible tolerance forces a failure without breaking anything.
    let (code, stdout, _) = xicalc(&["verify", "bvp_i", "--tol", "1e-18"]);
    assert_eq!(code, 1, "stdout = {stdout}");
    assert!(stdout.contains("FAIL"));
}

#[test]
fn calibrate_mode_failures_are_advisory() {
    // Spread ~4e-14 cannot meet 1e-20, so the report fails — but calibrate
    // reports never gate the exit code.
    let (code, stdout, _) =
        xicalc(&["verify", "thm_1_1", "--mode", "calibrate", "--tol", "1e-20"]);
    assert_eq!(code, 0, "stdout = {stdout}");
    assert!(stdout.contains("FAIL"));
    assert!(stdout.contains("constant = 1.77245385090552"));
}

#[test]
fn out_flag_writes_atomically() {
    let path = temp_path("report.json");
    let (code, stdout, _) = xicalc(&[
        "verify",
        "parseval",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty(), "with --out nothing goes to stdout");
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["check_id"], "parseval");
    // No temp droppings next to the target.
    let dir = path.parent().unwrap();
    let leftovers: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .filter_map(|e| e.ok())
        .map(|e| e.file_name().to_string_lossy().into_owned())
        .filter(|n| n.contains("report.json.tmp"))
        .collect();
    assert!(leftovers.is_empty(), "temp files left behind: {leftovers:?}");
    fs::remove_file(&path).unwrap();

    // Unwritable sink → exit 3.
    let (code, _, stderr) = xicalc(&[
        "verify",
        "parseval",
        "--format",
        "json",
        "--out",
        "/nonexistent_dir_xyz/report.json",
    ]);
    assert_eq!(code, 3, "stderr = {stderr}");
}

#[test]
fn scan_emits_bracket_csv() {
    let (code, stdout, _) = xicalc(&["scan", "xi-zeros", "--y-max", "15"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "index,y_lower,y_upper,y_mid");
    assert_eq!(lines.len(), 2, "exactly one zero below 15: {stdout}");
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(fields[0], "1");
    let mid: f64 = fields[3].parse().unwrap();
    assert!((mid - 14.134725141734694).abs() < 1e-4, "mid = {mid}");
}

#[test]
fn heat_reports_value_and_small_residual() {
    let (code, stdout, _) = xicalc(&["heat", "--r", "1", "--t", "1", "--residual"]);
    assert_eq!(code, 0);
    let u_line = stdout.lines().find(|l| l.starts_with("u = ")).unwrap();
    let u: f64 = u_line.trim_start_matches("u = ").parse().unwrap();
    assert!(u.is_finite() && u > 0.0);
    let r_line = stdout.lines().find(|l| l.starts_with("residual = ")).unwrap();
    let resid: f64 = r_line.trim_start_matches("residual = ").parse().unwrap();
    assert!(resid < 1e-6, "residual = {resid}");
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let cfg = temp_path("eval.cfg");
    fs::write(&cfg, "# shared parameters\nr = 2.0\nt = 0.5\n").unwrap();

    let (code, from_config, _) =
        xicalc(&["eval", "u", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_, direct, _) = xicalc(&["eval", "u", "--r", "2.0", "--t", "0.5"]);
    assert_eq!(from_config, direct, "config values must act like flags");

    let (code, overridden, _) =
        xicalc(&["eval", "u", "--config", cfg.to_str().unwrap(), "--r", "1.0"]);
    assert_eq!(code, 0);
    let (_, direct_override, _) = xicalc(&["eval", "u", "--r", "1.0", "--t", "0.5"]);
    assert_eq!(overridden, direct_override, "flags must take precedence");

    fs::remove_file(&cfg).unwrap();

    // Malformed config lines are usage errors.
    let bad = temp_path("bad.cfg");
    fs::write(&bad, "t 0.5\n").unwrap();
    let (code, _, stderr) = xicalc(&["eval", "u", "--config", bad.to_str().unwrap(), "--r", "1"]);
    assert_eq!(code, 2, "stderr = {stderr}");
    fs::remove_file(&bad).unwrap();
}
