use std::process::{Command, Output};

fn qeuler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qeuler"))
        .args(args)
        .env_remove("QEULER_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn numbers_table() {
    let o = qeuler(&["numbers", "--m-max", "2", "--h", "1", "--k", "1", "--q", "1/2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "m,value\n0,1/1\n1,-2/5\n2,-4/15\n");
    let o = qeuler(&["numbers", "--m-max", "0", "--h", "2", "--k", "1", "--q", "1/2", "--format", "csv"]);
    assert_eq!(stdout(&o), "m,value\n0,6/5\n");
}

#[test]
fn numbers_json_lines() {
    let o = qeuler(&["numbers", "--m-max", "1", "--q", "1/2", "--format", "json"]);
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1]["value"], "-2/5");
}

#[test]
fn bad_q_exits_2_naming_q() {
    let o = qeuler(&["numbers", "--q", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("q"));
    assert_eq!(qeuler(&["numbers", "--q", "abc"]).status.code(), Some(2));
    assert_eq!(qeuler(&["numbers", "--q", "-1"]).status.code(), Some(2));
    assert_eq!(qeuler(&["numbers"]).status.code(), Some(2));
}

#[test]
fn poly_at_integer_and_tau() {
    let a = qeuler(&["poly", "--m-max", "3", "--q", "1/2", "--x", "1", "--format", "csv"]);
    let b = qeuler(&["poly", "--m-max", "3", "--q", "1/2", "--tau", "1/2", "--format", "csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(qeuler(&["poly", "--q", "1/2", "--tau", "0"]).status.code(), Some(2));
}

#[test]
fn verify_literal_and_unknown() {
    let o = qeuler(&["verify", "--id", "E14-literal"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("erratum"));
    let first: serde_json::Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    for key in ["id", "params", "lhs", "rhs", "pass", "erratum"] {
        assert!(first.get(key).is_some(), "{key}");
    }
    assert_eq!(qeuler(&["verify", "--id", "NOPE"]).status.code(), Some(2));
    let o = qeuler(&["verify", "--id", "E14c,E36c", "--m-max", "3", "--k-max", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_certify_small() {
    let o = qeuler(&["verify", "--id", "T3a,E13", "--certify", "--m-max", "2", "--k-max", "2", "--h-min", "0", "--h-max", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["certified"], true);
    }
}

#[test]
fn verify_rejects_bad_grid() {
    assert_eq!(qeuler(&["verify", "--ls", "2"]).status.code(), Some(2));
    assert_eq!(qeuler(&["verify", "--h-min", "3", "--h-max", "1"]).status.code(), Some(2));
    assert_eq!(qeuler(&["verify", "--qs", "1,-1"]).status.code(), Some(2));
}

#[test]
fn integrate_examples() {
    let o = qeuler(&["integrate", "--m", "0", "--h", "1", "--k", "1", "--p", "3", "--q", "4", "--N", "1..3", "--stable"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "N,terms,valuation\n1,3,inf\n2,9,inf\n3,27,inf\n");
    let o = qeuler(&["integrate", "--q", "2", "--p", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qeuler(&["integrate", "--k", "3", "--p", "3", "--q", "4", "--N", "5"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn integrate_budget_overrides() {
    let args = ["integrate", "--k", "2", "--p", "3", "--q", "4", "--N", "2"];
    let mut small = args.to_vec();
    small.extend(["--budget", "10"]);
    assert_eq!(qeuler(&small).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_qeuler"))
        .args(args)
        .env("QEULER_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(qeuler(&args).status.code(), Some(0));
}

#[test]
fn integrate_wrong_target_fails_certification() {
    let o = qeuler(&["integrate", "--m", "1", "--p", "3", "--q", "4", "--N", "1..3", "--target", "0", "--stable"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("1,3,0\n2,9,0\n3,27,0\n"));
}

#[test]
fn integrate_bosonic_needs_target() {
    let o = qeuler(&["integrate", "--mode", "bosonic", "--p", "3", "--q", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qeuler(&["integrate", "--mode", "bosonic", "--m", "0", "--p", "3", "--q", "4", "--target", "1", "--stable"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn zeta_examples() {
    let o = qeuler(&["zeta", "--s", "0", "--x", "1", "--q", "0.5", "--h", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("1.0"));
    let o = qeuler(&["zeta", "--s", "-1", "--x", "1", "--q", "0.5", "--h", "1", "--check-interpolation", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["abs_diff"].as_f64().unwrap() < 1e-12);
    assert!(v.get("series_value").is_some() && v.get("closed_value").is_some());
    assert_eq!(qeuler(&["zeta", "--s", "2", "--q", "1.5"]).status.code(), Some(2));
    assert_eq!(qeuler(&["zeta", "--s", "2", "--q", "0.5", "--h", "0"]).status.code(), Some(2));
}

#[test]
fn zeta_csv_columns() {
    let o = qeuler(&["zeta", "--s", "2", "--x", "1/2", "--q", "0.3", "--h", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("s_re,s_im,x,q,h,value_re,value_im,n_terms,tail_bound\n"));
}

#[test]
fn zeta_mellin_and_gen_fn() {
    let o = qeuler(&["zeta", "--s", "2", "--x", "1", "--q", "0.5", "--mellin", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["abs_diff"].as_f64().unwrap() < 1e-6);
    let o = qeuler(&["zeta", "--gen-fn", "0", "--x", "1", "--q", "0.5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!((v["value_re"].as_f64().unwrap() - 1.0).abs() < 1e-15);
    assert_eq!(qeuler(&["zeta", "--s", "-1", "--q", "0.5", "--mellin"]).status.code(), Some(2));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("qeuler-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("n.csv");
    let o = qeuler(&["numbers", "--m-max", "1", "--q", "1/2", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "m,value\n0,1/1\n1,-2/5\n");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn zero_workers_rejected() {
    assert_eq!(qeuler(&["numbers", "--q", "1/2", "--workers", "0"]).status.code(), Some(2));
}
