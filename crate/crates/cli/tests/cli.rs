use serde_json::Value;
use std::process::{Command, Output};

fn zeta3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zeta3"))
        .args(args)
        .env_remove("ZETA3_PRECISION_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = zeta3(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&a)).unwrap()
}

fn column(v: &Value, key: &str) -> Vec<String> {
    v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| match &r[key] {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
        .collect()
}

#[test]
fn table_rho2_rows() {
    let v = json(&["table", "--family", "1,1", "--rho", "2", "--n", "2..4,50"]);
    assert_eq!(column(&v, "n"), ["2", "3", "4", "50"]);
    assert_eq!(
        &column(&v, "p/q")[..3],
        ["1327/1104", "104377/86832", "58624219/48769920"]
    );
    assert_eq!(column(&v, "error")[3], "9.250e-152");
}

#[test]
fn table_single_rows() {
    let csv = stdout(&["table", "--family", "apery", "--n", "2", "--format", "csv"]);
    assert_eq!(csv, "n,p/q,error\n2,351/292,2.109e-6\n");
    let v = json(&["table", "--family", "1,2", "--theta", "2", "--n", "3"]);
    assert_eq!(column(&v, "p/q"), ["1987/1653"]);
    let v = json(&[
        "table",
        "--family",
        "1,3",
        "--upsilon",
        "1",
        "--chi",
        "1",
        "--psi",
        "1",
        "--n",
        "4",
    ]);
    assert_eq!(column(&v, "p/q"), ["118221931/98349696"]);
}

#[test]
fn json_top_level_shape() {
    let v = json(&["table", "--n", "2"]);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["command", "config", "rows", "summary"]);
    assert_eq!(v["command"], "table");
    assert_eq!(v["config"]["family"], "apery");
}

#[test]
fn csv_uses_lf_and_header() {
    let csv = stdout(&[
        "certify", "--family", "apery", "--n", "1..5", "--format", "csv",
    ]);
    assert!(!csv.contains('\r'));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[0].starts_with("n,omega,integral,"));
}

#[test]
fn figure1_extremes() {
    let v = json(&["figure", "--preset", "figure1"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 13);
    assert_eq!(v["rows"][0].as_object().unwrap().len(), 10);
    assert_eq!(v["summary"]["min"], "1.44346e-2");
    assert_eq!(v["summary"]["max"], "1.37009e-1");
}

#[test]
fn figure2_series() {
    let v = json(&["figure", "--preset", "figure2"]);
    assert_eq!(
        column(&v, "source"),
        ["apery", "counterexample1", "counterexample2"]
    );
    assert_eq!(v["summary"]["points_per_series"], 9);
}

#[test]
fn cf_canonical_heads() {
    let v = json(&[
        "cf",
        "--family",
        "1,2",
        "--theta",
        "2",
        "--canonical",
        "--n",
        "3",
    ]);
    assert_eq!(column(&v, "b"), ["9", "-184", "-30672"]);
    assert_eq!(column(&v, "a"), ["8", "359", "146736"]);
    let v = json(&["cf", "--family", "apery", "--canonical", "--n", "3"]);
    assert_eq!(v["summary"]["bars"], "6|/|5 - 1|/|117 - 64|/|535");
    let v = json(&["cf", "--family", "1,2", "--theta", "2", "--n", "2"]);
    assert_eq!(column(&v, "b"), ["9", "-23/3"]);
    assert_eq!(column(&v, "a"), ["8", "359/24"]);
}

#[test]
fn recurrence_reports() {
    let v = json(&["recurrence", "--family", "apery", "--n", "20"]);
    assert_eq!(v["summary"]["method"], "closed form");
    assert_eq!(v["summary"]["beta"], "-34*n^3 - 153*n^2 - 231*n - 117");
    assert_eq!(v["summary"]["roots"], "17 ± 12√2");
    assert_eq!(v["summary"]["verified"], true);
    let v = json(&["recurrence", "--family", "1,2", "--theta", "3", "--n", "10"]);
    assert_eq!(v["summary"]["verified"], true);
    let v = json(&["recurrence", "--family", "counterexample1", "--n", "35"]);
    assert_eq!(v["summary"]["method"], "fitted");
    assert_eq!(v["summary"]["characteristic"], "t^2 - 34*t + 1");
}

#[test]
fn recurrence_fit_failure_exits_one() {
    let out = zeta3(&[
        "recurrence",
        "--family",
        "counterexample2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["fit"], "failed");
}

#[test]
fn certify_verdicts() {
    let v = json(&["certify", "--family", "1,2", "--theta", "2", "--n", "50"]);
    assert_eq!(v["rows"][0]["integral"], true);
    assert_eq!(v["summary"]["verdict"], "PASS");
    let v = json(&["certify", "--family", "apery", "--n", "50"]);
    assert_eq!(v["summary"]["verdict"], "PASS");
    let v = json(&["certify", "--family", "counterexample2", "--n", "30"]);
    assert_eq!(v["summary"]["integrality"], "fail");
    assert_eq!(v["summary"]["verdict"], "FAIL");
}

#[test]
fn output_is_deterministic() {
    let args = [
        "certify", "--family", "1,1", "--rho", "4", "--n", "1..12", "--format", "json",
    ];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("zeta3-cli-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let out = zeta3(&["table", "--n", "3", "--format", "csv", "--output", p]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "n,p/q,error\n3,62531/52020,1.968e-9\n"
    );
    let _ = std::fs::remove_file(path);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["table", "--family", "1,2"][..],
        &["table", "--family", "1,1", "--rho", "2", "--theta", "3"],
        &["table", "--unknown"],
        &["table", "--family", "7,1", "--rho", "2"],
        &["table", "--n", "5..1"],
        &["figure", "--family", "1,1"],
        &["cf", "--family", "1,1", "--rho", "2", "--canonical"],
        &["table", "--format", "xml"],
    ] {
        assert_eq!(zeta3(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn precision_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_zeta3"))
        .args(["table", "--n", "50"])
        .env("ZETA3_PRECISION_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("precision cap"));
}
