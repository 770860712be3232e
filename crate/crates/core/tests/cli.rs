use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hm"))
        .args(args)
        .env_remove("HM_DEFAULT_PRECISION")
        .output()
        .expect("hm runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = hm(&full);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(format!("{name}.schema.json"));
    let raw: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    jsonschema::validator_for(&raw).unwrap()
}

fn assert_valid(name: &str, v: &Value) {
    let errors: Vec<String> = schema(name).iter_errors(v).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{name}: {errors:#?}");
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

#[test]
fn series_golden_text_and_json() {
    let out = hm(&["series", "--n", "1", "--prec", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 + q^2 - q^3 + 2q^4 + O(q^5)\n");

    let v = json(&["series", "--n", "5", "--prec", "20"]);
    assert_valid("series", &v);
    let mut want = vec![0i64; 20];
    for (e, c) in [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (10, 1), (12, -1), (13, -1), (16, 3), (17, 3), (18, -2), (19, -7)] {
        want[e] = c;
    }
    assert_eq!(ints(&v["series"]["coeffs"]), want);
    assert_eq!(v["series"]["precision"], 20);
}

#[test]
fn series_csv_quotes_negative_cells() {
    let out = hm(&["series", "--n", "1", "--prec", "5", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,j,coeff\n1,0,1\n1,1,0\n1,2,1\n1,3,\"-1\"\n1,4,2\n");
}

#[test]
fn default_precision_from_environment() {
    let run = |env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_hm"));
        cmd.args(["series", "--n", "2", "--format", "json"]);
        match env {
            Some(v) => cmd.env("HM_DEFAULT_PRECISION", v),
            None => cmd.env_remove("HM_DEFAULT_PRECISION"),
        };
        cmd.output().unwrap()
    };
    let count = |o: &Output| serde_json::from_slice::<Value>(&o.stdout).unwrap()["series"]["coeffs"].as_array().unwrap().len();
    assert_eq!(count(&run(None)), 20);
    assert_eq!(count(&run(Some("7"))), 7);
    assert_eq!(run(Some("seven")).status.code(), Some(2));
}

#[test]
fn hfrac_json_shape() {
    for n in 1..=5 {
        let v = json(&["hfrac", "--n", &n.to_string()]);
        assert_valid("hfraction", &v);
        assert_eq!(v["hfraction"]["offset"], 1);
        assert_eq!(v["hfraction"]["period"], if n == 1 { 3 } else { 6 * n - 4 });
    }
    let v = json(&["hfrac", "--n", "5", "--ell", "5"]);
    assert_valid("hfraction", &v);
    assert_eq!(v["ell"], 5);
}

#[test]
fn hfrac_trace_json_and_csv() {
    let v = json(&["hfrac", "--n", "3", "--trace", "3"]);
    assert_valid("trace", &v);
    assert_eq!(v["trace"].as_array().unwrap().len(), 3);

    let out = hm(&["hfrac", "--n", "3", "--trace", "3", "--format", "csv"]);
    let body = stdout(&out);
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines[0], "j,k,a,D,A,B,C");
    assert_eq!(lines[1], "0,0,\"-1\",\"1 - q\",\"-1\",\"1 - 2q - q^2 - q^4\",q");
    assert_eq!(lines.len(), 4);
}

#[test]
fn hankel_golden_lists() {
    let v = json(&["hankel", "--n", "2", "--horizon", "12"]);
    assert_valid("hankel_report", &v);
    assert_eq!(ints(&v["values"]), [1, 1, -1, -1, 1, 0, -1, 0, 0, 1, 0, -1]);
    assert_eq!(v["source"], "both");

    let v = json(&["hankel", "--n", "3", "--horizon", "24", "--source", "formula"]);
    assert_eq!(
        ints(&v["values"]),
        [1, 1, 0, -1, -1, 1, 1, 0, -1, -1, 0, 0, 1, 0, 0, 0, 1, 0, 0, -1, -1, 0, 1, 1]
    );

    let v = json(&["hankel", "--n", "5", "--horizon", "12", "--source", "brute"]);
    assert_eq!(ints(&v["values"]), [1, 1, 0, 0, 0, 1, 1, -1, 0, 0, 1, 0]);
}

#[test]
fn hankel_default_horizon_and_empty_csv() {
    let v = json(&["hankel", "--n", "2", "--ell", "1"]);
    assert_eq!(v["horizon"], 24);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));

    let out = hm(&["hankel", "--n", "1", "--horizon", "0", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n,ell,j,delta,source\n");
}

#[test]
fn verify_report() {
    let v = json(&["verify", "--suite", "hfraction", "--n", "1..2"]);
    assert_valid("verify_report", &v);
    assert_eq!(v["pass"], true);

    let out = hm(&["verify", "--suite", "thmA", "--n", "1..2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("name,pass,j,expected,got\n"));

    let v = json(&["verify", "--suite", "thmC", "--n", "1"]);
    assert_eq!(v["suite"], "gale-robinson");
    assert_eq!(v["pass"], true);
}

#[test]
fn modp_report() {
    let v = json(&["modp", "--n", "3", "--p", "2"]);
    assert_valid("modp_report", &v);
    assert_eq!(v["status"], "cycle");
    assert_eq!(v["hfraction_preperiod"], 1);
    assert_eq!(v["hfraction_period"], 14);
    assert_eq!(v["hankel_period"], 24);

    let v = json(&["modp", "--n", "4", "--p", "2", "--max-steps", "3"]);
    assert_valid("modp_report", &v);
    assert_eq!(v["status"], "inconclusive");
}

#[test]
fn scan_report() {
    for (n, ell) in [(3, "5"), (3, "6"), (4, "6")] {
        let v = json(&["scan", "--n", &n.to_string(), "--ell", ell]);
        assert_valid("scan_report", &v);
        assert_eq!(v["label"], "exploratory");
    }
    assert_eq!(hm(&["scan", "--n", "3", "--ell", "4"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["modp", "--n", "3", "--p", "4"][..],
        &["series", "--n", "0"],
        &["series", "--n", "1", "--bogus"],
        &["hankel", "--n", "2", "--source", "guess"],
        &["verify", "--suite", "nope"],
        &["modp", "--n", "3", "--p", "2", "--format", "csv"],
    ] {
        let out = hm(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn cycle_not_found_exits_1() {
    let out = hm(&["hfrac", "--n", "4", "--max-steps", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2 steps"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["series", "--n", "3", "--prec", "30", "--format", "json"][..],
        &["hfrac", "--n", "4", "--format", "json"],
        &["hankel", "--n", "3", "--ell", "2", "--format", "csv"],
        &["verify", "--suite", "periodicity", "--n", "1..3", "--format", "json"],
        &["modp", "--n", "3", "--p", "3", "--format", "json"],
    ] {
        let a = hm(args);
        let b = hm(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("hm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("series.json");
    let out = hm(&["series", "--n", "2", "--prec", "6", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v, json(&["series", "--n", "2", "--prec", "6"]));
    std::fs::remove_dir_all(&dir).unwrap();
}
