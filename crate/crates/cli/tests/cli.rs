use std::process::{Command, Output};

fn conevol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conevol")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines().skip(1).map(|l| l.split(',').map(str::to_string).collect()).collect()
}

#[test]
fn volume_reports_hyperbolic_record() {
    let o = conevol(&["volume", "--family", "c2n2", "--n", "1", "--alpha", "0.5", "--cross-check"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("family,n,alpha,regime,volume,error_estimate,schlafli_volume,alpha_K\n"));
    let row = &csv_rows(&text)[0];
    assert_eq!(row[3], "hyperbolic");
    let v: f64 = row[4].parse().unwrap();
    let s: f64 = row[6].parse().unwrap();
    assert!((v - s).abs() < 1e-6);
}

#[test]
fn exit_codes() {
    assert_eq!(conevol(&["volume", "--family", "c2n2", "--n", "1", "--alpha", "6.28"]).status.code(), Some(2));
    let bad = conevol(&["volume", "--family", "c2n2", "--n", "0", "--alpha", "1"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("n must be nonzero"));
    assert_eq!(conevol(&["volume", "--family", "c9", "--n", "1", "--alpha", "1"]).status.code(), Some(1));
    assert_eq!(conevol(&["volume", "--family", "c2n2"]).status.code(), Some(1));
    assert_eq!(conevol(&["critical-angle", "--family", "c2nm2n", "--n", "1"]).status.code(), Some(1));
}

#[test]
fn degrees_flag_converts() {
    let a = conevol(&["volume", "--family", "c2n3", "--n", "1", "--alpha", "90", "--degrees"]);
    let b = conevol(&["volume", "--family", "c2n3", "--n", "1", "--alpha", &std::f64::consts::FRAC_PI_2.to_string()]);
    assert_eq!(csv_rows(&stdout(&a))[0][4], csv_rows(&stdout(&b))[0][4]);
}

#[test]
fn sweep_header_and_monotone_hyperbolic_rows() {
    let o = conevol(&[
        "sweep",
        "--family",
        "c2n2",
        "--n",
        "1",
        "--alpha-start",
        "0.05",
        "--alpha-stop",
        "4.0",
        "--count",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next().unwrap(), "alpha,regime,volume,error_estimate,l_alpha,alpha_K,status");
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 100);
    let hyp: Vec<f64> = rows.iter().filter(|r| r[1] == "hyperbolic").map(|r| r[2].parse().unwrap()).collect();
    assert!(hyp.len() > 40);
    assert!(hyp.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn sweep_spherical_rows_symmetric() {
    let ak = 2.0 * std::f64::consts::PI / 3.0;
    let start = ak + 0.05;
    let stop = 2.0 * std::f64::consts::PI - start;
    let o = conevol(&[
        "sweep",
        "--family",
        "c2n2",
        "--n",
        "1",
        "--alpha-start",
        &start.to_string(),
        "--alpha-stop",
        &stop.to_string(),
        "--count",
        "21",
    ]);
    let vols: Vec<f64> = csv_rows(&stdout(&o)).iter().map(|r| r[2].parse().unwrap()).collect();
    for i in 0..vols.len() / 2 {
        assert!((vols[i] - vols[vols.len() - 1 - i]).abs() < 1e-8);
    }
}

#[test]
fn sweep_continues_past_failures_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.csv");
    let p2 = dir.path().join("b.csv");
    let base =
        ["sweep", "--family", "c2n3", "--n", "-2", "--alpha-start", "0.5", "--alpha-stop", "6.0", "--count", "40"];
    let mut a1 = base.to_vec();
    a1.extend(["--jobs", "1", "--out", p1.to_str().unwrap()]);
    let mut a2 = base.to_vec();
    a2.extend(["--jobs", "4", "--out", p2.to_str().unwrap()]);
    assert_eq!(conevol(&a1).status.code(), Some(0));
    assert_eq!(conevol(&a2).status.code(), Some(0));
    let t1 = std::fs::read(&p1).unwrap();
    assert_eq!(t1, std::fs::read(&p2).unwrap());
    let text = String::from_utf8(t1).unwrap();
    assert!(text.lines().any(|l| l.ends_with(",out-of-range")));
}

#[test]
fn sweep_json_has_metadata() {
    let o = conevol(&[
        "sweep",
        "--family",
        "c2nm2n",
        "--n",
        "2",
        "--alpha-start",
        "1",
        "--alpha-stop",
        "2",
        "--count",
        "3",
        "--format",
        "json",
        "--cross-check",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["metadata"]["config"]["count"], 3);
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    assert_eq!(v["rows"][0]["status"], "ok");
    assert!(v["rows"][0]["schlafli_volume"].is_number());
}

#[test]
fn critical_angle_figure_eight() {
    let a = conevol(&["critical-angle", "--family", "c2n2", "--n", "1"]);
    let b = conevol(&["critical-angle", "--family", "c2n2", "--n", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let row = &csv_rows(&stdout(&a))[0];
    assert_eq!(row[0], "2.0943951024");
}

#[test]
fn roots_at_pi() {
    let o = conevol(&["roots", "--family", "c2n2", "--n", "1", "--alpha", &std::f64::consts::PI.to_string()]);
    let rows = csv_rows(&stdout(&o));
    let mut res: Vec<f64> = rows.iter().filter(|r| r[5] == "false").map(|r| r[0].parse().unwrap()).collect();
    res.sort_by(f64::total_cmp);
    assert_eq!(res.len(), 2);
    assert!((res[0] + 1.618034).abs() < 1e-6 && (res[1] - 0.618034).abs() < 1e-6);
    assert!(rows.iter().filter(|r| r[6] == "true").count() == 2);
}

#[test]
fn roots_come_in_conjugate_pairs() {
    let o = conevol(&["roots", "--family", "c2n3", "--n", "2", "--alpha", "1.0"]);
    let rows = csv_rows(&stdout(&o));
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r[0].parse().unwrap(), r[1].parse().unwrap())).collect();
    for (re, im) in &pts {
        assert!(pts.iter().any(|(r2, i2)| (r2 - re).abs() < 1e-8 && (i2 + im).abs() < 1e-8));
    }
    assert_eq!(rows.iter().filter(|r| r[6] == "true").count(), 1);
}

#[test]
fn verify_default_passes_and_injection_fails() {
    let o = conevol(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let one = conevol(&["verify", "--suite", "lemma-cd", "--n", "3"]);
    assert_eq!(one.status.code(), Some(0));
    let text = stdout(&one);
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("lemma-cd"));
    assert_eq!(conevol(&["verify", "--tol-root", "1e-20"]).status.code(), Some(3));
}
