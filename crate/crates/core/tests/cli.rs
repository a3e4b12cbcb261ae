use std::process::{Command, Output};

fn gstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gstab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn ledger_obata_report() {
    let o = gstab(&[
        "report",
        "--family",
        "ledger-obata",
        "--m",
        "11",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "unstable_certified");
    assert_eq!(v["coindex_lower_bound"], 9);
    assert_eq!(v["rho"], "7/24");
    assert_eq!(v["spectrum_exact"].as_array().unwrap().len(), 11);
    assert!(v["checks"].as_array().unwrap().is_empty());
}

#[test]
fn g2_report_is_stable() {
    let o = gstab(&[
        "report",
        "--family",
        "diagonal",
        "--d1",
        "6",
        "--d2",
        "8",
        "--c",
        "3/4",
        "--multiplicity-free",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "stable_certified");
    assert_eq!(v["lambda_min_bound"], "7/12");
    assert_eq!(v["matrix"]["metric"], "g0");
}

#[test]
fn nikonorov_gate_is_inconclusive() {
    let o = gstab(&[
        "report",
        "--family",
        "nikonorov",
        "--m",
        "4",
        "--n",
        "1",
        "--c",
        "1/2",
        "--dim-h",
        "3",
        "--dim-q",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("verdict:             inconclusive"));
    assert!(out.contains("witness requires n+4 <= m"));
}

#[test]
fn report_from_spec_file() {
    let path = std::env::temp_dir().join(format!("gstab-spec-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{"family": "diagonal", "d1": 7, "d2": 3, "c": "2/3"}"#,
    )
    .unwrap();
    let o = gstab(&[
        "report",
        "--spec",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["lambda_min_bound"], "10/21");
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "report", "--family", "diagonal", "--d1", "7", "--d2", "3", "--c", "2/3", "--format",
        "json",
    ];
    assert_eq!(gstab(&args).stdout, gstab(&args).stdout);
}

#[test]
fn ledger_obata_sweep_csv() {
    let o = gstab(&[
        "sweep",
        "--family",
        "ledger-obata",
        "--m",
        "2..50",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        [
            "family",
            "params",
            "rho",
            "lambda_min_bound",
            "verdict",
            "coindex_lower_bound"
        ]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 49);
    for (k, row) in rows.iter().enumerate() {
        let m = k + 2;
        let want = if m <= 10 { m - 1 } else { m - 2 };
        assert_eq!(row[5].parse::<usize>().unwrap(), want, "m={m}");
    }
}

#[test]
fn csv_and_json_agree() {
    let args = ["sweep", "--family", "ledger-obata", "--m", "2..6"];
    let j = json(&gstab(&[&args[..], &["--format", "json"]].concat()));
    let c = gstab(&[&args[..], &["--format", "csv"]].concat());
    let mut rdr = csv::Reader::from_reader(c.stdout.as_slice());
    for (row, doc) in rdr.records().map(Result::unwrap).zip(j.as_array().unwrap()) {
        assert_eq!(row[2], *doc["rho"].as_str().unwrap());
        assert_eq!(row[3], *doc["lambda_min_bound"].as_str().unwrap());
        assert_eq!(row[4], *doc["verdict"].as_str().unwrap());
        assert_eq!(
            row[5].parse::<u64>().unwrap(),
            doc["coindex_lower_bound"].as_u64().unwrap()
        );
    }
}

#[test]
fn sp_series_sweep() {
    let o = gstab(&[
        "sweep",
        "--family",
        "diagonal",
        "--sp-series",
        "2..10",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 9);
    for (k, row) in rows.iter().enumerate() {
        let n = k as i64 + 2;
        let (p, q) = (n * (2 * n + 1), (4 * n - 1) * (n + 1));
        let want = gstab::prelude::rat(p, q).to_string();
        assert_eq!(&row[3], want.as_str());
        assert_eq!(&row[4], "unstable_certified");
    }
}

#[test]
fn invalid_input_exits_1() {
    for args in [
        &["sweep", "--family", "ledger-obata", "--m", "5..2"][..],
        &["report", "--family", "ledger-obata", "--m", "1"],
        &[
            "report", "--family", "diagonal", "--d1", "6", "--d2", "8", "--c", "0.75",
        ],
        &["report", "--family", "ledger-obata"],
        &["report", "--spec", "/nonexistent/spec.json"],
        &["frobnicate"],
    ] {
        let o = gstab(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn verify_passes() {
    let o = gstab(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let passes = out.lines().filter(|l| l.starts_with("PASS ")).count();
    assert!(passes >= 12, "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_json() {
    let v = json(&gstab(&["verify", "--json"]));
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 12);
    assert!(checks
        .iter()
        .all(|c| c["pass"] == true && c["name"].is_string()));
}

#[test]
fn injected_sign_error_is_caught() {
    let o = gstab(&["verify", "--inject-fault", "sign-112"]);
    assert_eq!(o.status.code(), Some(2));
    let failing: Vec<String> = stdout(&o)
        .lines()
        .filter(|l| l.starts_with("FAIL "))
        .map(String::from)
        .collect();
    assert_eq!(failing.len(), 1, "{failing:?}");
    assert!(failing[0].starts_with("FAIL diagonal-einstein"));
}

#[test]
fn oracle_reports_no_mismatches() {
    let o = gstab(&["oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.matches(", 0 mismatches").count(), 3);
    assert!(out.contains("[4,4,4] = 27/20"));
}
