use std::f64::consts::PI;
use std::fs;

use spinlab_cli::report::{parse_ndjson, CSV_HEADER};
use spinlab_cli::{run, ReportRecord, Verdict, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

fn spinlab(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("spinlab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn records(text: &str) -> Vec<ReportRecord> {
    parse_ndjson(text).expect("valid NDJSON")
}

fn config_file(json: &str) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    fs::write(f.path(), json).unwrap();
    f
}

#[test]
fn verify_defaults_pass() {
    let (code, out, _) = spinlab(&["verify"]);
    assert_eq!(code, EXIT_PASS);
    let recs = records(&out);
    assert!(recs.len() > 20);
    assert!(recs.iter().all(|r| r.verdict != Verdict::Fail), "{out}");
    let fp = &recs[0].fingerprint;
    assert!(fp.starts_with("spinlab-") && recs.iter().all(|r| &r.fingerprint == fp));
}

#[test]
fn verify_off_branch_fails() {
    let (code, out, _) = spinlab(&["verify", "--b", "2.5"]);
    assert_eq!(code, EXIT_FAIL);
    let failed: Vec<_> = records(&out).into_iter().filter(|r| r.verdict == Verdict::Fail).map(|r| r.check).collect();
    assert!(failed.iter().any(|c| c.starts_with("lambda_equations")), "{failed:?}");
    assert!(failed.iter().any(|c| c == "compatibility"), "{failed:?}");
    // the algebra does not depend on the couplings
    assert!(!failed.iter().any(|c| c == "clifford" || c == "boost_identity"));
}

#[test]
fn verify_is_deterministic_for_a_seed() {
    let a = spinlab(&["verify", "--seed", "7", "--count", "5"]);
    let b = spinlab(&["verify", "--seed", "7", "--count", "5"]);
    assert_eq!(a, b);
}

#[test]
fn csv_output_has_the_record_header() {
    let (code, out, _) = spinlab(&["verify", "--format", "csv", "--count", "3"]);
    assert_eq!(code, EXIT_PASS);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, CSV_HEADER);
    let rows: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), records(&spinlab(&["verify", "--count", "3"]).1).len());
    assert!(rows.iter().all(|r| serde_json::from_str::<serde_json::Value>(&r[1]).unwrap().is_object()));
}

#[test]
fn ndjson_lines_round_trip() {
    let (_, out, _) = spinlab(&["verify", "--count", "3"]);
    for line in out.lines() {
        let rec = ReportRecord::from_json_line(line).unwrap();
        assert_eq!(rec.to_json_line(), line);
    }
}

#[test]
fn out_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.ndjson");
    let (code, out, _) = spinlab(&["verify", "--count", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.is_empty());
    let written = fs::read_to_string(&path).unwrap();
    assert_eq!(written, spinlab(&["verify", "--count", "3"]).1);
}

#[test]
fn usage_and_config_errors_exit_two() {
    assert_eq!(spinlab(&["verify", "--config", "/nonexistent/x.json"]).0, EXIT_USAGE);
    assert_eq!(spinlab(&["verify", "--format", "xml"]).0, EXIT_USAGE);
    assert_eq!(spinlab(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(spinlab(&["verify", "--m", "-1"]).0, EXIT_USAGE);
    assert_eq!(spinlab(&["verify", "--a", "0"]).0, EXIT_USAGE);
    assert_eq!(spinlab(&["dispersion", "--a", "0"]).0, EXIT_USAGE);
    assert_eq!(spinlab(&["verify", "--out", "/nonexistent/dir/out.ndjson"]).0, EXIT_USAGE);
    let bad = config_file(r#"{"b": 2, "colour": "red"}"#);
    let (code, _, err) = spinlab(&["verify", "--config", bad.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
    let malformed = config_file("{\"b\": ");
    assert_eq!(spinlab(&["sweep", "--config", malformed.path().to_str().unwrap()]).0, EXIT_USAGE);
}

#[test]
fn flags_override_config() {
    let cfg = config_file(r#"{"b": 2.5}"#);
    let path = cfg.path().to_str().unwrap();
    assert_eq!(spinlab(&["verify", "--config", path]).0, EXIT_FAIL);
    assert_eq!(spinlab(&["verify", "--config", path, "--b", "2"]).0, EXIT_PASS);
}

#[test]
fn dispersion_reports_the_mass_shell() {
    let (code, out, _) = spinlab(&["dispersion", "--a", "1", "--b", "2", "--m", "1"]);
    assert_eq!(code, EXIT_PASS);
    let recs = records(&out);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].check, "dispersion_root");
    assert!((recs[0].params["p2"].as_f64().unwrap() - 1.0).abs() < 1e-10);
    assert_eq!(recs[0].params["multiplicity"], 4);

    let (code, out, _) = spinlab(&["dispersion", "--a", "1", "--b", "1", "--m", "1"]);
    assert_eq!(code, EXIT_PASS);
    let recs = records(&out);
    assert!(recs.iter().all(|r| r.verdict == Verdict::Degenerate));
    assert_eq!(recs[0].params["massless_degenerate"], true);
}

#[test]
fn generalized_dispersion_uses_the_couplings() {
    let (code, out, _) = spinlab(&["dispersion", "--beta1", "1.2", "--beta2", "0.5", "--alpha2", "0"]);
    assert_eq!(code, EXIT_PASS);
    let recs = records(&out);
    assert!((recs[0].params["p2"].as_f64().unwrap() - 1.69).abs() < 1e-10);

    let (code, out, _) = spinlab(&["dispersion", "--beta1", "0.6", "--beta2", "0.8", "--alpha2", "1.0"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(records(&out).iter().any(|r| r.check == "dispersion_complex_root"));
}

fn sweep(json: &str) -> (i32, Vec<ReportRecord>) {
    let cfg = config_file(json);
    let (code, out, err) = spinlab(&["sweep", "--config", cfg.path().to_str().unwrap()]);
    assert!(code != EXIT_USAGE, "{err}");
    (code, records(&out))
}

#[test]
fn sweep_single_point_gives_one_row_and_a_summary() {
    let (code, recs) = sweep(r#"{"a": 1, "b": 2, "alpha1": 0.3, "alpha2": 0, "beta1": 0.6, "beta2": 0.8}"#);
    assert_eq!(code, EXIT_PASS);
    let checks: Vec<&str> = recs.iter().map(|r| r.check.as_str()).collect();
    assert_eq!(checks, ["sweep_point", "sweep_summary"]);
    assert_eq!(recs[0].params["consistent"], true);
}

#[test]
fn sweep_verdicts_do_not_depend_on_alpha1() {
    let grid = |alpha1: f64| {
        format!(
            r#"{{"b": 2, "alpha1": {alpha1}, "alpha2": {{"min": 0, "max": {PI}, "step": {}}},
               "beta1": {{"min": 0, "max": 1.5, "step": 0.1}}, "beta2": {{"min": 0, "max": 1.5, "step": 0.1}}}}"#,
            PI / 2.0
        )
    };
    let columns: Vec<Vec<(Verdict, serde_json::Value)>> = [0.0, 0.7, PI / 2.0, 2.9]
        .iter()
        .map(|&a1| {
            sweep(&grid(a1))
                .1
                .into_iter()
                .filter(|r| r.check == "sweep_point")
                .map(|r| (r.verdict, r.params["consistent"].clone()))
                .collect()
        })
        .collect();
    assert_eq!(columns[0].len(), 3 * 16 * 16);
    assert!(columns.iter().all(|c| c == &columns[0]));
}

#[test]
fn sweep_finds_the_circle() {
    let (code, recs) = sweep(
        r#"{"b": 3, "alpha2": 0, "beta1": {"min": 0, "max": 2.5, "step": 0.1},
           "beta2": {"min": 0, "max": 2.5, "step": 0.1}}"#,
    );
    assert_eq!(code, EXIT_PASS);
    let on: Vec<(f64, f64)> = recs
        .iter()
        .filter(|r| r.check == "sweep_point" && r.params["consistent"] == true)
        .map(|r| (r.params["beta1"].as_f64().unwrap(), r.params["beta2"].as_f64().unwrap()))
        .collect();
    assert!(!on.is_empty());
    assert!(on.iter().all(|(x, y)| (x * x + y * y - 4.0).abs() < 1e-8), "{on:?}");
    let summary = recs.iter().find(|r| r.check == "sweep_summary").unwrap();
    assert_eq!(summary.verdict, Verdict::Pass);
    assert!((summary.params["fitted_radius_sq"].as_f64().unwrap() - 4.0).abs() < 1e-8);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = spinlab(&["--help"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("verify") && out.contains("sweep") && out.contains("dispersion"));
}
