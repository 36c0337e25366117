//! Report records, their NDJSON and CSV encodings, and the convention fingerprint.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use spinlab::CONVENTION;

use crate::config::Format;
use crate::CliError;

pub const CSV_HEADER: [&str; 5] = ["check", "params", "residual", "verdict", "fingerprint"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Degenerate,
}

impl Verdict {
    pub fn from_residual(residual: f64, tol: f64) -> Self {
        if residual < tol {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Degenerate => "degenerate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportRecord {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub residual: f64,
    pub verdict: Verdict,
    pub fingerprint: String,
}

impl ReportRecord {
    /// Verdict from `residual < tol`. A non-finite residual is recorded as
    /// `f64::MAX` and fails.
    pub fn new(check: &str, params: BTreeMap<String, Value>, residual: f64, tol: f64) -> Self {
        let residual = if residual.is_finite() { residual } else { f64::MAX };
        Self {
            check: check.to_string(),
            params,
            residual,
            verdict: Verdict::from_residual(residual, tol),
            fingerprint: fingerprint(),
        }
    }

    pub fn degenerate(mut self) -> Self {
        self.verdict = Verdict::Degenerate;
        self
    }

    pub fn from_json_line(line: &str) -> Result<Self, CliError> {
        let rec: Self = serde_json::from_str(line).map_err(|e| CliError::Report(e.to_string()))?;
        if !rec.residual.is_finite() || rec.residual < 0.0 {
            return Err(CliError::Report("residual must be a finite non-negative number".into()));
        }
        Ok(rec)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

/// Parses a newline-delimited stream, skipping blank lines.
pub fn parse_ndjson(text: &str) -> Result<Vec<ReportRecord>, CliError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(ReportRecord::from_json_line)
        .collect()
}

/// Canonical `key=value;` rendering of the basis conventions.
pub fn convention_text() -> String {
    CONVENTION
        .entries()
        .iter()
        .map(|(k, v)| format!("{k}={v};"))
        .collect()
}

/// `spinlab-<first 16 hex digits of SHA-256(convention_text)>`
pub fn fingerprint() -> String {
    let digest = Sha256::digest(convention_text().as_bytes());
    let hex: String = digest.iter().take(8).map(|b| format!("{b:02x}")).collect();
    format!("spinlab-{hex}")
}

pub fn write_records<W: Write + ?Sized>(out: &mut W, records: &[ReportRecord], format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.to_json_line()).map_err(CliError::io)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER).map_err(|e| CliError::Output(e.to_string()))?;
            for r in records {
                let params = serde_json::to_string(&r.params).expect("params serialize");
                w.write_record([
                    r.check.as_str(),
                    params.as_str(),
                    &format!("{:e}", r.residual),
                    r.verdict.as_str(),
                    r.fingerprint.as_str(),
                ])
                .map_err(|e| CliError::Output(e.to_string()))?;
            }
            w.flush().map_err(CliError::io)?;
        }
    }
    Ok(())
}

/// Shorthand for building `params` maps.
#[macro_export]
macro_rules! params {
    ($($k:expr => $v:expr),* $(,)?) => {{
        let mut m = ::std::collections::BTreeMap::<String, ::serde_json::Value>::new();
        $( m.insert($k.to_string(), ::serde_json::json!($v)); )*
        m
    }};
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let r = ReportRecord::new("clifford", params!("a" => 1.0, "kernel_dim" => 2), 1e-16, 1e-10);
        assert_eq!(r.verdict, Verdict::Pass);
        let back = ReportRecord::from_json_line(&r.to_json_line()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn fingerprint_is_stable() {
        assert_eq!(fingerprint(), fingerprint());
        assert!(fingerprint().starts_with("spinlab-"));
        assert_eq!(fingerprint().len(), "spinlab-".len() + 16);
    }

    #[test]
    fn non_finite_residual_fails() {
        let r = ReportRecord::new("x", BTreeMap::new(), f64::NAN, 1.0);
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(ReportRecord::from_json_line(&r.to_json_line()).unwrap().residual, f64::MAX);
    }

    #[test]
    fn csv_header() {
        let mut buf = Vec::new();
        let r = ReportRecord::new("x", params!("a" => 1.0), 0.5, 1.0);
        write_records(&mut buf, &[r], Format::Csv).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("check,params,residual,verdict,fingerprint\n"));
        assert!(text.contains("\"{\"\"a\"\":1.0}\""));
    }
}
