//! Sweep configuration: JSON file, then command-line overrides.

use std::f64::consts::PI;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::CliError;

/// Inclusive grid `min, min + step, …, ≤ max`. In JSON either
/// `{"min": .., "max": .., "step": ..}` or a bare number for a single point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "RangeRepr")]
pub struct Range {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RangeRepr {
    Point(f64),
    Span(Span),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Span {
    min: f64,
    max: f64,
    step: f64,
}

impl From<RangeRepr> for Range {
    fn from(r: RangeRepr) -> Self {
        match r {
            RangeRepr::Point(x) => Range::point(x),
            RangeRepr::Span(Span { min, max, step }) => Range { min, max, step },
        }
    }
}

impl Range {
    pub fn point(x: f64) -> Self {
        Self { min: x, max: x, step: 1.0 }
    }

    pub fn validate(&self, name: &str) -> Result<(), CliError> {
        if !(self.min.is_finite() && self.max.is_finite() && self.step.is_finite()) {
            return Err(CliError::Config(format!("{name}: range must be finite")));
        }
        if self.step <= 0.0 {
            return Err(CliError::Config(format!("{name}: step must be > 0")));
        }
        if self.min > self.max {
            return Err(CliError::Config(format!("{name}: min > max")));
        }
        if (self.max - self.min) / self.step > MAX_AXIS_POINTS as f64 {
            return Err(CliError::Config(format!("{name}: more than {MAX_AXIS_POINTS} grid points")));
        }
        Ok(())
    }

    /// Grid values; each is computed as `min + k·step` so no error accumulates.
    pub fn values(&self) -> Vec<f64> {
        let n = ((self.max - self.min) / self.step + 1e-9).floor() as usize + 1;
        (0..n).map(|k| self.min + k as f64 * self.step).collect()
    }
}

/// Guard against accidental multi-billion-point grids.
pub const MAX_AXIS_POINTS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepConfig {
    pub a: Range,
    pub b: Range,
    pub alpha1: Range,
    pub alpha2: Range,
    pub beta1: Range,
    pub beta2: Range,
    pub count: usize,
    pub seed: u64,
    pub p_over_m_max: f64,
    pub m: f64,
    pub tolerance: f64,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            a: Range::point(1.0),
            b: Range::point(2.0),
            alpha1: Range::point(PI / 2.0),
            alpha2: Range::point(0.0),
            beta1: Range::point(0.6),
            beta2: Range::point(0.8),
            count: 20,
            seed: 42,
            p_over_m_max: 10.0,
            m: 1.0,
            tolerance: 1e-10,
            format: Format::Json,
            out: None,
        }
    }
}

impl SweepConfig {
    pub fn from_json_str(text: &str) -> Result<Self, CliError> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        // derived Deserialize would also take a positional array
        if !value.is_object() {
            return Err(CliError::Config("config must be a JSON object".into()));
        }
        let cfg: Self = serde_json::from_value(value).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        for (name, r) in self.ranges() {
            r.validate(name)?;
        }
        if self.count == 0 {
            return Err(CliError::Config("count must be >= 1".into()));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(CliError::Config("tolerance must be > 0".into()));
        }
        if !(self.m.is_finite() && self.m > 0.0) {
            return Err(CliError::Config("m must be > 0".into()));
        }
        if !(self.p_over_m_max.is_finite()
            && self.p_over_m_max > spinlab::sampling::MIN_MOMENTUM_RATIO
            && self.p_over_m_max <= spinlab::kinematics::MAX_MOMENTUM_RATIO)
        {
            return Err(CliError::Config("p_over_m_max must lie in (1e-3, 1e6]".into()));
        }
        Ok(())
    }

    pub fn ranges(&self) -> [(&'static str, &Range); 6] {
        [
            ("a", &self.a),
            ("b", &self.b),
            ("alpha1", &self.alpha1),
            ("alpha2", &self.alpha2),
            ("beta1", &self.beta1),
            ("beta2", &self.beta2),
        ]
    }

    /// Cartesian product in `a, b, alpha1, alpha2, beta1, beta2` order,
    /// last axis fastest.
    pub fn grid(&self) -> Vec<GridPoint> {
        let axes: Vec<Vec<f64>> = self.ranges().iter().map(|(_, r)| r.values()).collect();
        let mut out = Vec::new();
        for &a in &axes[0] {
            for &b in &axes[1] {
                for &alpha1 in &axes[2] {
                    for &alpha2 in &axes[3] {
                        for &beta1 in &axes[4] {
                            for &beta2 in &axes[5] {
                                out.push(GridPoint { a, b, alpha1, alpha2, beta1, beta2, m: self.m });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn grid_size(&self) -> usize {
        self.ranges().iter().map(|(_, r)| r.values().len()).product()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub a: f64,
    pub b: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub m: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_values_hit_the_endpoint() {
        let r = Range { min: 0.0, max: 2.0, step: 0.1 };
        let v = r.values();
        assert_eq!(v.len(), 21);
        assert!((v[20] - 2.0).abs() < 1e-12);
        assert_eq!(Range::point(3.0).values(), vec![3.0]);
    }

    #[test]
    fn partial_config_keeps_defaults() {
        let cfg = SweepConfig::from_json_str(r#"{"seed": 7, "b": {"min": 0, "max": 3, "step": 1}}"#).unwrap();
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.b.values(), vec![0.0, 1.0, 2.0, 3.0]);
        assert_eq!(cfg.count, 20);
        let point = SweepConfig::from_json_str(r#"{"a": -1.5}"#).unwrap();
        assert_eq!(point.a, Range::point(-1.5));
    }

    #[test]
    fn bad_configs() {
        for text in [
            r#"{"count": 0}"#,
            r#"{"tolerance": -1}"#,
            r#"{"a": {"min": 0, "max": 1, "step": 0}}"#,
            r#"{"a": {"min": 2, "max": 1, "step": 1}}"#,
            r#"{"unknown": 1}"#,
            r#"{"format": "xml"}"#,
            "[1, 2]",
        ] {
            assert!(SweepConfig::from_json_str(text).is_err(), "{text}");
        }
    }
}
