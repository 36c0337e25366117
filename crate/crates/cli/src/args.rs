use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{Format, Range, SweepConfig};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "spinlab", version, about = "Spinor-algebra verification, sweeps and dispersion scans")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every check at each configured parameter point
    Verify(CommonArgs),
    /// Grid the generalized equation: compatibility and dispersion per point
    Sweep(CommonArgs),
    /// List the p² zeros of the operator determinant
    Dispersion(CommonArgs),
}

impl Command {
    pub fn args(&self) -> &CommonArgs {
        match self {
            Command::Verify(a) | Command::Sweep(a) | Command::Dispersion(a) => a,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Default, Args)]
pub struct CommonArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha2: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta2: Option<f64>,
    #[arg(long)]
    pub m: Option<f64>,
    /// Residual tolerance for a pass verdict
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Random momenta per check
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON file with SweepConfig fields; flags override it
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Effective configuration plus whether the generalized couplings were
/// given explicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct Resolved {
    pub config: SweepConfig,
    pub generalized: bool,
}

impl CommonArgs {
    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let (mut cfg, mut generalized) = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
                let cfg = SweepConfig::from_json_str(&text)?;
                let raw: serde_json::Value = serde_json::from_str(&text).expect("validated above");
                let keyed = ["beta1", "beta2"].iter().any(|k| raw.get(k).is_some());
                (cfg, keyed)
            }
            None => (SweepConfig::default(), false),
        };
        let points = [
            (self.a, &mut cfg.a),
            (self.b, &mut cfg.b),
            (self.alpha1, &mut cfg.alpha1),
            (self.alpha2, &mut cfg.alpha2),
            (self.beta1, &mut cfg.beta1),
            (self.beta2, &mut cfg.beta2),
        ];
        for (flag, range) in points {
            if let Some(x) = flag {
                *range = Range::point(x);
            }
        }
        generalized |= self.beta1.is_some() || self.beta2.is_some();
        if let Some(m) = self.m {
            cfg.m = m;
        }
        if let Some(t) = self.tol {
            cfg.tolerance = t;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(c) = self.count {
            cfg.count = c;
        }
        if let Some(f) = self.format {
            cfg.format = match f {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
            };
        }
        if let Some(out) = &self.out {
            cfg.out = Some(out.clone());
        }
        cfg.validate()?;
        Ok(Resolved { config: cfg, generalized })
    }
}
