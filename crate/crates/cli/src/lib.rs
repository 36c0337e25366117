//! Command-line driver for `spinlab`: `verify`, `sweep` and `dispersion`
//! write newline-delimited JSON (or CSV) report records.
//!
//! Exit status is 0 when no record fails, 1 when any does, and 2 for usage,
//! configuration or output errors.

pub mod args;
pub mod commands;
pub mod config;
pub mod report;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};

use clap::Parser;

pub use args::{Cli, Command, CommonArgs};
pub use config::{Format, Range, SweepConfig};
pub use report::{ReportRecord, Verdict};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
    #[error("report: {0}")]
    Report(String),
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    pub(crate) fn io(e: std::io::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

/// Exit status for a finished report.
pub fn exit_status(records: &[ReportRecord]) -> i32 {
    if records.iter().any(|r| r.verdict == Verdict::Fail) {
        EXIT_FAIL
    } else {
        EXIT_PASS
    }
}

/// Parses `args` (program name first), runs the command and returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_PASS
            };
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let resolved = cli.command.args().resolve()?;
    let cfg = &resolved.config;
    let records = match &cli.command {
        Command::Verify(_) => commands::verify(cfg)?,
        Command::Sweep(_) => commands::sweep(cfg)?,
        Command::Dispersion(_) => commands::dispersion(cfg, resolved.generalized)?,
    };
    match &cfg.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            report::write_records(&mut w, &records, cfg.format)?;
            w.flush().map_err(CliError::io)?;
        }
        None => report::write_records(stdout, &records, cfg.format)?,
    }
    Ok(exit_status(&records))
}
