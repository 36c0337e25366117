#![no_main]

use clap::Parser;
use libfuzzer_sys::fuzz_target;
use spinlab_cli::{Cli, Command};

// argv is NUL-separated; config files are not read
fuzz_target!(|data: &[u8]| {
    let args = data.split(|&b| b == 0).map(|s| String::from_utf8_lossy(s).into_owned());
    let Ok(cli) = Cli::try_parse_from(std::iter::once("spinlab".to_string()).chain(args)) else { return };
    let (Command::Verify(common) | Command::Sweep(common) | Command::Dispersion(common)) = cli.command;
    if common.config.is_none() {
        let _ = common.resolve();
    }
});
