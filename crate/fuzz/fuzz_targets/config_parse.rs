#![no_main]

use libfuzzer_sys::fuzz_target;
use spinlab_cli::SweepConfig;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cfg) = SweepConfig::from_json_str(text) {
        // validated configs must size their grid without overflow
        let _ = cfg.grid_size();
    }
});
