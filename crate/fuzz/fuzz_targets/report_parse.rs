#![no_main]

use libfuzzer_sys::fuzz_target;
use spinlab_cli::report::parse_ndjson;
use spinlab_cli::ReportRecord;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(records) = parse_ndjson(text) {
        for r in records {
            let again = ReportRecord::from_json_line(&r.to_json_line()).expect("re-parse");
            assert_eq!(again, r);
        }
    }
});
