#![no_main]
//! Report-CSV parser fuzzer. Accepted documents must re-emit and
//! re-parse to the same rows.

use igwo::experiment::{emit_report, parse_report_csv, ReportFormat};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(rows) = parse_report_csv(text) {
        if rows.is_empty() {
            return;
        }
        // NaN fields break row identity; emission still must not panic.
        let Ok(emitted) = emit_report(&rows, ReportFormat::Csv) else {
            return;
        };
        let _ = emit_report(&rows, ReportFormat::TextTable);
        if rows
            .iter()
            .all(|r| [r.avg, r.std, r.best, r.worst].iter().all(|v| !v.is_nan()))
        {
            let reparsed = parse_report_csv(&emitted).expect("emitted CSV parses");
            let re_emitted = emit_report(&reparsed, ReportFormat::Csv).expect("rows re-emit");
            assert_eq!(re_emitted, emitted);
        }
    }
});
