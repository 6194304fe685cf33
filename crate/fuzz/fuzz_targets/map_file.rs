#![no_main]
//! Map-file parser fuzzer: arbitrary bytes through the JSON schema.
//! Accepted documents must survive a save/load round trip unchanged.

use igwo::pathplan::io::{map_from_json, map_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(map) = map_from_json(text) {
        let canonical = map_to_json(&map);
        let reparsed = map_from_json(&canonical).expect("canonical form parses");
        assert_eq!(reparsed, map);
        assert_eq!(map_to_json(&reparsed), canonical);
    }
});
