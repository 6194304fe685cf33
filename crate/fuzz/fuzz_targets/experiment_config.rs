#![no_main]
//! Experiment-config parser fuzzer: arbitrary TOML through the config
//! schema. Accepted configs must re-serialize and re-parse cleanly.

use igwo::experiment::parse_config_str;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(config) = parse_config_str(text) {
        // Function names are validated lazily; exercise that path too.
        let _ = config.selected_functions();
        let serialized = toml::to_string(&config).expect("config serializes");
        let reparsed = parse_config_str(&serialized).expect("canonical form parses");
        assert_eq!(reparsed.base_seed, config.base_seed);
        assert_eq!(reparsed.runs, config.runs);
        assert_eq!(reparsed.algorithms, config.algorithms);
    }
});
