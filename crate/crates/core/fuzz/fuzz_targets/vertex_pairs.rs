#![no_main]

use libfuzzer_sys::fuzz_target;
use luvgraph::args::parse_vertex_pairs;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(pairs) = parse_vertex_pairs(text) {
        let joined = pairs
            .iter()
            .map(|(a, b)| format!("{a}={b}"))
            .collect::<Vec<_>>()
            .join(",");
        assert_eq!(parse_vertex_pairs(&joined).unwrap(), pairs);
    }
});
