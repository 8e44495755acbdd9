#![no_main]

use libfuzzer_sys::fuzz_target;
use luvgraph::args::parse_u32_list;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(list) = parse_u32_list(text) {
        let joined = list
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        assert_eq!(parse_u32_list(&joined).unwrap(), list);
    }
});
