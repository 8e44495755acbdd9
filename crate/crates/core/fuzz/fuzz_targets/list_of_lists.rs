#![no_main]

use libfuzzer_sys::fuzz_target;
use luvgraph::args::parse_list_of_lists;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(lists) = parse_list_of_lists(text) {
        assert!(lists.iter().all(|l| !l.is_empty()));
    }
});
