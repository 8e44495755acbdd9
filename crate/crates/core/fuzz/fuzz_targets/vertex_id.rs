#![no_main]

use libfuzzer_sys::fuzz_target;
use luvgraph::VertexId;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = text.parse::<VertexId>() {
        assert!(v.component >= 1 && v.index >= 1);
        assert_eq!(v.to_string().parse::<VertexId>().unwrap(), v);
    }
});
