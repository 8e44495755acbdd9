#![no_main]

use libfuzzer_sys::fuzz_target;
use luvgraph::document::{load, save};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(doc) = load(text) {
        let again = load(&save(&doc)).expect("saved documents reload");
        assert_eq!(again, doc);
        if let Ok(Some(f)) = doc.edge_labeling() {
            let _ = luvgraph::verify_local_antimagic(&doc.graph().unwrap(), &f);
        }
    }
});
