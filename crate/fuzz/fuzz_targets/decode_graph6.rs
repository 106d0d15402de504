#![no_main]

use libfuzzer_sys::fuzz_target;
use twred::graph::{decode_graph6, encode_graph6};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(g) = decode_graph6(s) {
            // whatever decodes must re-encode to something that decodes the same
            let again = decode_graph6(&encode_graph6(&g)).expect("re-encoded graph6");
            assert_eq!(g, again);
        }
    }
});
