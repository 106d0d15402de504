#![no_main]

use libfuzzer_sys::fuzz_target;
use twred::graph::{parse_graph, write_graph};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_graph(s) {
        let again = parse_graph(&write_graph(&g)).expect("written graph parses");
        assert_eq!(g, again);
    }
});
