#![no_main]

use libfuzzer_sys::fuzz_target;
use twred::graph::{parse_pair_list, parse_vertex_list};

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    if let Ok(s) = std::str::from_utf8(rest) {
        let _ = parse_pair_list(s, n as usize);
        let _ = parse_vertex_list(s, n as usize);
    }
});
