#![no_main]

use libfuzzer_sys::fuzz_target;
use treealpha::io::read_graph_lines;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    for g in read_graph_lines(s) {
        let _ = g;
    }
});
