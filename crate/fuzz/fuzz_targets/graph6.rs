#![no_main]

use libfuzzer_sys::fuzz_target;
use treealpha::io::graph6;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = graph6::decode(s) {
        // Accepted strings are canonical encodings.
        let enc = graph6::encode(&g);
        assert_eq!(graph6::decode(&enc).unwrap(), g);
    }
});
