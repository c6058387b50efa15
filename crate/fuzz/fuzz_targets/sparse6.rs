#![no_main]

use libfuzzer_sys::fuzz_target;
use treealpha::io::graph6;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = graph6::decode_sparse(s) {
        assert_eq!(graph6::decode_sparse(&graph6::encode_sparse(&g)).unwrap(), g);
    }
});
