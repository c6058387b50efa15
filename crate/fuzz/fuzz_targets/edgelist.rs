#![no_main]

use libfuzzer_sys::fuzz_target;
use treealpha::io::edgelist;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = edgelist::parse(s) {
        assert_eq!(edgelist::parse(&edgelist::write(&g)).unwrap(), g);
    }
});
