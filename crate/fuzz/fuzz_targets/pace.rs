#![no_main]

use libfuzzer_sys::fuzz_target;
use treealpha::io::pace;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(td) = pace::parse(s) {
        let text = pace::write(&td);
        assert_eq!(pace::write(&pace::parse(&text).unwrap()), text);
    }
});
