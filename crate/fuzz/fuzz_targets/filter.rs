#![no_main]

use libfuzzer_sys::fuzz_target;
use treealpha::patterns::ClassFilter;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = s.parse::<ClassFilter>() {
        let again: ClassFilter = f.to_string().parse().expect("display output parses");
        assert_eq!(again.to_string(), f.to_string());
    }
});
