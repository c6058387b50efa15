#![no_main]

use libfuzzer_sys::fuzz_target;
use treealpha::patterns::PatternSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = s.parse::<PatternSpec>() {
        let _ = p.to_graph();
        let _ = p.to_string().parse::<PatternSpec>();
    }
});
