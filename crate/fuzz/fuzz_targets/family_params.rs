#![no_main]

use libfuzzer_sys::fuzz_target;
use treealpha::generators::{make_family, FamilyParams};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = s.parse::<FamilyParams>() {
        // Bound the work: family sizes grow with the parameters.
        if p.params.iter().all(|&x| x <= 16) && p.params.len() <= 8 {
            let _ = make_family(&p);
        }
    }
});
