#![no_main]

use hallalg::primitives::Family;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = Family::parse(s) {
        assert_eq!(f.name(), s);
    }
});
