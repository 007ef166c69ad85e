#![no_main]

use hallalg::coeff::RationalFunctionV;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 256 {
        return;
    }
    if let Ok(f) = RationalFunctionV::parse(s) {
        let again = RationalFunctionV::parse(&f.to_string()).expect("display output must parse");
        assert_eq!(again, f);
    }
});
