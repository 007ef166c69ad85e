#![no_main]

use hallalg::repengine::DimVector;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(d) = DimVector::parse(s) {
        assert_eq!(DimVector::parse(&d.to_string()).expect("display output must parse"), d);
    }
});
