#![no_main]

use hallalg::coeff::SqrtExt;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(x) = SqrtExt::parse(s) {
        assert_eq!(SqrtExt::parse(&x.to_string()).expect("display output must parse"), x);
    }
});
