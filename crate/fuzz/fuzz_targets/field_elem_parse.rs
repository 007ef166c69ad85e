#![no_main]

use hallalg::gf::FieldElem;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(x) = FieldElem::parse(s) {
        assert!(x.code() < x.spec().order());
        assert_eq!(FieldElem::parse(&x.to_string()).expect("display output must parse"), x);
    }
});
