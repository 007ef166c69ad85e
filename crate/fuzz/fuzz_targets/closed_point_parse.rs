#![no_main]

use hallalg::gf::Gf;
use hallalg::repengine::kronecker::ClosedPoint;
use libfuzzer_sys::fuzz_target;

// First byte picks the field.
fuzz_target!(|data: &[u8]| {
    let Some((&k, rest)) = data.split_first() else { return };
    let q = [2u64, 3, 4, 5, 7, 8, 9][k as usize % 7];
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let gf = Gf::new(q).unwrap();
    if let Ok(p) = ClosedPoint::parse(&gf, s) {
        assert_eq!(ClosedPoint::parse(&gf, &p.to_string()).expect("display output must parse"), p);
    }
});
