#![no_main]

use hallalg::repengine::Multisegment;
use libfuzzer_sys::fuzz_target;

// First byte picks the cycle length.
fuzz_target!(|data: &[u8]| {
    let Some((&r, rest)) = data.split_first() else { return };
    let r = 1 + (r % 4) as usize;
    let Ok(s) = std::str::from_utf8(rest) else { return };
    if let Ok(m) = Multisegment::parse(s, r) {
        assert_eq!(m.r(), r);
        assert_eq!(m.grade().total(), m.total_dim());
        assert_eq!(Multisegment::parse(&m.to_string(), r).expect("display output must parse"), m);
    }
});
