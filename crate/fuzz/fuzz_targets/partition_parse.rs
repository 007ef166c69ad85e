#![no_main]

use hallalg::partitions::Partition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Partition::parse(s) {
        assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        assert_eq!(Partition::parse(&p.to_string()).expect("display output must parse"), p);
    }
});
