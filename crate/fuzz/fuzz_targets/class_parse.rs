#![no_main]

use std::sync::OnceLock;

use hallalg::repengine::{BruteEngine, DimVector, Quiver, RepEngine};
use libfuzzer_sys::fuzz_target;

fn engine() -> &'static BruteEngine {
    static E: OnceLock<BruteEngine> = OnceLock::new();
    E.get_or_init(|| BruteEngine::new(Quiver::kronecker(), 2).unwrap())
}

/// Grade written in either class syntax, read without touching the engine.
fn grade_of(s: &str) -> Option<DimVector> {
    let head = s.trim().rsplit_once('#')?.0;
    let d = head.rsplit_once("d:").map_or(head, |(_, d)| d.trim_end_matches('|'));
    DimVector::parse(d).ok()
}

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    // Parsing enumerates the orbits of the grade; keep that cheap.
    if grade_of(s).map_or(true, |d| d.total() > 4) {
        return;
    }
    let e = engine();
    if let Ok(c) = e.parse_class(s) {
        let d = (e as &dyn RepEngine).check_class(&c).expect("parsed class must exist");
        assert_eq!(e.parse_class(&e.render(&c)).unwrap(), c);
        assert!(d.total() <= 4);
    }
});
