#![no_main]

use std::sync::OnceLock;

use hallalg::repengine::{BruteEngine, Quiver, RepEngine};
use hallalg_cli::cache;
use libfuzzer_sys::fuzz_target;
use sha2::{Digest, Sha256};

fn engine() -> &'static BruteEngine {
    static E: OnceLock<BruteEngine> = OnceLock::new();
    E.get_or_init(|| BruteEngine::new(Quiver::kronecker(), 2).unwrap())
}

// Inputs that do not start with the magic line are treated as a body and
// wrapped in a valid header, so the JSON decoding is reached past the digest.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let e = engine();
    let text = if s.starts_with("hallalg-cache\n") {
        s.to_string()
    } else {
        let body = s.replace('\n', " ");
        let key = body_key(&body).unwrap_or_default();
        let sum: String = Sha256::digest(body.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
        format!("hallalg-cache\nversion {}\nkey {key}\nsha256 {sum}\n{body}\n", cache::stamp())
    };
    if let Some(entry) = cache::decode(e, &text) {
        assert_eq!(entry.summary.reps.len(), entry.summary.sizes.len());
        for (l, _) in &entry.hall {
            assert_eq!(e.grade(l).unwrap(), entry.grade);
        }
    }
});

fn body_key(body: &str) -> Option<String> {
    let start = body.find("\"grade\":[")? + 9;
    let end = start + body[start..].find(']')?;
    let grade: Vec<&str> = body[start..end].split(',').map(str::trim).collect();
    Some(format!("K2|q:2|d:({})", grade.join(",")))
}
