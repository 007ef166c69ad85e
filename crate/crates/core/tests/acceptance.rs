use std::io::Write;

use hallalg::suite;

#[test]
fn acceptance() {
    // Written to the raw stderr handle so the per-criterion lines show up
    // even when the harness captures output.
    let mut err = std::io::stderr().lock();
    let mut failed = Vec::new();
    for c in suite::criteria() {
        let out = c.run();
        writeln!(err, "{}", out.summary_line()).unwrap();
        for r in out.reports.iter().filter(|r| !r.passed()) {
            writeln!(err, "    {r}").unwrap();
        }
        for e in &out.errors {
            writeln!(err, "    error: {e}").unwrap();
        }
        if !out.passed() {
            failed.push(out.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
