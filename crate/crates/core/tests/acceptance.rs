use comet_core::verify::{run_suite, SuiteParams, SUITES};
use std::io::Write;

#[test]
fn acceptance() {
    let params = SuiteParams::default();
    let mut failed = Vec::new();
    let _ = writeln!(std::io::stderr());
    for (name, criterion) in SUITES {
        let line = match run_suite(name, &params) {
            Ok(r) => {
                let checked: usize = r.entries.iter().map(|e| e.checked).sum();
                let ms = r.wall_ms.unwrap_or(0);
                if r.passed() {
                    format!("PASS {criterion:>2} {name} ({} entries, {checked} checked, {ms} ms)", r.entries.len())
                } else {
                    let w = r.entries.iter().find_map(|e| e.witness.clone()).unwrap_or_default();
                    failed.push(name);
                    format!("FAIL {criterion:>2} {name}: {w}")
                }
            }
            Err(e) => {
                failed.push(name);
                format!("FAIL {criterion:>2} {name}: error {e}")
            }
        };
        // Bypasses output capture so the table shows in plain `cargo test` runs.
        let _ = writeln!(std::io::stderr(), "{line}");
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
