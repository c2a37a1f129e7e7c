//! Runner for checks that report one line each instead of stopping at the
//! first failure.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::Instant;

/// `Ok` carries a one-line summary, `Err` the reason for failing.
pub type Check = Result<String, String>;

pub fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

/// Fixture directory of the `saddlelink` crate.
pub fn fixture_dir(parts: &[&str]) -> PathBuf {
    let mut p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "saddlelink", "tests", "fixtures"].iter().collect();
    p.extend(parts);
    p
}

/// Runs every criterion, printing `PASS`/`FAIL` lines and a tally. Panics
/// count as failures. Returns the number of failures.
pub fn run(criteria: &[(&str, fn() -> Check)], out: &mut dyn Write) -> usize {
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        let _ = writeln!(out, "{tag} {:>2} {name} [{secs:.1}s]: {detail}", i + 1);
        let _ = out.flush();
    }
    let _ = writeln!(out, "acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    failed
}
