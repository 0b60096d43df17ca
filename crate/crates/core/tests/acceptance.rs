//! Runs the nine acceptance suites and prints one line per criterion.

use std::process::ExitCode;

use surfchar::suites;

fn main() -> ExitCode {
    let seed = 0;
    let mut failed = 0;
    for n in 1..=suites::NAMES.len() {
        match suites::run(n, seed) {
            Ok(report) => {
                println!("{report}");
                failed += usize::from(!report.passed);
            }
            Err(e) => {
                println!("criterion {n} {}: FAIL (error: {e})", suites::NAMES[n - 1]);
                failed += 1;
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", suites::NAMES.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
