//! Runs every reproduction criterion at its stated tolerance and time limit.
//! Prints one line per criterion; exits non-zero if any fails.

use std::process::ExitCode;

use seshadri_cli::suite::CRITERIA;

fn main() -> ExitCode {
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    let mut ran = 0;
    for c in &CRITERIA {
        if !filter.is_empty() && !filter.iter().any(|f| c.name.contains(f.as_str())) {
            continue;
        }
        let out = c.run();
        println!("{out}");
        ran += 1;
        if !out.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", ran - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
