//! Acceptance gate. Runs every criterion, prints one line each, and exits
//! nonzero if any gating criterion fails.
//!
//! `XCOMP_ACCEPT_CONFIG` may point at a TOML file overriding the defaults.

use std::process::ExitCode;

use xcomp_core::acceptance::{run_criterion, run_stretch, AcceptanceConfig, AcceptanceSummary, CRITERIA};

fn main() -> ExitCode {
    let cfg = match std::env::var("XCOMP_ACCEPT_CONFIG") {
        Ok(path) => {
            let text = std::fs::read_to_string(&path).expect("readable acceptance config");
            AcceptanceConfig::from_toml(&text).expect("valid acceptance config")
        }
        Err(_) => AcceptanceConfig::default(),
    };
    println!("acceptance (seed {})", cfg.seed);
    let mut summary = AcceptanceSummary::default();
    for id in CRITERIA {
        let r = run_criterion(id, &cfg);
        println!("{}", r.line());
        summary.results.push(r);
    }
    if cfg.stretch {
        let r = run_stretch();
        println!("{}", r.line());
        summary.results.push(r);
    }
    let gating = summary.results.iter().filter(|r| r.gating).count();
    let passed = summary.results.iter().filter(|r| r.gating && r.passed).count();
    println!("{passed}/{gating} gating criteria passed");
    if summary.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
