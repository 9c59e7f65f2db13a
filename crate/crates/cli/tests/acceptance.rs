//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs the same claims as `sghom verify-paper`, without the libtest
//! harness so every criterion reports even after a failure. Set
//! `SGHOM_HEAVY=1` to include the long-running claims. A claim marked as a
//! known failure must fail; anything else unexpected exits nonzero.

use std::collections::BTreeMap;

use sghom_cli::verify::{claims, run, ClaimRun, Context, Status};

fn main() {
    let heavy = std::env::var("SGHOM_HEAVY").is_ok_and(|v| v == "1");
    let all = claims();
    let runs = run(&all, &Context::new(1), heavy);
    let mut by_criterion: BTreeMap<u32, Vec<&ClaimRun>> = BTreeMap::new();
    for r in &runs {
        by_criterion.entry(r.claim.criterion).or_default().push(r);
    }

    let mut unexpected = Vec::new();
    for (criterion, runs) in &by_criterion {
        let failed: Vec<&&ClaimRun> = runs.iter().filter(|r| r.status == Status::Fail).collect();
        let skipped = runs.iter().filter(|r| r.status == Status::Skipped).count();
        let ms: u128 = runs.iter().map(|r| r.elapsed_ms).sum();
        let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
        let mut notes: Vec<String> = runs
            .iter()
            .map(|r| match r.status {
                Status::Pass => format!("{}: {}", r.claim.id, r.detail),
                Status::Skipped => format!("{}: skipped (SGHOM_HEAVY=1)", r.claim.id),
                Status::Fail if r.claim.known_failure => format!("{}: known failure: {}", r.claim.id, r.detail),
                Status::Fail => format!("{}: {}", r.claim.id, r.detail),
            })
            .collect();
        if skipped > 0 {
            notes.push(format!("{} skipped", skipped));
        }
        println!("criterion {:2} {} [{} ms] {}", criterion, verdict, ms, notes.join("; "));
        for r in runs {
            let bad = match r.status {
                Status::Fail => !r.claim.known_failure,
                Status::Pass => r.claim.known_failure,
                Status::Skipped => false,
            };
            if bad {
                unexpected.push(r.claim.id);
            }
        }
    }
    if !unexpected.is_empty() {
        println!("unexpected outcomes: {}", unexpected.join(", "));
        std::process::exit(1);
    }
}
