//! Audits seeded random graphs against every bound and structural property.
//!
//! cargo run --example audit_sweep -- 200

use std::collections::BTreeMap;

use fuzzy_roman::audit::{audit_instance, Status};
use fuzzy_roman::io::{generate, GenSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let count: u64 = std::env::args().nth(1).map_or(Ok(100), |s| s.parse())?;
    let mut tally: BTreeMap<String, [usize; 3]> = BTreeMap::new();
    let mut failed = 0;
    for seed in 0..count {
        let spec: GenSpec = format!("n={},p=0.5,D=20,seed={seed}", 1 + seed % 10).parse()?;
        let g = generate(&spec)?;
        let report = audit_instance(&format!("seed-{seed}"), &g)?;
        for c in &report.checks {
            let slot = match c.status {
                Status::Pass => 0,
                Status::Fail => 1,
                Status::NotApplicable => 2,
            };
            tally.entry(c.id.clone()).or_default()[slot] += 1;
        }
        if !report.passed() {
            failed += 1;
        }
    }
    println!("{:<28} {:>6} {:>6} {:>6}", "check", "pass", "fail", "n/a");
    for (id, [pass, fail, na]) in &tally {
        println!("{id:<28} {pass:>6} {fail:>6} {na:>6}");
    }
    println!("{} of {count} instances passed", count - failed);
    if failed > 0 {
        std::process::exit(4);
    }
    Ok(())
}
