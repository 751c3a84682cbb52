//! Runs the cross-checks between the game solver and the tree algorithms.

use std::time::Instant;

use zq_forcing::verify::{verify, VerifyConfig};

fn main() -> zq_forcing::Result<()> {
    let config = VerifyConfig { tree_max: 11, ..VerifyConfig::default() };
    let start = Instant::now();
    let report = verify(&config)?;
    for c in &report.checks {
        match &c.mismatch {
            None => println!("ok   {:<28} {:>7} cases", c.name, c.cases),
            Some(m) => println!("FAIL {:<28} {} on {}", c.name, m.detail, m.graph6()),
        }
    }
    println!("{:.2?}", start.elapsed());
    Ok(())
}
