//! Run the seeded theorem-verification suite with a small budget and print
//! the per-theorem tallies. The same seed always produces a byte-identical
//! report.

use cflie::harness::gen::GenConfig;
use cflie::harness::suite::run_suite;

fn main() -> Result<(), cflie::Error> {
    let cfg = GenConfig {
        max_prime: 3,
        ..GenConfig::with_seed_and_trials(1, 10)
    };
    let report = run_suite(&cfg)?;
    for (id, r) in &report.theorems {
        println!("{id}: {}/{} passed ({} ms)", r.passes, r.trials, r.wall_time_ms);
    }
    println!("verdict: {}", report.verdict);
    Ok(())
}
