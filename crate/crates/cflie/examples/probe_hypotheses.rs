//! Hypothesis-necessity probe: drop the mutual-homogeneity hypothesis from
//! the sum-of-ideals theorem and search for an instance where the sum stops
//! being a complex fuzzy ideal. Both outcomes (found / NOT_FOUND within
//! budget) are legitimate — the probe explores, it does not assert.

use cflie::harness::probe::find_hypothesis_counterexample;

fn main() -> Result<(), cflie::Error> {
    let report = find_hypothesis_counterexample("sum-ideal", "mutual-homogeneity", 200, 0)?;
    match &report.found {
        Some(cx) => println!(
            "counterexample on attempt {}: {}",
            cx.attempt, cx.result
        ),
        None => println!("NOT_FOUND within budget {}", report.budget),
    }
    Ok(())
}
