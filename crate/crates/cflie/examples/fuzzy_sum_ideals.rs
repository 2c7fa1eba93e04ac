//! The fuzzy sum of two mutually homogeneous complex fuzzy ideals is again
//! a complex fuzzy ideal, and on a finite carrier the defining supremum is
//! always attained by some decomposition.

use cflie::cfla::{check_sum_ideal_theorem, fuzzy_sum, fuzzy_sum_attainment, Mode};
use cflie::harness::gen::{Gen, GenConfig};
use cflie::lie_core::make_catalog_algebra;

fn main() -> Result<(), cflie::Error> {
    let h3 = make_catalog_algebra("heisenberg3", 3)?;
    let mut g = Gen::new(GenConfig::with_seed_and_trials(42, 1));
    let (a, b) = g.fuzzy_lie_pair(&h3, Mode::Ideal)?;

    let sum = fuzzy_sum(&h3, &a, &b)?;
    println!("distinct values in A+B: {}", {
        let vals: std::collections::BTreeSet<_> = sum.values().values().collect();
        vals.len()
    });
    println!("sum-of-ideals theorem: {}", check_sum_ideal_theorem(&h3, &a, &b)?);
    println!("supremum attainment:   {}", fuzzy_sum_attainment(&h3, &a, &b)?);
    Ok(())
}
