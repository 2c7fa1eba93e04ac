//! The motivating example: on F_5^3 with the cross-product bracket, the set
//! that is 0.9e^{i 3pi/2} at the origin, 0.6e^{i pi/2} on the rest of the
//! e1-line, and 0 elsewhere is a complex fuzzy Lie subalgebra but not a
//! complex fuzzy Lie ideal.

use cflie::cfla::{is_complex_fuzzy_ideal, is_complex_fuzzy_subalgebra};
use cflie::harness::load_scenario;
use cflie::lie_core::Element;

fn main() -> Result<(), cflie::Error> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/scenarios/paper_example.json");
    let scenario = load_scenario(path)?;
    let (algebra, set) = scenario.fuzzy_set("A")?;

    println!("subalgebra: {}", is_complex_fuzzy_subalgebra(algebra, set)?);
    println!("ideal:      {}", is_complex_fuzzy_ideal(algebra, set)?);

    // the textbook violating pair: bracketing an e1-line element with
    // (1,1,1) lands on (0,4,1), which carries membership (0, 0)
    let x = Element::new(vec![1, 0, 0]);
    let y = Element::new(vec![1, 1, 1]);
    let z = algebra.bracket(&x, &y)?;
    println!(
        "mu([{x}, {y}]) = mu({z}) = {}, but mu({x}) v mu({y}) = {}",
        set.get(&z),
        set.get(&x).join(&set.get(&y))
    );
    Ok(())
}
