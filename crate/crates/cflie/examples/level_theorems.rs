//! Level machinery: build a fuzzy ideal from a nested chain of crisp ideals
//! on the Heisenberg algebra, list its upper level sets, and confirm the
//! level-set characterization in both the plain and strong variants.

use cflie::cfla::{
    check_level_theorem, generate_from_chain, image_values, upper_level, ChainSpec, Mode, Strength,
};
use cflie::cfuzzy::Membership;
use cflie::lie_core::{make_catalog_algebra, CrispSubset, Element};

fn main() -> Result<(), cflie::Error> {
    let h3 = make_catalog_algebra("heisenberg3", 3)?;

    // {0} < center < full carrier, with values decreasing outward
    let zero = CrispSubset::from_iter([h3.zero()]);
    let center = CrispSubset::from_iter(
        h3.field()
            .scalars()
            .map(|t| Element::new(vec![0, 0, t])),
    );
    let spec = ChainSpec {
        chain: vec![zero, center],
        values: vec![
            Membership::from_ints(1, 1, 2, 1)?,
            Membership::from_ints(1, 2, 1, 1)?,
        ],
    };
    let set = generate_from_chain(&h3, &spec, Mode::Ideal)?;

    for t in image_values(&set)? {
        println!("U(mu, {t}) has {} element(s)", upper_level(&set, t).len());
    }
    for strength in [Strength::Upper, Strength::Strong] {
        let r = check_level_theorem(&h3, &set, Mode::Ideal, strength)?;
        println!("level theorem ({strength}): {r}");
    }
    Ok(())
}
