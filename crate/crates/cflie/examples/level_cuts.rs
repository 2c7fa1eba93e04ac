//! The four (alpha, beta) cuts — each threshold independently weak or
//! strict — and the fact that every one of them commutes with preimage:
//! phi^-1(B_(alpha,beta)) = (phi^-1(B))_(alpha,beta).

use cflie::cfla::{level_cut, LevelSpec};
use cflie::harness::gen::{Gen, GenConfig};
use cflie::homs::check_levelcut_commutation;
use cflie::lie_core::{make_catalog_algebra, LieHom};
use cflie::Rational;

fn main() -> Result<(), cflie::Error> {
    let h3 = make_catalog_algebra("heisenberg3", 3)?;
    let a2 = make_catalog_algebra("abelian-2", 3)?;
    let phi = LieHom::from_row_major(h3, a2.clone(), &[1, 0, 0, 0, 1, 0])?;

    let mut g = Gen::new(GenConfig::with_seed_and_trials(5, 1));
    let ladder = g.ladder(4);
    let b = g.homogeneous_set(&a2, &ladder);

    let alpha = Rational::new(1, 2);
    let beta = Rational::new(1, 4);
    for (strict_r, strict_w) in [(false, false), (false, true), (true, false), (true, true)] {
        let spec = LevelSpec::new(alpha, beta, strict_r, strict_w)?;
        let cut = level_cut(&b, &spec);
        let commutes = check_levelcut_commutation(&phi, &b, &spec)?;
        println!(
            "strict_r = {strict_r}, strict_w = {strict_w}: cut size {}, commutation {commutes}",
            cut.len()
        );
    }
    Ok(())
}
