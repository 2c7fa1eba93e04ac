//! Transport along Lie algebra homomorphisms: preimages always preserve the
//! subalgebra and ideal predicates; images need surjectivity. The quotient
//! map from the Heisenberg algebra onto the abelian plane is surjective, so
//! everything transports.

use cflie::cfla::Mode;
use cflie::harness::gen::{Gen, GenConfig};
use cflie::homs::{check_hom_theorems, image_cfs, preimage_cfs, HomTheorem};
use cflie::lie_core::{make_catalog_algebra, LieHom};

fn main() -> Result<(), cflie::Error> {
    let h3 = make_catalog_algebra("heisenberg3", 5)?;
    let a2 = make_catalog_algebra("abelian-2", 5)?;
    // quotient by the center: e1, e2 pass through, e3 dies
    let phi = LieHom::from_row_major(h3.clone(), a2.clone(), &[1, 0, 0, 0, 1, 0])?;
    println!("phi surjective: {}", phi.is_surjective());

    let mut g = Gen::new(GenConfig::with_seed_and_trials(7, 1));
    let b = g.fuzzy_lie(&a2, Mode::Ideal)?;
    let pre = preimage_cfs(&phi, &b)?;
    println!("preimage has {} element(s)", pre.len());
    println!(
        "preimage-ideal: {}",
        check_hom_theorems(&phi, std::slice::from_ref(&b), HomTheorem::PreimageIdeal)?
    );

    let a = g.fuzzy_lie(&h3, Mode::Ideal)?;
    let img = image_cfs(&phi, &a)?;
    println!("image has {} element(s)", img.len());
    println!(
        "image-ideal:    {}",
        check_hom_theorems(&phi, std::slice::from_ref(&a), HomTheorem::ImageIdeal)?
    );

    let (s, t) = g.fuzzy_lie_pair(&h3, Mode::Ideal)?;
    println!(
        "phi(A+B) = phi(A)+phi(B): {}",
        check_hom_theorems(&phi, &[s, t], HomTheorem::SumCommutation)?
    );
    Ok(())
}
