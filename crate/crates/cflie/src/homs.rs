//! Image and preimage of complex fuzzy sets along Lie algebra
//! homomorphisms, and the commutation checks between cuts, sums, and the
//! two transports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cfla::{self, level_cut, LevelSpec, Mode};
use crate::cfuzzy::{is_mutually_homogeneous, ComplexFuzzySet, Membership};
use crate::check::{CheckResult, Witness};
use crate::error::Error;
use crate::lie_core::{CrispSubset, Element, LieHom};

/// OK iff the matrix preserves brackets on all basis pairs (linearity is
/// structural). Surjectivity lives on the hom itself
/// ([`LieHom::is_surjective`]); several theorems gate on it.
pub fn validate_hom(phi: &LieHom) -> Result<CheckResult, Error> {
    let src = phi.source();
    let dim = src.dim();
    for i in 0..dim {
        for j in 0..dim {
            let ei = Element::basis(dim, i);
            let ej = Element::basis(dim, j);
            let lhs = phi.apply(&src.bracket(&ei, &ej)?)?;
            let rhs = phi
                .target()
                .bracket(&phi.apply(&ei)?, &phi.apply(&ej)?)?;
            if lhs != rhs {
                return Ok(CheckResult::fail(
                    Witness::new("bracket-preservation")
                        .with_elements(vec![ei, ej])
                        .with_detail(format!(
                            "phi([e{}, e{}]) = {lhs} but [phi(e{}), phi(e{})] = {rhs}",
                            i + 1,
                            j + 1,
                            i + 1,
                            j + 1
                        )),
                ));
            }
        }
    }
    Ok(CheckResult::ok())
}

fn ensure_hom(phi: &LieHom) -> Result<(), Error> {
    let res = validate_hom(phi)?;
    if !res.is_ok() {
        return Err(Error::Scenario {
            context: "hom".into(),
            message: format!("not a Lie algebra homomorphism: {res}"),
        });
    }
    Ok(())
}

/// Pull a fuzzy set on the target back along `phi`:
/// `mu_(phi^-1(B))(x) = mu_B(phi(x))`.
pub fn preimage_cfs(phi: &LieHom, set: &ComplexFuzzySet) -> Result<ComplexFuzzySet, Error> {
    ensure_hom(phi)?;
    if set.len() != phi.target().carrier_size() as usize {
        return Err(Error::CarrierMismatch);
    }
    let values: BTreeMap<Element, Membership> = phi
        .source()
        .carrier()
        .into_iter()
        .map(|x| {
            let y = phi.apply(&x)?;
            Ok((x, set.get(&y)))
        })
        .collect::<Result<_, Error>>()?;
    ComplexFuzzySet::new(phi.source(), values)
}

/// Push a fuzzy set on the source forward along `phi`: the componentwise
/// join over each fiber, and `(0, 0)` where the fiber is empty.
pub fn image_cfs(phi: &LieHom, set: &ComplexFuzzySet) -> Result<ComplexFuzzySet, Error> {
    ensure_hom(phi)?;
    if set.len() != phi.source().carrier_size() as usize {
        return Err(Error::CarrierMismatch);
    }
    let mut fibers: BTreeMap<Element, Vec<Membership>> = phi
        .target()
        .carrier()
        .into_iter()
        .map(|y| (y, Vec::new()))
        .collect();
    for x in phi.source().carrier() {
        let y = phi.apply(&x)?;
        fibers.get_mut(&y).expect("phi lands in the target carrier").push(set.get(&x));
    }
    let values: BTreeMap<Element, Membership> = fibers
        .into_iter()
        .map(|(y, ms)| {
            let m = ms
                .into_iter()
                .reduce(|a, b| a.join(&b))
                .unwrap_or_else(Membership::zero);
            (y, m)
        })
        .collect();
    ComplexFuzzySet::new(phi.target(), values)
}

/// The homomorphism theorems this module can verify on a concrete instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomTheorem {
    PreimageSubalgebra,
    PreimageIdeal,
    ImageSubalgebra,
    ImageIdeal,
    SumCommutation,
}

impl std::fmt::Display for HomTheorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            HomTheorem::PreimageSubalgebra => "preimage-subalgebra",
            HomTheorem::PreimageIdeal => "preimage-ideal",
            HomTheorem::ImageSubalgebra => "image-subalgebra",
            HomTheorem::ImageIdeal => "image-ideal",
            HomTheorem::SumCommutation => "sum-commutation",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for HomTheorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "preimage-subalgebra" => Ok(HomTheorem::PreimageSubalgebra),
            "preimage-ideal" => Ok(HomTheorem::PreimageIdeal),
            "image-subalgebra" => Ok(HomTheorem::ImageSubalgebra),
            "image-ideal" => Ok(HomTheorem::ImageIdeal),
            "sum-commutation" => Ok(HomTheorem::SumCommutation),
            _ => Err(Error::UnknownTheorem(s.to_string())),
        }
    }
}

fn require(theorem: HomTheorem, ok: bool, hypothesis: &str) -> Result<(), Error> {
    if ok {
        Ok(())
    } else {
        Err(Error::HypothesisNotMet {
            theorem: theorem.to_string(),
            hypothesis: hypothesis.to_string(),
        })
    }
}

/// Verify one transport theorem on a concrete instance. For the preimage
/// theorems `sets[0]` lives on the target; for the image and sum theorems
/// the sets live on the source. Hypothesis failures are errors naming the
/// hypothesis; a FAIL verdict on hypothesis-satisfying inputs falsifies the
/// library (or reveals a genuine gap) and is surfaced verbatim.
pub fn check_hom_theorems(
    phi: &LieHom,
    sets: &[ComplexFuzzySet],
    theorem: HomTheorem,
) -> Result<CheckResult, Error> {
    ensure_hom(phi)?;
    match theorem {
        HomTheorem::PreimageSubalgebra | HomTheorem::PreimageIdeal => {
            let mode = if theorem == HomTheorem::PreimageSubalgebra {
                Mode::Subalgebra
            } else {
                Mode::Ideal
            };
            let [b] = sets else {
                return Err(Error::Scenario {
                    context: theorem.to_string(),
                    message: "expected exactly one set on the target".into(),
                });
            };
            let hyp = match mode {
                Mode::Subalgebra => cfla::is_complex_fuzzy_subalgebra(phi.target(), b)?,
                Mode::Ideal => cfla::is_complex_fuzzy_ideal(phi.target(), b)?,
            };
            require(theorem, hyp.is_ok(), "B satisfies the predicate on the target")?;
            let pre = preimage_cfs(phi, b)?;
            match mode {
                Mode::Subalgebra => cfla::is_complex_fuzzy_subalgebra(phi.source(), &pre),
                Mode::Ideal => cfla::is_complex_fuzzy_ideal(phi.source(), &pre),
            }
        }
        HomTheorem::ImageSubalgebra | HomTheorem::ImageIdeal => {
            let mode = if theorem == HomTheorem::ImageSubalgebra {
                Mode::Subalgebra
            } else {
                Mode::Ideal
            };
            let [a] = sets else {
                return Err(Error::Scenario {
                    context: theorem.to_string(),
                    message: "expected exactly one set on the source".into(),
                });
            };
            require(theorem, phi.is_surjective(), "phi is surjective")?;
            let hyp = match mode {
                Mode::Subalgebra => cfla::is_complex_fuzzy_subalgebra(phi.source(), a)?,
                Mode::Ideal => cfla::is_complex_fuzzy_ideal(phi.source(), a)?,
            };
            require(theorem, hyp.is_ok(), "A satisfies the predicate on the source")?;
            let img = image_cfs(phi, a)?;
            match mode {
                Mode::Subalgebra => cfla::is_complex_fuzzy_subalgebra(phi.target(), &img),
                Mode::Ideal => cfla::is_complex_fuzzy_ideal(phi.target(), &img),
            }
        }
        HomTheorem::SumCommutation => {
            let [a, b] = sets else {
                return Err(Error::Scenario {
                    context: theorem.to_string(),
                    message: "expected exactly two sets on the source".into(),
                });
            };
            require(theorem, phi.is_surjective(), "phi is surjective")?;
            require(
                theorem,
                cfla::is_complex_fuzzy_ideal(phi.source(), a)?.is_ok(),
                "A is a complex fuzzy ideal",
            )?;
            require(
                theorem,
                cfla::is_complex_fuzzy_ideal(phi.source(), b)?.is_ok(),
                "B is a complex fuzzy ideal",
            )?;
            require(
                theorem,
                is_mutually_homogeneous(a, b)?.is_ok(),
                "A is homogeneous with B",
            )?;
            let lhs = image_cfs(phi, &cfla::fuzzy_sum(phi.source(), a, b)?)?;
            let rhs = cfla::fuzzy_sum(
                phi.target(),
                &image_cfs(phi, a)?,
                &image_cfs(phi, b)?,
            )?;
            for y in phi.target().carrier() {
                if lhs.get(&y) != rhs.get(&y) {
                    return Ok(CheckResult::fail(
                        Witness::new("sum-commutation")
                            .with_elements(vec![y.clone()])
                            .with_detail(format!(
                                "phi(A+B)(y) = {} but (phi(A)+phi(B))(y) = {}",
                                lhs.get(&y),
                                rhs.get(&y)
                            )),
                    ));
                }
            }
            Ok(CheckResult::ok())
        }
    }
}

/// Crisp preimage of a crisp subset of the target.
pub fn preimage_crisp(phi: &LieHom, subset: &CrispSubset) -> Result<CrispSubset, Error> {
    let mut members = std::collections::BTreeSet::new();
    for x in phi.source().carrier() {
        if subset.contains(&phi.apply(&x)?) {
            members.insert(x);
        }
    }
    Ok(CrispSubset::new(members))
}

/// Cut commutation: `phi^-1(B_(alpha,beta)) = (phi^-1(B))_(alpha,beta)`, in
/// whichever of the four strictness variants `spec` selects. Exact set
/// equality; the witness is the smallest element of the symmetric
/// difference.
pub fn check_levelcut_commutation(
    phi: &LieHom,
    set: &ComplexFuzzySet,
    spec: &LevelSpec,
) -> Result<CheckResult, Error> {
    ensure_hom(phi)?;
    let crisp_first = preimage_crisp(phi, &level_cut(set, spec))?;
    let fuzzy_first = level_cut(&preimage_cfs(phi, set)?, spec);
    if crisp_first == fuzzy_first {
        return Ok(CheckResult::ok());
    }
    let diff = crisp_first
        .members()
        .symmetric_difference(fuzzy_first.members())
        .next()
        .expect("unequal sets have a nonempty symmetric difference")
        .clone();
    Ok(CheckResult::fail(
        Witness::new("levelcut-commutation")
            .with_elements(vec![diff])
            .with_detail(format!(
                "sides disagree at alpha = {}, beta/pi = {}, strict_r = {}, strict_w = {}",
                spec.alpha, spec.beta_over_pi, spec.strict_r, spec.strict_w
            )),
    ))
}
