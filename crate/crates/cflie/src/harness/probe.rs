//! Hypothesis-necessity probe. Separate from the verification suite: the
//! suite asserts theorems on hypothesis-satisfying instances; the probe
//! drops one hypothesis and searches for an instance where the conclusion
//! breaks. NOT_FOUND within budget is a valid outcome — it says nothing
//! about necessity, only that the search was exhausted.

use serde::{Deserialize, Serialize};

use crate::cfla::{fuzzy_sum, is_complex_fuzzy_ideal, is_complex_fuzzy_subalgebra, Mode};
use crate::cfuzzy::intersect;
use crate::check::CheckResult;
use crate::error::Error;
use crate::harness::gen::{catalog_homs, Gen, GenConfig};
use crate::harness::scenario::{algebra_to_def, fuzzy_set_to_def, ScenarioFile};
use crate::harness::suite::THEOREM_IDS;
use crate::homs::image_cfs;

/// Hypotheses the probe knows how to drop, per theorem:
/// mutual homogeneity for the sum and intersection theorems, surjectivity
/// for the image and sum-commutation theorems.
pub fn droppable_hypotheses(theorem: &str) -> &'static [&'static str] {
    match theorem {
        "sum-ideal" | "intersection-subalgebra" | "intersection-ideal" => &["mutual-homogeneity"],
        "image-subalgebra" | "image-ideal" | "sum-commutation" => &["surjectivity"],
        _ => &[],
    }
}

/// A concrete instance where the conclusion failed with the hypothesis
/// dropped, serialized for replay.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Counterexample {
    pub theorem: String,
    pub dropped: String,
    pub attempt: u64,
    pub result: CheckResult,
    pub scenario: ScenarioFile,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProbeReport {
    pub theorem: String,
    pub dropped: String,
    pub budget: u64,
    pub attempts: u64,
    pub found: Option<Counterexample>,
}

fn two_set_scenario(
    g: &mut Gen,
    mode: Mode,
) -> Result<(crate::lie_core::LieAlgebra, crate::cfuzzy::ComplexFuzzySet, crate::cfuzzy::ComplexFuzzySet), Error> {
    let algebra = g.algebra();
    // independent chains with independent ladders: each set satisfies the
    // predicate on its own, but mutual homogeneity is NOT arranged
    let a = g.fuzzy_lie(&algebra, mode)?;
    let b = g.fuzzy_lie(&algebra, mode)?;
    Ok((algebra, a, b))
}

/// Search up to `budget` seeded instances for a conclusion failure with the
/// given hypothesis dropped. `None` in `found` means NOT_FOUND.
pub fn find_hypothesis_counterexample(
    theorem: &str,
    dropped: &str,
    budget: u64,
    seed: u64,
) -> Result<ProbeReport, Error> {
    if !THEOREM_IDS.contains(&theorem) {
        return Err(Error::UnknownTheorem(theorem.to_string()));
    }
    if !droppable_hypotheses(theorem).contains(&dropped) {
        return Err(Error::HypothesisNotDroppable {
            theorem: theorem.to_string(),
            hypothesis: dropped.to_string(),
        });
    }
    let mut found = None;
    let mut attempts = 0;
    for attempt in 0..budget {
        attempts = attempt + 1;
        let cfg = GenConfig {
            seed: seed.wrapping_add(attempt).wrapping_mul(0x9e37_79b9_7f4a_7c15),
            ..GenConfig::default()
        };
        let mut g = Gen::new(cfg);
        let (result, scenario) = match theorem {
            "sum-ideal" => {
                let (algebra, a, b) = two_set_scenario(&mut g, Mode::Ideal)?;
                let sum = fuzzy_sum(&algebra, &a, &b)?;
                let result = is_complex_fuzzy_ideal(&algebra, &sum)?;
                let scenario = ScenarioFile {
                    algebras: vec![algebra_to_def(&algebra)],
                    fuzzy_sets: vec![
                        fuzzy_set_to_def("A", algebra.name(), &a),
                        fuzzy_set_to_def("B", algebra.name(), &b),
                    ],
                    ..Default::default()
                };
                (result, scenario)
            }
            "intersection-subalgebra" | "intersection-ideal" => {
                let mode = if theorem.ends_with("ideal") {
                    Mode::Ideal
                } else {
                    Mode::Subalgebra
                };
                let (algebra, a, b) = two_set_scenario(&mut g, mode)?;
                let meet = intersect(&a, &b)?;
                let result = match mode {
                    Mode::Subalgebra => is_complex_fuzzy_subalgebra(&algebra, &meet)?,
                    Mode::Ideal => is_complex_fuzzy_ideal(&algebra, &meet)?,
                };
                let scenario = ScenarioFile {
                    algebras: vec![algebra_to_def(&algebra)],
                    fuzzy_sets: vec![
                        fuzzy_set_to_def("A", algebra.name(), &a),
                        fuzzy_set_to_def("B", algebra.name(), &b),
                    ],
                    ..Default::default()
                };
                (result, scenario)
            }
            "image-subalgebra" | "image-ideal" => {
                let mode = if theorem.ends_with("ideal") {
                    Mode::Ideal
                } else {
                    Mode::Subalgebra
                };
                let p = g.prime();
                let homs: Vec<_> = catalog_homs(p)?
                    .into_iter()
                    .filter(|h| !h.is_surjective())
                    .collect();
                let phi = {
                    use rand::Rng;
                    homs[g.rng().gen_range(0..homs.len())].clone()
                };
                let a = g.fuzzy_lie(&phi.source().clone(), mode)?;
                let img = image_cfs(&phi, &a)?;
                let result = match mode {
                    Mode::Subalgebra => is_complex_fuzzy_subalgebra(phi.target(), &img)?,
                    Mode::Ideal => is_complex_fuzzy_ideal(phi.target(), &img)?,
                };
                let mut algebras = vec![algebra_to_def(phi.source())];
                if phi.target().name() != phi.source().name() {
                    algebras.push(algebra_to_def(phi.target()));
                }
                let scenario = ScenarioFile {
                    algebras,
                    fuzzy_sets: vec![fuzzy_set_to_def("A", phi.source().name(), &a)],
                    homs: vec![super::scenario::hom_to_def("phi", &phi)],
                    ..Default::default()
                };
                (result, scenario)
            }
            "sum-commutation" => {
                let p = g.prime();
                let homs: Vec<_> = catalog_homs(p)?
                    .into_iter()
                    .filter(|h| !h.is_surjective())
                    .collect();
                let phi = {
                    use rand::Rng;
                    homs[g.rng().gen_range(0..homs.len())].clone()
                };
                let source = phi.source().clone();
                let (a, b) = g.fuzzy_lie_pair(&source, Mode::Ideal)?;
                let lhs = image_cfs(&phi, &fuzzy_sum(&source, &a, &b)?)?;
                let rhs = fuzzy_sum(phi.target(), &image_cfs(&phi, &a)?, &image_cfs(&phi, &b)?)?;
                let result = if lhs == rhs {
                    CheckResult::ok()
                } else {
                    CheckResult::fail(
                        crate::check::Witness::new("sum-commutation")
                            .with_detail("phi(A+B) != phi(A)+phi(B) without surjectivity"),
                    )
                };
                let mut algebras = vec![algebra_to_def(phi.source())];
                if phi.target().name() != phi.source().name() {
                    algebras.push(algebra_to_def(phi.target()));
                }
                let scenario = ScenarioFile {
                    algebras,
                    fuzzy_sets: vec![
                        fuzzy_set_to_def("A", source.name(), &a),
                        fuzzy_set_to_def("B", source.name(), &b),
                    ],
                    homs: vec![super::scenario::hom_to_def("phi", &phi)],
                    ..Default::default()
                };
                (result, scenario)
            }
            _ => unreachable!("guarded by droppable_hypotheses"),
        };
        if !result.is_ok() {
            found = Some(Counterexample {
                theorem: theorem.to_string(),
                dropped: dropped.to_string(),
                attempt,
                result,
                scenario,
            });
            break;
        }
    }
    Ok(ProbeReport {
        theorem: theorem.to_string(),
        dropped: dropped.to_string(),
        budget,
        attempts,
        found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_theorem_is_rejected() {
        assert!(matches!(
            find_hypothesis_counterexample("nope", "surjectivity", 1, 0),
            Err(Error::UnknownTheorem(_))
        ));
    }

    #[test]
    fn non_droppable_hypothesis_is_rejected() {
        assert!(matches!(
            find_hypothesis_counterexample("level-ideal-upper", "nothing", 1, 0),
            Err(Error::HypothesisNotDroppable { .. })
        ));
        assert!(matches!(
            find_hypothesis_counterexample("sum-ideal", "surjectivity", 1, 0),
            Err(Error::HypothesisNotDroppable { .. })
        ));
    }

    #[test]
    fn probe_output_form_is_well_defined_either_way() {
        let report = find_hypothesis_counterexample("sum-ideal", "mutual-homogeneity", 20, 1).unwrap();
        assert!(report.attempts <= report.budget);
        if let Some(cx) = &report.found {
            // a found instance must load as a scenario and replay to a failure
            let resolved = crate::harness::scenario::resolve_scenario(&cx.scenario).unwrap();
            let (algebra, a) = resolved.fuzzy_set("A").unwrap();
            let (_, b) = resolved.fuzzy_set("B").unwrap();
            let sum = fuzzy_sum(algebra, a, b).unwrap();
            let replayed = is_complex_fuzzy_ideal(algebra, &sum).unwrap();
            assert_eq!(replayed, cx.result);
        }
    }

    #[test]
    fn dropping_surjectivity_probe_runs() {
        let report =
            find_hypothesis_counterexample("image-subalgebra", "surjectivity", 10, 2).unwrap();
        assert_eq!(report.theorem, "image-subalgebra");
    }
}
