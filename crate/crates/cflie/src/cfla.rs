//! Complex fuzzy subalgebra and ideal predicates, level machinery, the
//! fuzzy sum, and chain-based construction of valid instances.
//!
//! Every predicate quantifies exhaustively: `x`, `y` range over the full
//! carrier and `alpha` over all field scalars. Witnesses are deterministic:
//! conditions are tried in definition order and elements are scanned in
//! ascending lexicographic order, so the first violation reported is the
//! smallest one.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::cfuzzy::{
    self, decompose, is_homogeneous, is_mutually_homogeneous, ComplexFuzzySet,
    Membership, PiFuzzySet, RealFuzzySet,
};
use crate::check::{CheckResult, Verdict, Witness};
use crate::error::Error;
use crate::lie_core::{
    is_crisp_ideal, is_crisp_subalgebra, CrispSubset, Element, LieAlgebra,
};
use crate::Rational;

/// Which closure family a check targets: bracket condition with meet
/// (subalgebra) or with join (ideal).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Subalgebra,
    Ideal,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Subalgebra => write!(f, "subalgebra"),
            Mode::Ideal => write!(f, "ideal"),
        }
    }
}

/// Upper levels or strong upper levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strength {
    Upper,
    Strong,
}

impl std::fmt::Display for Strength {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Strength::Upper => write!(f, "upper"),
            Strength::Strong => write!(f, "strong"),
        }
    }
}

/// Parameters of the four `(alpha, beta)` cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSpec {
    #[serde(with = "cfuzzy::ratio_serde")]
    pub alpha: Rational,
    #[serde(with = "cfuzzy::ratio_serde")]
    pub beta_over_pi: Rational,
    #[serde(default)]
    pub strict_r: bool,
    #[serde(default)]
    pub strict_w: bool,
}

impl LevelSpec {
    pub fn new(
        alpha: Rational,
        beta_over_pi: Rational,
        strict_r: bool,
        strict_w: bool,
    ) -> Result<Self, Error> {
        // reuse the membership bound checks
        Membership::new(alpha, beta_over_pi)?;
        Ok(LevelSpec {
            alpha,
            beta_over_pi,
            strict_r,
            strict_w,
        })
    }
}

/// A strictly nested chain of crisp subsets with strictly decreasing
/// membership values; feeding it to [`generate_from_chain`] yields a set
/// that provably satisfies the corresponding fuzzy predicate.
#[derive(Debug, Clone)]
pub struct ChainSpec {
    pub chain: Vec<CrispSubset>,
    pub values: Vec<Membership>,
}

fn ensure_total(algebra: &LieAlgebra, set: &ComplexFuzzySet) -> Result<Vec<Element>, Error> {
    let carrier = algebra.carrier();
    if set.len() != carrier.len() || carrier.iter().any(|x| !set.values().contains_key(x)) {
        return Err(Error::CarrierMismatch);
    }
    Ok(carrier)
}

fn check_complex_fuzzy(
    algebra: &LieAlgebra,
    set: &ComplexFuzzySet,
    mode: Mode,
) -> Result<CheckResult, Error> {
    let carrier = ensure_total(algebra, set)?;
    let homog = is_homogeneous(set);
    if !homog.is_ok() {
        return Ok(homog);
    }
    // (i) mu(x+y) >= mu(x) /\ mu(y)
    for x in &carrier {
        for y in &carrier {
            let bound = set.get(x).meet(&set.get(y));
            let s = algebra.add(x, y);
            if !bound.le(&set.get(&s)) {
                return Ok(CheckResult::fail(
                    Witness::new("add")
                        .with_elements(vec![x.clone(), y.clone(), s.clone()])
                        .with_detail(format!(
                            "mu(x+y) = {} < {} = mu(x) /\\ mu(y)",
                            set.get(&s),
                            bound
                        )),
                ));
            }
        }
    }
    // (ii) mu(alpha x) >= mu(x)
    for x in &carrier {
        for alpha in algebra.field().scalars() {
            let s = algebra.scale(alpha, x);
            if !set.get(x).le(&set.get(&s)) {
                return Ok(CheckResult::fail(
                    Witness::new("scalar")
                        .with_elements(vec![x.clone(), s.clone()])
                        .with_scalar(alpha)
                        .with_detail(format!(
                            "mu(alpha x) = {} < {} = mu(x)",
                            set.get(&s),
                            set.get(x)
                        )),
                ));
            }
        }
    }
    // (iii) mu([x,y]) >= mu(x) /\ mu(y), or \/ for ideals
    for x in &carrier {
        for y in &carrier {
            let mx = set.get(x);
            let my = set.get(y);
            let bound = match mode {
                Mode::Subalgebra => mx.meet(&my),
                Mode::Ideal => mx.join(&my),
            };
            let b = algebra.bracket(x, y)?;
            if !bound.le(&set.get(&b)) {
                let op = match mode {
                    Mode::Subalgebra => "/\\",
                    Mode::Ideal => "\\/",
                };
                return Ok(CheckResult::fail(
                    Witness::new("bracket")
                        .with_elements(vec![x.clone(), y.clone(), b.clone()])
                        .with_detail(format!(
                            "mu([x,y]) = {} < {} = mu(x) {op} mu(y)",
                            set.get(&b),
                            bound
                        )),
                ));
            }
        }
    }
    Ok(CheckResult::ok())
}

/// Definition check with meet on the bracket condition. Returns
/// `NOT_HOMOGENEOUS` when the set fails the homogeneity hypothesis.
pub fn is_complex_fuzzy_subalgebra(
    algebra: &LieAlgebra,
    set: &ComplexFuzzySet,
) -> Result<CheckResult, Error> {
    check_complex_fuzzy(algebra, set, Mode::Subalgebra)
}

/// Same as the subalgebra check with join on the bracket condition.
pub fn is_complex_fuzzy_ideal(
    algebra: &LieAlgebra,
    set: &ComplexFuzzySet,
) -> Result<CheckResult, Error> {
    check_complex_fuzzy(algebra, set, Mode::Ideal)
}

/// The three negation-lemma clauses for a verified subalgebra set:
/// (i) `mu(-x) = mu(x)`, (ii) `mu(x-y) = mu(0)` forces `mu(x) = mu(y)`,
/// (iii) `mu(x) < mu(y)` forces `mu(x-y) = mu(x) = mu(y-x)`.
/// A failure here falsifies the library, not the input.
pub fn check_negation_lemma(
    algebra: &LieAlgebra,
    set: &ComplexFuzzySet,
) -> Result<CheckResult, Error> {
    if !is_complex_fuzzy_subalgebra(algebra, set)?.is_ok() {
        return Err(Error::HypothesisNotMet {
            theorem: "negation-lemma".into(),
            hypothesis: "the set is a complex fuzzy subalgebra".into(),
        });
    }
    let carrier = algebra.carrier();
    let at_zero = set.get(&algebra.zero());
    for x in &carrier {
        let nx = algebra.neg(x);
        if set.get(x) != set.get(&nx) {
            return Ok(CheckResult::fail(
                Witness::new("negation")
                    .with_elements(vec![x.clone(), nx])
                    .with_detail("mu(-x) != mu(x)"),
            ));
        }
    }
    for x in &carrier {
        for y in &carrier {
            let d = algebra.sub(x, y);
            if set.get(&d) == at_zero && set.get(x) != set.get(y) {
                return Ok(CheckResult::fail(
                    Witness::new("difference-at-top")
                        .with_elements(vec![x.clone(), y.clone()])
                        .with_detail("mu(x-y) = mu(0) but mu(x) != mu(y)"),
                ));
            }
        }
    }
    for x in &carrier {
        for y in &carrier {
            if set.get(x).lt(&set.get(y)) {
                let xy = algebra.sub(x, y);
                let yx = algebra.sub(y, x);
                if set.get(&xy) != set.get(x) || set.get(&yx) != set.get(x) {
                    return Ok(CheckResult::fail(
                        Witness::new("strict-difference")
                            .with_elements(vec![x.clone(), y.clone()])
                            .with_detail("mu(x) < mu(y) but mu(x-y), mu(y-x) differ from mu(x)"),
                    ));
                }
            }
        }
    }
    Ok(CheckResult::ok())
}

fn check_scalar_fuzzy(
    algebra: &LieAlgebra,
    values: &BTreeMap<Element, Rational>,
    mode: Mode,
    label: &str,
) -> Result<CheckResult, Error> {
    let carrier = algebra.carrier();
    if values.len() != carrier.len() || carrier.iter().any(|x| !values.contains_key(x)) {
        return Err(Error::CarrierMismatch);
    }
    let get = |x: &Element| values[x];
    for x in &carrier {
        for y in &carrier {
            let bound = get(x).min(get(y));
            let s = algebra.add(x, y);
            if get(&s) < bound {
                return Ok(CheckResult::fail(
                    Witness::new(format!("{label}-add"))
                        .with_elements(vec![x.clone(), y.clone(), s]),
                ));
            }
        }
    }
    for x in &carrier {
        for alpha in algebra.field().scalars() {
            let s = algebra.scale(alpha, x);
            if get(&s) < get(x) {
                return Ok(CheckResult::fail(
                    Witness::new(format!("{label}-scalar"))
                        .with_elements(vec![x.clone(), s])
                        .with_scalar(alpha),
                ));
            }
        }
    }
    for x in &carrier {
        for y in &carrier {
            let bound = match mode {
                Mode::Subalgebra => get(x).min(get(y)),
                Mode::Ideal => get(x).max(get(y)),
            };
            let b = algebra.bracket(x, y)?;
            if get(&b) < bound {
                return Ok(CheckResult::fail(
                    Witness::new(format!("{label}-bracket"))
                        .with_elements(vec![x.clone(), y.clone(), b]),
                ));
            }
        }
    }
    Ok(CheckResult::ok())
}

pub fn is_real_fuzzy_subalgebra(
    algebra: &LieAlgebra,
    set: &RealFuzzySet,
) -> Result<CheckResult, Error> {
    check_scalar_fuzzy(algebra, set.values(), Mode::Subalgebra, "real")
}

pub fn is_real_fuzzy_ideal(algebra: &LieAlgebra, set: &RealFuzzySet) -> Result<CheckResult, Error> {
    check_scalar_fuzzy(algebra, set.values(), Mode::Ideal, "real")
}

pub fn is_pi_fuzzy_subalgebra(
    algebra: &LieAlgebra,
    set: &PiFuzzySet,
) -> Result<CheckResult, Error> {
    check_scalar_fuzzy(algebra, set.values(), Mode::Subalgebra, "pi")
}

pub fn is_pi_fuzzy_ideal(algebra: &LieAlgebra, set: &PiFuzzySet) -> Result<CheckResult, Error> {
    check_scalar_fuzzy(algebra, set.values(), Mode::Ideal, "pi")
}

/// Decomposition biconditional: the complex predicate holds iff the
/// amplitude part passes the real fuzzy predicate and the phase part passes
/// the pi-fuzzy predicate - checked in both the subalgebra and the ideal
/// form. Requires a homogeneous input set.
pub fn check_decomposition_theorem(
    algebra: &LieAlgebra,
    set: &ComplexFuzzySet,
) -> Result<CheckResult, Error> {
    ensure_total(algebra, set)?;
    let homog = is_homogeneous(set);
    if !homog.is_ok() {
        return Ok(homog);
    }
    let (r_part, w_part) = decompose(set);
    for mode in [Mode::Subalgebra, Mode::Ideal] {
        let complex_ok = check_complex_fuzzy(algebra, set, mode)?.is_ok();
        let r_ok = check_scalar_fuzzy(algebra, r_part.values(), mode, "real")?.is_ok();
        let w_ok = check_scalar_fuzzy(algebra, w_part.values(), mode, "pi")?.is_ok();
        if complex_ok != (r_ok && w_ok) {
            return Ok(CheckResult::fail(
                Witness::new(format!("decomposition-{mode}")).with_detail(format!(
                    "complex side {complex_ok}, amplitude side {r_ok}, phase side {w_ok}"
                )),
            ));
        }
    }
    Ok(CheckResult::ok())
}

/// `U(mu, t) = {x | mu(x) >= t}` in the componentwise order.
pub fn upper_level(set: &ComplexFuzzySet, t: Membership) -> CrispSubset {
    CrispSubset::from_iter(
        set.values()
            .iter()
            .filter(|(_, m)| t.le(m))
            .map(|(x, _)| x.clone()),
    )
}

/// `U(mu^>, t) = {x | mu(x) > t}` with `>` read as `>= and !=` (the weakest
/// strictness consistent with the partial order on the disc).
pub fn strong_upper_level(set: &ComplexFuzzySet, t: Membership) -> CrispSubset {
    CrispSubset::from_iter(
        set.values()
            .iter()
            .filter(|(_, m)| t.lt(m))
            .map(|(x, _)| x.clone()),
    )
}

/// Distinct membership values sorted ascending. Reports an error when the
/// value set contains an incomparable pair (only possible on sets that are
/// not homogeneous).
pub fn image_values(set: &ComplexFuzzySet) -> Result<Vec<Membership>, Error> {
    let distinct: BTreeSet<Membership> = set.values().values().copied().collect();
    let mut values: Vec<Membership> = distinct.into_iter().collect();
    for (i, a) in values.iter().enumerate() {
        for b in values.iter().skip(i + 1) {
            if !a.le(b) && !b.le(a) {
                return Err(Error::NotHomogeneous);
            }
        }
    }
    // pairwise comparable, so sorting by (r, w) is the disc order
    values.sort();
    Ok(values)
}

/// Level-theorem biconditional: the fuzzy predicate holds iff every
/// (strong) upper level at `t` in the image is a crisp subalgebra/ideal.
pub fn check_level_theorem(
    algebra: &LieAlgebra,
    set: &ComplexFuzzySet,
    mode: Mode,
    strength: Strength,
) -> Result<CheckResult, Error> {
    ensure_total(algebra, set)?;
    let homog = is_homogeneous(set);
    if !homog.is_ok() {
        return Ok(homog);
    }
    let fuzzy_ok = check_complex_fuzzy(algebra, set, mode)?.is_ok();
    let mut levels_ok = true;
    let mut level_witness = None;
    for t in image_values(set)? {
        let level = match strength {
            Strength::Upper => upper_level(set, t),
            Strength::Strong => strong_upper_level(set, t),
        };
        let crisp = match mode {
            Mode::Subalgebra => is_crisp_subalgebra(algebra, &level),
            Mode::Ideal => is_crisp_ideal(algebra, &level),
        };
        if !crisp.is_ok() {
            levels_ok = false;
            level_witness = Some((t, crisp.witness));
            break;
        }
    }
    if fuzzy_ok == levels_ok {
        Ok(CheckResult::ok())
    } else {
        let detail = match level_witness {
            Some((t, w)) => format!(
                "fuzzy predicate {fuzzy_ok} but level at t = {t} fails: {:?}",
                w.map(|w| w.condition)
            ),
            None => format!("fuzzy predicate {fuzzy_ok} but every image level passes"),
        };
        Ok(CheckResult::fail(
            Witness::new(format!("level-{mode}-{strength}")).with_detail(detail),
        ))
    }
}

/// One of the four cuts `A_(alpha, beta)` selected by the strict flags:
/// amplitude `>= alpha` (or `>`), phase `>= beta` (or `>`).
pub fn level_cut(set: &ComplexFuzzySet, spec: &LevelSpec) -> CrispSubset {
    CrispSubset::from_iter(
        set.values()
            .iter()
            .filter(|(_, m)| {
                let r_ok = if spec.strict_r {
                    m.r() > spec.alpha
                } else {
                    m.r() >= spec.alpha
                };
                let w_ok = if spec.strict_w {
                    m.w_over_pi() > spec.beta_over_pi
                } else {
                    m.w_over_pi() >= spec.beta_over_pi
                };
                r_ok && w_ok
            })
            .map(|(x, _)| x.clone()),
    )
}

/// `mu_(A+B)(x) = sup over x = a + b of mu_A(a) /\ mu_B(b)`, the supremum
/// taken componentwise over all `p^n` decompositions.
pub fn fuzzy_sum(
    algebra: &LieAlgebra,
    a: &ComplexFuzzySet,
    b: &ComplexFuzzySet,
) -> Result<ComplexFuzzySet, Error> {
    let carrier = ensure_total(algebra, a)?;
    if !a.same_carrier(b) {
        return Err(Error::CarrierMismatch);
    }
    let mut values = BTreeMap::new();
    for x in &carrier {
        let mut best = Membership::zero();
        let mut first = true;
        for u in &carrier {
            let v = algebra.sub(x, u);
            let m = a.get(u).meet(&b.get(&v));
            best = if first { m } else { best.join(&m) };
            first = false;
        }
        values.insert(x.clone(), best);
    }
    ComplexFuzzySet::new(algebra, values)
}

/// Checks that the componentwise supremum in [`fuzzy_sum`] is attained by a
/// single decomposition at every point (it is, under mutual homogeneity;
/// the harness asserts this as a property rather than assuming it).
pub fn fuzzy_sum_attainment(
    algebra: &LieAlgebra,
    a: &ComplexFuzzySet,
    b: &ComplexFuzzySet,
) -> Result<CheckResult, Error> {
    let sum = fuzzy_sum(algebra, a, b)?;
    let carrier = algebra.carrier();
    for x in &carrier {
        let want = sum.get(x);
        let attained = carrier.iter().any(|u| {
            let v = algebra.sub(x, u);
            a.get(u).meet(&b.get(&v)) == want
        });
        if !attained {
            return Ok(CheckResult::fail(
                Witness::new("sum-attainment")
                    .with_elements(vec![x.clone()])
                    .with_detail(format!("componentwise sup {want} hit by no decomposition")),
            ));
        }
    }
    Ok(CheckResult::ok())
}

/// Sum-of-ideals theorem: for mutually homogeneous complex fuzzy ideals
/// `A`, `B`, the fuzzy sum is again a homogeneous complex fuzzy ideal.
/// Hypothesis failures are reported as errors naming the hypothesis; a FAIL
/// verdict on hypothesis-satisfying inputs falsifies the library.
pub fn check_sum_ideal_theorem(
    algebra: &LieAlgebra,
    a: &ComplexFuzzySet,
    b: &ComplexFuzzySet,
) -> Result<CheckResult, Error> {
    let theorem = "sum-ideal";
    if !is_complex_fuzzy_ideal(algebra, a)?.is_ok() {
        return Err(Error::HypothesisNotMet {
            theorem: theorem.into(),
            hypothesis: "A is a complex fuzzy ideal".into(),
        });
    }
    if !is_complex_fuzzy_ideal(algebra, b)?.is_ok() {
        return Err(Error::HypothesisNotMet {
            theorem: theorem.into(),
            hypothesis: "B is a complex fuzzy ideal".into(),
        });
    }
    if !is_mutually_homogeneous(a, b)?.is_ok() {
        return Err(Error::HypothesisNotMet {
            theorem: theorem.into(),
            hypothesis: "A is homogeneous with B".into(),
        });
    }
    let sum = fuzzy_sum(algebra, a, b)?;
    let result = is_complex_fuzzy_ideal(algebra, &sum)?;
    if result.verdict == Verdict::NotHomogeneous {
        return Ok(CheckResult::fail(
            Witness::new("sum-homogeneity")
                .with_detail("fuzzy sum of mutually homogeneous ideals is not homogeneous"),
        ));
    }
    Ok(result)
}

/// Intersection theorems, pairwise or for families: the meet of
/// hypothesis-satisfying, pairwise mutually homogeneous sets again
/// satisfies the predicate.
pub fn check_intersection_theorems(
    algebra: &LieAlgebra,
    sets: &[ComplexFuzzySet],
    mode: Mode,
) -> Result<CheckResult, Error> {
    if sets.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let theorem = format!("intersection-{mode}");
    for (i, s) in sets.iter().enumerate() {
        if !check_complex_fuzzy(algebra, s, mode)?.is_ok() {
            return Err(Error::HypothesisNotMet {
                theorem: theorem.clone(),
                hypothesis: format!("set #{i} passes the {mode} predicate"),
            });
        }
    }
    for (i, s) in sets.iter().enumerate() {
        for (j, t) in sets.iter().enumerate().skip(i + 1) {
            if !is_mutually_homogeneous(s, t)?.is_ok() {
                return Err(Error::HypothesisNotMet {
                    theorem: theorem.clone(),
                    hypothesis: format!("sets #{i} and #{j} are mutually homogeneous"),
                });
            }
        }
    }
    let meet = cfuzzy::intersect_family(sets)?;
    // a NOT_HOMOGENEOUS verdict here is itself a conclusion failure: the
    // theorem asserts the intersection is homogeneous
    check_complex_fuzzy(algebra, &meet, mode)
}

/// Materialize a fuzzy set from a chain: `mu(x)` is the value of the
/// innermost chain member containing `x`, and `(0, 0)` outside the chain.
/// The chain must be strictly nested, every member must pass the crisp
/// predicate for `mode`, and the values must strictly decrease in both
/// components (which also guarantees the output is homogeneous).
pub fn generate_from_chain(
    algebra: &LieAlgebra,
    spec: &ChainSpec,
    mode: Mode,
) -> Result<ComplexFuzzySet, Error> {
    if spec.chain.is_empty() {
        return Err(Error::InvalidChain("empty chain".into()));
    }
    if spec.chain.len() != spec.values.len() {
        return Err(Error::InvalidChain(format!(
            "{} subsets but {} values",
            spec.chain.len(),
            spec.values.len()
        )));
    }
    let carrier: BTreeSet<Element> = algebra.carrier().into_iter().collect();
    let carrier_set = CrispSubset::new(carrier.clone());
    for (i, s) in spec.chain.iter().enumerate() {
        if !s.is_subset(&carrier_set) {
            return Err(Error::InvalidChain(format!("S_{i} is not inside the carrier")));
        }
        if i + 1 < spec.chain.len() {
            let next = &spec.chain[i + 1];
            if !(s.is_subset(next) && s.len() < next.len()) {
                return Err(Error::InvalidChain(format!(
                    "S_{i} is not a proper subset of S_{}",
                    i + 1
                )));
            }
        }
        let crisp = match mode {
            Mode::Subalgebra => is_crisp_subalgebra(algebra, s),
            Mode::Ideal => is_crisp_ideal(algebra, s),
        };
        if !crisp.is_ok() {
            return Err(Error::InvalidChain(format!(
                "S_{i} fails the crisp {mode} check: {crisp}"
            )));
        }
    }
    // Strict decrease in both components keeps the output homogeneous; the
    // implicit trailing (0,0) participates unless the chain ends at the
    // whole carrier.
    let mut seq: Vec<Membership> = spec.values.clone();
    if spec.chain.last().unwrap().len() < carrier.len() {
        seq.push(Membership::zero());
    }
    for pair in seq.windows(2) {
        let (hi, lo) = (pair[0], pair[1]);
        if !(hi.r() > lo.r() && hi.w_over_pi() > lo.w_over_pi()) {
            return Err(Error::InvalidChain(format!(
                "values must strictly decrease in both components: {hi} then {lo}"
            )));
        }
    }
    let values: BTreeMap<Element, Membership> = carrier
        .into_iter()
        .map(|x| {
            let m = spec
                .chain
                .iter()
                .position(|s| s.contains(&x))
                .map(|i| spec.values[i])
                .unwrap_or_else(Membership::zero);
            (x, m)
        })
        .collect();
    ComplexFuzzySet::new(algebra, values)
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::lie_core::make_catalog_algebra;

    fn m(rn: i64, rd: i64, wn: i64, wd: i64) -> Membership {
        Membership::from_ints(rn, rd, wn, wd).unwrap()
    }

    fn cross3() -> LieAlgebra {
        make_catalog_algebra("cross3", 5).unwrap()
    }

    fn e1_line(algebra: &LieAlgebra) -> CrispSubset {
        CrispSubset::from_iter((0..algebra.field().modulus()).map(|t| {
            let mut coords = vec![0; algebra.dim()];
            coords[0] = t;
            Element::new(coords)
        }))
    }

    /// The paper's example set, built through the chain generator.
    fn paper_example(algebra: &LieAlgebra) -> ComplexFuzzySet {
        let spec = ChainSpec {
            chain: vec![
                CrispSubset::from_iter([algebra.zero()]),
                e1_line(algebra),
                CrispSubset::from_iter(algebra.carrier()),
            ],
            values: vec![m(9, 10, 3, 2), m(3, 5, 1, 2), Membership::zero()],
        };
        generate_from_chain(algebra, &spec, Mode::Subalgebra).unwrap()
    }

    #[test]
    fn paper_example_is_subalgebra_but_not_ideal() {
        let a = cross3();
        let set = paper_example(&a);
        assert!(is_complex_fuzzy_subalgebra(&a, &set).unwrap().is_ok());
        let res = is_complex_fuzzy_ideal(&a, &set).unwrap();
        assert_eq!(res.verdict, Verdict::Fail);
        let w = res.witness.unwrap();
        assert_eq!(w.condition, "bracket");
        // the paper's own counterexample: [(1,0,0),(1,1,1)] = (0,4,1)
        let x = Element::new(vec![1, 0, 0]);
        let y = Element::new(vec![1, 1, 1]);
        let b = a.bracket(&x, &y).unwrap();
        assert_eq!(b, Element::new(vec![0, 4, 1]));
        assert!(!set.get(&x).join(&set.get(&y)).le(&set.get(&b)));
    }

    #[test]
    fn constant_sets_pass_both_predicates() {
        let a = cross3();
        let c = ComplexFuzzySet::constant(&a, m(1, 2, 1, 3));
        assert!(is_complex_fuzzy_subalgebra(&a, &c).unwrap().is_ok());
        assert!(is_complex_fuzzy_ideal(&a, &c).unwrap().is_ok());
    }

    #[test]
    fn isolated_bump_fails_the_scalar_condition() {
        let a = cross3();
        let zero = ComplexFuzzySet::constant(&a, Membership::zero());
        let set = zero
            .with_value(&Element::new(vec![1, 0, 0]), m(3, 5, 1, 2))
            .unwrap();
        let res = is_complex_fuzzy_subalgebra(&a, &set).unwrap();
        assert_eq!(res.verdict, Verdict::Fail);
    }

    #[test]
    fn non_homogeneous_input_is_flagged() {
        let a = make_catalog_algebra("abelian-1", 2).unwrap();
        let zero = ComplexFuzzySet::constant(&a, Membership::zero());
        let set = zero
            .with_value(&Element::new(vec![0]), m(1, 2, 0, 1))
            .unwrap()
            .with_value(&Element::new(vec![1]), m(0, 1, 1, 2))
            .unwrap();
        let res = is_complex_fuzzy_subalgebra(&a, &set).unwrap();
        assert_eq!(res.verdict, Verdict::NotHomogeneous);
    }

    #[test]
    fn negation_lemma_holds_on_the_paper_example() {
        let a = cross3();
        let set = paper_example(&a);
        // mu(-e1) = mu(4 e1) = mu(e1)
        assert_eq!(
            set.get(&Element::new(vec![4, 0, 0])),
            set.get(&Element::new(vec![1, 0, 0]))
        );
        assert!(check_negation_lemma(&a, &set).unwrap().is_ok());
        let c = ComplexFuzzySet::constant(&a, m(1, 2, 1, 3));
        assert!(check_negation_lemma(&a, &c).unwrap().is_ok());
    }

    #[test]
    fn negation_lemma_requires_a_subalgebra() {
        let a = cross3();
        let zero = ComplexFuzzySet::constant(&a, Membership::zero());
        let set = zero
            .with_value(&Element::new(vec![1, 0, 0]), m(3, 5, 1, 2))
            .unwrap();
        assert!(matches!(
            check_negation_lemma(&a, &set),
            Err(Error::HypothesisNotMet { .. })
        ));
    }

    #[test]
    fn decomposition_theorem_on_paper_example_and_perturbations() {
        let a = cross3();
        let set = paper_example(&a);
        assert!(check_decomposition_theorem(&a, &set).unwrap().is_ok());
        let c = ComplexFuzzySet::constant(&a, m(1, 2, 1, 3));
        assert!(check_decomposition_theorem(&a, &c).unwrap().is_ok());
        // a perturbed (invalid) homogeneous set still satisfies the biconditional
        let broken = set
            .with_value(&Element::new(vec![0, 1, 0]), m(3, 5, 1, 2))
            .unwrap();
        assert!(check_decomposition_theorem(&a, &broken).unwrap().is_ok());
    }

    #[test]
    fn real_and_pi_parts_of_the_paper_example_pass() {
        let a = cross3();
        let set = paper_example(&a);
        let (r, w) = decompose(&set);
        assert!(is_real_fuzzy_subalgebra(&a, &r).unwrap().is_ok());
        assert!(is_pi_fuzzy_subalgebra(&a, &w).unwrap().is_ok());
        assert_eq!(
            is_real_fuzzy_ideal(&a, &r).unwrap().verdict,
            Verdict::Fail
        );
    }

    #[test]
    fn upper_levels_of_the_paper_example() {
        let a = cross3();
        let set = paper_example(&a);
        let level = upper_level(&set, m(3, 5, 1, 2));
        assert_eq!(level.len(), 5); // zero plus the four nonzero e1-line points
        assert!(level.contains(&a.zero()));
        assert!(level.contains(&Element::new(vec![4, 0, 0])));
        let everything = upper_level(&set, Membership::zero());
        assert_eq!(everything.len(), 125);
        let strong = strong_upper_level(&set, m(3, 5, 1, 2));
        assert_eq!(strong.members().iter().collect::<Vec<_>>(), vec![&a.zero()]);
    }

    #[test]
    fn image_values_of_the_paper_example() {
        let a = cross3();
        let set = paper_example(&a);
        assert_eq!(
            image_values(&set).unwrap(),
            vec![Membership::zero(), m(3, 5, 1, 2), m(9, 10, 3, 2)]
        );
        let c = ComplexFuzzySet::constant(&a, m(1, 2, 1, 3));
        assert_eq!(image_values(&c).unwrap().len(), 1);
    }

    #[test]
    fn image_values_reject_incomparable_sets() {
        let a = make_catalog_algebra("abelian-1", 2).unwrap();
        let zero = ComplexFuzzySet::constant(&a, Membership::zero());
        let set = zero
            .with_value(&Element::new(vec![0]), m(1, 2, 0, 1))
            .unwrap()
            .with_value(&Element::new(vec![1]), m(0, 1, 1, 2))
            .unwrap();
        assert!(matches!(image_values(&set), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn level_theorem_biconditional_on_paper_example() {
        let a = cross3();
        let set = paper_example(&a);
        for strength in [Strength::Upper, Strength::Strong] {
            assert!(check_level_theorem(&a, &set, Mode::Subalgebra, strength)
                .unwrap()
                .is_ok());
            // ideal: fuzzy predicate fails AND the e1-line level is not an ideal
            assert!(check_level_theorem(&a, &set, Mode::Ideal, strength)
                .unwrap()
                .is_ok());
        }
        assert_eq!(
            is_crisp_ideal(&a, &upper_level(&set, m(3, 5, 1, 2))).verdict,
            Verdict::Fail
        );
    }

    #[test]
    fn level_cuts_of_the_paper_example() {
        let a = cross3();
        let set = paper_example(&a);
        let relaxed = LevelSpec::new(Rational::new(3, 5), Rational::new(1, 2), false, false).unwrap();
        assert_eq!(level_cut(&set, &relaxed), upper_level(&set, m(3, 5, 1, 2)));
        let strict = LevelSpec::new(Rational::zero(), Rational::zero(), true, true).unwrap();
        assert_eq!(level_cut(&set, &strict).len(), 5);
        let top = LevelSpec::new(Rational::from_integer(1), Rational::from_integer(2), false, false)
            .unwrap();
        assert!(level_cut(&set, &top).is_empty());
    }

    #[test]
    fn fuzzy_sum_examples() {
        let a = cross3();
        // A on the e1-line at (0.8, pi), B on the e2-line at (0.5, pi/2)
        let zero = ComplexFuzzySet::constant(&a, Membership::zero());
        let mut set_a = zero.clone();
        let mut set_b = zero.clone();
        for t in 0..5 {
            set_a = set_a
                .with_value(&Element::new(vec![t, 0, 0]), m(4, 5, 1, 1))
                .unwrap();
            set_b = set_b
                .with_value(&Element::new(vec![0, t, 0]), m(1, 2, 1, 2))
                .unwrap();
        }
        let sum = fuzzy_sum(&a, &set_a, &set_b).unwrap();
        assert_eq!(sum.get(&Element::new(vec![1, 1, 0])), m(1, 2, 1, 2));
        // indicator of {0} at top: x = x + 0 dominates everything
        let mut indicator = zero.clone();
        indicator = indicator.with_value(&a.zero(), Membership::top()).unwrap();
        let id_sum = fuzzy_sum(&a, &set_a, &indicator).unwrap();
        assert_eq!(id_sum, set_a);
        // mu_(A+B)(0) >= mu_A(0) /\ mu_B(0)
        assert!(set_a
            .get(&a.zero())
            .meet(&set_b.get(&a.zero()))
            .le(&sum.get(&a.zero())));
    }

    #[test]
    fn fuzzy_sum_is_commutative() {
        let a = make_catalog_algebra("abelian-2", 3).unwrap();
        let zero = ComplexFuzzySet::constant(&a, Membership::zero());
        let set_a = zero
            .with_value(&Element::new(vec![1, 0]), m(4, 5, 1, 1))
            .unwrap();
        let set_b = zero
            .with_value(&Element::new(vec![0, 1]), m(1, 2, 1, 2))
            .unwrap();
        assert_eq!(
            fuzzy_sum(&a, &set_a, &set_b).unwrap(),
            fuzzy_sum(&a, &set_b, &set_a).unwrap()
        );
    }

    #[test]
    fn sum_ideal_theorem_on_constants_and_heisenberg() {
        let a = make_catalog_algebra("heisenberg3", 3).unwrap();
        let c1 = ComplexFuzzySet::constant(&a, m(1, 2, 1, 3));
        assert!(check_sum_ideal_theorem(&a, &c1, &c1).unwrap().is_ok());
        // A supported on the center span{e3}, B on span{e2, e3}
        let center = CrispSubset::from_iter((0..3).map(|t| Element::new(vec![0, 0, t])));
        let plane = CrispSubset::from_iter(
            (0..3).flat_map(|s| (0..3).map(move |t| Element::new(vec![0, s, t]))),
        );
        let chain_a = ChainSpec {
            chain: vec![center],
            values: vec![m(4, 5, 3, 2)],
        };
        let chain_b = ChainSpec {
            chain: vec![plane],
            values: vec![m(1, 2, 1, 2)],
        };
        let set_a = generate_from_chain(&a, &chain_a, Mode::Ideal).unwrap();
        let set_b = generate_from_chain(&a, &chain_b, Mode::Ideal).unwrap();
        assert!(check_sum_ideal_theorem(&a, &set_a, &set_b).unwrap().is_ok());
        assert!(fuzzy_sum_attainment(&a, &set_a, &set_b).unwrap().is_ok());
    }

    #[test]
    fn sum_ideal_theorem_rejects_non_ideals() {
        let a = cross3();
        let set = paper_example(&a); // subalgebra, not an ideal
        assert!(matches!(
            check_sum_ideal_theorem(&a, &set, &set),
            Err(Error::HypothesisNotMet { .. })
        ));
    }

    #[test]
    fn intersection_theorems() {
        let a = cross3();
        let set = paper_example(&a);
        assert!(
            check_intersection_theorems(&a, &[set.clone(), set.clone()], Mode::Subalgebra)
                .unwrap()
                .is_ok()
        );
        // family of constants with pairwise comparable values
        let family: Vec<ComplexFuzzySet> = [m(1, 2, 1, 2), m(2, 3, 1, 1), m(3, 4, 3, 2), m(1, 4, 1, 4)]
            .into_iter()
            .map(|v| ComplexFuzzySet::constant(&a, v))
            .collect();
        assert!(check_intersection_theorems(&a, &family, Mode::Ideal)
            .unwrap()
            .is_ok());
        assert!(matches!(
            check_intersection_theorems(&a, &[], Mode::Subalgebra),
            Err(Error::EmptyFamily)
        ));
    }

    #[test]
    fn chain_generator_reproduces_the_paper_example_and_validates() {
        let a = cross3();
        let set = paper_example(&a);
        assert_eq!(set.get(&a.zero()), m(9, 10, 3, 2));
        assert_eq!(set.get(&Element::new(vec![2, 0, 0])), m(3, 5, 1, 2));
        assert_eq!(set.get(&Element::new(vec![0, 1, 0])), Membership::zero());
        // single-step chain over the whole carrier: constant set
        let whole = ChainSpec {
            chain: vec![CrispSubset::from_iter(a.carrier())],
            values: vec![m(1, 2, 1, 2)],
        };
        let c = generate_from_chain(&a, &whole, Mode::Subalgebra).unwrap();
        assert_eq!(c, ComplexFuzzySet::constant(&a, m(1, 2, 1, 2)));
        // invalid chains are rejected
        let not_nested = ChainSpec {
            chain: vec![e1_line(&a), CrispSubset::from_iter([a.zero()])],
            values: vec![m(9, 10, 3, 2), m(3, 5, 1, 2)],
        };
        assert!(matches!(
            generate_from_chain(&a, &not_nested, Mode::Subalgebra),
            Err(Error::InvalidChain(_))
        ));
        let not_decreasing = ChainSpec {
            chain: vec![CrispSubset::from_iter([a.zero()]), e1_line(&a)],
            values: vec![m(3, 5, 1, 2), m(3, 5, 1, 2)],
        };
        assert!(matches!(
            generate_from_chain(&a, &not_decreasing, Mode::Subalgebra),
            Err(Error::InvalidChain(_))
        ));
        let not_crisp = ChainSpec {
            chain: vec![CrispSubset::from_iter([Element::new(vec![1, 0, 0])])],
            values: vec![m(3, 5, 1, 2)],
        };
        assert!(matches!(
            generate_from_chain(&a, &not_crisp, Mode::Subalgebra),
            Err(Error::InvalidChain(_))
        ));
    }

    #[test]
    fn ideal_implies_subalgebra() {
        let a = make_catalog_algebra("heisenberg3", 3).unwrap();
        let center = CrispSubset::from_iter((0..3).map(|t| Element::new(vec![0, 0, t])));
        let chain = ChainSpec {
            chain: vec![center],
            values: vec![m(4, 5, 3, 2)],
        };
        let set = generate_from_chain(&a, &chain, Mode::Ideal).unwrap();
        assert!(is_complex_fuzzy_ideal(&a, &set).unwrap().is_ok());
        assert!(is_complex_fuzzy_subalgebra(&a, &set).unwrap().is_ok());
    }

    #[test]
    fn antitone_levels() {
        let a = cross3();
        let set = paper_example(&a);
        let low = upper_level(&set, m(3, 5, 1, 2));
        let high = upper_level(&set, m(9, 10, 3, 2));
        assert!(high.is_subset(&low));
    }
}
