//! Exact unit-disc membership values and complex fuzzy sets.
//!
//! A membership is a pair `(r, w)` with `r` rational in `[0, 1]` and `w` a
//! rational multiple of pi in `[0, 2pi]`, stored as its coefficient over pi
//! so that values like `3pi/2` stay exact. The partial order, meet, and join
//! are componentwise; every theorem in the crate is an order statement over
//! these values, so there is no floating point anywhere.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::check::{CheckResult, Witness};
use crate::error::Error;
use crate::lie_core::{Element, LieAlgebra};
use crate::Rational;

/// Parse `"num/den"` (or a bare integer) into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::BadRational(s.to_string());
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok(Rational::new(n, d))
    } else {
        let n: i64 = s.parse().map_err(|_| bad())?;
        Ok(Rational::from_integer(n))
    }
}

/// Render a rational as `"num/den"`, denominator always present.
pub fn rational_string(q: Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Serde adapter: rationals travel as `"num/den"` strings in every file
/// format this crate writes.
pub mod ratio_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{parse_rational, rational_string};
    use crate::Rational;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_string(*q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Result of comparing two memberships under the componentwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// An exact point of the closed unit disc: amplitude `r` in `[0, 1]` and
/// phase `w = w_over_pi * pi` with `w_over_pi` in `[0, 2]`. The endpoint
/// `w = 2pi` is distinct from `w = 0`; the phase interval is ordered, not
/// circular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Membership {
    #[serde(with = "ratio_serde")]
    r: Rational,
    #[serde(with = "ratio_serde")]
    w_over_pi: Rational,
}

impl Membership {
    pub fn new(r: Rational, w_over_pi: Rational) -> Result<Self, Error> {
        let zero = Rational::zero();
        let one = Rational::from_integer(1);
        let two = Rational::from_integer(2);
        if r < zero || r > one {
            return Err(Error::MembershipOutOfRange(format!(
                "r = {} outside [0, 1]",
                rational_string(r)
            )));
        }
        if w_over_pi < zero || w_over_pi > two {
            return Err(Error::MembershipOutOfRange(format!(
                "w_over_pi = {} outside [0, 2]",
                rational_string(w_over_pi)
            )));
        }
        Ok(Membership { r, w_over_pi })
    }

    pub fn from_ints(r_num: i64, r_den: i64, w_num: i64, w_den: i64) -> Result<Self, Error> {
        Membership::new(Rational::new(r_num, r_den), Rational::new(w_num, w_den))
    }

    pub fn zero() -> Self {
        Membership {
            r: Rational::zero(),
            w_over_pi: Rational::zero(),
        }
    }

    /// The top of the disc order: `1 * e^(2pi i)`.
    pub fn top() -> Self {
        Membership {
            r: Rational::from_integer(1),
            w_over_pi: Rational::from_integer(2),
        }
    }

    pub fn r(&self) -> Rational {
        self.r
    }

    pub fn w_over_pi(&self) -> Rational {
        self.w_over_pi
    }

    pub fn cmp_membership(&self, other: &Membership) -> MembershipOrder {
        use std::cmp::Ordering::*;
        match (self.r.cmp(&other.r), self.w_over_pi.cmp(&other.w_over_pi)) {
            (Equal, Equal) => MembershipOrder::Equal,
            (Less | Equal, Less | Equal) => MembershipOrder::Less,
            (Greater | Equal, Greater | Equal) => MembershipOrder::Greater,
            _ => MembershipOrder::Incomparable,
        }
    }

    /// `self <= other` in the componentwise order.
    pub fn le(&self, other: &Membership) -> bool {
        self.r <= other.r && self.w_over_pi <= other.w_over_pi
    }

    /// Strict order on the disc: `<=` and not equal.
    pub fn lt(&self, other: &Membership) -> bool {
        self.le(other) && self != other
    }

    pub fn meet(&self, other: &Membership) -> Membership {
        Membership {
            r: self.r.min(other.r),
            w_over_pi: self.w_over_pi.min(other.w_over_pi),
        }
    }

    pub fn join(&self, other: &Membership) -> Membership {
        Membership {
            r: self.r.max(other.r),
            w_over_pi: self.w_over_pi.max(other.w_over_pi),
        }
    }
}

impl std::fmt::Display for Membership {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}*e^(i {} pi)",
            rational_string(self.r),
            rational_string(self.w_over_pi)
        )
    }
}

/// Total finite mapping from a carrier to memberships.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexFuzzySet {
    values: BTreeMap<Element, Membership>,
}

impl ComplexFuzzySet {
    /// Build a set total on `algebra`'s carrier; rejects missing or foreign
    /// elements.
    pub fn new(
        algebra: &LieAlgebra,
        values: BTreeMap<Element, Membership>,
    ) -> Result<Self, Error> {
        let carrier = algebra.carrier();
        if values.len() != carrier.len() {
            return Err(Error::NotTotal(format!(
                "{} values for a carrier of {}",
                values.len(),
                carrier.len()
            )));
        }
        for x in &carrier {
            if !values.contains_key(x) {
                return Err(Error::NotTotal(format!("missing element {x}")));
            }
        }
        Ok(ComplexFuzzySet { values })
    }

    pub fn constant(algebra: &LieAlgebra, m: Membership) -> Self {
        ComplexFuzzySet {
            values: algebra.carrier().into_iter().map(|x| (x, m)).collect(),
        }
    }

    /// Build from a default value plus exceptions, the sparse form scenario
    /// files use.
    pub fn from_sparse(
        algebra: &LieAlgebra,
        default: Membership,
        entries: &[(Element, Membership)],
    ) -> Result<Self, Error> {
        let mut values: BTreeMap<Element, Membership> = algebra
            .carrier()
            .into_iter()
            .map(|x| (x, default))
            .collect();
        for (x, m) in entries {
            if !values.contains_key(x) {
                return Err(Error::NotTotal(format!("entry element {x} is not in the carrier")));
            }
            values.insert(x.clone(), *m);
        }
        Ok(ComplexFuzzySet { values })
    }

    pub fn get(&self, x: &Element) -> Membership {
        *self
            .values
            .get(x)
            .unwrap_or_else(|| panic!("element {x} outside the set's carrier"))
    }

    pub fn values(&self) -> &BTreeMap<Element, Membership> {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn same_carrier(&self, other: &ComplexFuzzySet) -> bool {
        self.values.len() == other.values.len()
            && self.values.keys().zip(other.values.keys()).all(|(a, b)| a == b)
    }

    /// Replace the value at one element; the element must already belong to
    /// the carrier.
    pub fn with_value(&self, x: &Element, m: Membership) -> Result<Self, Error> {
        if !self.values.contains_key(x) {
            return Err(Error::NotTotal(format!("element {x} is not in the carrier")));
        }
        let mut values = self.values.clone();
        values.insert(x.clone(), m);
        Ok(ComplexFuzzySet { values })
    }
}

/// Total mapping to rationals in `[0, 1]` (the amplitude part).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealFuzzySet {
    values: BTreeMap<Element, Rational>,
}

impl RealFuzzySet {
    pub fn new(algebra: &LieAlgebra, values: BTreeMap<Element, Rational>) -> Result<Self, Error> {
        let zero = Rational::zero();
        let one = Rational::from_integer(1);
        for (x, v) in &values {
            if *v < zero || *v > one {
                return Err(Error::MembershipOutOfRange(format!(
                    "value {} at {x} outside [0, 1]",
                    rational_string(*v)
                )));
            }
        }
        let carrier = algebra.carrier();
        if values.len() != carrier.len() || carrier.iter().any(|x| !values.contains_key(x)) {
            return Err(Error::NotTotal("real fuzzy set misses carrier elements".into()));
        }
        Ok(RealFuzzySet { values })
    }

    pub fn get(&self, x: &Element) -> Rational {
        *self.values.get(x).expect("element outside the carrier")
    }

    pub fn values(&self) -> &BTreeMap<Element, Rational> {
        &self.values
    }
}

/// Total mapping to `[0, 2pi]`, stored as the coefficient over pi.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiFuzzySet {
    values: BTreeMap<Element, Rational>,
}

impl PiFuzzySet {
    pub fn new(algebra: &LieAlgebra, values: BTreeMap<Element, Rational>) -> Result<Self, Error> {
        let zero = Rational::zero();
        let two = Rational::from_integer(2);
        for (x, v) in &values {
            if *v < zero || *v > two {
                return Err(Error::MembershipOutOfRange(format!(
                    "value {} pi at {x} outside [0, 2pi]",
                    rational_string(*v)
                )));
            }
        }
        let carrier = algebra.carrier();
        if values.len() != carrier.len() || carrier.iter().any(|x| !values.contains_key(x)) {
            return Err(Error::NotTotal("pi-fuzzy set misses carrier elements".into()));
        }
        Ok(PiFuzzySet { values })
    }

    pub fn get(&self, x: &Element) -> Rational {
        *self.values.get(x).expect("element outside the carrier")
    }

    pub fn values(&self) -> &BTreeMap<Element, Rational> {
        &self.values
    }
}

/// OK iff the amplitude and phase orders agree on every pair:
/// `r(x) <= r(y)` iff `w(x) <= w(y)`.
pub fn is_homogeneous(set: &ComplexFuzzySet) -> CheckResult {
    for (x, mx) in set.values() {
        for (y, my) in set.values() {
            if (mx.r() <= my.r()) != (mx.w_over_pi() <= my.w_over_pi()) {
                return CheckResult::not_homogeneous(
                    Witness::new("homogeneity")
                        .with_elements(vec![x.clone(), y.clone()])
                        .with_detail(format!("mu(x) = {mx}, mu(y) = {my}")),
                );
            }
        }
    }
    CheckResult::ok()
}

/// OK iff `r_A(x) <= r_B(y)` iff `w_A(x) <= w_B(y)` over all pairs.
pub fn is_mutually_homogeneous(a: &ComplexFuzzySet, b: &ComplexFuzzySet) -> Result<CheckResult, Error> {
    if !a.same_carrier(b) {
        return Err(Error::CarrierMismatch);
    }
    for (x, mx) in a.values() {
        for (y, my) in b.values() {
            if (mx.r() <= my.r()) != (mx.w_over_pi() <= my.w_over_pi()) {
                return Ok(CheckResult::not_homogeneous(
                    Witness::new("mutual-homogeneity")
                        .with_elements(vec![x.clone(), y.clone()])
                        .with_detail(format!("mu_A(x) = {mx}, mu_B(y) = {my}")),
                ));
            }
        }
    }
    Ok(CheckResult::ok())
}

/// Project a complex fuzzy set onto its amplitude and phase parts.
pub fn decompose(set: &ComplexFuzzySet) -> (RealFuzzySet, PiFuzzySet) {
    let r_values = set.values().iter().map(|(x, m)| (x.clone(), m.r())).collect();
    let w_values = set
        .values()
        .iter()
        .map(|(x, m)| (x.clone(), m.w_over_pi()))
        .collect();
    (
        RealFuzzySet { values: r_values },
        PiFuzzySet { values: w_values },
    )
}

/// Inverse of [`decompose`]; the two parts must share a carrier.
pub fn recompose(r_part: &RealFuzzySet, w_part: &PiFuzzySet) -> Result<ComplexFuzzySet, Error> {
    if r_part.values.len() != w_part.values.len()
        || r_part.values.keys().zip(w_part.values.keys()).any(|(a, b)| a != b)
    {
        return Err(Error::CarrierMismatch);
    }
    let values = r_part
        .values
        .iter()
        .map(|(x, &r)| {
            let w = w_part.get(x);
            Membership::new(r, w).map(|m| (x.clone(), m))
        })
        .collect::<Result<BTreeMap<_, _>, _>>()?;
    Ok(ComplexFuzzySet { values })
}

/// `gamma = 2 pi mu`, i.e. the stored pi-coefficient is `2 mu`.
pub fn to_pi_fuzzy(f: &RealFuzzySet) -> PiFuzzySet {
    PiFuzzySet {
        values: f
            .values
            .iter()
            .map(|(x, &v)| (x.clone(), v * Rational::from_integer(2)))
            .collect(),
    }
}

/// Pointwise meet of two sets on a shared carrier.
pub fn intersect(a: &ComplexFuzzySet, b: &ComplexFuzzySet) -> Result<ComplexFuzzySet, Error> {
    if !a.same_carrier(b) {
        return Err(Error::CarrierMismatch);
    }
    let values = a
        .values()
        .iter()
        .map(|(x, ma)| (x.clone(), ma.meet(&b.get(x))))
        .collect();
    Ok(ComplexFuzzySet { values })
}

/// Fold of [`intersect`] over a non-empty family; order-independent.
pub fn intersect_family(sets: &[ComplexFuzzySet]) -> Result<ComplexFuzzySet, Error> {
    let (first, rest) = sets.split_first().ok_or(Error::EmptyFamily)?;
    let mut acc = first.clone();
    for s in rest {
        acc = intersect(&acc, s)?;
    }
    Ok(acc)
}
