//! Scenario files: named algebras, sparse fuzzy sets, homs, and optional
//! checks, stored as JSON. Loading validates every definition; a scenario
//! that loads is safe to feed to any operation in the crate.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cfuzzy::{parse_rational, rational_string, ComplexFuzzySet, Membership};
use crate::error::Error;
use crate::homs::validate_hom;
use crate::lie_core::{Element, LieAlgebra, LieHom};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDef {
    pub name: String,
    pub field: u32,
    pub dim: usize,
    pub constants: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MembershipDef {
    pub r: String,
    pub w_over_pi: String,
}

impl MembershipDef {
    pub fn to_membership(&self) -> Result<Membership, Error> {
        Membership::new(parse_rational(&self.r)?, parse_rational(&self.w_over_pi)?)
    }

    pub fn from_membership(m: Membership) -> Self {
        MembershipDef {
            r: rational_string(m.r()),
            w_over_pi: rational_string(m.w_over_pi()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntryDef {
    pub element: Vec<i64>,
    pub r: String,
    pub w_over_pi: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FuzzySetDef {
    pub name: String,
    pub algebra: String,
    pub default: MembershipDef,
    #[serde(default)]
    pub entries: Vec<EntryDef>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomDef {
    pub name: String,
    pub source: String,
    pub target: String,
    /// Row-major, `target.dim * source.dim` entries reduced mod p.
    pub matrix: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckDef {
    pub op: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<String>,
}

/// On-disk shape of a scenario.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ScenarioFile {
    #[serde(default)]
    pub algebras: Vec<AlgebraDef>,
    #[serde(default)]
    pub fuzzy_sets: Vec<FuzzySetDef>,
    #[serde(default)]
    pub homs: Vec<HomDef>,
    #[serde(default)]
    pub checks: Vec<CheckDef>,
}

/// A fully validated scenario with every name resolved.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub algebras: BTreeMap<String, LieAlgebra>,
    pub fuzzy_sets: BTreeMap<String, (String, ComplexFuzzySet)>,
    pub homs: BTreeMap<String, LieHom>,
    pub checks: Vec<CheckDef>,
}

impl Scenario {
    pub fn algebra(&self, name: &str) -> Result<&LieAlgebra, Error> {
        self.algebras
            .get(name)
            .ok_or_else(|| Error::UnresolvedName(name.to_string()))
    }

    /// Returns the fuzzy set and the algebra it lives on.
    pub fn fuzzy_set(&self, name: &str) -> Result<(&LieAlgebra, &ComplexFuzzySet), Error> {
        let (algebra_name, set) = self
            .fuzzy_sets
            .get(name)
            .ok_or_else(|| Error::UnresolvedName(name.to_string()))?;
        Ok((self.algebra(algebra_name)?, set))
    }

    pub fn hom(&self, name: &str) -> Result<&LieHom, Error> {
        self.homs
            .get(name)
            .ok_or_else(|| Error::UnresolvedName(name.to_string()))
    }
}

fn scenario_err(context: &str, message: impl std::fmt::Display) -> Error {
    Error::Scenario {
        context: context.to_string(),
        message: message.to_string(),
    }
}

/// Validate a parsed scenario file into resolved values.
pub fn resolve_scenario(file: &ScenarioFile) -> Result<Scenario, Error> {
    let mut algebras = BTreeMap::new();
    for def in &file.algebras {
        let ctx = format!("algebra {:?}", def.name);
        let algebra = LieAlgebra::new(&def.name, def.field, def.dim, &def.constants)
            .map_err(|e| scenario_err(&ctx, e))?;
        if algebras.insert(def.name.clone(), algebra).is_some() {
            return Err(scenario_err(&ctx, "duplicate name"));
        }
    }
    let mut fuzzy_sets = BTreeMap::new();
    for def in &file.fuzzy_sets {
        let ctx = format!("fuzzy set {:?}", def.name);
        let algebra = algebras
            .get(&def.algebra)
            .ok_or_else(|| scenario_err(&ctx, format!("unknown algebra {:?}", def.algebra)))?;
        let default = def.default.to_membership().map_err(|e| scenario_err(&ctx, e))?;
        let entries = def
            .entries
            .iter()
            .map(|e| {
                let coords: Vec<u32> = e
                    .element
                    .iter()
                    .map(|&v| algebra.field().reduce(v))
                    .collect();
                let m = MembershipDef {
                    r: e.r.clone(),
                    w_over_pi: e.w_over_pi.clone(),
                }
                .to_membership()?;
                Ok((Element::new(coords), m))
            })
            .collect::<Result<Vec<_>, Error>>()
            .map_err(|e| scenario_err(&ctx, e))?;
        let set = ComplexFuzzySet::from_sparse(algebra, default, &entries)
            .map_err(|e| scenario_err(&ctx, e))?;
        if fuzzy_sets
            .insert(def.name.clone(), (def.algebra.clone(), set))
            .is_some()
        {
            return Err(scenario_err(&ctx, "duplicate name"));
        }
    }
    let mut homs = BTreeMap::new();
    for def in &file.homs {
        let ctx = format!("hom {:?}", def.name);
        let source = algebras
            .get(&def.source)
            .ok_or_else(|| scenario_err(&ctx, format!("unknown algebra {:?}", def.source)))?;
        let target = algebras
            .get(&def.target)
            .ok_or_else(|| scenario_err(&ctx, format!("unknown algebra {:?}", def.target)))?;
        let hom = LieHom::from_row_major(source.clone(), target.clone(), &def.matrix)
            .map_err(|e| scenario_err(&ctx, e))?;
        let res = validate_hom(&hom)?;
        if !res.is_ok() {
            return Err(scenario_err(&ctx, format!("not a homomorphism: {res}")));
        }
        if homs.insert(def.name.clone(), hom).is_some() {
            return Err(scenario_err(&ctx, "duplicate name"));
        }
    }
    for (i, check) in file.checks.iter().enumerate() {
        let ctx = format!("check #{i}");
        if let Some(set) = &check.set {
            if !fuzzy_sets.contains_key(set) {
                return Err(scenario_err(&ctx, format!("unknown fuzzy set {set:?}")));
            }
        }
        if let Some(hom) = &check.hom {
            if !homs.contains_key(hom) {
                return Err(scenario_err(&ctx, format!("unknown hom {hom:?}")));
            }
        }
    }
    Ok(Scenario {
        algebras,
        fuzzy_sets,
        homs,
        checks: file.checks.clone(),
    })
}

/// Load and validate a scenario from a JSON file. Side-effect free.
pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario, Error> {
    let text = std::fs::read_to_string(path.as_ref())?;
    let file: ScenarioFile = serde_json::from_str(&text)?;
    resolve_scenario(&file)
}

/// Serialize a fuzzy set back into sparse form. The default value is the
/// most frequent one; everything else becomes an entry.
pub fn fuzzy_set_to_def(name: &str, algebra_name: &str, set: &ComplexFuzzySet) -> FuzzySetDef {
    let mut counts: BTreeMap<Membership, usize> = BTreeMap::new();
    for m in set.values().values() {
        *counts.entry(*m).or_default() += 1;
    }
    let default = counts
        .iter()
        .max_by_key(|(_, &n)| n)
        .map(|(m, _)| *m)
        .unwrap_or_else(Membership::zero);
    let entries = set
        .values()
        .iter()
        .filter(|(_, m)| **m != default)
        .map(|(x, m)| EntryDef {
            element: x.coords().iter().map(|&c| c as i64).collect(),
            r: rational_string(m.r()),
            w_over_pi: rational_string(m.w_over_pi()),
        })
        .collect();
    FuzzySetDef {
        name: name.to_string(),
        algebra: algebra_name.to_string(),
        default: MembershipDef::from_membership(default),
        entries,
    }
}

/// Serialize a hom into its file form.
pub fn hom_to_def(name: &str, hom: &LieHom) -> HomDef {
    HomDef {
        name: name.to_string(),
        source: hom.source().name().to_string(),
        target: hom.target().name().to_string(),
        matrix: hom.matrix().iter().flatten().map(|&v| v as i64).collect(),
    }
}

/// Serialize an algebra into its file form.
pub fn algebra_to_def(algebra: &LieAlgebra) -> AlgebraDef {
    AlgebraDef {
        name: algebra.name().to_string(),
        field: algebra.field().modulus(),
        dim: algebra.dim(),
        constants: algebra
            .constants()
            .iter()
            .map(|m| m.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect())
            .collect(),
    }
}
