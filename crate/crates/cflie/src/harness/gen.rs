//! Seeded random instance generation. Everything here draws from a
//! [`ChaCha8Rng`] owned by the [`Gen`] wrapper, so a fixed seed replays the
//! exact same algebras, chains, and fuzzy sets.

use std::collections::BTreeSet;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cfla::{generate_from_chain, ChainSpec, Mode};
use crate::cfuzzy::{ComplexFuzzySet, Membership};
use crate::error::Error;
use crate::lie_core::{make_catalog_algebra, CrispSubset, Element, LieAlgebra, LieHom};
use crate::Rational;

/// Knobs for the random generators. The defaults keep carriers small enough
/// that the exhaustive predicates stay fast.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GenConfig {
    pub seed: u64,
    pub trials: u32,
    /// Catalog algebra names to draw from; empty means the default pool.
    #[serde(default)]
    pub catalog: Vec<String>,
    /// Primes drawn from `{2, 3, 5, 7, ..., max_prime}`.
    pub max_prime: u32,
    pub max_dim: usize,
    /// Amplitude denominators are drawn from `1..=r_den_max`.
    pub r_den_max: i64,
    /// Phase-coefficient denominators are drawn from `1..=w_den_max`.
    pub w_den_max: i64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            trials: 100,
            catalog: Vec::new(),
            max_prime: 7,
            max_dim: 3,
            r_den_max: 10,
            w_den_max: 4,
        }
    }
}

impl GenConfig {
    pub fn with_seed_and_trials(seed: u64, trials: u32) -> Self {
        GenConfig {
            seed,
            trials,
            ..GenConfig::default()
        }
    }
}

/// A seeded generator over algebras, fuzzy sets, chains, and homs.
pub struct Gen {
    rng: ChaCha8Rng,
    cfg: GenConfig,
}

const SMALL_PRIMES: [u32; 11] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

impl Gen {
    pub fn new(cfg: GenConfig) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            cfg,
        }
    }

    pub fn config(&self) -> &GenConfig {
        &self.cfg
    }

    /// Direct access to the stream for coin flips that do not warrant a
    /// dedicated generator.
    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn prime(&mut self) -> u32 {
        let pool: Vec<u32> = SMALL_PRIMES
            .iter()
            .copied()
            .filter(|&p| p <= self.cfg.max_prime)
            .collect();
        *pool.choose(&mut self.rng).expect("max_prime >= 2")
    }

    /// A random catalog algebra whose carrier the predicates can walk
    /// exhaustively.
    pub fn algebra(&mut self) -> LieAlgebra {
        let default_pool = ["abelian-1", "abelian-2", "abelian-3", "cross3", "heisenberg3", "sl2"];
        let names: Vec<String> = if self.cfg.catalog.is_empty() {
            default_pool.iter().map(|s| s.to_string()).collect()
        } else {
            self.cfg.catalog.clone()
        };
        for _ in 0..1000 {
            let p = self.prime();
            let name = names.choose(&mut self.rng).unwrap();
            // sl2 rejects characteristic 2; other misses just retry
            if let Ok(a) = make_catalog_algebra(name, p) {
                if a.dim() <= self.cfg.max_dim {
                    return a;
                }
            }
        }
        panic!("no catalog algebra fits max_prime = {}, max_dim = {}", self.cfg.max_prime, self.cfg.max_dim)
    }

    pub fn element(&mut self, algebra: &LieAlgebra) -> Element {
        let p = algebra.field().modulus();
        Element::new((0..algebra.dim()).map(|_| self.rng.gen_range(0..p)).collect())
    }

    /// A random amplitude in `[0, 1]` with bounded denominator.
    pub fn amplitude(&mut self) -> Rational {
        let den = self.rng.gen_range(1..=self.cfg.r_den_max);
        let num = self.rng.gen_range(0..=den);
        Ratio::new(num, den)
    }

    /// A random phase coefficient in `[0, 2]` with bounded denominator.
    pub fn phase_coeff(&mut self) -> Rational {
        let den = self.rng.gen_range(1..=self.cfg.w_den_max);
        let num = self.rng.gen_range(0..=2 * den);
        Ratio::new(num, den)
    }

    pub fn membership(&mut self) -> Membership {
        Membership::new(self.amplitude(), self.phase_coeff()).expect("in range by construction")
    }

    /// `len` memberships strictly increasing in both components. Any
    /// assignment of values drawn from one ladder is homogeneous, and two
    /// sets drawn from the same ladder are mutually homogeneous.
    pub fn ladder(&mut self, len: usize) -> Vec<Membership> {
        assert!(len >= 1);
        let mut rs = BTreeSet::new();
        while rs.len() < len {
            rs.insert(self.amplitude());
        }
        let mut ws = BTreeSet::new();
        while ws.len() < len {
            ws.insert(self.phase_coeff());
        }
        rs.into_iter()
            .zip(ws)
            .map(|(r, w)| Membership::new(r, w).unwrap())
            .collect()
    }

    /// A homogeneous fuzzy set with values drawn from the given ladder.
    /// Homogeneous by construction, but usually not a subalgebra.
    pub fn homogeneous_set(&mut self, algebra: &LieAlgebra, ladder: &[Membership]) -> ComplexFuzzySet {
        let values = algebra
            .carrier()
            .into_iter()
            .map(|x| (x, *ladder.choose(&mut self.rng).unwrap()))
            .collect();
        ComplexFuzzySet::new(algebra, values).unwrap()
    }

    /// Closure of a generating set under addition, scalar action, and (for
    /// ideals) bracketing with the whole carrier.
    pub fn closure(
        &self,
        algebra: &LieAlgebra,
        generators: &[Element],
        mode: Mode,
    ) -> Result<CrispSubset, Error> {
        let mut members: BTreeSet<Element> = BTreeSet::new();
        members.insert(algebra.zero());
        let mut frontier: Vec<Element> = generators.to_vec();
        while let Some(x) = frontier.pop() {
            if !members.insert(x.clone()) {
                continue;
            }
            let snapshot: Vec<Element> = members.iter().cloned().collect();
            for y in &snapshot {
                frontier.push(algebra.add(&x, y));
                frontier.push(algebra.bracket(&x, y)?);
            }
            for alpha in algebra.field().scalars() {
                frontier.push(algebra.scale(alpha, &x));
            }
            if mode == Mode::Ideal {
                for y in algebra.carrier() {
                    frontier.push(algebra.bracket(&x, &y)?);
                }
            }
        }
        Ok(CrispSubset::new(members))
    }

    /// A strictly nested chain of crisp subalgebras (or ideals), starting
    /// at `{0}`, with strictly decreasing values attached. Feeding it to
    /// [`generate_from_chain`] always succeeds.
    pub fn chain(&mut self, algebra: &LieAlgebra, mode: Mode) -> Result<ChainSpec, Error> {
        let mut generators: Vec<Element> = Vec::new();
        let mut chain = vec![self.closure(algebra, &[], mode)?];
        let carrier_len = algebra.carrier_size() as usize;
        let want = self.rng.gen_range(1..=algebra.dim() + 1);
        for _ in 0..4 * want {
            if chain.len() >= want || chain.last().unwrap().len() == carrier_len {
                break;
            }
            let x = self.element(algebra);
            generators.push(x);
            let next = self.closure(algebra, &generators, mode)?;
            if next.len() > chain.last().unwrap().len() {
                chain.push(next);
            } else {
                generators.pop();
            }
        }
        // Innermost chain member gets the largest value, so reverse the
        // ladder; leave room below the ladder for the implicit (0,0) tail.
        let mut values = self.ladder(chain.len() + 1);
        values.remove(0);
        values.reverse();
        Ok(ChainSpec { chain, values })
    }

    /// A random homogeneous complex fuzzy subalgebra or ideal.
    pub fn fuzzy_lie(&mut self, algebra: &LieAlgebra, mode: Mode) -> Result<ComplexFuzzySet, Error> {
        let spec = self.chain(algebra, mode)?;
        generate_from_chain(algebra, &spec, mode)
    }

    /// A family of pairwise mutually homogeneous fuzzy Lie sets over one
    /// algebra: every chain takes its values from a single shared ladder,
    /// so all membership values across the family are comparable the same
    /// way in both components.
    pub fn fuzzy_lie_family(
        &mut self,
        algebra: &LieAlgebra,
        mode: Mode,
        count: usize,
    ) -> Result<Vec<ComplexFuzzySet>, Error> {
        let specs: Vec<ChainSpec> = (0..count)
            .map(|_| self.chain(algebra, mode))
            .collect::<Result<_, _>>()?;
        let longest = specs.iter().map(|s| s.values.len()).max().unwrap_or(0);
        let mut pool = self.ladder(longest + 1);
        pool.remove(0); // keep (0,0)'s slot below everything in use
        pool.reverse();
        specs
            .into_iter()
            .map(|spec| {
                let values = pool[..spec.values.len()].to_vec();
                generate_from_chain(
                    algebra,
                    &ChainSpec {
                        chain: spec.chain,
                        values,
                    },
                    mode,
                )
            })
            .collect()
    }

    /// Two mutually homogeneous fuzzy Lie sets over one algebra.
    pub fn fuzzy_lie_pair(
        &mut self,
        algebra: &LieAlgebra,
        mode: Mode,
    ) -> Result<(ComplexFuzzySet, ComplexFuzzySet), Error> {
        let mut family = self.fuzzy_lie_family(algebra, mode, 2)?;
        let b = family.pop().expect("two sets");
        let a = family.pop().expect("two sets");
        Ok((a, b))
    }

    /// Flip one value of the set to another rung of the ladder. The result
    /// stays homogeneous but usually stops being a subalgebra.
    pub fn perturb(&mut self, set: &ComplexFuzzySet, ladder: &[Membership]) -> ComplexFuzzySet {
        let keys: Vec<Element> = set.values().keys().cloned().collect();
        let x = keys.choose(&mut self.rng).unwrap();
        let m = *ladder.choose(&mut self.rng).unwrap();
        set.with_value(x, m).expect("same carrier")
    }
}

/// A fixed family of valid Lie algebra homomorphisms over `F_p`, covering
/// surjective, non-surjective, zero, and identity maps between catalog
/// algebras. Used by the hom suites.
pub fn catalog_homs(p: u32) -> Result<Vec<LieHom>, Error> {
    let a1 = make_catalog_algebra("abelian-1", p)?;
    let a2 = make_catalog_algebra("abelian-2", p)?;
    let h3 = make_catalog_algebra("heisenberg3", p)?;
    let c3 = make_catalog_algebra("cross3", p)?;
    let mut homs = vec![
        LieHom::identity(&c3),
        LieHom::identity(&h3),
        // heisenberg3 -> abelian-2, quotient by the center [e1,e2] = e3
        LieHom::from_row_major(h3.clone(), a2.clone(), &[1, 0, 0, 0, 1, 0])?,
        // abelian-2 -> abelian-1 projection onto the first coordinate
        LieHom::from_row_major(a2.clone(), a1.clone(), &[1, 0])?,
        // abelian-1 -> abelian-2 inclusion (not surjective)
        LieHom::from_row_major(a1.clone(), a2.clone(), &[1, 0])?,
        // zero map on heisenberg3 (not surjective)
        LieHom::from_row_major(h3.clone(), h3.clone(), &[0; 9])?,
        // shear automorphism of abelian-2
        LieHom::from_row_major(a2.clone(), a2.clone(), &[1, 1, 0, 1])?,
    ];
    for hom in &homs {
        debug_assert!(crate::homs::validate_hom(hom)?.is_ok());
    }
    if p != 2 {
        let sl2 = make_catalog_algebra("sl2", p)?;
        homs.push(LieHom::identity(&sl2));
    }
    Ok(homs)
}
