//! Finite-dimensional Lie algebras over prime fields, given by structure
//! constants, with exhaustive validation of the Lie axioms and crisp
//! subalgebra/ideal machinery.
//!
//! Carriers are the full coordinate spaces `F_p^n` with small `p` and `n`,
//! so every check in this module is a finite loop.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::check::{CheckResult, Witness};
use crate::error::Error;

/// Largest supported prime modulus.
pub const MAX_PRIME: u32 = 31;
/// Largest supported dimension.
pub const MAX_DIM: usize = 4;
/// Default carrier enumeration budget (`p^n` must not exceed this).
pub const DEFAULT_BUDGET: u64 = 2048;

/// A prime field `F_p` with `2 <= p <= 31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldPrime(u32);

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl FieldPrime {
    pub fn new(p: u32) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_PRIME {
            return Err(Error::PrimeTooLarge(p, MAX_PRIME));
        }
        Ok(FieldPrime(p))
    }

    pub fn modulus(self) -> u32 {
        self.0
    }

    /// Reduce an arbitrary integer into `[0, p-1]`.
    pub fn reduce(self, v: i64) -> u32 {
        let p = self.0 as i64;
        (v.rem_euclid(p)) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.0
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.0 - b % self.0) % self.0
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.0 as u64) as u32
    }

    pub fn neg(self, a: u32) -> u32 {
        (self.0 - a % self.0) % self.0
    }

    /// Multiplicative inverse of a nonzero residue (Fermat).
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(a % self.0 != 0);
        let mut acc = 1u32;
        let mut base = a % self.0;
        let mut e = self.0 - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// All field scalars in ascending order.
    pub fn scalars(self) -> impl Iterator<Item = u32> {
        0..self.0
    }
}

/// A coordinate vector in `F_p^n`. Ordering is lexicographic on coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(Vec<u32>);

impl Element {
    pub fn new(coords: Vec<u32>) -> Self {
        Element(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Element(vec![0; dim])
    }

    /// Basis vector `e_i` (0-based index).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut coords = vec![0; dim];
        coords[i] = 1;
        Element(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A finite-dimensional Lie algebra over `F_p` defined by structure
/// constants `c[i][j][k]`, meaning `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieAlgebra {
    name: String,
    field: FieldPrime,
    dim: usize,
    constants: Vec<Vec<Vec<u32>>>,
}

/// Check the Lie axioms on a structure-constant table without building an
/// algebra. The verdict is `OK` iff the table is alternating, antisymmetric,
/// and satisfies the Jacobi identity on all basis triples.
pub fn validate_algebra(
    constants: &[Vec<Vec<i64>>],
    p: u32,
    dim: usize,
) -> Result<CheckResult, Error> {
    let field = FieldPrime::new(p)?;
    if dim < 1 || dim > MAX_DIM {
        return Err(Error::DimOutOfRange(dim, MAX_DIM));
    }
    let shape_ok = constants.len() == dim
        && constants
            .iter()
            .all(|m| m.len() == dim && m.iter().all(|r| r.len() == dim));
    if !shape_ok {
        return Err(Error::BadTableShape(dim));
    }
    let c: Vec<Vec<Vec<u32>>> = constants
        .iter()
        .map(|m| m.iter().map(|r| r.iter().map(|&v| field.reduce(v)).collect()).collect())
        .collect();

    // Axiom (i): [e_i, e_i] = 0. Checked on its own because antisymmetry
    // does not imply it in characteristic 2.
    for i in 0..dim {
        for k in 0..dim {
            if c[i][i][k] != 0 {
                return Ok(CheckResult::fail(
                    Witness::new("alternating")
                        .with_elements(vec![Element::basis(dim, i)])
                        .with_detail(format!("c[{i}][{i}][{k}] = {} != 0", c[i][i][k])),
                ));
            }
        }
    }
    // Antisymmetry: c[i][j][k] = -c[j][i][k].
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                if c[i][j][k] != field.neg(c[j][i][k]) {
                    return Ok(CheckResult::fail(
                        Witness::new("antisymmetry")
                            .with_elements(vec![Element::basis(dim, i), Element::basis(dim, j)])
                            .with_detail(format!(
                                "c[{i}][{j}][{k}] = {}, c[{j}][{i}][{k}] = {}",
                                c[i][j][k], c[j][i][k]
                            )),
                    ));
                }
            }
        }
    }
    // Jacobi identity on basis triples; bilinearity extends it to the carrier.
    let bracket_basis = |a: usize, b: usize| -> Vec<u32> { c[a][b].clone() };
    let bracket_vec = |x: &[u32], b: usize| -> Vec<u32> {
        // [x, e_b] for a coordinate vector x.
        let mut out = vec![0u32; dim];
        for (i, &xi) in x.iter().enumerate() {
            for k in 0..dim {
                out[k] = field.add(out[k], field.mul(xi, c[i][b][k]));
            }
        }
        out
    };
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                // [e_i, [e_j, e_k]] + [e_j, [e_k, e_i]] + [e_k, [e_i, e_j]]
                let t1 = bracket_vec(&bracket_basis(j, k), i);
                let t2 = bracket_vec(&bracket_basis(k, i), j);
                let t3 = bracket_vec(&bracket_basis(i, j), k);
                // bracket_vec computes [x, e_b]; flip sign for [e_b, x].
                let total: Vec<u32> = (0..dim)
                    .map(|m| field.neg(field.add(field.add(t1[m], t2[m]), t3[m])))
                    .collect();
                if total.iter().any(|&v| v != 0) {
                    return Ok(CheckResult::fail(
                        Witness::new("jacobi")
                            .with_elements(vec![
                                Element::basis(dim, i),
                                Element::basis(dim, j),
                                Element::basis(dim, k),
                            ])
                            .with_detail(format!("cyclic sum on basis triple ({i},{j},{k}) is nonzero")),
                    ));
                }
            }
        }
    }
    Ok(CheckResult::ok())
}

impl LieAlgebra {
    /// Build a validated algebra. Fails if the table violates the Lie axioms.
    pub fn new(
        name: impl Into<String>,
        p: u32,
        dim: usize,
        constants: &[Vec<Vec<i64>>],
    ) -> Result<Self, Error> {
        let name = name.into();
        let result = validate_algebra(constants, p, dim)?;
        if !result.is_ok() {
            return Err(Error::InvalidAlgebra(format!("{name}: {result}")));
        }
        let field = FieldPrime::new(p)?;
        let reduced = constants
            .iter()
            .map(|m| m.iter().map(|r| r.iter().map(|&v| field.reduce(v)).collect()).collect())
            .collect();
        Ok(LieAlgebra {
            name,
            field,
            dim,
            constants: reduced,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &Vec<Vec<Vec<u32>>> {
        &self.constants
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim)
    }

    fn check_dim(&self, x: &Element) -> Result<(), Error> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                got: x.dim(),
                want: self.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        debug_assert_eq!(x.dim(), self.dim);
        debug_assert_eq!(y.dim(), self.dim);
        Element(
            x.coords()
                .iter()
                .zip(y.coords())
                .map(|(&a, &b)| self.field.add(a, b))
                .collect(),
        )
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        Element(
            x.coords()
                .iter()
                .zip(y.coords())
                .map(|(&a, &b)| self.field.sub(a, b))
                .collect(),
        )
    }

    pub fn neg(&self, x: &Element) -> Element {
        Element(x.coords().iter().map(|&a| self.field.neg(a)).collect())
    }

    pub fn scale(&self, alpha: u32, x: &Element) -> Element {
        Element(x.coords().iter().map(|&a| self.field.mul(alpha, a)).collect())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element, Error> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let f = self.field;
        let mut out = vec![0u32; self.dim];
        for (i, &xi) in x.coords().iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.coords().iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let coeff = f.mul(xi, yj);
                for k in 0..self.dim {
                    out[k] = f.add(out[k], f.mul(coeff, self.constants[i][j][k]));
                }
            }
        }
        Ok(Element(out))
    }

    /// All `p^n` carrier elements in ascending lexicographic coordinate
    /// order, using the default budget.
    pub fn carrier(&self) -> Vec<Element> {
        self.enumerate_carrier(DEFAULT_BUDGET)
            .expect("validated algebra exceeds default carrier budget")
    }

    pub fn carrier_size(&self) -> u64 {
        (self.field.modulus() as u64).pow(self.dim as u32)
    }

    pub fn enumerate_carrier(&self, budget: u64) -> Result<Vec<Element>, Error> {
        let size = self.carrier_size();
        if size > budget {
            return Err(Error::BudgetExceeded { size, budget });
        }
        let p = self.field.modulus() as u64;
        let mut out = Vec::with_capacity(size as usize);
        for idx in 0..size {
            // base-p digits, first coordinate most significant: lex order
            let coords: Vec<u32> = (0..self.dim)
                .map(|k| ((idx / p.pow((self.dim - 1 - k) as u32)) % p) as u32)
                .collect();
            out.push(Element(coords));
        }
        Ok(out)
    }
}

/// An explicit finite set of carrier elements. Level sets arrive as raw
/// element sets, so subspace structure is checked, never assumed.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrispSubset {
    members: BTreeSet<Element>,
}

impl CrispSubset {
    pub fn new(members: BTreeSet<Element>) -> Self {
        CrispSubset { members }
    }

    pub fn from_iter(iter: impl IntoIterator<Item = Element>) -> Self {
        CrispSubset {
            members: iter.into_iter().collect(),
        }
    }

    pub fn members(&self) -> &BTreeSet<Element> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.members.contains(x)
    }

    pub fn is_subset(&self, other: &CrispSubset) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// OK iff `S` is closed under addition, scalar multiples, and the bracket.
/// The empty set passes vacuously (it occurs as a strong upper level at the
/// top of the image).
pub fn is_crisp_subalgebra(algebra: &LieAlgebra, subset: &CrispSubset) -> CheckResult {
    for x in subset.members() {
        for y in subset.members() {
            let s = algebra.add(x, y);
            if !subset.contains(&s) {
                return CheckResult::fail(
                    Witness::new("add-closure")
                        .with_elements(vec![x.clone(), y.clone(), s])
                        .with_detail("x + y escapes the subset"),
                );
            }
        }
    }
    for alpha in algebra.field().scalars() {
        for x in subset.members() {
            let s = algebra.scale(alpha, x);
            if !subset.contains(&s) {
                return CheckResult::fail(
                    Witness::new("scalar-closure")
                        .with_elements(vec![x.clone(), s])
                        .with_scalar(alpha)
                        .with_detail("alpha * x escapes the subset"),
                );
            }
        }
    }
    for x in subset.members() {
        for y in subset.members() {
            let b = algebra.bracket(x, y).expect("members share the algebra dimension");
            if !subset.contains(&b) {
                return CheckResult::fail(
                    Witness::new("bracket-closure")
                        .with_elements(vec![x.clone(), y.clone(), b])
                        .with_detail("[x, y] escapes the subset"),
                );
            }
        }
    }
    CheckResult::ok()
}

/// OK iff `S` is a subspace and `[x, y]` lands in `S` for every `x` in `S`
/// and every `y` in the full carrier.
pub fn is_crisp_ideal(algebra: &LieAlgebra, subset: &CrispSubset) -> CheckResult {
    for x in subset.members() {
        for y in subset.members() {
            let s = algebra.add(x, y);
            if !subset.contains(&s) {
                return CheckResult::fail(
                    Witness::new("add-closure")
                        .with_elements(vec![x.clone(), y.clone(), s])
                        .with_detail("x + y escapes the subset"),
                );
            }
        }
    }
    for alpha in algebra.field().scalars() {
        for x in subset.members() {
            let s = algebra.scale(alpha, x);
            if !subset.contains(&s) {
                return CheckResult::fail(
                    Witness::new("scalar-closure")
                        .with_elements(vec![x.clone(), s])
                        .with_scalar(alpha)
                        .with_detail("alpha * x escapes the subset"),
                );
            }
        }
    }
    let carrier = algebra.carrier();
    for x in subset.members() {
        for y in &carrier {
            let b = algebra.bracket(x, y).expect("carrier elements match the dimension");
            if !subset.contains(&b) {
                return CheckResult::fail(
                    Witness::new("ideal-bracket")
                        .with_elements(vec![x.clone(), y.clone(), b])
                        .with_detail("[x, y] escapes the subset for a carrier y"),
                );
            }
        }
    }
    CheckResult::ok()
}

/// Catalog of small algebras. `cross3` carries the cross-product structure
/// constants; `sl2` needs odd characteristic.
pub fn make_catalog_algebra(name: &str, p: u32) -> Result<LieAlgebra, Error> {
    let zeros = |dim: usize| vec![vec![vec![0i64; dim]; dim]; dim];
    match name {
        "abelian-1" | "abelian-2" | "abelian-3" | "abelian-4" => {
            let dim = name["abelian-".len()..].parse::<usize>().unwrap();
            LieAlgebra::new(name, p, dim, &zeros(dim))
        }
        "cross3" => {
            let mut c = zeros(3);
            // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2, antisymmetric fill
            c[0][1][2] = 1;
            c[1][0][2] = -1;
            c[1][2][0] = 1;
            c[2][1][0] = -1;
            c[2][0][1] = 1;
            c[0][2][1] = -1;
            LieAlgebra::new(name, p, 3, &c)
        }
        "heisenberg3" => {
            let mut c = zeros(3);
            // [e1,e2]=e3, everything else zero
            c[0][1][2] = 1;
            c[1][0][2] = -1;
            LieAlgebra::new(name, p, 3, &c)
        }
        "sl2" => {
            if p == 2 {
                return Err(Error::IncompatibleCharacteristic {
                    name: name.to_string(),
                    requirement: "odd characteristic".to_string(),
                });
            }
            let mut c = zeros(3);
            // basis (x, y, h): [x,y]=h, [h,x]=2x, [h,y]=-2y
            c[0][1][2] = 1;
            c[1][0][2] = -1;
            c[2][0][0] = 2;
            c[0][2][0] = -2;
            c[2][1][1] = -2;
            c[1][2][1] = 2;
            LieAlgebra::new(name, p, 3, &c)
        }
        _ => Err(Error::UnknownCatalogName(name.to_string())),
    }
}

/// Names accepted by [`make_catalog_algebra`].
pub const CATALOG_NAMES: &[&str] = &[
    "abelian-1",
    "abelian-2",
    "abelian-3",
    "abelian-4",
    "cross3",
    "heisenberg3",
    "sl2",
];

/// A linear map between two Lie algebras over the same prime field, given by
/// a matrix with `target.dim` rows and `source.dim` columns acting on
/// coordinate columns. Whether it preserves brackets is checked separately
/// by [`crate::homs::validate_hom`]; surjectivity (matrix rank over `F_p`)
/// is computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieHom {
    source: LieAlgebra,
    target: LieAlgebra,
    matrix: Vec<Vec<u32>>,
    surjective: bool,
}

fn rank_mod_p(field: FieldPrime, matrix: &[Vec<u32>]) -> usize {
    let mut m: Vec<Vec<u32>> = matrix.to_vec();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| m[r][col] != 0);
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        let inv = field.inv(m[rank][col]);
        for c in 0..cols {
            m[rank][c] = field.mul(m[rank][c], inv);
        }
        for r in 0..rows {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..cols {
                    let sub = field.mul(factor, m[rank][c]);
                    m[r][c] = field.sub(m[r][c], sub);
                }
            }
        }
        rank += 1;
    }
    rank
}

impl LieHom {
    pub fn new(
        source: LieAlgebra,
        target: LieAlgebra,
        matrix: &[Vec<i64>],
    ) -> Result<Self, Error> {
        if source.field() != target.field() {
            return Err(Error::FieldMismatch(
                source.field().modulus(),
                target.field().modulus(),
            ));
        }
        let rows = target.dim();
        let cols = source.dim();
        if matrix.len() != rows || matrix.iter().any(|r| r.len() != cols) {
            return Err(Error::BadMatrixShape { rows, cols });
        }
        let field = source.field();
        let reduced: Vec<Vec<u32>> = matrix
            .iter()
            .map(|r| r.iter().map(|&v| field.reduce(v)).collect())
            .collect();
        let surjective = rank_mod_p(field, &reduced) == rows;
        Ok(LieHom {
            source,
            target,
            matrix: reduced,
            surjective,
        })
    }

    /// Build from a row-major flat list of entries, as scenario files store it.
    pub fn from_row_major(
        source: LieAlgebra,
        target: LieAlgebra,
        flat: &[i64],
    ) -> Result<Self, Error> {
        let rows = target.dim();
        let cols = source.dim();
        if flat.len() != rows * cols {
            return Err(Error::BadMatrixShape { rows, cols });
        }
        let matrix: Vec<Vec<i64>> = flat.chunks(cols).map(|c| c.to_vec()).collect();
        LieHom::new(source, target, &matrix)
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &LieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Vec<Vec<u32>> {
        &self.matrix
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn apply(&self, x: &Element) -> Result<Element, Error> {
        if x.dim() != self.source.dim() {
            return Err(Error::DimensionMismatch {
                got: x.dim(),
                want: self.source.dim(),
            });
        }
        let field = self.source.field();
        let out: Vec<u32> = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x.coords())
                    .fold(0u32, |acc, (&m, &c)| field.add(acc, field.mul(m, c)))
            })
            .collect();
        Ok(Element::new(out))
    }

    pub fn identity(algebra: &LieAlgebra) -> Self {
        let dim = algebra.dim();
        let matrix: Vec<Vec<i64>> = (0..dim)
            .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
            .collect();
        LieHom::new(algebra.clone(), algebra.clone(), &matrix)
            .expect("identity matrix always fits")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cross3() -> LieAlgebra {
        make_catalog_algebra("cross3", 5).unwrap()
    }

    #[test]
    fn cross_product_constants_validate() {
        let a = cross3();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.field().modulus(), 5);
    }

    #[test]
    fn alternating_violation_is_caught() {
        let mut c = vec![vec![vec![0i64; 3]; 3]; 3];
        c[0][0][1] = 1; // [e1, e1] = e2
        let res = validate_algebra(&c, 5, 3).unwrap();
        assert_eq!(res.verdict, crate::Verdict::Fail);
        assert_eq!(res.witness.unwrap().condition, "alternating");
    }

    #[test]
    fn jacobi_violation_is_caught() {
        // [e1,e2]=e1, [e2,e3]=e2, [e3,e1]=e3: the cyclic sum on (e1,e2,e3)
        // is e1+e2+e3, nonzero.
        let mut c = vec![vec![vec![0i64; 3]; 3]; 3];
        c[0][1][0] = 1;
        c[1][0][0] = -1;
        c[1][2][1] = 1;
        c[2][1][1] = -1;
        c[2][0][2] = 1;
        c[0][2][2] = -1;
        let res = validate_algebra(&c, 5, 3).unwrap();
        assert_eq!(res.verdict, crate::Verdict::Fail);
        assert_eq!(res.witness.unwrap().condition, "jacobi");
    }

    #[test]
    fn non_prime_field_is_an_error() {
        let c = vec![vec![vec![0i64; 2]; 2]; 2];
        assert!(matches!(validate_algebra(&c, 4, 2), Err(Error::NotPrime(4))));
    }

    #[test]
    fn bracket_matches_cross_product() {
        let a = cross3();
        let e1 = Element::new(vec![1, 0, 0]);
        let e2 = Element::new(vec![0, 1, 0]);
        assert_eq!(a.bracket(&e1, &e2).unwrap(), Element::new(vec![0, 0, 1]));
        // (1,0,0) x (1,1,1) = (0,-1,1) = (0,4,1) mod 5
        let v = Element::new(vec![1, 1, 1]);
        assert_eq!(a.bracket(&e1, &v).unwrap(), Element::new(vec![0, 4, 1]));
    }

    #[test]
    fn bracket_of_element_with_itself_vanishes() {
        let a = cross3();
        for x in a.carrier() {
            assert!(a.bracket(&x, &x).unwrap().is_zero());
        }
    }

    #[test]
    fn carrier_enumeration_is_lexicographic_and_complete() {
        let a1 = make_catalog_algebra("abelian-1", 2).unwrap();
        assert_eq!(
            a1.carrier(),
            vec![Element::new(vec![0]), Element::new(vec![1])]
        );
        let a3 = make_catalog_algebra("cross3", 3).unwrap();
        let carrier = a3.carrier();
        assert_eq!(carrier.len(), 27);
        assert_eq!(carrier[0], Element::zero(3));
        let mut sorted = carrier.clone();
        sorted.sort();
        assert_eq!(carrier, sorted);
        assert_eq!(cross3().carrier().len(), 125);
    }

    #[test]
    fn carrier_budget_is_enforced() {
        let a = cross3();
        assert!(matches!(
            a.enumerate_carrier(100),
            Err(Error::BudgetExceeded { size: 125, .. })
        ));
    }

    #[test]
    fn e1_line_is_a_subalgebra_but_not_an_ideal_in_cross3() {
        let a = cross3();
        let line = CrispSubset::from_iter(
            (0..5).map(|t| Element::new(vec![t, 0, 0])),
        );
        assert!(is_crisp_subalgebra(&a, &line).is_ok());
        let res = is_crisp_ideal(&a, &line);
        assert_eq!(res.verdict, crate::Verdict::Fail);
        assert_eq!(res.witness.unwrap().condition, "ideal-bracket");
    }

    #[test]
    fn zero_and_whole_carrier_edge_cases() {
        let a = cross3();
        let zero = CrispSubset::from_iter([a.zero()]);
        assert!(is_crisp_subalgebra(&a, &zero).is_ok());
        let whole = CrispSubset::from_iter(a.carrier());
        assert!(is_crisp_ideal(&a, &whole).is_ok());
    }

    #[test]
    fn non_closed_subset_fails() {
        let a = cross3();
        let s = CrispSubset::from_iter([
            a.zero(),
            Element::new(vec![1, 0, 0]),
            Element::new(vec![0, 1, 0]),
        ]);
        let res = is_crisp_subalgebra(&a, &s);
        assert_eq!(res.verdict, crate::Verdict::Fail);
    }

    #[test]
    fn abelian_line_is_an_ideal() {
        let a = make_catalog_algebra("abelian-2", 3).unwrap();
        let line = CrispSubset::from_iter((0..3).map(|t| Element::new(vec![t, 0])));
        assert!(is_crisp_ideal(&a, &line).is_ok());
    }

    #[test]
    fn catalog_covers_documented_names() {
        for name in CATALOG_NAMES {
            // 3 works for every entry, including sl2 (which rejects 2)
            assert!(make_catalog_algebra(name, 3).is_ok(), "{name}");
        }
        assert!(matches!(
            make_catalog_algebra("nope", 3),
            Err(Error::UnknownCatalogName(_))
        ));
        assert!(matches!(
            make_catalog_algebra("sl2", 2),
            Err(Error::IncompatibleCharacteristic { .. })
        ));
    }

    #[test]
    fn antisymmetry_holds_exhaustively_on_catalog_algebras() {
        for name in ["cross3", "heisenberg3", "sl2"] {
            let a = make_catalog_algebra(name, 3).unwrap();
            let carrier = a.carrier();
            for x in &carrier {
                for y in &carrier {
                    let xy = a.bracket(x, y).unwrap();
                    let yx = a.bracket(y, x).unwrap();
                    assert!(a.add(&xy, &yx).is_zero(), "{name}: [x,y]+[y,x] != 0");
                }
            }
        }
    }

    #[test]
    fn jacobi_holds_exhaustively_on_small_carriers() {
        for name in ["cross3", "heisenberg3", "sl2"] {
            let a = make_catalog_algebra(name, 3).unwrap();
            let carrier = a.carrier();
            for x in &carrier {
                for y in &carrier {
                    for z in &carrier {
                        let t1 = a.bracket(x, &a.bracket(y, z).unwrap()).unwrap();
                        let t2 = a.bracket(y, &a.bracket(z, x).unwrap()).unwrap();
                        let t3 = a.bracket(z, &a.bracket(x, y).unwrap()).unwrap();
                        assert!(a.add(&a.add(&t1, &t2), &t3).is_zero(), "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn hom_surjectivity_rank() {
        let h3 = make_catalog_algebra("heisenberg3", 3).unwrap();
        let ab2 = make_catalog_algebra("abelian-2", 3).unwrap();
        let proj = LieHom::new(
            h3,
            ab2.clone(),
            &[vec![1, 0, 0], vec![0, 1, 0]],
        )
        .unwrap();
        assert!(proj.is_surjective());
        let ab1 = make_catalog_algebra("abelian-1", 3).unwrap();
        let embed = LieHom::new(ab1, ab2, &[vec![1], vec![0]]).unwrap();
        assert!(!embed.is_surjective());
    }
}
