//! Finite commutative rings with identity.
//!
//! Elements are plain indices `0..order`. Atoms (cyclic rings, Galois fields,
//! the small quotient rings of the catalog) are either computed directly or
//! backed by operation tables; products use componentwise arithmetic over
//! their factors so the full product table is never materialized.

mod catalog;
mod decompose;
mod iso;

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use catalog::{build_ring, irreducible_polynomial, Atom};
pub use decompose::LocalDecomposition;
pub use iso::ring_isomorphic;

/// Ring element, identified by its index in `0..order`.
pub type Elem = usize;

/// Largest order for which operation tables are materialized.
pub const TABLE_LIMIT: usize = 4096;

/// Largest order accepted for any ring, products included.
pub const MAX_ORDER: usize = 1 << 22;

const EXHAUSTIVE_AXIOM_LIMIT: usize = 64;
const SAMPLED_AXIOM_TRIPLES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("Z_n requires n >= 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("GF({p},{k}): {p} is not prime")]
    NotPrime { p: u64, k: u32 },
    #[error("GF({p},{k}): extension degree must be at least 1")]
    ZeroDegree { p: u64, k: u32 },
    #[error("unknown catalog atom `{0}`")]
    UnknownAtom(String),
    #[error("ring of order {order} exceeds the supported limit of {limit}")]
    TooLarge { order: u128, limit: usize },
    #[error("element index {index} out of range for ring of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("malformed ring presentation: {0}")]
    Malformed(String),
    #[error("ring axiom violated: {0}")]
    Axiom(String),
    #[error("ring is not local")]
    NotLocal,
}

#[derive(Debug)]
struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    labels: Vec<String>,
}

#[derive(Debug)]
struct ProductParts {
    factors: Vec<FiniteRing>,
    // first factor is the most significant digit
    strides: Vec<usize>,
}

#[derive(Debug, Clone)]
enum Repr {
    Cyclic,
    Table(Arc<Tables>),
    Product(Arc<ProductParts>),
}

/// A finite commutative ring with identity. Cheap to clone.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    order: usize,
    characteristic: usize,
    zero: Elem,
    one: Elem,
    repr: Repr,
}

/// Presentation of a ring as a free-ish module over its additive cyclic
/// summands: elements are coefficient vectors `c` with `0 <= c[i] < moduli[i]`
/// and the product of basis elements is given by `products[i][j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    pub moduli: Vec<u64>,
    pub basis_names: Vec<String>,
    /// `products[i][j]` holds the coefficient vector of `e_i * e_j`.
    pub products: Vec<Vec<Vec<u64>>>,
    /// Coefficient vector of the identity.
    pub one: Vec<u64>,
}

impl FiniteRing {
    /// The integers modulo `n`.
    pub fn cyclic(n: u64) -> Result<Self, RingError> {
        if n < 2 {
            return Err(RingError::ModulusTooSmall(n));
        }
        if n as u128 > MAX_ORDER as u128 {
            return Err(RingError::TooLarge { order: n as u128, limit: MAX_ORDER });
        }
        let n = n as usize;
        Ok(FiniteRing { order: n, characteristic: n, zero: 0, one: 1, repr: Repr::Cyclic })
    }

    /// Direct product with componentwise operations.
    pub fn product(factors: Vec<FiniteRing>) -> Result<Self, RingError> {
        if factors.is_empty() {
            return Err(RingError::Malformed("empty product".into()));
        }
        if factors.len() == 1 {
            return Ok(factors.into_iter().next().unwrap());
        }
        let order: u128 = factors.iter().map(|f| f.order as u128).product();
        if order > MAX_ORDER as u128 {
            return Err(RingError::TooLarge { order, limit: MAX_ORDER });
        }
        let mut strides = vec![1usize; factors.len()];
        for i in (0..factors.len() - 1).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].order;
        }
        let one = factors.iter().zip(&strides).map(|(f, s)| f.one * s).sum();
        let characteristic = factors.iter().fold(1, |acc, f| lcm(acc, f.characteristic));
        Ok(FiniteRing {
            order: order as usize,
            characteristic,
            zero: 0,
            one,
            repr: Repr::Product(Arc::new(ProductParts { factors, strides })),
        })
    }

    /// Builds a ring from explicit operation tables (row-major, `order * order`),
    /// checking every ring axiom.
    pub fn from_tables(
        add: Vec<Elem>,
        mul: Vec<Elem>,
        zero: Elem,
        one: Elem,
        labels: Vec<String>,
    ) -> Result<Self, RingError> {
        let order = labels.len();
        if order < 2 {
            return Err(RingError::Malformed("a ring needs a nonzero identity, so order >= 2".into()));
        }
        if order > TABLE_LIMIT {
            return Err(RingError::TooLarge { order: order as u128, limit: TABLE_LIMIT });
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(RingError::Malformed("tables must be order x order".into()));
        }
        if zero >= order || one >= order {
            return Err(RingError::Malformed("zero/one out of range".into()));
        }
        if let Some(&bad) = add.iter().chain(&mul).find(|&&v| v >= order) {
            return Err(RingError::IndexOutOfRange { index: bad, order });
        }
        let mut neg = vec![u16::MAX; order];
        for x in 0..order {
            match (0..order).find(|&y| add[x * order + y] == zero) {
                Some(y) => neg[x] = y as u16,
                None => return Err(RingError::Axiom(format!("element {x} has no additive inverse"))),
            }
        }
        let ring = Self::from_parts(
            add.into_iter().map(|v| v as u16).collect(),
            mul.into_iter().map(|v| v as u16).collect(),
            neg,
            zero,
            one,
            labels,
        );
        ring.check_axioms()?;
        Ok(ring)
    }

    /// Builds a ring from structure constants, checking every ring axiom.
    pub fn from_structure_constants(sc: &StructureConstants) -> Result<Self, RingError> {
        let ring = Self::from_structure_constants_unchecked(sc)?;
        ring.check_axioms()?;
        Ok(ring)
    }

    pub(crate) fn from_structure_constants_unchecked(sc: &StructureConstants) -> Result<Self, RingError> {
        let dim = sc.moduli.len();
        if dim == 0 || sc.basis_names.len() != dim || sc.one.len() != dim {
            return Err(RingError::Malformed("basis, names and identity must have equal length".into()));
        }
        if sc.moduli.iter().any(|&m| m < 2) {
            return Err(RingError::Malformed("every additive modulus must be >= 2".into()));
        }
        if sc.products.len() != dim
            || sc.products.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim))
        {
            return Err(RingError::Malformed("products must be dim x dim coefficient vectors".into()));
        }
        let order: u128 = sc.moduli.iter().map(|&m| m as u128).product();
        if order > TABLE_LIMIT as u128 {
            return Err(RingError::TooLarge { order, limit: TABLE_LIMIT });
        }
        let order = order as usize;
        let moduli: Vec<usize> = sc.moduli.iter().map(|&m| m as usize).collect();
        let mut weights = vec![1usize; dim];
        for i in 1..dim {
            weights[i] = weights[i - 1] * moduli[i - 1];
        }
        let decode = |x: usize| -> Vec<usize> { (0..dim).map(|i| (x / weights[i]) % moduli[i]).collect() };
        let encode = |c: &[usize]| -> usize { c.iter().zip(&weights).zip(&moduli).map(|((v, w), m)| (v % m) * w).sum() };
        let coords: Vec<Vec<usize>> = (0..order).map(decode).collect();

        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        let mut buf = vec![0usize; dim];
        for x in 0..order {
            for y in 0..order {
                for i in 0..dim {
                    buf[i] = coords[x][i] + coords[y][i];
                }
                add[x * order + y] = encode(&buf) as u16;
                buf.iter_mut().for_each(|v| *v = 0);
                for (i, &cx) in coords[x].iter().enumerate() {
                    if cx == 0 {
                        continue;
                    }
                    for (j, &cy) in coords[y].iter().enumerate() {
                        if cy == 0 {
                            continue;
                        }
                        for (k, &c) in sc.products[i][j].iter().enumerate() {
                            buf[k] = (buf[k] + cx * cy * c as usize) % moduli[k];
                        }
                    }
                }
                mul[x * order + y] = encode(&buf) as u16;
            }
        }
        let neg: Vec<u16> = coords
            .iter()
            .map(|c| {
                let n: Vec<usize> = c.iter().zip(&moduli).map(|(v, m)| (m - v) % m).collect();
                encode(&n) as u16
            })
            .collect();
        let one_coords: Vec<usize> = sc.one.iter().map(|&v| v as usize).collect();
        let one = encode(&one_coords);
        let labels = coords.iter().map(|c| polynomial_label(c, &sc.basis_names)).collect();
        Ok(Self::from_parts(add, mul, neg, 0, one, labels))
    }

    fn from_parts(add: Vec<u16>, mul: Vec<u16>, neg: Vec<u16>, zero: Elem, one: Elem, labels: Vec<String>) -> Self {
        let order = labels.len();
        let mut ring = FiniteRing {
            order,
            characteristic: 0,
            zero,
            one,
            repr: Repr::Table(Arc::new(Tables { add, mul, neg, labels })),
        };
        ring.characteristic = ring.additive_order(one);
        ring
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    /// Factors of a product ring, or `None` for an atom.
    pub fn product_factors(&self) -> Option<&[FiniteRing]> {
        match &self.repr {
            Repr::Product(p) => Some(&p.factors),
            _ => None,
        }
    }

    /// Splits a product element into its components.
    pub fn components(&self, x: Elem) -> Option<Vec<Elem>> {
        match &self.repr {
            Repr::Product(p) => Some(p.decode(x)),
            _ => None,
        }
    }

    /// Inverse of [`components`](Self::components) for product rings.
    pub fn from_components(&self, comps: &[Elem]) -> Option<Elem> {
        match &self.repr {
            Repr::Product(p) if comps.len() == p.factors.len() => Some(p.encode(comps)),
            _ => None,
        }
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        debug_assert!(x < self.order && y < self.order);
        match &self.repr {
            Repr::Cyclic => {
                let s = x + y;
                if s >= self.order {
                    s - self.order
                } else {
                    s
                }
            }
            Repr::Table(t) => t.add[x * self.order + y] as Elem,
            Repr::Product(p) => p.zip_with(x, y, |f, a, b| f.add(a, b)),
        }
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        debug_assert!(x < self.order && y < self.order);
        match &self.repr {
            Repr::Cyclic => ((x as u128 * y as u128) % self.order as u128) as Elem,
            Repr::Table(t) => t.mul[x * self.order + y] as Elem,
            Repr::Product(p) => p.zip_with(x, y, |f, a, b| f.mul(a, b)),
        }
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        debug_assert!(x < self.order);
        match &self.repr {
            Repr::Cyclic => (self.order - x) % self.order,
            Repr::Table(t) => t.neg[x] as Elem,
            Repr::Product(p) => {
                let c: Vec<Elem> = p.decode(x).iter().zip(&p.factors).map(|(&a, f)| f.neg(a)).collect();
                p.encode(&c)
            }
        }
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    pub fn checked_add(&self, x: Elem, y: Elem) -> Result<Elem, RingError> {
        self.check_index(x)?;
        self.check_index(y)?;
        Ok(self.add(x, y))
    }

    pub fn checked_mul(&self, x: Elem, y: Elem) -> Result<Elem, RingError> {
        self.check_index(x)?;
        self.check_index(y)?;
        Ok(self.mul(x, y))
    }

    pub fn checked_neg(&self, x: Elem) -> Result<Elem, RingError> {
        self.check_index(x)?;
        Ok(self.neg(x))
    }

    fn check_index(&self, x: Elem) -> Result<(), RingError> {
        if x < self.order {
            Ok(())
        } else {
            Err(RingError::IndexOutOfRange { index: x, order: self.order })
        }
    }

    /// Human-readable name of an element.
    pub fn label(&self, x: Elem) -> String {
        match &self.repr {
            Repr::Cyclic => x.to_string(),
            Repr::Table(t) => t.labels[x].clone(),
            Repr::Product(p) => {
                let parts: Vec<String> = p.decode(x).iter().zip(&p.factors).map(|(&a, f)| f.label(a)).collect();
                format!("({})", parts.join(","))
            }
        }
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements().map(|x| self.label(x)).collect()
    }

    /// Element index of the integer `k * 1`.
    pub fn integer(&self, k: u64) -> Elem {
        let k = (k % self.characteristic as u64) as usize;
        let mut acc = self.zero;
        for _ in 0..k {
            acc = self.add(acc, self.one);
        }
        acc
    }

    pub fn additive_order(&self, x: Elem) -> usize {
        let mut acc = x;
        let mut n = 1;
        while acc != self.zero {
            acc = self.add(acc, x);
            n += 1;
        }
        n
    }

    /// Elements `u` with `u * u = 1`.
    pub fn involutions(&self) -> Vec<Elem> {
        match &self.repr {
            Repr::Product(p) => p.cartesian(p.factors.iter().map(|f| f.involutions()).collect()),
            _ => self.elements().filter(|&u| self.mul(u, u) == self.one).collect(),
        }
    }

    /// Elements with a multiplicative inverse.
    pub fn units(&self) -> Vec<Elem> {
        match &self.repr {
            Repr::Cyclic => self.elements().filter(|&u| gcd(u, self.order) == 1).collect(),
            Repr::Table(_) => self.elements().filter(|&u| self.elements().any(|v| self.mul(u, v) == self.one)).collect(),
            Repr::Product(p) => p.cartesian(p.factors.iter().map(|f| f.units()).collect()),
        }
    }

    /// Elements `e` with `e * e = e`.
    pub fn idempotents(&self) -> Vec<Elem> {
        match &self.repr {
            Repr::Product(p) => p.cartesian(p.factors.iter().map(|f| f.idempotents()).collect()),
            _ => self.elements().filter(|&e| self.mul(e, e) == e).collect(),
        }
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        match &self.repr {
            Repr::Cyclic => gcd(x, self.order) == 1,
            Repr::Table(_) => self.elements().any(|v| self.mul(x, v) == self.one),
            Repr::Product(p) => p.decode(x).iter().zip(&p.factors).all(|(&a, f)| f.is_unit(a)),
        }
    }

    /// True iff the non-units are closed under addition.
    pub fn is_local(&self) -> bool {
        if let Repr::Product(p) = &self.repr {
            // a product of two or more nonzero rings always has (1,0) + (0,1) = 1
            return p.factors.len() < 2 && p.factors[0].is_local();
        }
        let non_units: Vec<Elem> = self.elements().filter(|&x| !self.is_unit(x)).collect();
        let mut is_non_unit = vec![false; self.order];
        for &x in &non_units {
            is_non_unit[x] = true;
        }
        non_units.iter().all(|&a| non_units.iter().all(|&b| is_non_unit[self.add(a, b)]))
    }

    /// The unique maximal ideal (the non-units) of a local ring.
    pub fn maximal_ideal(&self) -> Result<Vec<Elem>, RingError> {
        if !self.is_local() {
            return Err(RingError::NotLocal);
        }
        Ok(self.elements().filter(|&x| !self.is_unit(x)).collect())
    }

    pub fn local_decomposition(&self) -> LocalDecomposition {
        decompose::decompose(self)
    }

    /// Checks the commutative-ring axioms: exhaustively on all triples for
    /// order <= 64, on a fixed pseudo-random sample of triples above.
    pub fn check_axioms(&self) -> Result<(), RingError> {
        let n = self.order;
        if self.zero == self.one {
            return Err(RingError::Axiom("zero equals one".into()));
        }
        for x in 0..n {
            if self.add(x, self.zero) != x {
                return Err(RingError::Axiom(format!("{} + 0 != {}", self.label(x), self.label(x))));
            }
            if self.mul(self.one, x) != x {
                return Err(RingError::Axiom(format!("1 * {} != {}", self.label(x), self.label(x))));
            }
            if self.add(x, self.neg(x)) != self.zero {
                return Err(RingError::Axiom(format!("{} has no additive inverse", self.label(x))));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    return Err(RingError::Axiom(format!("addition not commutative at ({x},{y})")));
                }
                if self.mul(x, y) != self.mul(y, x) {
                    return Err(RingError::Axiom(format!("multiplication not commutative at ({x},{y})")));
                }
            }
            if n > EXHAUSTIVE_AXIOM_LIMIT && x > 64 {
                break;
            }
        }
        let check = |x: Elem, y: Elem, z: Elem| -> Result<(), RingError> {
            if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                return Err(RingError::Axiom(format!("addition not associative at ({x},{y},{z})")));
            }
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                return Err(RingError::Axiom(format!("multiplication not associative at ({x},{y},{z})")));
            }
            if self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z)) {
                return Err(RingError::Axiom(format!("distributivity fails at ({x},{y},{z})")));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_AXIOM_LIMIT {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        check(x, y, z)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x1c4a_11e7);
            for _ in 0..SAMPLED_AXIOM_TRIPLES {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    /// Materializes operation tables for this ring (order <= 4096).
    pub fn to_table_ring(&self) -> Result<FiniteRing, RingError> {
        let n = self.order;
        if n > TABLE_LIMIT {
            return Err(RingError::TooLarge { order: n as u128, limit: TABLE_LIMIT });
        }
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for x in 0..n {
            for y in 0..n {
                add[x * n + y] = self.add(x, y) as u16;
                mul[x * n + y] = self.mul(x, y) as u16;
            }
        }
        let neg = (0..n).map(|x| self.neg(x) as u16).collect();
        Ok(Self::from_parts(add, mul, neg, self.zero, self.one, self.labels()))
    }

    /// Restriction to a subset closed under the operations, with its own identity.
    /// `elements` must be sorted; returns the subring-with-identity and the
    /// position map from parent elements in `elements`.
    pub(crate) fn restrict(&self, elements: &[Elem], identity: Elem) -> FiniteRing {
        let n = elements.len();
        let pos = |x: Elem| elements.binary_search(&x).expect("subset not closed");
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for (i, &x) in elements.iter().enumerate() {
            for (j, &y) in elements.iter().enumerate() {
                add[i * n + j] = pos(self.add(x, y)) as u16;
                mul[i * n + j] = pos(self.mul(x, y)) as u16;
            }
        }
        let neg = elements.iter().map(|&x| pos(self.neg(x)) as u16).collect();
        let labels = elements.iter().map(|&x| self.label(x)).collect();
        Self::from_parts(add, mul, neg, pos(self.zero), pos(identity), labels)
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring of order {} and characteristic {}", self.order, self.characteristic)
    }
}

impl ProductParts {
    fn decode(&self, x: Elem) -> Vec<Elem> {
        self.factors.iter().zip(&self.strides).map(|(f, &s)| (x / s) % f.order).collect()
    }

    fn encode(&self, comps: &[Elem]) -> Elem {
        comps.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    #[inline]
    fn zip_with(&self, x: Elem, y: Elem, op: impl Fn(&FiniteRing, Elem, Elem) -> Elem) -> Elem {
        let mut out = 0;
        for (f, &s) in self.factors.iter().zip(&self.strides) {
            let a = (x / s) % f.order;
            let b = (y / s) % f.order;
            out += op(f, a, b) * s;
        }
        out
    }

    fn cartesian(&self, sets: Vec<Vec<Elem>>) -> Vec<Elem> {
        let mut acc = vec![0usize];
        for (set, &s) in sets.iter().zip(&self.strides) {
            acc = acc.iter().flat_map(|&base| set.iter().map(move |&e| base + e * s)).collect();
        }
        acc.sort_unstable();
        acc
    }
}

fn polynomial_label(coeffs: &[usize], names: &[String]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .zip(names)
        .filter(|(&c, _)| c != 0)
        .map(|(&c, name)| match (c, name.as_str()) {
            (c, "1") => c.to_string(),
            (1, name) => name.to_string(),
            (c, name) => format!("{c}{name}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, k)` with `n = p^k`, if `n` is a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut m = n;
    let mut k = 0;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// Prime-power factorization `[(p, k), ...]` in increasing order of `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> FiniteRing {
        FiniteRing::cyclic(n).unwrap()
    }

    #[test]
    fn cyclic_basics() {
        let r = z(8);
        assert_eq!((r.order(), r.characteristic()), (8, 8));
        assert_eq!(r.mul(3, 3), 1);
        assert_eq!(r.add(5, r.neg(5)), r.zero());
        for x in r.elements() {
            assert_eq!(r.mul(r.one(), x), x);
        }
    }

    #[test]
    fn cyclic_rejects_small_modulus() {
        assert_eq!(FiniteRing::cyclic(1).unwrap_err(), RingError::ModulusTooSmall(1));
        assert_eq!(FiniteRing::cyclic(0).unwrap_err(), RingError::ModulusTooSmall(0));
    }

    #[test]
    fn checked_ops_reject_out_of_range() {
        let r = z(5);
        assert_eq!(r.checked_add(5, 1), Err(RingError::IndexOutOfRange { index: 5, order: 5 }));
        assert_eq!(r.checked_mul(1, 9), Err(RingError::IndexOutOfRange { index: 9, order: 5 }));
        assert!(r.checked_neg(7).is_err());
        assert_eq!(r.checked_mul(2, 3), Ok(1));
    }

    #[test]
    fn involutions_units_idempotents_of_cyclic() {
        assert_eq!(z(8).involutions(), vec![1, 3, 5, 7]);
        assert_eq!(z(16).involutions(), vec![1, 7, 9, 15]);
        assert_eq!(z(12).units(), vec![1, 5, 7, 11]);
        assert_eq!(z(12).idempotents(), vec![0, 1, 4, 9]);
    }

    #[test]
    fn product_is_componentwise() {
        let r = FiniteRing::product(vec![z(4), z(3)]).unwrap();
        assert_eq!((r.order(), r.characteristic()), (12, 12));
        let x = r.from_components(&[3, 2]).unwrap();
        let y = r.from_components(&[2, 2]).unwrap();
        assert_eq!(r.components(r.add(x, y)).unwrap(), vec![1, 1]);
        assert_eq!(r.components(r.mul(x, y)).unwrap(), vec![2, 1]);
        assert_eq!(r.label(x), "(3,2)");
        r.check_axioms().unwrap();
    }

    #[test]
    fn product_involutions_are_componentwise() {
        let a = z(8);
        let b = z(9);
        let r = FiniteRing::product(vec![a.clone(), b.clone()]).unwrap();
        let mut expected = Vec::new();
        for &u in &a.involutions() {
            for &v in &b.involutions() {
                expected.push(r.from_components(&[u, v]).unwrap());
            }
        }
        expected.sort_unstable();
        assert_eq!(r.involutions(), expected);
    }

    #[test]
    fn locality() {
        assert!(!z(12).is_local());
        assert!(z(9).is_local());
        assert_eq!(z(9).maximal_ideal().unwrap(), vec![0, 3, 6]);
        assert_eq!(z(12).maximal_ideal().unwrap_err(), RingError::NotLocal);
        let p = FiniteRing::product(vec![z(2), z(2)]).unwrap();
        assert!(!p.is_local());
        assert_eq!(p.idempotents(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn from_tables_validates() {
        // Z_3 written out by hand
        let add: Vec<usize> = (0..9).map(|i| (i / 3 + i % 3) % 3).collect();
        let mul: Vec<usize> = (0..9).map(|i| (i / 3) * (i % 3) % 3).collect();
        let labels = vec!["0".into(), "1".into(), "2".into()];
        let r = FiniteRing::from_tables(add.clone(), mul.clone(), 0, 1, labels.clone()).unwrap();
        assert_eq!(r.characteristic(), 3);
        let mut broken = mul;
        broken[1 * 3 + 2] = 0;
        assert!(matches!(FiniteRing::from_tables(add, broken, 0, 1, labels), Err(RingError::Axiom(_))));
    }

    #[test]
    fn table_ring_matches_source() {
        let r = z(10);
        let t = r.to_table_ring().unwrap();
        for x in r.elements() {
            for y in r.elements() {
                assert_eq!(r.add(x, y), t.add(x, y));
                assert_eq!(r.mul(x, y), t.mul(x, y));
            }
        }
        assert_eq!(t.units(), r.units());
    }

    #[test]
    fn number_theory_helpers() {
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert!(is_prime(13) && !is_prime(15));
    }
}
