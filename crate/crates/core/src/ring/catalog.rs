//! The fixed catalog of local atoms and the constructor from ring specs.

use serde::{Deserialize, Serialize};

use super::{is_prime, FiniteRing, RingError, StructureConstants, TABLE_LIMIT};
use crate::spec::RingSpec;

/// A catalog ring that can appear as a leaf of a [`RingSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Atom {
    /// `Z_n`.
    Zn(u64),
    /// The field with `p^k` elements.
    Gf { p: u64, k: u32 },
    /// `Z_2[x]/(x^2)`.
    Z2X2,
    /// `Z_2[x]/(x^3)`.
    Z2X3,
    /// `Z_4[x]/(2x, x^2 - 2)`.
    Z4A,
    /// `Z_2[x,y]/(x^2, xy, y^2)`.
    Z2XY,
    /// `Z_4[x]/(x^2, 2x)`.
    Z4B,
}

impl Atom {
    pub const NAMED: [Atom; 5] = [Atom::Z2X2, Atom::Z2X3, Atom::Z4A, Atom::Z2XY, Atom::Z4B];

    /// Short catalog identifier (`Z2X2`, ...) for named atoms.
    pub fn catalog_id(&self) -> Option<&'static str> {
        Some(match self {
            Atom::Z2X2 => "Z2X2",
            Atom::Z2X3 => "Z2X3",
            Atom::Z4A => "Z4A",
            Atom::Z2XY => "Z2XY",
            Atom::Z4B => "Z4B",
            Atom::Zn(_) | Atom::Gf { .. } => return None,
        })
    }

    /// The quotient-ring spelling accepted by the parser.
    pub fn alias(&self) -> Option<&'static str> {
        Some(match self {
            Atom::Z2X2 => "Z2[x]/(x^2)",
            Atom::Z2X3 => "Z2[x]/(x^3)",
            Atom::Z4A => "Z4[x]/(2x,x^2-2)",
            Atom::Z2XY => "Z2[x,y]/(x^2,xy,y^2)",
            Atom::Z4B => "Z4[x]/(x^2,2x)",
            Atom::Zn(_) | Atom::Gf { .. } => return None,
        })
    }

    pub fn from_catalog_id(id: &str) -> Result<Atom, RingError> {
        Atom::NAMED
            .into_iter()
            .find(|a| a.catalog_id() == Some(id) || a.alias() == Some(id))
            .ok_or_else(|| RingError::UnknownAtom(id.to_string()))
    }

    /// Number of elements, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        match *self {
            Atom::Zn(n) => Some(n as u128),
            Atom::Gf { p, k } => (p as u128).checked_pow(k),
            Atom::Z2X2 => Some(4),
            Atom::Z2X3 | Atom::Z4A | Atom::Z2XY | Atom::Z4B => Some(8),
        }
    }

    pub fn validate(&self) -> Result<(), RingError> {
        match *self {
            Atom::Zn(n) if n < 2 => Err(RingError::ModulusTooSmall(n)),
            Atom::Gf { p, k } if !is_prime(p) => Err(RingError::NotPrime { p, k }),
            Atom::Gf { p, k } if k == 0 => Err(RingError::ZeroDegree { p, k }),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<FiniteRing, RingError> {
        self.validate()?;
        match *self {
            Atom::Zn(n) => FiniteRing::cyclic(n),
            Atom::Gf { p, k } => galois_field(p, k),
            named => FiniteRing::from_structure_constants_unchecked(&named_presentation(named)),
        }
    }
}

/// Builds the ring described by `spec`.
pub fn build_ring(spec: &RingSpec) -> Result<FiniteRing, RingError> {
    match spec {
        RingSpec::Atom(a) => a.build(),
        RingSpec::Product(children) => {
            if children.is_empty() {
                return Err(RingError::Malformed("empty product".into()));
            }
            let factors = children.iter().map(build_ring).collect::<Result<Vec<_>, _>>()?;
            FiniteRing::product(factors)
        }
    }
}

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

fn named_presentation(atom: Atom) -> StructureConstants {
    // basis vectors of length 2 and 3
    let e2 = |i: usize| -> Vec<u64> { (0..2).map(|j| u64::from(i == j)).collect() };
    let e3 = |i: usize| -> Vec<u64> { (0..3).map(|j| u64::from(i == j)).collect() };
    match atom {
        Atom::Z2X2 => StructureConstants {
            moduli: vec![2, 2],
            basis_names: names(&["1", "x"]),
            products: vec![vec![e2(0), e2(1)], vec![e2(1), vec![0, 0]]],
            one: e2(0),
        },
        Atom::Z2X3 => StructureConstants {
            moduli: vec![2, 2, 2],
            basis_names: names(&["1", "x", "x^2"]),
            products: vec![
                vec![e3(0), e3(1), e3(2)],
                vec![e3(1), e3(2), vec![0; 3]],
                vec![e3(2), vec![0; 3], vec![0; 3]],
            ],
            one: e3(0),
        },
        // x^2 = 2, 2x = 0
        Atom::Z4A => StructureConstants {
            moduli: vec![4, 2],
            basis_names: names(&["1", "x"]),
            products: vec![vec![e2(0), e2(1)], vec![e2(1), vec![2, 0]]],
            one: e2(0),
        },
        Atom::Z2XY => StructureConstants {
            moduli: vec![2, 2, 2],
            basis_names: names(&["1", "x", "y"]),
            products: vec![
                vec![e3(0), e3(1), e3(2)],
                vec![e3(1), vec![0; 3], vec![0; 3]],
                vec![e3(2), vec![0; 3], vec![0; 3]],
            ],
            one: e3(0),
        },
        // x^2 = 0, 2x = 0
        Atom::Z4B => StructureConstants {
            moduli: vec![4, 2],
            basis_names: names(&["1", "x"]),
            products: vec![vec![e2(0), e2(1)], vec![e2(1), vec![0, 0]]],
            one: e2(0),
        },
        Atom::Zn(_) | Atom::Gf { .. } => unreachable!("not a named atom"),
    }
}

/// Lexicographically smallest monic irreducible polynomial of degree `k`
/// over `Z_p`, as coefficients `[c_0, ..., c_{k-1}]` of the non-leading terms.
/// Candidates are ordered by `sum c_i p^i`.
pub fn irreducible_polynomial(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    let total = p.pow(k as u32);
    for code in 0..total {
        let mut c = digits(code, p, k);
        c.push(1);
        if is_irreducible(&c, p) {
            c.pop();
            return c;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn digits(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut divisor = digits(code, p, d);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

// remainder of a by a monic divisor
fn poly_rem(a: &[u64], divisor: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dd = divisor.len() - 1;
    while r.len() > dd {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (i, &c) in divisor.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn galois_field(p: u64, k: u32) -> Result<FiniteRing, RingError> {
    let order = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
    if order > TABLE_LIMIT as u128 {
        return Err(RingError::TooLarge { order, limit: TABLE_LIMIT });
    }
    if k == 1 {
        let z = FiniteRing::cyclic(p)?;
        return z.to_table_ring();
    }
    let q = order as usize;
    let kk = k as usize;
    let modulus = irreducible_polynomial(p, k);
    let pu = p as usize;
    let weights: Vec<usize> = (0..kk).map(|i| pu.pow(i as u32)).collect();
    let decode = |x: usize| -> Vec<usize> { (0..kk).map(|i| (x / weights[i]) % pu).collect() };
    let encode = |c: &[usize]| -> usize { c.iter().zip(&weights).map(|(v, w)| v * w).sum() };
    // multiply by the generator `a` of the polynomial basis
    let times_a = |x: usize| -> usize {
        let c = decode(x);
        let top = c[kk - 1];
        let mut out = vec![0usize; kk];
        for i in (1..kk).rev() {
            out[i] = c[i - 1];
        }
        for (i, &m) in modulus.iter().enumerate() {
            out[i] = (out[i] + pu * pu - top * m as usize) % pu;
        }
        encode(&out)
    };
    // x * y through Horner on the coefficients of y
    let mut mul = vec![0u16; q * q];
    let coords: Vec<Vec<usize>> = (0..q).map(decode).collect();
    let add_elems = |x: usize, y: usize| -> usize {
        let s: Vec<usize> = coords[x].iter().zip(&coords[y]).map(|(a, b)| (a + b) % pu).collect();
        encode(&s)
    };
    let scale = |x: usize, s: usize| -> usize {
        let v: Vec<usize> = coords[x].iter().map(|a| a * s % pu).collect();
        encode(&v)
    };
    // powers x * a^i for all x
    let mut shifted = vec![vec![0usize; q]; kk];
    for x in 0..q {
        shifted[0][x] = x;
        for i in 1..kk {
            shifted[i][x] = times_a(shifted[i - 1][x]);
        }
    }
    for x in 0..q {
        for y in x..q {
            let mut acc = 0;
            for (i, &c) in coords[y].iter().enumerate() {
                if c != 0 {
                    acc = add_elems(acc, scale(shifted[i][x], c));
                }
            }
            mul[x * q + y] = acc as u16;
            mul[y * q + x] = acc as u16;
        }
    }
    let mut add = vec![0u16; q * q];
    for x in 0..q {
        for y in 0..q {
            add[x * q + y] = add_elems(x, y) as u16;
        }
    }
    let neg = coords
        .iter()
        .map(|c| {
            let n: Vec<usize> = c.iter().map(|v| (pu - v) % pu).collect();
            encode(&n) as u16
        })
        .collect();
    let basis: Vec<String> = (0..kk)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "a".to_string(),
            i => format!("a^{i}"),
        })
        .collect();
    let labels = coords.iter().map(|c| super::polynomial_label(c, &basis)).collect();
    Ok(FiniteRing::from_parts(add, mul, neg, 0, 1, labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_atoms_satisfy_axioms() {
        for atom in Atom::NAMED {
            let r = atom.build().unwrap();
            r.check_axioms().unwrap();
            assert!(r.is_local(), "{atom:?} should be local");
        }
    }

    #[test]
    fn z2xy_shape() {
        let r = Atom::Z2XY.build().unwrap();
        assert_eq!((r.order(), r.characteristic()), (8, 2));
        let labels = r.labels();
        assert_eq!(labels, ["0", "1", "x", "1+x", "y", "1+y", "x+y", "1+x+y"]);
        let m = r.maximal_ideal().unwrap();
        let m_labels: Vec<String> = m.iter().map(|&e| r.label(e)).collect();
        assert_eq!(m_labels, ["0", "x", "y", "x+y"]);
        // M^2 = 0
        for &a in &m {
            for &b in &m {
                assert_eq!(r.mul(a, b), r.zero());
            }
        }
    }

    #[test]
    fn z4b_units_and_relations() {
        let r = Atom::Z4B.build().unwrap();
        assert_eq!((r.order(), r.characteristic()), (8, 4));
        let units: Vec<String> = r.units().iter().map(|&u| r.label(u)).collect();
        assert_eq!(units, ["1", "3", "1+x", "3+x"]);
        let x = 4; // coefficient vector (0, 1)
        assert_eq!(r.label(x), "x");
        assert_eq!(r.mul(x, x), r.zero());
        assert_eq!(r.add(x, x), r.zero());
    }

    #[test]
    fn z4a_relations() {
        let r = Atom::Z4A.build().unwrap();
        let x = 4;
        assert_eq!(r.label(r.mul(x, x)), "2");
        assert_eq!(r.add(x, x), r.zero());
        assert_eq!(r.involutions().len(), 2);
    }

    #[test]
    fn z2x2_and_z2x3() {
        let r = Atom::Z2X2.build().unwrap();
        assert_eq!(r.mul(2, 2), 0);
        let r3 = Atom::Z2X3.build().unwrap();
        assert_eq!(r3.label(r3.mul(2, 2)), "x^2");
        assert_eq!(r3.mul(2, r3.mul(2, 2)), 0);
    }

    #[test]
    fn irreducible_choices_are_deterministic() {
        assert_eq!(irreducible_polynomial(2, 2), vec![1, 1]); // x^2 + x + 1
        assert_eq!(irreducible_polynomial(2, 3), vec![1, 1, 0]); // x^3 + x + 1
        assert_eq!(irreducible_polynomial(3, 2), vec![1, 0]); // x^2 + 1
        assert_eq!(irreducible_polynomial(2, 4), vec![1, 1, 0, 0]); // x^4 + x + 1
    }

    #[test]
    fn galois_fields_are_fields() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4), (7, 2)] {
            let r = Atom::Gf { p, k }.build().unwrap();
            assert_eq!(r.order(), (p as usize).pow(k));
            assert_eq!(r.characteristic(), p as usize);
            assert_eq!(r.units().len(), r.order() - 1, "GF({p}^{k})");
            r.check_axioms().unwrap();
        }
        assert_eq!(Atom::Gf { p: 2, k: 2 }.build().unwrap().involutions(), vec![1]);
    }

    #[test]
    fn invalid_atoms_are_rejected() {
        assert_eq!(Atom::Gf { p: 4, k: 1 }.build().unwrap_err(), RingError::NotPrime { p: 4, k: 1 });
        assert_eq!(Atom::Gf { p: 3, k: 0 }.build().unwrap_err(), RingError::ZeroDegree { p: 3, k: 0 });
        assert_eq!(Atom::Zn(1).build().unwrap_err(), RingError::ModulusTooSmall(1));
        assert!(matches!(Atom::Gf { p: 2, k: 13 }.build(), Err(RingError::TooLarge { .. })));
        assert_eq!(Atom::from_catalog_id("Z9Q"), Err(RingError::UnknownAtom("Z9Q".into())));
        assert_eq!(Atom::from_catalog_id("Z4B"), Ok(Atom::Z4B));
    }

    #[test]
    fn build_from_spec() {
        let spec = RingSpec::Product(vec![RingSpec::Atom(Atom::Zn(4)), RingSpec::Atom(Atom::Zn(3))]);
        let r = build_ring(&spec).unwrap();
        assert_eq!((r.order(), r.characteristic()), (12, 12));
        let r = build_ring(&RingSpec::Atom(Atom::Zn(8))).unwrap();
        assert_eq!((r.order(), r.characteristic()), (8, 8));
    }
}
