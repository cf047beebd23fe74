//! Ring specifications: products of catalog atoms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ring::{Atom, RingError};

/// Syntax tree of a ring: a catalog atom or a product of specs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingSpec {
    Atom(Atom),
    Product(Vec<RingSpec>),
}

impl RingSpec {
    /// Product of `children`; a single child stands for itself.
    pub fn product(mut children: Vec<RingSpec>) -> RingSpec {
        if children.len() == 1 {
            children.pop().unwrap()
        } else {
            RingSpec::Product(children)
        }
    }

    pub fn atom(atom: Atom) -> RingSpec {
        RingSpec::Atom(atom)
    }

    /// Leaves in left-to-right order.
    pub fn atoms(&self) -> Vec<Atom> {
        match self {
            RingSpec::Atom(a) => vec![*a],
            RingSpec::Product(cs) => cs.iter().flat_map(RingSpec::atoms).collect(),
        }
    }

    /// Number of elements, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        self.atoms().iter().try_fold(1u128, |acc, a| acc.checked_mul(a.order()?))
    }

    pub fn validate(&self) -> Result<(), RingError> {
        match self {
            RingSpec::Atom(a) => a.validate(),
            RingSpec::Product(cs) if cs.is_empty() => Err(RingError::Malformed("empty product".into())),
            RingSpec::Product(cs) => cs.iter().try_for_each(RingSpec::validate),
        }
    }
}

/// Canonical spelling: `Z4 x Z3`, `GF(8)`, `Z4[x]/(x^2,2x)`; nested products
/// are parenthesized.
pub fn format_ring_spec(spec: &RingSpec) -> String {
    spec.to_string()
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Zn(n) => write!(f, "Z{n}"),
            Atom::Gf { p, k } => match p.checked_pow(*k) {
                Some(q) => write!(f, "GF({q})"),
                None => write!(f, "GF({p},{k})"),
            },
            named => f.write_str(named.alias().expect("named atoms have aliases")),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Atom(a) => write!(f, "{a}"),
            RingSpec::Product(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    match c {
                        RingSpec::Product(_) => write!(f, "({c})")?,
                        RingSpec::Atom(_) => write!(f, "{c}")?,
                    }
                }
                Ok(())
            }
        }
    }
}
