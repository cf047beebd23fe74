//! Ring-level decision procedures for connectivity, planarity and genus 1,
//! plus the graph-level tests they must agree with.

mod construct;

use std::fmt;

use serde::Serialize;

use crate::budget::IsoResult;
use crate::graph::{build_cayley, tensor_product, CayleyGraph, GraphError};
use crate::ring::{prime_power, ring_isomorphic, Atom, FiniteRing, LocalDecomposition, RingError};

pub use construct::{constructive_embedding, ConstructiveEmbedding};

const RECOGNITION_BUDGET: u64 = 1_000_000;

/// Isomorphism class of a local ring, as far as the classification needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "class")]
pub enum LocalClass {
    /// `Z_{p^n}`, `p` odd.
    OddCyclic { p: u64, n: u32 },
    OddLocalOther,
    FieldChar2 { q: usize },
    Z4,
    Z2X2,
    Z2X3,
    Z4A,
    Z2XY,
    Z4B,
    /// `Z_{2^n}`, `n >= 3`.
    Z2N { n: u32 },
    Char2LocalOther,
}

impl fmt::Display for LocalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalClass::OddCyclic { p, n } => write!(f, "Z_{{{p}^{n}}}"),
            LocalClass::OddLocalOther => f.write_str("odd local (non-cyclic)"),
            LocalClass::FieldChar2 { q } => write!(f, "GF({q})"),
            LocalClass::Z4 => f.write_str("Z_4"),
            LocalClass::Z2X2 => f.write_str("Z_2[x]/(x^2)"),
            LocalClass::Z2X3 => f.write_str("Z_2[x]/(x^3)"),
            LocalClass::Z4A => f.write_str("Z_4[x]/(2x,x^2-2)"),
            LocalClass::Z2XY => f.write_str("Z_2[x,y]/(x^2,xy,y^2)"),
            LocalClass::Z4B => f.write_str("Z_4[x]/(x^2,2x)"),
            LocalClass::Z2N { n } => write!(f, "Z_{{2^{n}}}"),
            LocalClass::Char2LocalOther => f.write_str("2-power local outside the catalog"),
        }
    }
}

pub fn classify_local(r: &FiniteRing) -> Result<LocalClass, RingError> {
    if !r.is_local() {
        return Err(RingError::NotLocal);
    }
    let (order, chr) = (r.order(), r.characteristic());
    let (p, k) = prime_power(order as u64).expect("local rings have prime-power order");
    if p != 2 {
        return Ok(if chr == order { LocalClass::OddCyclic { p, n: k } } else { LocalClass::OddLocalOther });
    }
    if chr == order {
        return Ok(match k {
            1 => LocalClass::FieldChar2 { q: 2 },
            2 => LocalClass::Z4,
            n => LocalClass::Z2N { n },
        });
    }
    if chr == 2 && r.maximal_ideal()?.len() == 1 {
        return Ok(LocalClass::FieldChar2 { q: order });
    }
    if order <= 16 {
        for (atom, class) in [
            (Atom::Z2X2, LocalClass::Z2X2),
            (Atom::Z2X3, LocalClass::Z2X3),
            (Atom::Z4A, LocalClass::Z4A),
            (Atom::Z2XY, LocalClass::Z2XY),
            (Atom::Z4B, LocalClass::Z4B),
        ] {
            let model = atom.build()?;
            if model.order() == order
                && matches!(ring_isomorphic(r, &model, RECOGNITION_BUDGET), IsoResult::Isomorphic(_))
            {
                return Ok(class);
            }
        }
    }
    Ok(LocalClass::Char2LocalOther)
}

/// Local classes of the factors, sorted.
pub fn factor_classes(d: &LocalDecomposition) -> Vec<LocalClass> {
    let mut classes: Vec<LocalClass> =
        d.factors().iter().map(|f| classify_local(f).expect("decomposition factors are local")).collect();
    classes.sort();
    classes
}

/// At most one factor of even order, with connected graph, and every other
/// factor `Z_{p^n}` with `p` odd.
pub fn predict_connected(d: &LocalDecomposition) -> bool {
    let mut even = 0;
    for f in d.factors() {
        if f.order() % 2 == 0 {
            even += 1;
            if even > 1 || !build_cayley(f).is_connected() {
                return false;
            }
        } else if !matches!(classify_local(f), Ok(LocalClass::OddCyclic { .. })) {
            return false;
        }
    }
    true
}

/// `R = S`, `T` or `S x T` with `S` a product of characteristic-2 fields and
/// `T` odd-characteristic local or one of `Z_4`, `Z_2[x]/(x^2)`,
/// `Z_2[x]/(x^3)`, `Z_4[x]/(2x,x^2-2)`.
pub fn classify_planar(d: &LocalDecomposition) -> bool {
    planar_by_classes(&factor_classes(d))
}

fn planar_by_classes(classes: &[LocalClass]) -> bool {
    let rest: Vec<&LocalClass> = classes.iter().filter(|c| !matches!(c, LocalClass::FieldChar2 { .. })).collect();
    match rest.as_slice() {
        [] => true,
        [t] => matches!(
            t,
            LocalClass::OddCyclic { .. }
                | LocalClass::OddLocalOther
                | LocalClass::Z4
                | LocalClass::Z2X2
                | LocalClass::Z2X3
                | LocalClass::Z4A
        ),
        _ => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "class")]
pub enum GenusClass {
    Planar,
    Toroidal,
    /// Genus at least 2, with the regularity facts that rule out genus 1.
    Higher { degree: usize, connected: bool },
}

impl fmt::Display for GenusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenusClass::Planar => f.write_str("Planar"),
            GenusClass::Toroidal => f.write_str("Toroidal"),
            GenusClass::Higher { degree, connected: true } => write!(f, "Higher ({degree}-regular)"),
            GenusClass::Higher { degree, connected: false } => write!(f, "Higher ({degree}-regular, disconnected)"),
        }
    }
}

/// A genus class with the clause that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub class: GenusClass,
    pub clause: String,
}

pub fn classify_genus(d: &LocalDecomposition) -> Verdict {
    let classes = factor_classes(d);
    if planar_by_classes(&classes) {
        return Verdict { class: GenusClass::Planar, clause: "planar: R = S, T or S x T".into() };
    }
    use LocalClass::*;
    let toroidal = match classes.as_slice() {
        [Z2XY] => Some("Z_2[x,y]/(x^2,xy,y^2)"),
        [Z4B] => Some("Z_4[x]/(x^2,2x)"),
        [Z2N { .. }] => Some("Z_{2^n}, n >= 3"),
        [OddCyclic { .. }, OddCyclic { .. }] => Some("Z_{p^n} x Z_{q^m}"),
        [OddCyclic { .. }, OddCyclic { .. }, FieldChar2 { q: 2 }] => Some("Z_{p^n} x Z_{q^m} x Z_2"),
        [OddCyclic { .. }, Z4] => Some("Z_{p^n} x Z_4"),
        [OddCyclic { .. }, Z2X2] => Some("Z_{p^n} x Z_2[x]/(x^2)"),
        _ => None,
    };
    if let Some(clause) = toroidal {
        return Verdict { class: GenusClass::Toroidal, clause: format!("genus 1: {clause}") };
    }
    if classes.contains(&Char2LocalOther) {
        let g = d
            .factors()
            .iter()
            .map(build_cayley)
            .reduce(|a, b| tensor_product(&a, &b))
            .expect("at least one factor");
        let mut v = genus_class_from_graph(&g).expect("involutory Cayley graphs are regular");
        v.clause = format!("graph-level (char-2 local factor outside the catalog): {}", v.clause);
        return v;
    }
    let degree = d.factors().iter().map(|f| f.involutions().len()).product();
    let connected = predict_connected(d);
    let clause = if degree == 4 {
        "not genus 1: 4-regular but disconnected".to_string()
    } else {
        format!("not genus 1: {degree}-regular")
    };
    Verdict { class: GenusClass::Higher { degree, connected }, clause }
}

/// Planar iff 1- or 2-regular; toroidal iff connected and 4-regular.
pub fn genus_class_from_graph(g: &CayleyGraph) -> Result<Verdict, GraphError> {
    let degree = g.is_regular().ok_or(GraphError::NotRegular)?;
    let connected = g.is_connected();
    Ok(match degree {
        0..=2 => Verdict { class: GenusClass::Planar, clause: format!("graph is {degree}-regular") },
        4 if connected => Verdict { class: GenusClass::Toroidal, clause: "graph is connected and 4-regular".into() },
        4 => Verdict {
            class: GenusClass::Higher { degree, connected },
            clause: "graph is 4-regular but disconnected".into(),
        },
        _ => Verdict { class: GenusClass::Higher { degree, connected }, clause: format!("graph is {degree}-regular") },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_ring_spec;
    use crate::ring::build_ring;

    fn ring(text: &str) -> FiniteRing {
        build_ring(&parse_ring_spec(text).unwrap()).unwrap()
    }

    #[test]
    fn local_classes() {
        assert_eq!(classify_local(&ring("Z27")), Ok(LocalClass::OddCyclic { p: 3, n: 3 }));
        assert_eq!(classify_local(&ring("GF(9)")), Ok(LocalClass::OddLocalOther));
        assert_eq!(classify_local(&ring("Z2XY")), Ok(LocalClass::Z2XY));
        assert_eq!(classify_local(&ring("Z4B")), Ok(LocalClass::Z4B));
        assert_eq!(classify_local(&ring("Z4A")), Ok(LocalClass::Z4A));
        assert_eq!(classify_local(&ring("Z2X3")), Ok(LocalClass::Z2X3));
        assert_eq!(classify_local(&ring("Z2X2")), Ok(LocalClass::Z2X2));
        assert_eq!(classify_local(&ring("GF(8)")), Ok(LocalClass::FieldChar2 { q: 8 }));
        assert_eq!(classify_local(&ring("Z2")), Ok(LocalClass::FieldChar2 { q: 2 }));
        assert_eq!(classify_local(&ring("Z4")), Ok(LocalClass::Z4));
        assert_eq!(classify_local(&ring("Z32")), Ok(LocalClass::Z2N { n: 5 }));
        assert_eq!(classify_local(&ring("Z6")), Err(RingError::NotLocal));
    }

    #[test]
    fn recognition_survives_relabelling() {
        for atom in [Atom::Z2XY, Atom::Z4B, Atom::Z4A] {
            let t = atom.build().unwrap().to_table_ring().unwrap();
            let class = classify_local(&t).unwrap();
            assert_eq!(format!("{class:?}"), format!("{atom:?}"));
        }
    }

    #[test]
    fn connectivity_predictions() {
        assert!(predict_connected(&ring("Z4 x Z3").local_decomposition()));
        assert!(!predict_connected(&ring("GF(4) x Z3").local_decomposition()));
        assert!(!predict_connected(&ring("GF(9)").local_decomposition()));
        assert!(!predict_connected(&ring("Z2 x Z2").local_decomposition()));
        assert!(predict_connected(&ring("Z3 x Z5 x Z2").local_decomposition()));
    }

    #[test]
    fn planar_predictions() {
        assert!(classify_planar(&ring("Z2 x Z2 x Z49").local_decomposition()));
        assert!(classify_planar(&ring("Z4[x]/(2x,x^2-2)").local_decomposition()));
        assert!(classify_planar(&ring("GF(4) x GF(8)").local_decomposition()));
        assert!(!classify_planar(&ring("Z8").local_decomposition()));
        assert!(!classify_planar(&ring("Z3 x Z5").local_decomposition()));
    }

    #[test]
    fn genus_verdicts() {
        assert_eq!(classify_genus(&ring("Z16").local_decomposition()).class, GenusClass::Toroidal);
        let v = classify_genus(&ring("Z9 x Z2[x]/(x^2)").local_decomposition());
        assert_eq!(v.class, GenusClass::Toroidal);
        assert!(v.clause.contains("Z_2[x]/(x^2)"));
        assert_eq!(
            classify_genus(&ring("Z3 x Z3 x Z3").local_decomposition()).class,
            GenusClass::Higher { degree: 8, connected: true }
        );
        assert_eq!(classify_genus(&ring("Z9 x Z4").local_decomposition()).clause, "genus 1: Z_{p^n} x Z_4");
        assert_eq!(classify_genus(&ring("Z5 x Z5").local_decomposition()).class, GenusClass::Toroidal);
        assert_eq!(
            classify_genus(&ring("Z3 x Z4 x Z2").local_decomposition()).class,
            GenusClass::Higher { degree: 4, connected: false }
        );
    }

    #[test]
    fn graph_level_verdicts() {
        let v = |t: &str| genus_class_from_graph(&build_cayley(&ring(t))).unwrap().class;
        assert_eq!(v("Z12"), GenusClass::Toroidal);
        assert_eq!(v("Z5 x Z5"), GenusClass::Toroidal);
        assert_eq!(v("Z2 x Z2 x Z2 x Z2"), GenusClass::Planar);
        assert_eq!(v("Z3 x Z3 x Z3"), GenusClass::Higher { degree: 8, connected: true });
        let irregular = CayleyGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(genus_class_from_graph(&irregular).is_err());
    }
}
