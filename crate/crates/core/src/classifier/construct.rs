//! Genus-1 certificates for the toroidal families, moved onto `Γ(R)` by an
//! explicit graph isomorphism when the ring's labelling differs from the
//! model's.

use serde::Serialize;

use super::{factor_classes, LocalClass};
use crate::budget::IsoResult;
use crate::graph::{build_cayley, complete_bipartite, cycle_graph, is_isomorphic, tensor_product, CayleyGraph};
use crate::ring::FiniteRing;
use crate::topology::{
    cycle_tensor_torus_rotation, k44_torus_rotation, transport_rotation, z2n_torus_rotation, Embedding,
    RotationSystem,
};

const TRANSPORT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructiveEmbedding {
    /// Which construction was used, e.g. `C_3 (x) C_5 diagonal grid`.
    pub family: String,
    pub embedding: Embedding,
}

/// A face-traced genus-1 embedding of `Γ(r)` when `r` falls in a family with
/// a known construction, `None` otherwise (or if the isomorphism onto the
/// model cannot be found within budget).
pub fn constructive_embedding(r: &FiniteRing) -> Option<ConstructiveEmbedding> {
    let classes = factor_classes(&r.local_decomposition());
    let (family, model, rotation) = model_for(&classes, r.order())?;
    let g = build_cayley(r);
    let rot = if g == model {
        rotation
    } else {
        match is_isomorphic(&g, &model, TRANSPORT_BUDGET) {
            IsoResult::Isomorphic(map) => transport_rotation(&g, &rotation, &map).ok()?,
            _ => return None,
        }
    };
    let embedding = Embedding::from_rotation(&g, rot).ok()?;
    (embedding.genus == 1).then_some(ConstructiveEmbedding { family, embedding })
}

fn model_for(classes: &[LocalClass], order: usize) -> Option<(String, CayleyGraph, RotationSystem)> {
    use LocalClass::*;
    let odd = |c: &LocalClass| match c {
        OddCyclic { p, n } => Some((*p as usize).pow(*n)),
        _ => None,
    };
    let grid = |m: usize, n: usize| -> Option<(String, CayleyGraph, RotationSystem)> {
        let model = tensor_product(&cycle_graph(m).ok()?, &cycle_graph(n).ok()?);
        Some((format!("C_{m} (x) C_{n} diagonal grid"), model, cycle_tensor_torus_rotation(m, n).ok()?))
    };
    match classes {
        [Z2N { n }] => {
            let model = build_cayley(&FiniteRing::cyclic(1u64 << n).ok()?);
            Some((format!("Z_{} commutator rotation", 1u64 << n), model, z2n_torus_rotation(*n).ok()?))
        }
        [Z2XY] | [Z4B] if order == 8 => {
            Some(("K_{4,4} commutator rotation".into(), complete_bipartite(4, 4).ok()?, k44_torus_rotation()))
        }
        [a, b] if odd(a).is_some() && odd(b).is_some() => grid(odd(a)?, odd(b)?),
        // C_b (x) K_2 = C_{2b} for odd b
        [a, b, FieldChar2 { q: 2 }] => grid(odd(a)?, 2 * odd(b)?),
        [a, Z4] | [a, Z2X2] => grid(odd(a)?, 4),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_ring_spec;
    use crate::ring::build_ring;

    fn certify(text: &str) -> Option<ConstructiveEmbedding> {
        constructive_embedding(&build_ring(&parse_ring_spec(text).unwrap()).unwrap())
    }

    #[test]
    fn every_toroidal_family_has_a_certificate() {
        for text in [
            "Z8", "Z16", "Z32", "Z2XY", "Z4B", "Z15", "Z3 x Z5", "Z3 x Z9", "Z12", "Z3 x Z4", "Z3 x Z2X2",
            "Z3 x Z5 x Z2", "Z2 x Z3 x Z3", "Z5 x Z5", "Z9 x Z4",
        ] {
            let c = certify(text).unwrap_or_else(|| panic!("{text}"));
            let e = &c.embedding;
            assert_eq!(e.genus, 1, "{text}");
            let edges: usize = e.rotation.iter().map(Vec::len).sum::<usize>() / 2;
            assert_eq!(e.vertices as i64 - edges as i64 + e.face_count() as i64, 0, "{text}");
        }
    }

    #[test]
    fn other_rings_have_none() {
        for text in ["Z3", "Z3 x Z3 x Z3", "GF(4)", "Z9 x Z4 x Z2", "Z2X3"] {
            assert!(certify(text).is_none(), "{text}");
        }
    }

    #[test]
    fn native_labelling_needs_no_transport() {
        let r = build_ring(&parse_ring_spec("Z16").unwrap()).unwrap();
        let c = constructive_embedding(&r).unwrap();
        assert_eq!(c.embedding.rotation, z2n_torus_rotation(4).unwrap().into_inner());
    }
}
