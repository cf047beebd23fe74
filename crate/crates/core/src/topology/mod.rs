//! Orientable embeddings: rotation systems, face tracing, planarity, genus
//! search and the explicit torus constructions.

mod constructions;
mod genus;
mod planarity;

use serde::Serialize;

use crate::graph::{CayleyGraph, Girth};

pub use constructions::{
    commutator_rotation, cycle_tensor_torus_rotation, k44_torus_rotation, transport_rotation, z2n_torus_rotation,
};
pub use genus::{min_genus, min_genus_seeded, DEFAULT_GENUS_BUDGET};
pub use planarity::{is_planar, planar_rotation, KuratowskiKind, KuratowskiWitness, Planarity};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopologyError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph needs at least {0} vertices")]
    TooSmall(usize),
    #[error("rotation at vertex {0} is not a permutation of its neighbours")]
    InvalidRotation(usize),
    #[error("rotation system has {got} vertices, graph has {expected}")]
    WrongVertexCount { expected: usize, got: usize },
    #[error("{0}")]
    Parameter(String),
}

/// Cyclic order of neighbours around each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RotationSystem {
    order: Vec<Vec<u32>>,
}

impl RotationSystem {
    pub fn new(order: Vec<Vec<u32>>) -> Self {
        RotationSystem { order }
    }

    /// Neighbours in increasing order at every vertex.
    pub fn sorted(g: &CayleyGraph) -> Self {
        RotationSystem { order: (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect() }
    }

    pub fn at(&self, v: usize) -> &[u32] {
        &self.order[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn into_inner(self) -> Vec<Vec<u32>> {
        self.order
    }

    pub fn validate(&self, g: &CayleyGraph) -> Result<(), TopologyError> {
        if self.order.len() != g.vertex_count() {
            return Err(TopologyError::WrongVertexCount { expected: g.vertex_count(), got: self.order.len() });
        }
        for (v, list) in self.order.iter().enumerate() {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(TopologyError::InvalidRotation(v));
            }
        }
        Ok(())
    }

    /// Mirror image: every cyclic order reversed.
    pub fn reversed(&self) -> Self {
        RotationSystem { order: self.order.iter().map(|l| l.iter().rev().copied().collect()).collect() }
    }
}

/// Directed-edge ("dart") indexing of a graph: dart `offsets[v] + i` leaves
/// `v` towards its `i`-th neighbour in sorted order.
#[derive(Debug, Clone)]
pub(crate) struct Darts {
    pub offsets: Vec<usize>,
    pub tail: Vec<u32>,
    pub head: Vec<u32>,
    pub rev: Vec<usize>,
}

impl Darts {
    pub fn new(g: &CayleyGraph) -> Self {
        let n = g.vertex_count();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut tail = Vec::new();
        let mut head = Vec::new();
        offsets.push(0);
        for v in 0..n {
            for &w in g.neighbors(v) {
                tail.push(v as u32);
                head.push(w);
            }
            offsets.push(tail.len());
        }
        let rev = (0..tail.len())
            .map(|d| {
                let (v, w) = (tail[d] as usize, head[d]);
                let slot = g.neighbors(w as usize).binary_search(&(v as u32)).expect("symmetric adjacency");
                offsets[w as usize] + slot
            })
            .collect();
        Darts { offsets, tail, head, rev }
    }

    pub fn len(&self) -> usize {
        self.tail.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Successor map of a rotation system: `succ[d]` is the next dart around
    /// the tail of `d`.
    pub fn successors(&self, g: &CayleyGraph, rot: &RotationSystem) -> Vec<usize> {
        let mut succ = vec![usize::MAX; self.len()];
        for v in 0..g.vertex_count() {
            let list = rot.at(v);
            let slot = |w: u32| self.offsets[v] + g.neighbors(v).binary_search(&w).expect("validated rotation");
            for i in 0..list.len() {
                succ[slot(list[i])] = slot(list[(i + 1) % list.len()]);
            }
        }
        succ
    }

    /// Orbits of the face permutation `d -> succ[rev[d]]`, each starting at
    /// its smallest dart, in order of that dart.
    pub fn orbits(&self, succ: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut faces = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                d = succ[self.rev[d]];
            }
            faces.push(face);
        }
        faces
    }
}

/// Result of tracing the faces of a rotation system on a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceTrace {
    pub face_count: usize,
    /// Each face as its sequence of directed edges `[u, v]`.
    pub faces: Vec<Vec<[u32; 2]>>,
    pub genus: usize,
}

/// Traces the faces of `rot` on a connected graph: entering `v` from `u`, the
/// walk leaves along the successor of `u` in the rotation at `v`.
pub fn trace_faces(g: &CayleyGraph, rot: &RotationSystem) -> Result<FaceTrace, TopologyError> {
    if !g.is_connected() {
        return Err(TopologyError::Disconnected);
    }
    let emb = Embedding::from_rotation(g, rot.clone())?;
    Ok(FaceTrace { face_count: emb.faces.len(), faces: emb.faces, genus: emb.genus })
}

/// A rotation system with its traced faces and the genus they imply. For a
/// disconnected graph the genus is the sum over components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub vertices: usize,
    pub rotation: Vec<Vec<u32>>,
    pub faces: Vec<Vec<[u32; 2]>>,
    pub genus: usize,
}

impl Embedding {
    pub fn from_rotation(g: &CayleyGraph, rot: RotationSystem) -> Result<Self, TopologyError> {
        rot.validate(g)?;
        let darts = Darts::new(g);
        let succ = darts.successors(g, &rot);
        let orbits = darts.orbits(&succ);
        let faces: Vec<Vec<[u32; 2]>> = orbits
            .iter()
            .map(|o| o.iter().map(|&d| [darts.tail[d], darts.head[d]]).collect())
            .collect();
        let components = g.connected_components();
        let isolated = components.iter().filter(|c| c.len() == 1).count();
        // sum over components of (2 - V_c + E_c - F_c) / 2; an isolated vertex bounds one face
        let twice = 2 * components.len() as i64 - g.vertex_count() as i64 + g.edge_count() as i64
            - faces.len() as i64
            - isolated as i64;
        debug_assert!(twice >= 0 && twice % 2 == 0, "Euler characteristic out of range");
        Ok(Embedding { vertices: g.vertex_count(), rotation: rot.into_inner(), faces, genus: (twice / 2) as usize })
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn rotation_system(&self) -> RotationSystem {
        RotationSystem::new(self.rotation.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerBoundReason {
    EulerGirth,
    ExhaustiveSearch,
}

/// Evidence about the genus of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GenusCertificate {
    /// An embedding realizing the genus; exact when produced by a completed search.
    Embedding(Embedding),
    LowerBound { bound: usize, reason: LowerBoundReason },
    /// Search ran out of budget: the genus lies in `low..=high`.
    Bounds { low: usize, high: usize },
    /// Verdict taken from a classification theorem.
    Classified { theorem: String },
}

impl GenusCertificate {
    /// The genus when this certificate pins it down exactly.
    pub fn exact_genus(&self) -> Option<usize> {
        match self {
            GenusCertificate::Embedding(e) => Some(e.genus),
            GenusCertificate::Bounds { low, high } if low == high => Some(*low),
            _ => None,
        }
    }
}

/// Euler's formula with faces of length at least the girth `k`:
/// `genus >= ceil(E (k - 2) / (2k) - (V - 2) / 2)`, clamped at zero.
pub fn euler_genus_lower_bound(g: &CayleyGraph) -> Result<usize, TopologyError> {
    if !g.is_connected() {
        return Err(TopologyError::Disconnected);
    }
    if g.vertex_count() < 3 {
        return Err(TopologyError::TooSmall(3));
    }
    let k = match g.girth() {
        Girth::Finite(k) => k as i64,
        Girth::Infinite => return Ok(0),
    };
    let (v, e) = (g.vertex_count() as i64, g.edge_count() as i64);
    let num = e * (k - 2) - k * (v - 2);
    if num <= 0 {
        return Ok(0);
    }
    let den = 2 * k;
    Ok(((num + den - 1) / den) as usize)
}

/// `ceil((m - 2)(n - 2) / 4)`.
pub fn genus_complete_bipartite(m: usize, n: usize) -> Result<usize, TopologyError> {
    if m < 2 || n < 2 {
        return Err(TopologyError::Parameter(format!("K_{{{m},{n}}}: both sides need at least 2 vertices")));
    }
    Ok(((m - 2) * (n - 2)).div_ceil(4))
}

/// Genus of `C_m (x) C_n`: 2 when both are even (two toroidal components), else 1.
pub fn genus_cycle_tensor(m: usize, n: usize) -> Result<usize, TopologyError> {
    if m < 3 || n < 3 {
        return Err(TopologyError::Parameter(format!("C_{m} (x) C_{n}: cycles need length at least 3")));
    }
    Ok(if m % 2 == 0 && n % 2 == 0 { 2 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cayley, complete_bipartite, cycle_graph, tensor_product};
    use crate::ring::FiniteRing;

    #[test]
    fn cycle_has_two_faces() {
        for n in 3..10 {
            let c = cycle_graph(n).unwrap();
            let t = trace_faces(&c, &RotationSystem::sorted(&c)).unwrap();
            assert_eq!((t.face_count, t.genus), (2, 0));
        }
    }

    #[test]
    fn faces_partition_the_darts() {
        let g = complete_bipartite(3, 3).unwrap();
        let t = trace_faces(&g, &RotationSystem::sorted(&g)).unwrap();
        let mut darts: Vec<[u32; 2]> = t.faces.concat();
        darts.sort_unstable();
        let mut expected: Vec<[u32; 2]> = g.edges().iter().flat_map(|&(u, v)| [[u as u32, v as u32], [v as u32, u as u32]]).collect();
        expected.sort_unstable();
        assert_eq!(darts, expected);
        let (v, e) = (6i64, 9i64);
        assert_eq!(v - e + t.face_count as i64, 2 - 2 * t.genus as i64);
    }

    #[test]
    fn trace_rejects_bad_input() {
        let g = complete_bipartite(2, 2).unwrap();
        let bad = RotationSystem::new(vec![vec![2, 3], vec![2, 3], vec![0, 1], vec![0]]);
        assert_eq!(trace_faces(&g, &bad).unwrap_err(), TopologyError::InvalidRotation(3));
        let two = crate::graph::disjoint_union(&cycle_graph(3).unwrap(), &cycle_graph(3).unwrap());
        assert_eq!(trace_faces(&two, &RotationSystem::sorted(&two)).unwrap_err(), TopologyError::Disconnected);
    }

    #[test]
    fn euler_bounds() {
        let z8 = build_cayley(&FiniteRing::cyclic(8).unwrap());
        assert_eq!(euler_genus_lower_bound(&z8).unwrap(), 1);
        let z16 = build_cayley(&FiniteRing::cyclic(16).unwrap());
        assert_eq!(euler_genus_lower_bound(&z16).unwrap(), 1);
        // girth 4, so 30 * 2 - 4 * 13 = 8 > 0
        let t = tensor_product(&cycle_graph(3).unwrap(), &cycle_graph(5).unwrap());
        assert_eq!(euler_genus_lower_bound(&t).unwrap(), 1);
        assert_eq!(euler_genus_lower_bound(&cycle_graph(5).unwrap()).unwrap(), 0);
        let k5 = crate::graph::complete_graph(5);
        assert_eq!(euler_genus_lower_bound(&k5).unwrap(), 1);
    }

    #[test]
    fn closed_formulas() {
        assert_eq!(genus_complete_bipartite(4, 4), Ok(1));
        assert_eq!(genus_complete_bipartite(2, 7), Ok(0));
        assert_eq!(genus_complete_bipartite(3, 7), Ok(2));
        assert!(genus_complete_bipartite(1, 7).is_err());
        assert_eq!(genus_cycle_tensor(3, 5), Ok(1));
        assert_eq!(genus_cycle_tensor(4, 4), Ok(2));
        assert_eq!(genus_cycle_tensor(9, 4), Ok(1));
        assert!(genus_cycle_tensor(2, 5).is_err());
    }
}
