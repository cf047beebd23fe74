//! Simple undirected graphs, the involutory Cayley graph of a ring, and the
//! graph-theoretic primitives used by the classification.

mod export;
mod iso;

use std::collections::VecDeque;

use serde::{Serialize, Serializer};

use crate::ring::FiniteRing;

pub use export::{to_dot, to_json_document, AdjacencyDocument};
pub use iso::is_isomorphic;

/// Graphs above this size skip the adjacency bitsets and use binary search.
const BITSET_LIMIT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("cycle graph needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("complete bipartite graph needs both sides nonempty")]
    EmptySide,
    #[error("graph is not 2-regular")]
    NotTwoRegular,
    #[error("graph is not regular")]
    NotRegular,
    #[error("edge ({0}, {1}) is a loop or out of range")]
    BadEdge(usize, usize),
}

/// Simple undirected graph with sorted adjacency lists and vertex labels.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    adjacency: Vec<Vec<u32>>,
    bits: Option<Vec<Vec<u64>>>,
    labels: Vec<String>,
}

impl PartialEq for CayleyGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for CayleyGraph {}

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl CayleyGraph {
    /// Graph on `n` vertices from an edge list; duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(GraphError::BadEdge(u, v));
            }
            adjacency[u].push(v as u32);
            adjacency[v].push(u as u32);
        }
        Ok(Self::from_adjacency(adjacency, (0..n).map(|i| i.to_string()).collect()))
    }

    fn from_adjacency(mut adjacency: Vec<Vec<u32>>, labels: Vec<String>) -> Self {
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let n = adjacency.len();
        let bits = (n <= BITSET_LIMIT).then(|| {
            let words = n.div_ceil(64);
            adjacency
                .iter()
                .map(|list| {
                    let mut row = vec![0u64; words];
                    for &v in list {
                        row[v as usize / 64] |= 1 << (v % 64);
                    }
                    row
                })
                .collect()
        });
        CayleyGraph { adjacency, bits, labels }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count());
        self.labels = labels;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.bits {
            Some(bits) => bits[u][v / 64] >> (v % 64) & 1 == 1,
            None => self.adjacency[u].binary_search(&(v as u32)).is_ok(),
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list {
                if u < v as usize {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }

    /// Common degree if every vertex has the same degree.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    let v = v as usize;
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adjacency[u] {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        comp.push(v as usize);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.connected_components().len() == 1
    }

    /// Shortest cycle length by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break;
                }
                for &v in &self.adjacency[u] {
                    let v = v as usize;
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Component cycle lengths of a 2-regular graph, sorted.
    pub fn cycle_decomposition(&self) -> Result<Vec<usize>, GraphError> {
        if self.is_regular() != Some(2) {
            return Err(GraphError::NotTwoRegular);
        }
        let mut lengths: Vec<usize> = self.connected_components().iter().map(Vec::len).collect();
        lengths.sort_unstable();
        Ok(lengths)
    }

    /// Induced subgraph on `vertices` (sorted), relabelled `0..k`.
    pub fn induced(&self, vertices: &[usize]) -> CayleyGraph {
        let pos = |v: usize| vertices.binary_search(&v).ok();
        let adjacency = vertices
            .iter()
            .map(|&u| self.adjacency[u].iter().filter_map(|&v| pos(v as usize).map(|p| p as u32)).collect())
            .collect();
        let labels = vertices.iter().map(|&u| self.labels[u].clone()).collect();
        Self::from_adjacency(adjacency, labels)
    }

    /// Copy without the edge `{u, v}`.
    pub fn without_edge(&self, u: usize, v: usize) -> CayleyGraph {
        let mut adjacency = self.adjacency.clone();
        adjacency[u].retain(|&w| w as usize != v);
        adjacency[v].retain(|&w| w as usize != u);
        Self::from_adjacency(adjacency, self.labels.clone())
    }
}

/// `Gamma(R)`: vertices are ring elements, `x ~ y` iff `(x - y)^2 = 1`,
/// i.e. `x` is joined to `x + u` for every involution `u`.
pub fn build_cayley(r: &FiniteRing) -> CayleyGraph {
    let inv = r.involutions();
    let adjacency = r
        .elements()
        .map(|x| inv.iter().map(|&u| r.add(x, u) as u32).collect())
        .collect();
    CayleyGraph::from_adjacency(adjacency, r.labels())
}

/// Conjunctive product: `(a1, b1) ~ (a2, b2)` iff `a1 ~ a2` and `b1 ~ b2`.
/// Vertex `(i, j)` has index `i * |B| + j`.
pub fn tensor_product(a: &CayleyGraph, b: &CayleyGraph) -> CayleyGraph {
    let nb = b.vertex_count();
    let mut adjacency = Vec::with_capacity(a.vertex_count() * nb);
    let mut labels = Vec::with_capacity(a.vertex_count() * nb);
    for i in 0..a.vertex_count() {
        for j in 0..nb {
            let mut list = Vec::with_capacity(a.degree(i) * b.degree(j));
            for &x in a.neighbors(i) {
                for &y in b.neighbors(j) {
                    list.push(x * nb as u32 + y);
                }
            }
            adjacency.push(list);
            labels.push(format!("({},{})", a.label(i), b.label(j)));
        }
    }
    CayleyGraph::from_adjacency(adjacency, labels)
}

/// Vertex-disjoint union, `b`'s vertices shifted after `a`'s.
pub fn disjoint_union(a: &CayleyGraph, b: &CayleyGraph) -> CayleyGraph {
    let shift = a.vertex_count() as u32;
    let mut adjacency = a.adjacency.clone();
    adjacency.extend(b.adjacency.iter().map(|l| l.iter().map(|v| v + shift).collect()));
    let mut labels = a.labels.clone();
    labels.extend(b.labels.iter().cloned());
    CayleyGraph::from_adjacency(adjacency, labels)
}

/// `C_n` on `0..n` with `i ~ i + 1`.
pub fn cycle_graph(n: usize) -> Result<CayleyGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    CayleyGraph::from_edges(n, &edges)
}

/// `K_{m,n}` with sides `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<CayleyGraph, GraphError> {
    if m == 0 || n == 0 {
        return Err(GraphError::EmptySide);
    }
    let edges: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))).collect();
    CayleyGraph::from_edges(m + n, &edges)
}

pub fn complete_graph(n: usize) -> CayleyGraph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    CayleyGraph::from_edges(n, &edges).expect("valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Atom;

    fn gamma(atom: Atom) -> CayleyGraph {
        build_cayley(&atom.build().unwrap())
    }

    #[test]
    fn z8_facts() {
        let g = gamma(Atom::Zn(8));
        assert_eq!(g.is_regular(), Some(4));
        assert!(g.is_bipartite());
        assert!(g.is_connected());
        assert_eq!(g.girth(), Girth::Finite(4));
    }

    /// Smallest k in 3..=max such that some k vertices form a cycle, by brute force.
    fn brute_force_girth(g: &CayleyGraph, max: usize) -> Option<usize> {
        fn extend(g: &CayleyGraph, path: &mut Vec<usize>, k: usize) -> bool {
            let last = *path.last().unwrap();
            if path.len() == k {
                return g.has_edge(last, path[0]);
            }
            for &v in g.neighbors(last) {
                let v = v as usize;
                if v > path[0] && !path.contains(&v) {
                    path.push(v);
                    if extend(g, path, k) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
        (3..=max).find(|&k| (0..g.vertex_count()).any(|s| extend(g, &mut vec![s], k)))
    }

    #[test]
    fn z15_facts() {
        let g = build_cayley(&FiniteRing::cyclic(15).unwrap());
        assert_eq!(g.is_regular(), Some(4));
        assert!(!g.is_bipartite());
        assert!(g.is_connected());
        // C_5 has no closed walk of length 3, so the product has no triangles
        assert_eq!(brute_force_girth(&g, 6), Some(4));
        assert_eq!(g.girth(), Girth::Finite(4));
    }

    #[test]
    fn girth_matches_brute_force() {
        for atom in [Atom::Zn(8), Atom::Zn(9), Atom::Z2XY, Atom::Z4B, Atom::Gf { p: 3, k: 2 }, Atom::Zn(12)] {
            let g = gamma(atom);
            assert_eq!(g.girth().finite(), brute_force_girth(&g, 12), "{atom:?}");
        }
    }

    #[test]
    fn z15_has_girth_four() {
        let g = gamma(Atom::Zn(15));
        assert_eq!(brute_force_girth(&g, 12), Some(4));
        assert_eq!(g.girth(), Girth::Finite(4));
        assert!(!g.is_bipartite());
    }

    #[test]
    fn gf4_is_a_matching() {
        let g = gamma(Atom::Gf { p: 2, k: 2 });
        assert_eq!(g.is_regular(), Some(1));
        assert_eq!(g.connected_components().len(), 2);
        assert_eq!(g.girth(), Girth::Infinite);
    }

    #[test]
    fn odd_local_rings_are_unions_of_cycles() {
        assert_eq!(gamma(Atom::Zn(9)).cycle_decomposition().unwrap(), vec![9]);
        assert_eq!(gamma(Atom::Gf { p: 3, k: 2 }).cycle_decomposition().unwrap(), vec![3, 3, 3]);
        assert_eq!(gamma(Atom::Zn(27)).cycle_decomposition().unwrap(), vec![27]);
        assert_eq!(gamma(Atom::Gf { p: 5, k: 2 }).cycle_decomposition().unwrap(), vec![5; 5]);
        let z3z9 = FiniteRing::product(vec![FiniteRing::cyclic(3).unwrap(), FiniteRing::cyclic(9).unwrap()]).unwrap();
        assert_eq!(build_cayley(&z3z9).cycle_decomposition(), Err(GraphError::NotTwoRegular));
    }

    #[test]
    fn z2xy_is_k44() {
        let g = gamma(Atom::Z2XY);
        assert_eq!(g.edge_count(), 16);
        assert_eq!(g.is_regular(), Some(4));
        // every element of M = {0, x, y, x+y} is joined to every element of 1 + M
        let m = [0, 2, 4, 6];
        for &a in &m {
            for &b in &m {
                assert!(g.has_edge(a, b + 1));
            }
        }
    }

    #[test]
    fn standard_constructions() {
        let c4 = cycle_graph(4).unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert!(c4.is_bipartite());
        let k44 = complete_bipartite(4, 4).unwrap();
        assert_eq!((k44.vertex_count(), k44.edge_count(), k44.is_regular()), (8, 16, Some(4)));
        assert_eq!(cycle_graph(2).unwrap_err(), GraphError::CycleTooShort(2));
        assert_eq!(complete_bipartite(0, 3).unwrap_err(), GraphError::EmptySide);
        assert_eq!(complete_graph(5).edge_count(), 10);
        assert_eq!(CayleyGraph::from_edges(3, &[(1, 1)]).unwrap_err(), GraphError::BadEdge(1, 1));
    }

    #[test]
    fn tensor_products() {
        let t = tensor_product(&cycle_graph(3).unwrap(), &cycle_graph(5).unwrap());
        assert_eq!((t.vertex_count(), t.is_regular(), t.is_connected()), (15, Some(4), true));
        let t = tensor_product(&cycle_graph(4).unwrap(), &cycle_graph(4).unwrap());
        assert_eq!(t.connected_components().len(), 2);
        let k2 = CayleyGraph::from_edges(2, &[(0, 1)]).unwrap();
        let t = tensor_product(&k2, &cycle_graph(9).unwrap());
        assert_eq!(t.cycle_decomposition().unwrap(), vec![18]);
    }

    #[test]
    fn girth_of_standard_graphs() {
        assert_eq!(cycle_graph(7).unwrap().girth(), Girth::Finite(7));
        assert_eq!(complete_graph(4).girth(), Girth::Finite(3));
        assert_eq!(complete_bipartite(3, 3).unwrap().girth(), Girth::Finite(4));
        assert_eq!(CayleyGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap().girth(), Girth::Infinite);
    }
}
