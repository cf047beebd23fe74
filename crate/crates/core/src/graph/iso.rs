//! Graph isomorphism: colour refinement followed by backtracking.

use std::collections::{BTreeMap, VecDeque};

use super::CayleyGraph;
use crate::budget::{Budget, IsoResult};

/// Decides whether `a` and `b` are isomorphic, returning a vertex map
/// `a -> b` when they are. Vertices are tried in breadth-first order from the
/// rarest refined colour class, lowest index first, so the run is
/// deterministic. One budget step per candidate tried.
pub fn is_isomorphic(a: &CayleyGraph, b: &CayleyGraph, budget: u64) -> IsoResult<Vec<u32>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return IsoResult::NotIsomorphic;
    }
    let mut sizes_a: Vec<usize> = a.connected_components().iter().map(Vec::len).collect();
    let mut sizes_b: Vec<usize> = b.connected_components().iter().map(Vec::len).collect();
    sizes_a.sort_unstable();
    sizes_b.sort_unstable();
    if sizes_a != sizes_b {
        return IsoResult::NotIsomorphic;
    }
    let (color_a, color_b) = refine(a, b);
    let mut hist_a = BTreeMap::new();
    let mut hist_b = BTreeMap::new();
    for &c in &color_a {
        *hist_a.entry(c).or_insert(0usize) += 1;
    }
    for &c in &color_b {
        *hist_b.entry(c).or_insert(0usize) += 1;
    }
    if hist_a != hist_b {
        return IsoResult::NotIsomorphic;
    }
    if n == 0 {
        return IsoResult::Isomorphic(vec![]);
    }

    // search order: BFS per component, each rooted at its rarest colour
    let mut order = Vec::with_capacity(n);
    let mut anchor = vec![usize::MAX; n];
    let mut placed = vec![false; n];
    let mut comps = a.connected_components();
    comps.sort_by_key(|c| (std::cmp::Reverse(c.len()), c[0]));
    for comp in comps {
        let root = *comp.iter().min_by_key(|&&v| (hist_a[&color_a[v]], v)).unwrap();
        placed[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in a.neighbors(u) {
                let w = w as usize;
                if !placed[w] {
                    placed[w] = true;
                    anchor[w] = u;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut state = Search {
        a,
        b,
        color_a: &color_a,
        color_b: &color_b,
        order: &order,
        anchor: &anchor,
        forward: vec![u32::MAX; n],
        backward: vec![u32::MAX; n],
        budget: Budget::new(budget),
    };
    if state.extend(0) {
        IsoResult::Isomorphic(state.forward)
    } else if state.budget.exhausted() {
        IsoResult::Indeterminate
    } else {
        IsoResult::NotIsomorphic
    }
}

/// Joint 1-dimensional Weisfeiler-Leman refinement of both graphs so colours
/// are comparable across them.
fn refine(a: &CayleyGraph, b: &CayleyGraph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [a, b];
    let mut colors: Vec<Vec<usize>> =
        graphs.iter().map(|g| (0..g.vertex_count()).map(|v| g.degree(v)).collect()).collect();
    let mut classes = usize::MAX;
    loop {
        let mut palette: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut keys: Vec<Vec<(usize, Vec<usize>)>> = Vec::new();
        for (gi, g) in graphs.iter().enumerate() {
            let ks = (0..g.vertex_count())
                .map(|v| {
                    let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[gi][w as usize]).collect();
                    nb.sort_unstable();
                    (colors[gi][v], nb)
                })
                .collect::<Vec<_>>();
            for k in &ks {
                palette.entry(k.clone()).or_insert(0);
            }
            keys.push(ks);
        }
        for (i, v) in palette.values_mut().enumerate() {
            *v = i;
        }
        let next: Vec<Vec<usize>> = keys.iter().map(|ks| ks.iter().map(|k| palette[k]).collect()).collect();
        let count = palette.len();
        colors = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let mut it = colors.into_iter();
    (it.next().unwrap(), it.next().unwrap())
}

struct Search<'a> {
    a: &'a CayleyGraph,
    b: &'a CayleyGraph,
    color_a: &'a [usize],
    color_b: &'a [usize],
    order: &'a [usize],
    anchor: &'a [usize],
    forward: Vec<u32>,
    backward: Vec<u32>,
    budget: Budget,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let candidates: Vec<usize> = if self.anchor[v] != usize::MAX {
            let img = self.forward[self.anchor[v]] as usize;
            self.b.neighbors(img).iter().map(|&c| c as usize).collect()
        } else {
            (0..self.b.vertex_count()).collect()
        };
        for c in candidates {
            if self.backward[c] != u32::MAX || self.color_b[c] != self.color_a[v] {
                continue;
            }
            if !self.budget.spend(1) {
                return false;
            }
            if !self.consistent(v, c) {
                continue;
            }
            self.forward[v] = c as u32;
            self.backward[c] = v as u32;
            if self.extend(depth + 1) {
                return true;
            }
            self.forward[v] = u32::MAX;
            self.backward[c] = u32::MAX;
            if self.budget.exhausted() {
                return false;
            }
        }
        false
    }

    fn consistent(&self, v: usize, c: usize) -> bool {
        let mut mapped = 0;
        for &w in self.a.neighbors(v) {
            let img = self.forward[w as usize];
            if img != u32::MAX {
                if !self.b.has_edge(c, img as usize) {
                    return false;
                }
                mapped += 1;
            }
        }
        let mapped_b = self.b.neighbors(c).iter().filter(|&&w| self.backward[w as usize] != u32::MAX).count();
        mapped == mapped_b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cayley, complete_bipartite, cycle_graph, disjoint_union, tensor_product};
    use crate::ring::{Atom, FiniteRing};

    const BUDGET: u64 = 1_000_000;

    fn check_map(a: &CayleyGraph, b: &CayleyGraph, map: &[u32]) {
        for (u, v) in a.edges() {
            assert!(b.has_edge(map[u] as usize, map[v] as usize));
        }
    }

    #[test]
    fn z12_is_tensor_of_its_factors() {
        let z12 = build_cayley(&FiniteRing::cyclic(12).unwrap());
        let t = tensor_product(&build_cayley(&Atom::Zn(4).build().unwrap()), &build_cayley(&Atom::Zn(3).build().unwrap()));
        let map = is_isomorphic(&z12, &t, BUDGET).mapping().expect("isomorphic");
        check_map(&z12, &t, &map);
    }

    #[test]
    fn z4b_is_k44() {
        let g = build_cayley(&Atom::Z4B.build().unwrap());
        let k = complete_bipartite(4, 4).unwrap();
        assert!(is_isomorphic(&g, &k, BUDGET).is_isomorphic());
    }

    #[test]
    fn cycle_vs_triangles() {
        let c9 = cycle_graph(9).unwrap();
        let c3 = cycle_graph(3).unwrap();
        let three = disjoint_union(&disjoint_union(&c3, &c3), &c3);
        assert_eq!(is_isomorphic(&c9, &three, BUDGET), IsoResult::NotIsomorphic);
    }

    #[test]
    fn k2_tensor_odd_cycle_doubles_it() {
        let k2 = CayleyGraph::from_edges(2, &[(0, 1)]).unwrap();
        let t = tensor_product(&k2, &cycle_graph(9).unwrap());
        assert!(is_isomorphic(&t, &cycle_graph(18).unwrap(), BUDGET).is_isomorphic());
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // C_3 x C_5 tensor vs the circulant C_15(1, 4): both 4-regular on 15 vertices
        let t = tensor_product(&cycle_graph(3).unwrap(), &cycle_graph(5).unwrap());
        let edges: Vec<(usize, usize)> = (0..15).flat_map(|i| [(i, (i + 1) % 15), (i, (i + 2) % 15)]).collect();
        let circ = CayleyGraph::from_edges(15, &edges).unwrap();
        assert_eq!(is_isomorphic(&t, &circ, BUDGET), IsoResult::NotIsomorphic);
        assert!(is_isomorphic(&t, &build_cayley(&FiniteRing::cyclic(15).unwrap()), BUDGET).is_isomorphic());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let a = tensor_product(&cycle_graph(5).unwrap(), &cycle_graph(7).unwrap());
        let b = build_cayley(&FiniteRing::cyclic(35).unwrap());
        assert_eq!(is_isomorphic(&a, &b, 3), IsoResult::Indeterminate);
        assert!(is_isomorphic(&a, &b, BUDGET).is_isomorphic());
    }
}
