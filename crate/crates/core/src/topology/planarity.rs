//! Planarity by path addition on each biconnected block, with a Kuratowski
//! subgraph extracted by deletion when the test fails.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::{Embedding, RotationSystem};
use crate::graph::CayleyGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of `K5` or `K3,3` inside the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
}

impl KuratowskiWitness {
    /// Checks that the edges lie in `g` and form a subdivision of the claimed
    /// graph.
    pub fn verify(&self, g: &CayleyGraph) -> bool {
        if !self.edges.iter().all(|&[u, v]| u < g.vertex_count() && v < g.vertex_count() && g.has_edge(u, v)) {
            return false;
        }
        let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
        for &[u, v] in &self.edges {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
        let (want, deg) = match self.kind {
            KuratowskiKind::K5 => (5, 4),
            KuratowskiKind::K33 => (6, 3),
        };
        let mut branch: Vec<usize> = adj.iter().filter(|(_, n)| n.len() != 2).map(|(&v, _)| v).collect();
        branch.sort_unstable();
        if branch != self.branch_vertices || branch.len() != want || branch.iter().any(|b| adj[b].len() != deg) {
            return false;
        }
        // contract the degree-2 paths between branch vertices
        let mut links: HashSet<(usize, usize)> = HashSet::new();
        let mut used: HashSet<(usize, usize)> = HashSet::new();
        for &b in &branch {
            for &first in &adj[&b] {
                let (mut prev, mut cur) = (b, first);
                if !used.insert((prev.min(cur), prev.max(cur))) {
                    continue;
                }
                while adj[&cur].len() == 2 {
                    let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
                    prev = cur;
                    cur = next;
                    if !used.insert((prev.min(cur), prev.max(cur))) {
                        return false;
                    }
                }
                if cur == b || !links.insert((b.min(cur), b.max(cur))) {
                    return false;
                }
            }
        }
        if used.len() != self.edges.len() {
            return false;
        }
        match self.kind {
            KuratowskiKind::K5 => links.len() == 10,
            KuratowskiKind::K33 => {
                if links.len() != 9 {
                    return false;
                }
                let side: Vec<usize> = branch.iter().copied().filter(|&c| c == branch[0] || !links.contains(&(branch[0].min(c), branch[0].max(c)))).collect();
                side.len() == 3
                    && side.iter().all(|&a| side.iter().all(|&b| a == b || !links.contains(&(a.min(b), a.max(b)))))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

/// Planar embedding certificate or Kuratowski witness.
pub fn is_planar(g: &CayleyGraph) -> Planarity {
    match planar_rotation(g) {
        Some(rot) => Planarity::Planar(Embedding::from_rotation(g, rot).expect("planar rotation is valid")),
        None => Planarity::NonPlanar(kuratowski(g)),
    }
}

/// A genus-0 rotation system, or `None` if the graph is not planar.
pub fn planar_rotation(g: &CayleyGraph) -> Option<RotationSystem> {
    let n = g.vertex_count();
    if g.edge_count() > 3 * n.saturating_sub(2).max(1) && n >= 3 {
        return None;
    }
    let mut rotation: Vec<Vec<u32>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v as u32);
            rotation[v].push(u as u32);
            continue;
        }
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |x: usize| verts.binary_search(&x).unwrap();
        let mut adj = vec![Vec::new(); verts.len()];
        for &(u, v) in &block {
            adj[local(u)].push(local(v));
            adj[local(v)].push(local(u));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let faces = embed_biconnected(&adj)?;
        for (lv, order) in rotation_from_faces(&adj, &faces).into_iter().enumerate() {
            rotation[verts[lv]].extend(order.into_iter().map(|w| verts[w] as u32));
        }
    }
    let rot = RotationSystem::new(rotation);
    debug_assert_eq!(Embedding::from_rotation(g, rot.clone()).map(|e| e.genus), Ok(0));
    Some(rot)
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
fn biconnected_blocks(g: &CayleyGraph) -> Vec<Vec<(usize, usize)>> {
    const UNSET: usize = usize::MAX;
    let n = g.vertex_count();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut call: Vec<(usize, usize, usize)> = vec![(root, UNSET, 0)];
        while let Some(top) = call.last_mut() {
            let (v, parent, i) = *top;
            if i < g.degree(v) {
                top.2 += 1;
                let w = g.neighbors(v)[i] as usize;
                if disc[w] == UNSET {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    call.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                call.pop();
                if let Some(&(u, _, _)) = call.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

enum Fragment {
    Edge(usize, usize),
    Component(Vec<usize>),
}

/// Oriented face cycles of a planar embedding of a biconnected graph with at
/// least three vertices, or `None` if none exists.
fn embed_biconnected(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let total_edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let cycle = find_cycle(adj);
    let mut in_h = vec![false; n];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        h_edges.insert((v.min(w), v.max(w)));
    }
    let mut faces = vec![cycle.clone(), cycle.into_iter().rev().collect::<Vec<_>>()];

    while h_edges.len() < total_edges {
        let fragments = fragments(adj, &in_h, &h_edges);
        let mut choice: Option<(usize, usize)> = None;
        let mut best = usize::MAX;
        for (fi, frag) in fragments.iter().enumerate() {
            let attach = attachments(adj, &in_h, frag);
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| attach.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            if admissible.is_empty() {
                return None;
            }
            if admissible.len() < best {
                best = admissible.len();
                choice = Some((fi, admissible[0]));
                if best == 1 {
                    break;
                }
            }
        }
        let (fi, face_index) = choice.expect("at least one fragment remains");
        let path = fragment_path(adj, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            h_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_index);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    Some(faces)
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if w != parent[u] && parent[w] != u {
                // non-tree edge u-w closes a cycle through their common ancestor
                let (mut a, mut b) = (u, w);
                let mut left = vec![a];
                let mut right = vec![b];
                while a != b {
                    if depth[a] >= depth[b] {
                        a = parent[a];
                        left.push(a);
                    } else {
                        b = parent[b];
                        right.push(b);
                    }
                }
                // both walks end at the common ancestor
                right.pop();
                left.extend(right.into_iter().rev());
                return left;
            }
        }
    }
    unreachable!("biconnected graph with three or more vertices has a cycle")
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !h_edges.contains(&(u, v)) {
                out.push(Fragment::Edge(u, v));
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in &adj[u] {
                if !in_h[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(Fragment::Component(comp));
    }
    out
}

fn attachments(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    match frag {
        Fragment::Edge(u, v) => vec![*u, *v],
        Fragment::Component(comp) => {
            let mut a: Vec<usize> = comp.iter().flat_map(|&u| adj[u].iter().copied()).filter(|&w| in_h[w]).collect();
            a.sort_unstable();
            a.dedup();
            a
        }
    }
}

/// Path through the fragment joining two of its attachment vertices.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    match frag {
        Fragment::Edge(u, v) => vec![*u, *v],
        Fragment::Component(comp) => {
            let attach = attachments(adj, in_h, frag);
            let (a, b) = (attach[0], attach[1]);
            let member = |x: usize| comp.binary_search(&x).is_ok();
            let mut prev: HashMap<usize, usize> = HashMap::new();
            let mut queue = VecDeque::new();
            for &c in comp {
                if adj[c].contains(&a) {
                    prev.insert(c, usize::MAX);
                    queue.push_back(c);
                }
            }
            while let Some(u) = queue.pop_front() {
                if adj[u].contains(&b) {
                    let mut path = vec![b, u];
                    let mut cur = u;
                    while prev[&cur] != usize::MAX {
                        cur = prev[&cur];
                        path.push(cur);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
                for &w in &adj[u] {
                    if member(w) && !prev.contains_key(&w) {
                        prev.insert(w, u);
                        queue.push_back(w);
                    }
                }
            }
            unreachable!("fragment is connected and attaches at a and b")
        }
    }
}

/// Splits oriented face `face` along `path` from `a` to `b`:
/// `F[a..b]` then `P` reversed, and `F[b..a]` then `P` forward.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (a, b) = (path[0], *path.last().unwrap());
    let len = face.len();
    let ia = face.iter().position(|&x| x == a).unwrap();
    let ib = face.iter().position(|&x| x == b).unwrap();
    let walk = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut i = from;
        while i != to {
            i = (i + 1) % len;
            out.push(face[i]);
        }
        out
    };
    let inner = &path[1..path.len() - 1];
    let mut f1 = walk(ia, ib);
    f1.extend(inner.iter().rev());
    let mut f2 = walk(ib, ia);
    f2.extend(inner.iter());
    (f1, f2)
}

/// Each face step `x -> y -> z` means `z` follows `x` in the rotation at `y`.
fn rotation_from_faces(adj: &[Vec<usize>], faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); adj.len()];
    for f in faces {
        let len = f.len();
        for i in 0..len {
            let (x, y, z) = (f[(i + len - 1) % len], f[i], f[(i + 1) % len]);
            succ[y].insert(x, z);
        }
    }
    adj.iter()
        .enumerate()
        .map(|(y, nbrs)| {
            let mut order = vec![nbrs[0]];
            let mut cur = nbrs[0];
            while order.len() < nbrs.len() {
                cur = succ[y][&cur];
                order.push(cur);
            }
            debug_assert_eq!(succ[y][&cur], nbrs[0]);
            order
        })
        .collect()
}

/// Minimal non-planar subgraph by vertex then edge deletion.
fn kuratowski(g: &CayleyGraph) -> KuratowskiWitness {
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges();
    let planar = |es: &[(usize, usize)]| {
        let h = CayleyGraph::from_edges(n, es).expect("subgraph edges are valid");
        planar_rotation(&h).is_some()
    };
    for v in 0..n {
        let trial: Vec<(usize, usize)> = edges.iter().copied().filter(|&(a, b)| a != v && b != v).collect();
        if trial.len() < edges.len() && !planar(&trial) {
            edges = trial;
        }
    }
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        if planar(&trial) {
            i += 1;
        } else {
            edges = trial;
        }
    }
    let mut degree = vec![0usize; n];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let branch_vertices: Vec<usize> = (0..n).filter(|&v| degree[v] > 2).collect();
    let kind = if branch_vertices.len() == 5 && branch_vertices.iter().all(|&v| degree[v] == 4) {
        KuratowskiKind::K5
    } else {
        debug_assert!(branch_vertices.len() == 6 && branch_vertices.iter().all(|&v| degree[v] == 3));
        KuratowskiKind::K33
    };
    KuratowskiWitness { kind, branch_vertices, edges: edges.into_iter().map(|(u, v)| [u, v]).collect() }
}
