//! Minimum genus by branch and bound over rotation systems.

use std::collections::VecDeque;

use super::{euler_genus_lower_bound, planar_rotation, Darts, Embedding, GenusCertificate, RotationSystem};
use crate::budget::Budget;
use crate::graph::{CayleyGraph, Girth};

/// Face-trace steps allowed by default.
pub const DEFAULT_GENUS_BUDGET: u64 = 1_000_000_000;

pub fn min_genus(g: &CayleyGraph, budget: u64) -> GenusCertificate {
    min_genus_seeded(g, budget, None)
}

/// Minimum genus, starting from the upper bound given by `seed` when present.
/// Components are searched independently and their genera added. Running out
/// of budget yields `Bounds`.
pub fn min_genus_seeded(g: &CayleyGraph, budget: u64, seed: Option<&RotationSystem>) -> GenusCertificate {
    let mut budget = Budget::new(budget);
    let n = g.vertex_count();
    let mut rotation: Vec<Vec<u32>> = vec![Vec::new(); n];
    let (mut low, mut high) = (0, 0);
    let mut exact = true;
    for comp in g.connected_components() {
        let sub = g.induced(&comp);
        let local_seed = seed.map(|s| {
            RotationSystem::new(
                comp.iter()
                    .map(|&v| s.at(v).iter().map(|&w| comp.binary_search(&(w as usize)).unwrap() as u32).collect())
                    .collect(),
            )
        });
        let outcome = component_genus(&sub, &mut budget, local_seed);
        low += outcome.low;
        high += outcome.high;
        exact &= outcome.low == outcome.high;
        for (lv, order) in outcome.rotation.into_inner().into_iter().enumerate() {
            rotation[comp[lv]] = order.into_iter().map(|w| comp[w as usize] as u32).collect();
        }
    }
    if exact {
        GenusCertificate::Embedding(Embedding::from_rotation(g, RotationSystem::new(rotation)).expect("merged rotation"))
    } else {
        GenusCertificate::Bounds { low, high }
    }
}

struct Outcome {
    low: usize,
    high: usize,
    rotation: RotationSystem,
}

fn genus_of(g: &CayleyGraph, rot: &RotationSystem) -> usize {
    Embedding::from_rotation(g, rot.clone()).expect("valid rotation").genus
}

fn component_genus(g: &CayleyGraph, budget: &mut Budget, seed: Option<RotationSystem>) -> Outcome {
    if g.edge_count() == 0 {
        return Outcome { low: 0, high: 0, rotation: RotationSystem::sorted(g) };
    }
    if let Some(rot) = planar_rotation(g) {
        return Outcome { low: 0, high: 0, rotation: rot };
    }
    let lower = euler_genus_lower_bound(g).unwrap_or(0).max(1);
    let seed = seed.filter(|s| s.validate(g).is_ok()).map(|s| (genus_of(g, &s), s));
    if let Some((gs, s)) = &seed {
        if *gs <= lower {
            return Outcome { low: *gs, high: *gs, rotation: s.clone() };
        }
    }
    let mut search = Search::new(g, lower, seed.as_ref().map(|(gs, _)| *gs));
    search.run(budget);
    let found = search.best_succ.take().map(|succ| (search.best, search.rotation_from(g, &succ)));
    let (high, rotation) = match (found, seed) {
        (Some(f), _) => f,
        (None, Some(s)) => s,
        (None, None) => {
            let r = RotationSystem::sorted(g);
            (genus_of(g, &r), r)
        }
    };
    let low = if search.exhausted { lower } else { high };
    Outcome { low, high, rotation }
}

struct Search {
    darts: Darts,
    order: Vec<usize>,
    assigned: Vec<bool>,
    succ: Vec<usize>,
    divisor: usize,
    vertices: i64,
    edges: i64,
    lower: usize,
    best: usize,
    best_succ: Option<Vec<usize>>,
    exhausted: bool,
    done: bool,
}

impl Search {
    fn new(g: &CayleyGraph, lower: usize, upper: Option<usize>) -> Self {
        let darts = Darts::new(g);
        let n = g.vertex_count();
        let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
        let start = (0..n).find(|&v| g.degree(v) == max_deg).unwrap_or(0);
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w as usize);
                }
            }
        }
        let min_deg = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
        let divisor = match g.girth() {
            Girth::Finite(k) if min_deg >= 2 => k,
            _ => 1,
        };
        Search {
            succ: vec![usize::MAX; darts.len()],
            darts,
            order,
            assigned: vec![false; n],
            divisor,
            vertices: n as i64,
            edges: g.edge_count() as i64,
            lower,
            best: upper.unwrap_or(usize::MAX),
            best_succ: None,
            exhausted: false,
            done: false,
        }
    }

    fn run(&mut self, budget: &mut Budget) {
        self.descend(0, 0, 0, budget);
    }

    fn genus_for(&self, faces: i64) -> i64 {
        let twice = 2 - self.vertices + self.edges - faces;
        (twice.max(0) + 1) / 2
    }

    fn descend(&mut self, depth: usize, closed_faces: i64, closed_darts: i64, budget: &mut Budget) {
        let v = self.order[depth];
        let off = self.darts.offsets[v];
        let deg = self.darts.degree(v);
        self.assigned[v] = true;
        let mut perm: Vec<usize> = (0..deg).collect();
        loop {
            let reflected = depth == 0 && deg >= 3 && perm[1] > perm[deg - 1];
            if !reflected {
                for i in 0..deg {
                    self.succ[off + perm[i]] = off + perm[(i + 1) % deg];
                }
                let (new_faces, new_darts, steps) = self.closed_through(v);
                if !budget.spend(steps.max(1)) {
                    self.exhausted = true;
                    self.done = true;
                }
                if self.done {
                    break;
                }
                let faces = closed_faces + new_faces;
                let darts = closed_darts + new_darts;
                let open = 2 * self.edges - darts;
                let bound = self.genus_for(faces + open / self.divisor as i64) as usize;
                if bound < self.best {
                    if depth + 1 == self.order.len() {
                        debug_assert_eq!(open, 0);
                        self.best = self.genus_for(faces) as usize;
                        self.best_succ = Some(self.succ.clone());
                        if self.best <= self.lower {
                            self.done = true;
                        }
                    } else {
                        self.descend(depth + 1, faces, darts, budget);
                    }
                    if self.done {
                        break;
                    }
                }
            }
            if !next_permutation(&mut perm[1..]) {
                break;
            }
        }
        for d in off..off + deg {
            self.succ[d] = usize::MAX;
        }
        self.assigned[v] = false;
    }

    /// Faces completed by assigning `v`: every such face passes through `v`
    /// and is counted from its smallest out-dart at `v`.
    fn closed_through(&self, v: usize) -> (i64, i64, u64) {
        let off = self.darts.offsets[v];
        let end = self.darts.offsets[v + 1];
        let (mut faces, mut darts, mut steps) = (0i64, 0i64, 0u64);
        for d0 in off..end {
            let mut d = d0;
            let mut len = 0i64;
            loop {
                steps += 1;
                if !self.assigned[self.darts.head[d] as usize] {
                    break;
                }
                d = self.succ[self.darts.rev[d]];
                len += 1;
                if d == d0 {
                    faces += 1;
                    darts += len;
                    break;
                }
                if d >= off && d < end && d < d0 {
                    break;
                }
            }
        }
        (faces, darts, steps)
    }

    fn rotation_from(&self, g: &CayleyGraph, succ: &[usize]) -> RotationSystem {
        let order = (0..g.vertex_count())
            .map(|v| {
                let off = self.darts.offsets[v];
                let deg = self.darts.degree(v);
                let mut list = Vec::with_capacity(deg);
                let mut d = off;
                for _ in 0..deg {
                    list.push(self.darts.head[d]);
                    d = succ[d];
                }
                list
            })
            .collect();
        RotationSystem::new(order)
    }
}

pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
