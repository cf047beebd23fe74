//! Ring isomorphism by backtracking over images of additive generators.

use super::{Elem, FiniteRing};
use crate::budget::{Budget, IsoResult};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    additive_order: usize,
    unit: bool,
    idempotent: bool,
    involution: bool,
    square_order: usize,
    nilpotency: usize,
}

fn signatures(r: &FiniteRing) -> Vec<Signature> {
    r.elements()
        .map(|x| {
            let sq = r.mul(x, x);
            let mut nilpotency = 0;
            let mut p = x;
            for k in 1..=r.order() {
                if p == r.zero() {
                    nilpotency = k;
                    break;
                }
                p = r.mul(p, x);
            }
            Signature {
                additive_order: r.additive_order(x),
                unit: r.is_unit(x),
                idempotent: sq == x,
                involution: sq == r.one(),
                square_order: r.additive_order(sq),
                nilpotency,
            }
        })
        .collect()
}

/// Decides whether `a` and `b` are isomorphic as rings with identity, returning
/// the element map `a -> b` when they are. Each candidate generator assignment
/// costs one budget step plus one per element checked.
pub fn ring_isomorphic(a: &FiniteRing, b: &FiniteRing, budget: u64) -> IsoResult<Vec<Elem>> {
    if a.order() != b.order()
        || a.characteristic() != b.characteristic()
        || a.units().len() != b.units().len()
        || a.involutions().len() != b.involutions().len()
        || a.idempotents().len() != b.idempotents().len()
    {
        return IsoResult::NotIsomorphic;
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return IsoResult::NotIsomorphic;
    }

    // additive generators of `a`, starting from the identity
    let mut gens = vec![a.one()];
    let mut in_span = span(a, &gens);
    let mut by_order: Vec<Elem> = a.elements().collect();
    by_order.sort_by_key(|&x| std::cmp::Reverse(sig_a[x].additive_order));
    for x in by_order {
        if !in_span[x] {
            gens.push(x);
            in_span = span(a, &gens);
        }
    }
    // spanning tree: every element reached as parent + generator
    let mut tree: Vec<(Elem, usize, Elem)> = Vec::with_capacity(a.order());
    let mut seen = vec![false; a.order()];
    seen[a.zero()] = true;
    let mut queue = std::collections::VecDeque::from([a.zero()]);
    while let Some(x) = queue.pop_front() {
        for (i, &g) in gens.iter().enumerate() {
            let y = a.add(x, g);
            if !seen[y] {
                seen[y] = true;
                tree.push((x, i, y));
                queue.push_back(y);
            }
        }
    }

    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .enumerate()
        .map(|(i, &g)| {
            if i == 0 {
                vec![b.one()]
            } else {
                b.elements().filter(|&y| sig_b[y] == sig_a[g]).collect()
            }
        })
        .collect();

    let mut budget = Budget::new(budget);
    let mut images = vec![0; gens.len()];
    match assign(a, b, &gens, &tree, &candidates, &mut images, 0, &mut budget) {
        Some(map) => IsoResult::Isomorphic(map),
        None if budget.exhausted() => IsoResult::Indeterminate,
        None => IsoResult::NotIsomorphic,
    }
}

fn span(r: &FiniteRing, gens: &[Elem]) -> Vec<bool> {
    let mut seen = vec![false; r.order()];
    seen[r.zero()] = true;
    let mut stack = vec![r.zero()];
    while let Some(x) = stack.pop() {
        for &g in gens {
            let y = r.add(x, g);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

#[allow(clippy::too_many_arguments)]
fn assign(
    a: &FiniteRing,
    b: &FiniteRing,
    gens: &[Elem],
    tree: &[(Elem, usize, Elem)],
    candidates: &[Vec<Elem>],
    images: &mut Vec<Elem>,
    depth: usize,
    budget: &mut Budget,
) -> Option<Vec<Elem>> {
    if depth == gens.len() {
        return extend(a, b, gens, tree, images, budget);
    }
    for &c in &candidates[depth] {
        if !budget.spend(1) {
            return None;
        }
        images[depth] = c;
        if let Some(map) = assign(a, b, gens, tree, candidates, images, depth + 1, budget) {
            return Some(map);
        }
        if budget.exhausted() {
            return None;
        }
    }
    None
}

fn extend(
    a: &FiniteRing,
    b: &FiniteRing,
    gens: &[Elem],
    tree: &[(Elem, usize, Elem)],
    images: &[Elem],
    budget: &mut Budget,
) -> Option<Vec<Elem>> {
    let n = a.order();
    if !budget.spend(n as u64) {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    map[a.zero()] = b.zero();
    for &(parent, i, child) in tree {
        map[child] = b.add(map[parent], images[i]);
    }
    let mut hit = vec![false; n];
    for &y in &map {
        if hit[y] {
            return None;
        }
        hit[y] = true;
    }
    for x in a.elements() {
        for (i, &g) in gens.iter().enumerate() {
            if map[a.add(x, g)] != b.add(map[x], images[i]) {
                return None;
            }
        }
    }
    for x in a.elements() {
        for y in x..n {
            if map[a.mul(x, y)] != b.mul(map[x], map[y]) {
                return None;
            }
        }
    }
    Some(map)
}
