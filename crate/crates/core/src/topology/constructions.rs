//! Explicit toroidal rotation systems.
//!
//! On a Cayley graph of an abelian group with connection set `{±a, ±b}` (four
//! distinct elements) the uniform rotation `(+a, +b, -a, -b)` makes every face
//! the quadrilateral `x, x+a, x+a-b, x-b`, so `F = V` and the genus is 1.

use super::{RotationSystem, TopologyError};
use crate::graph::CayleyGraph;

/// Uniform rotation `(v+a, v+b, v-a, v-b)` on vertices `0..n` of a group given
/// by `add` and `neg`.
pub fn commutator_rotation(
    n: usize,
    a: usize,
    b: usize,
    add: impl Fn(usize, usize) -> usize,
    neg: impl Fn(usize) -> usize,
) -> Result<RotationSystem, TopologyError> {
    let steps = [a, b, neg(a), neg(b)];
    for i in 0..4 {
        for j in i + 1..4 {
            if steps[i] == steps[j] {
                return Err(TopologyError::Parameter("±a, ±b must be four distinct elements".into()));
            }
        }
    }
    Ok(RotationSystem::new((0..n).map(|v| steps.iter().map(|&s| add(v, s) as u32).collect()).collect()))
}

/// Torus rotation for `Γ(Z_{2^n})`, `n >= 3`: generators `1` and `2^{n-1}+1`.
pub fn z2n_torus_rotation(n: u32) -> Result<RotationSystem, TopologyError> {
    if !(3..=24).contains(&n) {
        return Err(TopologyError::Parameter(format!("Z_2^{n}: need 3 <= n <= 24")));
    }
    let m = 1usize << n;
    commutator_rotation(m, 1, m / 2 + 1, |x, y| (x + y) % m, |x| (m - x) % m)
}

/// Torus rotation for `C_m (x) C_n` with vertex `(i, j)` at index `i*n + j`,
/// generators `(1, 1)` and `(1, -1)`. Needs one odd length so the product is
/// connected.
pub fn cycle_tensor_torus_rotation(m: usize, n: usize) -> Result<RotationSystem, TopologyError> {
    if m < 3 || n < 3 {
        return Err(TopologyError::Parameter(format!("C_{m} (x) C_{n}: cycles need length at least 3")));
    }
    if m % 2 == 0 && n % 2 == 0 {
        return Err(TopologyError::Parameter(format!("C_{m} (x) C_{n} is disconnected; embed each component")));
    }
    let add = |x: usize, y: usize| ((x / n + y / n) % m) * n + (x % n + y % n) % n;
    let neg = |x: usize| ((m - x / n) % m) * n + (n - x % n) % n;
    commutator_rotation(m * n, n + 1, n + (n - 1), add, neg)
}

/// Torus rotation for `K_{4,4}` (parts `0..4` and `4..8`), read off the
/// circulant `C_8(1, 3)`: residue `k` sits at `k/2` when even and at
/// `4 + (k-1)/2` when odd.
pub fn k44_torus_rotation() -> RotationSystem {
    let place = |k: usize| if k % 2 == 0 { k / 2 } else { 4 + (k - 1) / 2 };
    let circ = commutator_rotation(8, 1, 3, |x, y| (x + y) % 8, |x| (8 - x) % 8).expect("1, 3, 7, 5 are distinct");
    let mut order = vec![Vec::new(); 8];
    for k in 0..8 {
        order[place(k)] = circ.at(k).iter().map(|&w| place(w as usize) as u32).collect();
    }
    RotationSystem::new(order)
}

/// Pulls a rotation on `model` back along `map: g -> model` (a graph
/// isomorphism given as vertex images).
pub fn transport_rotation(
    g: &CayleyGraph,
    model_rotation: &RotationSystem,
    map: &[u32],
) -> Result<RotationSystem, TopologyError> {
    let mut inverse = vec![0u32; map.len()];
    for (v, &m) in map.iter().enumerate() {
        inverse[m as usize] = v as u32;
    }
    let rot = RotationSystem::new(
        (0..g.vertex_count())
            .map(|v| model_rotation.at(map[v] as usize).iter().map(|&w| inverse[w as usize]).collect())
            .collect(),
    );
    rot.validate(g)?;
    Ok(rot)
}
