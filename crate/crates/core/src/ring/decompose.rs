//! Decomposition into local factors via primitive orthogonal idempotents.

use super::{factorize, Elem, FiniteRing, Repr};

#[derive(Debug, Clone)]
enum Projection {
    /// `x -> x mod m` on a cyclic parent.
    Reduce(usize),
    /// `x -> position of e*x` in the sorted ideal `eR`.
    Ideal { parent: FiniteRing, idempotent: Elem, elements: Vec<Elem> },
    /// Digit of a product element, then a projection of that factor.
    Component { stride: usize, modulus: usize, inner: Box<Projection> },
}

impl Projection {
    fn apply(&self, x: Elem) -> Elem {
        match self {
            Projection::Reduce(m) => x % m,
            Projection::Ideal { parent, idempotent, elements } => {
                let ex = parent.mul(*idempotent, x);
                elements.binary_search(&ex).expect("eR is closed under multiplication by e")
            }
            Projection::Component { stride, modulus, inner } => inner.apply((x / stride) % modulus),
        }
    }
}

/// `R ~ R_1 x ... x R_t` with each `R_i` local.
#[derive(Debug, Clone)]
pub struct LocalDecomposition {
    parent_order: usize,
    idempotents: Vec<Elem>,
    factors: Vec<FiniteRing>,
    projections: Vec<Projection>,
}

impl LocalDecomposition {
    /// Primitive orthogonal idempotents of the parent, one per factor.
    pub fn idempotents(&self) -> &[Elem] {
        &self.idempotents
    }

    pub fn factors(&self) -> &[FiniteRing] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factor_orders(&self) -> Vec<usize> {
        self.factors.iter().map(FiniteRing::order).collect()
    }

    /// Image of parent element `x` in factor `i`.
    pub fn project(&self, i: usize, x: Elem) -> Elem {
        self.projections[i].apply(x)
    }

    /// `x -> (project(0, x), ..., project(t-1, x))`.
    pub fn coordinates(&self, x: Elem) -> Vec<Elem> {
        (0..self.len()).map(|i| self.project(i, x)).collect()
    }

    /// The product of the factors together with the image of every parent
    /// element in it. For a ring with a single local factor the product is
    /// that factor.
    pub fn reconstruct(&self) -> (FiniteRing, Vec<Elem>) {
        let product = FiniteRing::product(self.factors.clone()).expect("factors of an existing ring");
        let map = (0..self.parent_order)
            .map(|x| {
                let c = self.coordinates(x);
                product.from_components(&c).unwrap_or(c[0])
            })
            .collect();
        (product, map)
    }
}

pub(super) fn decompose(r: &FiniteRing) -> LocalDecomposition {
    match &r.repr {
        Repr::Cyclic => decompose_cyclic(r),
        Repr::Table(_) => decompose_generic(r),
        Repr::Product(p) => {
            let mut out = LocalDecomposition {
                parent_order: r.order,
                idempotents: vec![],
                factors: vec![],
                projections: vec![],
            };
            for (index, factor) in p.factors.iter().enumerate() {
                let sub = decompose(factor);
                for ((e, f), proj) in sub.idempotents.iter().zip(sub.factors).zip(sub.projections) {
                    let mut comps = vec![0; p.factors.len()];
                    comps[index] = *e;
                    out.idempotents.push(p.encode(&comps));
                    out.factors.push(f);
                    out.projections.push(Projection::Component {
                        stride: p.strides[index],
                        modulus: factor.order,
                        inner: Box::new(proj),
                    });
                }
            }
            out
        }
    }
}

/// Chinese remainder idempotents of `Z_n`; factor `Z_{p^k}` via reduction.
fn decompose_cyclic(r: &FiniteRing) -> LocalDecomposition {
    let n = r.order;
    let mut out = LocalDecomposition { parent_order: n, idempotents: vec![], factors: vec![], projections: vec![] };
    for (p, k) in factorize(n as u64) {
        let q = (p as usize).pow(k);
        // e = 1 mod q, e = 0 mod n/q
        let e = (0..n).step_by(n / q).find(|e| e % q == 1 % q).expect("CRT idempotent exists");
        out.idempotents.push(e);
        out.factors.push(FiniteRing::cyclic(q as u64).expect("q >= 2"));
        out.projections.push(Projection::Reduce(q));
    }
    out
}

/// Splits the identity greedily by nontrivial idempotents until every piece is
/// primitive, then takes the ideals `eR` with identity `e`.
fn decompose_generic(r: &FiniteRing) -> LocalDecomposition {
    let idempotents = r.idempotents();
    let mut pending = vec![r.one];
    let mut primitive = Vec::new();
    while let Some(e) = pending.pop() {
        let split = idempotents.iter().copied().find(|&f| f != r.zero && f != e && r.mul(f, e) == f);
        match split {
            Some(f) => {
                pending.push(f);
                pending.push(r.sub(e, f));
            }
            None => primitive.push(e),
        }
    }
    primitive.sort_unstable();
    let mut out = LocalDecomposition { parent_order: r.order, idempotents: vec![], factors: vec![], projections: vec![] };
    for e in primitive {
        let mut elements: Vec<Elem> = r.elements().map(|x| r.mul(e, x)).collect();
        elements.sort_unstable();
        elements.dedup();
        let factor = if elements.len() == r.order { r.clone() } else { r.restrict(&elements, e) };
        out.idempotents.push(e);
        out.factors.push(factor);
        out.projections.push(Projection::Ideal { parent: r.clone(), idempotent: e, elements });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Atom;

    fn z(n: u64) -> FiniteRing {
        FiniteRing::cyclic(n).unwrap()
    }

    fn assert_isomorphism(r: &FiniteRing, d: &LocalDecomposition) {
        let (prod, map) = d.reconstruct();
        assert_eq!(prod.order(), r.order());
        let mut seen = vec![false; r.order()];
        for &y in &map {
            assert!(!seen[y], "reconstruction map not injective");
            seen[y] = true;
        }
        for x in r.elements() {
            for y in r.elements() {
                assert_eq!(map[r.add(x, y)], prod.add(map[x], map[y]));
                assert_eq!(map[r.mul(x, y)], prod.mul(map[x], map[y]));
            }
        }
        assert_eq!(map[r.one()], prod.one());
    }

    fn assert_primitive_orthogonal(r: &FiniteRing, d: &LocalDecomposition) {
        let es = d.idempotents();
        let mut sum = r.zero();
        for (i, &a) in es.iter().enumerate() {
            assert_eq!(r.mul(a, a), a);
            sum = r.add(sum, a);
            for &b in &es[i + 1..] {
                assert_eq!(r.mul(a, b), r.zero());
            }
        }
        assert_eq!(sum, r.one());
        for f in d.factors() {
            assert!(f.is_local());
        }
    }

    #[test]
    fn z12_generic_and_cyclic_agree() {
        let r = z(12);
        let d = r.local_decomposition();
        let mut pairs: Vec<(usize, usize)> = d.idempotents().iter().copied().zip(d.factor_orders()).collect();
        pairs.sort_unstable();
        assert_eq!(pairs, vec![(4, 3), (9, 4)]);
        assert_primitive_orthogonal(&r, &d);
        assert_isomorphism(&r, &d);

        let t = r.to_table_ring().unwrap();
        let dt = t.local_decomposition();
        let mut pairs: Vec<(usize, usize)> = dt.idempotents().iter().copied().zip(dt.factor_orders()).collect();
        pairs.sort_unstable();
        assert_eq!(pairs, vec![(4, 3), (9, 4)]);
        assert_primitive_orthogonal(&t, &dt);
        assert_isomorphism(&t, &dt);
    }

    #[test]
    fn z30_three_factors() {
        for r in [z(30), z(30).to_table_ring().unwrap()] {
            let d = r.local_decomposition();
            let mut es = d.idempotents().to_vec();
            es.sort_unstable();
            assert_eq!(es, vec![6, 10, 15]);
            let mut orders = d.factor_orders();
            orders.sort_unstable();
            assert_eq!(orders, vec![2, 3, 5]);
            assert_isomorphism(&r, &d);
        }
    }

    #[test]
    fn local_rings_are_single_factors() {
        for r in [z(8), Atom::Z2XY.build().unwrap(), Atom::Gf { p: 3, k: 2 }.build().unwrap()] {
            let d = r.local_decomposition();
            assert_eq!(d.len(), 1);
            assert_eq!(d.idempotents(), &[r.one()]);
            assert_eq!(d.factor_orders(), vec![r.order()]);
        }
    }

    #[test]
    fn products_decompose_recursively() {
        let r = FiniteRing::product(vec![z(6), Atom::Z2X2.build().unwrap(), z(5)]).unwrap();
        let d = r.local_decomposition();
        assert_eq!(d.factor_orders(), vec![2, 3, 4, 5]);
        assert_primitive_orthogonal(&r, &d);
        assert_isomorphism(&r, &d);
        let t = r.to_table_ring().unwrap();
        let dt = t.local_decomposition();
        let mut orders = dt.factor_orders();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 3, 4, 5]);
        assert_primitive_orthogonal(&t, &dt);
        assert_isomorphism(&t, &dt);
    }
}
