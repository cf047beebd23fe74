use invcayley::graph::build_cayley;
use invcayley::{build_ring, format_ring_spec, parse_ring_spec, Atom, RingSpec};
use proptest::prelude::*;

fn atom() -> impl Strategy<Value = Atom> {
    prop_oneof![
        (2u64..500).prop_map(Atom::Zn),
        (prop::sample::select(vec![2u64, 3, 5, 7, 11]), 1u32..5).prop_map(|(p, k)| Atom::Gf { p, k }),
        prop::sample::select(Atom::NAMED.to_vec()),
    ]
}

fn spec() -> impl Strategy<Value = RingSpec> {
    atom().prop_map(RingSpec::Atom).prop_recursive(3, 16, 4, |inner| {
        prop::collection::vec(inner, 2..4).prop_map(RingSpec::Product)
    })
}

fn small_spec() -> impl Strategy<Value = RingSpec> {
    let small = prop_oneof![
        (2u64..30).prop_map(Atom::Zn),
        prop::sample::select(vec![Atom::Gf { p: 2, k: 2 }, Atom::Gf { p: 3, k: 2 }, Atom::Gf { p: 2, k: 3 }]),
        prop::sample::select(Atom::NAMED.to_vec()),
    ];
    prop::collection::vec(small, 1..3).prop_map(|v| RingSpec::product(v.into_iter().map(RingSpec::Atom).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn format_then_parse_is_identity(s in spec()) {
        let text = format_ring_spec(&s);
        prop_assert_eq!(parse_ring_spec(&text), Ok(s), "{}", text);
    }

    #[test]
    fn whitespace_is_insignificant(s in spec()) {
        let text = format_ring_spec(&s);
        let spaced = text.replace(" x ", "   x\t");
        prop_assert_eq!(parse_ring_spec(&spaced), parse_ring_spec(&text));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_is_regular_of_involution_count(s in small_spec()) {
        let r = build_ring(&s).unwrap();
        let g = build_cayley(&r);
        prop_assert_eq!(g.is_regular(), Some(r.involutions().len()));
        for x in r.elements() {
            for &y in g.neighbors(x as usize) {
                let d = r.sub(x, y as _);
                prop_assert_eq!(r.mul(d, d), r.one());
            }
        }
    }

    #[test]
    fn bipartite_iff_even_order(s in small_spec()) {
        let r = build_ring(&s).unwrap();
        prop_assert_eq!(build_cayley(&r).is_bipartite(), r.order() % 2 == 0);
    }

    #[test]
    fn local_factors_multiply_to_order(s in small_spec()) {
        let r = build_ring(&s).unwrap();
        let d = r.local_decomposition();
        prop_assert_eq!(d.factor_orders().iter().product::<usize>(), r.order());
        let sum = d.idempotents().iter().fold(r.zero(), |acc, &e| r.add(acc, e as _));
        prop_assert_eq!(sum, r.one());
    }
}
