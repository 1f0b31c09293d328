mod common;

use interlace_core::euler::{anti_circuit_count, euler_circuits_brute, transpose};
use interlace_core::*;
use num_bigint::BigInt;
use proptest::prelude::*;

use common::{anti_circuits_by_walking, nullity_oracle};

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order, any::<u64>()).prop_map(|(n, bits)| {
        let pairs = n * n.saturating_sub(1) / 2;
        Graph::from_triangle_mask(n, if pairs >= 64 { bits } else { bits & ((1 << pairs) - 1) })
    })
}

fn graph_with_edge(max_order: usize) -> impl Strategy<Value = (Graph, usize, usize)> {
    graph(max_order)
        .prop_filter("needs an edge", |g| !g.is_edgeless())
        .prop_flat_map(|g| {
            let m = g.size();
            (Just(g), 0..m)
        })
        .prop_map(|(g, i)| {
            let (a, b) = g.edges().nth(i).unwrap();
            (g, a, b)
        })
}

fn word(max_symbols: usize) -> impl Strategy<Value = DoubleOccurrenceWord> {
    (1..=max_symbols)
        .prop_flat_map(|n| Just((0..n).chain(0..n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|s| DoubleOccurrenceWord::new(s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn agrees_with_subset_oracle(g in graph(9)) {
        prop_assert_eq!(interlace_polynomial(&g), nullity_oracle(&g));
    }

    #[test]
    fn pivot_invariance((g, a, b) in graph_with_edge(11)) {
        let p = g.pivot(a, b).unwrap();
        prop_assert_eq!(interlace_polynomial(&p), interlace_polynomial(&g));
        prop_assert_eq!(p.pivot(a, b).unwrap(), g.clone());
        prop_assert_eq!(p.neighbors(a), g.neighbors(a));
        prop_assert_eq!(p.is_connected(), g.is_connected());
    }

    #[test]
    fn any_edge_gives_the_same_expansion((g, a, b) in graph_with_edge(10)) {
        let mut s = InterlaceSolver::with_options(SolverOptions::plain());
        prop_assert_eq!(s.expand_on(&g, a, b).unwrap(), interlace_polynomial(&g));
        prop_assert_eq!(s.expand_on(&g, b, a).unwrap(), interlace_polynomial(&g));
    }

    #[test]
    fn value_at_two_and_lowest_degree(g in graph(11)) {
        let q = interlace_polynomial(&g);
        prop_assert_eq!(q.evaluate_i64(2), BigInt::from(1) << g.order());
        prop_assert_eq!(q.lowest_degree().unwrap(), g.component_count());
        prop_assert!(q.degree().unwrap() <= g.order());
        prop_assert!(q.is_nonnegative());
    }

    #[test]
    fn multiplicative_over_unions(g in graph(7), h in graph(7)) {
        let u = g.disjoint_union(&h).unwrap();
        prop_assert_eq!(interlace_polynomial(&u), &interlace_polynomial(&g) * &interlace_polynomial(&h));
    }

    #[test]
    fn fast_paths_change_nothing(g in graph(10)) {
        let mut plain = InterlaceSolver::with_options(SolverOptions::plain());
        prop_assert_eq!(plain.polynomial(&g), interlace_polynomial(&g));
    }

    #[test]
    fn graph6_and_edge_list_round_trip(g in graph(11)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn bridge_on_words(w in word(7)) {
        let d = digraph_from_word(&w);
        let qh = interlace_polynomial(&interlace_graph(&w));
        prop_assert_eq!(circuit_partition_polynomial(&d).unwrap(), qh.compose_shift().shift_mul_x());
        prop_assert_eq!(martin_polynomial(&d).unwrap(), qh.clone());
        let brute = euler_circuits_brute(&d).unwrap().len();
        prop_assert_eq!(BigInt::from(brute), euler_circuit_count_best(&d).unwrap());
        prop_assert_eq!(BigInt::from(brute), qh.evaluate_i64(1));
        prop_assert_eq!(anti_circuit_count(&d), anti_circuits_by_walking(&d));
    }

    #[test]
    fn transposition_laws(w in word(8)) {
        let h = interlace_graph(&w);
        for (a, b) in h.edges() {
            let t = transpose(&w, a, b).unwrap();
            prop_assert_eq!(transpose(&t, a, b).unwrap(), w.clone());
            prop_assert_eq!(digraph_from_word(&t).key(), digraph_from_word(&w).key());
            prop_assert_eq!(interlace_graph(&t), h.pivot(a, b).unwrap().label_swap(a, b).unwrap());
        }
    }

    #[test]
    fn coefficient_transforms_invert(c in prop::collection::vec(0i64..1000, 0..10)) {
        let a: Vec<BigInt> = c.iter().map(|&v| BigInt::from(v)).collect();
        let r = coefficient_transform_r_from_a(&a);
        let a = IntPolynomial::new(a);
        prop_assert_eq!(IntPolynomial::new(coefficient_transform_a_from_r(&r)), a.clone());
        prop_assert_eq!(IntPolynomial::new(r), a.compose_shift().shift_mul_x());
    }

    #[test]
    fn rotation_does_not_decrease_values(g in graph(8), u in 0usize..8, v in 0usize..8) {
        prop_assume!(u < g.order() && v < g.order() && u != v);
        let h = rotate(&g, u, v).unwrap();
        let (qg, qh) = (interlace_polynomial(&g), interlace_polynomial(&h));
        for x in 1..=5 {
            prop_assert!(qg.evaluate_i64(x) <= qh.evaluate_i64(x));
        }
    }
}
