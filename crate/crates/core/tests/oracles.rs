mod common;

use interlace_core::verify::enumerate::GraphEnumeration;
use interlace_core::verify::predicates::{complete_multipartite_parts, is_solid_path, is_two_term_shape};
use interlace_core::*;
use num_bigint::BigInt;

use common::{nullity_oracle, one_based};

/// Pivot straight from the definition on an adjacency matrix: toggle every
/// pair drawn from two different classes among "adjacent to a only",
/// "adjacent to b only" and "adjacent to both".
fn pivot_by_matrix(g: &Graph, a: usize, b: usize) -> Graph {
    let n = g.order();
    let mut m: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let class = |v: usize| -> Option<u8> {
        if v == a || v == b {
            return None;
        }
        match (g.has_edge(v, a), g.has_edge(v, b)) {
            (true, false) => Some(0),
            (false, true) => Some(1),
            (true, true) => Some(2),
            _ => None,
        }
    };
    for u in 0..n {
        for v in 0..n {
            if let (Some(cu), Some(cv)) = (class(u), class(v)) {
                if cu != cv {
                    m[u][v] = !m[u][v];
                }
            }
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| m[u][v])
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn swap_by_matrix(g: &Graph, b: usize, c: usize) -> Graph {
    let p = |v: usize| if v == b { c } else if v == c { b } else { v };
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (p(u), p(v))).collect();
    Graph::from_edges(g.order(), &edges).unwrap()
}

#[test]
fn pivot_matches_its_definition() {
    for n in 2..=6 {
        for g in GraphEnumeration::new(n, false).unwrap() {
            for (a, b) in g.edges() {
                assert_eq!(g.pivot(a, b).unwrap(), pivot_by_matrix(&g, a, b));
            }
        }
    }
}

#[test]
fn triple_pivot_is_a_label_swap() {
    let mut other_reading_differs = 0;
    for n in 3..=6 {
        for g in GraphEnumeration::new(n, false).unwrap() {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if b == c || !g.has_edge(a, b) || !g.has_edge(a, c) {
                            continue;
                        }
                        let ab_ac = pivot_by_matrix(&pivot_by_matrix(&g, a, b), a, c);
                        assert_eq!(pivot_by_matrix(&ab_ac, a, b), swap_by_matrix(&g, b, c));
                        assert_eq!(ab_ac, swap_by_matrix(&pivot_by_matrix(&g, a, c), b, c));
                        if !ab_ac.has_edge(b, c) || pivot_by_matrix(&ab_ac, b, c) != swap_by_matrix(&g, b, c) {
                            other_reading_differs += 1;
                        }
                    }
                }
            }
        }
    }
    // Ending the sequence on bc instead of ab does not give the swap.
    assert!(other_reading_differs > 0);
}

#[test]
fn value_at_minus_one_sign() {
    // q(G; -1) = (-1)^n (-2)^k for some k >= 0.
    assert_eq!(interlace_polynomial(&Graph::edgeless(1).unwrap()).evaluate_i64(-1), BigInt::from(-1));
    for n in 0..=6 {
        for g in GraphEnumeration::new(n, false).unwrap() {
            let v = nullity_oracle(&g).evaluate_i64(-1);
            let k = (0..=n as u32).find(|&k| {
                let sign = if (n as u32 + k) % 2 == 0 { 1 } else { -1 };
                v == BigInt::from(sign) * BigInt::from(2).pow(k)
            });
            assert!(k.is_some(), "{} gives {v}", to_graph6(&g));
        }
    }
}

#[test]
fn wheel_pair_assignment() {
    let wheel = one_based(5, &[(1, 2), (2, 3), (3, 4), (4, 1), (5, 1), (5, 2), (5, 3), (5, 4)]);
    assert_eq!(complete_multipartite_parts(&wheel), Some(3));
    let mut rimless = wheel.clone();
    rimless.remove_edge(0, 1).unwrap();
    assert_eq!(interlace_polynomial(&wheel).to_string(), "4x + 4x^2 + x^3");
    assert_eq!(interlace_polynomial(&rimless).to_string(), "6x + 5x^2");
    assert_eq!(interlace_polynomial(&wheel).evaluate_i64(1), BigInt::from(wheel.size() + 1));
}

#[test]
fn two_terms_without_a_solid_path() {
    // Two nonzero terms do not force a solid path of length 2 or 3.
    for g in [Graph::cycle(4).unwrap(), Graph::cycle(5).unwrap()] {
        let q = nullity_oracle(&g);
        assert_eq!(q.nonzero_terms(), 2, "{q}");
        assert!(!is_two_term_shape(&g));
        assert!(!is_solid_path(&g, 2) && !is_solid_path(&g, 3));
    }
    // The shape does give two terms.
    for n in 3..=6 {
        for g in GraphEnumeration::new(n, false).unwrap() {
            if is_two_term_shape(&g) {
                assert_eq!(interlace_polynomial(&g).nonzero_terms(), 2, "{}", to_graph6(&g));
            }
        }
    }
}

#[test]
fn second_maximum_needs_every_part() {
    // K_a + K_b is a solid P_2 with an empty middle part; it stays at 2^(n-2).
    let g = Graph::complete(2).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
    assert_eq!(interlace_polynomial(&g).evaluate_i64(1), BigInt::from(8));
    let solid = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
    assert!(is_solid_path(&solid, 2));
    assert_eq!(interlace_polynomial(&solid).evaluate_i64(1), BigInt::from(12));
}
