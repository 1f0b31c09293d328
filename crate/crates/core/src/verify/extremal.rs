use std::time::Instant;

use super::enumerate::{pair_count, unlabeled_trees};
use super::predicates::{
    component_graphs, is_complete_tripartite_plus_isolated, is_matching_plus_isolated, is_path,
    is_solid_path, is_star, is_two_term_shape,
};
use super::{degree, fibonacci, in_chunks, render, Tally, VerificationReport};
use crate::graph::Graph;
use crate::interlace::{InterlaceSolver, SolverOptions};

fn solver() -> InterlaceSolver {
    InterlaceSolver::with_options(SolverOptions {
        memo_max_order: 6,
        ..SolverOptions::default()
    })
}

fn check_graph(g: &Graph, s: &mut InterlaceSolver, t: &mut Tally) {
    let n = g.order();
    let e = g.size() as u64;
    let q = s.coeffs(g);
    let q1: u64 = q.iter().sum();
    let d = degree(&q);
    let terms = q.iter().filter(|&&c| c != 0).count();
    t.checked += 1;

    // Degree and value at 1 are minimal exactly on edgeless graphs.
    let edgeless = g.is_edgeless();
    t.check(d <= n && (d == n) == edgeless, g, || format!("degree: {d} at order {n}"));
    t.check(q1 >= 1 && (q1 == 1) == edgeless, g, || format!("degree: q(1) = {q1}"));
    if n >= 1 {
        t.check((d == 1) == g.is_complete(), g, || format!("degree: q = {} has degree {d}", render(&q)));
    }

    // Size bounds.
    t.check(q1 > e, g, || format!("size lower bound: q(1) = {q1} with {e} edges"));
    t.check((q1 == e + 1) == is_complete_tripartite_plus_isolated(g), g, || {
        format!("size lower bound: q(1) = {q1} with {e} edges, tripartite-plus-isolated is {}", is_complete_tripartite_plus_isolated(g))
    });
    t.check(q1 <= 1 << e, g, || format!("size upper bound: q(1) = {q1} exceeds 2^{e}"));
    t.check((q1 == 1 << e) == is_matching_plus_isolated(g), g, || {
        format!("size upper bound: q(1) = {q1} = 2^{e} is {}, matching shape is {}", q1 == 1 << e, is_matching_plus_isolated(g))
    });
    let fib_product: u64 = component_graphs(g).iter().map(|c| fibonacci(c.size() + 2)).product();
    t.check(q1 <= fib_product, g, || format!("size upper bound: q(1) = {q1} exceeds the Fibonacci product {fib_product}"));
    if n >= 1 && g.is_connected() {
        let f = fibonacci(g.size() + 2);
        t.check((q1 == f) == is_path(g), g, || format!("size upper bound: connected, q(1) = {q1}, F_(m+2) = {f}"));
    }

    // Order bounds.
    if n >= 1 {
        if g.isolated_vertices() == 0 {
            t.check(q1 >= n as u64, g, || format!("order lower bound: q(1) = {q1} < {n}"));
            let two_k2 = n == 4 && g.size() == 2 && (0..4).all(|v| g.degree(v) == 1);
            t.check((q1 == n as u64) == (is_star(g) || two_k2), g, || {
                format!("order lower bound: q(1) = {q1} at order {n}")
            });
        }
        let top = 1u64 << (n - 1);
        t.check(q1 <= top, g, || format!("order upper bound: q(1) = {q1} exceeds 2^(n-1)"));
        t.check((q1 == top) == g.is_complete(), g, || format!("order upper bound: q(1) = {q1} = 2^(n-1) is {}, complete is {}", q1 == top, g.is_complete()));
    }

    // Second largest value.
    if n >= 3 && !g.is_complete() {
        let second = 3u64 << (n - 3);
        t.check(q1 <= second, g, || format!("second maximum: non-complete with q(1) = {q1} > {second}"));
        t.check((q1 == second) == is_solid_path(g, 2), g, || {
            format!("second maximum: q(1) = {q1} vs {second}, solid P_2 is {}", is_solid_path(g, 2))
        });
    }

    // Number of nonzero terms. The two-term statement is checked as stated
    // (two terms imply the shape); it has counterexamples from order 4 on,
    // C_4 being the smallest. The converse is checked separately.
    t.check(terms != 2 || is_two_term_shape(g), g, || {
        format!("two terms: {} but no component is a solid path of length 2 or 3", render(&q))
    });
    t.check(terms == 2 || !is_two_term_shape(g), g, || {
        format!("two-term shape: {terms} nonzero terms in {}", render(&q))
    });
    if n >= 3 {
        t.check((terms == n - 1) == is_star(g), g, || {
            format!("n-1 terms: {terms} nonzero terms in {}, star is {}", render(&q), is_star(g))
        });
        if is_star(g) {
            let mut star = vec![0u64; n];
            star[1] = 2;
            star[2..].fill(1);
            t.check(q[..] == star[..], g, || format!("n-1 terms: star with q = {}", render(&q)));
        }
    }
}

/// Every extremal proposition, with its equality characterization, on all
/// labeled graphs of order at most `n_max`.
pub fn run_extremal_suite(n_max: usize) -> VerificationReport {
    let start = Instant::now();
    let mut tally = Tally::default();
    for n in 0..=n_max {
        for part in in_chunks(0..1u64 << pair_count(n), |range| {
            let mut s = solver();
            let mut t = Tally::default();
            for mask in range {
                check_graph(&Graph::from_triangle_mask(n, mask), &mut s, &mut t);
            }
            t
        }) {
            tally.merge(part);
        }
    }
    tally.into_report("extremal", n_max, 0, start)
}

/// On one tree of every shape up to `max_order` vertices: `q(1) <= F_(n+1)`
/// with equality only on paths, and `deg q = n - μ`.
pub fn check_trees(max_order: usize) -> VerificationReport {
    let start = Instant::now();
    let mut s = InterlaceSolver::new();
    let mut t = Tally::default();
    for n in 1..=max_order {
        for g in unlabeled_trees(n) {
            t.checked += 1;
            let q = s.coeffs(&g);
            let q1: u64 = q.iter().sum();
            let f = fibonacci(n + 1);
            t.check(q1 <= f && (q1 == f) == is_path(&g), &g, || format!("tree with q(1) = {q1}, F_(n+1) = {f}"));
            let mu = g.matching_number().expect("small tree");
            t.check(degree(&q) + mu == n, &g, || format!("tree: degree {}, matching number {mu}", degree(&q)));
        }
    }
    t.into_report("trees", max_order, 0, start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_the_two_term_statement_fails() {
        let r = run_extremal_suite(5);
        assert!(r.violations.iter().all(|v| v.detail.starts_with("two terms:")), "{:?}", r.violations);
        // C_4 and C_5 have two nonzero terms and are not solid paths.
        assert!(r.violations.iter().any(|v| v.graph6 == crate::format::to_graph6(&Graph::cycle(4).unwrap())));
        assert!(r.violations.iter().any(|v| v.graph6 == crate::format::to_graph6(&Graph::cycle(5).unwrap())));
        assert!(run_extremal_suite(3).passed());
        let r = check_trees(8);
        assert!(r.passed(), "{:?}", r.violations);
    }
}
