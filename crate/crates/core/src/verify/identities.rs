use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::{pair_count, random_graph};
use super::predicates::is_forest;
use super::{degree, eval, in_chunks, lowest_degree, render, Tally, VerificationReport};
use crate::graph::Graph;
use crate::interlace::{
    q_of_clique_substitution, q_of_vertex_duplication, q_of_vertex_multiplication,
    q_complete_multipartite, rotate, substitute, Coeffs, InterlaceSolver, Part, SolverOptions,
    SubstitutionSpec,
};
use crate::poly::{is_signed_power_of_two, IntPolynomial};

/// Graphs up to this order are memoized by the suite workers; larger ones
/// are enumerated once each, so caching them only costs memory.
const SUITE_MEMO_ORDER: usize = 6;

/// Pivot recursion with no fast paths, so component splitting can be
/// checked against it.
fn plain_solver() -> InterlaceSolver {
    InterlaceSolver::with_options(SolverOptions {
        strip_isolated: false,
        split_components: false,
        memo_max_order: SUITE_MEMO_ORDER,
    })
}

fn fast_solver() -> InterlaceSolver {
    InterlaceSolver::with_options(SolverOptions {
        memo_max_order: SUITE_MEMO_ORDER,
        ..SolverOptions::default()
    })
}

fn check_graph(g: &Graph, plain: &mut InterlaceSolver, fast: &mut InterlaceSolver, t: &mut Tally) {
    let n = g.order();
    let q = plain.coeffs(g);
    let connected = g.is_connected();
    t.checked += 1;

    for (a, b) in g.edges() {
        for (x, y) in [(a, b), (b, a)] {
            let e = plain.expand_coeffs(g, x, y);
            t.check(e == q, g, || {
                format!("pivot order: expanding on {x}{y} gives {}, expected {}", render(&e), render(&q))
            });
        }
        let p = g.pivot(a, b).expect("edge");
        t.check(p.pivot(a, b).unwrap() == *g, g, || format!("pivot on {a}{b} is not an involution"));
        t.check(g.pivot(b, a).unwrap() == p, g, || format!("pivot on {a}{b} is not symmetric"));
        t.check(!connected || p.is_connected(), g, || format!("pivot on {a}{b} disconnects"));
        t.check(
            p.neighbors(a) == g.neighbors(a) && p.neighbors(b) == g.neighbors(b),
            g,
            || format!("pivot on {a}{b} changes the neighborhood of {a} or {b}"),
        );
        let qp = plain.coeffs(&p);
        t.check(qp == q, g, || {
            format!("pivot invariance on {a}{b}: {} vs {}", render(&qp), render(&q))
        });
    }

    let at2 = eval(&q, 2);
    t.check(at2 == 1i128 << n, g, || format!("q(2) = {at2}, expected 2^{n}"));
    let k = g.component_count();
    t.check(lowest_degree(&q) == k, g, || {
        format!("lowest degree {} but {k} components", lowest_degree(&q))
    });
    let d = degree(&q);
    t.check(d <= n, g, || format!("degree {d} exceeds order {n}"));
    let alpha = g.independence_number().expect("small order");
    t.check(d >= alpha, g, || format!("degree {d} below independence number {alpha}"));
    t.check((q[0] == 0) == (n >= 1), g, || format!("constant term {} at order {n}", q[0]));
    let at_minus_1 = eval(&q, -1);
    t.check(is_signed_power_of_two(&BigInt::from(at_minus_1)).is_some(), g, || {
        format!("q(-1) = {at_minus_1} is not a signed power of two")
    });
    for v in 0..n {
        let dv = degree(&plain.coeffs(&g.without(v)));
        t.check(dv <= d, g, || format!("deleting {v} raises the degree to {dv} from {d}"));
    }
    if !connected && n > 0 {
        let mut prod: Coeffs = smallvec::smallvec![1];
        for comp in g.components() {
            prod = crate::interlace::mul(&prod, &fast.coeffs(&g.induced(comp)));
        }
        t.check(prod == q, g, || {
            format!("product over components {} vs {}", render(&prod), render(&q))
        });
    }
    if is_forest(g) {
        let mu = g.matching_number().expect("small order");
        t.check(d + mu == n, g, || format!("forest: degree {d}, matching number {mu}, order {n}"));
    }
}

/// Every labeled graph of order at most `n_max`: pivot-order independence,
/// pivot involution, symmetry, connectivity and neighborhood preservation,
/// pivot invariance of `q`, `q(2) = 2^n`, lowest degree = component count,
/// `α <= deg q <= n`, induced-subgraph degree monotonicity,
/// `q(-1) = ±2^k`, multiplicativity over components, and
/// `deg q = n - μ` for forests.
pub fn check_graph_identities(n_max: usize) -> VerificationReport {
    let start = Instant::now();
    let mut tally = Tally::default();
    for n in 0..=n_max {
        let parts = in_chunks(0..1u64 << pair_count(n), |range| {
            let (mut plain, mut fast) = (plain_solver(), fast_solver());
            let mut t = Tally::default();
            for mask in range {
                check_graph(&Graph::from_triangle_mask(n, mask), &mut plain, &mut fast, &mut t);
            }
            t
        });
        parts.into_iter().for_each(|p| tally.merge(p));
    }
    tally.into_report("graph-identities", n_max, 0, start)
}

/// For distinct `a, b, c` with `ab, ac` edges:
/// `G^{(ab)(ac)(ab)} = G_{bc}` and `G^{(ab)(ac)} = (G^{ac})_{bc}`,
/// where `G_{bc}` swaps the labels `b` and `c`.
pub fn check_pivot_lemma(n_max: usize) -> VerificationReport {
    let start = Instant::now();
    let mut tally = Tally::default();
    for n in 3..=n_max {
        let parts = in_chunks(0..1u64 << pair_count(n), |range| {
            let mut t = Tally::default();
            for mask in range {
                let g = Graph::from_triangle_mask(n, mask);
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            if b == c || !g.has_edge(a, b) || !g.has_edge(a, c) {
                                continue;
                            }
                            t.checked += 1;
                            let ab = g.pivot(a, b).unwrap();
                            let ab_ac = ab.pivot(a, c).unwrap();
                            let swapped = g.label_swap(b, c).unwrap();
                            t.check(ab_ac.pivot(a, b).unwrap() == swapped, &g, || {
                                format!("G^(ab)(ac)(ab) != G_bc for a={a} b={b} c={c}")
                            });
                            let rhs = g.pivot(a, c).unwrap().label_swap(b, c).unwrap();
                            t.check(ab_ac == rhs, &g, || {
                                format!("G^(ab)(ac) != (G^ac)_bc for a={a} b={b} c={c}")
                            });
                        }
                    }
                }
            }
            t
        });
        parts.into_iter().for_each(|p| tally.merge(p));
    }
    tally.into_report("pivot-lemma", n_max, 0, start)
}

fn poly_of(s: &mut InterlaceSolver, g: &Graph) -> IntPolynomial {
    s.polynomial(g)
}

/// Adds a non-adjacent twin of `a` (same neighborhood, index `n`).
fn duplicate(g: &Graph, a: usize) -> Graph {
    let mut d = g.disjoint_union(&Graph::new(1).unwrap()).unwrap();
    for u in crate::graph::Bits(g.neighbors(a)) {
        d.add_edge(u, g.order()).unwrap();
    }
    d
}

/// Sampled checks of the substitution calculus against direct recursion:
/// clique substitution, vertex duplication, vertex multiplication, the
/// complete multipartite formula, and the rotation inequality at
/// `x = 1, 2, 3` (plus every rotation of every graph of order at most 4).
pub fn check_substitution_calculus(samples: usize, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = InterlaceSolver::new();
    let mut t = Tally::default();

    let rotation_holds = |s: &mut InterlaceSolver, g: &Graph, u: usize, v: usize, t: &mut Tally| {
        let h = rotate(g, u, v).unwrap();
        let (qg, qh) = (s.coeffs(g), s.coeffs(&h));
        for x in 1..=3 {
            let (a, b) = (eval(&qg, x), eval(&qh, x));
            t.check(a <= b, g, || format!("rotation about {u}{v}: q_G({x}) = {a} > q_H({x}) = {b}"));
        }
        t.checked += 1;
    };
    for n in 2..=4 {
        for mask in 0..1u64 << pair_count(n) {
            let g = Graph::from_triangle_mask(n, mask);
            for u in 0..n {
                for v in 0..n {
                    if u != v {
                        rotation_holds(&mut s, &g, u, v, &mut t);
                    }
                }
            }
        }
    }

    for _ in 0..samples {
        // Rotation.
        let n = rng.gen_range(2..=9);
        let g = random_graph(n, &mut rng);
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        rotation_holds(&mut s, &g, u, v, &mut t);

        // Duplication.
        let n = rng.gen_range(1..=8);
        let g = random_graph(n, &mut rng);
        let a = rng.gen_range(0..n);
        let formula = q_of_vertex_duplication(&poly_of(&mut s, &g), &poly_of(&mut s, &g.without(a)));
        let direct = poly_of(&mut s, &duplicate(&g, a));
        t.check(formula == direct, &g, || format!("duplicating {a}: {formula} vs {direct}"));

        // Clique substitution and vertex multiplication on small templates.
        let n = rng.gen_range(1..=5);
        let g = random_graph(n, &mut rng);
        let sizes: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
        let solid = substitute(&SubstitutionSpec {
            template: g.clone(),
            parts: sizes.iter().map(|&k| Part::Clique(k)).collect(),
        })
        .unwrap();
        let delta = sizes.iter().sum::<usize>() - n;
        let formula = q_of_clique_substitution(&poly_of(&mut s, &g), delta);
        let direct = poly_of(&mut s, &solid);
        t.check(formula == direct, &g, || format!("solid substitution {sizes:?}: {formula} vs {direct}"));

        let thick = substitute(&SubstitutionSpec {
            template: g.clone(),
            parts: sizes.iter().map(|&k| Part::Edgeless(k)).collect(),
        })
        .unwrap();
        let formula = q_of_vertex_multiplication(&g, &sizes).unwrap();
        let direct = poly_of(&mut s, &thick);
        t.check(formula == direct, &g, || format!("vertex multiplication {sizes:?}: {formula} vs {direct}"));

        // Complete multipartite.
        let r = rng.gen_range(1..=4);
        let parts: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=3)).collect();
        let km = Graph::complete_multipartite(&parts).unwrap();
        let formula = q_complete_multipartite(&parts).unwrap();
        let direct = poly_of(&mut s, &km);
        t.check(formula == direct, &km, || format!("multipartite {parts:?}: {formula} vs {direct}"));
        t.checked += 4;
    }
    t.into_report("substitution", 9, seed, start)
}

/// The whole identity suite: graph identities and the pivot lemma up to
/// `n_max` (the lemma capped at 6), trees, the substitution calculus, and
/// the Euler-side identities.
pub fn run_identity_suite(n_max: usize, samples: usize, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let mut report = check_graph_identities(n_max);
    report.absorb(check_pivot_lemma(n_max.min(6)));
    report.absorb(super::extremal::check_trees(9));
    report.absorb(check_substitution_calculus(samples, seed));
    report.absorb(super::euler_checks::check_euler_identities(n_max.min(7), samples, seed));
    report.suite = "identities".into();
    report.n_max = n_max;
    report.seed = seed;
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}
