use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use super::enumerate::{all_words, pairing_words, random_word};
use super::{in_chunks, Tally, VerificationReport};
use crate::euler::{
    circuit_partition_polynomial, digraph_from_word, euler_circuit_count_best,
    euler_circuits_brute, interlace_graph, martin_polynomial, martin_value_at_minus_two,
    transpose, transposition_orbit, DigraphKey, DoubleOccurrenceWord, EulerCircuit,
    EulerianDigraph,
};
use crate::graph::Graph;
use crate::interlace::{pivot_orbit, InterlaceSolver};
use crate::poly::{coefficient_transform_a_from_r, coefficient_transform_r_from_a, IntPolynomial};

/// Largest exhaustive word size used by [`check_euler_identities`]; larger
/// words are sampled.
const EXHAUSTIVE_WORD_LIMIT: usize = 7;

fn check_word(w: &DoubleOccurrenceWord, solver: &mut InterlaceSolver, t: &mut Tally) {
    let n = w.symbol_count();
    let d = digraph_from_word(w);
    let h = interlace_graph(w);
    let q = solver.polynomial(&h);
    t.checked += 1;
    let r = match circuit_partition_polynomial(&d) {
        Ok(r) => r,
        Err(e) => return t.fail(&h, format!("{w}: {e}")),
    };

    let bridge = q.compose_shift().shift_mul_x();
    t.check(bridge == r, &h, || format!("{w}: x q(H; 1+x) = {bridge}, r(D; x) = {r}"));
    match martin_polynomial(&d) {
        Ok(m) => t.check(m == q, &h, || format!("{w}: m(D) = {m}, q(H) = {q}")),
        Err(e) => t.fail(&h, format!("{w}: martin polynomial: {e}")),
    }

    let r_from_a = coefficient_transform_r_from_a(q.coeffs());
    t.check(r_from_a == r.coeffs(), &h, || format!("{w}: r from a gives {r_from_a:?}"));
    let a_from_r = coefficient_transform_a_from_r(r.coeffs());
    t.check(a_from_r == q.coeffs(), &h, || format!("{w}: a from r gives {a_from_r:?}"));
    let total: BigInt = r.coeffs().iter().sum();
    t.check(total == BigInt::from(1) << n, &h, || format!("{w}: Σ r_k = {total}"));

    let brute = euler_circuits_brute(&d).map(|c| c.len());
    let best = euler_circuit_count_best(&d);
    let q1 = q.evaluate_i64(1);
    match (brute, best) {
        (Ok(brute), Ok(best)) => t.check(BigInt::from(brute) == best && best == q1, &h, || {
            format!("{w}: brute {brute}, BEST {best}, q(1) = {q1}")
        }),
        (a, b) => t.fail(&h, format!("{w}: circuit counts failed: {a:?} {b:?}")),
    }

    let at = r.evaluate_i64(-2);
    let expected = martin_value_at_minus_two(&d);
    t.check(at == expected, &h, || format!("{w}: r(D; -2) = {at}, expected {expected}"));

    // Resolving vertex 0 both ways splits the transition systems.
    let split = [[0, 1], [1, 0]].iter().try_fold(IntPolynomial::zero(), |acc, tr| {
        let part = d.resolve_vertex(0, tr)?;
        Ok::<_, crate::Error>(acc + circuit_partition_polynomial(&part)?)
    });
    match split {
        Ok(s) => t.check(s == r, &h, || format!("{w}: resolving vertex 0 gives {s}, r = {r}")),
        Err(e) => t.fail(&h, format!("{w}: resolution failed: {e}")),
    }
}

/// Per-word bridge checks: `x q(H; 1+x) = r(D; x)`, `m(D) = q(H)`, both
/// coefficient transforms, `Σ r_k = 2^n`, brute Euler count = BEST count =
/// `q(H; 1)`, `r(D; -2) = (-1)^(n+a) 2^a`, and the resolution recursion
/// at vertex 0.
pub fn check_word_corpus(words: &[DoubleOccurrenceWord]) -> VerificationReport {
    let start = Instant::now();
    let mut tally = Tally::default();
    let n_max = words.iter().map(|w| w.symbol_count()).max().unwrap_or(0);
    for part in in_chunks(0..words.len() as u64, |range| {
        let mut solver = InterlaceSolver::new();
        let mut t = Tally::default();
        for i in range {
            check_word(&words[i as usize], &mut solver, &mut t);
        }
        t
    }) {
        tally.merge(part);
    }
    tally.into_report("euler-bridge", n_max, 0, start)
}

/// Orbit sizes compared up to isomorphism are limited to this many symbols
/// (canonical forms try every permutation).
const ISOMORPHISM_SYMBOL_LIMIT: usize = 5;

/// Closure of `g` under `G -> (G^{ab})_{ab}` over edges `ab`, as triangle
/// masks. A transposition on `ab` acts this way on interlace graphs.
fn swapped_pivot_orbit(g: &Graph) -> BTreeSet<u64> {
    let mut seen = BTreeSet::from([g.triangle_mask()]);
    let mut queue = vec![g.clone()];
    while let Some(cur) = queue.pop() {
        for (a, b) in cur.edges() {
            let next = cur.pivot(a, b).unwrap().label_swap(a, b).unwrap();
            if seen.insert(next.triangle_mask()) {
                queue.push(next);
            }
        }
    }
    seen
}

/// Smallest triangle mask over all relabelings.
fn canonical_mask(n: usize, mask: u64) -> u64 {
    let g = Graph::from_triangle_mask(n, mask);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut h = Graph::new(n).unwrap();
        for (u, v) in g.edges() {
            h.add_edge(perm[u], perm[v]).unwrap();
        }
        best = best.min(h.triangle_mask());
        // Next permutation in lexicographic order.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return best;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

fn check_transpositions(w: &DoubleOccurrenceWord, t: &mut Tally) {
    let n = w.symbol_count();
    let d = digraph_from_word(w);
    let h = interlace_graph(w);
    let circuit = EulerCircuit::of_word(w);
    for a in 0..n {
        for b in a + 1..n {
            if !h.has_edge(a, b) {
                t.check(transpose(w, a, b).is_err(), &h, || format!("{w}: transposed non-interlaced {a}{b}"));
                continue;
            }
            t.checked += 1;
            let tw = transpose(w, a, b).unwrap();
            let expected = h.pivot(a, b).unwrap().label_swap(a, b).unwrap();
            t.check(interlace_graph(&tw) == expected, &h, || {
                format!("{w}: H of the transposition on {a}{b} is not (H^ab)_ab")
            });
            t.check(transpose(&tw, a, b).ok().as_ref() == Some(w), &h, || {
                format!("{w}: transposing {a}{b} twice does not return the word")
            });
            t.check(digraph_from_word(&tw).key() == d.key(), &h, || {
                format!("{w}: transposing {a}{b} changes the digraph")
            });
            let arc_level = circuit.transpose(&d, a, b).map(|c| c.word(&d));
            t.check(arc_level.as_ref().ok() == Some(&tw), &h, || {
                format!("{w}: circuit and word transpositions disagree on {a}{b}")
            });
        }
    }
}

/// Loop digraphs: `r(m loops) = x(x+1)...(x+m-1)`.
fn check_loop_digraphs(m_max: usize, t: &mut Tally) {
    let mut expected = IntPolynomial::one();
    for m in 1..=m_max {
        expected = &expected * &IntPolynomial::from_i64s(&[m as i64 - 1, 1]);
        t.checked += 1;
        let r = circuit_partition_polynomial(&EulerianDigraph::loops(m));
        let g = Graph::new(1).unwrap();
        t.check(r.as_ref().ok() == Some(&expected), &g, || format!("{m} loops: r = {r:?}, expected {expected}"));
    }
}

/// Word corpus on every word shape up to `max_symbols` (capped at 7),
/// transposition laws up to 6 symbols, loop digraphs up to 8 loops, and
/// `samples` random words of 7 or 8 symbols.
pub fn check_euler_identities(max_symbols: usize, samples: usize, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let mut words: Vec<DoubleOccurrenceWord> =
        (1..=max_symbols.min(EXHAUSTIVE_WORD_LIMIT)).flat_map(pairing_words).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    words.extend((0..samples).map(|_| {
        let n = rng.gen_range(7..=8);
        random_word(n, &mut rng)
    }));
    let mut report = check_word_corpus(&words);

    let mut t = Tally::default();
    for n in 1..=max_symbols.min(6) {
        for w in pairing_words(n) {
            check_transpositions(&w, &mut t);
        }
    }
    check_loop_digraphs(8, &mut t);
    report.absorb(t.into_report("", 0, 0, start));
    report.suite = "euler-identities".into();
    report.n_max = max_symbols;
    report.seed = seed;
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Orbit laws. For every word shape up to `max_symbols` symbols: the
/// transposition orbit equals the set of all Euler circuits and has BEST
/// size; its interlace graphs are exactly the orbit of `H(w)` under
/// `G -> (G^{ab})_{ab}`, and (up to 5 symbols) the pivot orbit of `H(w)`
/// up to isomorphism. Over all labeled words: the interlace-graph sets of
/// digraphs, and the digraph sets of interlace graphs, are pairwise equal
/// or disjoint, and each digraph's set is one such orbit.
pub fn check_orbit_laws(max_symbols: usize) -> VerificationReport {
    let start = Instant::now();
    let mut t = Tally::default();
    for n in 1..=max_symbols {
        for w in pairing_words(n) {
            t.checked += 1;
            let d = digraph_from_word(&w);
            let h = interlace_graph(&w);
            let orbit = match transposition_orbit(&w) {
                Ok(o) => o,
                Err(e) => {
                    t.fail(&h, format!("{w}: {e}"));
                    continue;
                }
            };
            let all = euler_circuits_brute(&d).unwrap_or_default();
            t.check(orbit == all, &h, || {
                format!("{w}: orbit has {} circuits, the digraph has {}", orbit.len(), all.len())
            });
            let best = euler_circuit_count_best(&d).unwrap_or_default();
            t.check(BigInt::from(orbit.len()) == best, &h, || {
                format!("{w}: orbit size {}, BEST {best}", orbit.len())
            });
            let graphs: BTreeSet<u64> = orbit.iter().map(|c| interlace_graph(&c.word(&d)).triangle_mask()).collect();
            let moved = swapped_pivot_orbit(&h);
            t.check(graphs == moved, &h, || {
                format!("{w}: {} interlace graphs in the orbit, {} under swapped pivots", graphs.len(), moved.len())
            });
            if n <= ISOMORPHISM_SYMBOL_LIMIT {
                let shapes: BTreeSet<u64> = graphs.iter().map(|&m| canonical_mask(n, m)).collect();
                let pivots: BTreeSet<u64> = pivot_orbit(&h, usize::MAX)
                    .unwrap_or_default()
                    .iter()
                    .map(|g| canonical_mask(n, g.triangle_mask()))
                    .collect();
                t.check(shapes == pivots, &h, || {
                    format!("{w}: orbit graphs and pivot orbit differ up to isomorphism")
                });
            }
        }
        check_labeled_partition(n, &mut t);
    }
    t.into_report("orbit-laws", max_symbols, 0, start)
}

/// Both "same digraph" and "same interlace graph" relations on the labeled
/// words of `n` symbols partition each other's classes.
fn check_labeled_partition(n: usize, t: &mut Tally) {
    let mut d_ids: FxHashMap<DigraphKey, usize> = FxHashMap::default();
    let mut h_ids: FxHashMap<u64, usize> = FxHashMap::default();
    let mut h_graphs: Vec<Graph> = Vec::new();
    let mut pairs = BTreeSet::new();
    for w in all_words(n) {
        let next = d_ids.len();
        let d = *d_ids.entry(digraph_from_word(&w).key()).or_insert(next);
        let h = interlace_graph(&w);
        let next = h_ids.len();
        let hid = *h_ids.entry(h.triangle_mask()).or_insert_with(|| {
            h_graphs.push(h);
            next
        });
        pairs.insert((d, hid));
    }
    let mut of_d: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); d_ids.len()];
    let mut of_h: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); h_ids.len()];
    for &(d, h) in &pairs {
        of_d[d].insert(h);
        of_h[h].insert(d);
    }
    for &(d, h) in &pairs {
        t.checked += 1;
        // Every digraph sharing the graph h must have the same graph set.
        for &d2 in &of_h[h] {
            t.check(of_d[d2] == of_d[d], &h_graphs[h], || {
                format!("digraphs {d} and {d2} share an interlace graph but not all of them")
            });
        }
        for &h2 in &of_d[d] {
            t.check(of_h[h2] == of_h[h], &h_graphs[h], || {
                format!("interlace graphs {h} and {h2} share a digraph but not all of them")
            });
        }
    }
    for hs in of_d {
        let first = *hs.iter().next().unwrap();
        let orbit: BTreeSet<usize> = swapped_pivot_orbit(&h_graphs[first])
            .iter()
            .map(|m| h_ids.get(m).copied().unwrap_or(usize::MAX))
            .collect();
        t.check(orbit == hs, &h_graphs[first], || {
            format!("the graphs of a digraph are not a swapped-pivot orbit ({} vs {})", hs.len(), orbit.len())
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        let r = check_euler_identities(5, 20, 3);
        assert!(r.passed(), "{:?}", &r.violations[..r.violations.len().min(5)]);
        let r = check_orbit_laws(4);
        assert!(r.passed(), "{:?}", &r.violations[..r.violations.len().min(5)]);
    }
}
