use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

use super::digraph::{digraph_from_word, EulerianDigraph, TwoInTwoOutDigraph};
use super::word::DoubleOccurrenceWord;

/// Upper bound on the number of transition systems enumerated by the
/// brute-force routines (`2^20` for a 2-in/2-out digraph of order 20).
pub const TRANSITION_LIMIT: u64 = 1 << 20;

/// Largest word accepted by [`transposition_orbit`].
pub const ORBIT_SYMBOL_LIMIT: usize = 7;

/// A choice, at every vertex, of which out-arc follows each in-arc:
/// `in_arcs(v)[i]` is followed by `out_arcs(v)[perm[v][i]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TransitionSystem {
    perm: Vec<Vec<usize>>,
}

impl TransitionSystem {
    /// Builds a system, checking that every vertex gets a permutation of the
    /// right size.
    pub fn new(d: &EulerianDigraph, perm: Vec<Vec<usize>>) -> Result<Self> {
        if perm.len() != d.order() {
            return Err(Error::OutOfStatedRange(format!(
                "{} vertex transitions for order {}",
                perm.len(),
                d.order()
            )));
        }
        for (v, p) in perm.iter().enumerate() {
            let mut seen = vec![false; p.len()];
            if p.len() != d.out_degree(v)
                || p.iter().any(|&j| j >= seen.len() || std::mem::replace(&mut seen[j], true))
            {
                return Err(Error::OutOfStatedRange(format!("transition {p:?} at vertex {v}")));
            }
        }
        Ok(TransitionSystem { perm })
    }

    /// For a 2-in/2-out digraph: bit `v` of `bits` set means the in-arcs of
    /// `v` cross over (first in-arc to second out-arc).
    pub fn from_bits(d: &TwoInTwoOutDigraph, bits: u64) -> Self {
        let perm = (0..d.order())
            .map(|v| if bits >> v & 1 == 1 { vec![1, 0] } else { vec![0, 1] })
            .collect();
        TransitionSystem { perm }
    }

    pub fn at(&self, v: usize) -> &[usize] {
        &self.perm[v]
    }

    /// Successor of every arc.
    fn successors(&self, d: &EulerianDigraph) -> Vec<usize> {
        let mut next = vec![0; d.arc_count()];
        for v in 0..d.order() {
            for (i, &e) in d.in_arcs(v).iter().enumerate() {
                next[e] = d.out_arcs(v)[self.perm[v][i]];
            }
        }
        next
    }
}

/// Number of transition systems of `d`: the product of `deg(v)!`.
pub fn transition_system_count(d: &EulerianDigraph) -> Option<u64> {
    (0..d.order()).try_fold(1u64, |acc, v| {
        (1..=d.out_degree(v) as u64).try_fold(acc, |a, k| a.checked_mul(k))
    })
}

fn check_transition_count(d: &EulerianDigraph) -> Result<u64> {
    match transition_system_count(d) {
        Some(c) if c <= TRANSITION_LIMIT => Ok(c),
        c => Err(Error::TooLarge {
            what: "transition system count",
            size: c.map_or(usize::MAX, |c| c as usize),
            limit: TRANSITION_LIMIT as usize,
        }),
    }
}

/// Advances `p` to the next permutation in lexicographic order; returns
/// false (and leaves `p` sorted) after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        p.reverse();
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Iterates over every transition system of `d`.
pub fn transition_systems(d: &EulerianDigraph) -> Result<impl Iterator<Item = TransitionSystem>> {
    check_transition_count(d)?;
    let mut current: Option<Vec<Vec<usize>>> =
        Some((0..d.order()).map(|v| (0..d.out_degree(v)).collect()).collect());
    Ok(std::iter::from_fn(move || {
        let out = current.clone()?;
        let state = current.as_mut().unwrap();
        if !state.iter_mut().any(|p| next_permutation(p)) {
            current = None;
        }
        Some(TransitionSystem { perm: out })
    }))
}

/// Circuits induced by a transition system, as arc-id cycles each starting
/// at its smallest arc, ordered by that arc; plus the free loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitPartition {
    pub circuits: Vec<Vec<usize>>,
    pub free_loops: usize,
}

impl CircuitPartition {
    /// Number of circuits, free loops included.
    pub fn len(&self) -> usize {
        self.circuits.len() + self.free_loops
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn circuit_partition_of(d: &EulerianDigraph, t: &TransitionSystem) -> CircuitPartition {
    let next = t.successors(d);
    let mut seen = vec![false; next.len()];
    let mut circuits = Vec::new();
    for start in 0..next.len() {
        if seen[start] {
            continue;
        }
        let mut c = Vec::new();
        let mut e = start;
        while !seen[e] {
            seen[e] = true;
            c.push(e);
            e = next[e];
        }
        circuits.push(c);
    }
    CircuitPartition {
        circuits,
        free_loops: d.free_loops(),
    }
}

fn cycle_count(next: &[usize], seen: &mut [bool]) -> usize {
    seen.iter_mut().for_each(|s| *s = false);
    let mut k = 0;
    for start in 0..next.len() {
        if seen[start] {
            continue;
        }
        k += 1;
        let mut e = start;
        while !seen[e] {
            seen[e] = true;
            e = next[e];
        }
    }
    k
}

/// The circuit partition polynomial `r(D; x) = Σ_k r_k x^k`, where `r_k`
/// counts transition systems inducing `k` circuits (free loops included).
pub fn circuit_partition_polynomial(d: &EulerianDigraph) -> Result<IntPolynomial> {
    let mut counts = vec![0u64; d.arc_count() + 1];
    let mut seen = vec![false; d.arc_count()];
    for t in transition_systems(d)? {
        counts[cycle_count(&t.successors(d), &mut seen)] += 1;
    }
    Ok(IntPolynomial::from_u64s(&counts).shift_mul_x_pow(d.free_loops()))
}

/// The Martin polynomial `m(D; x) = r(D; x - 1) / (x - 1)`.
pub fn martin_polynomial(d: &EulerianDigraph) -> Result<IntPolynomial> {
    circuit_partition_polynomial(d)?
        .compose_shift_inverse()
        .divide_exact_by_x_minus_1()
}

/// An Euler circuit as a cyclic sequence of arc ids, rotated to start at
/// its smallest arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EulerCircuit {
    arcs: Vec<usize>,
}

impl EulerCircuit {
    fn from_cycle(mut arcs: Vec<usize>) -> Self {
        if let Some(i) = arcs.iter().enumerate().min_by_key(|(_, &a)| a).map(|(i, _)| i) {
            arcs.rotate_left(i);
        }
        EulerCircuit { arcs }
    }

    /// The circuit `0, 1, ..., 2n-1` that a word traces in its own digraph.
    pub fn of_word(w: &DoubleOccurrenceWord) -> Self {
        EulerCircuit {
            arcs: (0..w.len()).collect(),
        }
    }

    pub fn arcs(&self) -> &[usize] {
        &self.arcs
    }

    /// Vertex sequence of the circuit (tails of its arcs).
    pub fn word(&self, d: &TwoInTwoOutDigraph) -> DoubleOccurrenceWord {
        DoubleOccurrenceWord::new(self.arcs.iter().map(|&a| d.tail(a)).collect())
            .expect("Euler circuits of 2-in/2-out digraphs visit every vertex twice")
    }

    /// Transposition on an interlaced pair `a, b`: the two `a -> b` runs of
    /// the circuit are exchanged.
    pub fn transpose(&self, d: &TwoInTwoOutDigraph, a: usize, b: usize) -> Result<EulerCircuit> {
        if !self.word(d).is_interlaced(a, b)? {
            return Err(Error::NotInterlaced { a, b });
        }
        let mut c = self.arcs.clone();
        let p1 = c.iter().position(|&e| d.tail(e) == a).unwrap();
        c.rotate_left(p1);
        let find = |from: usize, v: usize| from + c[from..].iter().position(|&e| d.tail(e) == v).unwrap();
        let q1 = find(0, b);
        let p2 = find(q1, a);
        let q2 = find(p2, b);
        let mut out = Vec::with_capacity(c.len());
        out.extend_from_slice(&c[p2..q2]);
        out.extend_from_slice(&c[q1..p2]);
        out.extend_from_slice(&c[..q1]);
        out.extend_from_slice(&c[q2..]);
        Ok(EulerCircuit::from_cycle(out))
    }
}

/// Every Euler circuit of `d`, by brute force over transition systems.
pub fn euler_circuits_brute(d: &EulerianDigraph) -> Result<Vec<EulerCircuit>> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut out = Vec::new();
    for t in transition_systems(d)? {
        let mut p = circuit_partition_of(d, &t);
        if p.circuits.len() == 1 {
            out.push(EulerCircuit::from_cycle(p.circuits.pop().unwrap()));
        }
    }
    out.sort();
    Ok(out)
}

/// Closure of the word's own circuit under transpositions on interlaced
/// pairs, as circuits of `digraph_from_word(w)`, sorted.
pub fn transposition_orbit(w: &DoubleOccurrenceWord) -> Result<Vec<EulerCircuit>> {
    if w.symbol_count() > ORBIT_SYMBOL_LIMIT {
        return Err(Error::TooLarge {
            what: "word symbol count for orbit search",
            size: w.symbol_count(),
            limit: ORBIT_SYMBOL_LIMIT,
        });
    }
    let d = digraph_from_word(w);
    let n = w.symbol_count();
    let start = EulerCircuit::of_word(w);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        let word = c.word(&d);
        for a in 0..n {
            for b in a + 1..n {
                if word.is_interlaced(a, b)? {
                    let t = c.transpose(&d, a, b)?;
                    if seen.insert(t.clone()) {
                        queue.push_back(t);
                    }
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `a(D)`, the number of anti-circuits: circuits whose consecutive arcs
/// alternate in orientation. Free loops count as anti-circuits.
pub fn anti_circuit_count(d: &TwoInTwoOutDigraph) -> usize {
    // End 2e is the tail of arc e, end 2e + 1 its head.
    let mut parent: Vec<usize> = (0..2 * d.arc_count()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        p[ra] = rb;
    };
    for e in 0..d.arc_count() {
        union(&mut parent, 2 * e, 2 * e + 1);
    }
    for v in 0..d.order() {
        let (i, o) = (d.in_arcs(v), d.out_arcs(v));
        union(&mut parent, 2 * i[0] + 1, 2 * i[1] + 1);
        union(&mut parent, 2 * o[0], 2 * o[1]);
    }
    let roots = (0..parent.len()).filter(|&x| find(&mut parent, x) == x).count();
    roots + d.free_loops()
}

/// `(-1)^(n + a(D)) 2^a(D)`, the value of `r(D; -2)`.
pub fn martin_value_at_minus_two(d: &TwoInTwoOutDigraph) -> BigInt {
    let a = anti_circuit_count(d);
    let v = BigInt::from(1) << a;
    if (d.order() + a) % 2 == 0 {
        v
    } else {
        -v
    }
}
