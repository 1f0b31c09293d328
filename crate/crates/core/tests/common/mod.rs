//! Brute-force oracles shared by the integration tests. None of them go
//! through the pivot recursion.

#![allow(dead_code)]

use interlace_core::{Graph, IntPolynomial, TwoInTwoOutDigraph};
use num_bigint::BigInt;

/// Rank over GF(2) of a symmetric 0/1 matrix given as row bitmasks.
pub fn gf2_rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let Some(i) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, i);
        let pivot = rows[rank];
        for (j, r) in rows.iter_mut().enumerate() {
            if j != rank && *r >> bit & 1 == 1 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// `q(G; y) = Σ_S (y - 1)^nullity(A[S])` over all vertex subsets, with the
/// nullity of the adjacency matrix taken over GF(2).
pub fn nullity_oracle(g: &Graph) -> IntPolynomial {
    let n = g.order();
    assert!(n <= 20, "oracle is exponential");
    let mut counts = vec![0u64; n + 1];
    for s in 0u64..1 << n {
        let verts: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let rows: Vec<u64> = verts
            .iter()
            .map(|&v| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| g.has_edge(u, v))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        counts[verts.len() - gf2_rank(rows)] += 1;
    }
    let y_minus_1 = IntPolynomial::from_i64s(&[-1, 1]);
    let mut total = IntPolynomial::zero();
    for (k, &c) in counts.iter().enumerate() {
        if c > 0 {
            total = &total + &y_minus_1.pow(k as u32).scale(&BigInt::from(c));
        }
    }
    total
}

pub fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Anti-circuits counted by walking: enter an arc at its tail, leave at its
/// head, switch to the other in-arc there and walk it backwards, switch to
/// the other out-arc at its tail, and so on.
pub fn anti_circuits_by_walking(d: &TwoInTwoOutDigraph) -> usize {
    let other = |pair: &[usize], e: usize| if pair[0] == e { pair[1] } else { pair[0] };
    let mut used = vec![false; d.arc_count()];
    let mut count = d.free_loops();
    for start in 0..d.arc_count() {
        if used[start] {
            continue;
        }
        count += 1;
        let mut e = start;
        loop {
            used[e] = true;
            let back = other(d.in_arcs(d.head(e)), e);
            used[back] = true;
            e = other(d.out_arcs(d.tail(back)), back);
            if e == start {
                break;
            }
        }
    }
    count
}

/// `x (x + 1) ... (x + m - 1)`.
pub fn rising_factorial(m: usize) -> IntPolynomial {
    (0..m).fold(IntPolynomial::one(), |acc, k| &acc * &IntPolynomial::from_i64s(&[k as i64, 1]))
}

/// Graph on vertices `1..=n` given by 1-based edges.
pub fn one_based(n: usize, edges: &[(usize, usize)]) -> Graph {
    let e: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edges(n, &e).unwrap()
}
