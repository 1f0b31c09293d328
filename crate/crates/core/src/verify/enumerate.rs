//! Exhaustive and random instance generators.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::euler::DoubleOccurrenceWord;
use crate::graph::{Bits, Graph};

/// Largest order for exhaustive labeled enumeration (`2^55` masks is
/// already far beyond reach; the bound exists to keep masks in a `u64`).
pub const ENUMERATION_LIMIT: usize = 11;

/// All labeled graphs on `n` vertices, one per upper-triangle bitmask in
/// graph6 bit order, optionally restricted to connected graphs.
#[derive(Clone, Debug)]
pub struct GraphEnumeration {
    order: usize,
    connected_only: bool,
    next: u64,
    end: u64,
}

impl GraphEnumeration {
    pub fn new(order: usize, connected_only: bool) -> Result<Self> {
        if order > ENUMERATION_LIMIT {
            return Err(Error::TooLarge {
                what: "order for exhaustive enumeration",
                size: order,
                limit: ENUMERATION_LIMIT,
            });
        }
        Ok(GraphEnumeration {
            order,
            connected_only,
            next: 0,
            end: 1u64 << pair_count(order),
        })
    }

    /// Number of labeled graphs before filtering: `2^C(n,2)`.
    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for GraphEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let g = Graph::from_triangle_mask(self.order, self.next);
            self.next += 1;
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Uniform random labeled graph: each pair is an edge with probability 1/2.
pub fn random_graph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::new(n).expect("order within range");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<bool>() {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Uniform random double occurrence word on `n >= 1` symbols.
pub fn random_word<R: Rng>(n: usize, rng: &mut R) -> DoubleOccurrenceWord {
    let mut s: Vec<usize> = (0..n).chain(0..n).collect();
    s.shuffle(rng);
    DoubleOccurrenceWord::new(s).expect("two copies of each symbol")
}

fn fill_words(
    seq: &mut Vec<usize>,
    left: &mut [u8],
    len: usize,
    out: &mut Vec<DoubleOccurrenceWord>,
) {
    if seq.len() == len {
        let w = DoubleOccurrenceWord::new(seq.clone()).unwrap();
        if w.symbols() == seq.as_slice() {
            out.push(w);
        }
        return;
    }
    for s in 0..left.len() {
        if left[s] > 0 {
            left[s] -= 1;
            seq.push(s);
            fill_words(seq, left, len, out);
            seq.pop();
            left[s] += 1;
        }
    }
}

/// Every labeled cyclic double occurrence word on the symbols `0..n`, each
/// exactly once (in canonical rotation).
pub fn all_words(n: usize) -> Vec<DoubleOccurrenceWord> {
    if n == 0 {
        return Vec::new();
    }
    let mut left = vec![2u8; n];
    left[0] = 1;
    let mut out = Vec::new();
    fill_words(&mut vec![0], &mut left, 2 * n, &mut out);
    out
}

fn fill_pairings(seq: &mut Vec<usize>, open: &mut Vec<usize>, next: usize, n: usize, out: &mut BTreeSet<DoubleOccurrenceWord>) {
    if seq.len() == 2 * n {
        out.insert(DoubleOccurrenceWord::new(seq.clone()).unwrap());
        return;
    }
    if next < n {
        seq.push(next);
        open.push(next);
        fill_pairings(seq, open, next + 1, n, out);
        open.pop();
        seq.pop();
    }
    for i in 0..open.len() {
        let s = open.remove(i);
        seq.push(s);
        fill_pairings(seq, open, next, n, out);
        seq.pop();
        open.insert(i, s);
    }
}

/// Words whose symbols first appear in the order `0, 1, ..., n-1` (all
/// `(2n-1)!!` pairings of `2n` positions), canonicalized and deduplicated.
/// Every word is a relabeling of one of these.
pub fn pairing_words(n: usize) -> Vec<DoubleOccurrenceWord> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = BTreeSet::new();
    fill_pairings(&mut Vec::new(), &mut Vec::new(), 0, n, &mut out);
    out.into_iter().collect()
}

/// AHU encoding of the tree `g` rooted at `v`, coming from `parent`.
fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> = Bits(g.neighbors(v))
        .filter(|&u| Some(u) != parent)
        .map(|u| rooted_code(g, u, Some(v)))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Canonical form of a tree up to isomorphism: the smallest rooted
/// encoding over its centers.
pub fn tree_code(g: &Graph) -> String {
    let mut alive = g.vertices();
    let mut deg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    while alive.count_ones() > 2 {
        let leaves: Vec<usize> = Bits(alive).filter(|&v| deg[v] <= 1).collect();
        for &v in &leaves {
            alive &= !(1u64 << v);
            for u in Bits(g.neighbors(v) & alive) {
                deg[u] -= 1;
            }
        }
    }
    Bits(alive).map(|c| rooted_code(g, c, None)).min().unwrap_or_default()
}

/// One representative of every unlabeled tree on `n` vertices.
pub fn unlabeled_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::new(1).unwrap()];
    for k in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..k {
                let mut g = t.disjoint_union(&Graph::new(1).unwrap()).unwrap();
                g.add_edge(v, k).unwrap();
                if seen.insert(tree_code(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        assert_eq!(GraphEnumeration::new(3, false).unwrap().count(), 8);
        assert_eq!(GraphEnumeration::new(4, true).unwrap().count(), 38);
        assert_eq!(GraphEnumeration::new(0, false).unwrap().count(), 1);
        assert_eq!(GraphEnumeration::new(5, false).unwrap().total(), 1024);
        assert!(GraphEnumeration::new(12, false).is_err());
    }

    #[test]
    fn word_counts() {
        // (2n-1)! / 2^(n-1) sequences start with symbol 0; every cyclic word
        // is counted twice except the periodic ones.
        assert_eq!(all_words(1).len(), 1);
        assert_eq!(all_words(2).len(), 2); // 0 0 1 1, 0 1 0 1
        assert_eq!(all_words(3).len(), 16);
        assert_eq!(all_words(4).len(), 318);
        assert_eq!(all_words(5).len(), 11352);
        assert_eq!(pairing_words(2).len(), 2);
        let p3 = pairing_words(3);
        assert!(p3.len() <= 15);
        let labeled: BTreeSet<_> = all_words(3).into_iter().collect();
        assert!(p3.iter().all(|w| labeled.contains(w)));
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| unlabeled_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        for t in unlabeled_trees(7) {
            assert!(t.is_connected());
            assert_eq!(t.size(), 6);
        }
    }
}
