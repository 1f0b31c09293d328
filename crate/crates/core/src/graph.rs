//! Labeled simple graphs on at most 64 vertices.
//!
//! Vertices are the indices `0..order`; each adjacency row is a `u64`
//! bitmask. All operations are pure: they return new graphs and never
//! mutate their input, so graphs can be shared freely between threads.

use std::fmt;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// Limit for the exhaustive independence/matching searches.
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// A set of vertices, one bit per vertex index.
pub type VertexSet = u64;

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Drops bit `v` from `row`, shifting the higher bits down by one.
#[inline]
fn remove_bit(row: u64, v: usize) -> u64 {
    let low = row & ((1u64 << v) - 1);
    let high = if v >= 63 { 0 } else { (row >> (v + 1)) << v };
    low | high
}

/// Packs the bits of `value` selected by `mask` into the low bits.
#[inline]
fn compress(value: u64, mut mask: u64) -> u64 {
    let mut out = 0u64;
    let mut bit = 0;
    while mask != 0 {
        let low = mask & mask.wrapping_neg();
        if value & low != 0 {
            out |= 1 << bit;
        }
        bit += 1;
        mask ^= low;
    }
    out
}

pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// A labeled simple undirected graph: no loops, no multiple edges.
#[derive(Clone)]
pub struct Graph {
    order: usize,
    rows: [u64; MAX_ORDER],
}

/// Exact labeled encoding of a graph, used as a memoization key.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GraphKey {
    order: u8,
    bits: SmallVec<[u64; 3]>,
}

impl Graph {
    /// The edgeless graph `E_n`.
    pub fn new(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::TooLarge {
                what: "graph order",
                size: order,
                limit: MAX_ORDER,
            });
        }
        Ok(Graph {
            order,
            rows: [0; MAX_ORDER],
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows; rows are validated for symmetry.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let mut g = Graph::new(rows.len())?;
        let mask = full_mask(rows.len());
        for (v, &r) in rows.iter().enumerate() {
            if r & !mask != 0 || r & (1 << v) != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: rows.len(),
                });
            }
            g.rows[v] = r;
        }
        for u in 0..g.order {
            for v in Bits(g.rows[u]) {
                if g.rows[v] & (1 << u) == 0 {
                    return Err(Error::parse(0, format!("adjacency not symmetric at {u},{v}")));
                }
            }
        }
        Ok(g)
    }

    /// Graph on `order` vertices whose upper-triangle edge indicators are the
    /// bits of `mask`, in the order (0,1), (0,2), (1,2), (0,3), (1,3), ...
    /// (column-major, the same order graph6 uses).
    pub fn from_triangle_mask(order: usize, mask: u64) -> Self {
        debug_assert!(order <= 11);
        let mut g = Graph {
            order,
            rows: [0; MAX_ORDER],
        };
        let mut bit = 0;
        for j in 1..order {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.rows[i] |= 1 << j;
                    g.rows[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        g
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Graph::new(n)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.rows[v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// The path `P_n` with `n` edges and `n + 1` vertices, `0 - 1 - ... - n`.
    ///
    /// The index counts edges, not vertices: `P_0` is a single vertex and
    /// `P_2` is the three-vertex path.
    pub fn path(n: usize) -> Result<Self> {
        let mut g = Graph::new(n + 1)?;
        for v in 0..n {
            g.add_edge(v, v + 1)?;
        }
        Ok(g)
    }

    /// The cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfStatedRange(format!("cycle of length {n}")));
        }
        let mut g = Graph::path(n - 1)?;
        g.add_edge(n - 1, 0)?;
        Ok(g)
    }

    /// The star `K_{1,n}`: center 0 and leaves `1..=n`.
    pub fn star(leaves: usize) -> Result<Self> {
        Graph::complete_bipartite(1, leaves)
    }

    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self> {
        Graph::complete_multipartite(&[m, n])
    }

    /// Complete multipartite graph with consecutive parts of the given sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        let order: usize = parts.iter().sum();
        let mut g = Graph::new(order)?;
        let all = full_mask(order);
        let mut start = 0;
        for &k in parts {
            let part = full_mask(start + k) & !full_mask(start);
            for v in start..start + k {
                g.rows[v] = all & !part;
            }
            start += k;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows[..self.order]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows[..self.order].iter().all(|&r| r == 0)
    }

    pub fn is_complete(&self) -> bool {
        let all = full_mask(self.order);
        (0..self.order).all(|v| self.rows[v] == all & !(1 << v))
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        full_mask(self.order)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows[..self.order]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.rows[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order)
            .flat_map(move |u| Bits(self.rows[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    fn check_pair(&self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::RepeatedVertex(a));
        }
        Ok(())
    }

    /// Construction helper; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
        Ok(())
    }

    /// Returns a copy with the adjacency of `u` and `v` flipped.
    pub fn toggle_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.rows[u] ^= 1 << v;
        g.rows[v] ^= 1 << u;
        Ok(g)
    }

    /// The pivot `G^{ab}` about the edge `ab`.
    ///
    /// Vertices other than `a` and `b` fall into four classes: adjacent to
    /// `a` only, to `b` only, to both, or to neither. Every pair taken from
    /// two different classes among the first three has its adjacency
    /// flipped; nothing else changes.
    pub fn pivot(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_pair(a, b)?;
        if !self.has_edge(a, b) {
            return Err(Error::NotAnEdge { a, b });
        }
        Ok(self.pivot_unchecked(a, b))
    }

    #[inline]
    pub(crate) fn pivot_unchecked(&self, a: usize, b: usize) -> Graph {
        let na = self.rows[a] & !(1 << b);
        let nb = self.rows[b] & !(1 << a);
        let only_a = na & !nb;
        let only_b = nb & !na;
        let both = na & nb;
        let mut g = self.clone();
        for x in Bits(only_a) {
            g.rows[x] ^= only_b | both;
        }
        for x in Bits(only_b) {
            g.rows[x] ^= only_a | both;
        }
        for x in Bits(both) {
            g.rows[x] ^= only_a | only_b;
        }
        g
    }

    /// `G_{ab}`: the same graph with the labels of `a` and `b` exchanged.
    pub fn label_swap(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_pair(a, b)?;
        let swap_bits = |r: u64| {
            let ba = r >> a & 1;
            let bb = r >> b & 1;
            if ba != bb {
                r ^ (1 << a) ^ (1 << b)
            } else {
                r
            }
        };
        let mut g = self.clone();
        g.rows.swap(a, b);
        for v in 0..g.order {
            g.rows[v] = swap_bits(g.rows[v]);
        }
        Ok(g)
    }

    /// Deletes `v`, compacting the remaining indices. The returned map sends
    /// each new index to its old index.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(v)?;
        let map = (0..self.order).filter(|&u| u != v).collect();
        Ok((self.without(v), map))
    }

    #[inline]
    pub(crate) fn without(&self, v: usize) -> Graph {
        let mut g = Graph {
            order: self.order - 1,
            rows: [0; MAX_ORDER],
        };
        for u in 0..v {
            g.rows[u] = remove_bit(self.rows[u], v);
        }
        for u in v + 1..self.order {
            g.rows[u - 1] = remove_bit(self.rows[u], v);
        }
        g
    }

    /// Subgraph induced by `set`, with vertices renumbered in increasing
    /// order of their old indices.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<Graph> {
        if set & !self.vertices() != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: (set & !self.vertices()).trailing_zeros() as usize,
                order: self.order,
            });
        }
        Ok(self.induced(set))
    }

    pub(crate) fn induced(&self, set: VertexSet) -> Graph {
        let mut g = Graph {
            order: set.count_ones() as usize,
            rows: [0; MAX_ORDER],
        };
        for (i, v) in Bits(set).enumerate() {
            g.rows[i] = compress(self.rows[v] & set, set);
        }
        g
    }

    /// `G1 ∪ G2` with the vertices of `other` numbered after those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let order = self.order + other.order;
        let mut g = Graph::new(order)?;
        g.rows[..self.order].copy_from_slice(&self.rows[..self.order]);
        for v in 0..other.order {
            g.rows[self.order + v] = other.rows[v] << self.order;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let mut g = self.clone();
        for v in 0..self.order {
            g.rows[v] = all & !self.rows[v] & !(1 << v);
        }
        g
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices();
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining & remaining.wrapping_neg();
            let comp = self.reach(start);
            out.push(comp);
            remaining &= !comp;
        }
        out
    }

    /// All vertices reachable from `seed`.
    pub(crate) fn reach(&self, seed: VertexSet) -> VertexSet {
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !comp;
            comp |= next;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.reach(1) == self.vertices()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.order)
            .filter(|&v| self.rows[v] == 0)
            .fold(0, |s, v| s | 1 << v)
    }

    fn check_brute_force(&self) -> Result<()> {
        if self.order > BRUTE_FORCE_LIMIT {
            return Err(Error::TooLarge {
                what: "order for exhaustive search",
                size: self.order,
                limit: BRUTE_FORCE_LIMIT,
            });
        }
        Ok(())
    }

    /// Exact independence number `α(G)`.
    pub fn independence_number(&self) -> Result<usize> {
        self.check_brute_force()?;
        Ok(self.max_independent(self.vertices()))
    }

    fn max_independent(&self, set: VertexSet) -> usize {
        if set == 0 {
            return 0;
        }
        // A vertex of degree <= 1 within `set` belongs to some maximum
        // independent set.
        let mut best_v = usize::MAX;
        let mut best_deg = usize::MAX;
        for v in Bits(set) {
            let d = (self.rows[v] & set).count_ones() as usize;
            if d <= 1 {
                return 1 + self.max_independent(set & !self.rows[v] & !(1 << v));
            }
            if d > best_deg || best_v == usize::MAX {
                best_deg = d;
                best_v = v;
            }
        }
        let v = best_v;
        let without = self.max_independent(set & !(1 << v));
        let with = 1 + self.max_independent(set & !self.rows[v] & !(1 << v));
        without.max(with)
    }

    /// Exact matching number `μ(G)`.
    pub fn matching_number(&self) -> Result<usize> {
        self.check_brute_force()?;
        Ok(self.max_matching(self.vertices()))
    }

    fn max_matching(&self, set: VertexSet) -> usize {
        if set == 0 {
            return 0;
        }
        let v = set.trailing_zeros() as usize;
        let rest = set & !(1 << v);
        let mut best = self.max_matching(rest);
        for u in Bits(self.rows[v] & rest) {
            best = best.max(1 + self.max_matching(rest & !(1 << u)));
        }
        best
    }

    /// Exact labeled encoding: order plus the packed upper triangle.
    pub fn key(&self) -> GraphKey {
        let mut bits: SmallVec<[u64; 3]> = SmallVec::new();
        let mut word = 0u64;
        let mut used = 0u32;
        for j in 1..self.order {
            let chunk = self.rows[j] & full_mask(j);
            let mut width = j as u32;
            let mut chunk = chunk;
            while width > 0 {
                let take = width.min(64 - used);
                let part = if take == 64 { chunk } else { chunk & ((1u64 << take) - 1) };
                word |= part << used;
                used += take;
                width -= take;
                chunk = if take == 64 { 0 } else { chunk >> take };
                if used == 64 {
                    bits.push(word);
                    word = 0;
                    used = 0;
                }
            }
        }
        if used > 0 {
            bits.push(word);
        }
        GraphKey {
            order: self.order as u8,
            bits,
        }
    }

    /// Upper-triangle mask in [`Graph::from_triangle_mask`] order.
    /// Only meaningful for order <= 11.
    pub fn triangle_mask(&self) -> u64 {
        debug_assert!(self.order <= 11);
        let mut mask = 0u64;
        let mut bit = 0;
        for j in 1..self.order {
            for i in 0..j {
                if self.rows[i] >> j & 1 == 1 {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.rows[..self.order] == other.rows[..other.order]
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.rows[..self.order].hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    /// Pivot straight from the definition, pair by pair.
    fn pivot_by_definition(graph: &Graph, a: usize, b: usize) -> Graph {
        let class = |x: usize| match (graph.has_edge(x, a), graph.has_edge(x, b)) {
            (true, false) => Some(1),
            (false, true) => Some(2),
            (true, true) => Some(3),
            (false, false) => None,
        };
        let mut out = graph.clone();
        for x in 0..graph.order() {
            for y in x + 1..graph.order() {
                if [x, y].iter().any(|&v| v == a || v == b) {
                    continue;
                }
                if let (Some(cx), Some(cy)) = (class(x), class(y)) {
                    if cx != cy {
                        out = out.toggle_edge(x, y).unwrap();
                    }
                }
            }
        }
        out
    }

    #[test]
    fn pivot_path_gives_four_cycle() {
        let p = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let c = p.pivot(1, 2).unwrap();
        assert_eq!(c, g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]));
    }

    #[test]
    fn pivot_matches_definition_on_small_graphs() {
        for n in 2..=6 {
            for mask in 0..1u64 << (n * (n - 1) / 2) {
                let graph = Graph::from_triangle_mask(n, mask);
                for (a, b) in graph.edges() {
                    assert_eq!(graph.pivot(a, b).unwrap(), pivot_by_definition(&graph, a, b));
                }
            }
        }
    }

    #[test]
    fn pivot_on_pendant_edge_is_identity() {
        let t = g(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        assert_eq!(t.pivot(0, 1).unwrap(), t);
        assert_eq!(t.pivot(3, 4).unwrap(), t);
    }

    #[test]
    fn pivot_requires_an_edge() {
        let p = g(3, &[(0, 1)]);
        assert_eq!(p.pivot(0, 2), Err(Error::NotAnEdge { a: 0, b: 2 }));
        assert_eq!(p.pivot(0, 0), Err(Error::RepeatedVertex(0)));
        assert!(matches!(p.pivot(0, 7), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn label_swap_examples() {
        let k = Graph::complete(5).unwrap();
        assert_eq!(k.label_swap(1, 3).unwrap(), k);
        let s = Graph::star(4).unwrap();
        assert_eq!(s.label_swap(2, 4).unwrap(), s);
        let p = Graph::path(2).unwrap();
        assert_eq!(p.label_swap(0, 1).unwrap(), g(3, &[(0, 1), (0, 2)]));
    }

    #[test]
    fn deletion_and_induced_subgraphs() {
        let e = Graph::edgeless(4).unwrap();
        assert_eq!(e.delete_vertex(2).unwrap().0, Graph::edgeless(3).unwrap());
        let (h, map) = Graph::path(3).unwrap().delete_vertex(1).unwrap();
        assert_eq!(map, vec![0, 2, 3]);
        assert_eq!(h, g(3, &[(1, 2)]));
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.induced_subgraph(0b10101).unwrap(), Graph::complete(3).unwrap());
        assert!(k5.induced_subgraph(1 << 5).is_err());
        assert!(k5.delete_vertex(5).is_err());
        let u = Graph::edgeless(2)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!((u.order(), u.size()), (4, 1));
        assert!(u.has_edge(2, 3));
    }

    #[test]
    fn union_respects_order_cap() {
        let big = Graph::edgeless(40).unwrap();
        assert!(big.disjoint_union(&big).is_err());
        assert!(Graph::new(65).is_err());
        let full = Graph::complete(64).unwrap();
        assert_eq!(full.size(), 64 * 63 / 2);
        assert_eq!(full.without(63), Graph::complete(63).unwrap());
    }

    #[test]
    fn components_examples() {
        assert_eq!(Graph::edgeless(3).unwrap().component_count(), 3);
        assert_eq!(Graph::complete(4).unwrap().component_count(), 1);
        let c3k2 = Graph::cycle(3)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!(c3k2.component_count(), 2);
        assert!(!c3k2.is_connected());
        assert!(Graph::new(0).unwrap().is_connected());
    }

    #[test]
    fn independence_and_matching() {
        for n in 1..8 {
            assert_eq!(Graph::complete(n).unwrap().independence_number().unwrap(), 1);
            assert_eq!(Graph::edgeless(n).unwrap().independence_number().unwrap(), n);
        }
        assert_eq!(Graph::path(3).unwrap().matching_number().unwrap(), 2);
        assert_eq!(Graph::star(5).unwrap().matching_number().unwrap(), 1);
        assert_eq!(Graph::cycle(7).unwrap().independence_number().unwrap(), 3);
        assert!(Graph::edgeless(25).unwrap().independence_number().is_err());
    }

    #[test]
    fn independence_matches_subset_search() {
        for mask in 0..1u64 << 15 {
            let graph = Graph::from_triangle_mask(6, mask);
            let brute = (0u64..64)
                .filter(|&s| Bits(s).all(|v| graph.neighbors(v) & s == 0))
                .map(|s| s.count_ones() as usize)
                .max()
                .unwrap();
            assert_eq!(graph.independence_number().unwrap(), brute);
        }
    }

    #[test]
    fn key_distinguishes_labeled_graphs() {
        let a = g(3, &[(0, 1)]);
        let b = g(3, &[(1, 2)]);
        assert_ne!(a.key(), b.key());
        assert_eq!(a.key(), g(3, &[(1, 0)]).key());
        assert_ne!(Graph::edgeless(2).unwrap().key(), Graph::edgeless(3).unwrap().key());
        let big = Graph::complete(20).unwrap();
        assert_eq!(big.key(), Graph::complete(20).unwrap().key());
        assert_ne!(big.key(), big.toggle_edge(18, 19).unwrap().key());
    }

    #[test]
    fn triangle_mask_round_trip() {
        for mask in 0..1u64 << 10 {
            assert_eq!(Graph::from_triangle_mask(5, mask).triangle_mask(), mask);
        }
    }
}
