//! Structural predicates used by the equality characterizations.

use crate::graph::{Graph, VertexSet};

/// Groups vertices by `key(v)`, in order of first appearance.
fn classes(g: &Graph, key: impl Fn(usize) -> VertexSet) -> Vec<VertexSet> {
    let mut keys: Vec<VertexSet> = Vec::new();
    let mut out: Vec<VertexSet> = Vec::new();
    for v in 0..g.order() {
        let k = key(v);
        match keys.iter().position(|&x| x == k) {
            Some(i) => out[i] |= 1 << v,
            None => {
                keys.push(k);
                out.push(1 << v);
            }
        }
    }
    out
}

/// Number of parts if `g` is complete multipartite (non-adjacency is an
/// equivalence relation). The null graph has 0 parts.
pub fn complete_multipartite_parts(g: &Graph) -> Option<usize> {
    let parts = classes(g, |v| g.neighbors(v));
    let ok = parts.iter().all(|&p| {
        let v = p.trailing_zeros() as usize;
        g.neighbors(v) & p == 0 && g.neighbors(v) == g.vertices() & !p
    });
    ok.then_some(parts.len())
}

/// A complete tripartite graph (parts may be empty) plus isolated vertices.
pub fn is_complete_tripartite_plus_isolated(g: &Graph) -> bool {
    let core = g.induced_subgraph(g.vertices() & !g.isolated_vertices()).unwrap();
    complete_multipartite_parts(&core).is_some_and(|k| k <= 3)
}

/// Quotient by true twins (equal closed neighborhoods), with class sizes.
pub fn true_twin_quotient(g: &Graph) -> (Graph, Vec<usize>) {
    let parts = classes(g, |v| g.neighbors(v) | 1 << v);
    let mut q = Graph::new(parts.len()).unwrap();
    for i in 0..parts.len() {
        let v = parts[i].trailing_zeros() as usize;
        for j in i + 1..parts.len() {
            if g.neighbors(v) & parts[j] != 0 {
                q.add_edge(i, j).unwrap();
            }
        }
    }
    (q, parts.iter().map(|p| p.count_ones() as usize).collect())
}

/// Connected, `n - 1` edges, maximum degree at most 2.
pub fn is_path(g: &Graph) -> bool {
    g.order() >= 1
        && g.is_connected()
        && g.size() + 1 == g.order()
        && (0..g.order()).all(|v| g.degree(v) <= 2)
}

/// A solid path of length `len` with every part nonempty: connected, and
/// the true-twin quotient is a path with `len` edges.
pub fn is_solid_path(g: &Graph, len: usize) -> bool {
    if !g.is_connected() {
        return false;
    }
    let (q, _) = true_twin_quotient(g);
    q.order() == len + 1 && is_path(&q)
}

/// `K_{1,k}` for some `k >= 1`.
pub fn is_star(g: &Graph) -> bool {
    let n = g.order();
    n >= 2
        && g.size() == n - 1
        && (0..n).any(|c| g.degree(c) == n - 1)
        && (n == 2 || (0..n).filter(|&v| g.degree(v) == 1).count() == n - 1)
}

/// Independent edges plus isolated vertices.
pub fn is_matching_plus_isolated(g: &Graph) -> bool {
    (0..g.order()).all(|v| g.degree(v) <= 1)
}

pub fn is_forest(g: &Graph) -> bool {
    g.size() + g.component_count() == g.order()
}

pub fn is_tree(g: &Graph) -> bool {
    g.is_connected() && is_forest(g)
}

/// Vertices of every component, as graphs.
pub fn component_graphs(g: &Graph) -> Vec<Graph> {
    g.components().into_iter().map(|c| g.induced_subgraph(c).unwrap()).collect()
}

/// Each component is complete except exactly one, which is a solid path of
/// length 2 or 3.
pub fn is_two_term_shape(g: &Graph) -> bool {
    let mut special = 0;
    for c in component_graphs(g) {
        if c.is_complete() {
            continue;
        }
        if !(is_solid_path(&c, 2) || is_solid_path(&c, 3)) {
            return false;
        }
        special += 1;
    }
    special == 1
}
