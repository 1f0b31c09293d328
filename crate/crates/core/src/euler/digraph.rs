use std::ops::Deref;

use crate::error::{Error, Result};

use super::word::DoubleOccurrenceWord;

/// A balanced directed multigraph: every vertex has equal in- and
/// out-degree. Arcs are identified by their index, so parallel arcs and loops
/// are distinguishable. `free_loops` counts closed circuits without vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianDigraph {
    order: usize,
    arcs: Vec<(usize, usize)>,
    free_loops: usize,
    ins: Vec<Vec<usize>>,
    outs: Vec<Vec<usize>>,
}

/// Arc multiset of a digraph, ignoring arc ids. Two digraphs with equal keys
/// are the same labeled digraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigraphKey {
    order: usize,
    free_loops: usize,
    arcs: Vec<(usize, usize)>,
}

impl EulerianDigraph {
    pub fn new(order: usize, arcs: Vec<(usize, usize)>, free_loops: usize) -> Result<Self> {
        let mut ins = vec![Vec::new(); order];
        let mut outs = vec![Vec::new(); order];
        for (id, &(t, h)) in arcs.iter().enumerate() {
            for v in [t, h] {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
            }
            outs[t].push(id);
            ins[h].push(id);
        }
        if let Some(v) = (0..order).find(|&v| ins[v].len() != outs[v].len()) {
            return Err(Error::Unbalanced(format!(
                "vertex {v} has in-degree {} and out-degree {}",
                ins[v].len(),
                outs[v].len()
            )));
        }
        Ok(EulerianDigraph {
            order,
            arcs,
            free_loops,
            ins,
            outs,
        })
    }

    /// `m` loops on a single vertex.
    pub fn loops(m: usize) -> Self {
        Self::new(1, vec![(0, 0); m], 0).expect("loops are balanced")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn tail(&self, arc: usize) -> usize {
        self.arcs[arc].0
    }

    pub fn head(&self, arc: usize) -> usize {
        self.arcs[arc].1
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// In-arcs of `v`, by increasing id.
    pub fn in_arcs(&self, v: usize) -> &[usize] {
        &self.ins[v]
    }

    /// Out-arcs of `v`, by increasing id.
    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.outs[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.outs[v].len()
    }

    pub fn is_two_in_two_out(&self) -> bool {
        self.outs.iter().all(|o| o.len() == 2)
    }

    /// Connected in the sense needed for Euler circuits: at least one
    /// vertex, every vertex carries an arc, the arcs are weakly connected,
    /// and there are no free loops.
    pub fn is_connected(&self) -> bool {
        if self.order == 0 || self.free_loops > 0 || self.outs.iter().any(Vec::is_empty) {
            return false;
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &a in self.outs[v].iter().chain(&self.ins[v]) {
                let (t, h) = self.arcs[a];
                for u in [t, h] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn key(&self) -> DigraphKey {
        let mut arcs = self.arcs.clone();
        arcs.sort_unstable();
        DigraphKey {
            order: self.order,
            free_loops: self.free_loops,
            arcs,
        }
    }

    /// Adds `k` free loops.
    pub fn with_free_loops(mut self, k: usize) -> Self {
        self.free_loops += k;
        self
    }

    /// Resolves vertex `v`: in-arc `in_arcs(v)[i]` is joined to out-arc
    /// `out_arcs(v)[transition[i]]`, then `v` is removed. Chains through
    /// loops at `v` are followed; cycles consisting only of loops at `v`
    /// become free loops. Remaining vertices above `v` shift down by one;
    /// untouched arcs keep their relative order and come first.
    pub fn resolve_vertex(&self, v: usize, transition: &[usize]) -> Result<EulerianDigraph> {
        if v >= self.order {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        let ins = &self.ins[v];
        let outs = &self.outs[v];
        let mut used = vec![false; outs.len()];
        if transition.len() != ins.len()
            || transition.iter().any(|&j| j >= outs.len() || std::mem::replace(&mut used[j], true))
        {
            return Err(Error::OutOfStatedRange(format!(
                "transition {transition:?} at a vertex of degree {}",
                ins.len()
            )));
        }
        // Successor of each in-arc at v.
        let next = |arc: usize| -> usize {
            let i = ins.iter().position(|&e| e == arc).unwrap();
            outs[transition[i]]
        };
        let relabel = |u: usize| if u > v { u - 1 } else { u };
        let mut arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .filter(|&&(t, h)| t != v && h != v)
            .map(|&(t, h)| (relabel(t), relabel(h)))
            .collect();
        let mut visited_loop = vec![false; self.arcs.len()];
        for &e in ins {
            if self.tail(e) == v {
                continue;
            }
            let mut f = next(e);
            while self.head(f) == v {
                visited_loop[f] = true;
                f = next(f);
            }
            arcs.push((relabel(self.tail(e)), relabel(self.head(f))));
        }
        let mut free = self.free_loops;
        for &e in ins {
            if self.tail(e) != v || visited_loop[e] {
                continue;
            }
            free += 1;
            let mut f = e;
            while !visited_loop[f] {
                visited_loop[f] = true;
                f = next(f);
            }
        }
        EulerianDigraph::new(self.order - 1, arcs, free)
    }
}

/// An [`EulerianDigraph`] in which every vertex has in-degree 2 and
/// out-degree 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoInTwoOutDigraph(EulerianDigraph);

impl TwoInTwoOutDigraph {
    pub fn new(order: usize, arcs: Vec<(usize, usize)>, free_loops: usize) -> Result<Self> {
        Self::try_from(EulerianDigraph::new(order, arcs, free_loops)?)
    }

    pub fn into_inner(self) -> EulerianDigraph {
        self.0
    }
}

impl TryFrom<EulerianDigraph> for TwoInTwoOutDigraph {
    type Error = Error;

    fn try_from(d: EulerianDigraph) -> Result<Self> {
        if let Some(v) = (0..d.order).find(|&v| d.outs[v].len() != 2) {
            return Err(Error::Unbalanced(format!(
                "vertex {v} has degree {} instead of 2",
                d.outs[v].len()
            )));
        }
        Ok(TwoInTwoOutDigraph(d))
    }
}

impl Deref for TwoInTwoOutDigraph {
    type Target = EulerianDigraph;

    fn deref(&self) -> &EulerianDigraph {
        &self.0
    }
}

/// The digraph traced by a word: arc `i` runs from `w[i]` to `w[i + 1]`
/// (cyclically).
pub fn digraph_from_word(w: &DoubleOccurrenceWord) -> TwoInTwoOutDigraph {
    let s = w.symbols();
    let arcs = (0..s.len()).map(|i| (s[i], s[(i + 1) % s.len()])).collect();
    TwoInTwoOutDigraph::new(w.symbol_count(), arcs, 0).expect("words trace 2-in/2-out digraphs")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> DoubleOccurrenceWord {
        DoubleOccurrenceWord::parse(s).unwrap().0
    }

    #[test]
    fn digraph_examples() {
        let d = digraph_from_word(&word("1 2 1 2"));
        assert_eq!(d.arcs(), &[(0, 1), (1, 0), (0, 1), (1, 0)]);
        assert!(d.is_connected());
        let d = digraph_from_word(&word("1 1"));
        assert_eq!(d.arcs(), &[(0, 0), (0, 0)]);
        assert_eq!(d.in_arcs(0), &[0, 1]);
        let a = digraph_from_word(&word("1 1 2 2 3 3"));
        let b = digraph_from_word(&word("1 1 2 3 3 2"));
        // Loop counts per vertex differ: (1,1,1) against (1,0,1).
        let loops = |d: &EulerianDigraph| d.arcs().iter().filter(|(t, h)| t == h).count();
        assert_ne!(loops(&a), loops(&b));
    }

    #[test]
    fn same_digraph_different_words() {
        let a = digraph_from_word(&word("1 2 3 1 3 4 2 4"));
        let b = digraph_from_word(&word("1 2 4 1 3 4 2 3"));
        assert_eq!(a.key(), b.key());
    }

    #[test]
    fn validation() {
        assert!(EulerianDigraph::new(2, vec![(0, 1)], 0).is_err());
        assert!(EulerianDigraph::new(1, vec![(0, 1)], 0).is_err());
        assert!(TwoInTwoOutDigraph::try_from(EulerianDigraph::loops(3)).is_err());
        assert!(TwoInTwoOutDigraph::try_from(EulerianDigraph::loops(2)).is_ok());
        let e = EulerianDigraph::new(2, vec![], 0).unwrap();
        assert!(!e.is_connected());
        assert!(!EulerianDigraph::loops(1).with_free_loops(1).is_connected());
    }

    #[test]
    fn resolving_loops() {
        let d = EulerianDigraph::loops(3);
        let r = d.resolve_vertex(0, &[0, 1, 2]).unwrap();
        assert_eq!((r.order(), r.arc_count(), r.free_loops()), (0, 0, 3));
        let r = d.resolve_vertex(0, &[1, 2, 0]).unwrap();
        assert_eq!(r.free_loops(), 1);
        assert!(d.resolve_vertex(0, &[0, 0, 1]).is_err());
        assert!(d.resolve_vertex(1, &[0, 1, 2]).is_err());
    }

    #[test]
    fn resolving_through_a_loop() {
        // 0 -> 1 -> 1 (loop) -> 0, plus a loop at 0.
        let d = EulerianDigraph::new(2, vec![(0, 1), (1, 1), (1, 0), (0, 0)], 0).unwrap();
        // in_arcs(1) = [0, 1], out_arcs(1) = [1, 2]
        let r = d.resolve_vertex(1, &[0, 1]).unwrap();
        assert_eq!(r.arcs(), &[(0, 0), (0, 0)]);
        assert_eq!(r.free_loops(), 0);
        let r = d.resolve_vertex(1, &[1, 0]).unwrap();
        assert_eq!(r.arcs(), &[(0, 0), (0, 0)]);
        assert_eq!(r.free_loops(), 1);
    }
}
