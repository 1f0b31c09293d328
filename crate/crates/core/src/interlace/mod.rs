//! The interlace polynomial `q(G)`, computed by pivot reduction:
//! `q(G) = q(G - a) + q(G^{ab} - b)` for any edge `ab`, and `q(E_n) = x^n`.
//!
//! Every coefficient of `q(G)` is nonnegative and `q(G; 2) = 2^n`, so for
//! order at most 64 each coefficient is below `2^64`. The recursion
//! therefore runs on `u64` coefficient vectors (with checked adds) and only
//! converts to [`IntPolynomial`] at the boundary.

mod closed_form;
mod substitution;

use num_bigint::BigInt;
use rustc_hash::FxHashMap;
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKey, MAX_ORDER};
use crate::poly::IntPolynomial;

pub use closed_form::{
    closed_form_complete, closed_form_complete_bipartite, closed_form_cycle,
    closed_form_edgeless, closed_form_path, closed_form_star,
};
pub use substitution::{
    q_complete_multipartite, q_of_clique_substitution, q_of_vertex_duplication,
    q_of_vertex_multiplication, rotate, substitute, Part, SubstitutionSpec, MULTIPLICATION_LIMIT,
};

pub(crate) type Coeffs = SmallVec<[u64; 8]>;

fn add_into(acc: &mut Coeffs, other: &Coeffs) {
    if acc.len() < other.len() {
        acc.resize(other.len(), 0);
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a = a.checked_add(*b).expect("interlace coefficient overflow");
    }
}

pub(crate) fn mul(a: &Coeffs, b: &Coeffs) -> Coeffs {
    let mut out: Coeffs = smallvec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let t = x.checked_mul(y).expect("interlace coefficient overflow");
            out[i + j] = out[i + j].checked_add(t).expect("interlace coefficient overflow");
        }
    }
    out
}

fn monomial(k: usize) -> Coeffs {
    let mut c: Coeffs = smallvec![0; k + 1];
    c[k] = 1;
    c
}

fn shift(c: Coeffs, k: usize) -> Coeffs {
    if k == 0 {
        return c;
    }
    let mut out: Coeffs = smallvec![0; k];
    out.extend(c);
    out
}

pub(crate) fn to_poly(c: &Coeffs) -> IntPolynomial {
    IntPolynomial::from_u64s(c)
}

/// Memoized interlace polynomials keyed on the exact labeled encoding of a
/// graph. No isomorphism reduction is attempted.
#[derive(Default)]
pub struct MemoCache {
    map: FxHashMap<GraphKey, Coeffs>,
    hits: u64,
    misses: u64,
}

impl MemoCache {
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn misses(&self) -> u64 {
        self.misses
    }

    pub fn clear(&mut self) {
        self.map.clear();
    }
}

/// Which reductions the recursion applies before pivoting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    /// Remove isolated vertices and multiply by `x` per vertex.
    pub strip_isolated: bool,
    /// Recurse per connected component and multiply.
    pub split_components: bool,
    /// Only graphs of at most this order are cached; 0 disables the cache.
    pub memo_max_order: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            strip_isolated: true,
            split_components: true,
            memo_max_order: MAX_ORDER,
        }
    }
}

impl SolverOptions {
    /// Bare pivot recursion: no fast paths, no cache.
    pub fn plain() -> Self {
        SolverOptions {
            strip_isolated: false,
            split_components: false,
            memo_max_order: 0,
        }
    }
}

/// Pivot-reduction evaluator with its own memo cache.
///
/// A solver is meant to be owned by one worker; run independent solvers
/// for parallel work.
#[derive(Default)]
pub struct InterlaceSolver {
    memo: MemoCache,
    options: SolverOptions,
}

/// The edge the recursion pivots on: first endpoint of minimum positive
/// degree, ties broken by smallest index, then its smallest neighbor.
pub fn pivot_edge(g: &Graph) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for v in 0..g.order() {
        let d = g.degree(v);
        if d > 0 && best.map_or(true, |(_, bd)| d < bd) {
            best = Some((v, d));
            if d == 1 {
                break;
            }
        }
    }
    best.map(|(a, _)| (a, g.neighbors(a).trailing_zeros() as usize))
}

impl InterlaceSolver {
    pub fn new() -> Self {
        InterlaceSolver::default()
    }

    pub fn with_options(options: SolverOptions) -> Self {
        InterlaceSolver {
            memo: MemoCache::default(),
            options,
        }
    }

    pub fn options(&self) -> SolverOptions {
        self.options
    }

    pub fn memo(&self) -> &MemoCache {
        &self.memo
    }

    pub fn polynomial(&mut self, g: &Graph) -> IntPolynomial {
        to_poly(&self.coeffs(g))
    }

    /// `q(G - a) + q(G^{ab} - b)` for the oriented edge `ab`.
    pub fn expand_on(&mut self, g: &Graph, a: usize, b: usize) -> Result<IntPolynomial> {
        let pivoted = g.pivot(a, b)?;
        let mut c = self.coeffs(&g.without(a));
        add_into(&mut c, &self.coeffs(&pivoted.without(b)));
        Ok(to_poly(&c))
    }

    pub(crate) fn expand_coeffs(&mut self, g: &Graph, a: usize, b: usize) -> Coeffs {
        debug_assert!(g.has_edge(a, b));
        let pivoted = g.pivot_unchecked(a, b);
        let mut c = self.coeffs(&g.without(a));
        add_into(&mut c, &self.coeffs(&pivoted.without(b)));
        c
    }

    pub(crate) fn coeffs(&mut self, g: &Graph) -> Coeffs {
        let n = g.order();
        if n == 0 {
            return smallvec![1];
        }
        if self.options.strip_isolated {
            let iso = g.isolated_vertices();
            if iso != 0 {
                let k = iso.count_ones() as usize;
                if k == n {
                    return monomial(n);
                }
                let rest = g.induced(g.vertices() & !iso);
                return shift(self.coeffs(&rest), k);
            }
        }
        let Some((a, b)) = pivot_edge(g) else {
            return monomial(n);
        };
        if self.options.split_components {
            let first = g.reach(1);
            if first != g.vertices() {
                let mut acc = self.coeffs(&g.induced(first));
                let mut rest = g.vertices() & !first;
                while rest != 0 {
                    let comp = g.reach(rest & rest.wrapping_neg());
                    acc = mul(&acc, &self.coeffs(&g.induced(comp)));
                    rest &= !comp;
                }
                return acc;
            }
        }
        let cached = n <= self.options.memo_max_order;
        let key = if cached {
            let key = g.key();
            if let Some(c) = self.memo.map.get(&key) {
                self.memo.hits += 1;
                return c.clone();
            }
            self.memo.misses += 1;
            Some(key)
        } else {
            None
        };
        let result = self.expand_coeffs(g, a, b);
        if let Some(key) = key {
            self.memo.map.insert(key, result.clone());
        }
        result
    }
}

/// `q(G)` with a fresh solver.
pub fn interlace_polynomial(g: &Graph) -> IntPolynomial {
    InterlaceSolver::new().polynomial(g)
}

/// `q(G; x0)`.
pub fn interlace_at(g: &Graph, x0: &BigInt) -> BigInt {
    interlace_polynomial(g).evaluate(x0)
}

/// All graphs reachable from `g` by pivoting on edges (labeled graphs),
/// in breadth-first discovery order.
pub fn pivot_orbit(g: &Graph, limit: usize) -> Result<Vec<Graph>> {
    let mut seen = rustc_hash::FxHashSet::default();
    let mut order = vec![g.clone()];
    seen.insert(g.clone());
    let mut i = 0;
    while i < order.len() {
        let current = order[i].clone();
        for (a, b) in current.edges() {
            let next = current.pivot_unchecked(a, b);
            if seen.insert(next.clone()) {
                if order.len() == limit {
                    return Err(Error::TooLarge {
                        what: "pivot orbit",
                        size: limit + 1,
                        limit,
                    });
                }
                order.push(next);
            }
        }
        i += 1;
    }
    Ok(order)
}
