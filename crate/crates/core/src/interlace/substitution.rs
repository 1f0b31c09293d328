//! Graph substitution, vertex duplication and multiplication, complete
//! multipartite graphs, and rotations.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::InterlaceSolver;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::poly::IntPolynomial;

/// Largest template order accepted by [`q_of_vertex_multiplication`]
/// (the formula sums over all `2^n` induced subgraphs).
pub const MULTIPLICATION_LIMIT: usize = 12;

/// What replaces one template vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Part {
    Clique(usize),
    Edgeless(usize),
    Graph(Graph),
}

impl Part {
    fn graph(&self) -> Result<Graph> {
        match self {
            Part::Clique(k) => Graph::complete(*k),
            Part::Edgeless(k) => Graph::edgeless(*k),
            Part::Graph(g) => Ok(g.clone()),
        }
    }
}

/// `G[G_1, ..., G_n]`: one part per template vertex. Empty parts are
/// allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionSpec {
    pub template: Graph,
    pub parts: Vec<Part>,
}

/// Builds `G[G_1, ..., G_n]`: the disjoint union of the parts, with every
/// vertex of `G_i` joined to every vertex of `G_j` whenever `ij` is a
/// template edge. Parts are laid out consecutively in template order.
pub fn substitute(spec: &SubstitutionSpec) -> Result<Graph> {
    let n = spec.template.order();
    if spec.parts.len() != n {
        return Err(Error::OutOfStatedRange(format!(
            "{} parts for a template of order {n}",
            spec.parts.len()
        )));
    }
    let parts = spec.parts.iter().map(Part::graph).collect::<Result<Vec<_>>>()?;
    let mut offsets = Vec::with_capacity(n + 1);
    let mut total = 0;
    for part in &parts {
        offsets.push(total);
        total += part.order();
    }
    offsets.push(total);
    let mut g = Graph::new(total)?;
    for (i, part) in parts.iter().enumerate() {
        for (u, v) in part.edges() {
            g.add_edge(offsets[i] + u, offsets[i] + v)?;
        }
    }
    for (i, j) in spec.template.edges() {
        for u in offsets[i]..offsets[i + 1] {
            for v in offsets[j]..offsets[j + 1] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Substituting cliques multiplies `q` by 2 per added vertex:
/// `q(G*) = q(G) 2^(|G*| - |G|)`. The caller certifies that every part is a
/// nonempty clique.
pub fn q_of_clique_substitution(template_q: &IntPolynomial, size_delta: usize) -> IntPolynomial {
    template_q.scale(&(BigInt::one() << size_delta))
}

/// `q(G ∘ a) = (1 + x) q(G) - x q(G - a)`, where `G ∘ a` adds a
/// non-adjacent twin of `a`.
pub fn q_of_vertex_duplication(q_g: &IntPolynomial, q_g_minus_a: &IntPolynomial) -> IntPolynomial {
    let one_plus_x = IntPolynomial::from_i64s(&[1, 1]);
    &(&one_plus_x * q_g) - &q_g_minus_a.shift_mul_x()
}

/// `x^from + ... + x^to` (zero when `from > to`).
fn power_range(from: usize, to: usize) -> IntPolynomial {
    if from > to {
        return IntPolynomial::zero();
    }
    let mut c = vec![BigInt::zero(); to + 1];
    for x in &mut c[from..] {
        *x = BigInt::one();
    }
    IntPolynomial::new(c)
}

/// `q(G[k_1, ..., k_n])`, where vertex `i` is replaced by `k_i` pairwise
/// non-adjacent twins, from the interlace polynomials of the induced
/// subgraphs of `G`:
///
/// `Σ_{l ∈ {0,1}^n} (-1)^(n + |l|) q(G[l]) Π_i (x^(1 - l_i) + ... + x^(k_i - 1))`.
pub fn q_of_vertex_multiplication(g: &Graph, multiplicities: &[usize]) -> Result<IntPolynomial> {
    let n = g.order();
    if multiplicities.len() != n {
        return Err(Error::OutOfStatedRange(format!(
            "{} multiplicities for a graph of order {n}",
            multiplicities.len()
        )));
    }
    if let Some(i) = multiplicities.iter().position(|&k| k == 0) {
        return Err(Error::OutOfStatedRange(format!("multiplicity 0 at vertex {i}")));
    }
    if n > MULTIPLICATION_LIMIT {
        return Err(Error::TooLarge {
            what: "template order for vertex multiplication",
            size: n,
            limit: MULTIPLICATION_LIMIT,
        });
    }
    let mut solver = InterlaceSolver::new();
    let mut total = IntPolynomial::zero();
    for subset in 0u64..1 << n {
        let mut factor = IntPolynomial::one();
        for (i, &k) in multiplicities.iter().enumerate() {
            let kept = subset >> i & 1;
            factor = &factor * &power_range(1 - kept as usize, k - 1);
            if factor.is_zero() {
                break;
            }
        }
        if factor.is_zero() {
            continue;
        }
        let term = &solver.polynomial(&g.induced(subset)) * &factor;
        if (n + subset.count_ones() as usize) % 2 == 0 {
            total = &total + &term;
        } else {
            total = &total - &term;
        }
    }
    Ok(total)
}

/// `q` of the complete multipartite graph with parts `k_1, ..., k_r`:
/// `(x/2) Π (2 + x + ... + x^(k_i-1)) + (-1)^r (1 - x/2) Π (x + ... + x^(k_i-1))`.
pub fn q_complete_multipartite(parts: &[usize]) -> Result<IntPolynomial> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::OutOfStatedRange(format!("parts {parts:?}")));
    }
    let two = IntPolynomial::constant(2);
    let mut first = IntPolynomial::x();
    let mut second = IntPolynomial::from_i64s(&[2, -1]);
    if parts.len() % 2 == 1 {
        second = -&second;
    }
    for &k in parts {
        first = &first * &(&two + &power_range(1, k - 1));
        second = &second * &power_range(1, k - 1);
    }
    // Twice the target; every coefficient is even.
    let doubled = &first + &second;
    doubled
        .divide_exact_by_integer(&BigInt::from(2))
        .ok_or_else(|| Error::NonzeroRemainder(format!("odd coefficient in {doubled}")))
}

/// The rotation partner `H` of `G` about `u, v`: toggle `uv`, then add a new
/// vertex `w` (index `|G|`) adjacent to `u` only. `q_G(x) <= q_H(x)` for all
/// `x >= 1`.
pub fn rotate(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if g.order() >= MAX_ORDER {
        return Err(Error::TooLarge {
            what: "graph order",
            size: g.order() + 1,
            limit: MAX_ORDER,
        });
    }
    let toggled = g.toggle_edge(u, v)?;
    let mut h = toggled.disjoint_union(&Graph::new(1)?)?;
    h.add_edge(u, g.order())?;
    Ok(h)
}
