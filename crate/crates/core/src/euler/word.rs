use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// A cyclic word in which each of the symbols `0..n` appears exactly twice.
///
/// Words are stored in a canonical rotation: of the two rotations that start
/// with symbol 0, the lexicographically smaller one. Reflections are not
/// identified.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DoubleOccurrenceWord {
    symbols: Vec<usize>,
}

fn canonicalize(symbols: &mut [usize]) {
    let len = symbols.len();
    let mut starts = symbols.iter().enumerate().filter(|(_, &s)| s == 0).map(|(i, _)| i);
    let (i, j) = (starts.next().unwrap(), starts.next().unwrap());
    let better_j = (0..len)
        .map(|k| (symbols[(i + k) % len], symbols[(j + k) % len]))
        .find(|(x, y)| x != y)
        .is_some_and(|(x, y)| y < x);
    symbols.rotate_left(if better_j { j } else { i });
}

impl DoubleOccurrenceWord {
    /// Builds a word from symbol ids; every id in `0..n` must appear exactly
    /// twice, for some `n >= 1`.
    pub fn new(mut symbols: Vec<usize>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::MalformedWord("empty word".into()));
        }
        if symbols.len() % 2 != 0 {
            return Err(Error::MalformedWord(format!("odd length {}", symbols.len())));
        }
        let n = symbols.len() / 2;
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                what: "word symbol count",
                size: n,
                limit: MAX_ORDER,
            });
        }
        let mut seen = vec![0u8; n];
        for &s in &symbols {
            if s >= n {
                return Err(Error::MalformedWord(format!(
                    "symbol {s} out of range for {n} symbols"
                )));
            }
            seen[s] += 1;
        }
        if let Some(s) = seen.iter().position(|&c| c != 2) {
            return Err(Error::MalformedWord(format!(
                "symbol {s} appears {} times",
                seen[s]
            )));
        }
        canonicalize(&mut symbols);
        Ok(DoubleOccurrenceWord { symbols })
    }

    /// Parses whitespace-separated tokens. If every token is an integer the
    /// ids follow numeric order; otherwise tokens are numbered in order of
    /// first appearance. The returned labels give the token of each id.
    pub fn parse(text: &str) -> Result<(Self, Vec<String>)> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let mut labels: Vec<&str> = Vec::new();
        for &tok in &tokens {
            if !labels.contains(&tok) {
                labels.push(tok);
            }
        }
        let numeric: Option<Vec<u64>> = labels.iter().map(|t| t.parse().ok()).collect();
        if let Some(values) = numeric {
            let mut order: Vec<usize> = (0..labels.len()).collect();
            order.sort_by_key(|&i| values[i]);
            labels = order.iter().map(|&i| labels[i]).collect();
        }
        let ids: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let symbols: Vec<usize> = tokens.iter().map(|t| ids[t]).collect();
        let labels: Vec<String> = labels.into_iter().map(String::from).collect();
        let mut counts = vec![0usize; labels.len()];
        for &s in &symbols {
            counts[s] += 1;
        }
        if let Some(s) = counts.iter().position(|&c| c != 2) {
            return Err(Error::MalformedWord(format!(
                "token {:?} appears {} times",
                labels[s], counts[s]
            )));
        }
        Ok((Self::new(symbols)?, labels))
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    /// Number of distinct symbols (the order of the digraph and interlace
    /// graph).
    pub fn symbol_count(&self) -> usize {
        self.symbols.len() / 2
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Positions of the two occurrences of every symbol, in increasing order.
    pub fn occurrences(&self) -> Vec<(usize, usize)> {
        let mut occ = vec![(usize::MAX, usize::MAX); self.symbol_count()];
        for (i, &s) in self.symbols.iter().enumerate() {
            if occ[s].0 == usize::MAX {
                occ[s].0 = i;
            } else {
                occ[s].1 = i;
            }
        }
        occ
    }

    fn check_symbol(&self, s: usize) -> Result<()> {
        if s >= self.symbol_count() {
            return Err(Error::VertexOutOfRange {
                vertex: s,
                order: self.symbol_count(),
            });
        }
        Ok(())
    }

    /// Whether the occurrences of `a` and `b` alternate: `a .. b .. a .. b`.
    pub fn is_interlaced(&self, a: usize, b: usize) -> Result<bool> {
        self.check_symbol(a)?;
        self.check_symbol(b)?;
        if a == b {
            return Err(Error::RepeatedVertex(a));
        }
        let occ = self.occurrences();
        Ok(crosses(occ[a], occ[b]))
    }

    /// Renders the word using the given labels for the symbol ids.
    pub fn render(&self, labels: &[String]) -> String {
        let toks: Vec<&str> = self.symbols.iter().map(|&s| labels[s].as_str()).collect();
        toks.join(" ")
    }
}

impl fmt::Display for DoubleOccurrenceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[inline]
fn crosses((i1, i2): (usize, usize), (j1, j2): (usize, usize)) -> bool {
    (i1 < j1 && j1 < i2) != (i1 < j2 && j2 < i2)
}

/// The interlace graph of a word: symbols `a, b` are adjacent when they
/// alternate around the cyclic word.
pub fn interlace_graph(w: &DoubleOccurrenceWord) -> Graph {
    let occ = w.occurrences();
    let n = occ.len();
    let mut g = Graph::new(n).expect("symbol count bounded on construction");
    for a in 0..n {
        for b in a + 1..n {
            if crosses(occ[a], occ[b]) {
                g.add_edge(a, b).expect("distinct in-range vertices");
            }
        }
    }
    g
}

/// Transposition on an interlaced pair: writing the word as
/// `a X b Y a Z b W`, the result is `a Z b Y a X b W`.
pub fn transpose(w: &DoubleOccurrenceWord, a: usize, b: usize) -> Result<DoubleOccurrenceWord> {
    if !w.is_interlaced(a, b)? {
        return Err(Error::NotInterlaced { a, b });
    }
    let (p1, _) = w.occurrences()[a];
    let mut s = w.symbols.clone();
    s.rotate_left(p1);
    let q1 = s.iter().position(|&x| x == b).unwrap();
    let p2 = q1 + s[q1..].iter().position(|&x| x == a).unwrap();
    let q2 = p2 + s[p2..].iter().position(|&x| x == b).unwrap();
    let mut out = Vec::with_capacity(s.len());
    out.push(a);
    out.extend_from_slice(&s[p2 + 1..q2]);
    out.extend_from_slice(&s[q1..=p2]);
    out.extend_from_slice(&s[1..q1]);
    out.extend_from_slice(&s[q2..]);
    canonicalize(&mut out);
    Ok(DoubleOccurrenceWord { symbols: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> DoubleOccurrenceWord {
        DoubleOccurrenceWord::parse(s).unwrap().0
    }

    #[test]
    fn canonical_rotation() {
        let w = DoubleOccurrenceWord::new(vec![1, 0, 2, 2, 0, 1]).unwrap();
        assert_eq!(w.symbols(), &[0, 1, 1, 0, 2, 2]);
        let w = DoubleOccurrenceWord::new(vec![0, 1, 0, 1]).unwrap();
        assert_eq!(w.symbols(), &[0, 1, 0, 1]);
        let a = DoubleOccurrenceWord::new(vec![2, 0, 1, 0, 1, 2]).unwrap();
        let b = DoubleOccurrenceWord::new(vec![0, 1, 2, 2, 0, 1]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn malformed_words() {
        assert!(DoubleOccurrenceWord::new(vec![]).is_err());
        assert!(DoubleOccurrenceWord::new(vec![0, 0, 1]).is_err());
        assert!(DoubleOccurrenceWord::new(vec![0, 0, 0, 1]).is_err());
        assert!(DoubleOccurrenceWord::new(vec![0, 2, 0, 2]).is_err());
        assert!(DoubleOccurrenceWord::parse("a b a").is_err());
        assert!(DoubleOccurrenceWord::parse("").is_err());
        assert!(DoubleOccurrenceWord::parse("x x x x").is_err());
    }

    #[test]
    fn parse_labels() {
        let (w, labels) = DoubleOccurrenceWord::parse("b a\tb  a\n").unwrap();
        assert_eq!(labels, vec!["b", "a"]);
        assert_eq!(w.symbols(), &[0, 1, 0, 1]);
        assert_eq!(w.render(&labels), "b a b a");
        assert_eq!(w.to_string(), "0 1 0 1");
    }

    #[test]
    fn interlace_graph_examples() {
        assert_eq!(interlace_graph(&word("1 1 2 2 3 3")), Graph::new(3).unwrap());
        assert_eq!(interlace_graph(&word("1 2 1 2")), Graph::complete(2).unwrap());
        let path = interlace_graph(&word("1 2 3 1 3 4 2 4"));
        assert_eq!(path, Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3)]).unwrap());
        let cycle = interlace_graph(&word("1 2 4 1 3 4 2 3"));
        assert_eq!(
            cycle,
            Graph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (2, 3)]).unwrap()
        );
    }

    #[test]
    fn transpose_example() {
        // a=0, x=1, b=2, z=3
        let w = word("a x b x a z b z");
        let t = transpose(&w, 0, 2).unwrap();
        assert_eq!(t, DoubleOccurrenceWord::new(vec![0, 3, 2, 1, 0, 1, 2, 3]).unwrap());
        assert_eq!(transpose(&t, 0, 2).unwrap(), w);
        assert_eq!(transpose(&w, 2, 0).unwrap(), t);
        assert_eq!(
            transpose(&word("1 1 2 2"), 0, 1),
            Err(Error::NotInterlaced { a: 0, b: 1 })
        );
        assert!(transpose(&w, 0, 0).is_err());
        assert!(transpose(&w, 0, 9).is_err());
    }

    #[test]
    fn transpose_other_delimitation_agrees() {
        // Swapping the two b->a runs instead of the a->b runs gives the same
        // cyclic word: a X b Y a Z b W -> a X b W a Z b Y.
        for w in crate::verify::enumerate::all_words(5) {
            let occ = w.occurrences();
            for a in 0..5 {
                for b in 0..5 {
                    if a == b || !crosses(occ[a], occ[b]) {
                        continue;
                    }
                    let mut s = w.symbols().to_vec();
                    s.rotate_left(occ[a].0);
                    let q1 = s.iter().position(|&x| x == b).unwrap();
                    let p2 = q1 + s[q1..].iter().position(|&x| x == a).unwrap();
                    let q2 = p2 + s[p2..].iter().position(|&x| x == b).unwrap();
                    let mut alt = s[..=q1].to_vec();
                    alt.extend_from_slice(&s[q2 + 1..]);
                    alt.extend_from_slice(&s[p2..=q2]);
                    alt.extend_from_slice(&s[q1 + 1..p2]);
                    let alt = DoubleOccurrenceWord::new(alt).unwrap();
                    assert_eq!(alt, transpose(&w, a, b).unwrap(), "{w} {a} {b}");
                }
            }
        }
    }
}
