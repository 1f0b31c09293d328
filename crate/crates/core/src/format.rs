//! Text formats: edge lists and graph6.
//!
//! Edge list: a line `n m`, then `m` lines `u v` with 0-based vertex
//! indices. Blank lines and `#` comments are ignored.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap().trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let nums: Vec<&str> = line.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(Error::parse(line_no, format!("expected two integers, got {line:?}")));
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::parse(line_no, format!("not a nonnegative integer: {s:?}")))
    };
    Ok((num(nums[0])?, num(nums[1])?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header `n m`"))?;
    let (n, m) = parse_pair(line_no, header)?;
    if n > MAX_ORDER {
        return Err(Error::TooLarge {
            what: "graph order",
            size: n,
            limit: MAX_ORDER,
        });
    }
    let mut g = Graph::new(n)?;
    let mut count = 0;
    for (line_no, line) in lines {
        let (u, v) = parse_pair(line_no, line)?;
        if u >= n || v >= n {
            return Err(Error::parse(line_no, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(Error::parse(line_no, format!("loop at {u}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(line_no, format!("repeated edge {u} {v}")));
        }
        g.add_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(Error::parse(line_no, format!("header announces {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// graph6 encoding (without header or newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend([126, 63, (n >> 6) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses one graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s).as_bytes();
    let bad = |msg: String| Error::parse(1, msg);
    if let Some(&c) = s.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(bad(format!("invalid graph6 byte {c:#04x}")));
    }
    let (n, body) = match s {
        [] => return Err(bad("empty graph6 string".into())),
        [126, 126, ..] => return Err(bad("order exceeds 64".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated order".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &c| acc << 6 | (c - 63) as usize);
            (n, &rest[3..])
        }
        [c, rest @ ..] => ((c - 63) as usize, rest),
    };
    if n > MAX_ORDER {
        return Err(Error::TooLarge {
            what: "graph order",
            size: n,
            limit: MAX_ORDER,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(bad(format!(
            "expected {} data bytes for order {n}, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..body.len() * 6).any(bit) {
        return Err(bad("nonzero padding bits".into()));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}
