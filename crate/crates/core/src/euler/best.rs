use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::digraph::EulerianDigraph;

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. Every intermediate division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { m[n - 1][n - 1].clone() };
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Number of Euler circuits by the BEST theorem: the number of spanning
/// arborescences towards vertex 0 times `Π (deg(v) - 1)!`. The arborescences
/// are counted as a principal minor of the out-degree Laplacian; loops do not
/// enter the Laplacian.
pub fn euler_circuit_count_best(d: &EulerianDigraph) -> Result<BigInt> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = d.order();
    let mut lap = vec![vec![BigInt::zero(); n]; n];
    for &(t, h) in d.arcs() {
        if t != h {
            lap[t][t] += 1;
            lap[t][h] -= 1;
        }
    }
    let minor: Vec<Vec<BigInt>> = lap.into_iter().skip(1).map(|row| row[1..].to_vec()).collect();
    let mut count = bareiss_determinant(minor);
    for v in 0..n {
        for k in 2..d.out_degree(v) {
            count *= k;
        }
    }
    Ok(count)
}
