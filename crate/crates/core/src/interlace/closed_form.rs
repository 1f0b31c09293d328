//! Closed forms for edgeless, complete, star, complete bipartite, path and
//! cycle graphs.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{binomial, IntPolynomial};

/// `1 + x + ... + x^(k-1)`.
fn geometric(k: usize) -> IntPolynomial {
    IntPolynomial::new(vec![BigInt::one(); k])
}

/// `q(E_n) = x^n`.
pub fn closed_form_edgeless(n: usize) -> IntPolynomial {
    IntPolynomial::monomial(1, n)
}

/// `q(K_n) = 2^(n-1) x`, `n >= 1`.
pub fn closed_form_complete(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::OutOfStatedRange("K_0".into()));
    }
    Ok(IntPolynomial::monomial(BigInt::one() << (n - 1), 1))
}

/// `q(K_{1,n}) = 2x + x^2 + ... + x^n`, `n >= 2`.
pub fn closed_form_star(n: usize) -> Result<IntPolynomial> {
    if n < 2 {
        return Err(Error::OutOfStatedRange(format!("K_{{1,{n}}}")));
    }
    let mut c = vec![BigInt::one(); n + 1];
    c[0] = BigInt::from(0);
    c[1] = BigInt::from(2);
    Ok(IntPolynomial::new(c))
}

/// `q(K_{m,n}) = (1 + ... + x^(m-1))(1 + ... + x^(n-1)) + x^m + x^n - 1`.
pub fn closed_form_complete_bipartite(m: usize, n: usize) -> Result<IntPolynomial> {
    if m == 0 || n == 0 {
        return Err(Error::OutOfStatedRange(format!("K_{{{m},{n}}}")));
    }
    let prod = &geometric(m) * &geometric(n);
    let extra = &(&IntPolynomial::monomial(1, m) + &IntPolynomial::monomial(1, n))
        - &IntPolynomial::one();
    Ok(&prod + &extra)
}

/// `q(P_n)` for the path with `n` edges and `n + 1` vertices:
/// `Σ_r [C(n-r, r) + C(n-r-1, r)] x^(r+1)`.
pub fn closed_form_path(n: usize) -> IntPolynomial {
    if n == 0 {
        return IntPolynomial::x();
    }
    let mut c = vec![BigInt::from(0); n / 2 + 2];
    for r in 0..=n / 2 {
        let a = binomial((n - r) as u64, r as u64);
        let b = if n > r {
            binomial((n - r - 1) as u64, r as u64)
        } else {
            BigInt::from(0)
        };
        c[r + 1] = a + b;
    }
    IntPolynomial::new(c)
}

/// `q(C_n)`, `n >= 3`.
///
/// With `y = sqrt(1 + 4x)`, the terms `((1 ± y)/2)^n` are the roots `a, b`
/// of `t^2 = t + x`, so their power sums obey `s_k = s_(k-1) + x s_(k-2)`
/// with `s_0 = 2`, `s_1 = 1`. The remaining corrections reduce to
/// `x^2 - 2x - 1` for even `n` and `x - 1` for odd `n`.
pub fn closed_form_cycle(n: usize) -> Result<IntPolynomial> {
    if n < 3 {
        return Err(Error::OutOfStatedRange(format!("C_{n}")));
    }
    let x = IntPolynomial::x();
    let mut prev = IntPolynomial::constant(2);
    let mut cur = IntPolynomial::one();
    for _ in 2..=n {
        let next = &cur + &(&x * &prev);
        prev = cur;
        cur = next;
    }
    let correction = if n % 2 == 0 {
        IntPolynomial::from_i64s(&[-1, -2, 1])
    } else {
        IntPolynomial::from_i64s(&[-1, 1])
    };
    Ok(&cur + &correction)
}
