//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `x^i`. Never has trailing zeros, so
/// the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Shape of a nonnegative coefficient sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnimodalityReport {
    /// Non-decreasing then non-increasing over the support, with no
    /// internal zeros.
    pub is_unimodal: bool,
    /// Zero coefficients strictly between the first and last nonzero ones.
    pub internal_zero_count: usize,
    /// Index of the first maximal coefficient; `None` for the zero
    /// polynomial.
    pub mode_index: Option<usize>,
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPolynomial::new(vec![c.into()])
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c.into());
        IntPolynomial::new(coeffs)
    }

    /// `x`.
    pub fn x() -> Self {
        IntPolynomial::monomial(1, 1)
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of the lowest nonzero term.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `x * p`.
    pub fn shift_mul_x(&self) -> Self {
        self.shift_mul_x_pow(1)
    }

    /// `x^k * p`.
    pub fn shift_mul_x_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(IntPolynomial::one(), |acc, _| &acc * self)
    }

    /// Horner evaluation at an integer.
    pub fn evaluate(&self, x0: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x0 + c)
    }

    pub fn evaluate_i64(&self, x0: i64) -> BigInt {
        self.evaluate(&BigInt::from(x0))
    }

    /// `p(x + shift)` by repeated synthetic division (Taylor shift).
    pub fn taylor_shift(&self, shift: &BigInt) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * shift;
                c[j] += t;
            }
        }
        IntPolynomial::new(c)
    }

    /// `p(1 + x)`.
    pub fn compose_shift(&self) -> Self {
        self.taylor_shift(&BigInt::one())
    }

    /// `p(x - 1)`, the inverse of [`IntPolynomial::compose_shift`].
    pub fn compose_shift_inverse(&self) -> Self {
        self.taylor_shift(&-BigInt::one())
    }

    /// Exact quotient `p / (x - 1)`.
    pub fn divide_exact_by_x_minus_1(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        // Synthetic division by the root 1, from the top coefficient down.
        let n = self.coeffs.len();
        let mut quotient = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (1..n).rev() {
            carry += &self.coeffs[i];
            quotient[i - 1] = carry.clone();
        }
        let remainder = carry + &self.coeffs[0];
        if !remainder.is_zero() {
            return Err(Error::NonzeroRemainder(remainder.to_string()));
        }
        Ok(IntPolynomial::new(quotient))
    }

    /// Exact division of every coefficient by `d`; `None` if some
    /// coefficient is not a multiple of `d`.
    pub fn divide_exact_by_integer(&self, d: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(IntPolynomial::new(out))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficient shape analysis; nonnegative coefficients required.
    pub fn unimodality_report(&self) -> Result<UnimodalityReport> {
        unimodality_report(&self.coeffs)
    }

    /// First index `k` where `a_k^2 < a_{k-1} a_{k+1}`, scanning the
    /// support; `None` if the coefficients are log-concave.
    pub fn log_concavity_violation(&self) -> Option<usize> {
        let c = &self.coeffs;
        (1..c.len().saturating_sub(1)).find(|&k| &c[k] * &c[k] < &c[k - 1] * &c[k + 1])
    }
}

/// Unimodality analysis over a coefficient slice.
pub fn unimodality_report(coeffs: &[BigInt]) -> Result<UnimodalityReport> {
    if let Some(k) = coeffs.iter().position(Signed::is_negative) {
        return Err(Error::NegativeCoefficient(k));
    }
    let first = coeffs.iter().position(|c| !c.is_zero());
    let last = coeffs.iter().rposition(|c| !c.is_zero());
    let (Some(first), Some(last)) = (first, last) else {
        return Ok(UnimodalityReport {
            is_unimodal: true,
            internal_zero_count: 0,
            mode_index: None,
        });
    };
    let support = &coeffs[first..=last];
    let internal_zero_count = support.iter().filter(|c| c.is_zero()).count();
    let mut mode = 0;
    for (i, c) in support.iter().enumerate() {
        if c > &support[mode] {
            mode = i;
        }
    }
    let rising = support[..=mode].windows(2).all(|w| w[0] <= w[1]);
    let falling = support[mode..].windows(2).all(|w| w[0] >= w[1]);
    Ok(UnimodalityReport {
        is_unimodal: rising && falling && internal_zero_count == 0,
        internal_zero_count,
        mode_index: Some(first + mode),
    })
}

/// `r_k = Σ_l a_l C(l, k-1)`: circuit-partition coefficients from
/// interlace coefficients (the coefficients of `x q(1 + x)`).
pub fn coefficient_transform_r_from_a(a: &[BigInt]) -> Vec<BigInt> {
    let mut r = vec![BigInt::zero(); a.len() + 1];
    for (l, al) in a.iter().enumerate() {
        if al.is_zero() {
            continue;
        }
        for k in 1..=l + 1 {
            r[k] += al * binomial(l as u64, (k - 1) as u64);
        }
    }
    trim(r)
}

/// `a_k = Σ_l r_{l+1} (-1)^{l-k} C(l, k)`: the inverse of
/// [`coefficient_transform_r_from_a`].
pub fn coefficient_transform_a_from_r(r: &[BigInt]) -> Vec<BigInt> {
    let len = r.len().saturating_sub(1);
    let mut a = vec![BigInt::zero(); len];
    for l in 0..len {
        let rl = &r[l + 1];
        if rl.is_zero() {
            continue;
        }
        for (k, ak) in a.iter_mut().enumerate().take(l + 1) {
            let term = rl * binomial(l as u64, k as u64);
            if (l - k) % 2 == 0 {
                *ak += term;
            } else {
                *ak -= term;
            }
        }
    }
    trim(a)
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// `Some((sign, k))` when `v = sign * 2^k`.
pub fn is_signed_power_of_two(v: &BigInt) -> Option<(Sign, u64)> {
    if v.is_zero() {
        return None;
    }
    let mag = v.magnitude();
    let k = mag.trailing_zeros()?;
    if mag.bits() == k + 1 {
        Some((v.sign(), k))
    } else {
        None
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Renders as e.g. `2x + x^2 + x^3`, ascending degree.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<String>,
}

/// JSON form: `{"coeffs": ["0", "2", "1"]}`, decimal strings in ascending
/// degree.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}
