//! Exact scalars and the elementary combinatorial quantities built on them.
//!
//! [`Integer`] and [`Rational`] are the `num` crate's arbitrary-precision
//! types. `BigRational` reduces to lowest terms with a positive denominator
//! after every operation, so structural equality is value equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub(crate) fn nonneg(name: &'static str, value: i64) -> Result<usize> {
    usize::try_from(value).map_err(|_| Error::Negative { name, value })
}

/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> Result<Integer> {
    let n = nonneg("n", n)?;
    if k < 0 || k as usize > n {
        return Ok(Integer::zero());
    }
    Ok(binom_u(n, k as usize))
}

/// Infallible form of [`binom`] for indices already known to be nonnegative.
pub fn binom_u(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for t in 0..k {
        // acc = C(n, t) here, so the division is exact
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

pub fn factorial(n: usize) -> Integer {
    (1..=n).fold(Integer::one(), |acc, t| acc * t)
}

/// `(2m - 1)!! = (2m - 1)(2m - 3) ... 3 * 1`, with value 1 at `m = 0`.
pub fn double_factorial_odd(m: i64) -> Result<Integer> {
    let m = nonneg("m", m)?;
    Ok((1..=m).fold(Integer::one(), |acc, t| acc * (2 * t - 1)))
}

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

/// Lossless decimal text form used by every JSON and CSV export.
///
/// Integers render as plain decimal strings, rationals always as `p/q`.
pub trait ExactText: Sized {
    fn to_text(&self) -> String;
    fn parse_text(s: &str) -> Result<Self>;
}

impl ExactText for Integer {
    fn to_text(&self) -> String {
        self.to_str_radix(10)
    }

    fn parse_text(s: &str) -> Result<Self> {
        let t = s.trim();
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(s.to_string()));
        }
        t.parse::<Integer>()
            .map_err(|_| Error::Parse(s.to_string()))
    }
}

impl ExactText for Rational {
    fn to_text(&self) -> String {
        format!("{}/{}", self.numer().to_text(), self.denom().to_text())
    }

    fn parse_text(s: &str) -> Result<Self> {
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (Integer::parse_text(p)?, Integer::parse_text(q)?),
            None => (Integer::parse_text(s)?, Integer::one()),
        };
        if q.is_zero() || q.is_negative() {
            return Err(Error::Parse(s.to_string()));
        }
        Ok(Rational::new(p, q))
    }
}
