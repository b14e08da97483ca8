//! Dense exact polynomials.
//!
//! [`UniPoly`] is a univariate polynomial over any exact coefficient ring;
//! [`UniPolyX`] (integer) and [`QPolyX`] (rational) are the two instances in
//! use. [`BiPoly`] is a dense integer polynomial in `u` and `x`.
//!
//! Both types keep a canonical trimmed form, so derived equality is
//! coefficient-wise equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numkernel::{binom_u, ExactText, Integer, Rational};

/// Exact coefficient ring usable inside [`UniPoly`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + Sub<Output = Self>
    + From<Integer>
    + ExactText
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Signed
        + Neg<Output = Self>
        + Sub<Output = Self>
        + From<Integer>
        + ExactText
{
}

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of the `i`-th
/// power. The zero polynomial has no coefficients; otherwise the last one is
/// nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

pub type UniPolyX = UniPoly<Integer>;
pub type QPolyX = UniPoly<Rational>;

impl<C: Coeff> UniPoly<C> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn monomial(c: C, degree: usize) -> Self {
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `(x + a)^n` expanded.
    pub fn linear_power(a: &Integer, n: usize) -> Self {
        Self::from_coeffs(
            (0..=n)
                .map(|j| C::from(binom_u(n, j) * num_traits::pow(a.clone(), n - j)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplication by the variable.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Exact division by the variable; `None` when the constant term is
    /// nonzero.
    pub fn div_x(&self) -> Option<Self> {
        match self.coeffs.first() {
            None => Some(Self::zero()),
            Some(c) if c.is_zero() => Some(UniPoly {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            Some(_) => None,
        }
    }

    /// `p(x + a)`, expanded with `x^i -> sum_j C(i, j) a^(i-j) x^j`.
    pub fn shift_x(&self, a: &Integer) -> Self {
        let n = self.coeffs.len();
        let mut powers = Vec::with_capacity(n);
        let mut acc = Integer::one();
        for _ in 0..n {
            powers.push(acc.clone());
            acc *= a;
        }
        let mut out = vec![C::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let factor = binom_u(i, j) * &powers[i - j];
                *slot = slot.clone() + c.clone() * C::from(factor);
            }
        }
        Self::from_coeffs(out)
    }

    pub fn eval(&self, at: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Human-readable form in ascending powers, e.g. `1 + 3x - 2x^2`.
    pub fn display_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            let body = term_body(&mag, var, i);
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn term_body<C: Coeff>(mag: &C, var: &str, power: usize) -> String {
    let monomial = match power {
        0 => String::new(),
        1 => var.to_string(),
        p => format!("{var}^{p}"),
    };
    if monomial.is_empty() {
        return mag.to_string();
    }
    if mag.is_one() {
        return monomial;
    }
    let c = mag.to_string();
    if c.contains('/') {
        format!("({c}){monomial}")
    } else {
        format!("{c}{monomial}")
    }
}

impl UniPolyX {
    pub fn to_rational(&self) -> QPolyX {
        self.map(|c| Rational::from_integer(c.clone()))
    }
}

impl QPolyX {
    /// `Some` when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<UniPolyX> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(self.map(|c| c.to_integer()))
        } else {
            None
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl<C: Coeff> Add for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Sub for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Mul for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl<C: Coeff> Neg for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn neg(self) -> UniPoly<C> {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coeff> Add for UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, rhs: UniPoly<C>) -> UniPoly<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, rhs: UniPoly<C>) -> UniPoly<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, rhs: UniPoly<C>) -> UniPoly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for UniPoly<C> {
    type Output = UniPoly<C>;
    fn neg(self) -> UniPoly<C> {
        -&self
    }
}

impl<C: Coeff> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.display_in("x"))
    }
}

impl<C: Coeff> fmt::Display for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct UniPolyJson {
    coeffs: Vec<String>,
}

impl<C: Coeff> Serialize for UniPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        UniPolyJson {
            coeffs: self.coeffs.iter().map(ExactText::to_text).collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for UniPoly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = UniPolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| C::parse_text(s))
            .collect::<Result<Vec<C>>>()
            .map_err(D::Error::custom)?;
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err(D::Error::custom("trailing zero coefficient"));
        }
        Ok(UniPoly { coeffs })
    }
}

/// Dense integer polynomial in `u` and `x`: `coeffs[j][i]` is the coefficient
/// of `u^j x^i`.
///
/// Storage is rectangular with `deg_u + 1` rows of `deg_x + 1` entries; the
/// last row and the last column each contain a nonzero entry. The zero
/// polynomial has no rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    coeffs: Vec<Vec<Integer>>,
}

impl BiPoly {
    fn normalized(mut rows: Vec<Vec<Integer>>) -> Self {
        let width = rows
            .iter()
            .map(|r| r.iter().rposition(|c| !c.is_zero()).map_or(0, |p| p + 1))
            .max()
            .unwrap_or(0);
        if width == 0 {
            return BiPoly { coeffs: Vec::new() };
        }
        for row in &mut rows {
            row.resize(width, Integer::zero());
        }
        while rows.last().is_some_and(|r| r.iter().all(Zero::is_zero)) {
            rows.pop();
        }
        BiPoly { coeffs: rows }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::one())
    }

    pub fn constant(c: Integer) -> Self {
        Self::normalized(vec![vec![c]])
    }

    pub fn x() -> Self {
        Self::monomial(Integer::one(), 0, 1)
    }

    pub fn u() -> Self {
        Self::monomial(Integer::one(), 1, 0)
    }

    /// `c u^j x^i`.
    pub fn monomial(c: Integer, j: usize, i: usize) -> Self {
        let mut rows = vec![vec![Integer::zero(); i + 1]; j + 1];
        rows[j][i] = c;
        Self::normalized(rows)
    }

    /// Builds the polynomial with coefficient `f(j, i)` for
    /// `j <= deg_u`, `i <= deg_x`.
    pub fn from_fn(deg_u: usize, deg_x: usize, f: impl Fn(usize, usize) -> Integer) -> Self {
        Self::normalized(
            (0..=deg_u)
                .map(|j| (0..=deg_x).map(|i| f(j, i)).collect())
                .collect(),
        )
    }

    /// Polynomial whose `u^j` coefficient is `rows[j]`.
    pub fn from_u_rows(rows: &[UniPolyX]) -> Self {
        Self::normalized(rows.iter().map(|r| r.coeffs().to_vec()).collect())
    }

    /// `sum_j x_poly(j) u^j` for a polynomial in `x` placed at a single power
    /// of `u`.
    pub fn from_x_poly(p: &UniPolyX, u_power: usize) -> Self {
        let mut rows = vec![Vec::new(); u_power + 1];
        rows[u_power] = p.coeffs().to_vec();
        Self::normalized(rows)
    }

    /// Polynomial in `u` alone, from its coefficient list.
    pub fn from_u_poly(p: &UniPolyX) -> Self {
        Self::normalized(p.coeffs().iter().map(|c| vec![c.clone()]).collect())
    }

    /// `(1 - u)^n`.
    pub fn one_minus_u_pow(n: usize) -> Self {
        Self::from_fn(n, 0, |j, _| {
            let c = binom_u(n, j);
            if j % 2 == 0 {
                c
            } else {
                -c
            }
        })
    }

    pub fn coeff(&self, j: usize, i: usize) -> Integer {
        self.coeffs
            .get(j)
            .and_then(|r| r.get(i))
            .cloned()
            .unwrap_or_else(Integer::zero)
    }

    /// Rows of the rectangular coefficient array, by power of `u`.
    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.coeffs
    }

    /// The coefficient of `u^j`, a polynomial in `x`.
    pub fn u_row(&self, j: usize) -> UniPolyX {
        self.coeffs
            .get(j)
            .map(|r| UniPolyX::from_coeffs(r.clone()))
            .unwrap_or_else(UniPolyX::zero)
    }

    pub fn deg_u(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.coeffs.first().and_then(|r| r.len().checked_sub(1))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Integer) -> Self {
        Self::normalized(
            self.coeffs
                .iter()
                .map(|r| r.iter().map(|a| a * c).collect())
                .collect(),
        )
    }

    /// Multiplication by `u^n`.
    pub fn mul_u_pow(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let width = self.coeffs[0].len();
        let mut rows = vec![vec![Integer::zero(); width]; n];
        rows.extend(self.coeffs.iter().cloned());
        BiPoly { coeffs: rows }
    }

    /// `p(u, x + a)`.
    pub fn shift_x(&self, a: &Integer) -> Self {
        let rows: Vec<UniPolyX> = (0..self.coeffs.len())
            .map(|j| self.u_row(j).shift_x(a))
            .collect();
        Self::from_u_rows(&rows)
    }

    /// Formal partial derivative in `u`.
    pub fn diff_u(&self) -> Self {
        Self::normalized(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, r)| r.iter().map(|c| c * j).collect())
                .collect(),
        )
    }

    pub fn eval(&self, u0: &Rational, x0: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, row| {
            let inner = row.iter().rev().fold(Rational::zero(), |a, c| {
                a * x0 + Rational::from_integer(c.clone())
            });
            acc * u0 + inner
        })
    }

    /// `p(u0, x)` as a polynomial in `x`.
    pub fn eval_u(&self, u0: &Integer) -> UniPolyX {
        let mut acc = UniPolyX::zero();
        for row in self.coeffs.iter().rev() {
            acc = &acc.scale(u0) + &UniPolyX::from_coeffs(row.clone());
        }
        acc
    }

    /// `p(u, x0)` as a polynomial in `u`.
    pub fn eval_x(&self, x0: &Integer) -> UniPolyX {
        UniPolyX::from_coeffs(
            self.coeffs
                .iter()
                .map(|r| UniPolyX::from_coeffs(r.clone()).eval(x0))
                .collect(),
        )
    }

    /// First coefficient where `self` and `other` differ, scanning by power of
    /// `u` then `x`.
    pub fn first_difference(&self, other: &BiPoly) -> Option<String> {
        let du = self.coeffs.len().max(other.coeffs.len());
        let dx = self
            .coeffs
            .first()
            .map_or(0, Vec::len)
            .max(other.coeffs.first().map_or(0, Vec::len));
        for j in 0..du {
            for i in 0..dx {
                let (a, b) = (self.coeff(j, i), other.coeff(j, i));
                if a != b {
                    return Some(format!("u^{j} x^{i}: {a} != {b}"));
                }
            }
        }
        None
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let du = self.coeffs.len().max(rhs.coeffs.len());
        let dx = self
            .coeffs
            .first()
            .map_or(0, Vec::len)
            .max(rhs.coeffs.first().map_or(0, Vec::len));
        BiPoly::from_fn(du.saturating_sub(1), dx.saturating_sub(1), |j, i| {
            self.coeff(j, i) + rhs.coeff(j, i)
        })
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|r| r.iter().map(|c| -c).collect())
                .collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let (au, ax) = (self.coeffs.len(), self.coeffs[0].len());
        let (bu, bx) = (rhs.coeffs.len(), rhs.coeffs[0].len());
        let mut rows = vec![vec![Integer::zero(); ax + bx - 1]; au + bu - 1];
        for (j1, r1) in self.coeffs.iter().enumerate() {
            for (i1, a) in r1.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j2, r2) in rhs.coeffs.iter().enumerate() {
                    for (i2, b) in r2.iter().enumerate() {
                        rows[j1 + j2][i1 + i2] += a * b;
                    }
                }
            }
        }
        BiPoly::normalized(rows)
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

/// Grouped by powers of `u`, e.g. `x^2 + (1 + 3x - 2x^2)u + (2 - 3x + x^2)u^2`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for j in 0..self.coeffs.len() {
            let row = self.u_row(j);
            if row.is_zero() {
                continue;
            }
            let upow = match j {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{j}"),
            };
            let nonzero = row.coeffs().iter().filter(|c| !c.is_zero()).count();
            let (negative, body) = if nonzero > 1 && j > 0 {
                (false, format!("({}){upow}", row.display_in("x")))
            } else if nonzero > 1 {
                (false, row.display_in("x"))
            } else {
                let i = row.degree().unwrap_or(0);
                let c = row.coeff(i);
                let mut body = term_body(&c.abs(), "x", i);
                if !upow.is_empty() {
                    if body == "1" {
                        body.clear();
                    }
                    body.push_str(&upow);
                }
                (c.is_negative(), body)
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BiPolyJson {
    deg_u: usize,
    deg_x: usize,
    coeffs: Vec<Vec<String>>,
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BiPolyJson {
            deg_u: self.deg_u().unwrap_or(0),
            deg_x: self.deg_x().unwrap_or(0),
            coeffs: self
                .coeffs
                .iter()
                .map(|r| r.iter().map(ExactText::to_text).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BiPolyJson::deserialize(d)?;
        BiPoly::from_json_parts(raw).map_err(D::Error::custom)
    }
}

impl BiPoly {
    fn from_json_parts(raw: BiPolyJson) -> Result<Self> {
        if raw.coeffs.is_empty() {
            if raw.deg_u != 0 || raw.deg_x != 0 {
                return Err(Error::Shape("zero polynomial must report degrees 0".into()));
            }
            return Ok(BiPoly::zero());
        }
        if raw.coeffs.len() != raw.deg_u + 1 {
            return Err(Error::Shape(format!(
                "{} rows for deg_u = {}",
                raw.coeffs.len(),
                raw.deg_u
            )));
        }
        let mut rows = Vec::with_capacity(raw.coeffs.len());
        for row in &raw.coeffs {
            if row.len() != raw.deg_x + 1 {
                return Err(Error::Shape(format!(
                    "row of length {} for deg_x = {}",
                    row.len(),
                    raw.deg_x
                )));
            }
            rows.push(
                row.iter()
                    .map(|s| Integer::parse_text(s))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let p = BiPoly::normalized(rows.clone());
        if p.coeffs != rows {
            return Err(Error::Shape("outermost row or column is zero".into()));
        }
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("BiPoly serializes infallibly")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: BiPolyJson = serde_json::from_str(s).map_err(|e| Error::Shape(e.to_string()))?;
        Self::from_json_parts(raw)
    }
}
