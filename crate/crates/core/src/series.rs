//! Truncated formal power series whose coefficients are rational polynomials
//! in `x`.
//!
//! [`TruncSeriesZ`] carries the tree function `T(z)` and the exponential
//! identities built on it; [`TruncSeriesU`] carries expansions in `u` of
//! `g(m, u, x) = sum_k (x+k)^(m+k) e^(-u(x+k)) u^k / k!` and of the closed
//! forms that are claimed to equal it.
//!
//! A series of order `N` stores the coefficients of `var^0 ..= var^N`; all
//! arithmetic is modulo `var^(N+1)`. Binary operations on series of different
//! orders yield the smaller order.

use std::fmt;
use std::marker::PhantomData;

use num_traits::One;
use serde::Serialize;

use crate::bipoly::{BiPoly, QPolyX, UniPolyX};
use crate::error::{Error, Result};
use crate::numkernel::{binom_u, factorial, nonneg, Integer, Rational};
use crate::ramanujan::{psi_row, r_poly, RRoute};
use crate::report::VerifyReport;
use crate::triangles::{p_count, stirling2, StirlingRoute};

pub trait SeriesVar: Clone + Copy + PartialEq + Eq + fmt::Debug {
    const NAME: &'static str;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarU;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarZ;

impl SeriesVar for VarU {
    const NAME: &'static str = "u";
}

impl SeriesVar for VarZ {
    const NAME: &'static str = "z";
}

#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries<V> {
    order: usize,
    coeffs: Vec<QPolyX>,
    var: PhantomData<V>,
}

pub type TruncSeriesU = TruncSeries<VarU>;
pub type TruncSeriesZ = TruncSeries<VarZ>;

impl<V: SeriesVar> TruncSeries<V> {
    /// Pads with zeros or drops terms so exactly `order + 1` coefficients
    /// remain.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<QPolyX>) -> Self {
        coeffs.resize(order + 1, QPolyX::zero());
        TruncSeries {
            order,
            coeffs,
            var: PhantomData,
        }
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> QPolyX) -> Self {
        Self::from_coeffs(order, (0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, Vec::new())
    }

    pub fn constant(order: usize, c: QPolyX) -> Self {
        Self::from_coeffs(order, vec![c])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, QPolyX::one())
    }

    /// The series variable itself.
    pub fn var(order: usize) -> Self {
        Self::from_coeffs(order, vec![QPolyX::zero(), QPolyX::one()])
    }

    /// `(1 - var)^(-a) = sum_l C(a+l-1, l) var^l`.
    pub fn geometric_power(a: usize, order: usize) -> Self {
        Self::from_fn(order, |l| {
            let c = if a == 0 {
                Integer::from((l == 0) as u8)
            } else {
                binom_u(a + l - 1, l)
            };
            QPolyX::constant(Rational::from_integer(c))
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[QPolyX] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &QPolyX {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order,
            "cannot raise the order of a truncated series"
        );
        Self::from_coeffs(order, self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, c: &QPolyX) -> Self {
        Self::from_coeffs(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Formal derivative in the series variable; the order drops by one.
    pub fn derivative(&self) -> Result<Self> {
        if self.order == 0 {
            return Err(Error::OutOfRange {
                name: "order",
                value: 0,
                range: ">= 1".into(),
            });
        }
        Ok(Self::from_fn(self.order - 1, |n| {
            self.coeffs[n + 1].scale(&Rational::from_integer(Integer::from(n + 1)))
        }))
    }

    /// Replaces `x` by `x + a` in every coefficient.
    pub fn shift_x(&self, a: &Integer) -> Self {
        Self::from_coeffs(
            self.order,
            self.coeffs.iter().map(|c| c.shift_x(a)).collect(),
        )
    }

    /// `self(inner)`; `inner` must have zero constant term.
    pub fn compose<W: SeriesVar>(&self, inner: &TruncSeries<W>) -> Result<TruncSeries<W>> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order.min(inner.order);
        let inner = inner.truncate(order);
        let mut acc = TruncSeries::<W>::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &(&acc * &inner) + &TruncSeries::constant(order, c.clone());
        }
        Ok(acc)
    }

    /// Multiplicative inverse; the constant term must be a nonzero constant.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.degree() != Some(0) {
            return Err(Error::NotInvertible);
        }
        let inv0 = Rational::one() / a0.coeff(0);
        let mut out: Vec<QPolyX> = vec![QPolyX::constant(inv0.clone())];
        for n in 1..=self.order {
            let mut s = QPolyX::zero();
            for k in 1..=n {
                s = &s + &(&self.coeffs[k] * &out[n - k]);
            }
            out.push(s.scale(&-inv0.clone()));
        }
        Ok(Self::from_coeffs(self.order, out))
    }

    /// Every coefficient polynomial has integer coefficients.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(QPolyX::is_integral)
    }

    /// First index where the two series differ, compared through the smaller
    /// order.
    pub fn first_difference(&self, other: &Self) -> Option<String> {
        let order = self.order.min(other.order);
        (0..=order).find_map(|n| {
            let (a, b) = (&self.coeffs[n], &other.coeffs[n]);
            (a != b).then(|| format!("{}^{n}: {a} != {b}", V::NAME))
        })
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Repr<'a> {
            order: usize,
            coeffs: &'a [QPolyX],
        }
        serde_json::to_string(&Repr {
            order: self.order,
            coeffs: &self.coeffs,
        })
        .expect("series serializes infallibly")
    }
}

impl TruncSeriesU {
    /// Embeds a polynomial in `u` and `x`, truncated at `order`.
    pub fn from_bipoly(p: &BiPoly, order: usize) -> Self {
        Self::from_fn(order, |j| p.u_row(j).to_rational())
    }
}

impl<V: SeriesVar> std::ops::Add for &TruncSeries<V> {
    type Output = TruncSeries<V>;
    fn add(self, rhs: &TruncSeries<V>) -> TruncSeries<V> {
        let order = self.order.min(rhs.order);
        TruncSeries::from_fn(order, |n| &self.coeffs[n] + &rhs.coeffs[n])
    }
}

impl<V: SeriesVar> std::ops::Sub for &TruncSeries<V> {
    type Output = TruncSeries<V>;
    fn sub(self, rhs: &TruncSeries<V>) -> TruncSeries<V> {
        let order = self.order.min(rhs.order);
        TruncSeries::from_fn(order, |n| &self.coeffs[n] - &rhs.coeffs[n])
    }
}

impl<V: SeriesVar> std::ops::Mul for &TruncSeries<V> {
    type Output = TruncSeries<V>;
    fn mul(self, rhs: &TruncSeries<V>) -> TruncSeries<V> {
        let order = self.order.min(rhs.order);
        TruncSeries::from_fn(order, |n| {
            let mut s = QPolyX::zero();
            for k in 0..=n {
                let (a, b) = (&self.coeffs[k], &rhs.coeffs[n - k]);
                if !a.is_zero() && !b.is_zero() {
                    s = &s + &(a * b);
                }
            }
            s
        })
    }
}

impl<V: SeriesVar> std::ops::Neg for &TruncSeries<V> {
    type Output = TruncSeries<V>;
    fn neg(self) -> TruncSeries<V> {
        TruncSeries::from_coeffs(self.order, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<V: SeriesVar> fmt::Debug for TruncSeries<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries[{}; order {}](", V::NAME, self.order)?;
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `T(z) = sum_{n>=1} n^(n-1) z^n / n!`.
pub fn tree_series(order: usize) -> TruncSeriesZ {
    TruncSeriesZ::from_fn(order, |n| {
        if n == 0 {
            return QPolyX::zero();
        }
        let num = num_traits::pow(Integer::from(n), n - 1);
        QPolyX::constant(Rational::new(num, factorial(n)))
    })
}

/// `exp(scale * s)` for `s` with zero constant term, from
/// `n e_n = sum_{k=1}^n k a_k e_{n-k}`.
pub fn series_exp<V: SeriesVar>(s: &TruncSeries<V>, scale: &QPolyX) -> Result<TruncSeries<V>> {
    if !s.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let a = s.scale(scale);
    let mut e: Vec<QPolyX> = vec![QPolyX::one()];
    for n in 1..=s.order {
        let mut acc = QPolyX::zero();
        for k in 1..=n {
            if a.coeffs[k].is_zero() {
                continue;
            }
            let w = Rational::from_integer(Integer::from(k));
            acc = &acc + &(&a.coeffs[k] * &e[n - k]).scale(&w);
        }
        e.push(acc.scale(&Rational::new(Integer::one(), Integer::from(n))));
    }
    Ok(TruncSeries::from_coeffs(s.order, e))
}

/// `T = z exp(T)` through `z^order`.
pub fn check_tree_functional(order: usize) -> Result<VerifyReport> {
    let t = tree_series(order);
    let rhs = &TruncSeriesZ::var(order) * &series_exp(&t, &QPolyX::one())?;
    Ok(VerifyReport::from_mismatch(
        "tree-functional-equation",
        &[("order", order as i64)],
        t.first_difference(&rhs),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Allied {
    /// `e^(xu) / (1 - u) = sum_n (x+n)^n z^n / n!`
    U1,
    /// `(e^(xu) - 1) / x = sum_{n>=1} (x+n)^(n-1) z^n / n!`
    U2,
}

impl Allied {
    pub fn id(self) -> &'static str {
        match self {
            Allied::U1 => "tree-allied-exp-over-one-minus",
            Allied::U2 => "tree-allied-exp-minus-one-over-x",
        }
    }
}

/// Coefficient of `z^n` on the closed-form side.
pub fn allied_coefficient(n: usize, which: Allied) -> QPolyX {
    let power = match which {
        Allied::U1 => n,
        Allied::U2 if n == 0 => return QPolyX::zero(),
        Allied::U2 => n - 1,
    };
    let inv = Rational::new(Integer::one(), factorial(n));
    UniPolyX::linear_power(&Integer::from(n), power)
        .to_rational()
        .scale(&inv)
}

/// Left side of an allied identity with `u := T(z)`, through `z^order`.
///
/// For `U2` the division by `x` is exact polynomial division per coefficient;
/// a nonzero remainder is an error.
pub fn allied_lhs(order: usize, which: Allied) -> Result<TruncSeriesZ> {
    let t = tree_series(order);
    let exp_xt = series_exp(&t, &QPolyX::x())?;
    match which {
        Allied::U1 => {
            let geometric = TruncSeriesU::geometric_power(1, order);
            let inv = geometric.compose(&t)?;
            Ok(&exp_xt * &inv)
        }
        Allied::U2 => {
            let numer = &exp_xt - &TruncSeriesZ::one(order);
            let coeffs = numer
                .coeffs()
                .iter()
                .enumerate()
                .map(|(index, c)| c.div_x().ok_or(Error::InexactDivision { index }))
                .collect::<Result<Vec<_>>>()?;
            Ok(TruncSeriesZ::from_coeffs(order, coeffs))
        }
    }
}

pub fn check_allied(order: usize, which: Allied) -> Result<VerifyReport> {
    let lhs = allied_lhs(order, which)?;
    let rhs = TruncSeriesZ::from_fn(order, |n| allied_coefficient(n, which));
    Ok(VerifyReport::from_mismatch(
        which.id(),
        &[("order", order as i64)],
        lhs.first_difference(&rhs),
    ))
}

/// Expansion of `g(m, u, x)` in `u`: the `u^j` coefficient is
/// `sum_{i<=m} C(m+j, i) S(m+j-i, j) x^i`.
pub fn lhs_series(m: i64, order: usize) -> Result<TruncSeriesU> {
    let m = nonneg("m", m)?;
    let coeffs = (0..=order)
        .map(|j| {
            let terms = (0..=m)
                .map(|i| {
                    let s = stirling2((m + j - i) as i64, j as i64, StirlingRoute::Recurrence)?;
                    Ok(Rational::from_integer(binom_u(m + j, i) * s))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(QPolyX::from_coeffs(terms))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncSeriesU::from_coeffs(order, coeffs))
}

/// `g_m(u, x) = sum_{k<=m} sum_{i<=m-k} p(m,k,i) x^i u^k / (1-u)^(m+k+1)`,
/// each inverse power expanded as a binomial series.
pub fn gm_series(m: i64, order: usize) -> Result<TruncSeriesU> {
    let mu = nonneg("m", m)?;
    let mut acc = TruncSeriesU::zero(order);
    for k in 0..=mu.min(order) {
        let row = QPolyX::from_coeffs(
            (0..=mu - k)
                .map(|i| Rational::from_integer(p_count(m, k as i64, i as i64)))
                .collect(),
        );
        if row.is_zero() {
            continue;
        }
        let mut shifted = vec![QPolyX::zero(); k];
        shifted.extend(
            TruncSeriesU::geometric_power(mu + k + 1, order)
                .coeffs()
                .iter()
                .cloned(),
        );
        let term = TruncSeriesU::from_coeffs(order, shifted).scale(&row);
        acc = &acc + &term;
    }
    Ok(acc)
}

/// `R_m(u, x) (1-u)^(-(2m+1))` through `u^order`.
pub fn gessel_series(m: i64, order: usize) -> Result<TruncSeriesU> {
    let r = r_poly(m, RRoute::QRoute)?;
    let mu = m as usize;
    Ok(&TruncSeriesU::from_bipoly(&r, order) * &TruncSeriesU::geometric_power(2 * mu + 1, order))
}

/// `sum_{k=1}^{m+1} psi_k(m, x) (1-u)^(-(m+k))` through `u^order`.
pub fn psi_sum_series(m: i64, order: usize) -> Result<TruncSeriesU> {
    let mu = nonneg("m", m)?;
    let mut acc = TruncSeriesU::zero(order);
    for (idx, psi) in psi_row(mu).iter().enumerate() {
        let k = idx + 1;
        let term = TruncSeriesU::geometric_power(mu + k, order).scale(&psi.to_rational());
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Equality of the `g` expansion with the `g_m` triple sum, with Gessel's
/// form, and with Ramanujan's `psi` sum, plus integrality of both expansions.
pub fn check_series_bridges(m: i64, order: usize) -> Result<Vec<VerifyReport>> {
    let params = [("m", m), ("order", order as i64)];
    let lhs = lhs_series(m, order)?;
    let gm = gm_series(m, order)?;
    let gessel = gessel_series(m, order)?;
    let psi = psi_sum_series(m, order)?;
    let integral = match (lhs.is_integral(), gm.is_integral()) {
        (true, true) => None,
        (l, g) => Some(format!("lhs integral: {l}, gm integral: {g}")),
    };
    Ok(vec![
        VerifyReport::from_mismatch("series-lhs-equals-gm", &params, lhs.first_difference(&gm)),
        VerifyReport::from_mismatch(
            "series-gessel-bridge",
            &params,
            gm.first_difference(&gessel),
        ),
        VerifyReport::from_mismatch("series-psi-bridge", &params, lhs.first_difference(&psi)),
        VerifyReport::from_mismatch("series-integrality", &params, integral),
    ])
}

/// `g(m, u, x+1) - g(m, u, x) = d/du g(m-1, u, x)` through `u^order`.
pub fn check_g_recurrence(m: i64, order: usize) -> Result<VerifyReport> {
    if m < 1 {
        return Err(Error::OutOfRange {
            name: "m",
            value: m,
            range: ">= 1".into(),
        });
    }
    if order < 1 {
        return Err(Error::OutOfRange {
            name: "order",
            value: order as i64,
            range: ">= 1".into(),
        });
    }
    let g = lhs_series(m, order)?;
    let left = &g.shift_x(&Integer::one()) - &g;
    let right = lhs_series(m - 1, order + 1)?.derivative()?;
    Ok(VerifyReport::from_mismatch(
        "g-shift-recurrence",
        &[("m", m), ("order", order as i64)],
        left.first_difference(&right),
    ))
}
