//! Ramanujan's polynomials `R_m(u, x)` and their auxiliaries.
//!
//! `R_m` is the numerator in
//! `sum_k (x+k)^(m+k) e^(-u(x+k)) u^k / k! = R_m(u, x) / (1 - u)^(2m+1)`.
//! It is built two ways:
//!
//! * [`RRoute::TripleSum`]: `sum_{k,i} C(m+k, i) {m+k-i, k}_{>=2} x^i u^k (1-u)^(m-k)`;
//! * [`RRoute::QRoute`]: `sum_k Q_{m+1,k}(x - m - 1) (1-u)^(m-k)`, with `Q`
//!   from its shift recurrence in `x`.
//!
//! `p_m(u, x) = sum_{k,i} p(m,k,i) u^k x^i` is the same coefficient array
//! before the `u -> u/(1-u)` change of variables.

use num_traits::One;

use crate::bipoly::{BiPoly, UniPolyX};
use crate::error::{Error, Result};
use crate::numkernel::{binom_u, double_factorial_odd, nonneg, Integer};
use crate::report::VerifyReport;
use crate::triangles::{assoc_stirling2, eulerian2, p_count, AssocRoute};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RRoute {
    TripleSum,
    QRoute,
}

impl RRoute {
    pub fn name(self) -> &'static str {
        match self {
            RRoute::TripleSum => "triple_sum",
            RRoute::QRoute => "q_route",
        }
    }
}

/// `R_m` together with the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamanujanFamily {
    pub m: usize,
    pub route: RRoute,
    pub value: BiPoly,
}

impl RamanujanFamily {
    pub fn compute(m: i64, route: RRoute) -> Result<Self> {
        let value = r_poly(m, route)?;
        Ok(RamanujanFamily {
            m: m as usize,
            route,
            value,
        })
    }

    /// Degrees at most `m` in each variable and `u^0` coefficient `x^m`.
    pub fn invariants_hold(&self) -> bool {
        let m = self.m;
        self.value.deg_u().is_some_and(|d| d <= m)
            && self.value.deg_x().is_some_and(|d| d <= m)
            && self.value.u_row(0) == UniPolyX::monomial(Integer::one(), m)
    }
}

/// `Q_{m,k}` for `1 <= m <= max_m`: entry `[m][k]` for `k = 0..m`. Row 0 is
/// empty.
///
/// `Q_{1,0} = 1` and
/// `Q_{m,k}(x) = (x-k+1) Q_{m-1,k}(x+1) + (m+k-2) Q_{m-1,k-1}(x+1)`.
pub fn q_table(max_m: usize) -> Vec<Vec<UniPolyX>> {
    let mut rows: Vec<Vec<UniPolyX>> = vec![Vec::new()];
    if max_m == 0 {
        return rows;
    }
    rows.push(vec![UniPolyX::one()]);
    let one = Integer::one();
    for m in 2..=max_m {
        let prev: Vec<UniPolyX> = rows[m - 1].iter().map(|q| q.shift_x(&one)).collect();
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(UniPolyX::zero);
        let row = (0..m)
            .map(|k| {
                let linear = UniPolyX::from_coeffs(vec![Integer::from(1 - k as i64), one.clone()]);
                let first = &linear * &at(k);
                let second = if k == 0 {
                    UniPolyX::zero()
                } else {
                    at(k - 1).scale(&Integer::from(m + k - 2))
                };
                &first + &second
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `Q_{m,k}(x)`; zero for `k` outside `0..m`.
pub fn q_poly(m: i64, k: i64) -> Result<UniPolyX> {
    if m < 1 {
        return Err(Error::OutOfRange {
            name: "m",
            value: m,
            range: ">= 1".into(),
        });
    }
    if k < 0 || k >= m {
        return Ok(UniPolyX::zero());
    }
    let table = q_table(m as usize);
    Ok(table[m as usize][k as usize].clone())
}

/// `psi_k(m, x) = Q_{m+1,k-1}(x - m - 1)` for `1 <= k <= m + 1`.
pub fn psi_poly(m: i64, k: i64) -> Result<UniPolyX> {
    let mu = nonneg("m", m)?;
    if k < 1 || k > m + 1 {
        return Err(Error::OutOfRange {
            name: "k",
            value: k,
            range: format!("1..={}", m + 1),
        });
    }
    let q = q_poly(m + 1, k - 1)?;
    Ok(q.shift_x(&Integer::from(-(mu as i64) - 1)))
}

/// All of `psi_1(m, x), ..., psi_{m+1}(m, x)` from one `Q` table.
pub fn psi_row(m: usize) -> Vec<UniPolyX> {
    let shift = Integer::from(-(m as i64) - 1);
    q_table(m + 1)[m + 1]
        .iter()
        .map(|q| q.shift_x(&shift))
        .collect()
}

/// `R_m(u, x)`.
pub fn r_poly(m: i64, route: RRoute) -> Result<BiPoly> {
    let m = nonneg("m", m)?;
    Ok(match route {
        RRoute::TripleSum => homogenize(&p_poly_u(m), m),
        RRoute::QRoute => {
            let mut acc = BiPoly::zero();
            for (k, psi) in psi_row(m).iter().enumerate() {
                let term = &BiPoly::from_x_poly(psi, 0) * &BiPoly::one_minus_u_pow(m - k);
                acc = &acc + &term;
            }
            acc
        }
    })
}

/// `p_m(u, x)`.
pub fn p_poly(m: i64) -> Result<BiPoly> {
    Ok(p_poly_u(nonneg("m", m)?))
}

fn p_poly_u(m: usize) -> BiPoly {
    let mi = m as i64;
    BiPoly::from_fn(m, m, |k, i| p_count(mi, k as i64, i as i64))
}

/// `sum_{k,i} c_{k,i} u^k (1-u)^(m-k) x^i`, i.e. `(1-u)^m p(u/(1-u), x)` with
/// the denominators cleared. Requires `deg_u(p) <= m`.
pub fn homogenize(p: &BiPoly, m: usize) -> BiPoly {
    let mut acc = BiPoly::zero();
    for k in 0..=p.deg_u().unwrap_or(0).min(m) {
        let row = p.u_row(k);
        if row.is_zero() {
            continue;
        }
        let term = &BiPoly::from_x_poly(&row, k) * &BiPoly::one_minus_u_pow(m - k);
        acc = &acc + &term;
    }
    acc
}

/// Both routes to `R_m` agree.
pub fn check_r_routes(m: i64) -> Result<VerifyReport> {
    let a = r_poly(m, RRoute::TripleSum)?;
    let b = r_poly(m, RRoute::QRoute)?;
    Ok(VerifyReport::from_mismatch(
        "r-route-agreement",
        &[("m", m)],
        a.first_difference(&b),
    ))
}

/// `deg_u R_m = deg_x R_m = m` and the `u^0` row is `x^m`.
pub fn check_r_degrees(m: i64) -> Result<VerifyReport> {
    let fam = RamanujanFamily::compute(m, RRoute::QRoute)?;
    let mu = m as usize;
    let mismatch = if fam.value.deg_u() != Some(mu) || fam.value.deg_x() != Some(mu) {
        Some(format!(
            "degrees (u, x) = ({:?}, {:?})",
            fam.value.deg_u(),
            fam.value.deg_x()
        ))
    } else if !fam.invariants_hold() {
        Some(format!("u^0 coefficient is {}", fam.value.u_row(0)))
    } else {
        None
    };
    Ok(VerifyReport::from_mismatch(
        "r-degree-bounds",
        &[("m", m)],
        mismatch,
    ))
}

/// `(1-u)^m p_m(u/(1-u), x) = R_m(u, x)`, against the `Q` route.
pub fn check_p_r_bridge(m: i64) -> Result<VerifyReport> {
    let p = p_poly(m)?;
    let lhs = homogenize(&p, m as usize);
    let rhs = r_poly(m, RRoute::QRoute)?;
    Ok(VerifyReport::from_mismatch(
        "p-r-bridge",
        &[("m", m)],
        lhs.first_difference(&rhs),
    ))
}

/// `p_m(u, x+1) - p_m(u, x) = [m + (1+u) d/du] p_{m-1}(u, x)`, plus the same
/// identity read coefficient by coefficient:
/// `sum_{j>i} C(j,i) p(m,k,j) = (k+1) p(m-1,k+1,i) + (m+k) p(m-1,k,i)`.
pub fn check_pde_p(m: i64) -> Result<Vec<VerifyReport>> {
    if m < 1 {
        return Err(Error::OutOfRange {
            name: "m",
            value: m,
            range: ">= 1".into(),
        });
    }
    let p = p_poly(m)?;
    let prev = p_poly(m - 1)?;
    let lhs = &p.shift_x(&Integer::one()) - &p;
    let one_plus_u = &BiPoly::one() + &BiPoly::u();
    let rhs = &prev.scale(&Integer::from(m)) + &(&one_plus_u * &prev.diff_u());
    let poly_report = VerifyReport::from_mismatch(
        "p-shift-difference",
        &[("m", m)],
        lhs.first_difference(&rhs),
    );

    let mut mismatch = None;
    'outer: for k in 0..=m {
        for i in 0..=m {
            let left: Integer = (i + 1..=m - k)
                .map(|j| binom_u(j as usize, i as usize) * p_count(m, k, j))
                .sum();
            let right = p_count(m - 1, k + 1, i) * (k + 1) + p_count(m - 1, k, i) * (m + k);
            if left != right {
                mismatch = Some(format!("k={k} i={i}: {left} != {right}"));
                break 'outer;
            }
        }
    }
    let coeff_report =
        VerifyReport::from_mismatch("p-coefficient-recurrence", &[("m", m)], mismatch);
    Ok(vec![poly_report, coeff_report])
}

/// Specializations of `R_m` at `u = 0`, `u = 1`, `x = 0` and `x = 1`.
///
/// The identities through the second-order Eulerian numbers at `x = 0` hold
/// only for `m >= 1`: at `m = 0` the left sides equal 1 and the right side
/// equals `u`. They are skipped there.
pub fn check_r_specials(m: i64) -> Result<Vec<VerifyReport>> {
    let mu = nonneg("m", m)?;
    let r = r_poly(m, RRoute::QRoute)?;
    let params = [("m", m)];
    let eulerian: Vec<Integer> = (0..=m).map(|k| eulerian2(m, k)).collect::<Result<_>>()?;
    let eulerian_poly = UniPolyX::from_coeffs(eulerian);
    let shifted_eulerian = eulerian_poly.mul_x();
    let differ = |a: &UniPolyX, b: &UniPolyX, var: &str| {
        (a != b).then(|| format!("{} != {}", a.display_in(var), b.display_in(var)))
    };
    let zero = Integer::from(0);
    let one = Integer::one();
    let at_x0 = r.eval_x(&zero);
    let at_x1 = r.eval_x(&one);

    let mut out = vec![
        VerifyReport::from_mismatch(
            "r-at-u0",
            &params,
            differ(&r.eval_u(&zero), &UniPolyX::monomial(one.clone(), mu), "x"),
        ),
        VerifyReport::from_mismatch(
            "r-at-u1-double-factorial",
            &params,
            differ(
                &r.eval_u(&one),
                &UniPolyX::constant(double_factorial_odd(m)?),
                "x",
            ),
        ),
        VerifyReport::from_mismatch(
            "r-at-x1-eulerian",
            &params,
            differ(&at_x1, &eulerian_poly, "u"),
        ),
    ];

    let mut assoc_sum = BiPoly::zero();
    for k in 0..=mu {
        let c = assoc_stirling2(m + k as i64, k as i64, AssocRoute::Recurrence)?;
        let term = &BiPoly::monomial(c, k, 0) * &BiPoly::one_minus_u_pow(mu - k);
        assoc_sum = &assoc_sum + &term;
    }
    let assoc_sum = assoc_sum.eval_x(&zero);
    out.push(VerifyReport::from_mismatch(
        "r-at-x0-assoc",
        &params,
        differ(&at_x0, &assoc_sum, "u"),
    ));

    if mu >= 1 {
        out.push(VerifyReport::from_mismatch(
            "r-at-x0-eulerian",
            &params,
            differ(&at_x0, &shifted_eulerian, "u"),
        ));
        out.push(VerifyReport::from_mismatch(
            "r-x0-equals-u-times-x1",
            &params,
            differ(&at_x0, &at_x1.mul_x(), "u"),
        ));
        out.push(VerifyReport::from_mismatch(
            "assoc-eulerian-identity",
            &params,
            differ(&assoc_sum, &shifted_eulerian, "u"),
        ));
    }
    Ok(out)
}

/// Values of `R_0`, `R_1`, `R_2` as listed in the literature.
pub fn known_r(m: usize) -> Option<BiPoly> {
    let table: &[&[&[i64]]] = &[
        &[&[1]],
        &[&[0, 1], &[1, -1]],
        &[&[0, 0, 1], &[1, 3, -2], &[2, -3, 1]],
    ];
    table.get(m).map(|rows| {
        let deg_x = rows[0].len() - 1;
        BiPoly::from_fn(rows.len() - 1, deg_x, |j, i| Integer::from(rows[j][i]))
    })
}

pub fn check_r_known(m: i64) -> Result<Option<VerifyReport>> {
    let Some(expected) = known_r(nonneg("m", m)?) else {
        return Ok(None);
    };
    let mut mismatch = None;
    for route in [RRoute::TripleSum, RRoute::QRoute] {
        if let Some(d) = r_poly(m, route)?.first_difference(&expected) {
            mismatch = Some(format!("{}: {d}", route.name()));
            break;
        }
    }
    Ok(Some(VerifyReport::from_mismatch(
        "r-known-values",
        &[("m", m)],
        mismatch,
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::int;
    use crate::triangles::assoc_stirling2;

    fn uni(c: &[i64]) -> UniPolyX {
        UniPolyX::from_coeffs(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_poly(1, 0).unwrap(), uni(&[1]));
        assert_eq!(q_poly(2, 0).unwrap(), uni(&[1, 1]));
        assert_eq!(q_poly(2, 1).unwrap(), uni(&[1]));
        assert_eq!(q_poly(2, 2).unwrap(), UniPolyX::zero());
        assert_eq!(q_poly(2, -1).unwrap(), UniPolyX::zero());
        assert!(q_poly(0, 0).is_err());
    }

    #[test]
    fn q_degrees() {
        let table = q_table(10);
        for (m, row) in table.iter().enumerate().skip(1) {
            for (k, q) in row.iter().enumerate().take(m) {
                assert_eq!(q.degree(), Some(m - k - 1), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_poly(0, 1).unwrap(), uni(&[1]));
        for m in 0..8 {
            assert_eq!(psi_poly(m, m + 1).unwrap().degree(), Some(0), "m={m}");
            let row = psi_row(m as usize);
            for k in 1..=m + 1 {
                assert_eq!(row[(k - 1) as usize], psi_poly(m, k).unwrap());
            }
        }
        assert!(psi_poly(2, 0).is_err());
        assert!(psi_poly(2, 4).is_err());
        assert!(psi_poly(-1, 1).is_err());
    }

    #[test]
    fn r_examples() {
        for route in [RRoute::TripleSum, RRoute::QRoute] {
            for m in 0..=2 {
                assert_eq!(r_poly(m, route).unwrap(), known_r(m as usize).unwrap());
            }
            assert!(r_poly(-1, route).is_err());
        }
    }

    #[test]
    fn r_routes_agree() {
        for m in 0..=12 {
            let r = check_r_routes(m).unwrap();
            assert!(r.passed(), "{r}");
            assert!(check_r_degrees(m).unwrap().passed());
        }
    }

    #[test]
    fn p_examples() {
        assert_eq!(p_poly(0).unwrap(), BiPoly::one());
        assert_eq!(p_poly(1).unwrap(), &BiPoly::x() + &BiPoly::u());
        for m in 0..=8i64 {
            let top = p_poly(m).unwrap().u_row(m as usize);
            let expected = assoc_stirling2(2 * m, m, AssocRoute::InclusionExclusion).unwrap();
            assert_eq!(top, UniPolyX::constant(expected), "m={m}");
        }
        assert!(p_poly(-2).is_err());
    }

    #[test]
    fn p_bridge() {
        for m in 0..=10 {
            assert!(check_p_r_bridge(m).unwrap().passed());
        }
    }

    #[test]
    fn pde_examples() {
        // m = 1: (x+1) - x on the left, [1 + (1+u)d/du] 1 = 1 on the right
        let p1 = p_poly(1).unwrap();
        assert_eq!(&p1.shift_x(&int(1)) - &p1, BiPoly::one());
        for m in 1..=10 {
            for r in check_pde_p(m).unwrap() {
                assert!(r.passed(), "{r}");
            }
            let p = p_poly(m).unwrap();
            let diff = &p.shift_x(&int(1)) - &p;
            assert_eq!(diff.coeff(m as usize, m as usize), int(0));
        }
        assert!(check_pde_p(0).is_err());
    }

    #[test]
    fn specials() {
        let r2 = r_poly(2, RRoute::TripleSum).unwrap();
        assert_eq!(r2.eval_x(&int(1)), uni(&[1, 2]));
        assert_eq!(
            r_poly(1, RRoute::QRoute).unwrap().eval_u(&int(1)),
            uni(&[1])
        );
        let r0 = r_poly(0, RRoute::QRoute).unwrap();
        assert_ne!(r0.eval_x(&int(0)), r0.eval_x(&int(1)).mul_x());
        let zero_reports = check_r_specials(0).unwrap();
        assert_eq!(zero_reports.len(), 4);
        for m in 0..=10 {
            for r in check_r_specials(m).unwrap() {
                assert!(r.passed(), "{r}");
            }
        }
        assert!(check_r_specials(-1).is_err());
    }

    #[test]
    fn family_invariants() {
        for m in 0..=6 {
            for route in [RRoute::TripleSum, RRoute::QRoute] {
                assert!(RamanujanFamily::compute(m, route)
                    .unwrap()
                    .invariants_hold());
            }
        }
        let bad = RamanujanFamily {
            m: 1,
            route: RRoute::QRoute,
            value: BiPoly::one(),
        };
        assert!(!bad.invariants_hold());
    }
}
