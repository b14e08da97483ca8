//! Number triangles: Stirling numbers of the second kind `S(n, k)`,
//! 2-associated Stirling numbers `{n, k}_{>=2}` (partitions into `k` blocks,
//! each of size at least two) and second-order Eulerian numbers `<<m, k>>`.
//!
//! Row recurrences fill a [`TriangleTable`]; the closed-form routes are
//! computed independently so the two can be compared.
//!
//! Queries through [`stirling2`], [`assoc_stirling2`] and [`eulerian2`] share a
//! process-wide memo per family. A table grows only by whole rows under a
//! write lock, so a reader never observes a partially filled row.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::numkernel::{binom_u, factorial, nonneg, ExactText, Integer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Stirling2,
    AssocStirling2,
    Eulerian2,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Stirling2 => "stirling2",
            Family::AssocStirling2 => "assoc_stirling2",
            Family::Eulerian2 => "eulerian2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingRoute {
    Recurrence,
    Explicit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssocRoute {
    Recurrence,
    InclusionExclusion,
}

/// Rows `0..=max_n` of one triangle. Row `n` stores `k = 0..=n`; every other
/// index reads as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable {
    family: Family,
    rows: Vec<Vec<Integer>>,
}

impl TriangleTable {
    /// A table holding only row 0, which is `[1]` for all three families.
    pub fn new(family: Family) -> Self {
        TriangleTable {
            family,
            rows: vec![vec![Integer::one()]],
        }
    }

    pub fn build(family: Family, max_n: usize) -> Self {
        let mut table = Self::new(family);
        table.extend_to(max_n);
        table
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Option<&[Integer]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// Entry `(n, k)`; zero outside the support. Panics if row `n` has not
    /// been computed yet.
    pub fn get(&self, n: usize, k: i64) -> Integer {
        let row = &self.rows[n];
        if k < 0 {
            return Integer::zero();
        }
        row.get(k as usize).cloned().unwrap_or_else(Integer::zero)
    }

    /// Appends rows until `max_n` is present. Existing rows are untouched.
    pub fn extend_to(&mut self, max_n: usize) {
        while self.rows.len() <= max_n {
            let n = self.rows.len();
            let row = self.next_row(n);
            self.rows.push(row);
        }
    }

    fn next_row(&self, n: usize) -> Vec<Integer> {
        let prev = |k: i64| self.get(n - 1, k);
        (0..=n as i64)
            .map(|k| match self.family {
                Family::Stirling2 => prev(k) * k + prev(k - 1),
                Family::AssocStirling2 => {
                    let older = if n >= 2 {
                        self.get(n - 2, k - 1) * (n - 1)
                    } else {
                        Integer::zero()
                    };
                    prev(k) * k + older
                }
                Family::Eulerian2 => prev(k) * (k + 1) + prev(k - 1) * (2 * n as i64 - k - 1),
            })
            .collect()
    }

    /// One line per row, entries separated by commas.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(ExactText::to_text).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// OEIS b-file: `index value` per entry, reading the triangle row by row.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (index, value) in self.rows.iter().flatten().enumerate() {
            out.push_str(&format!("{index} {}\n", value.to_text()));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ExactText::to_text).collect())
            .collect();
        serde_json::json!({
            "family": self.family.name(),
            "max_n": self.max_n(),
            "rows": rows,
        })
    }
}

fn shared(family: Family) -> &'static RwLock<TriangleTable> {
    static STIRLING2: OnceLock<RwLock<TriangleTable>> = OnceLock::new();
    static ASSOC: OnceLock<RwLock<TriangleTable>> = OnceLock::new();
    static EULERIAN2: OnceLock<RwLock<TriangleTable>> = OnceLock::new();
    let cell = match family {
        Family::Stirling2 => &STIRLING2,
        Family::AssocStirling2 => &ASSOC,
        Family::Eulerian2 => &EULERIAN2,
    };
    cell.get_or_init(|| RwLock::new(TriangleTable::new(family)))
}

/// Memoized recurrence value for `(n, k)`; zero outside the support.
pub fn memo_entry(family: Family, n: usize, k: i64) -> Integer {
    let lock = shared(family);
    {
        let table = lock.read().unwrap_or_else(|e| e.into_inner());
        if table.max_n() >= n {
            return table.get(n, k);
        }
    }
    let mut table = lock.write().unwrap_or_else(|e| e.into_inner());
    table.extend_to(n);
    table.get(n, k)
}

/// Snapshot of the memoized rows `0..=max_n`.
pub fn memo_table(family: Family, max_n: usize) -> TriangleTable {
    memo_entry(family, max_n, 0);
    let table = shared(family).read().unwrap_or_else(|e| e.into_inner());
    TriangleTable {
        family,
        rows: table.rows[..=max_n].to_vec(),
    }
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: i64, k: i64, route: StirlingRoute) -> Result<Integer> {
    let n = nonneg("n", n)?;
    if k < 0 || k as usize > n {
        return Ok(Integer::zero());
    }
    Ok(match route {
        StirlingRoute::Recurrence => memo_entry(Family::Stirling2, n, k),
        StirlingRoute::Explicit => stirling2_explicit(n, k as usize),
    })
}

/// `S(n, k) = (1/k!) sum_i (-1)^(k-i) C(k, i) i^n`, with `0^0 = 1`.
fn stirling2_explicit(n: usize, k: usize) -> Integer {
    let mut sum = Integer::zero();
    for i in 0..=k {
        let term = binom_u(k, i) * num_traits::pow(Integer::from(i), n);
        if (k - i).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum / factorial(k)
}

/// 2-associated Stirling number `{n, k}_{>=2}`.
///
/// The recurrence route uses
/// `{n, k} = k {n-1, k} + (n-1) {n-2, k-1}`; the inclusion-exclusion route
/// uses `sum_j (-1)^j C(n, j) S(n-j, k-j)`.
pub fn assoc_stirling2(n: i64, k: i64, route: AssocRoute) -> Result<Integer> {
    let n = nonneg("n", n)?;
    // 2k > n is left to each route: both must produce the zero themselves
    if k < 0 || k as usize > n {
        return Ok(Integer::zero());
    }
    let k = k as usize;
    Ok(match route {
        AssocRoute::Recurrence => memo_entry(Family::AssocStirling2, n, k as i64),
        AssocRoute::InclusionExclusion => {
            let mut sum = Integer::zero();
            for j in 0..=k {
                let term = binom_u(n, j) * memo_entry(Family::Stirling2, n - j, (k - j) as i64);
                if j % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            sum
        }
    })
}

/// Second-order Eulerian number `<<m, k>>`, zero when `k < 0` or `k > m`.
pub fn eulerian2(m: i64, k: i64) -> Result<Integer> {
    let m = nonneg("m", m)?;
    Ok(memo_entry(Family::Eulerian2, m, k))
}

/// Count of partitions of an `m+k`-set into `i` singletons and `k` blocks of
/// size at least two: `C(m+k, i) {m+k-i, k}_{>=2}`. Zero when any index is
/// negative.
pub fn p_count(m: i64, k: i64, i: i64) -> Integer {
    if m < 0 || k < 0 || i < 0 || i > m + k {
        return Integer::zero();
    }
    let n = (m + k) as usize;
    binom_u(n, i as usize) * memo_entry(Family::AssocStirling2, n - i as usize, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::{double_factorial_odd, int};

    /// Brute-force count of partitions of `{0..n}` into `k` blocks with every
    /// block of size at least `min_size`, by assigning elements to blocks in
    /// restricted-growth order.
    fn count_partitions(n: usize, k: usize, min_size: usize) -> u64 {
        fn go(e: usize, n: usize, k: usize, min: usize, sizes: &mut Vec<usize>) -> u64 {
            if e == n {
                return (sizes.len() == k && sizes.iter().all(|&s| s >= min)) as u64;
            }
            let mut total = 0;
            for b in 0..sizes.len() {
                sizes[b] += 1;
                total += go(e + 1, n, k, min, sizes);
                sizes[b] -= 1;
            }
            if sizes.len() < k {
                sizes.push(1);
                total += go(e + 1, n, k, min, sizes);
                sizes.pop();
            }
            total
        }
        go(0, n, k, min_size, &mut Vec::new())
    }

    #[test]
    fn stirling2_examples() {
        for route in [StirlingRoute::Recurrence, StirlingRoute::Explicit] {
            assert_eq!(stirling2(0, 0, route).unwrap(), int(1));
            for n in 1..15 {
                assert_eq!(stirling2(n, 1, route).unwrap(), int(1));
            }
            assert_eq!(stirling2(4, 2, route).unwrap(), int(7));
            assert_eq!(stirling2(4, 5, route).unwrap(), int(0));
            assert_eq!(stirling2(4, -1, route).unwrap(), int(0));
            assert!(stirling2(-1, 0, route).is_err());
        }
        assert_eq!(count_partitions(4, 2, 1), 7);
    }

    #[test]
    fn stirling2_routes_agree() {
        for n in 0..=60 {
            for k in 0..=n {
                assert_eq!(
                    stirling2(n, k, StirlingRoute::Recurrence).unwrap(),
                    stirling2(n, k, StirlingRoute::Explicit).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn assoc_examples() {
        for route in [AssocRoute::Recurrence, AssocRoute::InclusionExclusion] {
            assert_eq!(assoc_stirling2(0, 0, route).unwrap(), int(1));
            assert_eq!(assoc_stirling2(0, 1, route).unwrap(), int(0));
            assert_eq!(assoc_stirling2(3, 2, route).unwrap(), int(0));
            assert_eq!(assoc_stirling2(4, 2, route).unwrap(), int(3));
            assert_eq!(assoc_stirling2(4, 7, route).unwrap(), int(0));
            assert!(assoc_stirling2(-3, 0, route).is_err());
        }
        assert_eq!(count_partitions(4, 2, 2), 3);
    }

    #[test]
    fn assoc_routes_agree_and_match_brute_force() {
        for n in 0..=60 {
            for k in 0..=60 {
                assert_eq!(
                    assoc_stirling2(n, k, AssocRoute::Recurrence).unwrap(),
                    assoc_stirling2(n, k, AssocRoute::InclusionExclusion).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
        for n in 0..=9usize {
            for k in 0..=n {
                let v = assoc_stirling2(n as i64, k as i64, AssocRoute::Recurrence).unwrap();
                assert_eq!(v, Integer::from(count_partitions(n, k, 2)), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn eulerian2_examples() {
        assert_eq!(eulerian2(0, 0).unwrap(), int(1));
        assert_eq!(eulerian2(1, 1).unwrap(), int(0));
        let row2: Vec<Integer> = (0..=2).map(|k| eulerian2(2, k).unwrap()).collect();
        assert_eq!(row2, vec![int(1), int(2), int(0)]);
        assert_eq!(eulerian2(2, 3).unwrap(), int(0));
        assert_eq!(eulerian2(2, -1).unwrap(), int(0));
        assert!(eulerian2(-1, 0).is_err());
    }

    #[test]
    fn eulerian2_row_sums_are_odd_double_factorials() {
        for m in 0..=15i64 {
            let sum: Integer = (0..=m).map(|k| eulerian2(m, k).unwrap()).sum();
            assert_eq!(sum, double_factorial_odd(m).unwrap(), "m={m}");
        }
    }

    #[test]
    fn table_exports() {
        let t = TriangleTable::build(Family::AssocStirling2, 4);
        assert_eq!(t.to_csv().lines().last(), Some("0,1,3,0,0"));
        let e = TriangleTable::build(Family::Eulerian2, 2);
        assert_eq!(e.to_csv(), "1\n1,0\n1,2,0\n");
        assert_eq!(e.to_bfile(), "0 1\n1 1\n2 0\n3 1\n4 2\n5 0\n");
        let s = TriangleTable::build(Family::Stirling2, 0);
        assert_eq!(s.to_csv(), "1\n");
        assert_eq!(s.to_json()["rows"][0][0], "1");
    }

    #[test]
    fn extend_keeps_existing_rows() {
        let mut t = TriangleTable::build(Family::Stirling2, 5);
        let before = t.rows().to_vec();
        t.extend_to(3);
        assert_eq!(t.rows(), before.as_slice());
        t.extend_to(9);
        assert_eq!(&t.rows()[..=5], before.as_slice());
        assert_eq!(t, TriangleTable::build(Family::Stirling2, 9));
    }

    #[test]
    fn concurrent_memo_readers_see_whole_rows() {
        let fresh = TriangleTable::build(Family::Eulerian2, 80);
        std::thread::scope(|s| {
            for t in 0..8 {
                let fresh = &fresh;
                s.spawn(move || {
                    for n in (0..=80usize).rev().skip(t) {
                        for k in 0..=n as i64 {
                            assert_eq!(memo_entry(Family::Eulerian2, n, k), fresh.get(n, k));
                        }
                    }
                });
            }
        });
        assert_eq!(memo_table(Family::Eulerian2, 80), fresh);
    }
}
