//! Batches of identity checks over a parameter range.
//!
//! Instances run on the rayon pool; reports come back in a fixed order
//! (suite, then identity family, then parameters) whatever the completion
//! order, so output is reproducible byte for byte.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numkernel::{double_factorial_odd, Integer};
use crate::partitions::{
    check_identity22, check_phi_bijection, check_pi_count, check_zero_block_split,
    enumerate_constrained,
};
use crate::ramanujan::{
    check_p_r_bridge, check_pde_p, check_r_degrees, check_r_known, check_r_routes, check_r_specials,
};
use crate::report::VerifyReport;
use crate::series::{
    check_allied, check_g_recurrence, check_series_bridges, check_tree_functional, Allied,
};
use crate::triangles::{assoc_stirling2, eulerian2, stirling2, AssocRoute, StirlingRoute};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Triangles,
    Ramanujan,
    Series,
    Partitions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_m: usize,
    /// Truncation order for every series check.
    pub order: usize,
    /// Largest ground set any enumeration may use.
    pub cap: usize,
}

type Job = Box<dyn Fn() -> Result<Vec<VerifyReport>> + Send + Sync>;

fn one(r: Result<VerifyReport>) -> Result<Vec<VerifyReport>> {
    r.map(|r| vec![r])
}

fn triangle_jobs(cfg: SuiteConfig) -> Vec<Job> {
    let max_n = 2 * cfg.max_m;
    let mut jobs: Vec<Job> = Vec::new();
    for n in 0..=max_n as i64 {
        jobs.push(Box::new(move || {
            let mismatch = (0..=n).find_map(|k| {
                let a = stirling2(n, k, StirlingRoute::Recurrence).ok()?;
                let b = stirling2(n, k, StirlingRoute::Explicit).ok()?;
                (a != b).then(|| format!("k={k}: {a} != {b}"))
            });
            Ok(vec![VerifyReport::from_mismatch(
                "stirling2-routes",
                &[("n", n)],
                mismatch,
            )])
        }));
    }
    for n in 0..=max_n as i64 {
        jobs.push(Box::new(move || {
            let mismatch = (0..=n).find_map(|k| {
                let a = assoc_stirling2(n, k, AssocRoute::Recurrence).ok()?;
                let b = assoc_stirling2(n, k, AssocRoute::InclusionExclusion).ok()?;
                (a != b).then(|| format!("k={k}: {a} != {b}"))
            });
            Ok(vec![VerifyReport::from_mismatch(
                "assoc-stirling2-routes",
                &[("n", n)],
                mismatch,
            )])
        }));
    }
    for n in 0..=max_n.min(cfg.cap) {
        jobs.push(Box::new(move || {
            let ground: Vec<u32> = (1..=n as u32).collect();
            let mismatch = (0..=n).find_map(|k| {
                let count = enumerate_constrained(&ground, 0, k, false).len();
                let value = assoc_stirling2(n as i64, k as i64, AssocRoute::Recurrence).ok()?;
                (Integer::from(count) != value).then(|| format!("k={k}: {count} != {value}"))
            });
            Ok(vec![VerifyReport::from_mismatch(
                "assoc-stirling2-enumeration",
                &[("n", n as i64)],
                mismatch,
            )])
        }));
    }
    for m in 0..=cfg.max_m as i64 {
        jobs.push(Box::new(move || {
            let sum: Integer = (0..=m).map(|k| eulerian2(m, k)).sum::<Result<Integer>>()?;
            let expected = double_factorial_odd(m)?;
            Ok(vec![VerifyReport::from_mismatch(
                "eulerian2-row-sum",
                &[("m", m)],
                (sum != expected).then(|| format!("{sum} != {expected}")),
            )])
        }));
    }
    jobs
}

fn ramanujan_jobs(cfg: SuiteConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for m in 0..=cfg.max_m.min(2) as i64 {
        jobs.push(Box::new(move || {
            Ok(check_r_known(m)?.into_iter().collect())
        }));
    }
    for m in 0..=cfg.max_m as i64 {
        jobs.push(Box::new(move || one(check_r_routes(m))));
        jobs.push(Box::new(move || one(check_r_degrees(m))));
        jobs.push(Box::new(move || one(check_p_r_bridge(m))));
        jobs.push(Box::new(move || check_r_specials(m)));
    }
    for m in 1..=cfg.max_m as i64 {
        jobs.push(Box::new(move || check_pde_p(m)));
    }
    jobs
}

fn series_jobs(cfg: SuiteConfig) -> Vec<Job> {
    let order = cfg.order;
    let mut jobs: Vec<Job> = vec![
        Box::new(move || one(check_tree_functional(order))),
        Box::new(move || one(check_allied(order, Allied::U1))),
        Box::new(move || one(check_allied(order, Allied::U2))),
    ];
    for m in 0..=cfg.max_m as i64 {
        jobs.push(Box::new(move || check_series_bridges(m, order)));
    }
    for m in 1..=cfg.max_m as i64 {
        jobs.push(Box::new(move || one(check_g_recurrence(m, order))));
    }
    jobs
}

fn partition_jobs(cfg: SuiteConfig) -> Vec<Job> {
    let cap = cfg.cap;
    let mut jobs: Vec<Job> = Vec::new();
    for m in 1..=cfg.max_m {
        for k in 0..m {
            for i in 0..=m - k {
                jobs.push(Box::new(move || {
                    Ok(vec![
                        check_identity22(m, k, i, cap)?,
                        check_zero_block_split(m, k, i, cap)?,
                        check_phi_bijection(m, k, i, cap)?,
                        check_pi_count(m, k, i, cap)?,
                    ])
                }));
            }
        }
    }
    jobs
}

fn validate(suite: Suite, cfg: SuiteConfig) -> Result<()> {
    let series = matches!(suite, Suite::All | Suite::Series);
    let partitions = matches!(suite, Suite::All | Suite::Partitions);
    if series && cfg.order == 0 {
        return Err(Error::OutOfRange {
            name: "order",
            value: 0,
            range: ">= 1".into(),
        });
    }
    // largest Pi0 ground set is {0..2m-1}
    if partitions && 2 * cfg.max_m > cfg.cap {
        return Err(Error::CapExceeded {
            size: 2 * cfg.max_m,
            cap: cfg.cap,
        });
    }
    Ok(())
}

/// Runs every check in `suite` and returns the reports in canonical order.
pub fn run(suite: Suite, cfg: SuiteConfig) -> Result<Vec<VerifyReport>> {
    validate(suite, cfg)?;
    let jobs: Vec<Job> = match suite {
        Suite::All => [
            triangle_jobs(cfg),
            ramanujan_jobs(cfg),
            series_jobs(cfg),
            partition_jobs(cfg),
        ]
        .into_iter()
        .flatten()
        .collect(),
        Suite::Triangles => triangle_jobs(cfg),
        Suite::Ramanujan => ramanujan_jobs(cfg),
        Suite::Series => series_jobs(cfg),
        Suite::Partitions => partition_jobs(cfg),
    };
    let batches: Vec<Vec<VerifyReport>> =
        jobs.par_iter().map(|job| job()).collect::<Result<_>>()?;
    Ok(batches.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(max_m: usize, order: usize) -> SuiteConfig {
        SuiteConfig {
            max_m,
            order,
            cap: crate::partitions::DEFAULT_CAP,
        }
    }

    #[test]
    fn small_suites_pass() {
        for suite in [
            Suite::Triangles,
            Suite::Ramanujan,
            Suite::Series,
            Suite::Partitions,
        ] {
            let reports = run(suite, cfg(3, 6)).unwrap();
            assert!(!reports.is_empty());
            for r in &reports {
                assert!(r.passed(), "{r}");
            }
        }
        let degenerate = run(Suite::All, cfg(0, 4)).unwrap();
        assert!(degenerate.iter().all(VerifyReport::passed));
    }

    #[test]
    fn deterministic_order() {
        let a = run(Suite::All, cfg(3, 5)).unwrap();
        let b = run(Suite::All, cfg(3, 5)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[0].identity, "stirling2-routes");
    }

    #[test]
    fn bad_bounds() {
        assert!(run(Suite::Series, cfg(1, 0)).is_err());
        assert!(run(Suite::Partitions, cfg(7, 4)).is_err());
        assert!(run(Suite::Ramanujan, cfg(7, 0)).is_ok());
    }
}
