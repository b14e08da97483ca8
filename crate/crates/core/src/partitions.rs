//! Set partitions with prescribed numbers of singletons and of blocks of
//! size at least two, and the bijections that double-count
//! `sum_{j>i} C(j,i) p(m,k,j) = (k+1) p(m-1,k+1,i) + (m+k) p(m-1,k,i)`.
//!
//! * `Pi(m, k, i)`: partitions of `{1..m+k}` into `i` singletons and `k`
//!   blocks of size `>= 2`; its size is `p(m, k, i)`.
//! * `Pi0(m, k+1, i)`: partitions of `{0..m+k}` into `i` singletons and
//!   `k+1` blocks of size `>= 2`, the 0-block being one of them.
//! * `Omega`: pairs `(pi, T)` with `pi` in `Pi(m, k, j)` for some `j > i` and
//!   `T` a `(j-i)`-subset of the singletons of `pi`. [`phi`] sends `(pi, T)`
//!   to the partition with 0-block `{0} + T`.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numkernel::{binom_u, Integer};
use crate::report::VerifyReport;
use crate::triangles::p_count;

/// Default bound on the ground-set size of any enumeration.
pub const DEFAULT_CAP: usize = 12;

/// A partition in canonical form: blocks sorted internally and ordered by
/// their minimum element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    ground: Vec<u32>,
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn new(ground: Vec<u32>, blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut ground = ground;
        ground.sort_unstable();
        if ground.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedPartition("repeated ground element".into()));
        }
        let mut blocks: Vec<Vec<u32>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::MalformedPartition("empty block".into()));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let mut covered: Vec<u32> = blocks.iter().flatten().copied().collect();
        covered.sort_unstable();
        if covered != ground {
            return Err(Error::MalformedPartition(
                "blocks are not disjoint or do not cover the ground set".into(),
            ));
        }
        Ok(SetPartition { ground, blocks })
    }

    pub fn ground(&self) -> &[u32] {
        &self.ground
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// Elements lying in singleton blocks, ascending.
    pub fn singles(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .filter(|b| b.len() == 1)
            .map(|b| b[0])
            .collect()
    }

    pub fn singleton_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() == 1).count()
    }

    pub fn large_block_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() >= 2).count()
    }

    pub fn block_of(&self, e: u32) -> Option<&[u32]> {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&e).is_ok())
            .map(Vec::as_slice)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(s)
    }
}

/// Search state for restricted-growth generation.
struct Generator<'a> {
    ground: &'a [u32],
    singletons: usize,
    large: usize,
    pin_first: bool,
    blocks: Vec<Vec<u32>>,
    out: Vec<SetPartition>,
}

impl Generator<'_> {
    /// Whether the current prefix can still be completed with `remaining`
    /// unplaced elements.
    fn feasible(&self, remaining: usize) -> bool {
        let small = self.blocks.iter().filter(|b| b.len() == 1).count();
        let big = self.blocks.len() - small;
        let total = self.singletons + self.large;
        if self.blocks.len() > total || big > self.large {
            return false;
        }
        let new_blocks = total - self.blocks.len();
        let to_grow = self.large - big;
        let pin_small = self.pin_first && self.blocks.first().is_some_and(|b| b.len() == 1);
        // `grown` current singletons plus `to_grow - grown` new blocks become large
        let lo = (pin_small as usize).max(to_grow.saturating_sub(new_blocks));
        let hi = small.min(to_grow);
        if lo > hi {
            return false;
        }
        let needed = to_grow + new_blocks;
        remaining >= needed && (remaining == needed || self.large > 0)
    }

    fn run(&mut self, idx: usize) {
        if idx == self.ground.len() {
            let small = self.blocks.iter().filter(|b| b.len() == 1).count();
            let pin_ok = !self.pin_first || self.blocks.first().is_some_and(|b| b.len() >= 2);
            if small == self.singletons && self.blocks.len() - small == self.large && pin_ok {
                self.out.push(SetPartition {
                    ground: self.ground.to_vec(),
                    blocks: self.blocks.clone(),
                });
            }
            return;
        }
        let e = self.ground[idx];
        let remaining = self.ground.len() - idx - 1;
        for b in 0..self.blocks.len() {
            self.blocks[b].push(e);
            if self.feasible(remaining) {
                self.run(idx + 1);
            }
            self.blocks[b].pop();
        }
        self.blocks.push(vec![e]);
        if self.feasible(remaining) {
            self.run(idx + 1);
        }
        self.blocks.pop();
    }
}

/// All partitions of `ground` (sorted, distinct) into exactly `singletons`
/// singleton blocks and `large` blocks of size `>= 2`, in lexicographic
/// restricted-growth order. With `pin_first`, the smallest element must lie
/// in a large block.
pub fn enumerate_constrained(
    ground: &[u32],
    singletons: usize,
    large: usize,
    pin_first: bool,
) -> Vec<SetPartition> {
    let mut g = Generator {
        ground,
        singletons,
        large,
        pin_first,
        blocks: Vec::new(),
        out: Vec::new(),
    };
    if g.feasible(ground.len()) {
        g.run(0);
    }
    g.out
}

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { size, cap })
    } else {
        Ok(())
    }
}

fn require_positive(name: &'static str, value: usize) -> Result<()> {
    if value == 0 {
        Err(Error::OutOfRange {
            name,
            value: 0,
            range: ">= 1".into(),
        })
    } else {
        Ok(())
    }
}

/// `Pi(m, k, i)`.
pub fn enumerate_pi(m: usize, k: usize, i: usize, cap: usize) -> Result<Vec<SetPartition>> {
    check_cap(m + k, cap)?;
    let ground: Vec<u32> = (1..=(m + k) as u32).collect();
    Ok(enumerate_constrained(&ground, i, k, false))
}

/// `Pi0(m, k+1, i)`.
pub fn enumerate_pi0(m: usize, k_plus_1: usize, i: usize, cap: usize) -> Result<Vec<SetPartition>> {
    require_positive("m", m)?;
    require_positive("k_plus_1", k_plus_1)?;
    let k = k_plus_1 - 1;
    check_cap(m + k + 1, cap)?;
    let ground: Vec<u32> = (0..=(m + k) as u32).collect();
    Ok(enumerate_constrained(&ground, i, k_plus_1, true))
}

/// A member of `Omega`: a partition `pi` and a subset `t` of its singletons.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaElement {
    pub pi: SetPartition,
    pub t: Vec<u32>,
}

/// `Omega = union over j > i of Omega_j` for parameters `(m, k, i)`.
pub fn enumerate_omega(m: usize, k: usize, i: usize, cap: usize) -> Result<Vec<OmegaElement>> {
    check_cap(m + k + 1, cap)?;
    let mut out = Vec::new();
    for j in i + 1..=m + k {
        for pi in enumerate_pi(m, k, j, cap)? {
            for t in pi.singles().into_iter().combinations(j - i) {
                out.push(OmegaElement { pi: pi.clone(), t });
            }
        }
    }
    Ok(out)
}

/// Joins 0 to `T` to form the 0-block and keeps every other block of `pi`.
/// The result has `i` singletons exactly when `|Single(pi)| - |T| = i`.
pub fn phi(w: &OmegaElement, i: usize) -> Result<SetPartition> {
    let singles = w.pi.singles();
    if w.t.is_empty() || !w.t.iter().all(|e| singles.binary_search(e).is_ok()) {
        return Err(Error::NotSingletons);
    }
    if w.t.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::MalformedPartition(
            "T must be strictly increasing".into(),
        ));
    }
    if singles.len() - w.t.len() != i {
        return Err(Error::MalformedPartition(format!(
            "{} singletons minus |T| = {} does not leave {i}",
            singles.len(),
            w.t.len()
        )));
    }
    if w.pi.ground().contains(&0) {
        return Err(Error::MalformedPartition(
            "0 already in the ground set".into(),
        ));
    }
    let mut zero_block = vec![0];
    zero_block.extend(&w.t);
    let mut blocks = vec![zero_block];
    blocks.extend(
        w.pi.blocks()
            .iter()
            .filter(|b| !(b.len() == 1 && w.t.contains(&b[0])))
            .cloned(),
    );
    let mut ground = vec![0];
    ground.extend(w.pi.ground());
    SetPartition::new(ground, blocks)
}

/// Inverse of [`phi`]: `T` is the 0-block without 0, its elements return to
/// singletons.
pub fn phi_inverse(p: &SetPartition) -> Result<OmegaElement> {
    let zero_block = p
        .block_of(0)
        .ok_or_else(|| Error::MalformedPartition("0 is not in the ground set".into()))?;
    let t: Vec<u32> = zero_block[1..].to_vec();
    let mut blocks: Vec<Vec<u32>> = p.blocks()[1..].to_vec();
    blocks.extend(t.iter().map(|&e| vec![e]));
    let ground = p.ground()[1..].to_vec();
    Ok(OmegaElement {
        pi: SetPartition::new(ground, blocks)?,
        t,
    })
}

/// Order-preserving relabeling of `p` onto `{1..n}`.
fn relabel(p: &SetPartition) -> SetPartition {
    let index: BTreeMap<u32, u32> = p
        .ground()
        .iter()
        .enumerate()
        .map(|(pos, &e)| (e, pos as u32 + 1))
        .collect();
    let blocks = p
        .blocks()
        .iter()
        .map(|b| b.iter().map(|e| index[e]).collect())
        .collect();
    SetPartition::new(index.values().copied().collect(), blocks)
        .expect("relabeling preserves partition structure")
}

/// How a member of `Pi0` decomposes by the size of its 0-block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ZeroBlockCase {
    /// 0-block `{0, partner}`; `rest` is the remainder relabeled onto
    /// `{1..m+k-1}`, a member of `Pi(m-1, k, i)`.
    Doubleton { partner: u32, rest: SetPartition },
    /// 0-block `{0} + marked`, `|marked| >= 2`; removing 0 gives `rest` in
    /// `Pi(m-1, k+1, i)` with `marked` one of its large blocks.
    Large {
        rest: SetPartition,
        marked: Vec<u32>,
    },
}

pub fn split_zero_block(p: &SetPartition) -> Result<ZeroBlockCase> {
    let zero_block = p
        .block_of(0)
        .ok_or_else(|| Error::MalformedPartition("0 is not in the ground set".into()))?;
    let ground = p.ground()[1..].to_vec();
    match zero_block.len() {
        0 | 1 => Err(Error::MalformedPartition("0-block is a singleton".into())),
        2 => {
            let partner = zero_block[1];
            let rest_ground: Vec<u32> = ground.into_iter().filter(|&e| e != partner).collect();
            let rest = SetPartition::new(rest_ground, p.blocks()[1..].to_vec())?;
            Ok(ZeroBlockCase::Doubleton {
                partner,
                rest: relabel(&rest),
            })
        }
        _ => {
            let marked = zero_block[1..].to_vec();
            let mut blocks = p.blocks()[1..].to_vec();
            blocks.push(marked.clone());
            Ok(ZeroBlockCase::Large {
                rest: SetPartition::new(ground, blocks)?,
                marked,
            })
        }
    }
}

fn params(m: usize, k: usize, i: usize) -> [(&'static str, i64); 3] {
    [("m", m as i64), ("k", k as i64), ("i", i as i64)]
}

/// `|Pi(m, k, i)| = C(m+k, i) {m+k-i, k}_{>=2}`.
pub fn check_pi_count(m: usize, k: usize, i: usize, cap: usize) -> Result<VerifyReport> {
    let count = enumerate_pi(m, k, i, cap)?.len();
    let formula = p_count(m as i64, k as i64, i as i64);
    Ok(VerifyReport::from_mismatch(
        "pi-count",
        &params(m, k, i),
        (Integer::from(count) != formula)
            .then(|| format!("enumerated {count} != formula {formula}")),
    ))
}

/// Left sum, right sum and the enumerated size of `Pi0(m, k+1, i)` agree.
pub fn check_identity22(m: usize, k: usize, i: usize, cap: usize) -> Result<VerifyReport> {
    require_positive("m", m)?;
    let (mi, ki, ii) = (m as i64, k as i64, i as i64);
    let lhs: Integer = (ii + 1..=mi - ki)
        .map(|j| binom_u(j as usize, i) * p_count(mi, ki, j))
        .sum();
    let rhs = p_count(mi - 1, ki + 1, ii) * (ki + 1) + p_count(mi - 1, ki, ii) * (mi + ki);
    let count = Integer::from(enumerate_pi0(m, k + 1, i, cap)?.len());
    let mismatch =
        (lhs != rhs || rhs != count).then(|| format!("lhs {lhs}, rhs {rhs}, enumerated {count}"));
    Ok(VerifyReport::from_mismatch(
        "partition-double-count",
        &params(m, k, i),
        mismatch,
    ))
}

/// The doubleton / large 0-block split of `Pi0(m, k+1, i)` is a bijection
/// onto `{1..m+k} x Pi(m-1, k, i)` and onto marked members of
/// `Pi(m-1, k+1, i)` respectively.
pub fn check_zero_block_split(m: usize, k: usize, i: usize, cap: usize) -> Result<VerifyReport> {
    require_positive("m", m)?;
    let mut doubletons = BTreeSet::new();
    let mut large = BTreeSet::new();
    for p in enumerate_pi0(m, k + 1, i, cap)? {
        match split_zero_block(&p)? {
            ZeroBlockCase::Doubleton { partner, rest } => {
                doubletons.insert((partner, rest));
            }
            ZeroBlockCase::Large { rest, marked } => {
                large.insert((rest, marked));
            }
        }
    }
    let small_target: BTreeSet<(u32, SetPartition)> = enumerate_pi(m - 1, k, i, cap)?
        .into_iter()
        .flat_map(|pi| (1..=(m + k) as u32).map(move |a| (a, pi.clone())))
        .collect();
    let large_target: BTreeSet<(SetPartition, Vec<u32>)> = enumerate_pi(m - 1, k + 1, i, cap)?
        .into_iter()
        .flat_map(|pi| {
            pi.blocks()
                .iter()
                .filter(|b| b.len() >= 2)
                .map(|b| (pi.clone(), b.clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    let expected_small = p_count(m as i64 - 1, k as i64, i as i64) * (m + k);
    let expected_large = p_count(m as i64 - 1, k as i64 + 1, i as i64) * (k + 1);
    let mismatch = if doubletons != small_target {
        Some(format!(
            "doubleton images {} vs {} pairs",
            doubletons.len(),
            small_target.len()
        ))
    } else if large != large_target {
        Some(format!(
            "large 0-block images {} vs {} marked partitions",
            large.len(),
            large_target.len()
        ))
    } else if Integer::from(doubletons.len()) != expected_small
        || Integer::from(large.len()) != expected_large
    {
        Some(format!(
            "counts ({}, {}) vs formulas ({expected_small}, {expected_large})",
            doubletons.len(),
            large.len()
        ))
    } else {
        None
    };
    Ok(VerifyReport::from_mismatch(
        "zero-block-split",
        &params(m, k, i),
        mismatch,
    ))
}

/// `phi` is injective on `Omega`, lands in `Pi0(m, k+1, i)`, covers it, and
/// `phi_inverse` undoes it.
pub fn check_phi_bijection(m: usize, k: usize, i: usize, cap: usize) -> Result<VerifyReport> {
    require_positive("m", m)?;
    let omega = enumerate_omega(m, k, i, cap)?;
    let target: BTreeSet<SetPartition> = enumerate_pi0(m, k + 1, i, cap)?.into_iter().collect();
    let mut image = BTreeSet::new();
    let mut mismatch = None;
    for w in &omega {
        let p = phi(w, i)?;
        if phi_inverse(&p)? != *w {
            mismatch = Some(format!("roundtrip fails at {:?}", p.blocks()));
            break;
        }
        if !target.contains(&p) {
            mismatch = Some(format!("{:?} is not in Pi0", p.blocks()));
            break;
        }
        image.insert(p);
    }
    if mismatch.is_none() && image.len() != omega.len() {
        mismatch = Some(format!(
            "{} images from {} elements",
            image.len(),
            omega.len()
        ));
    }
    if mismatch.is_none() && image.len() != target.len() {
        mismatch = Some(format!("image {} vs Pi0 {}", image.len(), target.len()));
    }
    Ok(VerifyReport::from_mismatch(
        "phi-bijection",
        &params(m, k, i),
        mismatch,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(ground: &[u32], blocks: &[&[u32]]) -> SetPartition {
        SetPartition::new(ground.to_vec(), blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    /// Every set partition of `ground`, by brute-force block assignment.
    fn all_partitions(ground: &[u32]) -> Vec<SetPartition> {
        fn go(ground: &[u32], idx: usize, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<SetPartition>) {
            if idx == ground.len() {
                out.push(SetPartition::new(ground.to_vec(), blocks.clone()).unwrap());
                return;
            }
            for b in 0..blocks.len() {
                blocks[b].push(ground[idx]);
                go(ground, idx + 1, blocks, out);
                blocks[b].pop();
            }
            blocks.push(vec![ground[idx]]);
            go(ground, idx + 1, blocks, out);
            blocks.pop();
        }
        let mut out = Vec::new();
        go(ground, 0, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn canonical_form() {
        let a = part(&[3, 1, 2], &[&[3], &[2, 1]]);
        assert_eq!(a.blocks(), &[vec![1, 2], vec![3]]);
        assert_eq!(a, part(&[1, 2, 3], &[&[1, 2], &[3]]));
        assert!(SetPartition::new(vec![1, 2], vec![vec![1]]).is_err());
        assert!(SetPartition::new(vec![1, 2], vec![vec![1, 2], vec![2]]).is_err());
        assert!(SetPartition::new(vec![1], vec![vec![1], vec![]]).is_err());
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[1,2],[3]]");
    }

    #[test]
    fn pi_examples() {
        assert_eq!(
            enumerate_pi(1, 0, 1, DEFAULT_CAP).unwrap(),
            vec![part(&[1], &[&[1]])]
        );
        assert_eq!(
            enumerate_pi(1, 1, 0, DEFAULT_CAP).unwrap(),
            vec![part(&[1, 2], &[&[1, 2]])]
        );
        assert!(enumerate_pi(1, 1, 1, DEFAULT_CAP).unwrap().is_empty());
        assert_eq!(enumerate_pi(0, 0, 0, DEFAULT_CAP).unwrap().len(), 1);
        assert_eq!(
            enumerate_pi(7, 6, 0, DEFAULT_CAP),
            Err(Error::CapExceeded { size: 13, cap: 12 })
        );
    }

    #[test]
    fn pi0_examples() {
        assert_eq!(
            enumerate_pi0(1, 1, 0, DEFAULT_CAP).unwrap(),
            vec![part(&[0, 1], &[&[0, 1]])]
        );
        let two = enumerate_pi0(2, 1, 1, DEFAULT_CAP).unwrap();
        assert_eq!(
            two,
            vec![
                part(&[0, 1, 2], &[&[0, 1], &[2]]),
                part(&[0, 1, 2], &[&[0, 2], &[1]])
            ]
        );
        // 2(k+1) + i > m + k + 1 leaves nothing
        assert!(enumerate_pi0(2, 2, 1, DEFAULT_CAP).unwrap().is_empty());
        assert_eq!(enumerate_pi0(2, 2, 0, DEFAULT_CAP).unwrap().len(), 3);
        assert!(enumerate_pi0(3, 1, 3, DEFAULT_CAP).unwrap().is_empty());
        assert!(enumerate_pi0(0, 1, 0, DEFAULT_CAP).is_err());
        assert!(enumerate_pi0(1, 0, 0, DEFAULT_CAP).is_err());
        assert!(enumerate_pi0(6, 7, 0, DEFAULT_CAP).is_err());
    }

    #[test]
    fn generation_matches_filtered_brute_force() {
        for n in 0..=8u32 {
            let ground: Vec<u32> = (1..=n).collect();
            let all = all_partitions(&ground);
            for s in 0..=n as usize {
                for l in 0..=n as usize / 2 {
                    let mut expected: Vec<SetPartition> = all
                        .iter()
                        .filter(|p| p.singleton_count() == s && p.large_block_count() == l)
                        .cloned()
                        .collect();
                    expected.sort();
                    let mut got = enumerate_constrained(&ground, s, l, false);
                    got.sort();
                    assert_eq!(got, expected, "n={n} s={s} l={l}");
                    let mut pinned: Vec<SetPartition> = expected
                        .into_iter()
                        .filter(|p| n == 0 || p.blocks()[0].len() >= 2)
                        .collect();
                    pinned.sort();
                    let mut got = enumerate_constrained(&ground, s, l, true);
                    got.sort();
                    if n > 0 {
                        assert_eq!(got, pinned, "pinned n={n} s={s} l={l}");
                    }
                }
            }
        }
    }

    #[test]
    fn counts_match_formula() {
        for m in 0..=9 {
            for k in 0..=9 - m {
                for i in 0..=m + k {
                    let r = check_pi_count(m, k, i, DEFAULT_CAP).unwrap();
                    assert!(r.passed(), "{r}");
                }
            }
        }
    }

    #[test]
    fn phi_examples() {
        let w = OmegaElement {
            pi: part(&[1], &[&[1]]),
            t: vec![1],
        };
        assert_eq!(phi(&w, 0).unwrap(), part(&[0, 1], &[&[0, 1]]));
        let w = OmegaElement {
            pi: part(&[1, 2, 3, 4], &[&[1], &[2], &[3, 4]]),
            t: vec![1, 2],
        };
        let image = phi(&w, 0).unwrap();
        assert_eq!(image, part(&[0, 1, 2, 3, 4], &[&[0, 1, 2], &[3, 4]]));
        assert_eq!(phi_inverse(&image).unwrap(), w);
        let bad = OmegaElement {
            pi: part(&[1, 2, 3, 4], &[&[1], &[2], &[3, 4]]),
            t: vec![3],
        };
        assert_eq!(phi(&bad, 1), Err(Error::NotSingletons));
        assert!(phi(&w, 1).is_err());
    }

    #[test]
    fn identity22_examples() {
        let r = check_identity22(1, 0, 0, DEFAULT_CAP).unwrap();
        assert!(r.passed(), "{r}");
        assert!(check_identity22(2, 0, 1, DEFAULT_CAP).unwrap().passed());
        assert_eq!(enumerate_pi0(2, 1, 1, DEFAULT_CAP).unwrap().len(), 2);
        for m in 1..=5 {
            for k in 0..m {
                for i in 0..=m - k {
                    for check in [
                        check_identity22,
                        check_zero_block_split,
                        check_phi_bijection,
                    ] {
                        let r = check(m, k, i, DEFAULT_CAP).unwrap();
                        assert!(r.passed(), "{r}");
                    }
                }
            }
        }
        assert!(check_identity22(0, 0, 0, DEFAULT_CAP).is_err());
    }

    #[test]
    fn zero_block_cases() {
        let p = part(&[0, 1, 2, 3], &[&[0, 2], &[1, 3]]);
        assert_eq!(
            split_zero_block(&p).unwrap(),
            ZeroBlockCase::Doubleton {
                partner: 2,
                rest: part(&[1, 2], &[&[1, 2]]),
            }
        );
        let q = part(&[0, 1, 2, 3], &[&[0, 1, 3], &[2]]);
        assert_eq!(
            split_zero_block(&q).unwrap(),
            ZeroBlockCase::Large {
                rest: part(&[1, 2, 3], &[&[1, 3], &[2]]),
                marked: vec![1, 3],
            }
        );
        assert!(split_zero_block(&part(&[0, 1], &[&[0], &[1]])).is_err());
    }
}
