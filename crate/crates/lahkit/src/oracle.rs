//! Brute-force combinatorial ground truth.
//!
//! Set partitions of `{1..n}` into `k` blocks are enumerated as restricted
//! growth strings; linear or cyclic orderings inside blocks are accounted for
//! by multiplicative weights instead of being enumerated, so a partition into
//! lists of sizes `b_1, ..., b_k` contributes `b_1! * ... * b_k!` in one step.
//! Grouping the weights by the set of block minima reproduces every
//! combinatorial triangle family as a sum of `s`-th powers.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::numbers::{Level, TriangleKind};
use crate::{Error, Result};

/// Hard bound on enumeration size; the partition count grows like the Bell
/// numbers and n = 13 is already beyond desk scale.
pub const MAX_ENUMERATION_N: usize = 12;

/// How the elements inside a block are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockWeighting {
    /// Linearly ordered blocks: a block of size `b` counts `b!` times.
    Lists,
    /// Cyclically ordered blocks: a block of size `b` counts `(b - 1)!` times.
    Cycles,
    /// Unordered blocks: weight 1.
    Sets,
}

/// Weighted partition counts grouped by the set of block minima.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LeaderProfile {
    entries: BTreeMap<Vec<usize>, BigUint>,
}

impl LeaderProfile {
    /// Aggregated weights keyed by sorted leader set.
    pub fn entries(&self) -> &BTreeMap<Vec<usize>, BigUint> {
        &self.entries
    }

    /// Weight accumulated for one leader set (zero if absent).
    pub fn weight(&self, leaders: &[usize]) -> BigUint {
        self.entries.get(leaders).cloned().unwrap_or_default()
    }

    /// Total weighted partition count, `sum_g`.
    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// `sum g^s` over all leader sets: the number of ordered `s`-tuples of
    /// partitions sharing a leader set.
    pub fn power_sum(&self, s: Level) -> BigUint {
        self.entries
            .values()
            .map(|g| num_traits::pow(g.clone(), s.get() as usize))
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn add(&mut self, leaders: &[usize], weight: u64) {
        *self.entries.entry(leaders.to_vec()).or_default() += BigUint::from(weight);
    }
}

/// Walks every set partition of `{1..n}` into exactly `k` blocks in which no
/// two of the elements `1..=restricted` share a block, calling `emit` with
/// the sorted block minima and the partition's weight under `w`.
fn walk_partitions(
    n: usize,
    k: usize,
    w: BlockWeighting,
    restricted: usize,
    emit: &mut impl FnMut(&[usize], u64),
) {
    // minima[j] is the element that opened block j; blocks are created in
    // increasing order of their minima, so the vector stays sorted.
    fn descend(
        element: usize,
        n: usize,
        k: usize,
        w: BlockWeighting,
        restricted: usize,
        sizes: &mut Vec<usize>,
        minima: &mut Vec<usize>,
        weight: u64,
        emit: &mut impl FnMut(&[usize], u64),
    ) {
        if element > n {
            if sizes.len() == k {
                emit(minima, weight);
            }
            return;
        }
        let blocks = sizes.len();
        let remaining = n - element + 1;
        // Join an existing block, unless this element is itself restricted
        // (elements 1..=restricted must all open their own block).
        if element > restricted && blocks + remaining > k {
            for j in 0..blocks {
                let factor = match w {
                    BlockWeighting::Lists => (sizes[j] + 1) as u64,
                    BlockWeighting::Cycles => sizes[j] as u64,
                    BlockWeighting::Sets => 1,
                };
                sizes[j] += 1;
                descend(element + 1, n, k, w, restricted, sizes, minima, weight * factor, emit);
                sizes[j] -= 1;
            }
        }
        // Open a new block.
        if blocks < k {
            sizes.push(1);
            minima.push(element);
            descend(element + 1, n, k, w, restricted, sizes, minima, weight, emit);
            sizes.pop();
            minima.pop();
        }
    }
    descend(1, n, k, w, restricted, &mut Vec::new(), &mut Vec::new(), 1, emit);
}

fn check_bound(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_N {
        Err(Error::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_N,
        })
    } else {
        Ok(())
    }
}

/// Enumerates all partitions of `{1..n}` into `k` blocks, discarding those in
/// which two of the elements `1..=r` share a block, and aggregates the block
/// weights by leader set. Infeasible inputs yield an empty profile; for
/// `r <= 1` the restriction is vacuous.
pub fn enumerate_profiles(
    n: usize,
    k: usize,
    w: BlockWeighting,
    r: usize,
) -> Result<LeaderProfile> {
    check_bound(n)?;
    let mut profile = LeaderProfile::default();
    if k > n || (r >= 2 && k < r) {
        return Ok(profile);
    }
    let restricted = if r >= 2 { r.min(n) } else { 0 };
    walk_partitions(n, k, w, restricted, &mut |leaders, weight| {
        profile.add(leaders, weight);
    });
    Ok(profile)
}

/// Recomputes a combinatorial triangle entry as `sum g^s` over the leader
/// profile. The Lah numbers of order `s` have no such interpretation and are
/// rejected; they are checked through their Stirling-product definition
/// instead.
pub fn oracle_count(kind: TriangleKind, n: usize, k: usize, s: Level) -> Result<BigUint> {
    let (w, r) = match kind {
        TriangleKind::LahHl => (BlockWeighting::Lists, 0),
        TriangleKind::StirlingFirstHl => (BlockWeighting::Cycles, 0),
        TriangleKind::StirlingSecondHl => (BlockWeighting::Sets, 0),
        TriangleKind::LrLah { r } => (BlockWeighting::Lists, r),
        TriangleKind::LahOrderS => {
            return Err(Error::UnsupportedKind {
                op: "oracle_count",
                kind,
            })
        }
    };
    Ok(enumerate_profiles(n, k, w, r)?.power_sum(s))
}

/// Total weighted partition count without leader grouping: the classical Lah,
/// unsigned Stirling-first or Stirling-second number depending on `w`.
pub fn classic_count(n: usize, k: usize, w: BlockWeighting) -> Result<BigUint> {
    check_bound(n)?;
    let mut total = BigUint::zero();
    if k > n {
        return Ok(total);
    }
    walk_partitions(n, k, w, 0, &mut |_, weight| {
        total += BigUint::from(weight);
    });
    Ok(total)
}
