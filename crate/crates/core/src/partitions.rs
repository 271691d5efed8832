//! Brute-force partition statistics: rank, crank, `NT(r,m,n)` and `M_ω(r,m,n)`.
//!
//! Enumeration is visitor-based (descending parts, one reused buffer), so
//! nothing proportional to `p(n)` is ever materialised.

use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts `parts` descending; rejects zero parts.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn stats(&self) -> StatsRecord {
        stats_of(&self.parts)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StatsRecord {
    pub rank: i64,
    pub crank: i64,
    pub num_parts: u64,
    pub num_ones: u64,
}

/// Statistics of a descending part list.
///
/// Crank follows the combinatorial definition: the largest part when there are
/// no ones, otherwise (#parts larger than the number of ones) - (number of ones).
/// In particular crank((1)) = -1 and the empty partition has crank 0.
pub fn stats_of(parts: &[u32]) -> StatsRecord {
    let largest = parts.first().copied().unwrap_or(0) as i64;
    let num_parts = parts.len() as u64;
    let num_ones = parts.iter().rev().take_while(|&&p| p == 1).count() as u64;
    let crank = if num_ones == 0 {
        largest
    } else {
        let mu = parts.iter().take_while(|&&p| p as u64 > num_ones).count() as i64;
        mu - num_ones as i64
    };
    StatsRecord {
        rank: largest - num_parts as i64,
        crank,
        num_parts,
        num_ones,
    }
}

pub fn stats(p: &Partition) -> StatsRecord {
    p.stats()
}

/// Calls `visit` with every partition of `n` (descending parts), exactly once.
pub fn for_each_partition<F: FnMut(&[u32])>(n: u32, mut visit: F) {
    let mut buf = Vec::with_capacity(n as usize);
    recurse(n, n, &mut buf, &mut visit);
}

/// Partitions of `n` whose largest part is exactly `first`.
pub fn for_each_partition_with_first<F: FnMut(&[u32])>(n: u32, first: u32, mut visit: F) {
    if first == 0 || first > n {
        if n == 0 && first == 0 {
            visit(&[]);
        }
        return;
    }
    let mut buf = Vec::with_capacity(n as usize);
    buf.push(first);
    recurse(n - first, first, &mut buf, &mut visit);
}

fn recurse<F: FnMut(&[u32])>(rest: u32, max: u32, buf: &mut Vec<u32>, visit: &mut F) {
    if rest == 0 {
        visit(buf);
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        buf.push(p);
        recurse(rest - p, p, buf, visit);
        buf.pop();
    }
}

/// Collects partitions of `n`; for small `n` and tests only.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, |p| out.push(Partition { parts: p.to_vec() }));
    out
}

/// Per-`n` aggregates from which every `NT` and `M_ω` value is read off.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Aggregates {
    pub n: u32,
    pub count: u64,
    /// `parts_by_rank[rank + n]` = total number of parts over partitions with that rank.
    pub parts_by_rank: Vec<u64>,
    /// `ones_by_crank[crank + n]` = total number of ones over partitions with that crank.
    pub ones_by_crank: Vec<u64>,
}

impl Aggregates {
    pub fn compute(n: u32) -> Self {
        let width = 2 * n as usize + 1;
        let combine = |mut a: Self, b: Self| {
            a.count += b.count;
            for (x, y) in a.parts_by_rank.iter_mut().zip(b.parts_by_rank) {
                *x += y;
            }
            for (x, y) in a.ones_by_crank.iter_mut().zip(b.ones_by_crank) {
                *x += y;
            }
            a
        };
        let empty = || Self {
            n,
            count: 0,
            parts_by_rank: vec![0; width],
            ones_by_crank: vec![0; width],
        };
        if n == 0 {
            let mut agg = empty();
            agg.count = 1;
            return agg;
        }
        // shard by largest part
        (1..=n)
            .into_par_iter()
            .map(|first| {
                let mut agg = empty();
                for_each_partition_with_first(n, first, |p| {
                    let s = stats_of(p);
                    agg.count += 1;
                    agg.parts_by_rank[(s.rank + n as i64) as usize] += s.num_parts;
                    agg.ones_by_crank[(s.crank + n as i64) as usize] += s.num_ones;
                });
                agg
            })
            .reduce(empty, combine)
    }

    pub fn nt(&self, r: i64, m: i64) -> u64 {
        residue_sum(&self.parts_by_rank, self.n, r, m)
    }

    pub fn mw(&self, r: i64, m: i64) -> u64 {
        residue_sum(&self.ones_by_crank, self.n, r, m)
    }
}

fn residue_sum(table: &[u64], n: u32, r: i64, m: i64) -> u64 {
    assert!(m >= 1, "modulus must be ≥ 1");
    table
        .iter()
        .enumerate()
        .filter(|(i, _)| (*i as i64 - n as i64 - r).rem_euclid(m) == 0)
        .map(|(_, v)| *v)
        .sum()
}

/// Largest `n` accepted by the enumeration helpers (p(75) ≈ 8.1·10^6).
pub const ENUMERATION_LIMIT: u32 = 75;

fn cache() -> &'static Mutex<Vec<Option<std::sync::Arc<Aggregates>>>> {
    static CACHE: OnceLock<Mutex<Vec<Option<std::sync::Arc<Aggregates>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

/// Cached [`Aggregates`] for `n`.
pub fn aggregates(n: u32) -> std::sync::Arc<Aggregates> {
    assert!(
        n <= ENUMERATION_LIMIT,
        "n = {n} exceeds the enumeration limit {ENUMERATION_LIMIT}"
    );
    if let Some(Some(a)) = cache().lock().unwrap().get(n as usize) {
        return a.clone();
    }
    let agg = std::sync::Arc::new(Aggregates::compute(n));
    let mut guard = cache().lock().unwrap();
    if guard.len() <= n as usize {
        guard.resize(n as usize + 1, None);
    }
    guard[n as usize] = Some(agg.clone());
    agg
}

/// Aggregates for every `n ≤ nmax`, computed in parallel.
pub fn aggregates_upto(nmax: u32) -> Vec<std::sync::Arc<Aggregates>> {
    (0..=nmax).into_par_iter().map(aggregates).collect()
}

/// Total number of parts over partitions of `n` with rank ≡ r (mod m).
pub fn nt(r: i64, m: i64, n: u32) -> u64 {
    aggregates(n).nt(r, m)
}

/// Total number of ones over partitions of `n` with crank ≡ r (mod m).
pub fn mw(r: i64, m: i64, n: u32) -> u64 {
    aggregates(n).mw(r, m)
}

/// p(n) by enumeration.
pub fn partition_count(n: u32) -> u64 {
    aggregates(n).count
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceCheck {
    pub name: String,
    pub modulus: u64,
    /// `(n, value mod modulus)` for every argument checked.
    pub failures: Vec<(u64, i64)>,
    pub checked: Vec<u64>,
}

impl CongruenceCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub nmax: u32,
    pub checks: Vec<CongruenceCheck>,
}

impl CongruenceReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CongruenceCheck::passed)
    }
}

/// One family of congruences: `value(a·k + b) ≡ 0 (mod modulus)` for all `a·k+b ≤ nmax`.
pub struct Congruence {
    pub name: &'static str,
    pub step: u32,
    pub residue: u32,
    pub modulus: u64,
    pub value: fn(&Aggregates) -> i64,
}

fn beck5(a: &Aggregates) -> i64 {
    (1..=4).map(|m| m * a.nt(m, 5) as i64).sum()
}

/// NT(1,7,·) - NT(6,7,·) + NT(2,7,·) - NT(5,7,·) - NT(3,7,·) + NT(4,7,·).
///
/// The combination as commonly printed repeats NT(6,7,·) in the last slot;
/// that version is not ≡ 0 (mod 7) (n = 5 gives 2), while this one is.
pub fn beck7(a: &Aggregates) -> i64 {
    let nt = |r| a.nt(r, 7) as i64;
    nt(1) - nt(6) + nt(2) - nt(5) - nt(3) + nt(4)
}

/// The combination with NT(6,7,·) repeated, kept for the negative test.
pub fn beck7_as_printed(a: &Aggregates) -> i64 {
    let nt = |r| a.nt(r, 7) as i64;
    nt(1) - nt(6) + nt(2) - nt(5) - nt(3) + nt(6)
}

pub fn congruences() -> Vec<Congruence> {
    let count = |a: &Aggregates| a.count as i64;
    vec![
        Congruence {
            name: "p(5n+4)",
            step: 5,
            residue: 4,
            modulus: 5,
            value: count,
        },
        Congruence {
            name: "p(7n+5)",
            step: 7,
            residue: 5,
            modulus: 7,
            value: count,
        },
        Congruence {
            name: "p(11n+6)",
            step: 11,
            residue: 6,
            modulus: 11,
            value: count,
        },
        Congruence {
            name: "sum m NT(m,5,5n+1)",
            step: 5,
            residue: 1,
            modulus: 5,
            value: beck5,
        },
        Congruence {
            name: "sum m NT(m,5,5n+4)",
            step: 5,
            residue: 4,
            modulus: 5,
            value: beck5,
        },
        Congruence {
            name: "NT 7-combination at 7n+1",
            step: 7,
            residue: 1,
            modulus: 7,
            value: beck7,
        },
        Congruence {
            name: "NT 7-combination at 7n+5",
            step: 7,
            residue: 5,
            modulus: 7,
            value: beck7,
        },
    ]
}

impl Congruence {
    pub fn arguments(&self, nmax: u32) -> impl Iterator<Item = u32> + '_ {
        (0..)
            .map(move |k| self.step * k + self.residue)
            .take_while(move |&n| n <= nmax)
    }

    pub fn check(&self, nmax: u32) -> CongruenceCheck {
        let mut checked = Vec::new();
        let mut failures = Vec::new();
        for n in self.arguments(nmax) {
            let v = (self.value)(&aggregates(n)).rem_euclid(self.modulus as i64);
            checked.push(n as u64);
            if v != 0 {
                failures.push((n as u64, v));
            }
        }
        CongruenceCheck {
            name: self.name.to_string(),
            modulus: self.modulus,
            failures,
            checked,
        }
    }
}

/// Ramanujan's three congruences and Beck's mod 5 / mod 7 congruences for all
/// arguments up to `nmax`. Failures are reported, not raised.
pub fn check_congruences(nmax: u32) -> CongruenceReport {
    aggregates_upto(nmax);
    CongruenceReport {
        nmax,
        checks: congruences().iter().map(|c| c.check(nmax)).collect(),
    }
}
