//! Integer partitions, Ferrers-graph statistics and constrained enumeration.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates ordering and positivity.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing ({} < {})",
                w[0], w[1]
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// σ: the sum of the parts.
    pub fn sigma(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// ν: the number of parts.
    pub fn nu(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains_part(&self, p: u32) -> bool {
        self.parts.contains(&p)
    }

    /// Number of different part values.
    pub fn nu_d(&self) -> usize {
        let mut n = 0;
        let mut last = 0;
        for &p in &self.parts {
            if p != last {
                n += 1;
                last = p;
            }
        }
        n
    }

    /// Number of parts divisible by 3, counted with multiplicity.
    pub fn nu_3(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 3 == 0).count()
    }

    /// All consecutive gaps are at least 2 (distinct parts in particular).
    pub fn is_rogers_ramanujan(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1] + 2)
    }

    /// Rogers-Ramanujan without a part 1.
    pub fn is_rogers_ramanujan_2(&self) -> bool {
        self.is_rogers_ramanujan() && !self.contains_part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let largest = self.parts.first().copied().unwrap_or(0);
        let mut cols = Vec::with_capacity(largest as usize);
        let mut len = self.parts.len();
        for j in 1..=largest {
            while len > 0 && self.parts[len - 1] < j {
                len -= 1;
            }
            cols.push(len as u32);
        }
        Partition { parts: cols }
    }

    /// Side of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize > *i)
            .count()
    }

    pub fn rank_profile(&self) -> RankProfile {
        let conj = self.conjugate();
        let k = self.durfee();
        let mut hooks = Vec::with_capacity(k);
        let mut ranks = Vec::with_capacity(k);
        for i in 0..k {
            let row = self.parts[i] as i64;
            let col = conj.parts[i] as i64;
            hooks.push((row + col - 2 * i as i64 - 1) as u32);
            ranks.push(row - col);
        }
        RankProfile {
            durfee: k,
            hooks,
            ranks,
        }
    }

    fn require_rogers_ramanujan(&self) -> Result<()> {
        if self.is_rogers_ramanujan() {
            Ok(())
        } else {
            Err(Error::NotRogersRamanujan {
                parts: self.parts.clone(),
            })
        }
    }

    /// Maximal blocks of parts differing by exactly 2, in decreasing order of
    /// least part.
    pub fn chains(&self) -> Result<Vec<Chain>> {
        self.require_rogers_ramanujan()?;
        let mut out: Vec<Chain> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some(ch) if ch.least == p + 2 => {
                    ch.least = p;
                    ch.length += 1;
                }
                _ => out.push(Chain {
                    least: p,
                    length: 1,
                }),
            }
        }
        Ok(out)
    }

    /// Maximal blocks of parts with consecutive gaps at most 3, in decreasing
    /// order of parts.
    pub fn strings(&self) -> Result<Vec<StringBlock>> {
        self.require_rogers_ramanujan()?;
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for &p in &self.parts {
            match blocks.last_mut() {
                Some(b) if b[0] - p <= 3 => b.insert(0, p),
                _ => blocks.push(vec![p]),
            }
        }
        Ok(blocks
            .into_iter()
            .map(StringBlock::from_increasing)
            .collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Parts `least, least+2, …, least + 2(length-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chain {
    pub least: u32,
    pub length: u32,
}

impl Chain {
    pub fn parity(&self) -> Parity {
        if self.least.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Parts in increasing order.
    pub fn parts(&self) -> Vec<u32> {
        (0..self.length).map(|j| self.least + 2 * j).collect()
    }
}

/// A string: increasing parts with consecutive gaps in {2, 3}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringBlock {
    parts: Vec<u32>,
    eta: u32,
}

impl StringBlock {
    fn from_increasing(parts: Vec<u32>) -> Self {
        let eta = parts.windows(2).filter(|w| w[1] - w[0] == 3).count() as u32;
        StringBlock { parts, eta }
    }

    /// Parts in increasing order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// η: the number of gaps equal to 3.
    pub fn eta(&self) -> u32 {
        self.eta
    }

    pub fn contains(&self, p: u32) -> bool {
        self.parts.contains(&p)
    }

    pub fn least(&self) -> u32 {
        self.parts[0]
    }
}

/// Durfee square, diagonal hook lengths and successive ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub durfee: usize,
    pub hooks: Vec<u32>,
    pub ranks: Vec<i64>,
}

impl RankProfile {
    /// The hook partition ρ(π).
    pub fn hook_partition(&self) -> Partition {
        Partition::from_sorted(self.hooks.clone())
    }
}

/// The families that [`enumerate`] can restrict to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionFilter {
    All,
    Distinct,
    OddParts,
    /// Consecutive gaps ≥ 2.
    RogersRamanujan,
    /// Rogers-Ramanujan with no part 1.
    RogersRamanujan2,
    /// Parts whose residue mod `modulus` is in `residues`.
    PartsAllowed {
        modulus: u32,
        residues: BTreeSet<u32>,
    },
    /// Distinct parts whose residue mod `modulus` is in `residues`.
    DistinctAllowed {
        modulus: u32,
        residues: BTreeSet<u32>,
    },
    /// Every successive rank lies in `[lo, hi]`.
    RanksIn {
        lo: i64,
        hi: i64,
    },
}

impl PartitionFilter {
    pub fn parts_allowed(modulus: u32, residues: impl IntoIterator<Item = u32>) -> Self {
        PartitionFilter::PartsAllowed {
            modulus,
            residues: residues.into_iter().map(|r| r % modulus).collect(),
        }
    }

    pub fn distinct_allowed(modulus: u32, residues: impl IntoIterator<Item = u32>) -> Self {
        PartitionFilter::DistinctAllowed {
            modulus,
            residues: residues.into_iter().map(|r| r % modulus).collect(),
        }
    }

    /// Minimum gap between consecutive parts (0 = repeats allowed).
    fn min_gap(&self) -> u32 {
        match self {
            PartitionFilter::Distinct | PartitionFilter::DistinctAllowed { .. } => 1,
            PartitionFilter::RogersRamanujan | PartitionFilter::RogersRamanujan2 => 2,
            _ => 0,
        }
    }

    fn part_allowed(&self, p: u32) -> bool {
        match self {
            PartitionFilter::OddParts => p % 2 == 1,
            PartitionFilter::RogersRamanujan2 => p >= 2,
            PartitionFilter::PartsAllowed { modulus, residues }
            | PartitionFilter::DistinctAllowed { modulus, residues } => {
                residues.contains(&(p % modulus))
            }
            _ => true,
        }
    }

    fn accepts_complete(&self, p: &Partition) -> bool {
        match self {
            PartitionFilter::RanksIn { lo, hi } => {
                p.rank_profile().ranks.iter().all(|r| lo <= r && r <= hi)
            }
            _ => true,
        }
    }
}

/// Reverse-lexicographic stream of the partitions of `n` in a family.
pub struct Partitions<'f> {
    filter: &'f PartitionFilter,
    parts: Vec<u32>,
    remaining: u32,
    started: bool,
    exhausted: bool,
}

impl<'f> Partitions<'f> {
    fn new(n: u32, filter: &'f PartitionFilter) -> Self {
        let exhausted = matches!(filter, PartitionFilter::RanksIn { lo, hi } if lo > hi) && n > 0;
        Partitions {
            filter,
            parts: Vec::new(),
            remaining: n,
            started: false,
            exhausted,
        }
    }

    /// Largest admissible next part that is at most `cap`.
    fn largest_candidate(&self, cap: u32) -> Option<u32> {
        let bound = match self.parts.last() {
            Some(&prev) => prev.checked_sub(self.filter.min_gap())?,
            None => u32::MAX,
        };
        let top = cap.min(bound).min(self.remaining);
        (1..=top).rev().find(|&c| self.filter.part_allowed(c))
    }

    /// Replaces the last part by the next smaller admissible one, popping
    /// exhausted levels. False when the whole tree is exhausted.
    fn backtrack(&mut self) -> bool {
        while let Some(last) = self.parts.pop() {
            self.remaining += last;
            if last > 1 {
                if let Some(c) = self.largest_candidate(last - 1) {
                    self.parts.push(c);
                    self.remaining -= c;
                    return true;
                }
            }
        }
        false
    }

    /// Greedily completes the current prefix, backtracking on dead ends.
    fn complete(&mut self) -> bool {
        while self.remaining > 0 {
            match self.largest_candidate(u32::MAX) {
                Some(c) => {
                    self.parts.push(c);
                    self.remaining -= c;
                }
                None => {
                    if !self.backtrack() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl Iterator for Partitions<'_> {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            if self.exhausted {
                return None;
            }
            let advanced = if self.started {
                self.backtrack()
            } else {
                self.started = true;
                true
            };
            if !advanced || !self.complete() {
                self.exhausted = true;
                return None;
            }
            let p = Partition::from_sorted(self.parts.clone());
            if self.filter.accepts_complete(&p) {
                return Some(p);
            }
        }
    }
}

/// Every partition of `n` in the family, each once, in reverse lexicographic
/// order.
pub fn enumerate(n: u32, filter: &PartitionFilter) -> Partitions<'_> {
    Partitions::new(n, filter)
}

pub fn count(n: u32, filter: &PartitionFilter) -> u64 {
    enumerate(n, filter).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn list(n: u32, f: &PartitionFilter) -> Vec<Vec<u32>> {
        enumerate(n, f).map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(
            p(&[7, 6, 6, 4, 4, 2, 1, 1]).conjugate(),
            p(&[8, 6, 5, 5, 3, 3, 1])
        );
    }

    #[test]
    fn eight_part_profile() {
        let prof = p(&[7, 6, 6, 4, 4, 2, 1, 1]).rank_profile();
        assert_eq!(prof.durfee, 4);
        assert_eq!(prof.ranks, vec![-1, 0, 1, -1]);
        assert_eq!(prof.hooks, vec![14, 9, 6, 2]);
        let single = p(&[1]).rank_profile();
        assert_eq!(
            (single.durfee, single.hooks, single.ranks),
            (1, vec![1], vec![0])
        );
        let empty = p(&[]).rank_profile();
        assert_eq!(empty.durfee, 0);
        assert!(empty.hooks.is_empty());
    }

    #[test]
    fn chain_decomposition() {
        let ch = p(&[9, 7, 4, 2]).chains().unwrap();
        assert_eq!(
            ch,
            vec![
                Chain {
                    least: 7,
                    length: 2
                },
                Chain {
                    least: 2,
                    length: 2
                }
            ]
        );
        assert_eq!(
            p(&[5]).chains().unwrap(),
            vec![Chain {
                least: 5,
                length: 1
            }]
        );
        let odd: Vec<u32> = (1..=6).rev().map(|j| 2 * j - 1).collect();
        assert_eq!(
            p(&odd).chains().unwrap(),
            vec![Chain {
                least: 1,
                length: 6
            }]
        );
        assert_eq!(
            Chain {
                least: 3,
                length: 3
            }
            .parts(),
            vec![3, 5, 7]
        );
    }

    #[test]
    fn chains_reject_small_gaps() {
        assert!(matches!(
            p(&[4, 3]).chains(),
            Err(Error::NotRogersRamanujan { .. })
        ));
        assert!(p(&[2, 2]).strings().is_err());
    }

    #[test]
    fn string_decomposition() {
        let s = p(&[9, 6, 2]).strings().unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!((s[0].parts(), s[0].eta()), (&[6, 9][..], 1));
        assert_eq!((s[1].parts(), s[1].eta()), (&[2][..], 0));
        let single = p(&[4]).strings().unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].eta(), 0);
        // every gap in 12,9,7,4,2 is at most 3, so it is a single string
        let s = p(&[12, 9, 7, 4, 2]).strings().unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].parts(), s[0].eta()), (&[2, 4, 7, 9, 12][..], 2));
    }

    #[test]
    fn enumerate_examples() {
        let f = PartitionFilter::RanksIn { lo: 1, hi: 3 };
        assert_eq!(list(4, &f), vec![vec![4], vec![3, 1]]);
        assert_eq!(
            list(4, &PartitionFilter::RogersRamanujan),
            vec![vec![4], vec![3, 1]]
        );
        for f in [
            PartitionFilter::All,
            PartitionFilter::Distinct,
            PartitionFilter::RogersRamanujan2,
            PartitionFilter::RanksIn { lo: 3, hi: 1 },
        ] {
            assert_eq!(list(0, &f), vec![Vec::<u32>::new()]);
        }
        assert_eq!(
            list(5, &PartitionFilter::All),
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1; 5]
            ]
        );
        assert_eq!(count(5, &PartitionFilter::Distinct), 3);
        assert_eq!(count(4, &PartitionFilter::RanksIn { lo: 3, hi: 1 }), 0);
    }

    #[test]
    fn residue_filters() {
        let f = PartitionFilter::parts_allowed(6, [2, 3, 4]);
        assert_eq!(list(4, &f), vec![vec![4], vec![2, 2]]);
        let g = PartitionFilter::distinct_allowed(6, [2, 4, 5]);
        assert_eq!(list(6, &g), vec![vec![4, 2]]);
        assert_eq!(list(3, &PartitionFilter::RogersRamanujan2), vec![vec![3]]);
    }

    #[test]
    fn part_statistics() {
        assert_eq!(p(&[3, 3, 1]).nu_d(), 2);
        assert_eq!(p(&[9, 6, 6, 2]).nu_3(), 3);
        assert_eq!(p(&[9, 6, 6, 2]).sigma(), 23);
        assert_eq!(p(&[9, 6, 6, 2]).nu(), 4);
    }

    #[test]
    fn invalid_input_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }
}
