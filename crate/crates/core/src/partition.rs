//! Partitions, overpartitions and pairs of partitions, together with the
//! single-partition statistics (rank, crank, mex, conjugate) and exhaustive
//! generation.
//!
//! A [`Partition`] is stored as its non-increasing part sequence. The text form
//! is the comma-separated part list (`"4,2,1"`), with the empty partition
//! written as the empty string. Overpartitions mark an overlined value with a
//! trailing apostrophe on its first occurrence (`"4',2,1"`).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition: a non-increasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u32,
}

impl Partition {
    /// The empty partition, the unique partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts given in any order.
    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted_unchecked(parts))
    }

    /// Builds a partition from a part sequence that must already be
    /// non-increasing and free of zeros.
    pub fn from_canonical(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotCanonical(join_parts(&parts)));
        }
        Ok(Self::from_sorted_unchecked(parts))
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        let weight = parts.iter().sum();
        Self { parts, weight }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// `|λ|`, the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// `ℓ(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of times `value` occurs as a part.
    pub fn multiplicity(&self, value: u32) -> usize {
        // parts are sorted descending, so the run of `value` is contiguous
        let start = self.parts.partition_point(|&p| p > value);
        let end = self.parts.partition_point(|&p| p >= value);
        end - start
    }

    /// `(value, multiplicity)` pairs, largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, k)) if *v == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Distinct part values, largest first.
    pub fn distinct_parts(&self) -> impl Iterator<Item = u32> + '_ {
        self.parts
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i == 0 || self.parts[i - 1] != p)
            .map(|(_, &p)| p)
    }

    pub fn distinct_count(&self) -> usize {
        self.distinct_parts().count()
    }

    /// True when no part repeats.
    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn contains(&self, value: u32) -> bool {
        self.multiplicity(value) > 0
    }

    /// Number of even parts, counted with multiplicity.
    pub fn even_part_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let largest = self.largest() as usize;
        let mut cols = Vec::with_capacity(largest);
        for c in 1..=largest as u32 {
            // number of parts >= c
            cols.push(self.parts.partition_point(|&p| p >= c) as u32);
        }
        Partition::from_sorted_unchecked(cols)
    }

    /// Dyson's rank: largest part minus number of parts. The empty partition
    /// has rank 0.
    pub fn rank(&self) -> i64 {
        i64::from(self.largest()) - self.len() as i64
    }

    /// The Andrews-Garvan crank. With no parts equal to 1 this is the largest
    /// part; otherwise it is the number of parts exceeding the number of ones,
    /// minus the number of ones. The empty partition has crank 0.
    pub fn crank(&self) -> i64 {
        let ones = self.multiplicity(1);
        if ones == 0 {
            i64::from(self.largest())
        } else {
            let larger = self.parts.partition_point(|&p| p as usize > ones);
            larger as i64 - ones as i64
        }
    }

    /// Minimal excludant: the smallest positive integer that is not a part.
    pub fn mex(&self) -> u32 {
        let mut candidate = 1;
        for p in self.parts.iter().rev() {
            if *p == candidate {
                candidate += 1;
            } else if *p > candidate {
                break;
            }
        }
        candidate
    }
}

fn join_parts(parts: &[u32]) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_parts(&self.parts))
    }
}

fn parse_part(token: &str, whole: &str) -> Result<u32> {
    token
        .trim()
        .parse::<u32>()
        .map_err(|_| Error::Parse(format!("invalid part {token:?} in {whole:?}")))
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the canonical text form. Parts must already be non-increasing.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| parse_part(t, s))
            .collect::<Result<Vec<_>>>()?;
        Partition::from_canonical(parts)
    }
}

/// A partition in which the first occurrence of any part value may carry an
/// overline.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Overpartition {
    partition: Partition,
    overlined: BTreeSet<u32>,
}

impl Overpartition {
    pub fn new(partition: Partition, overlined: BTreeSet<u32>) -> Result<Self> {
        if let Some(&v) = overlined.iter().find(|&&v| !partition.contains(v)) {
            return Err(Error::OverlineNotAPart(v));
        }
        Ok(Self {
            partition,
            overlined,
        })
    }

    pub fn plain(partition: Partition) -> Self {
        Self {
            partition,
            overlined: BTreeSet::new(),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn overlined(&self) -> &BTreeSet<u32> {
        &self.overlined
    }

    pub fn weight(&self) -> u32 {
        self.partition.weight()
    }

    pub fn len(&self) -> usize {
        self.partition.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partition.is_empty()
    }

    /// Splits into (overlined parts, non-overlined parts). The overlined
    /// partition has distinct parts.
    pub fn split(&self) -> (Partition, Partition) {
        let over: Vec<u32> = self.overlined.iter().rev().copied().collect();
        let mut rest = Vec::with_capacity(self.partition.len());
        let mut seen_over = BTreeSet::new();
        for &p in self.partition.parts() {
            if self.overlined.contains(&p) && seen_over.insert(p) {
                continue;
            }
            rest.push(p);
        }
        (
            Partition::from_sorted_unchecked(over),
            Partition::from_sorted_unchecked(rest),
        )
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.partition.parts();
        for (i, &p) in parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            let first = i == 0 || parts[i - 1] != p;
            if first && self.overlined.contains(&p) {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Overpartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Overpartition::default());
        }
        let mut parts = Vec::new();
        let mut overlined = BTreeSet::new();
        for token in s.split(',') {
            let token = token.trim();
            let (digits, marked) = match token.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (token, false),
            };
            let p = parse_part(digits, s)?;
            if marked
                && (parts.last() == Some(&p) || !overlined.insert(p)) {
                    return Err(Error::Parse(format!(
                        "overline on a repeated occurrence of {p} in {s:?}"
                    )));
                }
            parts.push(p);
        }
        Overpartition::new(Partition::from_canonical(parts)?, overlined)
    }
}

/// An ordered pair of partitions `(first, second) ⊢ n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionPair {
    pub first: Partition,
    pub second: Partition,
}

impl PartitionPair {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    pub fn weight(&self) -> u32 {
        self.first.weight() + self.second.weight()
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.first, self.second)
    }
}

impl FromStr for PartitionPair {
    type Err = Error;

    /// Parses `"alpha/eta"`, e.g. `"3,1/2"` or `"/4,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected \"first/second\", got {s:?}")))?;
        Ok(Self::new(a.parse()?, b.parse()?))
    }
}

/// Generator of the partitions of `n` whose parts all satisfy a predicate.
///
/// Partitions come out in lexicographically decreasing order of their part
/// sequences, so the first is the greedy one (`(n)` when `n` is allowed) and
/// the last uses only the smallest allowed parts. Each step rewrites the tail
/// of one buffer in place.
pub struct Partitions {
    /// allowed part values, ascending
    allowed: Vec<u32>,
    /// fill[x][i]: x is a sum of parts from allowed[..=i]
    fill: Vec<Vec<bool>>,
    current: Vec<u32>,
    started: bool,
    done: bool,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        Self::filtered(n, |_| true)
    }

    pub fn filtered(n: u32, allow: impl Fn(u32) -> bool) -> Self {
        let allowed: Vec<u32> = (1..=n).filter(|&v| allow(v)).collect();
        let size = n as usize + 1;
        let mut fill = vec![vec![false; allowed.len()]; size];
        for x in 0..size {
            for (i, &a) in allowed.iter().enumerate() {
                let without = i > 0 && fill[x][i - 1];
                let with = x == 0 || (x >= a as usize && fill[x - a as usize][i]);
                fill[x][i] = without || with;
            }
        }
        let mut gen = Self {
            allowed,
            fill,
            current: Vec::new(),
            started: false,
            done: false,
        };
        if n == 0 {
            return gen;
        }
        match gen.allowed.len().checked_sub(1) {
            Some(top) if gen.fill[n as usize][top] => gen.push_greedy(n, top),
            _ => gen.done = true,
        }
        gen
    }

    fn fillable(&self, x: u32, upto: usize) -> bool {
        x == 0 || self.fill[x as usize][upto]
    }

    /// Appends the lexicographically largest partition of `rest` using parts
    /// from `allowed[..=upto]`. Caller guarantees feasibility.
    fn push_greedy(&mut self, mut rest: u32, mut upto: usize) {
        while rest > 0 {
            loop {
                let a = self.allowed[upto];
                if a <= rest && self.fillable(rest - a, upto) {
                    self.current.push(a);
                    rest -= a;
                    break;
                }
                upto -= 1;
            }
        }
    }

    fn advance(&mut self) -> bool {
        let mut rest = 0u32;
        while let Some(p) = self.current.pop() {
            rest += p;
            let idx = self.allowed.partition_point(|&a| a < p);
            // try each allowed value below p, largest first
            for i in (0..idx).rev() {
                let a = self.allowed[i];
                if a <= rest && self.fillable(rest - a, i) {
                    self.current.push(a);
                    self.push_greedy(rest - a, i);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(Partition::from_sorted_unchecked(self.current.clone()))
    }
}

/// All partitions of `n`, lexicographically decreasing.
pub fn enumerate_partitions(n: u32) -> Partitions {
    Partitions::new(n)
}

/// Partitions of `n` with every part satisfying `allow`.
pub fn enumerate_partitions_with(n: u32, allow: impl Fn(u32) -> bool) -> Partitions {
    Partitions::filtered(n, allow)
}

/// Partitions of `n` into distinct parts satisfying `allow`.
pub fn enumerate_distinct_partitions(
    n: u32,
    allow: impl Fn(u32) -> bool,
) -> impl Iterator<Item = Partition> {
    Partitions::filtered(n, allow).filter(Partition::has_distinct_parts)
}

/// All overpartitions of `n`. For each partition (in [`enumerate_partitions`]
/// order) the overline subsets are listed by a binary counter over the
/// distinct values, largest value as the low bit.
pub fn enumerate_overpartitions(n: u32) -> impl Iterator<Item = Overpartition> {
    enumerate_partitions(n).flat_map(|p| {
        let distinct: Vec<u32> = p.distinct_parts().collect();
        let subsets = 1u64 << distinct.len();
        (0..subsets).map(move |mask| {
            let overlined = distinct
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            Overpartition {
                partition: p.clone(),
                overlined,
            }
        })
    })
}

/// All pairs `(first, second) ⊢ n` with `first` satisfying `first_ok` and
/// `second` satisfying `second_ok`, ordered by `|first|` descending and then
/// by the component orders.
pub fn enumerate_pairs<'a>(
    n: u32,
    first_ok: impl Fn(&Partition) -> bool + Clone + 'a,
    second_ok: impl Fn(&Partition) -> bool + Clone + 'a,
) -> impl Iterator<Item = PartitionPair> + 'a {
    (0..=n).rev().flat_map(move |k| {
        let second_ok = second_ok.clone();
        let seconds: Vec<Partition> = enumerate_partitions(n - k).filter(|p| second_ok(p)).collect();
        enumerate_partitions(k)
            .filter(first_ok.clone())
            .flat_map(move |a| {
                seconds
                    .clone()
                    .into_iter()
                    .map(move |b| PartitionPair::new(a.clone(), b))
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_small() {
        let zero: Vec<_> = enumerate_partitions(0).collect();
        assert_eq!(zero, vec![Partition::empty()]);
        let one: Vec<_> = enumerate_partitions(1).collect();
        assert_eq!(one, vec![part("1")]);
        let four: Vec<String> = enumerate_partitions(4).map(|p| p.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(enumerate_partitions(10).count(), 42);
    }

    #[test]
    fn filtered_enumeration_skips_infeasible_fills() {
        // odd parts only: 6 = 5+1 = 3+3 = 3+1+1+1 = 1*6
        let odd: Vec<String> = enumerate_partitions_with(6, |v| v % 2 == 1)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(odd, ["5,1", "3,3", "3,1,1,1", "1,1,1,1,1,1"]);
        assert_eq!(enumerate_partitions_with(7, |v| v % 2 == 0).count(), 0);
        assert_eq!(enumerate_partitions_with(0, |v| v % 2 == 0).count(), 1);
        let threes: Vec<String> = enumerate_partitions_with(9, |v| v >= 3)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(threes, ["9", "6,3", "5,4", "3,3,3"]);
    }

    #[test]
    fn overpartition_counts() {
        assert_eq!(enumerate_overpartitions(0).count(), 1);
        let one: Vec<String> = enumerate_overpartitions(1).map(|o| o.to_string()).collect();
        assert_eq!(one, ["1", "1'"]);
        assert_eq!(enumerate_overpartitions(4).count(), 14);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part("4,1").conjugate(), part("2,1,1,1"));
        assert_eq!(part("2,2").conjugate(), part("2,2"));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(part("2,2").rank(), 0);
        assert_eq!(part("1,1,1,1").rank(), -3);
        assert_eq!(Partition::empty().rank(), 0);
    }

    #[test]
    fn crank_examples() {
        assert_eq!(part("4,2").crank(), 4);
        assert_eq!(part("1,1,1,1").crank(), -4);
        assert_eq!(part("3,1").crank(), 0);
        assert_eq!(part("1").crank(), -1);
        assert_eq!(Partition::empty().crank(), 0);
    }

    #[test]
    fn mex_examples() {
        assert_eq!(part("7,7,4,2,1,1").mex(), 3);
        assert_eq!(Partition::empty().mex(), 1);
        assert_eq!(Partition::from_parts(vec![1, 2, 3]).unwrap().mex(), 4);
        assert_eq!(part("5,3").mex(), 1);
    }

    #[test]
    fn multiplicity_views() {
        let p = part("5,3,3,1,1,1");
        assert_eq!(p.multiplicity(3), 2);
        assert_eq!(p.multiplicity(2), 0);
        assert_eq!(p.multiplicities(), vec![(5, 1), (3, 2), (1, 3)]);
        assert_eq!(p.distinct_parts().collect::<Vec<_>>(), vec![5, 3, 1]);
        assert_eq!(p.weight(), 14);
    }

    #[test]
    fn text_forms() {
        assert_eq!(Partition::empty().to_string(), "");
        assert_eq!(part("4,2,1").to_string(), "4,2,1");
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());

        let o: Overpartition = "4',2,2,1".parse().unwrap();
        assert_eq!(o.to_string(), "4',2,2,1");
        assert_eq!(o.overlined().iter().copied().collect::<Vec<_>>(), vec![4]);
        assert!("2,2'".parse::<Overpartition>().is_err());
        let o: Overpartition = "3',2',2,1".parse().unwrap();
        let (over, rest) = o.split();
        assert_eq!(over, part("3,2"));
        assert_eq!(rest, part("2,1"));

        let pair: PartitionPair = "3,1/2".parse().unwrap();
        assert_eq!(pair.weight(), 6);
        assert_eq!(pair.to_string(), "3,1/2");
        assert_eq!("/".parse::<PartitionPair>().unwrap(), PartitionPair::default());
    }

    #[test]
    fn pair_enumeration_counts() {
        // pairs (α, η) with η distinct: coefficient of 1/(q;q) * (-q;q)
        let counts: Vec<usize> = (0..6)
            .map(|n| enumerate_pairs(n, |_| true, |p: &Partition| p.has_distinct_parts()).count())
            .collect();
        assert_eq!(counts, [1, 2, 4, 8, 14, 24]);
    }
}
