//! Aggregate statistics over all partitions (or overpartitions) of `n`,
//! computed by brute-force enumeration.
//!
//! Nothing here is clever: each statistic is a filter or fold over
//! [`enumerate_partitions`], so this module is the reference every faster
//! route is checked against.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::partition::{
    enumerate_distinct_partitions, enumerate_overpartitions, enumerate_partitions, Partition,
};

/// Exact nonnegative count.
pub type Counter = BigUint;
/// Exact signed count, e.g. `p_e(n) - p_o(n)`.
pub type SignedCounter = BigInt;

/// The countable families. Each has a stable short name used on the command
/// line and in CSV headers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatisticFamily {
    /// `p(n)`
    P,
    /// partitions with an even number of parts minus those with an odd number
    PEo,
    /// the same difference over overpartitions
    PBarEo,
    /// partitions into distinct parts
    Q,
    /// partitions into distinct odd parts
    QOdd,
    /// partitions into distinct even parts
    QEven,
    /// partitions with distinct even parts (odd parts unrestricted), signed by
    /// number of parts
    PedEo,
    /// partitions signed by the parity of the number of even parts
    Pe2MinusPo2,
    /// rank >= 0
    NRank,
    /// rank > 0
    RRank,
    /// crank >= 0
    CCrank,
    /// crank > 0
    DCrank,
    /// Garden of Eden partitions, rank <= -2
    GEden,
    /// mex odd
    MexOdd,
    /// crank < 0
    CrankNegative,
    /// rank < 0
    RankNegative,
}

impl StatisticFamily {
    pub const ALL: [StatisticFamily; 16] = [
        Self::P,
        Self::PEo,
        Self::PBarEo,
        Self::Q,
        Self::QOdd,
        Self::QEven,
        Self::PedEo,
        Self::Pe2MinusPo2,
        Self::NRank,
        Self::RRank,
        Self::CCrank,
        Self::DCrank,
        Self::GEden,
        Self::MexOdd,
        Self::CrankNegative,
        Self::RankNegative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::P => "p",
            Self::PEo => "p_eo",
            Self::PBarEo => "pbar_eo",
            Self::Q => "q",
            Self::QOdd => "q_odd",
            Self::QEven => "q_even",
            Self::PedEo => "ped_eo",
            Self::Pe2MinusPo2 => "pe2_po2",
            Self::NRank => "N",
            Self::RRank => "R",
            Self::CCrank => "C",
            Self::DCrank => "D",
            Self::GEden => "G",
            Self::MexOdd => "mex_odd",
            Self::CrankNegative => "crank_neg",
            Self::RankNegative => "rank_neg",
        }
    }

    pub fn is_signed(self) -> bool {
        matches!(
            self,
            Self::PEo | Self::PBarEo | Self::PedEo | Self::Pe2MinusPo2
        )
    }

    /// Families whose reference enumeration ranges over pairs or
    /// overpartitions rather than single partitions.
    pub fn is_pair_based(self) -> bool {
        matches!(self, Self::PBarEo)
    }

    /// Membership rule for the unsigned families.
    fn accepts(self, p: &Partition) -> bool {
        match self {
            Self::P => true,
            Self::Q => p.has_distinct_parts(),
            Self::QOdd => p.has_distinct_parts() && p.parts().iter().all(|v| v % 2 == 1),
            Self::QEven => p.has_distinct_parts() && p.parts().iter().all(|v| v % 2 == 0),
            Self::NRank => p.rank() >= 0,
            Self::RRank => p.rank() > 0,
            Self::RankNegative => p.rank() < 0,
            Self::GEden => p.rank() <= -2,
            Self::CCrank => p.crank() >= 0,
            Self::DCrank => p.crank() > 0,
            Self::CrankNegative => p.crank() < 0,
            Self::MexOdd => p.mex() % 2 == 1,
            Self::PEo | Self::PBarEo | Self::PedEo | Self::Pe2MinusPo2 => {
                unreachable!("signed family has no membership rule")
            }
        }
    }
}

impl fmt::Display for StatisticFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatisticFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

fn check_residue(r: u32, m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    if r >= m {
        return Err(Error::ResidueOutOfRange { r, m });
    }
    Ok(())
}

/// `a_{r,m}(n)`: over all partitions of `n`, the sum of the distinct part
/// values congruent to `r` mod `m`.
pub fn stat_a(r: u32, m: u32, n: u32) -> Result<Counter> {
    check_residue(r, m)?;
    let total: u64 = enumerate_partitions(n)
        .map(|p| {
            p.distinct_parts()
                .filter(|v| v % m == r)
                .map(u64::from)
                .sum::<u64>()
        })
        .sum();
    Ok(Counter::from(total))
}

/// `s_m(n)`: over all partitions of `n`, the sum of the distinct part values
/// that occur at least `m` times.
pub fn stat_s(m: u32, n: u32) -> Result<Counter> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let total: u64 = enumerate_partitions(n)
        .map(|p| {
            p.multiplicities()
                .into_iter()
                .filter(|&(_, k)| k >= m as usize)
                .map(|(v, _)| u64::from(v))
                .sum::<u64>()
        })
        .sum();
    Ok(Counter::from(total))
}

fn sign(even: bool) -> i64 {
    if even {
        1
    } else {
        -1
    }
}

/// Even-minus-odd count for one of the signed families.
pub fn signed_count(family: StatisticFamily, n: u32) -> Result<SignedCounter> {
    let total: i64 = match family {
        StatisticFamily::PEo => enumerate_partitions(n)
            .map(|p| sign(p.len() % 2 == 0))
            .sum(),
        StatisticFamily::PBarEo => enumerate_overpartitions(n)
            .map(|o| sign(o.len() % 2 == 0))
            .sum(),
        StatisticFamily::PedEo => enumerate_partitions(n)
            .filter(|p| {
                let evens: Vec<u32> = p.parts().iter().copied().filter(|v| v % 2 == 0).collect();
                evens.windows(2).all(|w| w[0] > w[1])
            })
            .map(|p| sign(p.len() % 2 == 0))
            .sum(),
        StatisticFamily::Pe2MinusPo2 => enumerate_partitions(n)
            .map(|p| sign(p.even_part_count() % 2 == 0))
            .sum(),
        other => return Err(Error::NotSigned(other)),
    };
    Ok(SignedCounter::from(total))
}

/// Number of partitions of `n` in one of the unsigned families.
pub fn count(family: StatisticFamily, n: u32) -> Result<Counter> {
    if family.is_signed() {
        return Err(Error::NotUnsigned(family));
    }
    let total = match family {
        StatisticFamily::Q => enumerate_distinct_partitions(n, |_| true).count(),
        StatisticFamily::QOdd => enumerate_distinct_partitions(n, |v| v % 2 == 1).count(),
        StatisticFamily::QEven => enumerate_distinct_partitions(n, |v| v % 2 == 0).count(),
        f => enumerate_partitions(n).filter(|p| f.accepts(p)).count(),
    };
    Ok(Counter::from(total))
}

/// Signed value of any family at `n`; unsigned families are widened.
pub fn value(family: StatisticFamily, n: u32) -> SignedCounter {
    if family.is_signed() {
        signed_count(family, n).expect("signed family")
    } else {
        SignedCounter::from(count(family, n).expect("unsigned family"))
    }
}

/// Number of partitions of `n` satisfying an arbitrary predicate.
pub fn count_where(n: u32, pred: impl Fn(&Partition) -> bool) -> Counter {
    Counter::from(enumerate_partitions(n).filter(|p| pred(p)).count())
}
