//! Explicit bijections and sign-reversing involutions on partitions.
//!
//! All maps take their input by reference and return a fresh value.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{Overpartition, Partition, PartitionPair};

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

/// Inserts one copy of `value` keeping the parts sorted.
fn insert_part(p: &Partition, value: u32) -> Partition {
    let mut parts = p.parts().to_vec();
    let at = parts.partition_point(|&x| x > value);
    parts.insert(at, value);
    Partition::from_sorted_unchecked(parts)
}

/// Removes `copies` copies of `value`; the caller checks multiplicity.
fn remove_parts(p: &Partition, value: u32, copies: usize) -> Partition {
    let mut parts = p.parts().to_vec();
    let at = parts.partition_point(|&x| x > value);
    parts.drain(at..at + copies);
    Partition::from_sorted_unchecked(parts)
}

/// An element `(α, η)` of the set of pairs where `α` is unrestricted and `η`
/// has distinct parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PsiInput {
    alpha: Partition,
    eta: Partition,
}

impl PsiInput {
    pub fn new(alpha: Partition, eta: Partition) -> Result<Self> {
        if !eta.has_distinct_parts() {
            return Err(precondition(format!("eta = ({eta}) has repeated parts")));
        }
        Ok(Self { alpha, eta })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn eta(&self) -> &Partition {
        &self.eta
    }

    pub fn weight(&self) -> u32 {
        self.alpha.weight() + self.eta.weight()
    }
}

impl From<PsiInput> for PartitionPair {
    fn from(x: PsiInput) -> Self {
        PartitionPair::new(x.alpha, x.eta)
    }
}

impl TryFrom<PartitionPair> for PsiInput {
    type Error = Error;

    fn try_from(pair: PartitionPair) -> Result<Self> {
        PsiInput::new(pair.first, pair.second)
    }
}

impl fmt::Display for PsiInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.alpha, self.eta)
    }
}

impl FromStr for PsiInput {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<PartitionPair>()?.try_into()
    }
}

/// The parity-reversing involution on pairs `(α, η)`, `η` distinct.
///
/// If `α_1 > η_1` the largest part of `α` moves into `η`; otherwise the
/// largest part of `η` moves into `α`. The largest part of an empty partition
/// counts as 0. `(∅, ∅)` is the one configuration with no partner.
pub fn psi(input: &PsiInput) -> Result<PsiInput> {
    let (alpha, eta) = (&input.alpha, &input.eta);
    if alpha.is_empty() && eta.is_empty() {
        return Err(precondition("psi is undefined on (∅, ∅)"));
    }
    if !eta.has_distinct_parts() {
        return Err(precondition(format!("eta = ({eta}) has repeated parts")));
    }
    let (a1, e1) = (alpha.largest(), eta.largest());
    let out = if a1 > e1 {
        PsiInput {
            alpha: remove_parts(alpha, a1, 1),
            eta: insert_part(eta, a1),
        }
    } else {
        PsiInput {
            alpha: insert_part(alpha, e1),
            eta: remove_parts(eta, e1, 1),
        }
    };
    Ok(out)
}

/// [`psi`] restricted to pairs whose parts are all even.
pub fn psi_even(input: &PsiInput) -> Result<PsiInput> {
    let odd = input
        .alpha
        .parts()
        .iter()
        .chain(input.eta.parts())
        .find(|&&v| v % 2 == 1);
    if let Some(v) = odd {
        return Err(precondition(format!("psi_even input has odd part {v}")));
    }
    psi(input)
}

/// Generalized pentagonal number `j(3j+1)/2`, defined for every integer `j`.
pub fn pentagonal(j: i64) -> i64 {
    j * (3 * j + 1) / 2
}

/// A partition of `n - pentagonal(j)` tagged with its index `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BzState {
    pub j: i64,
    pub lambda: Partition,
}

impl BzState {
    pub fn new(j: i64, lambda: Partition) -> Self {
        Self { j, lambda }
    }

    /// The ambient `n` this state belongs to.
    pub fn total(&self) -> i64 {
        i64::from(self.lambda.weight()) + pentagonal(self.j)
    }
}

impl fmt::Display for BzState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.j, self.lambda)
    }
}

impl FromStr for BzState {
    type Err = Error;

    /// Parses `"j:parts"`, e.g. `"-1:2,1,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let (j, lambda) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected \"j:parts\", got {s:?}")))?;
        let j = j
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid index {j:?}")))?;
        Ok(Self::new(j, lambda.parse()?))
    }
}

/// The Bressoud-Zeilberger involution on `⋃_j P(n - pentagonal(j))`, which
/// changes the parity of `j`.
///
/// With `ℓ = ℓ(λ)`:
/// * if `ℓ + 3j >= λ_1`: `j -> j-1`, `λ -> (ℓ+3j-1, λ_1-1, ..., λ_ℓ-1)` with
///   zero parts dropped;
/// * otherwise: `j -> j+1`, `λ -> (λ_2+1, ..., λ_ℓ+1, 1^(λ_1-3j-ℓ-1))`.
///
/// The second rule needs a first part to remove, so for `λ = ∅` (which only
/// reaches it when `j < 0`) the empty partition is read as the single part 0,
/// giving `1^(-3j-2)`. The state `(0, ∅)` at `n = 0` has no partner.
pub fn phi_bz(state: &BzState, n: u32) -> Result<BzState> {
    let (j, lambda) = (state.j, &state.lambda);
    if state.total() != i64::from(n) {
        return Err(precondition(format!(
            "|λ| = {} but n - a({j}) = {}",
            lambda.weight(),
            i64::from(n) - pentagonal(j)
        )));
    }
    if j == 0 && lambda.is_empty() {
        return Err(precondition("phi_bz is undefined on (0, ∅) at n = 0"));
    }
    let len = lambda.len() as i64;
    let first = i64::from(lambda.largest());

    let out = if lambda.is_empty() && j < 0 {
        let ones = (-3 * j - 2) as usize;
        BzState::new(j + 1, Partition::from_sorted_unchecked(vec![1; ones]))
    } else if len + 3 * j >= first {
        let lead = len + 3 * j - 1;
        assert!(lead >= first - 1, "leading part {lead} below λ_1 - 1");
        let parts: Vec<u32> = std::iter::once(lead)
            .chain(lambda.parts().iter().map(|&p| i64::from(p) - 1))
            .filter(|&p| p > 0)
            .map(|p| p as u32)
            .collect();
        BzState::new(j - 1, Partition::from_sorted_unchecked(parts))
    } else {
        let ones = first - 3 * j - len - 1;
        assert!(ones >= 0, "negative number of trailing ones");
        let parts: Vec<u32> = lambda.parts()[1..]
            .iter()
            .map(|&p| p + 1)
            .chain(std::iter::repeat_n(1, ones as usize))
            .collect();
        BzState::new(j + 1, Partition::from_sorted_unchecked(parts))
    };
    debug_assert_eq!(out.total(), i64::from(n));
    Ok(out)
}

/// Adds `value` as a new, overlined part. Maps `P(n - v)` into the
/// overpartitions of `n` with exactly one overline, placed on `v`.
pub fn insert_marked_part(lambda: &Partition, value: u32) -> Result<Overpartition> {
    if value == 0 {
        return Err(Error::ZeroPart);
    }
    Overpartition::new(insert_part(lambda, value), BTreeSet::from([value]))
}

/// Inverse of [`insert_marked_part`].
pub fn remove_marked_part(beta: &Overpartition) -> Result<(Partition, u32)> {
    let mut over = beta.overlined().iter();
    match (over.next(), over.next()) {
        (Some(&v), None) => Ok((remove_parts(beta.partition(), v, 1), v)),
        _ => Err(precondition(format!(
            "({beta}) must have exactly one overlined part, has {}",
            beta.overlined().len()
        ))),
    }
}

/// Deletes `m` copies of the part `j`. Maps partitions of `n` in which `j`
/// occurs at least `m` times onto `P(n - mj)`.
pub fn remove_m_copies(lambda: &Partition, j: u32, m: u32) -> Result<Partition> {
    let have = lambda.multiplicity(j);
    if j == 0 || m == 0 {
        return Err(precondition("part and copy count must be positive"));
    }
    if have < m as usize {
        return Err(precondition(format!(
            "part {j} occurs {have} times in ({lambda}), fewer than {m}"
        )));
    }
    Ok(remove_parts(lambda, j, m as usize))
}

/// Inverse of [`remove_m_copies`].
pub fn add_m_copies(lambda: &Partition, j: u32, m: u32) -> Result<Partition> {
    if j == 0 {
        return Err(Error::ZeroPart);
    }
    let mut parts = lambda.parts().to_vec();
    let at = parts.partition_point(|&x| x > j);
    parts.splice(at..at, std::iter::repeat_n(j, m as usize));
    Ok(Partition::from_sorted_unchecked(parts))
}

/// Adds one each of the parts `1, 2, ..., j`. The image of
/// `P(n - j(j+1)/2)` is exactly the partitions of `n` with `mex > j`.
pub fn mex_shift(lambda: &Partition, j: u32) -> Partition {
    let mut parts = lambda.parts().to_vec();
    parts.extend(1..=j);
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_sorted_unchecked(parts)
}

/// Inverse of [`mex_shift`] on partitions with `mex > j`.
pub fn mex_unshift(mu: &Partition, j: u32) -> Result<Partition> {
    if mu.mex() <= j {
        return Err(precondition(format!("mex({mu}) = {} is not above {j}", mu.mex())));
    }
    let mut out = mu.clone();
    for v in 1..=j {
        out = remove_parts(&out, v, 1);
    }
    Ok(out)
}

/// Halves every part of a partition into distinct even parts.
pub fn halve(lambda: &Partition) -> Result<Partition> {
    if let Some(v) = lambda.parts().iter().find(|&&v| v % 2 == 1) {
        return Err(precondition(format!("halve: odd part {v} in ({lambda})")));
    }
    if !lambda.has_distinct_parts() {
        return Err(precondition(format!("halve: repeated part in ({lambda})")));
    }
    Ok(Partition::from_sorted_unchecked(
        lambda.parts().iter().map(|v| v / 2).collect(),
    ))
}

/// Doubles every part of a partition into distinct parts.
pub fn double(mu: &Partition) -> Result<Partition> {
    if !mu.has_distinct_parts() {
        return Err(precondition(format!("double: repeated part in ({mu})")));
    }
    Ok(Partition::from_sorted_unchecked(
        mu.parts().iter().map(|v| v * 2).collect(),
    ))
}
