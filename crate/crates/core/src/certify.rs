//! Exhaustive certification of the explicit maps in [`crate::involutions`].
//!
//! Each sweep walks every input up to a weight bound, checks the map's
//! defining properties, and records the first violation in weight order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::involutions::{
    add_m_copies, double, halve, insert_marked_part, mex_shift, mex_unshift, pentagonal, phi_bz,
    psi, psi_even, remove_m_copies, remove_marked_part, BzState, PsiInput,
};
use crate::partition::{
    enumerate_distinct_partitions, enumerate_overpartitions, enumerate_partitions,
    enumerate_partitions_with, Partition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CertifiedMap {
    Psi,
    PsiEven,
    PhiBz,
    MexShift,
    Halve,
    MarkedPart,
    RemoveCopies,
    Conjugate,
}

impl CertifiedMap {
    pub const ALL: [CertifiedMap; 8] = [
        Self::Psi,
        Self::PsiEven,
        Self::PhiBz,
        Self::MexShift,
        Self::Halve,
        Self::MarkedPart,
        Self::RemoveCopies,
        Self::Conjugate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Psi => "psi",
            Self::PsiEven => "psi_even",
            Self::PhiBz => "phi_bz",
            Self::MexShift => "mex_shift",
            Self::Halve => "halve",
            Self::MarkedPart => "marked_part",
            Self::RemoveCopies => "remove_copies",
            Self::Conjugate => "conjugate",
        }
    }
}

impl fmt::Display for CertifiedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CertifiedMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown map {s:?}")))
    }
}

/// Outcome of one sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certification {
    pub map: CertifiedMap,
    pub n_max: u32,
    pub instances: u64,
    pub violations: u64,
    /// First failing input (serialized), with the reason.
    pub counterexample: Option<String>,
}

impl Certification {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Per-weight tally, merged in weight order.
#[derive(Default)]
struct Tally {
    instances: u64,
    violations: u64,
    first: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.violations += 1;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }

    fn merge(mut self, later: Tally) -> Tally {
        self.instances += later.instances;
        self.violations += later.violations;
        if self.first.is_none() {
            self.first = later.first;
        }
        self
    }
}

fn sweep(map: CertifiedMap, weights: Vec<u32>, n_max: u32, per_weight: impl Fn(u32) -> Tally + Sync + Send) -> Certification {
    let tallies: Vec<Tally> = weights.into_par_iter().map(per_weight).collect();
    let total = tallies.into_iter().fold(Tally::default(), Tally::merge);
    Certification {
        map,
        n_max,
        instances: total.instances,
        violations: total.violations,
        counterexample: total.first,
    }
}

fn psi_pairs(n: u32, even: bool) -> Vec<PsiInput> {
    let allow = move |v: u32| !even || v.is_multiple_of(2);
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        let etas: Vec<Partition> = enumerate_distinct_partitions(n - k, allow).collect();
        for alpha in enumerate_partitions_with(k, allow) {
            for eta in &etas {
                out.push(PsiInput::new(alpha.clone(), eta.clone()).expect("distinct eta"));
            }
        }
    }
    out
}

fn certify_psi_family(map: CertifiedMap, n_max: u32) -> Certification {
    let even = map == CertifiedMap::PsiEven;
    let weights: Vec<u32> = (1..=n_max).filter(|n| !even || n % 2 == 0).collect();
    sweep(map, weights, n_max, |n| {
        let apply = |x: &PsiInput| if even { psi_even(x) } else { psi(x) };
        let mut tally = Tally::default();
        let (mut even_len, mut odd_len) = (0u64, 0u64);
        for input in psi_pairs(n, even) {
            if input.eta().len() % 2 == 0 {
                even_len += 1;
            } else {
                odd_len += 1;
            }
            let result = apply(&input).and_then(|out| Ok((apply(&out)?, out)));
            let ok = match &result {
                Ok((back, out)) => {
                    out.weight() == n
                        && out.eta().has_distinct_parts()
                        && out.eta().len() % 2 != input.eta().len() % 2
                        && (!even || out.alpha().parts().iter().chain(out.eta().parts()).all(|v| v % 2 == 0))
                        && back == &input
                }
                Err(_) => false,
            };
            tally.check(ok, || match result {
                Ok((back, out)) => format!("{input} -> {out} -> {back}"),
                Err(e) => format!("{input}: {e}"),
            });
        }
        tally.check(even_len == odd_len, || {
            format!("n={n}: {even_len} pairs with ℓ(η) even vs {odd_len} odd")
        });
        tally
    })
}

fn certify_phi_bz(n_max: u32) -> Certification {
    sweep(CertifiedMap::PhiBz, (1..=n_max).collect(), n_max, |n| {
        let mut tally = Tally::default();
        let n64 = i64::from(n);
        // a(j) <= n bounds |j| by roughly sqrt(2n/3) on either side
        let reach = (1..).take_while(|&j| pentagonal(-j) <= n64 || pentagonal(j) <= n64).last().unwrap_or(0) + 1;
        for j in -reach..=reach {
            let rest = n64 - pentagonal(j);
            if rest < 0 {
                continue;
            }
            for lambda in enumerate_partitions(rest as u32) {
                let state = BzState::new(j, lambda);
                let result = phi_bz(&state, n).and_then(|out| Ok((phi_bz(&out, n)?, out)));
                let ok = match &result {
                    Ok((back, out)) => {
                        out.total() == n64 && (out.j - state.j).rem_euclid(2) == 1 && back == &state
                    }
                    Err(_) => false,
                };
                tally.check(ok, || match result {
                    Ok((back, out)) => format!("n={n}: {state} -> {out} -> {back}"),
                    Err(e) => format!("n={n}: {state}: {e}"),
                });
            }
        }
        tally
    })
}

fn certify_mex_shift(n_max: u32) -> Certification {
    sweep(CertifiedMap::MexShift, (0..=n_max).collect(), n_max, |n| {
        let mut tally = Tally::default();
        for j in (0..=n).take_while(|j| j * (j + 1) / 2 <= n) {
            let base = n - j * (j + 1) / 2;
            let mut images = 0u64;
            for lambda in enumerate_partitions(base) {
                let mu = mex_shift(&lambda, j);
                let ok = mu.weight() == n
                    && mu.mex() > j
                    && mex_unshift(&mu, j).as_ref() == Ok(&lambda);
                tally.check(ok, || format!("n={n} j={j}: ({lambda}) -> ({mu})"));
                images += 1;
            }
            let target = enumerate_partitions(n).filter(|mu| mu.mex() > j).count() as u64;
            tally.check(images == target, || {
                format!("n={n} j={j}: {images} images but {target} partitions with mex > {j}")
            });
        }
        tally
    })
}

fn certify_halve(n_max: u32) -> Certification {
    let weights = (2..=n_max).step_by(2).collect();
    sweep(CertifiedMap::Halve, weights, n_max, |n| {
        let mut tally = Tally::default();
        let mut seen = 0u64;
        for lambda in enumerate_distinct_partitions(n, |v| v % 2 == 0) {
            let result = halve(&lambda).and_then(|mu| Ok((double(&mu)?, mu)));
            let ok = matches!(&result, Ok((back, mu)) if mu.weight() == n / 2 && mu.has_distinct_parts() && back == &lambda);
            tally.check(ok, || format!("({lambda})"));
            seen += 1;
        }
        let target = enumerate_distinct_partitions(n / 2, |_| true).count() as u64;
        tally.check(seen == target, || format!("n={n}: q_even = {seen}, q(n/2) = {target}"));
        tally
    })
}

fn certify_marked_part(n_max: u32) -> Certification {
    sweep(CertifiedMap::MarkedPart, (1..=n_max).collect(), n_max, |n| {
        let mut tally = Tally::default();
        for v in 1..=n {
            for lambda in enumerate_partitions(n - v) {
                let result = insert_marked_part(&lambda, v)
                    .and_then(|o| Ok((remove_marked_part(&o)?, o)));
                let ok = matches!(&result, Ok(((back, w), o)) if o.weight() == n && o.overlined().len() == 1 && back == &lambda && *w == v);
                tally.check(ok, || format!("({lambda}) with marked {v}"));
            }
        }
        for beta in enumerate_overpartitions(n).filter(|o| o.overlined().len() == 1) {
            let result = remove_marked_part(&beta).and_then(|(l, v)| insert_marked_part(&l, v));
            tally.check(result.as_ref() == Ok(&beta), || format!("({beta})"));
        }
        tally
    })
}

fn certify_remove_copies(n_max: u32) -> Certification {
    sweep(CertifiedMap::RemoveCopies, (1..=n_max).collect(), n_max, |n| {
        let mut tally = Tally::default();
        for m in 1..=n {
            for j in (1..=n / m).filter(|j| m * j <= n) {
                for lambda in enumerate_partitions(n - m * j) {
                    let result = add_m_copies(&lambda, j, m)
                        .and_then(|big| Ok((remove_m_copies(&big, j, m)?, big)));
                    let ok = matches!(&result, Ok((back, big)) if big.weight() == n && back == &lambda);
                    tally.check(ok, || format!("({lambda}) + {m}x{j}"));
                }
                for lambda in enumerate_partitions(n).filter(|l| l.multiplicity(j) >= m as usize) {
                    let result = remove_m_copies(&lambda, j, m).and_then(|s| add_m_copies(&s, j, m));
                    tally.check(result.as_ref() == Ok(&lambda), || format!("({lambda}) - {m}x{j}"));
                }
            }
        }
        tally
    })
}

fn certify_conjugate(n_max: u32) -> Certification {
    sweep(CertifiedMap::Conjugate, (0..=n_max).collect(), n_max, |n| {
        let mut tally = Tally::default();
        for lambda in enumerate_partitions(n) {
            let c = lambda.conjugate();
            let ok = c.weight() == n && c.rank() == -lambda.rank() && c.conjugate() == lambda;
            tally.check(ok, || format!("({lambda})"));
        }
        tally
    })
}

/// Runs the sweep for `map` over all inputs of weight at most `n_max`.
pub fn certify(map: CertifiedMap, n_max: u32) -> Certification {
    match map {
        CertifiedMap::Psi | CertifiedMap::PsiEven => certify_psi_family(map, n_max),
        CertifiedMap::PhiBz => certify_phi_bz(n_max),
        CertifiedMap::MexShift => certify_mex_shift(n_max),
        CertifiedMap::Halve => certify_halve(n_max),
        CertifiedMap::MarkedPart => certify_marked_part(n_max),
        CertifiedMap::RemoveCopies => certify_remove_copies(n_max),
        CertifiedMap::Conjugate => certify_conjugate(n_max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for map in CertifiedMap::ALL {
            let c = certify(map, 8);
            assert!(c.passed(), "{map}: {:?}", c.counterexample);
            assert!(c.instances > 0, "{map}");
        }
    }

    #[test]
    fn halve_below_two_is_vacuous() {
        let c = certify(CertifiedMap::Halve, 1);
        assert_eq!(c.instances, 0);
        assert!(c.passed());
    }

    #[test]
    fn names_round_trip() {
        for map in CertifiedMap::ALL {
            assert_eq!(map.name().parse::<CertifiedMap>().unwrap(), map);
        }
    }
}
