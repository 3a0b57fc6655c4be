use num_traits::Zero;
use partition_identities::identity::{
    failures, lhs, rhs, rhs_terms, verify, Evaluator, Oracle, PathSelection, RhsFamily,
    VerifyConfig,
};
use partition_identities::series::{euler_p, SeriesTables};
use partition_identities::statistics::{self, StatisticFamily};
use partition_identities::{IdentityId, SignedCounter, Statement, Variant};

fn int(v: i64) -> SignedCounter {
    SignedCounter::from(v)
}

fn is_triangular(n: u32) -> Option<u32> {
    (0..=n).find(|k| k * (k + 1) / 2 == n)
}

#[test]
fn series_tables_match_enumeration() {
    let tables = SeriesTables::new(30);
    for family in StatisticFamily::ALL {
        let top = if family.is_pair_based() { 25 } else { 30 };
        for n in 0..=top {
            assert_eq!(
                tables.value(family, n).unwrap(),
                &statistics::value(family, n),
                "{family} at n={n}"
            );
        }
    }
}

#[test]
fn series_tables_reject_out_of_range() {
    let tables = SeriesTables::new(10);
    assert!(tables.value(StatisticFamily::P, 11).is_err());
    assert!(tables.p(10).is_ok());
}

#[test]
fn euler_recurrence_known_values() {
    assert_eq!(euler_p(0), 1u32.into());
    assert_eq!(euler_p(100), 190_569_292u64.into());
}

#[test]
fn ped_eo_is_a_signed_triangular_indicator() {
    let tables = SeriesTables::new(120);
    for n in 0..=120 {
        let want = match is_triangular(n) {
            Some(_) if n % 2 == 0 => int(1),
            Some(_) => int(-1),
            None => int(0),
        };
        assert_eq!(tables.value(StatisticFamily::PedEo, n).unwrap(), &want, "n={n}");
    }
}

#[test]
fn pbar_eo_is_the_theta_series() {
    // 1 + 2 sum_{k>=1} (-1)^k q^{k^2}
    let tables = SeriesTables::new(150);
    for n in 0..=150u32 {
        let want = match (1..=n).find(|k| k * k == n) {
            _ if n == 0 => int(1),
            Some(k) => int(if k % 2 == 0 { 2 } else { -2 }),
            None => int(0),
        };
        assert_eq!(tables.value(StatisticFamily::PBarEo, n).unwrap(), &want, "n={n}");
    }
}

#[test]
fn every_identity_holds_on_both_routes_up_to_forty() {
    let config = VerifyConfig {
        n_max: 40,
        m_max: 6,
        oracle_cutoff: 40,
        paths: PathSelection::Both,
        ..VerifyConfig::default()
    };
    let tables = SeriesTables::new(40);
    let reports = verify(&Statement::all_identities(), &config, &tables, &Oracle::new()).unwrap();
    assert!(reports.iter().all(|r| r.oracle.is_some()));
    let bad: Vec<_> = failures(&reports).take(5).collect();
    assert!(bad.is_empty(), "{bad:?}");
    let expected: usize = IdentityId::ALL
        .iter()
        .map(|id| {
            let per_m: u32 = if Statement::Identity(*id).uses_residue() { (1..=6).sum() } else { 6 };
            per_m as usize * 41
        })
        .sum();
    assert_eq!(reports.len(), expected);
}

#[test]
fn printed_variants_fail_somewhere() {
    let config = VerifyConfig {
        n_max: 20,
        m_max: 4,
        paths: PathSelection::Fast,
        ..VerifyConfig::default()
    };
    let tables = SeriesTables::new(20);
    for v in Variant::ALL {
        let reports = verify(&[Statement::Variant(v)], &config, &tables, &Oracle::new()).unwrap();
        assert!(reports.iter().any(|r| !r.equal), "{}", v.name());
        assert_eq!(failures(&reports).count(), 0, "variants are not genuine");
    }
}

#[test]
fn part_sums_match_enumeration() {
    let oracle = Oracle::new();
    let tables = SeriesTables::new(20);
    let t13i: Statement = "T13i".parse().unwrap();
    let t13ii: Statement = "T13ii".parse().unwrap();
    for n in 0..=20 {
        for m in 1..=4 {
            assert_eq!(oracle.stat_s(m, n).unwrap(), rhs(&tables, t13ii, m, None, n).unwrap());
            for r in 0..m {
                assert_eq!(
                    oracle.stat_a(r, m, n).unwrap(),
                    rhs(&tables, t13i, m, Some(r), n).unwrap(),
                    "n={n} m={m} r={r}"
                );
            }
        }
    }
}

#[test]
fn extending_the_index_range_changes_nothing() {
    let tables = SeriesTables::new(60);
    for stmt in Statement::all_identities() {
        let recipe = stmt.recipe();
        for m in 1..=4u32 {
            let residues: Vec<Option<u32>> = if stmt.uses_residue() {
                (0..m).map(Some).collect()
            } else {
                vec![None]
            };
            for r in residues {
                for n in 0..=30u32 {
                    // terms for a larger n, keeping the ones that land on arguments >= 0 here;
                    // the rest would hit negative arguments, where every family is 0
                    let rhs_extended = rhs_terms(stmt, m, r, n + 30)
                        .into_iter()
                        .filter(|&(_, x)| x >= 30)
                        .map(|(w, x)| {
                            let arg = x - 30;
                            let v = match recipe.rhs {
                                RhsFamily::Family(f) => tables.value(f, arg).unwrap().clone(),
                                RhsFamily::HalfQ if arg % 2 == 0 => {
                                    tables.value(StatisticFamily::Q, arg / 2).unwrap().clone()
                                }
                                RhsFamily::HalfQ => SignedCounter::zero(),
                            };
                            v * w
                        })
                        .fold(SignedCounter::zero(), |a, b| a + b);
                    assert_eq!(rhs(&tables, stmt, m, r, n).unwrap(), rhs_extended, "{stmt} m={m} r={r:?} n={n}");

                    if let Some(seq) = recipe.lhs {
                        let lhs_extended = seq
                            .terms(n + 30)
                            .into_iter()
                            .filter(|&(shift, _)| shift <= n)
                            .map(|(shift, c)| {
                                let x = n - shift;
                                let v = match r {
                                    Some(r) => tables.stat_a(r, m, x).unwrap(),
                                    None => tables.stat_s(m, x).unwrap(),
                                };
                                SignedCounter::from(v) * c
                            })
                            .fold(SignedCounter::zero(), |a, b| a + b);
                        assert_eq!(lhs(&tables, stmt, m, r, n).unwrap(), lhs_extended, "{stmt} m={m} r={r:?} n={n}");
                    }
                }
            }
        }
    }
}

#[test]
fn half_integer_arguments_contribute_nothing() {
    for tag in ["C49", "C410"] {
        let stmt: Statement = tag.parse().unwrap();
        let tables = SeriesTables::new(30);
        for m in 1..=5u32 {
            let residues: Vec<Option<u32>> = if stmt.uses_residue() {
                (0..m).map(Some).collect()
            } else {
                vec![None]
            };
            for r in residues {
                for n in 0..=30u32 {
                    let even_only: SignedCounter = rhs_terms(stmt, m, r, n)
                        .into_iter()
                        .filter(|(_, x)| x % 2 == 0)
                        .map(|(w, x)| tables.value(StatisticFamily::Q, x / 2).unwrap() * w)
                        .fold(SignedCounter::zero(), |a, b| a + b);
                    assert_eq!(rhs(&tables, stmt, m, r, n).unwrap(), even_only, "{tag} m={m} n={n}");
                }
            }
        }
    }
}

#[test]
fn remark_value_and_zero_variant() {
    let tables = SeriesTables::new(10);
    let c410: Statement = "C410".parse().unwrap();
    assert_eq!(lhs(&tables, c410, 3, None, 10).unwrap(), int(2));
    let ms = Statement::Variant(Variant::C410Ms);
    assert_eq!(rhs(&tables, ms, 3, None, 10).unwrap(), int(0));
    assert_ne!(lhs(&tables, ms, 3, None, 10).unwrap(), int(0));
}
