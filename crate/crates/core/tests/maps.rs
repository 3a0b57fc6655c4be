use partition_identities::certify::{certify, CertifiedMap};
use partition_identities::involutions::{pentagonal, phi_bz, BzState};
use partition_identities::partition::enumerate_partitions;
use partition_identities::series::partition_numbers;
use partition_identities::statistics::{count, count_where, StatisticFamily};
use partition_identities::{Counter, Partition};

fn p_at(p: &[Counter], x: i64) -> i64 {
    if x < 0 {
        0
    } else {
        i64::try_from(&p[x as usize]).unwrap()
    }
}

#[test]
fn bijection_sweeps_pass() {
    for (map, n_max) in [
        (CertifiedMap::MexShift, 25),
        (CertifiedMap::Halve, 30),
        (CertifiedMap::MarkedPart, 16),
        (CertifiedMap::RemoveCopies, 20),
        (CertifiedMap::Conjugate, 30),
    ] {
        let c = certify(map, n_max);
        assert!(c.passed(), "{map}: {:?}", c.counterexample);
        assert!(c.instances > 0, "{map}");
    }
}

#[test]
fn halve_sweep_is_vacuous_below_two() {
    let c = certify(CertifiedMap::Halve, 1);
    assert!(c.passed());
    assert_eq!(c.instances, 0);
}

#[test]
fn phi_bz_matches_positive_rank_with_even_shifts_against_odd_shifts() {
    // R(n) + sum_{j>=2 even} p(n - a(j)) = sum_{j>=1 odd} p(n - a(j))
    let p = partition_numbers(30);
    for n in 0..=30u32 {
        let r = i64::try_from(count(StatisticFamily::RRank, n).unwrap()).unwrap();
        let n = i64::from(n);
        let even: i64 = (1..=n).filter(|j| j % 2 == 0).map(|j| p_at(&p, n - pentagonal(j))).sum();
        let odd: i64 = (1..=n).filter(|j| j % 2 == 1).map(|j| p_at(&p, n - pentagonal(j))).sum();
        assert_eq!(r + even, odd, "n={n}");
    }
}

#[test]
fn phi_bz_pairs_the_sign_classes_at_each_weight() {
    // sum over states of (-1)^j is zero for n >= 1 since phi_bz flips j-parity
    for n in 1..=20u32 {
        let n64 = i64::from(n);
        let mut signed = 0i64;
        for j in -n64..=n64 {
            let rest = n64 - pentagonal(j);
            if rest < 0 {
                continue;
            }
            for lambda in enumerate_partitions(rest as u32) {
                let state = BzState::new(j, lambda);
                let image = phi_bz(&state, n).unwrap();
                assert_ne!(image.j.rem_euclid(2), j.rem_euclid(2), "{state}");
                signed += if j % 2 == 0 { 1 } else { -1 };
            }
        }
        assert_eq!(signed, 0, "n={n}");
    }
}

#[test]
fn phi_bz_examples() {
    let state: BzState = "0:2,2,1".parse().unwrap();
    assert_eq!(phi_bz(&state, 5).unwrap().to_string(), "-1:2,1,1");
    let state: BzState = "0:5,1".parse().unwrap();
    assert_eq!(phi_bz(&state, 6).unwrap().to_string(), "1:2,1,1");
    assert!(phi_bz(&BzState::new(0, Partition::empty()), 0).is_err());
}

#[test]
fn mex_consequence() {
    // p(n - j(j+1)/2) - p(n - (j+1)(j+2)/2) = #{mex = j + 1}
    let p = partition_numbers(25);
    for n in 0..=25i64 {
        for j in 0..=6i64 {
            let lhs = p_at(&p, n - j * (j + 1) / 2) - p_at(&p, n - (j + 1) * (j + 2) / 2);
            let mex = count_where(n as u32, |l| i64::from(l.mex()) == j + 1);
            assert!(lhs >= 0);
            assert_eq!(Counter::from(lhs as u64), mex, "n={n} j={j}");
        }
    }
}

#[test]
fn halving_is_onto_half_weight() {
    assert_eq!(
        count(StatisticFamily::QEven, 12).unwrap(),
        count(StatisticFamily::Q, 6).unwrap()
    );
}
