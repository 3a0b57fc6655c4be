use partition_identities::involutions::{
    add_m_copies, double, halve, insert_marked_part, mex_shift, mex_unshift, remove_m_copies,
    remove_marked_part,
};
use partition_identities::Partition;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=14, 0..14).prop_map(|v| Partition::from_parts(v).unwrap())
}

fn distinct_partition() -> impl Strategy<Value = Partition> {
    prop::collection::btree_set(1u32..=20, 0..8)
        .prop_map(|s| Partition::from_parts(s.into_iter().collect()).unwrap())
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.len() as u32, p.largest());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn conjugation_negates_rank(p in partition()) {
        prop_assert_eq!(p.conjugate().rank(), -p.rank());
    }

    #[test]
    fn mex_is_the_least_missing_part(p in partition()) {
        let mex = p.mex();
        prop_assert!(mex >= 1);
        prop_assert!(!p.contains(mex));
        prop_assert!((1..mex).all(|v| p.contains(v)));
    }

    #[test]
    fn crank_without_ones_is_the_largest_part(p in partition()) {
        prop_assume!(!p.contains(1));
        prop_assert_eq!(p.crank(), i64::from(p.largest()));
    }

    #[test]
    fn marked_part_round_trip(p in partition(), v in 1u32..=20) {
        let beta = insert_marked_part(&p, v).unwrap();
        prop_assert_eq!(beta.weight(), p.weight() + v);
        prop_assert_eq!(remove_marked_part(&beta).unwrap(), (p, v));
    }

    #[test]
    fn mex_shift_round_trip(p in partition(), j in 0u32..=6) {
        let mu = mex_shift(&p, j);
        prop_assert!(mu.mex() > j);
        prop_assert_eq!(mu.weight(), p.weight() + j * (j + 1) / 2);
        prop_assert_eq!(mex_unshift(&mu, j).unwrap(), p);
    }

    #[test]
    fn halve_and_double_are_inverse(p in distinct_partition()) {
        let d = double(&p).unwrap();
        prop_assert!(d.parts().iter().all(|v| v % 2 == 0));
        prop_assert_eq!(halve(&d).unwrap(), p);
    }
}

#[test]
fn copies_round_trip_with_fixed_seed() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..200 {
        let len = rng.gen_range(0..12);
        let parts: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=10)).collect();
        let lambda = Partition::from_parts(parts).unwrap();
        let j = rng.gen_range(1..=10);
        let m = rng.gen_range(1..=4);

        let grown = add_m_copies(&lambda, j, m).unwrap();
        assert_eq!(grown.weight(), lambda.weight() + j * m, "case {case}");
        assert_eq!(grown.multiplicity(j), lambda.multiplicity(j) + m as usize);
        assert_eq!(remove_m_copies(&grown, j, m).unwrap(), lambda, "case {case}");

        if lambda.multiplicity(j) >= m as usize {
            let shrunk = remove_m_copies(&lambda, j, m).unwrap();
            assert_eq!(add_m_copies(&shrunk, j, m).unwrap(), lambda, "case {case}");
        } else {
            assert!(remove_m_copies(&lambda, j, m).is_err(), "case {case}");
        }
    }
}
