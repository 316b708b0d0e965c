use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use fsikit::class_algebra::{solution_count_sequence, SolutionCounts, Strategy as Counting};
use fsikit::group::{conjugacy_classes, enumerate_group, squares_subgroup_index, GroupSpec, Permutation};
use fsikit::recovery::{recover, recover_from_counts, IndicatorMultiset};

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::new(images).unwrap())
}

fn generated_group() -> impl Strategy<Value = GroupSpec> {
    (1usize..=5).prop_flat_map(|degree| {
        prop::collection::vec(permutation(degree), 1..=3)
            .prop_map(move |gens| GroupSpec::from_generators(degree, gens).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn enumeration_is_deterministic_and_a_group(spec in generated_group()) {
        let g = enumerate_group(&spec).unwrap();
        let h = enumerate_group(&spec).unwrap();
        prop_assert_eq!(g.elements(), h.elements());
        prop_assert!(g.element(0).is_identity());
        prop_assert!(g.check_axioms(500, 1).is_ok());
    }

    #[test]
    fn class_data_invariants(spec in generated_group()) {
        let g = enumerate_group(&spec).unwrap();
        let cd = conjugacy_classes(&g);
        prop_assert_eq!(cd.sizes.iter().sum::<usize>(), g.order());
        for c in 0..cd.num_classes {
            prop_assert_eq!(g.order() % cd.sizes[c], 0);
            prop_assert_eq!(cd.inverse_class[cd.inverse_class[c]], c);
        }
        prop_assert!(squares_subgroup_index(&g).is_power_of_two());
    }

    #[test]
    fn recovery_invariants(spec in generated_group()) {
        let g = enumerate_group(&spec).unwrap();
        let cd = conjugacy_classes(&g);
        let rec = recover(&g, &cd).unwrap();
        let order = BigInt::from(g.order());
        prop_assert_eq!(rec.multiset.sum(), rec.counts.get(1).unwrap().clone());
        prop_assert!(rec.multiset.sum_of_squares() <= order);
        prop_assert!(rec.multiset.entries().iter().all(|m| (&order % m.abs()) == BigInt::from(0)));
        prop_assert_eq!(rec.multiset.count_equal(1), squares_subgroup_index(&g));
        let dp = solution_count_sequence(&g, &cd, 2, rec.counts.max_n(), Counting::ElementDp).unwrap();
        prop_assert_eq!(dp, rec.counts);
    }

    /// A multiset of signed divisors containing 1, with positive sum, is
    /// recovered from the counts it would produce.
    #[test]
    fn synthetic_counts_round_trip(
        a in 0u32..4,
        b in 0u32..3,
        picks in prop::collection::vec((any::<prop::sample::Index>(), any::<bool>()), 1..7),
    ) {
        let order = 2u64.pow(a) * 3u64.pow(b);
        let divisors: Vec<i64> = (1..=order as i64).filter(|d| order as i64 % d == 0).collect();
        let entries: Vec<i64> = std::iter::once(1)
            .chain(picks.iter()
            .map(|(i, neg)| {
                let d = *i.get(&divisors);
                if *neg { -d } else { d }
            }))
            .collect();
        prop_assume!(entries.iter().sum::<i64>() > 0);
        let k_r = entries.len();
        let g = BigInt::from(order);
        // s(1) = Σ m, s(n) = |G|^(n-1) Σ m^-(n-2) for n >= 2
        let mut values = vec![entries.iter().map(|&m| BigInt::from(m)).sum::<BigInt>()];
        for n in 2..=k_r + 1 {
            let scale = num_traits::pow(g.clone(), n - 1);
            let s: BigInt = entries
                .iter()
                .map(|&m| &scale / num_traits::pow(BigInt::from(m), n - 2))
                .sum();
            values.push(s);
        }
        let rec = recover_from_counts(&SolutionCounts { k: 2, values }, order).unwrap();
        prop_assert_eq!(rec.multiset, IndicatorMultiset::from_i64s(&entries));
    }
}
