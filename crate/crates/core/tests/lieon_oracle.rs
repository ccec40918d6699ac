//! The central oracle test of the lieon layer: the combinatorial
//! compatibility decision must agree with the realized Schouten bracket on
//! every pair of base lieons, and family constructions must produce
//! Jacobi-exact sums.

use lieons_core::gen;
use lieons_core::lieon::{all_base_lieons, compatible_base, BaseFamily};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::BTreeSet;

#[test]
fn exhaustive_pairs_match_schouten_oracle_small() {
    // the full sweep up to n = 6 runs in the acceptance suite; n <= 4 here
    for n in 3..=4u32 {
        let lieons = all_base_lieons(n);
        for (ai, a) in lieons.iter().enumerate() {
            for b in lieons.iter().skip(ai) {
                let combinatorial = compatible_base(a, b);
                let oracle = a
                    .realize(n)
                    .unwrap()
                    .compatible(&b.realize(n).unwrap())
                    .unwrap();
                assert_eq!(combinatorial, oracle, "n={n} {a:?} vs {b:?}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coefficient_independence(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let n = rng.gen_range(3..=5u32);
        let lieons = all_base_lieons(n);
        let a = lieons.choose(&mut rng).unwrap();
        let b = lieons.choose(&mut rng).unwrap();
        let base = compatible_base(a, b);
        for _ in 0..3 {
            let ca = gen::nonzero_small_rational(&mut rng);
            let cb = gen::nonzero_small_rational(&mut rng);
            let ga = a.realize(n).unwrap().scale(&ca);
            let gb = b.realize(n).unwrap().scale(&cb);
            prop_assert_eq!(base, ga.compatible(&gb).unwrap());
        }
    }

    #[test]
    fn family_compatibility_equals_sum_jacobi(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let n = rng.gen_range(3..=5u32);
        let lieons = all_base_lieons(n);
        let count = rng.gen_range(2..=4usize);
        let members: Vec<_> =
            lieons.choose_multiple(&mut rng, count).cloned().collect();
        let fam = BaseFamily::from_members(n, &members).unwrap();
        let defect_zero = fam.realize().unwrap().jacobi_defect().is_zero();
        if fam.is_compatible() {
            prop_assert!(defect_zero);
        }
        // one incompatible pair can still cancel in rare configurations, so
        // only the forward implication is universal; the exhaustive pair
        // sweep pins down the equivalence pairwise.
    }

    #[test]
    fn completion_contains_input_and_stays_compatible(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let n = rng.gen_range(3..=5u32);
        let fam = gen::random_tee_family(&mut rng, n, 4);
        prop_assume!(!fam.is_empty());
        let closed = lieons_core::clusters::complete_family(&fam).unwrap();
        prop_assert!(closed.is_compatible());
        // every input member survives
        let (t_in, d_in) = fam.descriptor_key();
        let (t_out, d_out) = closed.descriptor_key();
        for t in t_in {
            prop_assert!(t_out.contains(&t));
        }
        for d in d_in {
            prop_assert!(d_out.contains(&d));
        }
        // nothing on the support is left unblocked
        for cand in all_base_lieons(n) {
            let support = closed.support();
            if !cand.vertices().iter().all(|v| support.contains(v)) {
                continue;
            }
            let inside = match &cand {
                lieons_core::BaseLieon::Tee(t) => {
                    let (i, j) = t.ends();
                    closed.contains_tee(i, j, t.center())
                }
                lieons_core::BaseLieon::Dee(d) => closed.contains_dee(d.origin(), d.end()),
            };
            let blocked = closed.members().iter().any(|m| !compatible_base(m, &cand));
            prop_assert!(inside != blocked);
        }
    }

    #[test]
    fn span_condition_gives_compatible_tee_families(seed in any::<u64>()) {
        // if the span of the line indices lies inside the intersection of all
        // centers, the tee family is mutually compatible (no pencil condition
        // required)
        let mut rng = gen::rng(seed);
        let n = rng.gen_range(4..=6u32);
        let m = rng.gen_range(2..=4usize);
        // a common core contained in every center; all lines live inside it
        let mut idx: Vec<u32> = (1..=n).collect();
        idx.shuffle(&mut rng);
        let core: BTreeSet<u32> = idx.iter().take(2).copied().collect();
        let core_vec: Vec<u32> = core.iter().copied().collect();
        let mut fam = BaseFamily::new(n);
        for _ in 0..m {
            // the tee's ends are the complement of its center subspace, so
            // pick the two excluded indices outside the core
            let mut rest: Vec<u32> = (1..=n).filter(|v| !core.contains(v)).collect();
            rest.shuffle(&mut rng);
            let (a, b) = (rest[0], rest[1]);
            let line = *core_vec.choose(&mut rng).unwrap();
            fam.insert_tee(lieons_core::Tee::unit(a.min(b), a.max(b), line)).unwrap();
        }
        prop_assert!(fam.is_compatible());
        prop_assert!(fam.realize().unwrap().jacobi_defect().is_zero());
    }
}
