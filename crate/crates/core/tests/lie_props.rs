//! Structural properties of the Lie layer on randomized inputs: the Schouten
//! Jacobi test against the cyclic-sum oracle, bivector round trips, pencil
//! characterizations of compatibility, modular additivity, and the rank bound
//! for unimodular structures.

use lieons_core::gen;
use lieons_core::lie::matching_from_quadruple;
use lieons_core::matrix::unit_vec;
use lieons_core::{LieStructure, Rational};
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jacobi_defect_agrees_with_cyclic_oracle(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let dim = rng.gen_range(3..=8u32);
        let g = gen::random_structure(&mut rng, dim, 6);
        prop_assert_eq!(g.jacobi_defect().is_zero(), g.jacobi_cyclic_ok());
    }

    #[test]
    fn bivector_round_trip_and_linearity(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let dim = rng.gen_range(2..=7u32);
        let g = gen::random_structure(&mut rng, dim, 6);
        let h = gen::random_structure(&mut rng, dim, 6);
        prop_assert_eq!(LieStructure::from_bivector(&g.to_bivector()).unwrap(), g.clone());
        let sum = g.sum(&h).unwrap();
        prop_assert_eq!(
            sum.to_bivector(),
            g.to_bivector().add(&h.to_bivector()).unwrap()
        );
    }

    #[test]
    fn compatibility_pencil_characterization(seed in any::<u64>()) {
        // for Jacobi structures: [[P1,P2]] = 0 iff the sum is Jacobi, and
        // iff random pencil members are Jacobi
        let mut rng = gen::rng(seed);
        let dim = rng.gen_range(3..=5u32);
        let f1 = gen::random_tee_family(&mut rng, dim, 4);
        let f2 = gen::random_tee_family(&mut rng, dim, 4);
        let g1 = f1.realize().unwrap();
        let g2 = f2.realize().unwrap();
        prop_assume!(g1.jacobi_defect().is_zero() && g2.jacobi_defect().is_zero());
        let compat = g1.compatible(&g2).unwrap();
        let sum_ok = g1.sum(&g2).unwrap().jacobi_defect().is_zero();
        prop_assert_eq!(compat, sum_ok);
        let mut pencils_ok = true;
        for _ in 0..3 {
            let s = gen::nonzero_small_rational(&mut rng);
            let t = gen::nonzero_small_rational(&mut rng);
            let member = g1.scale(&s).sum(&g2.scale(&t)).unwrap();
            pencils_ok &= member.jacobi_defect().is_zero();
        }
        prop_assert_eq!(compat, pencils_ok);
    }

    #[test]
    fn modular_vector_is_additive_and_kills_derived(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let q = gen::random_quadruple(&mut rng, 3);
        let (g1, g2) = matching_from_quadruple(&q).unwrap();
        let theta1 = g1.modular_vector();
        let theta2 = g2.modular_vector();
        let sum = g1.sum(&g2).unwrap();
        prop_assert_eq!(sum.modular_vector(), theta1.add(&theta2));
        // theta vanishes on the derived algebra
        let n = sum.dim() as usize;
        let theta = sum.modular_vector();
        for i in 0..n {
            for j in i + 1..n {
                let br = sum.bracket(&unit_vec(n, i), &unit_vec(n, j)).unwrap();
                prop_assert!(theta.apply(&br).is_zero());
            }
        }
    }

    #[test]
    fn modular_split_postconditions(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let dim = rng.gen_range(3..=6u32);
        let g = gen::random_solvable(&mut rng, dim, true);
        let split = g.modular_split().unwrap();
        prop_assert_eq!(split.uni.sum(&split.non).unwrap(), g.clone());
        prop_assert!(split.uni.compatible(&split.non).unwrap());
        prop_assert!(split.uni.modular_vector().is_zero());
        prop_assert_eq!(split.non.lie_rank(), 2);
        // relations: A^T theta = 0, tr A = -1, A nu = 0, theta(nu) = 1
        prop_assert_eq!(split.a.trace(), -Rational::from_integer(1.into()));
        prop_assert!(split.a.mul_vec(&split.nu).iter().all(Rational::is_zero));
        prop_assert_eq!(split.theta.apply(&split.nu), Rational::from_integer(1.into()));
        for j in 0..g.dim() as usize {
            prop_assert!(split.theta.apply(&split.a.col(j)).is_zero());
        }
    }

    #[test]
    fn unimodular_rank_bound(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let dim = if rng.gen_bool(0.5) { 4 } else { 6 };
        let g = gen::random_unimodular(&mut rng, dim);
        prop_assert!(g.modular_vector().is_zero());
        prop_assert!(g.jacobi_defect().is_zero());
        prop_assert!(g.lie_rank() < dim);
    }

    #[test]
    fn solvable_towers_disassemble_completely(seed in any::<u64>()) {
        // iterated semidirect towers, the generic solvable test bed
        let mut rng = gen::rng(seed);
        let dim = rng.gen_range(3..=6u32);
        let g = gen::random_solvable_iterated(&mut rng, dim, false);
        prop_assert!(g.is_solvable());
        let scheme = lieons_core::scheme::disassemble_solvable(&g).unwrap();
        prop_assert!(lieons_core::scheme::verify_scheme(&scheme).is_empty());
        prop_assert!(lieons_core::scheme::is_complete(&scheme));
    }

    #[test]
    fn change_basis_commutes_with_bracket(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let dim = rng.gen_range(2..=5u32);
        let g = gen::random_structure(&mut rng, dim, 6);
        let t = gen::random_invertible(&mut rng, dim as usize);
        let h = g.change_basis(&t).unwrap();
        let n = dim as usize;
        for i in 0..n {
            for j in i + 1..n {
                let lhs = h.bracket(&t.col(i), &t.col(j)).unwrap();
                let rhs = t.mul_vec(&g.bracket(&unit_vec(n, i), &unit_vec(n, j)).unwrap());
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
