//! Seeded random generators for property sweeps: affine multivectors,
//! candidate structures, solvable / unimodular / modular algebras, compatible
//! tee families and matching quadruples. Everything is deterministic given
//! the seed.

use crate::exterior::{AffinePoly, MultiVector, WedgeMonomial};
use crate::lie::{LieStructure, MatchQuadruple};
use crate::lieon::{compatible_base, BaseFamily, BaseLieon, Tee};
use crate::matrix::Mat;
use crate::rational::{rint, Rational};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut StdRng) -> Rational {
    let num = rng.gen_range(-4i64..=4);
    let den = rng.gen_range(1i64..=3);
    Rational::new(num.into(), den.into())
}

pub fn nonzero_small_rational(rng: &mut StdRng) -> Rational {
    loop {
        let r = small_rational(rng);
        if !num_traits::Zero::is_zero(&r) {
            return r;
        }
    }
}

/// A random grade-homogeneous multivector with affine coefficients.
pub fn random_multivector(rng: &mut StdRng, dim: u32, grade: u32, terms: usize) -> MultiVector {
    let mut out = MultiVector::zero(dim, grade);
    for _ in 0..terms {
        let mut idx: Vec<u32> = (1..=dim).collect();
        idx.shuffle(rng);
        let mut mono: Vec<u32> = idx.into_iter().take(grade as usize).collect();
        mono.sort_unstable();
        let mut poly = AffinePoly::constant(small_rational(rng));
        for i in 1..=dim {
            if rng.gen_bool(0.4) {
                poly.add_linear(i, small_rational(rng));
            }
        }
        out.add_term(WedgeMonomial(mono), poly);
    }
    out
}

/// A random candidate structure (arbitrary antisymmetric constants, Jacobi
/// not enforced).
pub fn random_structure(rng: &mut StdRng, dim: u32, entries: usize) -> LieStructure {
    let mut g = LieStructure::new(dim);
    for _ in 0..entries {
        let i = rng.gen_range(1..=dim);
        let mut j = rng.gen_range(1..=dim);
        while j == i {
            j = rng.gen_range(1..=dim);
        }
        let k = rng.gen_range(1..=dim);
        g.add_constant(i, j, k, small_rational(rng));
    }
    g
}

pub fn random_invertible(rng: &mut StdRng, n: usize) -> Mat {
    loop {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = rint(rng.gen_range(-2i64..=2));
            }
        }
        if !num_traits::Zero::is_zero(&m.det()) {
            return m;
        }
    }
}

/// A random compatible tee family on `{1..dim}` built greedily.
pub fn random_tee_family(rng: &mut StdRng, dim: u32, tries: usize) -> BaseFamily {
    let mut members: Vec<BaseLieon> = Vec::new();
    for _ in 0..tries {
        let i = rng.gen_range(1..=dim);
        let mut j = rng.gen_range(1..=dim);
        while j == i {
            j = rng.gen_range(1..=dim);
        }
        let mut k = rng.gen_range(1..=dim);
        while k == i || k == j {
            k = rng.gen_range(1..=dim);
        }
        let cand = BaseLieon::Tee(Tee::new(i, j, k, nonzero_small_rational(rng)).unwrap());
        if members.iter().all(|m| compatible_base(m, &cand)) {
            members.push(cand);
        }
    }
    BaseFamily::from_members(dim, &members).expect("valid members")
}

/// A random unimodular structure with zero Jacobi defect: a random compatible
/// tee family (tee sums are unimodular) conjugated by a random base change.
pub fn random_unimodular(rng: &mut StdRng, dim: u32) -> LieStructure {
    loop {
        let fam = random_tee_family(rng, dim, 6);
        let g = fam.realize().expect("compatible tee family");
        if g.is_zero() {
            continue;
        }
        let t = random_invertible(rng, dim as usize);
        return g.change_basis(&t).expect("invertible");
    }
}

/// A random solvable structure: a gamma-type block (one generator acting on
/// an abelian ideal) possibly summed with a compatible nilpotent tee part,
/// then conjugated. Retries until non-unimodular when `force_modular` is set.
pub fn random_solvable(rng: &mut StdRng, dim: u32, force_modular: bool) -> LieStructure {
    loop {
        let m = (dim - 1) as usize;
        let mut a = Mat::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                if rng.gen_bool(0.5) {
                    a[(i, j)] = rint(rng.gen_range(-2i64..=2));
                }
            }
        }
        // upper-triangularize to keep the action solvable on the nose
        for i in 0..m {
            for j in 0..i {
                a[(i, j)] = Rational::from_integer(0.into());
            }
        }
        let g = LieStructure::gamma_of_operator(&a);
        if g.is_zero() {
            continue;
        }
        debug_assert!(g.is_solvable());
        let t = random_invertible(rng, dim as usize);
        let g = g.change_basis(&t).expect("invertible");
        if force_modular && g.modular_vector().is_zero() {
            continue;
        }
        return g;
    }
}

/// A random solvable structure built as an iterated semidirect tower: start
/// from a small solvable core and repeatedly adjoin a generator acting by a
/// random derivation, then conjugate by a random base change.
pub fn random_solvable_iterated(rng: &mut StdRng, dim: u32, force_modular: bool) -> LieStructure {
    loop {
        let mut g = LieStructure::new(1);
        while g.dim() < dim {
            let ders = g.derivations();
            let n = g.dim() as usize;
            let mut d = Mat::zeros(n, n);
            for basis in &ders {
                if rng.gen_bool(0.5) {
                    d = d.add(&basis.scale(&small_rational(rng)));
                }
            }
            g = g.extend_by_derivation(&d);
        }
        debug_assert!(g.jacobi_defect().is_zero());
        if g.is_zero() || !g.is_solvable() {
            continue;
        }
        let t = random_invertible(rng, dim as usize);
        let g = g.change_basis(&t).expect("invertible");
        if force_modular && g.modular_vector().is_zero() {
            continue;
        }
        return g;
    }
}

/// A random valid matching quadruple with `dim_v <= max_dim`.
pub fn random_quadruple(rng: &mut StdRng, max_dim: u32) -> MatchQuadruple {
    let m = rng.gen_range(1..=max_dim) as usize;
    if rng.gen_bool(0.3) {
        // lambda = 0: commuting diagonal A (traceless) and B (trace 2)
        let mut a = Mat::zeros(m, m);
        let mut b = Mat::zeros(m, m);
        let mut sum_a = Rational::from_integer(0.into());
        let mut sum_b = Rational::from_integer(0.into());
        for i in 0..m - 1 {
            let x = small_rational(rng);
            sum_a += &x;
            a[(i, i)] = x;
            let y = small_rational(rng);
            sum_b += &y;
            b[(i, i)] = y;
        }
        a[(m - 1, m - 1)] = -sum_a;
        b[(m - 1, m - 1)] = rint(2) - sum_b;
        MatchQuadruple { dim_v: m as u32, a, b, lambda: rint(0) }
    } else {
        // lambda != 0: B diagonal with trace 2(1+lambda); when m >= 2 the
        // first two diagonal entries differ by 2 lambda so a nilpotent A can
        // sit at (0, 1), since [A, diag]_01 = A_01 (d_1 - d_0).
        let lambda = nonzero_small_rational(rng);
        let trace = rint(2) * (Rational::from_integer(1.into()) + &lambda);
        let mut diag: Vec<Rational> = Vec::new();
        let mut a = Mat::zeros(m, m);
        if m == 1 {
            diag.push(trace);
        } else if m == 2 {
            // d_0 + d_1 = trace and d_1 - d_0 = 2 lambda
            let gap = rint(2) * &lambda;
            let d0 = (&trace - &gap) / rint(2);
            let d1 = &d0 + &gap;
            diag.push(d0);
            diag.push(d1);
            if rng.gen_bool(0.8) {
                a[(0, 1)] = nonzero_small_rational(rng);
            }
        } else {
            let d0 = small_rational(rng);
            let d1 = &d0 + rint(2) * &lambda;
            diag.push(d0);
            diag.push(d1);
            for _ in 2..m - 1 {
                diag.push(small_rational(rng));
            }
            let partial: Rational = diag.iter().sum();
            diag.push(trace - partial);
            if rng.gen_bool(0.8) {
                a[(0, 1)] = nonzero_small_rational(rng);
            }
        }
        let mut b = Mat::zeros(m, m);
        for (i, x) in diag.iter().enumerate() {
            b[(i, i)] = x.clone();
        }
        MatchQuadruple { dim_v: m as u32, a, b, lambda }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::matching_from_quadruple;

    #[test]
    fn generators_produce_valid_objects() {
        let mut r = rng(7);
        for _ in 0..20 {
            let g = random_unimodular(&mut r, 4);
            assert!(g.jacobi_defect().is_zero());
            assert!(g.modular_vector().is_zero());
            let s = random_solvable(&mut r, 4, true);
            assert!(s.is_solvable());
            assert!(!s.modular_vector().is_zero());
            assert!(s.jacobi_defect().is_zero());
            let q = random_quadruple(&mut r, 3);
            let (g1, g2) = matching_from_quadruple(&q).expect("generated quadruples are valid");
            assert!(g1.compatible(&g2).unwrap());
        }
    }
}
