//! Lie algebra structures as sparse antisymmetric structure constants, their
//! linear Poisson bivector duals, recognition, and modularity theory.
//!
//! The normalization is fixed once and for all:
//! `[e_i, e_j] = sum_k c_ij^k e_k` for `i < j`, with dual bivector
//! `P = sum_{i<j,k} c_ij^k x_k xi_i xi_j`. The round trip and the Heisenberg
//! Jacobi test certify the convention.

use crate::exterior::{linear_bivector_term, MultiVector};
use crate::matrix::{unit_vec, Mat, Subspace};
use crate::rational::Rational;
use crate::CoreError;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A (candidate) Lie structure. Keys are `(i, j, k)` with `i < j`. The Jacobi
/// identity is *not* an invariant: intermediate sums in disassemblings must be
/// representable, so Jacobi is a checked property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieStructure {
    dim: u32,
    constants: BTreeMap<(u32, u32, u32), Rational>,
}

/// A sparse covector (no stored zeros).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Covector {
    pub components: BTreeMap<u32, Rational>,
}

impl Covector {
    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn get(&self, i: u32) -> Rational {
        self.components.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn apply(&self, v: &[Rational]) -> Rational {
        self.components.iter().map(|(&i, c)| c * &v[(i - 1) as usize]).sum()
    }

    pub fn add(&self, other: &Covector) -> Covector {
        let mut out = self.clone();
        for (&i, c) in &other.components {
            let e = out.components.entry(i).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                out.components.remove(&i);
            }
        }
        out
    }
}

/// Result of splitting a structure into unimodular and modular parts.
#[derive(Debug, Clone)]
pub struct ModularSplit {
    pub uni: LieStructure,
    pub non: LieStructure,
    pub theta: Covector,
    pub nu: Vec<Rational>,
    pub a: Mat,
}

/// The data classifying a matching of two modular structures: operators
/// `A, B` on a space of dimension `dim_v` and a scalar `lambda`, subject to
/// `[A,B] = 2 lambda A` and `tr B = 2(1 + lambda)` when `lambda != 0`, and to
/// `[A,B] = 0`, `tr A = 0`, `tr B = 2` when `lambda = 0`.
#[derive(Debug, Clone)]
pub struct MatchQuadruple {
    pub dim_v: u32,
    pub a: Mat,
    pub b: Mat,
    pub lambda: Rational,
}

/// Isomorphism types recognized among lieons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieonKind {
    /// Heisenberg plus abelian: `[g,g]` is a line inside the center,
    /// center has codimension 2.
    Fork(u32),
    /// 2-dimensional nonabelian plus abelian: `[g,g]` is a line meeting the
    /// center trivially, center has codimension 2.
    Dee(u32),
    Abelian,
    Other,
}

impl LieStructure {
    pub fn new(dim: u32) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        LieStructure { dim, constants: BTreeMap::new() }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.constants.is_empty()
    }

    pub fn constants(&self) -> impl Iterator<Item = (&(u32, u32, u32), &Rational)> {
        self.constants.iter()
    }

    /// Adds `c` to `c_ij^k`, canonicalizing `i < j` by antisymmetry.
    pub fn add_constant(&mut self, i: u32, j: u32, k: u32, c: Rational) {
        assert!(i >= 1 && j >= 1 && k >= 1 && i <= self.dim && j <= self.dim && k <= self.dim);
        assert!(i != j, "antisymmetry forces c_ii^k = 0");
        if c.is_zero() {
            return;
        }
        let (i, j, c) = if i < j { (i, j, c) } else { (j, i, -c) };
        let e = self.constants.entry((i, j, k)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.constants.remove(&(i, j, k));
        }
    }

    pub fn constant(&self, i: u32, j: u32, k: u32) -> Rational {
        if i == j {
            return Rational::zero();
        }
        let (i, j, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let c = self.constants.get(&(i, j, k)).cloned().unwrap_or_else(Rational::zero);
        if s < 0 {
            -c
        } else {
            c
        }
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: u32, j: u32) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim as usize];
        if i == j {
            return out;
        }
        let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        for (&(p, q, k), c) in self.constants.range((a, b, 1)..=(a, b, self.dim)) {
            debug_assert_eq!((p, q), (a, b));
            out[(k - 1) as usize] = if s < 0 { -c.clone() } else { c.clone() };
        }
        out
    }

    /// Bilinear, antisymmetric evaluation of the bracket on vectors.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>, CoreError> {
        if u.len() != self.dim as usize || v.len() != self.dim as usize {
            return Err(CoreError::DimensionMismatch {
                left: u.len() as u32,
                right: v.len() as u32,
            });
        }
        let mut out = vec![Rational::zero(); self.dim as usize];
        for (&(i, j, k), c) in &self.constants {
            let (ui, uj) = (&u[(i - 1) as usize], &u[(j - 1) as usize]);
            let (vi, vj) = (&v[(i - 1) as usize], &v[(j - 1) as usize]);
            let coeff = ui * vj - uj * vi;
            if !coeff.is_zero() {
                out[(k - 1) as usize] += coeff * c;
            }
        }
        Ok(out)
    }

    /// Matrix of `ad u` in the standard basis.
    pub fn ad(&self, u: &[Rational]) -> Result<Mat, CoreError> {
        let n = self.dim as usize;
        let mut m = Mat::zeros(n, n);
        for j in 0..n {
            let col = self.bracket(u, &unit_vec(n, j))?;
            for (i, v) in col.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        Ok(m)
    }

    pub fn sum(&self, other: &LieStructure) -> Result<LieStructure, CoreError> {
        if self.dim != other.dim {
            return Err(CoreError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let mut out = self.clone();
        for (&(i, j, k), c) in &other.constants {
            out.add_constant(i, j, k, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> LieStructure {
        let mut out = LieStructure::new(self.dim);
        if c.is_zero() {
            return out;
        }
        for (&(i, j, k), v) in &self.constants {
            out.add_constant(i, j, k, v * c);
        }
        out
    }

    pub fn neg(&self) -> LieStructure {
        self.scale(&-Rational::one())
    }

    pub fn sub(&self, other: &LieStructure) -> Result<LieStructure, CoreError> {
        self.sum(&other.neg())
    }

    /// The dual linear Poisson bivector `P = sum c_ij^k x_k xi_i xi_j`.
    pub fn to_bivector(&self) -> MultiVector {
        let mut p = MultiVector::zero(self.dim, 2);
        for (&(i, j, k), c) in &self.constants {
            p = p.add(&linear_bivector_term(self.dim, i, j, k, c.clone())).expect("same dim");
        }
        p
    }

    /// Inverse of `to_bivector`; requires grade 2 and purely linear
    /// coefficients.
    pub fn from_bivector(p: &MultiVector) -> Result<LieStructure, CoreError> {
        if p.grade() != 2 {
            return Err(CoreError::NotABivector { grade: p.grade() });
        }
        let mut g = LieStructure::new(p.dim());
        for (m, coeff) in p.terms() {
            if !coeff.constant.is_zero() {
                return Err(CoreError::NotLinear);
            }
            let (i, j) = (m.0[0], m.0[1]);
            for (&k, c) in &coeff.linear {
                g.add_constant(i, j, k, c.clone());
            }
        }
        Ok(g)
    }

    /// `[[P, P]]` of the dual bivector: zero exactly when Jacobi holds.
    pub fn jacobi_defect(&self) -> MultiVector {
        let p = self.to_bivector();
        p.schouten(&p).expect("same dim")
    }

    /// Independent check: the cyclic sum `[e_i,[e_j,e_k]] + cycle` vanishes on
    /// every basis triple. Computed purely from bracket evaluation, with no
    /// Schouten machinery.
    pub fn jacobi_cyclic_ok(&self) -> bool {
        let n = self.dim as usize;
        let basis: Vec<Vec<Rational>> = (0..n).map(|i| unit_vec(n, i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut acc = vec![Rational::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = self.bracket(&basis[b], &basis[c]).expect("dims");
                        let outer = self.bracket(&basis[a], &inner).expect("dims");
                        for (x, y) in acc.iter_mut().zip(outer) {
                            *x += y;
                        }
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Schouten compatibility: `[[P_1, P_2]] = 0`.
    pub fn compatible(&self, other: &LieStructure) -> Result<bool, CoreError> {
        if self.dim != other.dim {
            return Err(CoreError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(self.to_bivector().schouten(&other.to_bivector())?.is_zero())
    }

    /// The modular vector `theta(e_u) = -tr(ad e_u)`.
    pub fn modular_vector(&self) -> Covector {
        let n = self.dim as usize;
        let mut theta = Covector::default();
        for u in 0..n {
            // trace of ad e_u without building the whole matrix
            let mut tr = Rational::zero();
            for j in 0..n {
                tr += self.constant(u as u32 + 1, j as u32 + 1, j as u32 + 1);
            }
            if !tr.is_zero() {
                theta.components.insert(u as u32 + 1, -tr);
            }
        }
        theta
    }

    /// Splits off the canonical rank-2 modular part: `nu = e_i / theta(e_i)`
    /// for the least `i` with `theta(e_i) != 0`, `A = ad nu`, and
    /// `[u,v]_non = theta(u) A(v) - theta(v) A(u)`.
    pub fn modular_split(&self) -> Result<ModularSplit, CoreError> {
        let theta = self.modular_vector();
        let Some((&i0, t0)) = theta.components.iter().next() else {
            return Err(CoreError::AlreadyUnimodular);
        };
        let n = self.dim as usize;
        let mut nu = vec![Rational::zero(); n];
        nu[(i0 - 1) as usize] = t0.recip();
        let a = self.ad(&nu)?;
        let mut non = LieStructure::new(self.dim);
        for i in 1..=self.dim {
            for j in i + 1..=self.dim {
                let ti = theta.get(i);
                let tj = theta.get(j);
                if ti.is_zero() && tj.is_zero() {
                    continue;
                }
                let av = a.col((j - 1) as usize);
                let au = a.col((i - 1) as usize);
                for k in 0..n {
                    let c = &ti * &av[k] - &tj * &au[k];
                    non.add_constant(i, j, k as u32 + 1, c);
                }
            }
        }
        let uni = self.sub(&non)?;
        Ok(ModularSplit { uni, non, theta, nu, a })
    }

    /// Column span of all `[e_i, e_j]`.
    pub fn derived_algebra(&self) -> Subspace {
        let n = self.dim as usize;
        let mut s = Subspace::empty(n);
        for i in 1..=self.dim {
            for j in i + 1..=self.dim {
                s.insert(self.bracket_basis(i, j));
            }
        }
        s
    }

    /// Kernel of all ad maps.
    pub fn center(&self) -> Subspace {
        let n = self.dim as usize;
        // stack the ad matrices of all basis vectors
        let mut rows = Vec::new();
        for u in 0..n {
            let ad = self.ad(&unit_vec(n, u)).expect("dims");
            for i in 0..n {
                rows.push(ad.row(i));
            }
        }
        let m = Mat::from_rows(rows);
        Subspace::span(n, &m.kernel())
    }

    /// Derived series of the full structure; true when it reaches zero.
    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().map_or(true, |s| s.dim() == 0)
    }

    /// The derived series `g^(1) = [g,g] >= g^(2) >= ...` down to
    /// stabilization; the last entry is the stable term.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let n = self.dim as usize;
        let mut series = vec![self.derived_algebra()];
        loop {
            let prev = series.last().unwrap();
            if prev.dim() == 0 {
                break;
            }
            let basis = prev.basis().to_vec();
            let mut next = Subspace::empty(n);
            for (ai, a) in basis.iter().enumerate() {
                for b in basis.iter().skip(ai + 1) {
                    next.insert(self.bracket(a, b).expect("dims"));
                }
            }
            if next.dim() == prev.dim() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Rank of the dual bivector.
    pub fn lie_rank(&self) -> u32 {
        self.to_bivector().mv_rank().expect("grade 2 by construction")
    }

    /// Recognizes forks (Heisenberg + abelian), dees (2-dim nonabelian +
    /// abelian) and abelian structures by dimension criteria: these force the
    /// isomorphism type. Rejects non-Jacobi input.
    pub fn recognize_lieon(&self) -> Result<LieonKind, CoreError> {
        if !self.jacobi_defect().is_zero() {
            return Err(CoreError::NotJacobi);
        }
        let derived = self.derived_algebra();
        if derived.dim() == 0 {
            return Ok(LieonKind::Abelian);
        }
        let center = self.center();
        if derived.dim() == 1 && center.dim() as u32 == self.dim - 2 {
            let in_center = derived.basis().iter().all(|v| center.contains(v));
            return Ok(if in_center {
                LieonKind::Fork(self.dim)
            } else {
                LieonKind::Dee(self.dim)
            });
        }
        Ok(LieonKind::Other)
    }

    /// The structure on `span(e_1) + V` with `[e_1, v] = A v` and `V` abelian;
    /// `A` acts on the coordinates `e_2 ... e_{m+1}`.
    pub fn gamma_of_operator(a: &Mat) -> LieStructure {
        assert_eq!(a.rows, a.cols);
        let m = a.rows;
        let mut g = LieStructure::new(m as u32 + 1);
        for j in 0..m {
            for i in 0..m {
                g.add_constant(1, j as u32 + 2, i as u32 + 2, a[(i, j)].clone());
            }
        }
        g
    }

    /// Transport along the invertible map `T` (columns = images of the
    /// standard basis): `[u, v]' = T [T^{-1} u, T^{-1} v]`.
    pub fn change_basis(&self, t: &Mat) -> Result<LieStructure, CoreError> {
        assert_eq!((t.rows, t.cols), (self.dim as usize, self.dim as usize));
        let t_inv = t.inverse()?;
        let n = self.dim as usize;
        let mut out = LieStructure::new(self.dim);
        for i in 0..n {
            let ti = t_inv.col(i);
            for j in i + 1..n {
                let tj = t_inv.col(j);
                let br = self.bracket(&ti, &tj)?;
                let back = t.mul_vec(&br);
                for (k, c) in back.into_iter().enumerate() {
                    out.add_constant(i as u32 + 1, j as u32 + 1, k as u32 + 1, c);
                }
            }
        }
        Ok(out)
    }

    /// Basis of the derivation algebra: all `D` with
    /// `D[x,y] = [Dx,y] + [x,Dy]`, computed as the kernel of the linear
    /// constraint system.
    pub fn derivations(&self) -> Vec<Mat> {
        let n = self.dim() as usize;
        let unknowns = n * n; // D[(r, c)] at index r*n + c
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let w = self.bracket_basis(i as u32 + 1, j as u32 + 1);
                for k in 0..n {
                    let mut row = vec![Rational::zero(); unknowns];
                    // (D w)_k = sum_c D_{k,c} w_c
                    for (c, wc) in w.iter().enumerate() {
                        if !wc.is_zero() {
                            row[k * n + c] += wc.clone();
                        }
                    }
                    // -[D e_i, e_j]_k = -sum_r D_{r,i} c(r,j)_k
                    for r in 0..n {
                        let c1 = self.constant(r as u32 + 1, j as u32 + 1, k as u32 + 1);
                        if !c1.is_zero() {
                            row[r * n + i] -= c1;
                        }
                        let c2 = self.constant(i as u32 + 1, r as u32 + 1, k as u32 + 1);
                        if !c2.is_zero() {
                            row[r * n + j] -= c2;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        if rows.is_empty() {
            // abelian: every operator is a derivation
            return (0..unknowns)
                .map(|u| {
                    let mut m = Mat::zeros(n, n);
                    m[(u / n, u % n)] = Rational::one();
                    m
                })
                .collect();
        }
        Mat::from_rows(rows)
            .kernel()
            .into_iter()
            .map(|v| {
                let mut m = Mat::zeros(n, n);
                for (u, x) in v.into_iter().enumerate() {
                    m[(u / n, u % n)] = x;
                }
                m
            })
            .collect()
    }

    /// The semidirect extension by one new generator acting through the
    /// derivation `d`: on dimension `dim + 1`, the old brackets survive and
    /// `[e_{dim+1}, v] = d(v)` for old vectors.
    pub fn extend_by_derivation(&self, d: &Mat) -> LieStructure {
        let n = self.dim() as usize;
        assert_eq!((d.rows, d.cols), (n, n));
        let mut g = LieStructure::new(self.dim() + 1);
        for (&(i, j, k), c) in self.constants() {
            g.add_constant(i, j, k, c.clone());
        }
        let new = self.dim() + 1;
        for c in 0..n {
            for r in 0..n {
                // [e_c, e_new] = -d(e_c)
                g.add_constant(c as u32 + 1, new, r as u32 + 1, -d[(r, c)].clone());
            }
        }
        g
    }

    /// Killing form matrix `K(u,v) = tr(ad u ad v)`.
    pub fn killing_form(&self) -> Mat {
        let n = self.dim as usize;
        let ads: Vec<Mat> = (0..n).map(|i| self.ad(&unit_vec(n, i)).expect("dims")).collect();
        let mut k = Mat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = ads[i].mul(&ads[j]).trace();
                k[(i, j)] = v.clone();
                k[(j, i)] = v;
            }
        }
        k
    }

    /// Re-expresses the structure in the given adapted basis, keeps only the
    /// components selected by `keep(a, b, c)` (adapted-basis indices, 0-based)
    /// and transports back to the standard basis. The adapted basis must be a
    /// full basis of the space.
    pub fn project_brackets<F>(&self, adapted: &[Vec<Rational>], keep: F) -> Result<LieStructure, CoreError>
    where
        F: Fn(usize, usize, usize) -> bool,
    {
        let n = self.dim as usize;
        if adapted.len() != n {
            return Err(CoreError::BadSubspaces(format!(
                "adapted basis has {} vectors, need {}",
                adapted.len(),
                n
            )));
        }
        let mut t = Mat::zeros(n, n);
        for (j, v) in adapted.iter().enumerate() {
            for i in 0..n {
                t[(i, j)] = v[i].clone();
            }
        }
        let t_inv = t.inverse()?;
        // structure constants in the adapted basis
        let mut filtered = LieStructure::new(self.dim);
        for a in 0..n {
            for b in a + 1..n {
                let br = self.bracket(&adapted[a], &adapted[b])?;
                let coords = t_inv.mul_vec(&br);
                for (c, v) in coords.into_iter().enumerate() {
                    if keep(a, b, c) {
                        filtered.add_constant(a as u32 + 1, b as u32 + 1, c as u32 + 1, v);
                    }
                }
            }
        }
        // transport back: adapted-basis structure -> standard basis
        filtered.change_basis(&t)
    }
}

/// Builds the pair of mutually compatible modular structures determined by a
/// quadruple `(V, A, B, lambda)` ([`MatchQuadruple`]). The construction lives
/// on dimension `dim_v + 2`; the two extra directions carry the constant
/// fields `Xi_1, Xi_2`, and the linear fields come from `(A+B)/2`, `(B-A)/2`
/// plus the `lambda`-scaled corrections.
pub fn matching_from_quadruple(
    q: &MatchQuadruple,
) -> Result<(LieStructure, LieStructure), CoreError> {
    let m = q.dim_v as usize;
    if q.a.rows != m || q.a.cols != m || q.b.rows != m || q.b.cols != m {
        return Err(CoreError::BadQuadruple("operator shapes do not match dim_v".into()));
    }
    let two = Rational::from_integer(2.into());
    if q.lambda.is_zero() {
        if !q.a.commutator(&q.b).is_zero() {
            return Err(CoreError::BadQuadruple("lambda = 0 requires [A,B] = 0".into()));
        }
        if !q.a.trace().is_zero() {
            return Err(CoreError::BadQuadruple("lambda = 0 requires tr A = 0".into()));
        }
        if q.b.trace() != two {
            return Err(CoreError::BadQuadruple("lambda = 0 requires tr B = 2".into()));
        }
    } else {
        let want = q.a.scale(&(&two * &q.lambda));
        if q.a.commutator(&q.b) != want {
            return Err(CoreError::BadQuadruple("[A,B] = 2 lambda A fails".into()));
        }
        if q.b.trace() != &two * &(Rational::one() + &q.lambda) {
            return Err(CoreError::BadQuadruple("tr B = 2(1 + lambda) fails".into()));
        }
    }

    let n = (m + 2) as u32;
    let half = Rational::new(1.into(), 2.into());
    let x1_lin = q.a.add(&q.b).scale(&half); // (A+B)/2
    let x2_lin = q.b.sub(&q.a).scale(&half); // (B-A)/2

    // bivector X ^ xi_c where X = Y_H + mu * x_d xi_d
    let build = |h: &Mat, c: u32, d: u32, mu: &Rational| -> LieStructure {
        let mut g = LieStructure::new(n);
        // Y_H = sum_{a,b} H_ab x_a xi_b ; wedge with xi_c gives brackets
        // encoded by terms H_ab x_a xi_b xi_c.
        for a in 0..m {
            for b in 0..m {
                let coeff = h[(a, b)].clone();
                if coeff.is_zero() {
                    continue;
                }
                // term x_a xi_b xi_c -> c_{b c}^{a}
                g.add_constant(b as u32 + 1, c, a as u32 + 1, coeff);
            }
        }
        if !mu.is_zero() && d != c {
            g.add_constant(d, c, d, mu.clone());
        }
        g
    };

    let xi1 = (m + 1) as u32;
    let xi2 = (m + 2) as u32;
    let neg_lambda = -q.lambda.clone();
    // X_1 = Y_{(A+B)/2} - lambda x_{m+2} xi_{m+2}; P_1 = X_1 ^ Xi_1
    let g1 = build(&x1_lin, xi1, xi2, &neg_lambda);
    // X_2 = Y_{(B-A)/2} - lambda x_{m+1} xi_{m+1}; P_2 = X_2 ^ Xi_2
    let g2 = build(&x2_lin, xi2, xi1, &neg_lambda);
    Ok((g1, g2))
}
