//! Grade-homogeneous multivectors on a coordinate space, written in
//! anticommuting coordinate symbols `xi_1, ..., xi_n` with affine
//! (constant + linear) polynomial coefficients, together with the coordinate
//! Schouten bracket
//!
//! ```text
//! [[P,Q]] = -sum_i ( dP/dx_i ^ dQ/dxi_i + (-1)^deg(P) dP/dxi_i ^ dQ/dx_i ).
//! ```
//!
//! Indices are 1-based throughout.

use crate::rational::Rational;
use crate::CoreError;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// An affine polynomial `c + sum_i a_i x_i` in the coordinates `x_1..x_n`.
/// No zero linear coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AffinePoly {
    pub constant: Rational,
    pub linear: BTreeMap<u32, Rational>,
}

impl AffinePoly {
    pub fn zero() -> Self {
        AffinePoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        AffinePoly { constant: c, linear: BTreeMap::new() }
    }

    pub fn coordinate(i: u32, c: Rational) -> Self {
        let mut p = AffinePoly::zero();
        p.add_linear(i, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.linear.is_empty()
    }

    pub fn add_linear(&mut self, i: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.linear.entry(i).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.linear.remove(&i);
        }
    }

    pub fn add(&mut self, other: &AffinePoly) {
        self.constant += &other.constant;
        for (&i, c) in &other.linear {
            self.add_linear(i, c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> AffinePoly {
        if c.is_zero() {
            return AffinePoly::zero();
        }
        AffinePoly {
            constant: &self.constant * c,
            linear: self.linear.iter().map(|(&i, v)| (i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> AffinePoly {
        self.scale(&-num_traits::one::<Rational>())
    }

    /// Product, defined only while the result stays affine.
    pub fn mul(&self, other: &AffinePoly) -> Result<AffinePoly, CoreError> {
        if !self.linear.is_empty() && !other.linear.is_empty() {
            return Err(CoreError::NonAffine);
        }
        if self.is_constant() {
            Ok(other.scale(&self.constant))
        } else {
            Ok(self.scale(&other.constant))
        }
    }

    pub fn linear_coeff(&self, i: u32) -> Rational {
        self.linear.get(&i).cloned().unwrap_or_else(Rational::zero)
    }
}

/// A product `xi_{i1} ... xi_{ik}` with strictly increasing indices; the empty
/// list is the grade-0 monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgeMonomial(pub Vec<u32>);

impl WedgeMonomial {
    pub fn unit() -> Self {
        WedgeMonomial(Vec::new())
    }

    pub fn single(i: u32) -> Self {
        WedgeMonomial(vec![i])
    }

    pub fn grade(&self) -> u32 {
        self.0.len() as u32
    }

    /// Sorts the concatenation, counting transpositions; `None` on a repeat.
    pub fn merge(&self, other: &WedgeMonomial) -> Option<(WedgeMonomial, i32)> {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut sign = 1i32;
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x == y {
                        return None;
                    } else if x < y {
                        out.push(x);
                        a.next();
                    } else {
                        // moving y past the remaining factors of `a`
                        if a.len() % 2 == 1 {
                            sign = -sign;
                        }
                        out.push(y);
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    out.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Some((WedgeMonomial(out), sign))
    }

    /// Left derivative by `xi_i`: removing the `p`-th factor carries
    /// sign `(-1)^(p-1)`. `None` when `xi_i` is absent.
    pub fn remove(&self, i: u32) -> Option<(WedgeMonomial, i32)> {
        let p = self.0.iter().position(|&j| j == i)?;
        let mut rest = self.0.clone();
        rest.remove(p);
        Some((WedgeMonomial(rest), if p % 2 == 0 { 1 } else { -1 }))
    }
}

/// A grade-homogeneous multivector with affine coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiVector {
    dim: u32,
    grade: u32,
    terms: BTreeMap<WedgeMonomial, AffinePoly>,
}

impl MultiVector {
    pub fn zero(dim: u32, grade: u32) -> Self {
        MultiVector { dim, grade, terms: BTreeMap::new() }
    }

    /// The grade-0 multivector with the given affine coefficient.
    pub fn scalar(dim: u32, p: AffinePoly) -> Self {
        let mut m = MultiVector::zero(dim, 0);
        m.add_term(WedgeMonomial::unit(), p);
        m
    }

    /// The coordinate function `x_i` as a grade-0 multivector.
    pub fn coordinate(dim: u32, i: u32) -> Result<Self, CoreError> {
        check_index(i, dim)?;
        Ok(MultiVector::scalar(dim, AffinePoly::coordinate(i, num_traits::one())))
    }

    /// The constant field `xi_i` as a grade-1 multivector.
    pub fn xi(dim: u32, i: u32) -> Result<Self, CoreError> {
        check_index(i, dim)?;
        let mut m = MultiVector::zero(dim, 1);
        m.add_term(WedgeMonomial::single(i), AffinePoly::constant(num_traits::one()));
        Ok(m)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn grade(&self) -> u32 {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WedgeMonomial, &AffinePoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &WedgeMonomial) -> AffinePoly {
        self.terms.get(m).cloned().unwrap_or_else(AffinePoly::zero)
    }

    /// Adds `p * xi_m`; keeps the no-zero-terms invariant.
    pub fn add_term(&mut self, m: WedgeMonomial, p: AffinePoly) {
        debug_assert_eq!(m.grade(), self.grade, "grade mismatch in add_term");
        debug_assert!(m.0.iter().all(|&i| i >= 1 && i <= self.dim));
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(q) => {
                q.add(&p);
                if q.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, p);
            }
        }
    }

    pub fn add(&self, other: &MultiVector) -> Result<MultiVector, CoreError> {
        check_dims(self.dim, other.dim)?;
        // zeros of a mismatched formal grade are absorbed
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        debug_assert_eq!(self.grade, other.grade, "adding different grades");
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.add_term(m.clone(), p.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiVector {
        if c.is_zero() {
            return MultiVector::zero(self.dim, self.grade);
        }
        let mut out = MultiVector::zero(self.dim, self.grade);
        for (m, p) in &self.terms {
            out.add_term(m.clone(), p.scale(c));
        }
        out
    }

    pub fn neg(&self) -> MultiVector {
        self.scale(&-num_traits::one::<Rational>())
    }

    pub fn sub(&self, other: &MultiVector) -> Result<MultiVector, CoreError> {
        self.add(&other.neg())
    }

    /// Wedge product. Errors when a coefficient product would leave the
    /// affine class (vanishing monomials are dropped before that check).
    pub fn wedge(&self, other: &MultiVector) -> Result<MultiVector, CoreError> {
        check_dims(self.dim, other.dim)?;
        let mut out = MultiVector::zero(self.dim, self.grade + other.grade);
        for (m1, p1) in &self.terms {
            for (m2, p2) in &other.terms {
                let Some((m, sign)) = m1.merge(m2) else {
                    continue;
                };
                let mut p = p1.mul(p2)?;
                if sign < 0 {
                    p = p.neg();
                }
                out.add_term(m, p);
            }
        }
        Ok(out)
    }

    /// Partial derivative by `x_i`: acts on coefficients only.
    pub fn d_dx(&self, i: u32) -> Result<MultiVector, CoreError> {
        check_index(i, self.dim)?;
        let mut out = MultiVector::zero(self.dim, self.grade);
        for (m, p) in &self.terms {
            let c = p.linear_coeff(i);
            if !c.is_zero() {
                out.add_term(m.clone(), AffinePoly::constant(c));
            }
        }
        Ok(out)
    }

    /// Left derivative by `xi_i`: grade drops by one; grade-0 input gives 0.
    pub fn d_dxi(&self, i: u32) -> Result<MultiVector, CoreError> {
        check_index(i, self.dim)?;
        if self.grade == 0 {
            return Ok(MultiVector::zero(self.dim, 0));
        }
        let mut out = MultiVector::zero(self.dim, self.grade - 1);
        for (m, p) in &self.terms {
            if let Some((rest, sign)) = m.remove(i) {
                out.add_term(rest, if sign < 0 { p.neg() } else { p.clone() });
            }
        }
        Ok(out)
    }

    /// The coordinate Schouten bracket. The result of bracketing two
    /// affine-coefficient multivectors has affine coefficients again, because
    /// `d/dx` produces constant coefficients.
    pub fn schouten(&self, other: &MultiVector) -> Result<MultiVector, CoreError> {
        check_dims(self.dim, other.dim)?;
        let total = self.grade + other.grade;
        let grade = if total == 0 { 0 } else { total - 1 };
        let mut out = MultiVector::zero(self.dim, grade);
        let sign_p = if self.grade % 2 == 0 { 1 } else { -1 };
        for i in 1..=self.dim {
            let t1 = self.d_dx(i)?.wedge(&other.d_dxi(i)?)?;
            let mut t2 = self.d_dxi(i)?.wedge(&other.d_dx(i)?)?;
            if sign_p < 0 {
                t2 = t2.neg();
            }
            if t1.is_zero() && t2.is_zero() {
                continue;
            }
            out = out.add(&t1.add(&t2)?.neg())?;
        }
        Ok(out)
    }

    /// Rank of a bivector: the largest `2k` with `P^k != 0` as formal wedge
    /// powers (polynomial coefficients of arbitrary degree are allowed here).
    pub fn mv_rank(&self) -> Result<u32, CoreError> {
        if self.grade != 2 {
            return Err(CoreError::NotABivector { grade: self.grade });
        }
        if self.is_zero() {
            return Ok(0);
        }
        let base = PolyMv::from_multivector(self);
        let mut power = base.clone();
        let mut k = 1u32;
        loop {
            let next = power.wedge(&base);
            if next.terms.is_empty() {
                return Ok(2 * k);
            }
            power = next;
            k += 1;
        }
    }
}

impl fmt::Display for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, p) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "(")?;
            let mut inner_first = true;
            if !p.constant.is_zero() {
                write!(f, "{}", p.constant)?;
                inner_first = false;
            }
            for (i, c) in &p.linear {
                if !inner_first {
                    write!(f, " + ")?;
                }
                write!(f, "{c}*x{i}")?;
                inner_first = false;
            }
            write!(f, ")")?;
            for i in &m.0 {
                write!(f, "&{i}")?;
            }
        }
        Ok(())
    }
}

/// Multivector with full polynomial coefficients; only used internally for
/// wedge powers in rank computation.
#[derive(Debug, Clone)]
struct PolyMv {
    /// monomial -> (multidegree in x -> coefficient)
    terms: BTreeMap<WedgeMonomial, BTreeMap<Vec<(u32, u32)>, Rational>>,
}

impl PolyMv {
    fn from_multivector(v: &MultiVector) -> Self {
        let mut terms: BTreeMap<WedgeMonomial, BTreeMap<Vec<(u32, u32)>, Rational>> =
            BTreeMap::new();
        for (m, p) in &v.terms {
            let poly = terms.entry(m.clone()).or_default();
            if !p.constant.is_zero() {
                poly.insert(Vec::new(), p.constant.clone());
            }
            for (&i, c) in &p.linear {
                poly.insert(vec![(i, 1)], c.clone());
            }
        }
        PolyMv { terms }
    }

    fn wedge(&self, other: &PolyMv) -> PolyMv {
        let mut out: BTreeMap<WedgeMonomial, BTreeMap<Vec<(u32, u32)>, Rational>> =
            BTreeMap::new();
        for (m1, p1) in &self.terms {
            for (m2, p2) in &other.terms {
                let Some((m, sign)) = m1.merge(m2) else {
                    continue;
                };
                for (d1, c1) in p1 {
                    for (d2, c2) in p2 {
                        let mut c = c1 * c2;
                        if sign < 0 {
                            c = -c;
                        }
                        let d = mul_degrees(d1, d2);
                        let poly = out.entry(m.clone()).or_default();
                        let entry = poly.entry(d).or_insert_with(Rational::zero);
                        *entry += c;
                    }
                }
            }
        }
        for poly in out.values_mut() {
            poly.retain(|_, c| !c.is_zero());
        }
        out.retain(|_, poly| !poly.is_empty());
        PolyMv { terms: out }
    }
}

fn mul_degrees(a: &[(u32, u32)], b: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut map: BTreeMap<u32, u32> = a.iter().cloned().collect();
    for &(i, e) in b {
        *map.entry(i).or_insert(0) += e;
    }
    map.into_iter().collect()
}

fn check_dims(a: u32, b: u32) -> Result<(), CoreError> {
    if a != b {
        return Err(CoreError::DimensionMismatch { left: a, right: b });
    }
    Ok(())
}

fn check_index(i: u32, dim: u32) -> Result<(), CoreError> {
    if i == 0 || i > dim {
        return Err(CoreError::IndexOutOfRange { index: i, dim });
    }
    Ok(())
}

/// `x_k xi_i xi_j` — the building block of linear bivectors.
pub fn linear_bivector_term(dim: u32, i: u32, j: u32, k: u32, c: Rational) -> MultiVector {
    let mut m = MultiVector::zero(dim, 2);
    let (mono, sign) = WedgeMonomial::single(i).merge(&WedgeMonomial::single(j)).expect("i != j");
    let coeff = AffinePoly::coordinate(k, if sign < 0 { -c } else { c });
    m.add_term(mono, coeff);
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    fn xi(dim: u32, i: u32) -> MultiVector {
        MultiVector::xi(dim, i).unwrap()
    }

    #[test]
    fn wedge_signs_and_nilpotency() {
        // xi1 ^ xi2 = xi1xi2, xi2 ^ xi1 = -xi1xi2
        let a = xi(3, 1).wedge(&xi(3, 2)).unwrap();
        let b = xi(3, 2).wedge(&xi(3, 1)).unwrap();
        assert_eq!(a, b.neg());
        assert!(!a.is_zero());
        // repeated factor vanishes: (x3 xi1xi2) ^ (x3 xi1xi2) = 0
        let p = linear_bivector_term(3, 1, 2, 3, rint(1));
        assert!(p.wedge(&p).unwrap().is_zero());
    }

    #[test]
    fn partial_derivatives() {
        let p = linear_bivector_term(3, 1, 2, 3, rint(1)); // x3 xi1xi2
        let d3 = p.d_dx(3).unwrap();
        assert_eq!(d3, xi(3, 1).wedge(&xi(3, 2)).unwrap());
        assert!(p.d_dx(1).unwrap().is_zero());
        // d_dxi(xi1xi2, 1) = xi2 ; d_dxi(xi1xi2, 2) = -xi1
        let m = xi(3, 1).wedge(&xi(3, 2)).unwrap();
        assert_eq!(m.d_dxi(1).unwrap(), xi(3, 2));
        assert_eq!(m.d_dxi(2).unwrap(), xi(3, 1).neg());
        assert!(p.d_dxi(3).unwrap().is_zero());
        // 5 xi1 + x2 xi2 differentiated by x2
        let mut q = MultiVector::zero(3, 1);
        q.add_term(WedgeMonomial::single(1), AffinePoly::constant(rint(5)));
        q.add_term(WedgeMonomial::single(2), AffinePoly::coordinate(2, rint(1)));
        assert_eq!(q.d_dx(2).unwrap(), xi(3, 2));
    }

    #[test]
    fn schouten_heisenberg_square_is_zero() {
        let p = linear_bivector_term(3, 1, 2, 3, rint(1));
        assert!(p.schouten(&p).unwrap().is_zero());
    }

    #[test]
    fn schouten_with_function_is_hamiltonian_field() {
        // [[x3 xi1xi2, x1]] = -x3 xi2
        let p = linear_bivector_term(3, 1, 2, 3, rint(1));
        let f = MultiVector::coordinate(3, 1).unwrap();
        let b = p.schouten(&f).unwrap();
        let mut expect = MultiVector::zero(3, 1);
        expect.add_term(WedgeMonomial::single(2), AffinePoly::coordinate(3, rat(-1, 1)));
        assert_eq!(b, expect);
    }

    #[test]
    fn schouten_incompatible_pair_nonzero() {
        // [[x1 xi3xi4, x3 xi1xi2]] != 0 (grade 3)
        let p = linear_bivector_term(4, 3, 4, 1, rint(1));
        let q = linear_bivector_term(4, 1, 2, 3, rint(1));
        let b = p.schouten(&q).unwrap();
        assert_eq!(b.grade(), 3);
        assert!(!b.is_zero());
    }

    #[test]
    fn ranks() {
        let p = linear_bivector_term(3, 1, 2, 3, rint(1));
        assert_eq!(p.mv_rank().unwrap(), 2);
        let mut q = linear_bivector_term(5, 1, 2, 5, rint(1));
        q = q.add(&linear_bivector_term(5, 3, 4, 5, rint(1))).unwrap();
        assert_eq!(q.mv_rank().unwrap(), 4);
        assert_eq!(MultiVector::zero(4, 2).mv_rank().unwrap(), 0);
        assert!(xi(3, 1).mv_rank().is_err());
    }

    #[test]
    fn wedge_affine_closure_is_checked() {
        let p = MultiVector::scalar(2, AffinePoly::coordinate(1, rint(1)));
        let q = MultiVector::scalar(2, AffinePoly::coordinate(2, rint(1)));
        assert_eq!(p.wedge(&q), Err(CoreError::NonAffine));
        // but a vanishing wedge monomial never multiplies coefficients
        let a = MultiVector::xi(2, 1).unwrap();
        let xa = a
            .clone()
            .wedge(&MultiVector::scalar(2, AffinePoly::coordinate(1, rint(1))))
            .unwrap();
        assert!(xa.wedge(&xa).unwrap().is_zero());
    }
}
