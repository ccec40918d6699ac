//! Base lieons on a fixed basis: a tee `|_ i,j | k _|` is the structure whose
//! only bracket is `[e_i, e_j] = e_k` (a Heisenberg-plus-abelian algebra), a
//! dee `|_ p | q _|` has `[e_p, e_q] = e_q` (2-dim nonabelian plus abelian).
//! Pairwise compatibility of base lieons is a purely combinatorial matter of
//! shared vertices; the rules here are checked exhaustively against the
//! Schouten bracket oracle in the test suite.

use crate::lie::LieStructure;
use crate::rational::Rational;
use crate::CoreError;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet};

/// `|_ i,j | k _|` with unordered ends `{i, j}` and center `k`;
/// `|_ j,i | k _|` is identified with the negative, so the ends are stored
/// sorted and the sign is absorbed into the coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tee {
    ends: (u32, u32),
    center: u32,
    pub coeff: Rational,
}

/// `|_ p | q _|` with origin `p` and end `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dee {
    origin: u32,
    end: u32,
    pub coeff: Rational,
}

impl Tee {
    pub fn new(i: u32, j: u32, k: u32, coeff: Rational) -> Result<Self, CoreError> {
        if i == j || i == k || j == k || i == 0 || j == 0 || k == 0 {
            return Err(CoreError::BadLieon(format!("tee vertices {i},{j},{k} not distinct/positive")));
        }
        let (ends, coeff) = if i < j { ((i, j), coeff) } else { ((j, i), -coeff) };
        Ok(Tee { ends, center: k, coeff })
    }

    pub fn unit(i: u32, j: u32, k: u32) -> Self {
        Tee::new(i, j, k, Rational::one()).expect("valid vertices")
    }

    pub fn ends(&self) -> (u32, u32) {
        self.ends
    }

    pub fn center(&self) -> u32 {
        self.center
    }

    pub fn key(&self) -> (u32, u32, u32) {
        (self.ends.0, self.ends.1, self.center)
    }

    pub fn has_end(&self, v: u32) -> bool {
        self.ends.0 == v || self.ends.1 == v
    }

    pub fn vertices(&self) -> [u32; 3] {
        [self.ends.0, self.ends.1, self.center]
    }
}

impl Dee {
    pub fn new(p: u32, q: u32, coeff: Rational) -> Result<Self, CoreError> {
        if p == q || p == 0 || q == 0 {
            return Err(CoreError::BadLieon(format!("dee vertices {p},{q} not distinct/positive")));
        }
        Ok(Dee { origin: p, end: q, coeff })
    }

    pub fn unit(p: u32, q: u32) -> Self {
        Dee::new(p, q, Rational::one()).expect("valid vertices")
    }

    pub fn origin(&self) -> u32 {
        self.origin
    }

    pub fn end(&self) -> u32 {
        self.end
    }

    pub fn key(&self) -> (u32, u32) {
        (self.origin, self.end)
    }

    pub fn vertices(&self) -> [u32; 2] {
        [self.origin, self.end]
    }
}

/// Either kind of base lieon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseLieon {
    Tee(Tee),
    Dee(Dee),
}

impl BaseLieon {
    pub fn vertices(&self) -> Vec<u32> {
        match self {
            BaseLieon::Tee(t) => t.vertices().to_vec(),
            BaseLieon::Dee(d) => d.vertices().to_vec(),
        }
    }

    pub fn max_vertex(&self) -> u32 {
        self.vertices().into_iter().max().unwrap()
    }

    /// Stable ordering key used for deterministic closures and enumeration:
    /// tees before dees, then lexicographic on vertex data.
    pub fn order_key(&self) -> (u8, u32, u32, u32) {
        match self {
            BaseLieon::Tee(t) => (0, t.ends.0, t.ends.1, t.center),
            BaseLieon::Dee(d) => (1, d.origin, d.end, 0),
        }
    }

    /// The realized structure on ambient dimension `n`.
    pub fn realize(&self, n: u32) -> Result<LieStructure, CoreError> {
        if self.max_vertex() > n {
            return Err(CoreError::IndexOutOfRange { index: self.max_vertex(), dim: n });
        }
        let mut g = LieStructure::new(n);
        match self {
            BaseLieon::Tee(t) => {
                g.add_constant(t.ends.0, t.ends.1, t.center, t.coeff.clone());
            }
            BaseLieon::Dee(d) => {
                g.add_constant(d.origin, d.end, d.end, d.coeff.clone());
            }
        }
        Ok(g)
    }
}

/// Purely combinatorial compatibility decision for two base lieons. Two
/// lieons sharing no vertex, or proportional ones, are trivially compatible;
/// otherwise:
///
/// * tee-tee: compatible iff they share a center vertex or an end vertex;
/// * dee-dee: incompatible iff the origin of one is the end of the other and
///   there is no other common vertex;
/// * tee-dee: compatible iff the dee's origin is one of the tee's ends.
///
/// Coefficients never matter.
pub fn compatible_base(x: &BaseLieon, y: &BaseLieon) -> bool {
    let disjoint = x.vertices().iter().all(|v| !y.vertices().contains(v));
    if disjoint {
        return true;
    }
    match (x, y) {
        (BaseLieon::Tee(a), BaseLieon::Tee(b)) => {
            if a.key() == b.key() {
                return true;
            }
            a.center == b.center || a.has_end(b.ends.0) || a.has_end(b.ends.1)
        }
        (BaseLieon::Dee(a), BaseLieon::Dee(b)) => {
            if a.key() == b.key() {
                return true;
            }
            let double = a.origin == b.end && a.end == b.origin;
            let same_role = a.origin == b.origin || a.end == b.end;
            let crossed = a.origin == b.end || a.end == b.origin;
            double || same_role || !crossed
        }
        (BaseLieon::Tee(t), BaseLieon::Dee(d)) | (BaseLieon::Dee(d), BaseLieon::Tee(t)) => {
            t.has_end(d.origin)
        }
    }
}

/// Coefficient-free identity of a family: its tee and dee vertex keys.
pub type FamilyKey = (Vec<(u32, u32, u32)>, Vec<(u32, u32)>);

/// A family of tees and dees on a common basis, keyed by vertex descriptors
/// (so duplicates are impossible); each member carries a coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseFamily {
    dim: u32,
    tees: BTreeMap<(u32, u32, u32), Rational>,
    dees: BTreeMap<(u32, u32), Rational>,
}

impl BaseFamily {
    pub fn new(dim: u32) -> Self {
        BaseFamily { dim, tees: BTreeMap::new(), dees: BTreeMap::new() }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn insert_tee(&mut self, t: Tee) -> Result<(), CoreError> {
        if t.vertices().iter().any(|&v| v > self.dim) {
            return Err(CoreError::IndexOutOfRange { index: t.vertices().iter().max().copied().unwrap(), dim: self.dim });
        }
        self.tees.insert(t.key(), t.coeff);
        Ok(())
    }

    pub fn insert_dee(&mut self, d: Dee) -> Result<(), CoreError> {
        if d.vertices().iter().any(|&v| v > self.dim) {
            return Err(CoreError::IndexOutOfRange { index: d.vertices().iter().max().copied().unwrap(), dim: self.dim });
        }
        self.dees.insert(d.key(), d.coeff);
        Ok(())
    }

    pub fn insert(&mut self, l: BaseLieon) -> Result<(), CoreError> {
        match l {
            BaseLieon::Tee(t) => self.insert_tee(t),
            BaseLieon::Dee(d) => self.insert_dee(d),
        }
    }

    /// Builds a unit-coefficient family from descriptors.
    pub fn from_members(dim: u32, members: &[BaseLieon]) -> Result<Self, CoreError> {
        let mut f = BaseFamily::new(dim);
        for m in members {
            f.insert(m.clone())?;
        }
        Ok(f)
    }

    pub fn len(&self) -> usize {
        self.tees.len() + self.dees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tees.is_empty() && self.dees.is_empty()
    }

    pub fn tee_keys(&self) -> impl Iterator<Item = &(u32, u32, u32)> {
        self.tees.keys()
    }

    pub fn dee_keys(&self) -> impl Iterator<Item = &(u32, u32)> {
        self.dees.keys()
    }

    pub fn contains_tee(&self, i: u32, j: u32, k: u32) -> bool {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.tees.contains_key(&(i, j, k))
    }

    pub fn contains_dee(&self, p: u32, q: u32) -> bool {
        self.dees.contains_key(&(p, q))
    }

    /// Members with their stored coefficients, in deterministic order.
    pub fn members(&self) -> Vec<BaseLieon> {
        let mut out: Vec<BaseLieon> = self
            .tees
            .iter()
            .map(|(&(i, j, k), c)| BaseLieon::Tee(Tee { ends: (i, j), center: k, coeff: c.clone() }))
            .chain(
                self.dees
                    .iter()
                    .map(|(&(p, q), c)| BaseLieon::Dee(Dee { origin: p, end: q, coeff: c.clone() })),
            )
            .collect();
        out.sort_by_key(|l| l.order_key());
        out
    }

    /// The vertex support `S(F)`.
    pub fn support(&self) -> BTreeSet<u32> {
        let mut s = BTreeSet::new();
        for (i, j, k) in self.tees.keys() {
            s.extend([*i, *j, *k]);
        }
        for (p, q) in self.dees.keys() {
            s.extend([*p, *q]);
        }
        s
    }

    /// Edges of the vertex graph: a dee links its two vertices, a tee links
    /// its center to each end.
    pub fn graph_edges(&self) -> BTreeSet<(u32, u32)> {
        let mut e = BTreeSet::new();
        let mut put = |a: u32, b: u32| {
            e.insert(if a < b { (a, b) } else { (b, a) });
        };
        for &(i, j, k) in self.tees.keys() {
            put(i, k);
            put(j, k);
        }
        for &(p, q) in self.dees.keys() {
            put(p, q);
        }
        e
    }

    /// Connectivity of the vertex graph.
    pub fn graph_connected(&self) -> bool {
        let support = self.support();
        let Some(&start) = support.iter().next() else {
            return true;
        };
        let edges = self.graph_edges();
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(a, b) in &edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
        }
        seen == support
    }

    /// Mutual (pairwise) compatibility of all members.
    pub fn is_compatible(&self) -> bool {
        let members = self.members();
        for (i, a) in members.iter().enumerate() {
            for b in members.iter().skip(i + 1) {
                if !compatible_base(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// The realized sum `sum coeff * lieon` on the ambient space.
    pub fn realize(&self) -> Result<LieStructure, CoreError> {
        let mut g = LieStructure::new(self.dim);
        for m in self.members() {
            g = g.sum(&m.realize(self.dim)?)?;
        }
        Ok(g)
    }

    /// Relabels vertices by the permutation `perm` (1-based: vertex `v` maps
    /// to `perm[v-1]`); coefficients are carried along, tee signs are
    /// re-canonicalized.
    pub fn relabel(&self, perm: &[u32]) -> BaseFamily {
        let mut out = BaseFamily::new(self.dim);
        for ((i, j, k), c) in &self.tees {
            let t = Tee::new(
                perm[(*i - 1) as usize],
                perm[(*j - 1) as usize],
                perm[(*k - 1) as usize],
                c.clone(),
            )
            .expect("permutation keeps vertices distinct");
            out.insert_tee(t).expect("within dim");
        }
        for ((p, q), c) in &self.dees {
            let d = Dee::new(perm[(*p - 1) as usize], perm[(*q - 1) as usize], c.clone())
                .expect("distinct");
            out.insert_dee(d).expect("within dim");
        }
        out
    }

    /// Canonical key ignoring coefficients: the member descriptor list.
    pub fn descriptor_key(&self) -> FamilyKey {
        (self.tees.keys().cloned().collect(), self.dees.keys().cloned().collect())
    }
}

/// `family_is_compatible` as a free function, mirroring the operation name.
pub fn family_is_compatible(f: &BaseFamily) -> bool {
    f.is_compatible()
}

/// Builds the tee family determined by `(n-2)`-dimensional coordinate centers
/// and a line index inside each; requires the tight condition: all centers
/// share an `(n-3)`-dimensional coordinate subspace (pencil), or all centers
/// lie in a common coordinate hyperplane (co-pencil). The resulting family is
/// mutually compatible.
pub fn tight_pencil_family(
    n: u32,
    centers: &[BTreeSet<u32>],
    lines: &[u32],
) -> Result<BaseFamily, CoreError> {
    if centers.len() != lines.len() {
        return Err(CoreError::PencilViolation("centers/lines length mismatch".into()));
    }
    for (c, &l) in centers.iter().zip(lines) {
        if c.len() as u32 != n - 2 {
            return Err(CoreError::PencilViolation(format!(
                "center has {} indices, expected {}",
                c.len(),
                n - 2
            )));
        }
        if c.iter().any(|&v| v == 0 || v > n) {
            return Err(CoreError::PencilViolation("center index out of range".into()));
        }
        if !c.contains(&l) {
            return Err(CoreError::PencilViolation(format!("line {l} not inside its center")));
        }
    }
    if centers.len() > 1 {
        let mut common = centers[0].clone();
        for c in &centers[1..] {
            common = common.intersection(c).cloned().collect();
        }
        let pencil = common.len() as u32 >= n.saturating_sub(3);
        let co_pencil = (1..=n).any(|m| centers.iter().all(|c| !c.contains(&m)));
        if !pencil && !co_pencil {
            return Err(CoreError::PencilViolation(
                "centers neither share an (n-3)-subspace nor avoid a common hyperplane".into(),
            ));
        }
    }
    let mut fam = BaseFamily::new(n);
    for (c, &l) in centers.iter().zip(lines) {
        let ends: Vec<u32> = (1..=n).filter(|v| !c.contains(v)).collect();
        debug_assert_eq!(ends.len(), 2);
        fam.insert_tee(Tee::unit(ends[0], ends[1], l))?;
    }
    debug_assert!(fam.is_compatible());
    Ok(fam)
}

/// Every base lieon with vertices in `{1..n}`, in deterministic order.
pub fn all_base_lieons(n: u32) -> Vec<BaseLieon> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=n {
                if k != i && k != j {
                    out.push(BaseLieon::Tee(Tee::unit(i, j, k)));
                }
            }
        }
    }
    for p in 1..=n {
        for q in 1..=n {
            if p != q {
                out.push(BaseLieon::Dee(Dee::unit(p, q)));
            }
        }
    }
    out.sort_by_key(|l| l.order_key());
    out
}
