//! Classical Lie algebras over the rationals and their canonical complete
//! disassemblings into fork/dee lieons.
//!
//! * orthogonal `so(g)` for a diagonal form `g = sum a_i x_i^2`: basis
//!   `{e_ij}_{i<j}` with `[e_ij, e_jk] = a_j e_ik`; two levels — first by the
//!   mediating index, then into single brackets;
//! * symplectic `sp(2n)` modeled as quadratic polynomials in `p, q` under the
//!   Poisson bracket `sum_i d/dp_i ^ d/dq_i`; first level splits the bracket
//!   by the `(p_i, q_i)` pair, each factor is then stripped down to lieons;
//! * `gl(n)` / `sl(n)` and their twisted forms `u(n)` / `su(n)`: the
//!   transpose-respecting basis splits the algebra into an antisymmetric part
//!   acting on a symmetric part plus a dressing algebra whose sign is the
//!   `lambda` scale (+1 for gl/sl, -1 for u/su).

use crate::lie::LieStructure;
use crate::matrix::{unit_vec, Mat};
use crate::rational::{rint, Rational};
use crate::scheme::AScheme;
use crate::CoreError;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalKind {
    So,
    Sp,
    Gl,
    Sl,
    U,
    Su,
}

impl ClassicalKind {
    pub fn name(&self) -> &'static str {
        match self {
            ClassicalKind::So => "so",
            ClassicalKind::Sp => "sp",
            ClassicalKind::Gl => "gl",
            ClassicalKind::Sl => "sl",
            ClassicalKind::U => "u",
            ClassicalKind::Su => "su",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "so" => Some(ClassicalKind::So),
            "sp" => Some(ClassicalKind::Sp),
            "gl" => Some(ClassicalKind::Gl),
            "sl" => Some(ClassicalKind::Sl),
            "u" => Some(ClassicalKind::U),
            "su" => Some(ClassicalKind::Su),
            _ => None,
        }
    }
}

/// Specification of a classical algebra. For `so` the `params` are the
/// diagonal form coefficients `a_1..a_n` (all nonzero). For `sp` the size is
/// the total dimension `2n` of the symplectic space. The `lambda` scale
/// twists the dressing part; +1 gives gl/sl, -1 gives u/su.
#[derive(Debug, Clone)]
pub struct ClassicalSpec {
    pub kind: ClassicalKind,
    pub n: u32,
    pub params: Vec<Rational>,
    pub lambda: Rational,
}

impl ClassicalSpec {
    pub fn so(n: u32, params: Vec<Rational>) -> Result<Self, CoreError> {
        if n < 2 {
            return Err(CoreError::BadClassicalSpec("so needs n >= 2".into()));
        }
        if params.len() != n as usize {
            return Err(CoreError::BadClassicalSpec(format!(
                "so({n}) needs {n} form coefficients, got {}",
                params.len()
            )));
        }
        if params.iter().any(Rational::is_zero) {
            return Err(CoreError::BadClassicalSpec("degenerate form: a_i = 0".into()));
        }
        Ok(ClassicalSpec { kind: ClassicalKind::So, n, params, lambda: Rational::one() })
    }

    pub fn sp(two_n: u32) -> Result<Self, CoreError> {
        if two_n < 2 || two_n % 2 != 0 {
            return Err(CoreError::BadClassicalSpec("sp needs an even size 2n >= 2".into()));
        }
        Ok(ClassicalSpec { kind: ClassicalKind::Sp, n: two_n, params: Vec::new(), lambda: Rational::one() })
    }

    pub fn matrix_kind(kind: ClassicalKind, n: u32) -> Result<Self, CoreError> {
        let lambda = match kind {
            ClassicalKind::Gl | ClassicalKind::Sl => Rational::one(),
            ClassicalKind::U | ClassicalKind::Su => -Rational::one(),
            _ => return Err(CoreError::BadClassicalSpec("not a matrix kind".into())),
        };
        if n < 2 {
            return Err(CoreError::BadClassicalSpec("matrix kinds need n >= 2".into()));
        }
        Ok(ClassicalSpec { kind, n, params: Vec::new(), lambda })
    }

    pub fn gl(n: u32) -> Result<Self, CoreError> {
        Self::matrix_kind(ClassicalKind::Gl, n)
    }

    pub fn sl(n: u32) -> Result<Self, CoreError> {
        Self::matrix_kind(ClassicalKind::Sl, n)
    }

    pub fn u(n: u32) -> Result<Self, CoreError> {
        Self::matrix_kind(ClassicalKind::U, n)
    }

    pub fn su(n: u32) -> Result<Self, CoreError> {
        Self::matrix_kind(ClassicalKind::Su, n)
    }

    /// Dimension of the resulting structure.
    pub fn dim(&self) -> u32 {
        match self.kind {
            ClassicalKind::So => self.n * (self.n - 1) / 2,
            ClassicalKind::Sp => {
                let h = self.n / 2;
                h * (2 * h + 1)
            }
            ClassicalKind::Gl | ClassicalKind::U => self.n * self.n,
            ClassicalKind::Sl | ClassicalKind::Su => self.n * self.n - 1,
        }
    }
}

pub fn make_classical(spec: &ClassicalSpec) -> Result<LieStructure, CoreError> {
    match spec.kind {
        ClassicalKind::So => Ok(so_structure(&spec.params)),
        ClassicalKind::Sp => Ok(sp_structure(spec.n / 2)),
        _ => gl_family_structure(spec),
    }
}

pub fn canonical_scheme(spec: &ClassicalSpec) -> Result<AScheme, CoreError> {
    match spec.kind {
        ClassicalKind::So => Ok(so_scheme(&spec.params)),
        ClassicalKind::Sp => Ok(sp_scheme(spec.n / 2)),
        _ => gl_family_scheme(spec),
    }
}

// ---------------------------------------------------------------------------
// helpers shared by the schemes

/// Splits a structure into one piece per bracket pair `(i, j)`; used when a
/// node disassembles into its single brackets.
fn split_by_pairs(g: &LieStructure) -> Vec<LieStructure> {
    let mut groups: BTreeMap<(u32, u32), LieStructure> = BTreeMap::new();
    for (&(i, j, k), c) in g.constants() {
        groups
            .entry((i, j))
            .or_insert_with(|| LieStructure::new(g.dim()))
            .add_constant(i, j, k, c.clone());
    }
    groups.into_values().collect()
}

/// Keeps only the structure constants selected by the predicate (1-based
/// standard indices).
fn filter_constants<F>(g: &LieStructure, keep: F) -> LieStructure
where
    F: Fn(u32, u32, u32) -> bool,
{
    let mut out = LieStructure::new(g.dim());
    for (&(i, j, k), c) in g.constants() {
        if keep(i, j, k) {
            out.add_constant(i, j, k, c.clone());
        }
    }
    out
}

fn leaf_auto(g: LieStructure) -> AScheme {
    let label = match g.recognize_lieon() {
        Ok(crate::lie::LieonKind::Fork(n)) => format!("fork({n})"),
        Ok(crate::lie::LieonKind::Dee(n)) => format!("dee({n})"),
        _ => String::new(),
    };
    AScheme::leaf(g, label)
}

/// A node whose children are the single brackets of `g`; a single-bracket `g`
/// is itself a leaf.
fn node_of_singles(g: LieStructure, label: &str) -> AScheme {
    let parts = split_by_pairs(&g);
    if parts.len() <= 1 {
        return leaf_auto(g);
    }
    AScheme::internal(g, label, parts.into_iter().map(leaf_auto).collect())
}

/// A node with the given (nonzero) parts as children; collapses trivial
/// shapes instead of emitting single-child nodes.
fn node_of_parts(g: LieStructure, label: &str, parts: Vec<AScheme>) -> AScheme {
    let mut parts: Vec<AScheme> = parts.into_iter().filter(|p| !p.node.is_zero()).collect();
    if parts.len() == 1 {
        return parts.pop().unwrap();
    }
    AScheme::internal(g, label, parts)
}

// ---------------------------------------------------------------------------
// so(g)

/// Basis pairs `(i, j)` with `i < j`, ordered lexicographically; 1-based
/// structure index.
fn so_index(n: u32) -> (BTreeMap<(u32, u32), u32>, Vec<(u32, u32)>) {
    let mut map = BTreeMap::new();
    let mut list = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            list.push((i, j));
            map.insert((i, j), list.len() as u32);
        }
    }
    (map, list)
}

/// `[e_P, e_Q]` for basis pairs sharing exactly one index `m`:
/// `±a_m e_{other two}`; zero otherwise.
fn so_bracket(
    params: &[Rational],
    p: (u32, u32),
    q: (u32, u32),
) -> Option<(u32, (u32, u32), Rational)> {
    if p == q {
        return None;
    }
    let shared: Vec<u32> =
        [p.0, p.1].iter().filter(|&&x| x == q.0 || x == q.1).cloned().collect();
    if shared.len() != 1 {
        return None;
    }
    let m = shared[0];
    // first factor as +/- e_{a m}
    let (a, s1) = if p.1 == m { (p.0, 1) } else { (p.1, -1) };
    // second factor as +/- e_{m c}
    let (c, s2) = if q.0 == m { (q.1, 1) } else { (q.0, -1) };
    debug_assert_ne!(a, c);
    let (pair, s3) = if a < c { ((a, c), 1) } else { ((c, a), -1) };
    let mut coeff = params[(m - 1) as usize].clone();
    if s1 * s2 * s3 < 0 {
        coeff = -coeff;
    }
    Some((m, pair, coeff))
}

fn so_structure(params: &[Rational]) -> LieStructure {
    let n = params.len() as u32;
    let (map, list) = so_index(n);
    let big = list.len() as u32;
    let mut g = LieStructure::new(big);
    for (ai, &pa) in list.iter().enumerate() {
        for &pb in list.iter().skip(ai + 1) {
            if let Some((_, pc, c)) = so_bracket(params, pa, pb) {
                g.add_constant(ai as u32 + 1, map[&pb], map[&pc], c);
            }
        }
    }
    g
}

/// One block per mediating index: the brackets `[e_i_alpha, e_alpha_j]` with
/// unit form coefficient.
fn so_blocks(n: u32) -> Vec<LieStructure> {
    let ones = vec![Rational::one(); n as usize];
    let (map, list) = so_index(n);
    let big = list.len() as u32;
    (1..=n)
        .map(|alpha| {
            let mut block = LieStructure::new(big);
            for (ai, &pa) in list.iter().enumerate() {
                for &pb in list.iter().skip(ai + 1) {
                    if let Some((m, pc, c)) = so_bracket(&ones, pa, pb) {
                        if m == alpha {
                            block.add_constant(ai as u32 + 1, map[&pb], map[&pc], c);
                        }
                    }
                }
            }
            block
        })
        .collect()
}

fn so_scheme(params: &[Rational]) -> AScheme {
    let root = so_structure(params);
    let children = so_blocks(params.len() as u32)
        .into_iter()
        .enumerate()
        .map(|(idx, block)| {
            let scaled = block.scale(&params[idx]);
            node_of_singles(scaled, &format!("block-{}", idx + 1))
        })
        .collect();
    node_of_parts(root, "mediating-index", children)
}

/// The coefficient-parametric first-level decomposition of an orthogonal
/// algebra: `P = sum a_alpha P_alpha` with free symbols `a_alpha`.
/// Instantiation at any nonzero rationals yields the verified scheme.
#[derive(Debug, Clone)]
pub struct SoSignature {
    pub n: u32,
    /// `(symbol name, unit block)` pairs
    pub blocks: Vec<(String, LieStructure)>,
}

pub fn universal_scheme_signature(kind: ClassicalKind, n: u32) -> Result<SoSignature, CoreError> {
    if kind != ClassicalKind::So {
        return Err(CoreError::BadClassicalSpec(format!(
            "universal signature is only available for so, not {}",
            kind.name()
        )));
    }
    if n < 2 {
        return Err(CoreError::BadClassicalSpec("so needs n >= 2".into()));
    }
    let blocks = so_blocks(n)
        .into_iter()
        .enumerate()
        .map(|(i, b)| (format!("a{}", i + 1), b))
        .collect();
    Ok(SoSignature { n, blocks })
}

impl SoSignature {
    pub fn instantiate(&self, coeffs: &[Rational]) -> Result<AScheme, CoreError> {
        if coeffs.len() != self.blocks.len() {
            return Err(CoreError::BadClassicalSpec(format!(
                "need {} coefficients, got {}",
                self.blocks.len(),
                coeffs.len()
            )));
        }
        if coeffs.iter().any(Rational::is_zero) {
            return Err(CoreError::BadClassicalSpec("degenerate form: a_i = 0".into()));
        }
        Ok(so_scheme(coeffs))
    }
}

// ---------------------------------------------------------------------------
// sp(2n) as quadratic polynomials

/// Variables `0..2h`: `p_i` is `i`, `q_i` is `h + i` (0-based `i < h`).
/// Basis monomials are pairs `(a, b)` with `a <= b`, lex-ordered.
fn sp_index(h: u32) -> (BTreeMap<(u32, u32), u32>, Vec<(u32, u32)>) {
    let vars = 2 * h;
    let mut map = BTreeMap::new();
    let mut list = Vec::new();
    for a in 0..vars {
        for b in a..vars {
            list.push((a, b));
            map.insert((a, b), list.len() as u32);
        }
    }
    (map, list)
}

fn mono(a: u32, b: u32) -> (u32, u32) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// `d(x_a x_b)/d x_v` as a linear combination of variables.
fn mono_derivative(m: (u32, u32), v: u32) -> Vec<(u32, Rational)> {
    let mut out = Vec::new();
    if m.0 == v {
        out.push((m.1, Rational::one()));
    }
    if m.1 == v {
        out.push((m.0, Rational::one()));
    }
    out
}

/// The component `{m1, m2}^i = dm1/dp_i dm2/dq_i - dm1/dq_i dm2/dp_i` as a
/// combination of quadratic monomials.
fn sp_bracket_component(h: u32, m1: (u32, u32), m2: (u32, u32), i: u32) -> Vec<((u32, u32), Rational)> {
    let (p, q) = (i, h + i);
    let mut acc: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
    let mut put = |lin1: &[(u32, Rational)], lin2: &[(u32, Rational)], sign: i64| {
        for (v1, c1) in lin1 {
            for (v2, c2) in lin2 {
                let key = mono(*v1, *v2);
                let e = acc.entry(key).or_insert_with(Rational::zero);
                *e += c1 * c2 * rint(sign);
            }
        }
    };
    put(&mono_derivative(m1, p), &mono_derivative(m2, q), 1);
    put(&mono_derivative(m1, q), &mono_derivative(m2, p), -1);
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// The structure whose bracket is `sum_{i in factors} {.,.}^i` on quadratic
/// monomials.
fn sp_partial_structure(h: u32, factors: &[u32]) -> LieStructure {
    let (map, list) = sp_index(h);
    let mut g = LieStructure::new(list.len() as u32);
    for (ai, &ma) in list.iter().enumerate() {
        for &mb in list.iter().skip(ai + 1) {
            for &i in factors {
                for (mc, c) in sp_bracket_component(h, ma, mb, i) {
                    g.add_constant(ai as u32 + 1, map[&mb], map[&mc], c);
                }
            }
        }
    }
    g
}

fn sp_structure(h: u32) -> LieStructure {
    let factors: Vec<u32> = (0..h).collect();
    sp_partial_structure(h, &factors)
}

/// The complete disassembling of one `{.,.}^i` factor, stripped level by
/// level down to fork lieons.
fn sp_factor_scheme(g: &LieStructure, h: u32, i: u32) -> AScheme {
    let (map, _) = sp_index(h);
    let (p, q) = (i, h + i);
    let idx = |a: u32, b: u32| map[&mono(a, b)];
    let pp = idx(p, p);
    let pq = idx(p, q);
    let qq = idx(q, q);
    // the variables other than p_i, q_i
    let others: Vec<u32> = (0..2 * h).filter(|&v| v != p && v != q).collect();
    let vp: Vec<u32> = others.iter().map(|&r| idx(p, r)).collect(); // p_i r
    let vq: Vec<u32> = others.iter().map(|&r| idx(q, r)).collect(); // q_i r
    let s_set = [pp, pq, qq];
    let in_s = |x: u32| s_set.contains(&x);
    let in_vp = |x: u32| vp.contains(&x);

    // level: semidirect split by the Levi part s = <pp, pq, qq>
    let a1 = filter_constants(g, |a, b, _| in_s(a) || in_s(b));
    let a2 = filter_constants(g, |a, b, _| !in_s(a) && !in_s(b));

    // radical branch: a dressing algebra, one level of single brackets
    let a2_scheme = node_of_singles(a2.clone(), "radical-dressing");

    // Levi branch: strip by the d-pair (<pq, V_p>, <pp, qq, V_q, c>)
    let in_s1 = |x: u32| x == pq || in_vp(x);
    let b1 = filter_constants(&a1, |a, b, _| in_s1(a) || in_s1(b));
    let b2 = filter_constants(&a1, |a, b, _| !in_s1(a) && !in_s1(b));
    let b2_scheme = node_of_singles(b2.clone(), "pair-dressing");

    // inside b1, split off the codim-1 ideal (everything but pq)
    let c1 = filter_constants(&b1, |a, b, _| a == pq || b == pq);
    let c2 = filter_constants(&b1, |a, b, _| a != pq && b != pq);

    // c2 is nilpotent: its single brackets group into two compatible parts
    let pa = filter_constants(&c2, |a, b, _| a == qq || b == qq);
    let pb = filter_constants(&c2, |a, b, _| a != qq && b != qq);
    let c2_scheme = node_of_parts(
        c2.clone(),
        "nilpotent-ideal",
        vec![node_of_singles(pa, "towards-q"), node_of_singles(pb, "towards-center")],
    );

    // c1 is gamma-shaped for ad(pq): eigen-blocks (pp, qq) and (p_i r, q_i r),
    // each re-expressed in the rotated basis to give two fork leaves
    let mut blocks: Vec<(u32, u32)> = vec![(pp, qq)];
    for (r_idx, _) in others.iter().enumerate() {
        blocks.push((vp[r_idx], vq[r_idx]));
    }
    let mut block_schemes = Vec::new();
    for &(u, w) in &blocks {
        let block = filter_constants(&c1, |a, b, _| {
            (a == pq || b == pq) && (a == u || b == u || a == w || b == w)
        });
        if block.is_zero() {
            continue;
        }
        block_schemes.push(gamma_pair_scheme(block, u, w));
    }
    let c1_scheme = node_of_parts(c1.clone(), "diagonal-action", block_schemes);

    let b1_scheme = node_of_parts(b1.clone(), "codim-1", vec![c1_scheme, c2_scheme]);
    let a1_scheme = node_of_parts(a1.clone(), "strip", vec![b1_scheme, b2_scheme]);
    node_of_parts(g.clone(), "levi-radical", vec![a1_scheme, a2_scheme])
}

/// Splits a structure of the shape `[v, u] = -c u, [v, w] = c w` into two
/// fork lieons via the rotated basis `u + w, u - w`.
fn gamma_pair_scheme(block: LieStructure, u: u32, w: u32) -> AScheme {
    let n = block.dim() as usize;
    let (ui, wi) = ((u - 1) as usize, (w - 1) as usize);
    let mut adapted: Vec<Vec<Rational>> = (0..n).map(|k| unit_vec(n, k)).collect();
    let mut f1 = unit_vec(n, ui);
    f1[wi] = Rational::one();
    let mut f2 = unit_vec(n, ui);
    f2[wi] = -Rational::one();
    adapted[ui] = f1;
    adapted[wi] = f2;
    // keep relation [., f1] -> f2 in `first`, [., f2] -> f1 in `second`
    let first = block
        .project_brackets(&adapted, |a, b, c| (a == ui || b == ui) && c == wi)
        .expect("basis is invertible");
    let second = block
        .project_brackets(&adapted, |a, b, c| (a == wi || b == wi) && c == ui)
        .expect("basis is invertible");
    node_of_parts(block, "rotated-pair", vec![leaf_auto(first), leaf_auto(second)])
}

fn sp_scheme(h: u32) -> AScheme {
    let root = sp_structure(h);
    let children: Vec<AScheme> = (0..h)
        .map(|i| {
            let factor = sp_partial_structure(h, &[i]);
            sp_factor_scheme(&factor, h, i)
        })
        .collect();
    node_of_parts(root, "symplectic-pairs", children)
}

// ---------------------------------------------------------------------------
// gl / sl / u / su

/// Basis element of the transpose-respecting chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GlBasis {
    /// `E_ij - E_ji`, `i < j` (the antisymmetric part `s`)
    Anti(u32, u32),
    /// `E_ij + E_ji`, `i <= j` (the symmetric part `W`)
    Sym(u32, u32),
    /// `E_mm - E_11`, `m > 1` (traceless diagonal, sl/su only)
    Diag(u32),
}

impl GlBasis {
    fn matrix(&self, n: u32) -> Mat {
        let n = n as usize;
        let mut m = Mat::zeros(n, n);
        match *self {
            GlBasis::Anti(i, j) => {
                m[((i - 1) as usize, (j - 1) as usize)] = Rational::one();
                m[((j - 1) as usize, (i - 1) as usize)] = -Rational::one();
            }
            GlBasis::Sym(i, j) => {
                m[((i - 1) as usize, (j - 1) as usize)] = Rational::one();
                let e = &mut m[((j - 1) as usize, (i - 1) as usize)];
                *e += Rational::one();
            }
            GlBasis::Diag(d) => {
                m[((d - 1) as usize, (d - 1) as usize)] = Rational::one();
                m[(0, 0)] = -Rational::one();
            }
        }
        m
    }

    fn is_w_part(&self) -> bool {
        !matches!(self, GlBasis::Anti(_, _))
    }

    /// The index multiset `{x, y}` used by the scaling argument that splits
    /// the semidirect part by a mediating index.
    fn degree(&self) -> (u32, u32) {
        match *self {
            GlBasis::Anti(i, j) | GlBasis::Sym(i, j) => (i, j),
            GlBasis::Diag(d) => (d, d),
        }
    }
}

fn gl_basis(spec: &ClassicalSpec) -> Vec<GlBasis> {
    let n = spec.n;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(GlBasis::Anti(i, j));
        }
    }
    match spec.kind {
        ClassicalKind::Gl | ClassicalKind::U => {
            for i in 1..=n {
                for j in i..=n {
                    out.push(GlBasis::Sym(i, j));
                }
            }
        }
        ClassicalKind::Sl | ClassicalKind::Su => {
            for i in 1..=n {
                for j in i + 1..=n {
                    out.push(GlBasis::Sym(i, j));
                }
            }
            for d in 2..=n {
                out.push(GlBasis::Diag(d));
            }
        }
        _ => unreachable!(),
    }
    out
}

/// Decomposes a matrix in the given basis; errors if it does not lie in the
/// span (never happens for commutators of basis elements).
fn gl_decompose(basis: &[GlBasis], n: u32, m: &Mat) -> Vec<Rational> {
    let dim = (n * n) as usize;
    let mut cols = Mat::zeros(dim, basis.len());
    for (b_idx, b) in basis.iter().enumerate() {
        let bm = b.matrix(n);
        for r in 0..n as usize {
            for c in 0..n as usize {
                cols[(r * n as usize + c, b_idx)] = bm[(r, c)].clone();
            }
        }
    }
    let mut flat = vec![Rational::zero(); dim];
    for r in 0..n as usize {
        for c in 0..n as usize {
            flat[r * n as usize + c] = m[(r, c)].clone();
        }
    }
    cols.solve(&flat).expect("commutator lies in the span")
}

fn gl_family_structure(spec: &ClassicalSpec) -> Result<LieStructure, CoreError> {
    let basis = gl_basis(spec);
    let n = spec.n;
    let mut g = LieStructure::new(basis.len() as u32);
    let mats: Vec<Mat> = basis.iter().map(|b| b.matrix(n)).collect();
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            let mut comm = mats[a].commutator(&mats[b]);
            if basis[a].is_w_part() && basis[b].is_w_part() {
                comm = comm.scale(&spec.lambda);
            }
            if comm.is_zero() {
                continue;
            }
            for (c, coeff) in gl_decompose(&basis, n, &comm).into_iter().enumerate() {
                g.add_constant(a as u32 + 1, b as u32 + 1, c as u32 + 1, coeff);
            }
        }
    }
    Ok(g)
}

/// The mediating index of a structure-constant component under the
/// `t`-rescaling argument: `deg(a) + deg(b) - deg(c)` must be `{alpha,alpha}`.
fn mediating_index(basis: &[GlBasis], i: u32, j: u32, k: u32) -> Option<u32> {
    let mut counts: BTreeMap<u32, i32> = BTreeMap::new();
    let (a1, a2) = basis[(i - 1) as usize].degree();
    let (b1, b2) = basis[(j - 1) as usize].degree();
    let (c1, c2) = basis[(k - 1) as usize].degree();
    for x in [a1, a2, b1, b2] {
        *counts.entry(x).or_insert(0) += 1;
    }
    for x in [c1, c2] {
        *counts.entry(x).or_insert(0) -= 1;
    }
    let mut alpha = None;
    for (x, c) in counts {
        match c {
            0 => {}
            2 => {
                if alpha.is_some() {
                    return None;
                }
                alpha = Some(x);
            }
            _ => return None,
        }
    }
    alpha
}

fn gl_family_scheme(spec: &ClassicalSpec) -> Result<AScheme, CoreError> {
    let basis = gl_basis(spec);
    let root = gl_family_structure(spec)?;
    let is_w = |x: u32| basis[(x - 1) as usize].is_w_part();

    // stripping level: semidirect part vs dressing part
    let q = filter_constants(&root, |a, b, _| !is_w(a) || !is_w(b));
    let dressing = filter_constants(&root, |a, b, _| is_w(a) && is_w(b));
    let dressing_scheme = node_of_singles(dressing.clone(), "dressing");

    // split the semidirect part by mediating index
    let mut blocks: BTreeMap<u32, LieStructure> = BTreeMap::new();
    for (&(i, j, k), c) in q.constants() {
        let alpha = mediating_index(&basis, i, j, k).ok_or_else(|| {
            CoreError::BadClassicalSpec(format!(
                "component ({i},{j},{k}) has no mediating index; template does not apply"
            ))
        })?;
        blocks
            .entry(alpha)
            .or_insert_with(|| LieStructure::new(root.dim()))
            .add_constant(i, j, k, c.clone());
    }

    let diag_sym = |alpha: u32| -> Option<u32> {
        basis.iter().position(|b| *b == GlBasis::Sym(alpha, alpha)).map(|p| p as u32 + 1)
    };
    let anti_1a = |alpha: u32| -> Option<u32> {
        basis
            .iter()
            .position(|b| *b == GlBasis::Anti(1.min(alpha), 1.max(alpha)))
            .map(|p| p as u32 + 1)
    };
    let diag_tl = |alpha: u32| -> Option<u32> {
        basis.iter().position(|b| *b == GlBasis::Diag(alpha)).map(|p| p as u32 + 1)
    };

    let mut q_children = Vec::new();
    for (alpha, block) in blocks {
        let child = match spec.kind {
            ClassicalKind::Gl | ClassicalKind::U => {
                // three-way split: so-part, symmetric action, diagonal action
                let waa = diag_sym(alpha).expect("Sym(alpha,alpha) exists for gl/u");
                let part1 = filter_constants(&block, |a, b, _| !is_w(a) && !is_w(b));
                let part3 =
                    filter_constants(&block, |a, b, _| (a == waa || b == waa) && (is_w(a) || is_w(b)));
                let part2 = filter_constants(&block, |a, b, _| {
                    (is_w(a) || is_w(b)) && a != waa && b != waa
                });
                node_of_parts(
                    block,
                    &format!("block-{alpha}"),
                    vec![
                        node_of_singles(part1, "so-part"),
                        node_of_singles(part2, "symmetric-action"),
                        node_of_singles(part3, "diagonal-action"),
                    ],
                )
            }
            ClassicalKind::Sl | ClassicalKind::Su => {
                if alpha == 1 {
                    node_of_singles(block, "block-1")
                } else {
                    // prime part: everything touching Anti(1, alpha)
                    let e1a = anti_1a(alpha).expect("Anti(1,alpha) exists");
                    let ediag = diag_tl(alpha).expect("Diag(alpha) exists for alpha > 1");
                    let sym_1a = basis
                        .iter()
                        .position(|b| *b == GlBasis::Sym(1, alpha))
                        .map(|p| p as u32 + 1)
                        .expect("Sym(1,alpha) exists");
                    let prime = filter_constants(&block, |a, b, _| a == e1a || b == e1a);
                    let second = filter_constants(&block, |a, b, _| {
                        a != e1a && b != e1a && (a == ediag || b == ediag || a == sym_1a || b == sym_1a)
                    });
                    let rest = filter_constants(&block, |a, b, _| {
                        a != e1a
                            && b != e1a
                            && a != ediag
                            && b != ediag
                            && a != sym_1a
                            && b != sym_1a
                    });
                    let mut parts = vec![
                        node_of_singles(prime, "prime"),
                        node_of_singles(second, "second"),
                    ];
                    for single in split_by_pairs(&rest) {
                        parts.push(leaf_auto(single));
                    }
                    node_of_parts(block, &format!("block-{alpha}"), parts)
                }
            }
            _ => unreachable!(),
        };
        q_children.push(child);
    }
    let q_scheme = node_of_parts(q.clone(), "semidirect-part", q_children);
    Ok(node_of_parts(root, "strip", vec![q_scheme, dressing_scheme]))
}
