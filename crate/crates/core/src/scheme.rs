//! Assembling schemes: rooted trees of structures in which every internal
//! node is the sum of its mutually compatible children, plus the constructive
//! disassembling procedures (solvable recursion, semidirect split, dressing
//! decomposition, stripping by an involution).

use crate::lie::{LieStructure, LieonKind};
use crate::matrix::{unit_vec, Mat, Subspace};
use crate::rational::Rational;
use crate::CoreError;
use num_traits::Zero;

pub const ABELIAN_FLAG: &str = "abelian";

/// A rooted disassembling tree. Leaves are the end terms; an empty child list
/// marks a leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AScheme {
    pub node: LieStructure,
    pub label: String,
    pub children: Vec<AScheme>,
}

impl AScheme {
    pub fn leaf(node: LieStructure, label: impl Into<String>) -> Self {
        AScheme { node, label: label.into(), children: Vec::new() }
    }

    pub fn internal(node: LieStructure, label: impl Into<String>, children: Vec<AScheme>) -> Self {
        AScheme { node, label: label.into(), children }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn leaves(&self) -> Vec<&AScheme> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(s) = stack.pop() {
            if s.is_leaf() {
                out.push(s);
            } else {
                stack.extend(s.children.iter());
            }
        }
        out
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(AScheme::depth).max().unwrap_or(0)
    }

    /// Tree shape as nested child counts, for comparing scheme skeletons.
    pub fn shape(&self) -> Vec<usize> {
        let mut out = Vec::new();
        fn walk(s: &AScheme, out: &mut Vec<usize>) {
            out.push(s.children.len());
            for c in &s.children {
                walk(c, out);
            }
        }
        walk(self, &mut out);
        out
    }
}

/// An involutive linear map, the carrier of a d-pair.
#[derive(Debug, Clone)]
pub struct Involution {
    matrix: Mat,
}

impl Involution {
    pub fn new(matrix: Mat) -> Result<Self, CoreError> {
        if matrix.rows != matrix.cols {
            return Err(CoreError::BadInvolution("matrix not square".into()));
        }
        if matrix.mul(&matrix) != Mat::identity(matrix.rows) {
            return Err(CoreError::BadInvolution("matrix squared is not the identity".into()));
        }
        Ok(Involution { matrix })
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    /// Checks that the map is an automorphism of `g`.
    pub fn is_automorphism_of(&self, g: &LieStructure) -> bool {
        let n = g.dim() as usize;
        if self.matrix.rows != n {
            return false;
        }
        for i in 0..n {
            let ti = self.matrix.col(i);
            for j in i + 1..n {
                let tj = self.matrix.col(j);
                let lhs = self.matrix.mul_vec(&g.bracket_basis(i as u32 + 1, j as u32 + 1));
                let rhs = g.bracket(&ti, &tj).expect("dims");
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Eigenspace bases for +1 and -1.
    pub fn eigenspaces(&self) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
        let n = self.matrix.rows;
        let plus = self.matrix.sub(&Mat::identity(n)).kernel();
        let minus = self.matrix.add(&Mat::identity(n)).kernel();
        (plus, minus)
    }
}

/// Returns the list of violations; an empty report certifies the scheme:
/// the root satisfies Jacobi, every internal node is the sum of its mutually
/// compatible children (all on the node's dimension), and no leaf is the zero
/// structure unless flagged abelian.
pub fn verify_scheme(s: &AScheme) -> Vec<String> {
    let mut report = Vec::new();
    if !s.node.jacobi_defect().is_zero() {
        report.push("root violates the Jacobi identity".to_string());
    }
    verify_rec(s, "root", &mut report);
    report
}

fn verify_rec(s: &AScheme, path: &str, report: &mut Vec<String>) {
    if s.is_leaf() {
        if s.node.is_zero() && !s.label.contains(ABELIAN_FLAG) {
            report.push(format!("{path}: zero structure at leaf"));
        }
        return;
    }
    let mut sum = LieStructure::new(s.node.dim());
    for (idx, c) in s.children.iter().enumerate() {
        if c.node.dim() != s.node.dim() {
            report.push(format!("{path}: child {idx} has dimension {}", c.node.dim()));
            return;
        }
        sum = sum.sum(&c.node).expect("same dim");
    }
    if sum != s.node {
        report.push(format!("{path}: children do not sum to the node"));
    }
    for i in 0..s.children.len() {
        for j in i + 1..s.children.len() {
            match s.children[i].node.compatible(&s.children[j].node) {
                Ok(true) => {}
                Ok(false) => report.push(format!("{path}: children {i},{j} incompatible")),
                Err(e) => report.push(format!("{path}: children {i},{j}: {e}")),
            }
        }
    }
    for (idx, c) in s.children.iter().enumerate() {
        verify_rec(c, &format!("{path}.{idx}"), report);
    }
}

/// True when every leaf is a fork or dee lieon. Requires a scheme that
/// already passed [`verify_scheme`].
pub fn is_complete(s: &AScheme) -> bool {
    s.leaves().iter().all(|l| {
        matches!(l.node.recognize_lieon(), Ok(LieonKind::Fork(_)) | Ok(LieonKind::Dee(_)))
    })
}

fn label_for(g: &LieStructure) -> String {
    match g.recognize_lieon() {
        Ok(LieonKind::Fork(n)) => format!("fork({n})"),
        Ok(LieonKind::Dee(n)) => format!("dee({n})"),
        Ok(LieonKind::Abelian) => ABELIAN_FLAG.to_string(),
        _ => String::new(),
    }
}

fn basis_of(span: &Subspace) -> Vec<Vec<Rational>> {
    span.basis().to_vec()
}

/// Verifies that `ideal` is an ideal and `subalg` a complementary subalgebra,
/// then splits `g = (g0 acting on |h|) + (abelian (+) h)`: the first factor
/// keeps the subalgebra's own bracket and its action on the ideal, the second
/// keeps the ideal's internal bracket.
pub fn split_semidirect(
    g: &LieStructure,
    ideal: &[Vec<Rational>],
    subalg: &[Vec<Rational>],
) -> Result<(LieStructure, LieStructure), CoreError> {
    let n = g.dim() as usize;
    let h = Subspace::span(n, ideal);
    let s = Subspace::span(n, subalg);
    if h.dim() + s.dim() != n {
        return Err(CoreError::BadSubspaces(format!(
            "dims {} + {} != {}",
            h.dim(),
            s.dim(),
            n
        )));
    }
    let mut whole = Subspace::empty(n);
    for v in h.basis().iter().chain(s.basis().iter()) {
        whole.insert(v.clone());
    }
    if whole.dim() != n {
        return Err(CoreError::BadSubspaces("ideal and subalgebra are not complementary".into()));
    }
    // ideal: [g, h] inside h
    for i in 0..n {
        for v in h.basis() {
            let br = g.bracket(&unit_vec(n, i), v)?;
            if !h.contains(&br) {
                return Err(CoreError::BadSubspaces("first subspace is not an ideal".into()));
            }
        }
    }
    // subalgebra: [s, s] inside s
    for (ai, a) in s.basis().iter().enumerate() {
        for b in s.basis().iter().skip(ai + 1) {
            if !s.contains(&g.bracket(a, b)?) {
                return Err(CoreError::BadSubspaces("second subspace is not a subalgebra".into()));
            }
        }
    }
    let m = s.dim();
    let mut adapted = basis_of(&s);
    adapted.extend(basis_of(&h));
    let first = g.project_brackets(&adapted, |a, b, _| a < m || b < m)?;
    let second = g.project_brackets(&adapted, |a, b, _| a >= m && b >= m)?;
    Ok((first, second))
}

/// Completely disassembles a solvable structure; leaves are forks and dees.
/// Abelian input yields a single flagged node (there is nothing to split).
///
/// The recursion of the codimension-1 split is performed in an adapted flag
/// basis, where every intermediate structure is supported on a strictly
/// shrinking coordinate range (so termination is structural); the finished
/// tree is transported back in one base change.
pub fn disassemble_solvable(g: &LieStructure) -> Result<AScheme, CoreError> {
    if !g.is_solvable() {
        return Err(CoreError::NotSolvable);
    }
    if g.is_zero() {
        return Ok(AScheme::leaf(g.clone(), ABELIAN_FLAG));
    }
    if matches!(g.recognize_lieon(), Ok(LieonKind::Fork(_)) | Ok(LieonKind::Dee(_))) {
        return Ok(AScheme::leaf(g.clone(), label_for(g)));
    }

    // Build the flag: V = U_0 > U_1 > ... with U_{k+1} a codimension-1 ideal
    // of the structure restricted to U_k, containing its derived algebra and
    // avoiding the chosen acting generator v_k.
    let n = g.dim() as usize;
    let mut adapted: Vec<Vec<Rational>> = Vec::new();
    let mut u = Subspace::span(n, &(0..n).map(|i| unit_vec(n, i)).collect::<Vec<_>>());
    loop {
        let ub = basis_of(&u);
        let mut derived = Subspace::empty(n);
        for (ai, a) in ub.iter().enumerate() {
            for b in ub.iter().skip(ai + 1) {
                derived.insert(g.bracket(a, b)?);
            }
        }
        if derived.dim() == 0 {
            break; // abelian tail
        }
        // an acting basis vector of U outside its derived algebra always
        // exists while the restriction is non-abelian and solvable
        let v = ub
            .iter()
            .find(|b| {
                !derived.contains(b)
                    && ub.iter().any(|x| g.bracket(b, x).expect("dims").iter().any(|c| !c.is_zero()))
            })
            .expect("non-abelian solvable restriction has an acting generator")
            .clone();
        // phi vanishes on the derived algebra but not on v
        let phi = {
            let functionals = Mat::from_rows(derived.basis().to_vec()).kernel();
            functionals
                .into_iter()
                .find(|p| !dot(p, &v).is_zero())
                .expect("v lies outside the derived algebra")
        };
        // next U = { x in U : phi(x) = 0 }
        let vals: Vec<Rational> = ub.iter().map(|b| dot(&phi, b)).collect();
        let combos = Mat::from_rows(vec![vals]).kernel();
        let mut next = Subspace::empty(n);
        for combo in combos {
            let mut vec = vec![Rational::zero(); n];
            for (c, b) in combo.iter().zip(&ub) {
                if !c.is_zero() {
                    for (x, y) in vec.iter_mut().zip(b) {
                        *x += c * y;
                    }
                }
            }
            next.insert(vec);
        }
        debug_assert_eq!(next.dim(), u.dim() - 1);
        adapted.push(v);
        u = next;
    }
    adapted.extend(basis_of(&u));
    debug_assert_eq!(adapted.len(), n);

    let mut t = Mat::zeros(n, n);
    for (j, col) in adapted.iter().enumerate() {
        for i in 0..n {
            t[(i, j)] = col[i].clone();
        }
    }
    let h = g.change_basis(&t.inverse()?)?;
    let flagged = solvable_coord_rec(&h);
    transport_tree(flagged, &t)
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Recursion in flag coordinates: the brackets rooted at the least involved
/// coordinate form the gamma part (its single constants are the lieon
/// leaves), the rest is strictly smaller.
fn solvable_coord_rec(h: &LieStructure) -> AScheme {
    if matches!(h.recognize_lieon(), Ok(LieonKind::Fork(_)) | Ok(LieonKind::Dee(_))) {
        return AScheme::leaf(h.clone(), label_for(h));
    }
    let m = h
        .constants()
        .map(|(&(i, _, _), _)| i)
        .min()
        .expect("nonzero structure");
    let mut gamma = LieStructure::new(h.dim());
    let mut rest = LieStructure::new(h.dim());
    for (&(i, j, k), c) in h.constants() {
        if i == m {
            gamma.add_constant(i, j, k, c.clone());
        } else {
            rest.add_constant(i, j, k, c.clone());
        }
    }
    // leaves of the gamma part: one single-constant structure per entry of
    // the action matrix; all share the root vertex, so they are mutually
    // compatible forks and dees
    let gamma_children: Vec<AScheme> = gamma
        .constants()
        .map(|(&(i, j, k), c)| {
            let mut leaf = LieStructure::new(h.dim());
            leaf.add_constant(i, j, k, c.clone());
            AScheme::leaf(leaf.clone(), label_for(&leaf))
        })
        .collect();
    let gamma_scheme = if gamma_children.len() == 1 {
        AScheme::leaf(gamma.clone(), label_for(&gamma))
    } else {
        AScheme::internal(gamma.clone(), "gamma", gamma_children)
    };
    if rest.is_zero() {
        return gamma_scheme;
    }
    AScheme::internal(h.clone(), "semidirect", vec![gamma_scheme, solvable_coord_rec(&rest)])
}

fn transport_tree(s: AScheme, t: &Mat) -> Result<AScheme, CoreError> {
    Ok(AScheme {
        node: s.node.change_basis(t)?,
        label: s.label,
        children: s
            .children
            .into_iter()
            .map(|c| transport_tree(c, t))
            .collect::<Result<_, _>>()?,
    })
}

/// One-level split of a dressing algebra (`[W,W]` inside `W0`, `W0` central)
/// into fork lieons: one leaf per nonzero component of the bracket form in
/// the given bases. A zero form yields the flagged abelian node.
pub fn disassemble_dressing(
    g: &LieStructure,
    w0: &[Vec<Rational>],
    w: &[Vec<Rational>],
) -> Result<AScheme, CoreError> {
    let n = g.dim() as usize;
    let s0 = Subspace::span(n, w0);
    let sw = Subspace::span(n, w);
    if s0.dim() + sw.dim() != n {
        return Err(CoreError::BadSubspaces("W0 and W must be complementary".into()));
    }
    let mut whole = Subspace::empty(n);
    for v in s0.basis().iter().chain(sw.basis().iter()) {
        whole.insert(v.clone());
    }
    if whole.dim() != n {
        return Err(CoreError::BadSubspaces("W0 and W must be complementary".into()));
    }
    let center = g.center();
    if !s0.basis().iter().all(|v| center.contains(v)) {
        return Err(CoreError::BadSubspaces("W0 is not central".into()));
    }
    let wb = basis_of(&sw);
    for (ai, a) in wb.iter().enumerate() {
        for b in wb.iter().skip(ai + 1) {
            if !s0.contains(&g.bracket(a, b)?) {
                return Err(CoreError::BadSubspaces("[W,W] does not land in W0".into()));
            }
        }
    }
    if g.is_zero() {
        return Ok(AScheme::leaf(g.clone(), ABELIAN_FLAG));
    }
    let m0 = s0.dim();
    let mut adapted = basis_of(&s0);
    adapted.extend(wb);
    let mut parts = Vec::new();
    for a in m0..n {
        for b in a + 1..n {
            for c in 0..m0 {
                let part = g.project_brackets(&adapted, |x, y, z| (x, y, z) == (a, b, c))?;
                if !part.is_zero() {
                    parts.push(part);
                }
            }
        }
    }
    if parts.len() == 1 {
        return Ok(AScheme::leaf(g.clone(), label_for(g)));
    }
    let children =
        parts.into_iter().map(|p| AScheme::leaf(p.clone(), label_for(&p))).collect();
    Ok(AScheme::internal(g.clone(), "dressing", children))
}

/// The stripping split: for an involutive automorphism with eigenspaces
/// `s` (+1) and `W` (-1), the children are the semidirect part (brackets
/// `[s,s]` and `[s,W]`) and the associated dressing algebra (`[W,W]` into
/// `s`). The degenerate identity involution yields a flagged zero dressing
/// child.
pub fn strip(g: &LieStructure, inv: &Involution) -> Result<AScheme, CoreError> {
    if inv.matrix().rows != g.dim() as usize {
        return Err(CoreError::BadInvolution("involution size does not match".into()));
    }
    if !inv.is_automorphism_of(g) {
        return Err(CoreError::BadInvolution("not an automorphism of the structure".into()));
    }
    let (plus, minus) = inv.eigenspaces();
    let m = plus.len();
    let mut adapted = plus;
    adapted.extend(minus);
    let semi = g.project_brackets(&adapted, |a, b, _| a < m || b < m)?;
    let dressing = g.project_brackets(&adapted, |a, b, _| a >= m && b >= m)?;
    let dressing_label = if dressing.is_zero() {
        format!("{ABELIAN_FLAG}-dressing")
    } else {
        "dressing".to_string()
    };
    Ok(AScheme::internal(
        g.clone(),
        "strip",
        vec![AScheme::leaf(semi, "semidirect-part"), AScheme::leaf(dressing, dressing_label)],
    ))
}
