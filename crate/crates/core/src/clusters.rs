//! Coaxial cluster machinery: blocking-rule closure, exhaustive enumeration
//! of clusters by maximal-clique search over the pairwise-compatibility
//! graph, classifying cards, equivalence, and the ideal structure of
//! synthesized coaxial algebras.

use crate::lie::LieStructure;
use crate::lieon::{all_base_lieons, compatible_base, BaseFamily, BaseLieon, Dee, FamilyKey, Tee};
use crate::matrix::{unit_vec, Subspace};
use crate::rational::Rational;
use crate::CoreError;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Hard bound for exhaustive enumeration (combinatorial explosion beyond).
pub const ENUMERATION_MAX: u32 = 6;

/// Vertex roles in a base family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexType {
    /// center of every incident tee and absent from the dee part
    TCenter,
    /// end of a dee, absent from the tee part
    DCenter,
    /// origin of a dee, or an end of every incident tee
    End,
    Mixing,
}

impl VertexType {
    pub fn name(&self) -> &'static str {
        match self {
            VertexType::TCenter => "t-center",
            VertexType::DCenter => "d-center",
            VertexType::End => "end",
            VertexType::Mixing => "mixing",
        }
    }
}

/// The classifying invariant of a cluster: vertex-type counts, triangle and
/// double counts, per-end trey and framed-pyramid numbers, and the symmetric
/// bridge / d-bridge matrices, all in canonical (lexicographically minimal)
/// form under simultaneous permutation of the end vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClusterCard {
    pub n_t: u32,
    pub n_e: u32,
    pub n_d: u32,
    pub n_tr: u32,
    pub n_r: u32,
    pub tvec: Vec<u32>,
    pub pvec: Vec<u32>,
    pub b: Vec<Vec<u32>>,
    pub d: Vec<Vec<u32>>,
}

impl ClusterCard {
    /// Dimension the card accounts for.
    pub fn dim(&self) -> u32 {
        let ends: u32 = self.tvec.iter().map(|t| 2 * t).sum::<u32>()
            + self.pvec.iter().sum::<u32>();
        let mut bridges = 0;
        for i in 0..self.n_e as usize {
            for j in i + 1..self.n_e as usize {
                bridges += self.b[i][j] + self.d[i][j];
            }
        }
        self.n_t + self.n_e + self.n_d + 3 * self.n_tr + 2 * self.n_r + ends + bridges
    }
}

// ---------------------------------------------------------------------------
// compatibility graph and maximal cliques

fn compat_matrix(lieons: &[BaseLieon]) -> Vec<Vec<bool>> {
    let n = lieons.len();
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let c = compatible_base(&lieons[i], &lieons[j]);
            m[i][j] = c;
            m[j][i] = c;
        }
    }
    m
}

/// Maximal cliques via the pivoting recursion.
fn maximal_cliques(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = Vec::new();
    let r = Vec::new();
    let p: BTreeSet<usize> = (0..n).collect();
    let x = BTreeSet::new();
    bron_kerbosch(adj, r, p, x, &mut out);
    out
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: Vec<usize>,
    mut p: BTreeSet<usize>,
    mut x: BTreeSet<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    // pivot: vertex of P union X with most neighbours in P
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count())
        .copied()
        .expect("P or X nonempty");
    let candidates: Vec<usize> = p.iter().filter(|&&v| !adj[pivot][v]).copied().collect();
    for v in candidates {
        let mut nr = r.clone();
        nr.push(v);
        let np: BTreeSet<usize> = p.iter().filter(|&&u| adj[v][u]).copied().collect();
        let nx: BTreeSet<usize> = x.iter().filter(|&&u| adj[v][u]).copied().collect();
        bron_kerbosch(adj, nr, np, nx, out);
        p.remove(&v);
        x.insert(v);
    }
}

// ---------------------------------------------------------------------------
// blocking rule, clusters

/// Every tee/dee with vertices inside `support`.
fn candidates_on(support: &BTreeSet<u32>) -> Vec<BaseLieon> {
    let verts: Vec<u32> = support.iter().copied().collect();
    let mut out = Vec::new();
    for (ai, &a) in verts.iter().enumerate() {
        for &b in verts.iter().skip(ai + 1) {
            for &c in &verts {
                if c != a && c != b {
                    out.push(BaseLieon::Tee(Tee::unit(a, b, c)));
                }
            }
        }
    }
    for &p in &verts {
        for &q in &verts {
            if p != q {
                out.push(BaseLieon::Dee(Dee::unit(p, q)));
            }
        }
    }
    out.sort_by_key(|l| l.order_key());
    out
}

fn family_contains(f: &BaseFamily, l: &BaseLieon) -> bool {
    match l {
        BaseLieon::Tee(t) => {
            let (i, j) = t.ends();
            f.contains_tee(i, j, t.center())
        }
        BaseLieon::Dee(d) => f.contains_dee(d.origin(), d.end()),
    }
}

fn blocked_by_family(f: &BaseFamily, l: &BaseLieon) -> bool {
    f.members().iter().any(|m| !compatible_base(m, l))
}

/// True iff the family's graph is connected and the blocking rule is
/// saturated on its own vertex set: every candidate on `S(F)` belongs to the
/// family exactly when nothing in the family blocks it.
pub fn is_cluster(f: &BaseFamily) -> Result<bool, CoreError> {
    if !f.is_compatible() {
        return Err(CoreError::IncompatibleFamily("input family is not compatible".into()));
    }
    if !f.graph_connected() {
        return Ok(false);
    }
    let support = f.support();
    for cand in candidates_on(&support) {
        let inside = family_contains(f, &cand);
        let blocked = blocked_by_family(f, &cand);
        if inside == blocked {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Repeatedly adds the least unblocked candidate on `S(F)` until fixpoint;
/// the result is one canonical vertex-set-maximal compatible family
/// containing the input (added members get unit coefficients).
pub fn complete_family(f: &BaseFamily) -> Result<BaseFamily, CoreError> {
    if !f.is_compatible() {
        return Err(CoreError::IncompatibleFamily("input family is not compatible".into()));
    }
    let mut out = f.clone();
    let support = f.support();
    loop {
        let next = candidates_on(&support)
            .into_iter()
            .find(|c| !family_contains(&out, c) && !blocked_by_family(&out, c));
        match next {
            Some(c) => out.insert(c).expect("within dim"),
            None => break,
        }
    }
    Ok(out)
}

/// Canonical descriptor of a family under the symmetric group on `{1..n}`:
/// the lexicographically least relabeled descriptor key.
pub fn canonical_descriptor(f: &BaseFamily) -> FamilyKey {
    let n = f.dim();
    let mut best: Option<FamilyKey> = None;
    let mut perm: Vec<u32> = (1..=n).collect();
    permute_all(&mut perm, 0, &mut |p| {
        let key = f.relabel(p).descriptor_key();
        if best.as_ref().map_or(true, |b| key < *b) {
            best = Some(key);
        }
    });
    best.expect("at least the identity permutation")
}

fn permute_all<F: FnMut(&[u32])>(perm: &mut Vec<u32>, k: usize, visit: &mut F) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// All clusters on exactly the vertex set `{1..n}`, one canonical
/// representative per equivalence class, sorted.
pub fn enumerate_clusters(n: u32) -> Result<Vec<BaseFamily>, CoreError> {
    if n > ENUMERATION_MAX {
        return Err(CoreError::EnumerationGuard { n, max: ENUMERATION_MAX });
    }
    let lieons = all_base_lieons(n);
    let adj = compat_matrix(&lieons);
    let full: BTreeSet<u32> = (1..=n).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for clique in maximal_cliques(&adj) {
        let members: Vec<BaseLieon> = clique.iter().map(|&i| lieons[i].clone()).collect();
        let fam = BaseFamily::from_members(n, &members).expect("valid members");
        if fam.support() != full || !fam.graph_connected() {
            continue;
        }
        let key = canonical_descriptor(&fam);
        if seen.insert(key.clone()) {
            let (tees, dees) = key;
            let mut canon = BaseFamily::new(n);
            for (i, j, k) in tees {
                canon.insert_tee(Tee::unit(i, j, k)).expect("within dim");
            }
            for (p, q) in dees {
                canon.insert_dee(Dee::unit(p, q)).expect("within dim");
            }
            out.push(canon);
        }
    }
    out.sort_by_key(|f| f.descriptor_key());
    Ok(out)
}

/// Maximal compatible dee-only families with connected graph on the full
/// vertex set `{1..n}`, canonical representatives.
pub fn enumerate_dee_clusters(n: u32) -> Result<Vec<BaseFamily>, CoreError> {
    if n > ENUMERATION_MAX {
        return Err(CoreError::EnumerationGuard { n, max: ENUMERATION_MAX });
    }
    let lieons: Vec<BaseLieon> = all_base_lieons(n)
        .into_iter()
        .filter(|l| matches!(l, BaseLieon::Dee(_)))
        .collect();
    let adj = compat_matrix(&lieons);
    let full: BTreeSet<u32> = (1..=n).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for clique in maximal_cliques(&adj) {
        let members: Vec<BaseLieon> = clique.iter().map(|&i| lieons[i].clone()).collect();
        let fam = BaseFamily::from_members(n, &members).expect("valid members");
        if fam.support() != full || !fam.graph_connected() {
            continue;
        }
        let key = canonical_descriptor(&fam);
        if seen.insert(key.clone()) {
            let (tees, dees) = key;
            let mut canon = BaseFamily::new(n);
            for (i, j, k) in tees {
                canon.insert_tee(Tee::unit(i, j, k)).expect("within dim");
            }
            for (p, q) in dees {
                canon.insert_dee(Dee::unit(p, q)).expect("within dim");
            }
            out.push(canon);
        }
    }
    out.sort_by_key(|f| f.descriptor_key());
    Ok(out)
}

// ---------------------------------------------------------------------------
// vertex typing and cards

/// Vertex roles per the definitions: end = origin of a dee or an end vertex
/// of the tee part; t-center = center of every incident tee and not a dee
/// vertex; d-center = end of a dee and not a tee vertex; mixing otherwise.
pub fn vertex_types(f: &BaseFamily) -> Result<BTreeMap<u32, VertexType>, CoreError> {
    if !f.is_compatible() {
        return Err(CoreError::IncompatibleFamily("vertex typing needs a compatible family".into()));
    }
    let mut tee_end = BTreeSet::new();
    let mut tee_center = BTreeSet::new();
    for &(i, j, k) in f.tee_keys() {
        tee_end.insert(i);
        tee_end.insert(j);
        tee_center.insert(k);
    }
    let mut dee_origin = BTreeSet::new();
    let mut dee_end = BTreeSet::new();
    for &(p, q) in f.dee_keys() {
        dee_origin.insert(p);
        dee_end.insert(q);
    }
    let tee_support: BTreeSet<u32> = tee_end.union(&tee_center).copied().collect();
    let dee_support: BTreeSet<u32> = dee_origin.union(&dee_end).copied().collect();
    let mut out = BTreeMap::new();
    for &v in &f.support() {
        let t = if dee_origin.contains(&v) || (tee_end.contains(&v) && !tee_center.contains(&v)) {
            // an origin can never simultaneously be a dee end or a tee center
            // in a compatible family, so this is well-defined
            VertexType::End
        } else if tee_center.contains(&v) && !tee_end.contains(&v) && !dee_support.contains(&v) {
            VertexType::TCenter
        } else if dee_end.contains(&v) && !tee_support.contains(&v) {
            VertexType::DCenter
        } else {
            VertexType::Mixing
        };
        out.insert(v, t);
    }
    Ok(out)
}

/// Structural data detected inside a cluster; shared by the card computation
/// and the coaxial ideal analysis.
struct ClusterAnatomy {
    /// doubles as vertex pairs `{p,q}` (p < q)
    doubles: Vec<(u32, u32)>,
    double_verts: BTreeSet<u32>,
    /// triangles as sorted vertex triples
    triangles: Vec<(u32, u32, u32)>,
    triangle_verts: BTreeSet<u32>,
    /// d-bridges as (end1, end2, center)
    d_bridges: Vec<(u32, u32, u32)>,
    /// end vertices of the card (double vertices excluded), sorted
    ends: Vec<u32>,
    t_centers: BTreeSet<u32>,
    d_centers: BTreeSet<u32>,
    /// per end vertex: ends of immersed dees rooted there
    framing: BTreeMap<u32, BTreeSet<u32>>,
}

fn anatomy(f: &BaseFamily) -> ClusterAnatomy {
    // doubles
    let mut doubles = Vec::new();
    let mut double_verts = BTreeSet::new();
    for &(p, q) in f.dee_keys() {
        if p < q && f.contains_dee(q, p) {
            doubles.push((p, q));
            double_verts.insert(p);
            double_verts.insert(q);
        }
    }
    // triangles
    let mut triangles = Vec::new();
    let mut triangle_verts = BTreeSet::new();
    let tees: Vec<(u32, u32, u32)> = f.tee_keys().copied().collect();
    for &(i, j, k) in &tees {
        // normalize: count each triangle once via its sorted vertex triple
        let mut v = [i, j, k];
        v.sort_unstable();
        let (a, b, c) = (v[0], v[1], v[2]);
        if (i, j) == (a, b)
            && f.contains_tee(b, c, a)
            && f.contains_tee(a, c, b)
            && f.contains_tee(a, b, c)
        {
            triangles.push((a, b, c));
            triangle_verts.extend([a, b, c]);
        }
    }
    // d-bridges: (2,1)-spider plus axis
    let mut d_bridges = Vec::new();
    let mut br_dees = BTreeSet::new();
    let dee_keys: Vec<(u32, u32)> = f.dee_keys().copied().collect();
    for &(p1, c) in &dee_keys {
        for &(p2, c2) in &dee_keys {
            if c == c2 && p1 < p2 && f.contains_tee(p1, p2, c) {
                d_bridges.push((p1, p2, c));
                br_dees.insert((p1, c));
                br_dees.insert((p2, c));
            }
        }
    }
    // vertex roles
    let types = vertex_types(f).expect("cluster families are compatible");
    let mut ends: Vec<u32> = types
        .iter()
        .filter(|(v, t)| matches!(t, VertexType::End) && !double_verts.contains(v))
        .map(|(&v, _)| v)
        .collect();
    ends.sort_unstable();
    let t_centers: BTreeSet<u32> = types
        .iter()
        .filter(|(_, t)| matches!(t, VertexType::TCenter))
        .map(|(&v, _)| v)
        .collect();
    let d_centers: BTreeSet<u32> = types
        .iter()
        .filter(|(v, t)| matches!(t, VertexType::DCenter) && !double_verts.contains(v))
        .map(|(&v, _)| v)
        .collect();
    // immersed dees: not in doubles, not in d-bridges, end inside the tee part
    let mut tee_support = BTreeSet::new();
    for &(i, j, k) in &tees {
        tee_support.extend([i, j, k]);
    }
    let mut framing: BTreeMap<u32, BTreeSet<u32>> = BTreeMap::new();
    for &(p, q) in &dee_keys {
        let in_double = doubles.iter().any(|&(a, b)| (p, q) == (a, b) || (p, q) == (b, a));
        if in_double || br_dees.contains(&(p, q)) {
            continue;
        }
        if tee_support.contains(&q) {
            framing.entry(p).or_default().insert(q);
        }
    }
    ClusterAnatomy {
        doubles,
        double_verts,
        triangles,
        triangle_verts,
        d_bridges,
        ends,
        t_centers,
        d_centers,
        framing,
    }
}

/// Computes the canonical card of a cluster.
pub fn compute_card(f: &BaseFamily) -> Result<ClusterCard, CoreError> {
    if !is_cluster(f)? {
        return Err(CoreError::NotACluster("card computation needs a cluster".into()));
    }
    let a = anatomy(f);
    let ne = a.ends.len();
    let end_pos: BTreeMap<u32, usize> =
        a.ends.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // trey numbers: twains rooted at an end with a closing tee
    let mut tvec = vec![0u32; ne];
    let mut trey_bottoms: BTreeMap<u32, BTreeSet<u32>> = BTreeMap::new();
    for &e in &a.ends {
        let mut count = 0;
        for &(i, j, k) in f.tee_keys() {
            // twain rooted at e with bottom {b1, b2}: tees {e,b1|b2} and {e,b2|b1}
            if i != e && j != e {
                continue;
            }
            let b1 = if i == e { j } else { i };
            let b2 = k;
            if b1 >= b2 {
                continue; // count each twain once
            }
            if !(f.contains_tee(e, b1, b2) && f.contains_tee(e, b2, b1)) {
                continue;
            }
            let closing = f
                .tee_keys()
                .any(|&(x, y, c)| {
                    let ends = if x < y { (x, y) } else { (y, x) };
                    ends == (b1.min(b2), b1.max(b2)) && c != e
                });
            if closing {
                count += 1;
                trey_bottoms.entry(e).or_default().extend([b1, b2]);
            }
        }
        tvec[end_pos[&e]] = count;
    }

    // pyramid numbers: immersed dees rooted at each end
    let mut pvec = vec![0u32; ne];
    for (&e, ds) in &a.framing {
        if let Some(&pos) = end_pos.get(&e) {
            pvec[pos] = ds.len() as u32;
        }
    }

    // bridge and d-bridge matrices
    let mut b = vec![vec![0u32; ne]; ne];
    let mut d = vec![vec![0u32; ne]; ne];
    for &(e1, e2, _) in &a.d_bridges {
        if let (Some(&x), Some(&y)) = (end_pos.get(&e1), end_pos.get(&e2)) {
            d[x][y] += 1;
            d[y][x] += 1;
        }
    }
    for &(i, j, k) in f.tee_keys() {
        let (Some(&x), Some(&y)) = (end_pos.get(&i), end_pos.get(&j)) else {
            continue;
        };
        if a.t_centers.contains(&k) {
            continue; // connective of the multiped
        }
        if f.contains_dee(i, k) && f.contains_dee(j, k) {
            continue; // d-bridge axis
        }
        let hook = a.framing.get(&i).is_some_and(|s| s.contains(&k))
            || a.framing.get(&j).is_some_and(|s| s.contains(&k));
        if hook {
            continue;
        }
        b[x][y] += 1;
        b[y][x] += 1;
    }

    let card = ClusterCard {
        n_t: a.t_centers.len() as u32,
        n_e: ne as u32,
        n_d: a.d_centers.len() as u32,
        n_tr: a.triangles.len() as u32,
        n_r: a.doubles.len() as u32,
        tvec,
        pvec,
        b,
        d,
    };
    Ok(canonicalize_card(card))
}

/// Lexicographically minimal `[t, p, B, D]` under simultaneous permutation of
/// the end positions.
fn canonicalize_card(card: ClusterCard) -> ClusterCard {
    let ne = card.n_e as usize;
    if ne <= 1 {
        return card;
    }
    let mut best: Option<(Vec<u32>, Vec<u32>, Vec<Vec<u32>>, Vec<Vec<u32>>)> = None;
    let mut perm: Vec<u32> = (0..ne as u32).collect();
    permute_all(&mut perm, 0, &mut |p| {
        let t: Vec<u32> = (0..ne).map(|i| card.tvec[p[i] as usize]).collect();
        let pv: Vec<u32> = (0..ne).map(|i| card.pvec[p[i] as usize]).collect();
        let b: Vec<Vec<u32>> = (0..ne)
            .map(|i| (0..ne).map(|j| card.b[p[i] as usize][p[j] as usize]).collect())
            .collect();
        let d: Vec<Vec<u32>> = (0..ne)
            .map(|i| (0..ne).map(|j| card.d[p[i] as usize][p[j] as usize]).collect())
            .collect();
        let key = (t, pv, b, d);
        if best.as_ref().map_or(true, |b0| key < *b0) {
            best = Some(key);
        }
    });
    let (tvec, pvec, b, d) = best.expect("identity permutation");
    ClusterCard { tvec, pvec, b, d, ..card }
}

/// Card-based equivalence of two clusters.
pub fn equivalent(f1: &BaseFamily, f2: &BaseFamily) -> Result<bool, CoreError> {
    Ok(compute_card(f1)? == compute_card(f2)?)
}

/// Brute-force relabeling search; the validation oracle for card equivalence.
pub fn equivalent_brute_force(f1: &BaseFamily, f2: &BaseFamily) -> bool {
    if f1.dim() != f2.dim() || f1.support().len() != f2.support().len() {
        return false;
    }
    canonical_descriptor(f1) == canonical_descriptor(f2)
}

// ---------------------------------------------------------------------------
// synthesis and coaxial ideals

/// The coaxial algebra `sum coeff * lieon` of a compatible family; the
/// coefficient map is keyed by descriptor (missing keys use the stored
/// coefficients).
pub fn synthesize(
    f: &BaseFamily,
    coeffs: &BTreeMap<(u8, u32, u32, u32), Rational>,
) -> Result<LieStructure, CoreError> {
    if !f.is_compatible() {
        return Err(CoreError::IncompatibleFamily("cannot synthesize".into()));
    }
    let mut g = LieStructure::new(f.dim());
    for m in f.members() {
        let key = {
            let k = m.order_key();
            (k.0, k.1, k.2, k.3)
        };
        let stored = match &m {
            BaseLieon::Tee(t) => t.coeff.clone(),
            BaseLieon::Dee(d) => d.coeff.clone(),
        };
        let c = coeffs.get(&key).cloned().unwrap_or(stored);
        let scaled = match m {
            BaseLieon::Tee(t) => {
                let (i, j) = t.ends();
                BaseLieon::Tee(Tee::new(i, j, t.center(), c)?)
            }
            BaseLieon::Dee(d) => BaseLieon::Dee(Dee::new(d.origin(), d.end(), c)?),
        };
        g = g.sum(&scaled.realize(f.dim())?)?;
    }
    Ok(g)
}

/// Unit coefficients for every member of a family.
pub fn unit_coeffs(f: &BaseFamily) -> BTreeMap<(u8, u32, u32, u32), Rational> {
    f.members()
        .iter()
        .map(|m| {
            let k = m.order_key();
            ((k.0, k.1, k.2, k.3), Rational::one())
        })
        .collect()
}

/// One named vertex-span ideal of a coaxial algebra.
#[derive(Debug, Clone)]
pub struct IdealReport {
    pub name: String,
    pub vertices: Vec<u32>,
    pub is_ideal: bool,
}

/// Structure report for a synthesized cluster algebra: the canonical ideals
/// (spans of vertex classes), centrality of the t-center span, the length of
/// the radical's derived series, and the per-triangle simplicity of the
/// quotient by the radical.
#[derive(Debug, Clone)]
pub struct CoaxialStructure {
    pub ideals: Vec<IdealReport>,
    pub g_c_central: bool,
    pub rad_derived_length: u32,
    pub quotient_dim: u32,
    pub quotient_blocks_simple: bool,
}

fn span_of_vertices(n: usize, verts: &BTreeSet<u32>) -> Subspace {
    let vs: Vec<Vec<Rational>> = verts.iter().map(|&v| unit_vec(n, (v - 1) as usize)).collect();
    Subspace::span(n, &vs)
}

fn is_ideal(g: &LieStructure, s: &Subspace) -> bool {
    let n = g.dim() as usize;
    for i in 0..n {
        for v in s.basis() {
            if !s.contains(&g.bracket(&unit_vec(n, i), v).expect("dims")) {
                return false;
            }
        }
    }
    true
}

/// Analyzes the ideal structure of the coaxial algebra synthesized from a
/// cluster.
pub fn coaxial_ideals(
    f: &BaseFamily,
    coeffs: &BTreeMap<(u8, u32, u32, u32), Rational>,
) -> Result<CoaxialStructure, CoreError> {
    if !is_cluster(f)? {
        return Err(CoreError::NotACluster("ideal analysis needs a cluster".into()));
    }
    let g = synthesize(f, coeffs)?;
    let n = g.dim() as usize;
    let a = anatomy(f);
    let support = f.support();

    let minus = |s: &BTreeSet<u32>, t: &BTreeSet<u32>| -> BTreeSet<u32> {
        s.difference(t).copied().collect()
    };
    let union = |s: &BTreeSet<u32>, t: &BTreeSet<u32>| -> BTreeSet<u32> {
        s.union(t).copied().collect()
    };

    let g_c: BTreeSet<u32> = a.t_centers.clone();
    let g_cd: BTreeSet<u32> = a.d_centers.clone();
    let g_h: BTreeSet<u32> = union(&a.triangle_verts, &a.t_centers);
    let g_rt: BTreeSet<u32> = union(&a.double_verts, &a.t_centers);
    let g_rad: BTreeSet<u32> = minus(&support, &a.triangle_verts);
    let g_sr: BTreeSet<u32> = minus(&g_rad, &a.double_verts);
    let g_0: BTreeSet<u32> = minus(&support, &a.double_verts);

    let named: Vec<(&str, &BTreeSet<u32>)> = vec![
        ("g_c", &g_c),
        ("g_cd", &g_cd),
        ("g_h", &g_h),
        ("g_rt", &g_rt),
        ("g_rad", &g_rad),
        ("g_sr", &g_sr),
        ("g_0", &g_0),
    ];
    let mut ideals = Vec::new();
    for (name, verts) in &named {
        let span = span_of_vertices(n, verts);
        ideals.push(IdealReport {
            name: name.to_string(),
            vertices: verts.iter().copied().collect(),
            is_ideal: is_ideal(&g, &span),
        });
    }

    // centrality of g_c
    let center = g.center();
    let g_c_central = g_c.iter().all(|&v| center.contains(&unit_vec(n, (v - 1) as usize)));

    // derived series length of the radical subalgebra
    let rad_span = span_of_vertices(n, &g_rad);
    let mut terms = vec![rad_span.clone()];
    loop {
        let prev = terms.last().unwrap();
        if prev.dim() == 0 {
            break;
        }
        let basis = prev.basis().to_vec();
        let mut next = Subspace::empty(n);
        for (ai, x) in basis.iter().enumerate() {
            for y in basis.iter().skip(ai + 1) {
                next.insert(g.bracket(x, y).expect("dims"));
            }
        }
        if next.dim() == prev.dim() {
            break;
        }
        terms.push(next);
        if terms.len() > n + 1 {
            break;
        }
    }
    let rad_derived_length =
        if terms.last().unwrap().dim() == 0 { terms.len() as u32 - 1 } else { u32::MAX };

    // quotient by the radical: one simple 3-dimensional block per triangle
    let quotient_dim = (support.len() - g_rad.len()) as u32;
    let mut quotient_blocks_simple = quotient_dim == 3 * a.triangles.len() as u32;
    if quotient_blocks_simple {
        for &(x, y, z) in &a.triangles {
            // brackets of triangle vertices, reduced mod the radical span
            let vs = [x, y, z];
            let mut block = LieStructure::new(3);
            for p in 0..3 {
                for q in p + 1..3 {
                    let br = g
                        .bracket(&unit_vec(n, (vs[p] - 1) as usize), &unit_vec(n, (vs[q] - 1) as usize))
                        .expect("dims");
                    // components along other triangles must vanish, the
                    // radical part is quotiented away
                    for r in 0..3 {
                        block.add_constant(
                            p as u32 + 1,
                            q as u32 + 1,
                            r as u32 + 1,
                            br[(vs[r] - 1) as usize].clone(),
                        );
                    }
                    for (w, c) in br.iter().enumerate() {
                        let v = w as u32 + 1;
                        if !c.is_zero() && !g_rad.contains(&v) && !vs.contains(&v) {
                            quotient_blocks_simple = false;
                        }
                    }
                }
            }
            if block.killing_form().det().is_zero() || !block.jacobi_defect().is_zero() {
                quotient_blocks_simple = false;
            }
        }
    }

    Ok(CoaxialStructure {
        ideals,
        g_c_central,
        rad_derived_length,
        quotient_dim,
        quotient_blocks_simple,
    })
}

// ---------------------------------------------------------------------------

/// Named model families used by tests and the enumeration reports.
pub mod models {
    use super::*;

    pub fn double(p: u32, q: u32, dim: u32) -> BaseFamily {
        let mut f = BaseFamily::new(dim);
        f.insert_dee(Dee::unit(p, q)).unwrap();
        f.insert_dee(Dee::unit(q, p)).unwrap();
        f
    }

    pub fn triangle(a: u32, b: u32, c: u32, dim: u32) -> BaseFamily {
        let mut f = BaseFamily::new(dim);
        f.insert_tee(Tee::unit(a, b, c)).unwrap();
        f.insert_tee(Tee::unit(b, c, a)).unwrap();
        f.insert_tee(Tee::unit(c, a, b)).unwrap();
        f
    }

    /// Double on `{1,2}` plus thorn tees to `thorns`.
    pub fn rotator(thorns: &[u32], dim: u32) -> BaseFamily {
        let mut f = double(1, 2, dim);
        for &t in thorns {
            f.insert_tee(Tee::unit(1, 2, t)).unwrap();
        }
        f
    }

    /// Twain with top `e` over bottom `{b1,b2}` plus its framing dees.
    pub fn framed_twain(e: u32, b1: u32, b2: u32, dim: u32) -> BaseFamily {
        let mut f = BaseFamily::new(dim);
        f.insert_tee(Tee::unit(e, b1, b2)).unwrap();
        f.insert_tee(Tee::unit(e, b2, b1)).unwrap();
        f.insert_dee(Dee::unit(e, b1)).unwrap();
        f.insert_dee(Dee::unit(e, b2)).unwrap();
        f
    }

    pub fn d_bridge(e1: u32, e2: u32, c: u32, dim: u32) -> BaseFamily {
        let mut f = BaseFamily::new(dim);
        f.insert_dee(Dee::unit(e1, c)).unwrap();
        f.insert_dee(Dee::unit(e2, c)).unwrap();
        f.insert_tee(Tee::unit(e1, e2, c)).unwrap();
        f
    }

    /// `(k,l)`-spider: dees from each origin to each end.
    pub fn spider(origins: &[u32], ends: &[u32], dim: u32) -> BaseFamily {
        let mut f = BaseFamily::new(dim);
        for &p in origins {
            for &q in ends {
                f.insert_dee(Dee::unit(p, q)).unwrap();
            }
        }
        f
    }

    /// Framed pyramid: all twains over the bottom set with common top `e`,
    /// plus framing dees.
    pub fn framed_pyramid(e: u32, bottom: &[u32], dim: u32) -> BaseFamily {
        let mut f = BaseFamily::new(dim);
        for (ai, &b1) in bottom.iter().enumerate() {
            for &b2 in bottom.iter().skip(ai + 1) {
                f.insert_tee(Tee::unit(e, b1, b2)).unwrap();
                f.insert_tee(Tee::unit(e, b2, b1)).unwrap();
            }
        }
        for &b in bottom {
            f.insert_dee(Dee::unit(e, b)).unwrap();
        }
        f
    }

    /// `(p,q)`-hedgehog on disjoint triangles plus thorn casing tees.
    pub fn hedgehog(triangles: &[(u32, u32, u32)], thorns: &[u32], dim: u32) -> BaseFamily {
        let mut f = BaseFamily::new(dim);
        for &(a, b, c) in triangles {
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                f.insert_tee(Tee::unit(x, y, z)).unwrap();
            }
        }
        for &t in thorns {
            for &(a, b, c) in triangles {
                for (x, y) in [(a, b), (b, c), (a, c)] {
                    f.insert_tee(Tee::unit(x, y, t)).unwrap();
                }
            }
        }
        f
    }

    /// Raft: d-bridges with the given end pairs, centers distinct.
    pub fn raft(bridges: &[(u32, u32, u32)], dim: u32) -> BaseFamily {
        let mut f = BaseFamily::new(dim);
        for &(e1, e2, c) in bridges {
            f.insert_dee(Dee::unit(e1, c)).unwrap();
            f.insert_dee(Dee::unit(e2, c)).unwrap();
            f.insert_tee(Tee::unit(e1, e2, c)).unwrap();
        }
        f
    }
}
