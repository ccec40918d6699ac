//! Wire formats. Rationals travel as decimal-integer strings or `"p/q"`;
//! indices are 1-based. Serialization is deterministic: maps are sorted and
//! every list has a stable order.

use lieons_core::clusters::ClusterCard;
use lieons_core::lieon::{BaseFamily, BaseLieon, Dee, Tee};
use lieons_core::rational::{format_rational, parse_rational};
use lieons_core::scheme::AScheme;
use lieons_core::{CoreError, LieStructure};
use serde::{Deserialize, Serialize};

/// A structure as a list of brackets `[e_i, e_j] = c e_k` with `i < j`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StructureDocument {
    pub dim: u32,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub c: String,
}

impl StructureDocument {
    pub fn from_structure(g: &LieStructure) -> Self {
        let brackets = g
            .constants()
            .map(|(&(i, j, k), c)| BracketEntry { i, j, k, c: format_rational(c) })
            .collect();
        StructureDocument { dim: g.dim(), brackets }
    }

    pub fn to_structure(&self) -> Result<LieStructure, CoreError> {
        if self.dim == 0 {
            return Err(CoreError::BadClassicalSpec("dim must be positive".into()));
        }
        let mut g = LieStructure::new(self.dim);
        for b in &self.brackets {
            if b.i == 0 || b.j == 0 || b.k == 0 || b.i > self.dim || b.j > self.dim || b.k > self.dim
            {
                return Err(CoreError::IndexOutOfRange {
                    index: b.i.max(b.j).max(b.k),
                    dim: self.dim,
                });
            }
            if b.i >= b.j {
                return Err(CoreError::BadLieon(format!(
                    "bracket indices must satisfy i < j, got ({}, {})",
                    b.i, b.j
                )));
            }
            g.add_constant(b.i, b.j, b.k, parse_rational(&b.c)?);
        }
        Ok(g)
    }
}

/// A disassembling tree.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SchemeDocument {
    pub structure: StructureDocument,
    pub label: String,
    pub children: Vec<SchemeDocument>,
}

impl SchemeDocument {
    pub fn from_scheme(s: &AScheme) -> Self {
        SchemeDocument {
            structure: StructureDocument::from_structure(&s.node),
            label: s.label.clone(),
            children: s.children.iter().map(SchemeDocument::from_scheme).collect(),
        }
    }

    pub fn to_scheme(&self) -> Result<AScheme, CoreError> {
        Ok(AScheme {
            node: self.structure.to_structure()?,
            label: self.label.clone(),
            children: self
                .children
                .iter()
                .map(SchemeDocument::to_scheme)
                .collect::<Result<_, _>>()?,
        })
    }
}

/// A base family of tees and dees, with optional coefficients (default 1).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyDocument {
    pub dim: u32,
    #[serde(default)]
    pub tees: Vec<TeeEntry>,
    #[serde(default)]
    pub dees: Vec<DeeEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TeeEntry {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeeEntry {
    pub p: u32,
    pub q: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
}

impl FamilyDocument {
    pub fn from_family(f: &BaseFamily) -> Self {
        let mut tees = Vec::new();
        let mut dees = Vec::new();
        for m in f.members() {
            match m {
                BaseLieon::Tee(t) => {
                    let (i, j) = t.ends();
                    tees.push(TeeEntry {
                        i,
                        j,
                        k: t.center(),
                        c: Some(format_rational(&t.coeff)),
                    });
                }
                BaseLieon::Dee(d) => dees.push(DeeEntry {
                    p: d.origin(),
                    q: d.end(),
                    c: Some(format_rational(&d.coeff)),
                }),
            }
        }
        FamilyDocument { dim: f.dim(), tees, dees }
    }

    pub fn to_family(&self) -> Result<BaseFamily, CoreError> {
        let mut f = BaseFamily::new(self.dim);
        for t in &self.tees {
            let c = match &t.c {
                Some(s) => parse_rational(s)?,
                None => num_traits::one(),
            };
            f.insert_tee(Tee::new(t.i, t.j, t.k, c)?)?;
        }
        for d in &self.dees {
            let c = match &d.c {
                Some(s) => parse_rational(s)?,
                None => num_traits::one(),
            };
            f.insert_dee(Dee::new(d.p, d.q, c)?)?;
        }
        Ok(f)
    }
}

/// A card in wire form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CardDocument {
    pub n_t: u32,
    pub n_e: u32,
    pub n_d: u32,
    pub n_tr: u32,
    pub n_r: u32,
    pub t: Vec<u32>,
    pub p: Vec<u32>,
    pub b: Vec<Vec<u32>>,
    pub d: Vec<Vec<u32>>,
    pub dim: u32,
}

impl CardDocument {
    pub fn from_card(c: &ClusterCard) -> Self {
        CardDocument {
            n_t: c.n_t,
            n_e: c.n_e,
            n_d: c.n_d,
            n_tr: c.n_tr,
            n_r: c.n_r,
            t: c.tvec.clone(),
            p: c.pvec.clone(),
            b: c.b.clone(),
            d: c.d.clone(),
            dim: c.dim(),
        }
    }
}
