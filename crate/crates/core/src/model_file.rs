//! JSON model files.
//!
//! ```json
//! {
//!   "rings": {
//!     "N": { "basis": [{"label": "1", "degree": 0}, …],
//!            "products": [{"i": 1, "j": 1, "result": [{"index": 2, "coeff": "1"}]}],
//!            "top_degree": 4,
//!            "integral": [{"index": 2, "coeff": "1"}] },
//!     "M": { … }
//!   },
//!   "target": "N",
//!   "immersion": { "source": "M", "codim": 2,
//!                  "pullback": [{"row": 1, "col": 1, "coeff": "1"}],
//!                  "pushforward": […], "euler": [{"index": 1, "coeff": "1"}],
//!                  "P_M": […], "P_N": […] }
//! }
//! ```
//!
//! Matrices are sparse entry lists; `col` indexes the source basis and `row`
//! the target basis. A disjoint union replaces `"immersion"` by a list
//! `"components"` of immersion objects sharing the target. Products with the
//! unit may be omitted, as may the `(j, i)` twin of an `(i, j)` entry.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graded_ring::{BasisElement, GradedRing, RingError, SparseVec};
use crate::immersion_model::{ImmersionModel, ModelData, ModelError};
use crate::rational::{format, parse, Q};

#[derive(Debug, Error)]
pub enum ModelFileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema: {0}")]
    Schema(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn schema(msg: impl Into<String>) -> ModelFileError {
    ModelFileError::Schema(msg.into())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub index: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixEntry {
    pub row: usize,
    pub col: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub label: String,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub result: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    pub basis: Vec<BasisEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<usize>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
    pub top_degree: u32,
    pub integral: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImmersionFile {
    pub source: String,
    pub codim: u32,
    pub pullback: Vec<MatrixEntry>,
    pub pushforward: Vec<MatrixEntry>,
    pub euler: Vec<Entry>,
    #[serde(rename = "P_M")]
    pub p_m: Vec<Entry>,
    #[serde(rename = "P_N")]
    pub p_n: Vec<Entry>,
    #[serde(rename = "c_M", default, skip_serializing_if = "Option::is_none")]
    pub c_m: Option<Vec<Entry>>,
    #[serde(rename = "c_N", default, skip_serializing_if = "Option::is_none")]
    pub c_n: Option<Vec<Entry>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub rings: BTreeMap<String, RingFile>,
    pub target: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub immersion: Option<ImmersionFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ImmersionFile>>,
}

fn coeff(s: &str, at: &str) -> Result<Q, ModelFileError> {
    parse(s).map_err(|e| schema(format!("{at}: {e}")))
}

fn vector(entries: &[Entry], dim: usize, at: &str) -> Result<SparseVec, ModelFileError> {
    let mut v = SparseVec::new();
    for e in entries {
        if e.index >= dim {
            return Err(schema(format!("{at}: index {} out of range (dimension {dim})", e.index)));
        }
        if v.insert(e.index, coeff(&e.coeff, at)?).is_some() {
            return Err(schema(format!("{at}: index {} listed twice", e.index)));
        }
    }
    Ok(v)
}

fn matrix(entries: &[MatrixEntry], rows: usize, cols: usize, at: &str) -> Result<Vec<SparseVec>, ModelFileError> {
    let mut m = vec![SparseVec::new(); cols];
    for e in entries {
        if e.row >= rows || e.col >= cols {
            return Err(schema(format!("{at}: entry ({}, {}) outside {rows}x{cols}", e.row, e.col)));
        }
        if m[e.col].insert(e.row, coeff(&e.coeff, at)?).is_some() {
            return Err(schema(format!("{at}: entry ({}, {}) listed twice", e.row, e.col)));
        }
    }
    Ok(m)
}

fn entries(v: &SparseVec) -> Vec<Entry> {
    v.iter()
        .map(|(&index, c)| Entry { index, coeff: format(c) })
        .collect()
}

fn matrix_entries(m: &[SparseVec]) -> Vec<MatrixEntry> {
    m.iter()
        .enumerate()
        .flat_map(|(col, v)| {
            v.iter().map(move |(&row, c)| MatrixEntry {
                row,
                col,
                coeff: format(c),
            })
        })
        .collect()
}

impl RingFile {
    pub fn build(&self, name: &str) -> Result<Arc<GradedRing>, ModelFileError> {
        let n = self.basis.len();
        for b in &self.basis {
            if b.degree % 2 != 0 {
                return Err(schema(format!("ring {name}: basis element {} has odd degree {}", b.label, b.degree)));
            }
        }
        if !self.top_degree.is_multiple_of(2) {
            return Err(schema(format!("ring {name}: odd top degree {}", self.top_degree)));
        }
        let mut products = Vec::new();
        for p in &self.products {
            if p.i >= n || p.j >= n {
                return Err(schema(format!("ring {name}: product ({}, {}) out of range", p.i, p.j)));
            }
            products.push(((p.i, p.j), vector(&p.result, n, &format!("ring {name} product ({}, {})", p.i, p.j))?));
        }
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElement::new(b.label.clone(), b.degree))
            .collect();
        let integral = vector(&self.integral, n, &format!("ring {name} integral"))?;
        Ok(GradedRing::new(basis, self.unit, products, self.top_degree, integral)?)
    }

    /// Serializes a single-component ring.
    pub fn from_ring(r: &GradedRing) -> Result<Self, ModelFileError> {
        if r.components().len() != 1 {
            return Err(schema("product rings are written as separate components"));
        }
        let unit = r.unit_index();
        let mut products = Vec::new();
        for i in 0..r.dim() {
            for j in i..r.dim() {
                if Some(i) == unit || Some(j) == unit {
                    continue;
                }
                let v = r.product_of(i, j);
                if !v.is_empty() {
                    products.push(ProductEntry { i, j, result: entries(v) });
                }
            }
        }
        Ok(RingFile {
            basis: r
                .basis()
                .iter()
                .enumerate()
                .map(|(i, _)| BasisEntry {
                    label: r.label(i).to_string(),
                    degree: r.degree(i),
                })
                .collect(),
            unit,
            products,
            top_degree: r.top_degree(),
            integral: entries(r.integral()),
        })
    }
}

impl ModelFile {
    pub fn from_json(s: &str) -> Result<Self, ModelFileError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model files serialize") + "\n"
    }

    pub fn build(&self) -> Result<ImmersionModel, ModelFileError> {
        let mut rings = BTreeMap::new();
        for (name, r) in &self.rings {
            rings.insert(name.clone(), r.build(name)?);
        }
        let ring = |name: &str| {
            rings
                .get(name)
                .cloned()
                .ok_or_else(|| schema(format!("unknown ring {name:?}")))
        };
        let hn = ring(&self.target)?;
        let immersions: Vec<&ImmersionFile> = match (&self.immersion, &self.components) {
            (Some(i), None) => vec![i],
            (None, Some(c)) if !c.is_empty() => c.iter().collect(),
            (None, Some(_)) => return Err(schema("\"components\" is empty")),
            (Some(_), Some(_)) => return Err(schema("give either \"immersion\" or \"components\", not both")),
            (None, None) => return Err(schema("missing \"immersion\"")),
        };
        let mut parts = Vec::new();
        for (c, imm) in immersions.into_iter().enumerate() {
            let at = |what: &str| format!("component {}: {what}", c + 1);
            let hm = ring(&imm.source)?;
            let (dm, dn) = (hm.dim(), hn.dim());
            let data = ModelData {
                codim: imm.codim,
                pullback: matrix(&imm.pullback, dm, dn, &at("pullback"))?,
                pushforward: matrix(&imm.pushforward, dn, dm, &at("pushforward"))?,
                euler: vector(&imm.euler, dm, &at("euler"))?,
                p_m: vector(&imm.p_m, dm, &at("P_M"))?,
                p_n: vector(&imm.p_n, dn, &at("P_N"))?,
                c_m: imm.c_m.as_ref().map(|v| vector(v, dm, &at("c_M"))).transpose()?,
                c_n: imm.c_n.as_ref().map(|v| vector(v, dn, &at("c_N"))).transpose()?,
                hm,
                hn: hn.clone(),
            };
            parts.push(ImmersionModel::new(data)?);
        }
        if let Some(first) = parts.first() {
            if parts.iter().any(|p| p.p_n() != first.p_n()) {
                return Err(schema("components disagree on P_N"));
            }
        }
        Ok(ImmersionModel::disjoint_union(&parts)?)
    }

    pub fn from_model(model: &ImmersionModel) -> Result<Self, ModelFileError> {
        let mut rings = BTreeMap::new();
        rings.insert("N".to_string(), RingFile::from_ring(model.hn())?);
        let parts = model.parts();
        let mut immersions = Vec::new();
        for (c, part) in parts.iter().enumerate() {
            let source = if parts.len() == 1 { "M".to_string() } else { format!("M{}", c + 1) };
            let d = part.data();
            rings.insert(source.clone(), RingFile::from_ring(&d.hm)?);
            immersions.push(ImmersionFile {
                source,
                codim: d.codim,
                pullback: matrix_entries(&d.pullback),
                pushforward: matrix_entries(&d.pushforward),
                euler: entries(&d.euler),
                p_m: entries(&d.p_m),
                p_n: entries(&d.p_n),
                c_m: d.c_m.as_ref().map(entries),
                c_n: d.c_n.as_ref().map(entries),
            });
        }
        let (immersion, components) = if immersions.len() == 1 {
            (immersions.pop(), None)
        } else {
            (None, Some(immersions))
        };
        Ok(ModelFile {
            rings,
            target: "N".into(),
            immersion,
            components,
        })
    }
}

pub fn load(path: impl AsRef<Path>) -> Result<ImmersionModel, ModelFileError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ModelFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    ModelFile::from_json(&text)?.build()
}

pub fn to_json(model: &ImmersionModel) -> Result<String, ModelFileError> {
    Ok(ModelFile::from_model(model)?.to_json())
}

pub fn from_json(s: &str) -> Result<ImmersionModel, ModelFileError> {
    ModelFile::from_json(s)?.build()
}
