//! JSON files for Hopf algebras, cocycles and comodule algebras, and JSON
//! renderings of results. Scalars are strings in the expression syntax of
//! [`crate::parse`], read over the field named in the file.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cocycle::TwoCocycle;
use crate::comod::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::exact::{Field, Scalar};
use crate::freealg::FreeElement;
use crate::hopf::{FinDimAlgebra, HopfAlgebra};
use crate::ident::MixedElement;
use crate::parse::parse_scalar;
use crate::sparse::{SparseVec, Tensor2};

fn rational() -> String {
    "rational".into()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HopfFile {
    #[serde(default = "rational")]
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    /// `[i, j, coordinates of x_i x_j]`; omitted products are zero.
    pub mult: Vec<(usize, usize, Vec<String>)>,
    pub unit: Vec<String>,
    /// `[i, j, k, s]`: `Δ(x_i)` has coefficient `s` on `x_j ⊗ x_k`.
    pub comult: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<String>,
    /// `antipode[i]` holds the coordinates of `S(x_i)`.
    pub antipode: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfRef {
    Path(String),
    Inline(Box<HopfFile>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CocycleFile {
    pub hopf: HopfRef,
    pub alpha: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComoduleFile {
    pub hopf: HopfRef,
    pub dim: usize,
    #[serde(default)]
    pub basis: Option<Vec<String>>,
    pub mult: Vec<(usize, usize, Vec<String>)>,
    /// Defaults to the first basis vector.
    #[serde(default)]
    pub unit: Option<Vec<String>>,
    /// `[i, j, k, s]`: `δ(a_i)` has coefficient `s` on `a_j ⊗ x_k`.
    pub coaction: Vec<(usize, usize, usize, String)>,
}

fn scalar_str(s: &Scalar) -> String {
    s.to_string()
}

fn dense_strs(v: &SparseVec, n: usize) -> Vec<String> {
    v.to_dense(n).iter().map(scalar_str).collect()
}

fn scalar(src: &str, field: &Field) -> Result<Scalar> {
    parse_scalar(src, field)
}

fn vector(src: &[String], n: usize, field: &Field, what: &str) -> Result<SparseVec> {
    if src.len() != n {
        return Err(Error::Dimension {
            what: what.into(),
            expected: n,
            found: src.len(),
        });
    }
    let vals = src.iter().map(|s| scalar(s, field)).collect::<Result<Vec<_>>>()?;
    Ok(SparseVec::from_dense(&vals))
}

fn mult_table(entries: &[(usize, usize, Vec<String>)], n: usize, field: &Field) -> Result<Vec<Vec<SparseVec>>> {
    let mut mult = vec![vec![SparseVec::new(); n]; n];
    for (i, j, v) in entries {
        if *i >= n || *j >= n {
            return Err(Error::Format(format!("product index ({i}, {j}) out of range")));
        }
        mult[*i][*j] = vector(v, n, field, "product coordinates")?;
    }
    Ok(mult)
}

fn tensor_table(entries: &[(usize, usize, usize, String)], m: usize, field: &Field) -> Result<Vec<Tensor2>> {
    let mut out = vec![Tensor2::new(); m];
    for (i, j, k, s) in entries {
        if *i >= m {
            return Err(Error::Format(format!("tensor entry index {i} out of range")));
        }
        out[*i].add_term((*j, *k), scalar(s, field)?);
    }
    Ok(out)
}

fn mult_entries(alg: &FinDimAlgebra) -> Vec<(usize, usize, Vec<String>)> {
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !alg.mult[i][j].is_zero() {
                out.push((i, j, dense_strs(&alg.mult[i][j], n)));
            }
        }
    }
    out
}

fn tensor_entries(t: &[Tensor2]) -> Vec<(usize, usize, usize, String)> {
    t.iter()
        .enumerate()
        .flat_map(|(i, d)| d.iter().map(move |(&(j, k), s)| (i, j, k, scalar_str(s))))
        .collect()
}

impl HopfFile {
    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        let n = h.dim();
        Self {
            field: h.field.to_string(),
            dim: n,
            basis: h.labels().to_vec(),
            mult: mult_entries(&h.alg),
            unit: dense_strs(h.unit(), n),
            comult: tensor_entries(&h.comult),
            counit: h.counit.iter().map(scalar_str).collect(),
            antipode: h.antipode.iter().map(|v| dense_strs(v, n)).collect(),
        }
    }

    pub fn to_hopf(&self) -> Result<HopfAlgebra> {
        let field: Field = self.field.parse().map_err(|_| Error::Format(format!("unknown field `{}`", self.field)))?;
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::Dimension {
                what: "basis labels".into(),
                expected: n,
                found: self.basis.len(),
            });
        }
        let alg = FinDimAlgebra::new(
            self.basis.clone(),
            mult_table(&self.mult, n, &field)?,
            vector(&self.unit, n, &field, "unit")?,
        )?;
        let counit = self.counit.iter().map(|s| scalar(s, &field)).collect::<Result<Vec<_>>>()?;
        let antipode = self
            .antipode
            .iter()
            .map(|v| vector(v, n, &field, "antipode row"))
            .collect::<Result<Vec<_>>>()?;
        HopfAlgebra::new(field.clone(), alg, tensor_table(&self.comult, n, &field)?, counit, antipode)
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

impl HopfRef {
    pub fn resolve(&self, base: &Path) -> Result<HopfAlgebra> {
        match self {
            HopfRef::Path(p) => load_hopf(&base.join(p)),
            HopfRef::Inline(f) => f.to_hopf(),
        }
    }
}

pub fn parse_hopf(text: &str) -> Result<HopfAlgebra> {
    let f: HopfFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    f.to_hopf()
}

pub fn load_hopf(path: &Path) -> Result<HopfAlgebra> {
    read_json::<HopfFile>(path)?.to_hopf()
}

pub fn hopf_to_json(h: &HopfAlgebra) -> String {
    serde_json::to_string_pretty(&HopfFile::from_hopf(h)).expect("serializable")
}

impl CocycleFile {
    pub fn to_cocycle(&self, base: &Path) -> Result<TwoCocycle> {
        let h = self.hopf.resolve(base)?;
        let alpha = self
            .alpha
            .iter()
            .map(|row| row.iter().map(|s| scalar(s, &h.field)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        TwoCocycle::new(Arc::new(h), alpha)
    }
}

pub fn load_cocycle(path: &Path) -> Result<TwoCocycle> {
    read_json::<CocycleFile>(path)?.to_cocycle(&base_dir(path))
}

impl ComoduleFile {
    pub fn to_comodule(&self, base: &Path) -> Result<ComoduleAlgebra> {
        let h = self.hopf.resolve(base)?;
        let field = h.field.clone();
        let m = self.dim;
        let labels = match &self.basis {
            Some(b) => b.clone(),
            None => (1..=m).map(|i| format!("a{i}")).collect(),
        };
        let unit = match &self.unit {
            Some(u) => vector(u, m, &field, "unit")?,
            None => SparseVec::basis(0),
        };
        let alg = FinDimAlgebra::new(labels, mult_table(&self.mult, m, &field)?, unit)?;
        ComoduleAlgebra::new(alg, Arc::new(h), tensor_table(&self.coaction, m, &field)?)
    }
}

pub fn load_comodule(path: &Path) -> Result<ComoduleAlgebra> {
    read_json::<ComoduleFile>(path)?.to_comodule(&base_dir(path))
}

/// `[[labels...], "coefficient"]` per term.
pub fn free_element_json(p: &FreeElement, labels: &[String]) -> Value {
    Value::Array(
        p.terms()
            .map(|(w, c)| {
                let word: Vec<&str> = w.0.iter().map(|&i| labels[i].as_str()).collect();
                json!([word, scalar_str(c)])
            })
            .collect(),
    )
}

/// `{"u_x": "polynomial", ...}` over the nonzero coordinates.
pub fn mixed_json(m: &MixedElement, labels: &[String]) -> Value {
    let mut map = serde_json::Map::new();
    for (j, p) in m.entries.iter().enumerate() {
        if !p.is_zero() {
            map.insert(labels[j].clone(), Value::String(p.to_string()));
        }
    }
    Value::Object(map)
}

/// A rational function as `"numerator | denominator"`.
pub fn fraction_str(s: &Scalar) -> String {
    match s.as_ratfunc() {
        Some(r) => format!("{} | {}", r.numerator(), r.denominator()),
        None => format!("{s} | 1"),
    }
}

pub fn vector_json(v: &SparseVec, labels: &[String]) -> Value {
    let mut map = serde_json::Map::new();
    for (&i, c) in v.iter() {
        map.insert(labels[i].clone(), Value::String(scalar_str(c)));
    }
    Value::Object(map)
}
