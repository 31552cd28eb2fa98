//! Built-in classification tables and auxiliary examples, the algebra file
//! format, and batch verification.

mod data;
mod expr;
pub mod format;
pub mod report;

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{HomDialgebra, LinearMap, MultTable, Vector};
use crate::axioms::{self, AxiomReport, DendriformVariant, DipterousSide};
use crate::error::{Error, Result};
use crate::scalar::{Backend, Scalar};

pub use format::{parse, serialize};
pub use report::{verify_all, EntryReport, ReportOptions, VerificationReport};

/// What kind of structure a pair of tables describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    /// Products `⊣`, `⊢`.
    Dialgebra,
    /// Products `≺`, `≻`.
    Dendriform,
    /// A single product `∘`, stored as the first table.
    Zinbiel,
    /// Products `∗` (first table) and `≻` or `≺` (second table).
    Dipterous(DipterousSide),
}

impl StructureKind {
    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Dialgebra => "dialgebra",
            StructureKind::Dendriform => "dendriform",
            StructureKind::Zinbiel => "zinbiel",
            StructureKind::Dipterous(DipterousSide::Left) => "dipterous-left",
            StructureKind::Dipterous(DipterousSide::Right) => "dipterous-right",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            StructureKind::Dialgebra,
            StructureKind::Dendriform,
            StructureKind::Zinbiel,
            StructureKind::Dipterous(DipterousSide::Left),
            StructureKind::Dipterous(DipterousSide::Right),
        ]
        .into_iter()
        .find(|k| k.name() == name)
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Two tables and a twisting map, tagged with how they are to be read.
#[derive(Clone, Debug, PartialEq)]
pub struct Structure {
    pub kind: StructureKind,
    pub algebra: HomDialgebra,
}

impl Structure {
    pub fn dialgebra(algebra: HomDialgebra) -> Self {
        Structure {
            kind: StructureKind::Dialgebra,
            algebra,
        }
    }

    /// Checks the defining identities of the structure's kind.
    pub fn check(&self) -> Result<AxiomReport> {
        let a = &self.algebra;
        match self.kind {
            StructureKind::Dialgebra => Ok(axioms::check_dialgebra(a)),
            StructureKind::Dendriform => axioms::check_dendriform(a.left(), a.right(), a.alpha(), DendriformVariant::Standard),
            StructureKind::Zinbiel => axioms::check_zinbiel(a.left(), a.alpha()),
            StructureKind::Dipterous(side) => axioms::check_dipterous(a.left(), a.right(), a.alpha(), side),
        }
    }
}

/// A derivation or centroid matrix as printed, row `i` holding the image of
/// `e_i`, with the dimension claimed next to it.
#[derive(Clone, Copy, Debug)]
pub struct Printed {
    pub rows: &'static str,
    pub dim: usize,
    /// `false` when an entry is not a linear form in its symbols.
    pub linear: bool,
}

impl Printed {
    fn cells(&self) -> Vec<Vec<&'static str>> {
        self.rows.split(';').map(|r| r.split(',').map(str::trim).collect()).collect()
    }

    /// The symbols appearing in the matrix, in order of first appearance.
    pub fn symbols(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for cell in self.cells().into_iter().flatten() {
            for s in expr::free_symbols(cell) {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out
    }

    /// One map per symbol: that symbol set to 1, all others to 0.  `None`
    /// when the printed form is not linear.
    pub fn maps(&self, backend: Backend) -> Option<Result<Vec<(String, LinearMap)>>> {
        if !self.linear {
            return None;
        }
        Some(self.symbols().into_iter().map(|sym| self.instantiate(&sym, backend).map(|m| (sym, m))).collect())
    }

    fn instantiate(&self, symbol: &str, backend: Backend) -> Result<LinearMap> {
        let mut params = BTreeMap::new();
        for s in self.symbols() {
            let v = if s == symbol { 1 } else { 0 };
            params.insert(s, Scalar::from_i64(backend, v));
        }
        let cells = self.cells();
        let n = cells.len();
        let env = expr::Env { dim: n, backend, params: &params };
        let mut map = LinearMap::zero(n, backend);
        for (i, row) in cells.iter().enumerate() {
            if row.len() != n {
                return Err(Error::precondition(format!("printed matrix row {} has {} entries", i + 1, row.len())));
            }
            for (j, cell) in row.iter().enumerate() {
                map.set(j, i, expr::scalar(cell, &env)?);
            }
        }
        Ok(map)
    }
}

/// A catalog entry: tables as printed, parameters, and tabulated claims.
pub struct CatalogEntry {
    raw: &'static data::Raw,
}

impl CatalogEntry {
    pub fn id(&self) -> &'static str {
        self.raw.id
    }

    pub fn kind(&self) -> StructureKind {
        self.raw.kind
    }

    pub fn dim(&self) -> usize {
        self.raw.dim
    }

    pub fn backend(&self) -> Backend {
        self.raw.backend
    }

    /// Parameter names, in the order they are printed.
    pub fn params(&self) -> &'static [&'static str] {
        self.raw.params
    }

    /// Parameters that appear in the printed table but not in any product.
    pub fn unused_params(&self) -> &'static [&'static str] {
        self.raw.unused
    }

    pub fn printed_derivations(&self) -> Option<Printed> {
        self.raw.der
    }

    pub fn printed_centroids(&self) -> Option<Printed> {
        self.raw.cent
    }

    /// Derivation dimension claimed next to the printed table.
    pub fn der_dim_claimed(&self) -> Option<usize> {
        self.raw.der.map(|p| p.dim)
    }

    /// Centroid dimension claimed next to the printed table.
    pub fn cent_dim_claimed(&self) -> Option<usize> {
        self.raw.cent.map(|p| p.dim)
    }

    /// Annotations on how the printed entry was read.
    pub fn notes(&self) -> &'static [&'static str] {
        self.raw.notes
    }

    /// Every parameter set to `value`.
    pub fn uniform_params(&self, value: i64) -> BTreeMap<String, Scalar> {
        self.raw.params.iter().map(|p| (p.to_string(), Scalar::from_i64(self.raw.backend, value))).collect()
    }

    /// Builds the structure for a full parameter assignment.
    pub fn instantiate(&self, params: &BTreeMap<String, Scalar>) -> Result<Instance> {
        for name in params.keys() {
            if !self.raw.params.contains(&name.as_str()) {
                return Err(Error::UnknownParameter {
                    entry: self.id().to_string(),
                    name: name.clone(),
                });
            }
        }
        if let Some(missing) = self.raw.params.iter().find(|p| !params.contains_key(**p)) {
            return Err(Error::MissingParameter {
                entry: self.id().to_string(),
                name: missing.to_string(),
            });
        }
        let backend = params.values().fold(self.raw.backend, |b, v| b.join(v.backend()));
        let params: BTreeMap<String, Scalar> =
            params.iter().map(|(k, v)| Ok((k.clone(), v.to_backend(backend)?))).collect::<Result<_>>()?;
        let n = self.raw.dim;
        let env = expr::Env { dim: n, backend, params: &params };
        let left = table(self.raw.left, &env)?;
        let right = table(self.raw.right, &env)?;
        let alpha = map(self.raw.alpha, &env)?;
        let algebra = HomDialgebra::new(self.id(), left, right, alpha)?;
        Ok(Instance {
            entry: CatalogEntry { raw: self.raw },
            params,
            structure: Structure {
                kind: self.raw.kind,
                algebra,
            },
        })
    }

    /// Builds the structure at the default instantiation (every parameter 1).
    pub fn instantiate_default(&self) -> Result<Instance> {
        self.instantiate(&self.uniform_params(1))
    }
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry").field("id", &self.id()).finish()
    }
}

/// A fully numeric catalog structure.
#[derive(Debug)]
pub struct Instance {
    pub entry: CatalogEntry,
    pub params: BTreeMap<String, Scalar>,
    pub structure: Structure,
}

impl Instance {
    pub fn algebra(&self) -> &HomDialgebra {
        &self.structure.algebra
    }
}

fn split_items(text: &str) -> impl Iterator<Item = (&str, &str)> {
    text.split(';').map(str::trim).filter(|s| !s.is_empty()).map(|item| item.split_once(':').expect("catalog item has a key"))
}

fn table(text: &str, env: &expr::Env) -> Result<MultTable> {
    let mut t = MultTable::zero(env.dim, env.backend);
    for (key, value) in split_items(text) {
        let digits: Vec<usize> = key.trim().bytes().map(|b| usize::from(b - b'0')).collect();
        let [i, j] = digits[..] else {
            return Err(Error::precondition(format!("bad product key `{key}`")));
        };
        t.set_product(i - 1, j - 1, &Vector::from_coords(expr::vector(value, env)?));
    }
    Ok(t)
}

fn map(text: &str, env: &expr::Env) -> Result<LinearMap> {
    if text.trim() == "id" {
        return Ok(LinearMap::identity(env.dim, env.backend));
    }
    let mut images: Vec<Vector> = (0..env.dim).map(|_| Vector::zero(env.dim, env.backend)).collect();
    for (key, value) in split_items(text) {
        let i: usize = key.trim().parse().map_err(|_| Error::precondition(format!("bad map key `{key}`")))?;
        images[i - 1] = Vector::from_coords(expr::vector(value, env)?);
    }
    Ok(LinearMap::from_images(&images))
}

/// Every entry, in catalog order.
pub fn entries() -> impl Iterator<Item = CatalogEntry> {
    data::ENTRIES.iter().map(|raw| CatalogEntry { raw })
}

/// Entry ids in catalog order.
pub fn ids() -> Vec<&'static str> {
    data::ENTRIES.iter().map(|r| r.id).collect()
}

/// Looks up an entry.  `TH…` names the same algebra as `Hd…`.
pub fn entry(id: &str) -> Result<CatalogEntry> {
    let canonical = id.strip_prefix("TH").map(|rest| format!("Hd{rest}"));
    let key = canonical.as_deref().unwrap_or(id);
    entries().find(|e| e.id() == key).ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// Instantiates an entry: with `None`, every parameter is 1; otherwise the
/// map must assign every parameter.
pub fn get(id: &str, params: Option<&BTreeMap<String, Scalar>>) -> Result<Instance> {
    let e = entry(id)?;
    match params {
        Some(p) => e.instantiate(p),
        None => e.instantiate_default(),
    }
}
