//! Structure-constant representation of a Hom-dialgebra.
//!
//! Storage is dense and 0-based. A [`MultTable`] entry `(i, j, k)` is the
//! coefficient of `e_k` in `e_i • e_j`; a [`LinearMap`] entry `(i, j)` is the
//! coefficient of `e_i` in the image of `e_j` (one column per input).

use std::fmt;

use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::scalar::{Backend, Scalar};

/// Which of the two products of a dialgebra (or satellite) is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Left, Side::Right];

    pub fn symbol(self) -> &'static str {
        match self {
            Side::Left => "⊣",
            Side::Right => "⊢",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn zero(dim: usize, backend: Backend) -> Self {
        Vector {
            coords: vec![Scalar::zero(backend); dim],
        }
    }

    /// Basis vector `e_{index+1}`.
    pub fn basis(dim: usize, index: usize, backend: Backend) -> Self {
        let mut v = Self::zero(dim, backend);
        v.coords[index] = Scalar::one(backend);
        v
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        Vector { coords }
    }

    pub fn from_i64(backend: Backend, coords: &[i64]) -> Self {
        Vector {
            coords: coords.iter().map(|&c| Scalar::from_i64(backend, c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, factor: &Scalar) -> Vector {
        Vector {
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    /// Largest coordinate magnitude.
    pub fn max_magnitude(&self) -> f64 {
        self.coords.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }
}

impl fmt::Display for Vector {
    /// Writes the vector as a combination of basis vectors, e.g. `e1-1/2e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_exact_zero() {
                continue;
            }
            let text = c.to_string();
            let coef = match text.as_str() {
                "1" => String::new(),
                "-1" => "-".to_string(),
                _ if matches!(c, Scalar::Complex(_)) => format!("({text})"),
                _ => text,
            };
            let sep = if wrote && !coef.starts_with('-') { "+" } else { "" };
            write!(f, "{sep}{coef}e{}", i + 1)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for Vector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

/// Square matrix acting on column vectors: entry `(i, j)` is the coefficient
/// of `e_i` in the image of `e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    dim: usize,
    entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn zero(dim: usize, backend: Backend) -> Self {
        LinearMap {
            dim,
            entries: vec![Scalar::zero(backend); dim * dim],
        }
    }

    pub fn identity(dim: usize, backend: Backend) -> Self {
        let mut m = Self::zero(dim, backend);
        for i in 0..dim {
            m.set(i, i, Scalar::one(backend));
        }
        m
    }

    /// Builds the map from the images of the basis vectors.
    pub fn from_images(images: &[Vector]) -> Self {
        let dim = images.len();
        let backend = images
            .first()
            .and_then(|v| v.coords.first())
            .map_or(Backend::Rational, Scalar::backend);
        let mut m = Self::zero(dim, backend);
        for (j, img) in images.iter().enumerate() {
            assert_eq!(img.dim(), dim, "image has the wrong dimension");
            for i in 0..dim {
                m.set(i, j, img.coords[i].clone());
            }
        }
        m
    }

    /// Row-major entries: `rows[i][j]` is the coefficient of `e_i` in the image of `e_j`.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            check_dim(dim, row.len())?;
            entries.extend(row);
        }
        Ok(LinearMap { dim, entries })
    }

    pub fn from_i64_rows(backend: Backend, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&c| Scalar::from_i64(backend, c)).collect())
            .collect();
        Self::from_rows(rows).expect("square integer matrix")
    }

    /// Elementary map sending `e_input` to `e_output` and every other basis vector to 0.
    pub fn elementary(dim: usize, output: usize, input: usize, backend: Backend) -> Self {
        let mut m = Self::zero(dim, backend);
        m.set(output, input, Scalar::one(backend));
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn backend(&self) -> Backend {
        self.entries.first().map_or(Backend::Rational, Scalar::backend)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Image of `e_j`.
    pub fn column(&self, j: usize) -> Vector {
        Vector {
            coords: (0..self.dim).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries.chunks(self.dim.max(1)).map(<[Scalar]>::to_vec).collect()
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        check_dim(self.dim, x.dim())?;
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &Vector) -> Vector {
        let n = self.dim;
        let backend = self.backend();
        let coords = (0..n)
            .map(|i| {
                let mut acc = Scalar::zero(backend);
                for (j, xj) in x.coords.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_exact_zero() && !xj.is_exact_zero() {
                        acc = acc + a * xj;
                    }
                }
                acc
            })
            .collect();
        Vector { coords }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        check_dim(self.dim, other.dim)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &LinearMap) -> LinearMap {
        let images: Vec<Vector> = (0..self.dim)
            .map(|j| self.apply_unchecked(&other.column(j)))
            .collect();
        if images.is_empty() {
            return LinearMap::zero(0, self.backend());
        }
        LinearMap::from_images(&images)
    }

    /// `self^k`, with `self^0 = id`.
    pub fn pow(&self, k: u32) -> LinearMap {
        let mut acc = LinearMap::identity(self.dim, self.backend());
        for _ in 0..k {
            acc = self.compose_unchecked(&acc);
        }
        acc
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, factor: &Scalar) -> LinearMap {
        LinearMap {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * factor).collect(),
        }
    }

    /// `[self, other] = self ∘ other - other ∘ self`.
    pub fn commutator(&self, other: &LinearMap) -> LinearMap {
        self.compose_unchecked(other).sub(&other.compose_unchecked(self))
    }

    pub fn transpose(&self) -> LinearMap {
        let mut t = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(i, j, self.get(j, i).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn to_backend(&self, backend: Backend) -> Result<LinearMap> {
        Ok(LinearMap {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|e| e.to_backend(backend))
                .collect::<Result<_>>()?,
        })
    }

    /// Flattens in the unknown ordering used by the solvers: index `input * n + output`.
    pub fn to_unknowns(&self) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = Vec::with_capacity(n * n);
        for input in 0..n {
            for output in 0..n {
                out.push(self.get(output, input).clone());
            }
        }
        out
    }

    /// Inverse of [`LinearMap::to_unknowns`].
    pub fn from_unknowns(dim: usize, values: &[Scalar]) -> Result<LinearMap> {
        check_dim(dim * dim, values.len())?;
        let backend = values.first().map_or(Backend::Rational, Scalar::backend);
        let mut m = LinearMap::zero(dim, backend);
        for input in 0..dim {
            for output in 0..dim {
                m.set(output, input, values[input * dim + output].clone());
            }
        }
        Ok(m)
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[ {} ]", cells.join("  "))?;
            if i + 1 < rows.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Structure constants of one bilinear product.
#[derive(Clone, Debug, PartialEq)]
pub struct MultTable {
    dim: usize,
    entries: Vec<Scalar>,
}

impl MultTable {
    pub fn zero(dim: usize, backend: Backend) -> Self {
        MultTable {
            dim,
            entries: vec![Scalar::zero(backend); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn backend(&self) -> Backend {
        self.entries.first().map_or(Backend::Rational, Scalar::backend)
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// Coefficient of `e_k` in `e_i • e_j`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let idx = self.index(i, j, k);
        self.entries[idx] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Sets `e_i • e_j = value`.
    pub fn set_product(&mut self, i: usize, j: usize, value: &Vector) {
        for k in 0..self.dim {
            self.set(i, j, k, value.coords[k].clone());
        }
    }

    /// `e_i • e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let start = self.index(i, j, 0);
        Vector {
            coords: self.entries[start..start + self.dim].to_vec(),
        }
    }

    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        check_dim(self.dim, x.dim())?;
        check_dim(self.dim, y.dim())?;
        Ok(self.multiply_unchecked(x, y))
    }

    /// `Σ_{i,j} x_i y_j (e_i • e_j)`.
    pub(crate) fn multiply_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim;
        let backend = self.backend().join(x_backend(x)).join(x_backend(y));
        let mut out: Vec<Scalar> = vec![Scalar::zero(backend); n];
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_exact_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_exact_zero() {
                    continue;
                }
                let w = xi * yj;
                for (k, slot) in out.iter_mut().enumerate() {
                    let g = self.get(i, j, k);
                    if !g.is_exact_zero() {
                        *slot = &*slot + &(&w * g);
                    }
                }
            }
        }
        Vector { coords: out }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Table of `(x, y) ↦ m(x • y)`.
    pub fn post_compose(&self, m: &LinearMap) -> MultTable {
        let mut out = MultTable::zero(self.dim, self.backend().join(m.backend()));
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set_product(i, j, &m.apply_unchecked(&self.basis_product(i, j)));
            }
        }
        out
    }

    /// Table of the opposite product `(x, y) ↦ y • x`.
    pub fn transpose(&self) -> MultTable {
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.set(i, j, k, self.get(j, i, k).clone());
                }
            }
        }
        out
    }

    pub fn add(&self, other: &MultTable) -> MultTable {
        MultTable {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn to_backend(&self, backend: Backend) -> Result<MultTable> {
        Ok(MultTable {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|e| e.to_backend(backend))
                .collect::<Result<_>>()?,
        })
    }

    /// Nonzero entries as `(i, j, k, value)`, 0-based, in index order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.dim;
        self.entries.iter().enumerate().filter(|(_, v)| !v.is_exact_zero()).map(move |(idx, v)| {
            (idx / (n * n), (idx / n) % n, idx % n, v)
        })
    }
}

fn x_backend(v: &Vector) -> Backend {
    v.coords.first().map_or(Backend::Rational, Scalar::backend)
}

/// A quadruple `(A, ⊣, ⊢, α)` given by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct HomDialgebra {
    name: String,
    left: MultTable,
    right: MultTable,
    alpha: LinearMap,
}

impl HomDialgebra {
    pub fn new(name: impl Into<String>, left: MultTable, right: MultTable, alpha: LinearMap) -> Result<Self> {
        let dim = left.dim();
        check_dim(dim, right.dim())?;
        check_dim(dim, alpha.dim())?;
        let backend = left.backend();
        for b in [right.backend(), alpha.backend()] {
            if dim > 0 && b != backend {
                return Err(Error::BackendMismatch { left: backend, right: b });
            }
        }
        Ok(HomDialgebra {
            name: name.into(),
            left,
            right,
            alpha,
        })
    }

    /// Both products zero, `α` given.
    pub fn zero_products(name: impl Into<String>, alpha: LinearMap) -> Self {
        let n = alpha.dim();
        let b = alpha.backend();
        Self::new(name, MultTable::zero(n, b), MultTable::zero(n, b), alpha).expect("consistent shapes")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }

    pub fn backend(&self) -> Backend {
        self.left.backend()
    }

    pub fn left(&self) -> &MultTable {
        &self.left
    }

    pub fn right(&self) -> &MultTable {
        &self.right
    }

    pub fn table(&self, side: Side) -> &MultTable {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn product(&self, side: Side, x: &Vector, y: &Vector) -> Result<Vector> {
        self.table(side).multiply(x, y)
    }

    pub(crate) fn mul(&self, side: Side, x: &Vector, y: &Vector) -> Vector {
        self.table(side).multiply_unchecked(x, y)
    }

    pub(crate) fn alpha_of(&self, x: &Vector) -> Vector {
        self.alpha.apply_unchecked(x)
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i, self.backend())
    }

    pub fn to_backend(&self, backend: Backend) -> Result<HomDialgebra> {
        HomDialgebra::new(
            self.name.clone(),
            self.left.to_backend(backend)?,
            self.right.to_backend(backend)?,
            self.alpha.to_backend(backend)?,
        )
    }
}

pub fn apply_map(m: &LinearMap, x: &Vector) -> Result<Vector> {
    m.apply(x)
}

pub fn compose(m1: &LinearMap, m2: &LinearMap) -> Result<LinearMap> {
    m1.compose(m2)
}

pub fn product(a: &HomDialgebra, side: Side, x: &Vector, y: &Vector) -> Result<Vector> {
    a.product(side, x, y)
}
