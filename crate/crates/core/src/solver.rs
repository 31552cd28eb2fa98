//! Exact (or tolerance-thresholded) linear algebra over [`Scalar`]s.
//!
//! Systems here are small (at most 144 × 16 for the four-dimensional
//! catalog), so everything is dense Gauss–Jordan elimination. On the
//! rational backend the pivot is the first nonzero entry of the leftmost
//! usable column; on the complex backend it is the entry of largest
//! magnitude, and entries with `|z| <= epsilon()` count as zero.

use nalgebra::DMatrix;
use num::complex::Complex64;

use crate::algebra::{LinearMap, Vector};
use crate::error::{check_dim, Error, Result};
use crate::scalar::{epsilon, Backend, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    backend: Backend,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, backend: Backend) -> Self {
        Matrix {
            rows,
            cols,
            backend,
            entries: vec![Scalar::zero(backend); rows * cols],
        }
    }

    pub fn identity(n: usize, backend: Backend) -> Self {
        let mut m = Self::zero(n, n, backend);
        for i in 0..n {
            m.set(i, i, Scalar::one(backend));
        }
        m
    }

    /// Builds a matrix from its rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, backend: Backend, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let mut m = Matrix {
            rows: rows.len(),
            cols,
            backend,
            entries: Vec::with_capacity(rows.len() * cols),
        };
        for row in rows {
            check_dim(cols, row.len())?;
            m.entries.extend(row);
        }
        Ok(m)
    }

    /// Builds a matrix from its columns (each of length `rows`).
    pub fn from_columns(rows: usize, backend: Backend, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Matrix::zero(rows, columns.len(), backend);
        for (j, col) in columns.iter().enumerate() {
            check_dim(rows, col.len())?;
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn from_map(map: &LinearMap) -> Self {
        let n = map.dim();
        Matrix {
            rows: n,
            cols: n,
            backend: map.backend(),
            entries: map.entries().to_vec(),
        }
    }

    pub fn to_map(&self) -> Result<LinearMap> {
        check_dim(self.rows, self.cols)?;
        LinearMap::from_rows(self.row_vectors())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.cols, other.cols)?;
        let mut m = self.clone();
        m.rows += other.rows;
        m.entries.extend(other.entries.iter().cloned());
        m.backend = self.backend.join(other.backend);
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        check_dim(self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_exact_zero() && !b.is_exact_zero())
                    .fold(Scalar::zero(self.backend), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn to_complex(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            backend: Backend::Complex,
            entries: self.entries.iter().map(|e| Scalar::Complex(e.to_complex())).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn pivot_row(&self, start: usize, col: usize) -> Option<usize> {
        match self.backend {
            Backend::Rational => (start..self.rows).find(|&r| !self.get(r, col).is_exact_zero()),
            Backend::Complex => {
                let (best, mag) = (start..self.rows)
                    .map(|r| (r, self.get(r, col).magnitude()))
                    .fold((start, -1.0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
                (mag > epsilon()).then_some(best)
            }
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = self.pivot_row(r, c) else {
                if self.backend == Backend::Complex {
                    for i in r..self.rows {
                        self.set(i, c, Scalar::zero(Backend::Complex));
                    }
                }
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inverse().expect("pivot is nonzero");
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            self.set(r, c, Scalar::one(self.backend));
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if factor.is_exact_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let pivot_entry = self.get(r, j);
                    if pivot_entry.is_exact_zero() {
                        continue;
                    }
                    let v = self.get(i, j) - &(&factor * pivot_entry);
                    self.set(i, j, v);
                }
                self.set(i, c, Scalar::zero(self.backend));
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn determinant(&self) -> Result<Scalar> {
        check_dim(self.rows, self.cols)?;
        let mut m = self.clone();
        let mut det = Scalar::one(self.backend);
        for c in 0..m.cols {
            let Some(p) = m.pivot_row(c, c) else {
                return Ok(Scalar::zero(self.backend));
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inverse()?;
            for i in c + 1..m.rows {
                let factor = m.get(i, c) * &inv;
                if factor.is_exact_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&factor * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        check_dim(self.rows, self.cols)?;
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n, self.backend);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one(self.backend));
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMap);
        }
        let mut inv = Matrix::zero(n, n, self.backend);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }
}

/// Canonical basis of the kernel of a linear system.
///
/// Each basis vector has a 1 in its own free coordinate and 0 in every
/// other free coordinate, so two solves of the same system always produce
/// the same basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionSpace {
    ambient: usize,
    backend: Backend,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl SolutionSpace {
    pub fn full(ambient: usize, backend: Backend) -> Self {
        nullspace(&Matrix::zero(0, ambient, backend))
    }

    pub fn trivial(ambient: usize, backend: Backend) -> Self {
        nullspace(&Matrix::identity(ambient, backend))
    }

    /// Canonical form of `span(vectors)`.
    pub fn from_span(ambient: usize, backend: Backend, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let rows = Matrix::from_rows(ambient, backend, vectors.to_vec())?;
        let annihilator = nullspace(&rows);
        Ok(nullspace(&annihilator.as_row_matrix()))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free_coordinates(&self) -> &[usize] {
        &self.free
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.iter().cloned().map(Vector::from_coords).collect()
    }

    /// Reshapes each basis element into an `n × n` map (see [`LinearMap::from_unknowns`]).
    pub fn basis_maps(&self, n: usize) -> Result<Vec<LinearMap>> {
        check_dim(n * n, self.ambient)?;
        self.basis.iter().map(|b| LinearMap::from_unknowns(n, b)).collect()
    }

    /// Matrix whose rows are the basis vectors.
    pub fn as_row_matrix(&self) -> Matrix {
        Matrix::from_rows(self.ambient, self.backend, self.basis.clone()).expect("basis rows have ambient length")
    }

    /// Linear combination `Σ coeffs[a] * basis[a]`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.backend); self.ambient];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            for (slot, x) in out.iter_mut().zip(b) {
                *slot = &*slot + &(c * x);
            }
        }
        out
    }

    /// Membership test; uses that a member is determined by its free coordinates.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let coeffs: Vec<Scalar> = self.free.iter().map(|&f| v[f].clone()).collect();
        let candidate = self.combine(&coeffs);
        candidate.iter().zip(v).all(|(a, b)| (a - b).is_zero())
    }

    /// Rows `w` with `w · v = 0` for exactly the members `v`.
    pub fn annihilator(&self) -> Matrix {
        nullspace(&self.as_row_matrix()).as_row_matrix()
    }

    pub fn intersection(&self, other: &SolutionSpace) -> Result<SolutionSpace> {
        check_dim(self.ambient, other.ambient)?;
        Ok(nullspace(&self.annihilator().stack(&other.annihilator())?))
    }

    pub fn is_subspace_of(&self, other: &SolutionSpace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn same_subspace(&self, other: &SolutionSpace) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other) && other.is_subspace_of(self)
    }
}

/// Canonical kernel basis of `m`. Panics if rank–nullity fails, which would
/// indicate an elimination bug.
pub fn nullspace(m: &Matrix) -> SolutionSpace {
    let mut r = m.clone();
    let pivots = r.rref();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<Vec<Scalar>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(m.backend); m.cols];
            v[f] = Scalar::one(m.backend);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            v
        })
        .collect();
    assert_eq!(pivots.len() + basis.len(), m.cols, "rank-nullity violated");
    SolutionSpace {
        ambient: m.cols,
        backend: m.backend,
        basis,
        pivots,
        free,
    }
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Solves `m x = rhs`. Returns a particular solution and the kernel, or
/// `None` when the system is inconsistent.
pub fn solve_affine(m: &Matrix, rhs: &[Scalar]) -> Result<Option<(Vec<Scalar>, SolutionSpace)>> {
    check_dim(m.rows, rhs.len())?;
    let backend = m.backend;
    let mut aug = Matrix::zero(m.rows, m.cols + 1, backend);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, m.cols, rhs[i].to_backend(backend.join(rhs[i].backend()))?);
    }
    let pivots = aug.rref();
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut particular = vec![Scalar::zero(backend); m.cols];
    for (row, &p) in pivots.iter().enumerate() {
        particular[p] = aug.get(row, m.cols).clone();
    }
    Ok(Some((particular, nullspace(m))))
}

/// Assembles the matrix of a linear condition on `unknowns` variables:
/// column `u` is `residual(u)`, the condition evaluated at the `u`-th
/// elementary unknown vector.
pub fn assemble<F>(unknowns: usize, backend: Backend, residual: F) -> Matrix
where
    F: Fn(usize) -> Vec<Scalar>,
{
    let columns: Vec<Vec<Scalar>> = (0..unknowns).map(residual).collect();
    let rows = columns.first().map_or(0, Vec::len);
    Matrix::from_columns(rows, backend, &columns).expect("residual length is constant")
}

/// Coefficients `c_0, …, c_n` of `det(t·I − m) = Σ c_i t^i` (Faddeev–LeVerrier).
pub fn characteristic_polynomial(m: &LinearMap) -> Vec<Scalar> {
    let n = m.dim();
    let b = m.backend();
    let mut coeffs = vec![Scalar::zero(b); n + 1];
    coeffs[n] = Scalar::one(b);
    let mut mk = LinearMap::zero(n, b);
    let id = LinearMap::identity(n, b);
    for k in 1..=n {
        mk = m.compose_unchecked(&mk).add(&id.scale(&coeffs[n - k + 1]));
        let amk = m.compose_unchecked(&mk);
        let trace = (0..n).fold(Scalar::zero(b), |acc, i| acc + amk.get(i, i));
        coeffs[n - k] = -(trace.checked_div(&Scalar::from_i64(b, k as i64)).expect("k > 0"));
    }
    coeffs
}

/// Rank from singular values above `eps * max(1, σ_max)`, computed in double precision.
pub fn singular_value_rank(m: &Matrix, eps: f64) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let dm = DMatrix::<Complex64>::from_fn(m.rows, m.cols, |i, j| m.get(i, j).to_complex());
    let sv = dm.singular_values();
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let threshold = eps * max.max(1.0);
    sv.iter().filter(|&&s| s > threshold).count()
}

pub fn invert_map(m: &LinearMap) -> Result<LinearMap> {
    Matrix::from_map(m).inverse()?.to_map()
}

pub fn map_rank(m: &LinearMap) -> usize {
    Matrix::from_map(m).rank()
}

pub fn map_determinant(m: &LinearMap) -> Scalar {
    Matrix::from_map(m).determinant().expect("square")
}
