//! Base-change invariants and isomorphism testing.
//!
//! A [`Fingerprint`] collects ranks and dimensions that are unchanged by
//! [`transport`](crate::constructions::transport); two algebras whose
//! fingerprints differ cannot be isomorphic. When fingerprints agree,
//! [`iso_search`] looks for an explicit isomorphism numerically and only
//! reports success after the candidate passes the homomorphism checker.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use num::complex::Complex64;
use num::{BigInt, BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{HomDialgebra, LinearMap, Side};
use crate::centroids;
use crate::constructions;
use crate::derivations;
use crate::scalar::{epsilon, Backend, Scalar};
use crate::solver::{self, SolutionSpace};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub alpha_rank: usize,
    /// Coefficients `c_0, …, c_n` of `det(t − α)`.
    pub alpha_charpoly: Vec<Scalar>,
    pub left_square_dim: usize,
    pub right_square_dim: usize,
    pub square_dim: usize,
    pub center_dim: usize,
    pub fixed_dim: usize,
    pub derivation_dim: usize,
    pub linear_centroid_dim: usize,
    pub central_derivation_dim: usize,
}

fn product_span(a: &HomDialgebra, sides: &[Side]) -> SolutionSpace {
    let n = a.dim();
    let mut vs = Vec::new();
    for &side in sides {
        for i in 0..n {
            for j in 0..n {
                vs.push(a.table(side).basis_product(i, j).into_coords());
            }
        }
    }
    SolutionSpace::from_span(n, a.backend(), &vs).expect("products have length n")
}

pub fn fingerprint(a: &HomDialgebra) -> Fingerprint {
    Fingerprint {
        dim: a.dim(),
        alpha_rank: solver::map_rank(a.alpha()),
        alpha_charpoly: solver::characteristic_polynomial(a.alpha()),
        left_square_dim: product_span(a, &[Side::Left]).dim(),
        right_square_dim: product_span(a, &[Side::Right]).dim(),
        square_dim: product_span(a, &Side::BOTH).dim(),
        center_dim: centroids::center(a).dim(),
        fixed_dim: derivations::alpha_fixed_points(a).dim(),
        derivation_dim: derivations::derivation_space(a, 1).dim(),
        linear_centroid_dim: centroids::linear_centroid_space(a).dim(),
        central_derivation_dim: derivations::central_derivation_space(a).dim(),
    }
}

impl Fingerprint {
    /// Named fields as display strings, in a fixed order.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        let poly: Vec<String> = self.alpha_charpoly.iter().map(ToString::to_string).collect();
        vec![
            ("dim", self.dim.to_string()),
            ("rank α", self.alpha_rank.to_string()),
            ("char poly α", format!("[{}]", poly.join(", "))),
            ("dim A⊣A", self.left_square_dim.to_string()),
            ("dim A⊢A", self.right_square_dim.to_string()),
            ("dim A²", self.square_dim.to_string()),
            ("dim center", self.center_dim.to_string()),
            ("dim α-fixed", self.fixed_dim.to_string()),
            ("dim Der_α", self.derivation_dim.to_string()),
            ("dim linear centroid", self.linear_centroid_dim.to_string()),
            ("dim central derivations", self.central_derivation_dim.to_string()),
        ]
    }

    /// First field in which the two fingerprints differ; characteristic
    /// polynomials are compared within tolerance on the complex backend.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<(&'static str, String, String)> {
        let poly_equal = self.alpha_charpoly.len() == other.alpha_charpoly.len()
            && self.alpha_charpoly.iter().zip(&other.alpha_charpoly).all(|(x, y)| (x - y).is_zero());
        self.fields()
            .into_iter()
            .zip(other.fields())
            .find(|((name, x), (_, y))| if *name == "char poly α" { !poly_equal } else { x != y })
            .map(|((name, x), (_, y))| (name, x, y))
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, value) in self.fields() {
            writeln!(f, "{name:>24}: {value}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CompareVerdict {
    NonIsomorphic { field: String, left: String, right: String },
    Isomorphic { phi: LinearMap, residual: f64 },
    Unknown { reason: String },
}

impl CompareVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            CompareVerdict::NonIsomorphic { .. } => "NON_ISOMORPHIC",
            CompareVerdict::Isomorphic { .. } => "ISOMORPHIC",
            CompareVerdict::Unknown { .. } => "UNKNOWN",
        }
    }
}

impl fmt::Display for CompareVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompareVerdict::NonIsomorphic { field, left, right } => write!(f, "NON_ISOMORPHIC ({field}: {left} vs {right})"),
            CompareVerdict::Isomorphic { phi, residual } => write!(f, "ISOMORPHIC (residual {residual:e})\n{phi}"),
            CompareVerdict::Unknown { reason } => write!(f, "UNKNOWN ({reason})"),
        }
    }
}

impl Serialize for CompareVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("verdict", self.name())?;
        match self {
            CompareVerdict::NonIsomorphic { field, left, right } => {
                m.serialize_entry("field", field)?;
                m.serialize_entry("left", left)?;
                m.serialize_entry("right", right)?;
            }
            CompareVerdict::Isomorphic { phi, residual } => {
                let rows: Vec<Vec<String>> = phi.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
                m.serialize_entry("phi", &rows)?;
                m.serialize_entry("residual", residual)?;
            }
            CompareVerdict::Unknown { reason } => m.serialize_entry("reason", reason)?,
        }
        m.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Number of random restarts.
    pub budget: usize,
    pub seed: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: 200, seed: 0 }
    }
}

/// Fingerprint comparison, then (optionally) a numeric isomorphism search.
pub fn compare(a: &HomDialgebra, b: &HomDialgebra, search: Option<SearchOptions>) -> CompareVerdict {
    if a.dim() != b.dim() {
        return CompareVerdict::NonIsomorphic {
            field: "dim".into(),
            left: a.dim().to_string(),
            right: b.dim().to_string(),
        };
    }
    let (fa, fb) = (fingerprint(a), fingerprint(b));
    if let Some((field, left, right)) = fa.first_difference(&fb) {
        return CompareVerdict::NonIsomorphic {
            field: field.into(),
            left,
            right,
        };
    }
    let id = LinearMap::identity(a.dim(), a.backend().join(b.backend()));
    if let Ok(r) = constructions::is_homomorphism(a, b, &id) {
        if r.pass() {
            return CompareVerdict::Isomorphic { phi: id, residual: 0.0 };
        }
    }
    match search {
        Some(opts) => iso_search(a, b, opts),
        None => CompareVerdict::Unknown {
            reason: "fingerprints agree; no search requested".into(),
        },
    }
}

/// Residual and Jacobian of the isomorphism equations at `(Φ, Ψ)`, where `Φ`
/// ranges over the (exactly computed) maps with `Φα = α'Φ`. Restricting to
/// that subspace keeps the search away from the zero map, which satisfies the
/// product equations and otherwise attracts most starting points.
struct IsoProblem {
    n: usize,
    ga: [Vec<Complex64>; 2],
    gb: [Vec<Complex64>; 2],
    alpha_a: Vec<Complex64>,
    alpha_b: Vec<Complex64>,
    /// Columns span the intertwining maps, as row-major `n × n` matrices.
    basis: DMatrix<Complex64>,
}

impl IsoProblem {
    fn new(a: &HomDialgebra, b: &HomDialgebra) -> Self {
        let c = |v: &[Scalar]| v.iter().map(Scalar::to_complex).collect::<Vec<_>>();
        let n = a.dim();
        let maps = intertwiners(a, b);
        let basis = DMatrix::from_fn(n * n, maps.len(), |rc, s| maps[s].get(rc / n, rc % n).to_complex());
        IsoProblem {
            n,
            ga: [c(a.left().entries()), c(a.right().entries())],
            gb: [c(b.left().entries()), c(b.right().entries())],
            alpha_a: c(a.alpha().entries()),
            alpha_b: c(b.alpha().entries()),
            basis,
        }
    }

    /// Row-major entries of `Φ` followed by those of `Ψ`.
    fn expand(&self, x: &[Complex64]) -> Vec<Complex64> {
        let m = self.basis.ncols();
        let t = DVector::from_column_slice(&x[..m]);
        let phi = &self.basis * t;
        phi.iter().chain(&x[m..]).copied().collect()
    }

    fn evaluate(&self, x: &[Complex64]) -> (DVector<Complex64>, DMatrix<Complex64>) {
        let nn = self.n * self.n;
        let (res, full) = self.evaluate_full(&self.expand(x));
        let m = self.basis.ncols();
        let mut jac = DMatrix::zeros(res.len(), m + nn);
        jac.columns_mut(0, m).copy_from(&(full.columns(0, nn) * &self.basis));
        jac.columns_mut(m, nn).copy_from(&full.columns(nn, nn));
        (res, jac)
    }

    fn g(t: &[Complex64], n: usize, i: usize, j: usize, k: usize) -> Complex64 {
        t[(i * n + j) * n + k]
    }

    fn phi_matrix(&self, x: &[Complex64]) -> DMatrix<Complex64> {
        let n = self.n;
        let full = self.expand(x);
        DMatrix::from_fn(n, n, |r, c| full[r * n + c])
    }

    /// Residual vector and Jacobian with respect to the entries of `Φ` and `Ψ`.
    /// `Ψ` must be a homomorphism in the opposite direction as well, so that
    /// neither map can drift to zero while the other blows up.
    fn evaluate_full(&self, x: &[Complex64]) -> (DVector<Complex64>, DMatrix<Complex64>) {
        let n = self.n;
        let nn = n * n;
        let eqs = 4 * n * nn + 3 * nn;
        let mut res = DVector::zeros(eqs);
        let mut jac = DMatrix::zeros(eqs, 2 * nn);
        let mut row = 0;
        for (off, src, dst) in [(0, &self.ga, &self.gb), (nn, &self.gb, &self.ga)] {
            let f = |r: usize, c: usize| x[off + r * n + c];
            for side in 0..2 {
                let (ga, gb) = (&src[side], &dst[side]);
                for i in 0..n {
                    for j in 0..n {
                        for r in 0..n {
                            // Φ(e_i • e_j)_r − (Φe_i •' Φe_j)_r
                            let mut v = Complex64::zero();
                            for p in 0..n {
                                let g = Self::g(ga, n, i, j, p);
                                if g != Complex64::zero() {
                                    v += g * f(r, p);
                                    jac[(row, off + r * n + p)] += g;
                                }
                            }
                            for p in 0..n {
                                for q in 0..n {
                                    let h = Self::g(gb, n, p, q, r);
                                    if h == Complex64::zero() {
                                        continue;
                                    }
                                    let (pi, qj) = (f(p, i), f(q, j));
                                    v -= pi * qj * h;
                                    jac[(row, off + p * n + i)] -= qj * h;
                                    jac[(row, off + q * n + j)] -= pi * h;
                                }
                            }
                            res[row] = v;
                            row += 1;
                        }
                    }
                }
            }
        }
        for (off, aa, ab) in [(0, &self.alpha_a, &self.alpha_b), (nn, &self.alpha_b, &self.alpha_a)] {
            for r in 0..n {
                for c in 0..n {
                    // (Φα − α'Φ)_rc
                    let mut v = Complex64::zero();
                    for p in 0..n {
                        let a = aa[p * n + c];
                        v += x[off + r * n + p] * a;
                        jac[(row, off + r * n + p)] += a;
                        let b = ab[r * n + p];
                        v -= b * x[off + p * n + c];
                        jac[(row, off + p * n + c)] -= b;
                    }
                    res[row] = v;
                    row += 1;
                }
            }
        }
        // ΦΨ − I
        for r in 0..n {
            for c in 0..n {
                let mut v = if r == c { -Complex64::new(1.0, 0.0) } else { Complex64::zero() };
                for p in 0..n {
                    let (f, g) = (x[r * n + p], x[nn + p * n + c]);
                    v += f * g;
                    jac[(row, r * n + p)] += g;
                    jac[(row, nn + p * n + c)] += f;
                }
                res[row] = v;
                row += 1;
            }
        }
        (res, jac)
    }
}

/// Basis of `{Φ : Φα = α'Φ}`, computed exactly over the joined backend.
fn intertwiners(a: &HomDialgebra, b: &HomDialgebra) -> Vec<LinearMap> {
    let n = a.dim();
    let backend = a.backend().join(b.backend());
    let (aa, ab) = match (a.alpha().to_backend(backend), b.alpha().to_backend(backend)) {
        (Ok(aa), Ok(ab)) => (aa, ab),
        _ => return Vec::new(),
    };
    let m = solver::assemble(n * n, backend, |u| {
        let phi = LinearMap::elementary(n, u % n, u / n, backend);
        phi.compose_unchecked(&aa).sub(&ab.compose_unchecked(&phi)).entries().to_vec()
    });
    solver::nullspace(&m).basis_maps(n).unwrap_or_default()
}

fn max_abs(v: &DVector<Complex64>) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Levenberg–Marquardt from one starting point; returns the final unknowns and residual.
fn levenberg_marquardt(p: &IsoProblem, mut x: Vec<Complex64>, iterations: usize) -> (Vec<Complex64>, f64) {
    let mut lambda = 1e-3;
    let (mut res, mut jac) = p.evaluate(&x);
    let mut cost = res.norm_squared();
    for _ in 0..iterations {
        if max_abs(&res) < 1e-13 {
            break;
        }
        let jh = jac.adjoint();
        let jtj = &jh * &jac;
        let grad = &jh * &res;
        let mut improved = false;
        for _ in 0..12 {
            let mut lhs = jtj.clone();
            for d in 0..lhs.nrows() {
                let diag = lhs[(d, d)].re.max(1e-12);
                lhs[(d, d)] += Complex64::new(lambda * diag, 0.0);
            }
            let Some(step) = lhs.lu().solve(&(-&grad)) else {
                lambda *= 10.0;
                continue;
            };
            let candidate: Vec<Complex64> = x.iter().zip(step.iter()).map(|(a, s)| a + s).collect();
            let (r2, j2) = p.evaluate(&candidate);
            let c2 = r2.norm_squared();
            if c2.is_finite() && c2 < cost {
                x = candidate;
                res = r2;
                jac = j2;
                cost = c2;
                lambda = (lambda / 10.0).max(1e-15);
                improved = true;
                break;
            }
            lambda *= 10.0;
        }
        if !improved {
            break;
        }
    }
    let r = max_abs(&res);
    (x, r)
}

/// Continued-fraction approximation with denominator at most `max_den`.
fn rationalize(x: f64, max_den: i64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1, mut k0, mut k1) = (0i64, 1i64, 1i64, 0i64);
    let mut v = x;
    for _ in 0..40 {
        let a = v.floor();
        if a.abs() > 1e12 {
            break;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() < 1e-9 {
            return Some(BigRational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = v - a as f64;
        if frac.abs() < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    (k1 != 0 && (x - h1 as f64 / k1 as f64).abs() < 1e-9).then(|| BigRational::new(BigInt::from(h1), BigInt::from(k1)))
}

/// Exact candidate from a numeric solution, when every entry is a small-denominator rational.
fn exact_candidate(x: &[Complex64], n: usize) -> Option<LinearMap> {
    let rows: Option<Vec<Vec<Scalar>>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let z = x[r * n + c];
                    (z.im.abs() < 1e-9).then_some(())?;
                    rationalize(z.re, 1000).map(Scalar::Rational)
                })
                .collect()
        })
        .collect();
    LinearMap::from_rows(rows?).ok()
}

/// Numeric search for `Φ` with `Φ∘⊣ = ⊣'∘(Φ⊗Φ)`, `Φ∘⊢ = ⊢'∘(Φ⊗Φ)`, `Φα = α'Φ`
/// and invertibility (via a second unknown matrix `Ψ` with `ΦΨ = I`).
pub fn iso_search(a: &HomDialgebra, b: &HomDialgebra, opts: SearchOptions) -> CompareVerdict {
    if a.dim() != b.dim() {
        return CompareVerdict::Unknown { reason: "dimensions differ".into() };
    }
    if opts.budget == 0 {
        return CompareVerdict::Unknown { reason: "search budget is 0".into() };
    }
    let n = a.dim();
    let problem = IsoProblem::new(a, b);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let m = problem.basis.ncols();
    if m == 0 {
        return CompareVerdict::Unknown { reason: "no nonzero map intertwines the twisting maps".into() };
    }
    let mut best = f64::INFINITY;
    for _ in 0..opts.budget {
        // Start magnitudes vary over restarts: spurious minima sit near
        // rank-deficient Φ and capture most small starting points.
        let scale = 2f64.powf(rng.gen_range(-2.0..3.0));
        let mut x: Vec<Complex64> = (0..m)
            .map(|_| Complex64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale)))
            .collect();
        let Some(inv) = problem.phi_matrix(&x).try_inverse() else {
            continue;
        };
        x.extend(inv.transpose().iter());
        let (x, residual) = levenberg_marquardt(&problem, x, 500);
        best = best.min(residual);
        let det = problem.phi_matrix(&x).determinant();
        if residual > 1e-9 || det.norm() < 1e-6 {
            continue;
        }
        if let Some(verdict) = verify_candidate(a, b, &problem.expand(&x), n, residual) {
            return verdict;
        }
    }
    CompareVerdict::Unknown {
        reason: format!("no isomorphism found in {} restarts (best residual {best:e})", opts.budget),
    }
}

fn verify_candidate(a: &HomDialgebra, b: &HomDialgebra, x: &[Complex64], n: usize, residual: f64) -> Option<CompareVerdict> {
    let rational = a.backend() == Backend::Rational && b.backend() == Backend::Rational;
    if rational {
        if let Some(phi) = exact_candidate(x, n) {
            if solver::map_rank(&phi) == n && constructions::is_homomorphism(a, b, &phi).ok()?.pass() {
                return Some(CompareVerdict::Isomorphic { phi, residual: 0.0 });
            }
        }
    }
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|r| (0..n).map(|c| Scalar::Complex(x[r * n + c])).collect())
        .collect();
    let phi = LinearMap::from_rows(rows).ok()?;
    let ac = a.to_backend(Backend::Complex).ok()?;
    let bc = b.to_backend(Backend::Complex).ok()?;
    let ok = constructions::is_homomorphism(&ac, &bc, &phi).ok()?.pass() && residual <= epsilon().max(1e-9);
    ok.then_some(CompareVerdict::Isomorphic { phi, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{MultTable, Vector};

    const B: Backend = Backend::Rational;

    fn sample() -> HomDialgebra {
        let mut t = MultTable::zero(2, B);
        t.set_product(0, 1, &Vector::from_i64(B, &[1, 0]));
        t.set_product(1, 1, &Vector::from_i64(B, &[1, 1]));
        HomDialgebra::new("s", t.clone(), t, LinearMap::from_i64_rows(B, &[&[1, 1], &[0, 1]])).unwrap()
    }

    #[test]
    fn fingerprint_of_sample() {
        let f = fingerprint(&sample());
        assert_eq!(f.alpha_rank, 2);
        assert_eq!(f.derivation_dim, 1);
        assert_eq!(f.fixed_dim, 1);
        let poly: Vec<String> = f.alpha_charpoly.iter().map(ToString::to_string).collect();
        assert_eq!(poly, ["1", "-2", "1"]);
    }

    #[test]
    fn rationalize_recovers_small_fractions() {
        assert_eq!(rationalize(0.5, 1000), Some(BigRational::new(1.into(), 2.into())));
        assert_eq!(rationalize(-2.0 / 3.0, 1000), Some(BigRational::new((-2).into(), 3.into())));
        assert_eq!(rationalize(3.0, 1000), Some(BigRational::new(3.into(), 1.into())));
        assert_eq!(rationalize(std::f64::consts::PI, 100), None);
    }

    #[test]
    fn search_recovers_transport() {
        let a = sample();
        let phi = LinearMap::from_i64_rows(B, &[&[1, 2], &[1, 1]]);
        let t = constructions::transport(&a, &phi).unwrap();
        let v = iso_search(&a, &t, SearchOptions { budget: 50, seed: 7 });
        let CompareVerdict::Isomorphic { phi: found, .. } = v else {
            panic!("expected an isomorphism, got {v}");
        };
        let (ac, tc) = (a.to_backend(Backend::Complex).unwrap(), t.to_backend(Backend::Complex).unwrap());
        let found = found.to_backend(Backend::Complex).unwrap();
        assert!(constructions::is_homomorphism(&ac, &tc, &found).unwrap().pass());
        assert_eq!(iso_search(&a, &t, SearchOptions { budget: 0, seed: 7 }).name(), "UNKNOWN");
    }

    #[test]
    fn compare_with_itself_is_identity() {
        let a = sample();
        assert!(matches!(compare(&a, &a, None), CompareVerdict::Isomorphic { residual, .. } if residual == 0.0));
    }
}
