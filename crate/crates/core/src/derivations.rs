//! α^k-derivations and their relatives.
//!
//! A linear map `D` is an α^k-derivation when `D∘α = α∘D` and, for both
//! products, `D(x•y) = D(x)•α^k(y) + α^k(x)•D(y)`. All conditions are
//! linear in the entries of `D`, so each space is the kernel of a matrix
//! assembled column by column: column `u` is the residual of the `u`-th
//! elementary map (unknown index `input * n + output`).

use crate::algebra::{HomDialgebra, LinearMap, Side, Vector};
use crate::axioms::{bilinear, AxiomReport, IdentityRecord, Violation};
use crate::centroids;
use crate::error::{check_dim, Error, Result};
use crate::scalar::{Backend, Scalar};
use crate::solver::{self, Matrix, SolutionSpace};

/// The elementary map for unknown index `u = input * n + output`.
pub(crate) fn elementary(n: usize, backend: Backend, u: usize) -> LinearMap {
    LinearMap::elementary(n, u % n, u / n, backend)
}

/// Solves a linear condition on maps: `residual(d)` must vanish.
pub(crate) fn map_space<F>(n: usize, backend: Backend, residual: F) -> SolutionSpace
where
    F: Fn(&LinearMap) -> Vec<Scalar>,
{
    let m = solver::assemble(n * n, backend, |u| residual(&elementary(n, backend, u)));
    solver::nullspace(&m)
}

pub(crate) fn commutator_residual(d: &LinearMap, alpha: &LinearMap) -> Vec<Scalar> {
    d.compose_unchecked(alpha).sub(&alpha.compose_unchecked(d)).entries().to_vec()
}

fn leibniz(a: &HomDialgebra, d: &LinearMap, ak: &LinearMap, side: Side, x: &Vector, y: &Vector) -> Vector {
    d.apply_unchecked(&a.mul(side, x, y))
        .sub(&a.mul(side, &d.apply_unchecked(x), &ak.apply_unchecked(y)))
        .sub(&a.mul(side, &ak.apply_unchecked(x), &d.apply_unchecked(y)))
}

/// Flattened residual of the derivation conditions: `Dα − αD` (n² entries)
/// followed by the Leibniz defects on every basis pair for `⊣`, then `⊢`.
pub fn derivation_residual(a: &HomDialgebra, d: &LinearMap, k: u32) -> Vec<Scalar> {
    let n = a.dim();
    let ak = a.alpha().pow(k);
    let mut out = commutator_residual(d, a.alpha());
    for side in Side::BOTH {
        for i in 0..n {
            for j in 0..n {
                out.extend(leibniz(a, d, &ak, side, &a.basis(i), &a.basis(j)).into_coords());
            }
        }
    }
    out
}

/// Basis products and products with one α^k-twisted factor, for both sides:
/// `plain[s][i·n+j] = e_i ∘ e_j`, `left[s][o·n+j] = e_o ∘ α^k(e_j)`,
/// `right[s][i·n+o] = α^k(e_i) ∘ e_o`. With these, the residual of an
/// elementary map is a handful of lookups.
pub(crate) struct TwistedProducts {
    pub(crate) plain: [Vec<Vector>; 2],
    pub(crate) left: [Vec<Vector>; 2],
    pub(crate) right: [Vec<Vector>; 2],
}

impl TwistedProducts {
    pub(crate) fn new(a: &HomDialgebra, ak: &LinearMap) -> Self {
        let n = a.dim();
        let e: Vec<Vector> = (0..n).map(|i| a.basis(i)).collect();
        let twisted: Vec<Vector> = e.iter().map(|x| ak.apply_unchecked(x)).collect();
        let table = |f: &dyn Fn(Side, usize, usize) -> Vector| Side::BOTH.map(|s| (0..n * n).map(|ij| f(s, ij / n, ij % n)).collect());
        TwistedProducts {
            plain: table(&|s, i, j| a.table(s).basis_product(i, j)),
            left: table(&|s, o, j| a.mul(s, &e[o], &twisted[j])),
            right: table(&|s, i, o| a.mul(s, &twisted[i], &e[o])),
        }
    }
}

/// `Der_{α^k}(A)` with its canonical basis.
pub fn derivation_space(a: &HomDialgebra, k: u32) -> SolutionSpace {
    let (n, b) = (a.dim(), a.backend());
    let tp = TwistedProducts::new(a, &a.alpha().pow(k));
    // Same columns as `derivation_residual` on elementary maps.
    let m = solver::assemble(n * n, b, |u| {
        let (input, output) = (u / n, u % n);
        let mut col = commutator_residual(&elementary(n, b, u), a.alpha());
        for s in 0..2 {
            for i in 0..n {
                for j in 0..n {
                    let mut v = Vector::basis(n, output, b).scale(tp.plain[s][i * n + j].get(input));
                    if i == input {
                        v = v.sub(&tp.left[s][output * n + j]);
                    }
                    if j == input {
                        v = v.sub(&tp.right[s][i * n + output]);
                    }
                    col.extend(v.into_coords());
                }
            }
        }
        col
    });
    solver::nullspace(&m)
}

pub fn derivation_basis(a: &HomDialgebra, k: u32) -> Vec<LinearMap> {
    derivation_space(a, k).basis_maps(a.dim()).expect("ambient is n²")
}

/// Pointwise check of the derivation conditions with witnesses.
pub fn is_derivation(a: &HomDialgebra, d: &LinearMap, k: u32) -> Result<AxiomReport> {
    check_dim(a.dim(), d.dim())?;
    let n = a.dim();
    let ak = a.alpha().pow(k);
    let commute: Vec<Violation> = (0..n)
        .filter_map(|j| {
            let e = a.basis(j);
            let r = d.apply_unchecked(&a.alpha_of(&e)).sub(&a.alpha_of(&d.apply_unchecked(&e)));
            (!r.is_zero()).then(|| Violation { at: vec![j], residual: r })
        })
        .collect();
    let mut records = vec![IdentityRecord::new(1, "D∘α = α∘D", commute)];
    for (idx, side) in Side::BOTH.into_iter().enumerate() {
        let s = side.symbol();
        let v = bilinear(n, a.backend(), |x, y| leibniz(a, d, &ak, side, x, y));
        records.push(IdentityRecord::new(idx + 2, format!("D(x{s}y) = D(x){s}α^{k}(y) + α^{k}(x){s}D(y)"), v));
    }
    Ok(AxiomReport::new(format!("{} (α^{k}-derivation)", a.name()), records))
}

/// `α(f) = f`.
pub fn alpha_fixed_points(a: &HomDialgebra) -> SolutionSpace {
    let n = a.dim();
    let shifted = a.alpha().sub(&LinearMap::identity(n, a.backend()));
    solver::nullspace(&Matrix::from_map(&shifted))
}

/// The map `g ↦ α^{k−1}(g) • f` for an α-fixed `f`.
pub fn inner_map(a: &HomDialgebra, f: &Vector, k: u32, side: Side) -> Result<LinearMap> {
    check_dim(a.dim(), f.dim())?;
    if k == 0 {
        return Err(Error::precondition("inner maps need k ≥ 1"));
    }
    if !a.alpha_of(f).sub(f).is_zero() {
        return Err(Error::NotFixedPoint);
    }
    let ak1 = a.alpha().pow(k - 1);
    let images: Vec<Vector> = (0..a.dim()).map(|j| a.mul(side, &ak1.apply_unchecked(&a.basis(j)), f)).collect();
    LinearMap::from_images(&images).to_backend(a.backend())
}

/// Checks `[D, D'] ∈ Der_{α^{k+s}}` after confirming both inputs are derivations.
pub fn bracket_check(a: &HomDialgebra, d: &LinearMap, k: u32, d2: &LinearMap, s: u32) -> Result<AxiomReport> {
    if !is_derivation(a, d, k)?.pass() {
        return Err(Error::precondition(format!("first map is not an α^{k}-derivation")));
    }
    if !is_derivation(a, d2, s)?.pass() {
        return Err(Error::precondition(format!("second map is not an α^{s}-derivation")));
    }
    is_derivation(a, &d.commutator(d2), k + s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleKind {
    /// `D((x•y)•z)` expands over all triples.
    Associative,
    /// The same expansion with the third argument equal to the first.
    Jordan,
}

/// `D((x•y)•z) − (D(x)•α^k y)•α^k z − (α^k x•D(y))•α^k z − (α^k x•α^k y)•D(z)`.
fn triple_defect(a: &HomDialgebra, d: &LinearMap, ak: &LinearMap, side: Side, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    let m = |p: &Vector, q: &Vector| a.mul(side, p, q);
    let (kx, ky, kz) = (ak.apply_unchecked(x), ak.apply_unchecked(y), ak.apply_unchecked(z));
    d.apply_unchecked(&m(&m(x, y), z))
        .sub(&m(&m(&d.apply_unchecked(x), &ky), &kz))
        .sub(&m(&m(&kx, &d.apply_unchecked(y)), &kz))
        .sub(&m(&m(&kx, &ky), &d.apply_unchecked(z)))
}

pub fn triple_derivation_residual(a: &HomDialgebra, d: &LinearMap, k: u32, kind: TripleKind, side: Side) -> Vec<Scalar> {
    let n = a.dim();
    let ak = a.alpha().pow(k);
    let mut out = commutator_residual(d, a.alpha());
    for i in 0..n {
        for j in 0..n {
            let third: Vec<usize> = match kind {
                TripleKind::Associative => (0..n).collect(),
                TripleKind::Jordan => vec![i],
            };
            for l in third {
                out.extend(triple_defect(a, d, &ak, side, &a.basis(i), &a.basis(j), &a.basis(l)).into_coords());
            }
        }
    }
    out
}

/// Associative or Jordan triple derivations for one product.
///
/// The Jordan conditions are imposed on basis vectors only (`x = e_i`),
/// which makes the space a superset of the associative one by construction.
pub fn triple_derivation_space(a: &HomDialgebra, k: u32, kind: TripleKind, side: Side) -> SolutionSpace {
    map_space(a.dim(), a.backend(), |d| triple_derivation_residual(a, d, k, kind, side))
}

/// The cyclic sums `(S_A, S_B)` for `⊣`:
/// `S_A = Σ_cyc α((D x⊣α^k y)⊣α^k z + (α^k x⊣D y)⊣α^k z + (α^k x⊣α^k y)⊣D z)` and
/// `S_B = Σ_cyc (α^k x⊣α^k y)⊣(D−δ)(z)`.
pub fn cyclic_sum_check(
    a: &HomDialgebra,
    d: &LinearMap,
    delta: &LinearMap,
    k: u32,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<(Vector, Vector)> {
    let n = a.dim();
    for dim in [d.dim(), delta.dim(), x.dim(), y.dim(), z.dim()] {
        check_dim(n, dim)?;
    }
    let ak = a.alpha().pow(k);
    let m = |p: &Vector, q: &Vector| a.mul(Side::Left, p, q);
    let diff = d.sub(delta);
    let expansion = |x: &Vector, y: &Vector, z: &Vector| {
        let (kx, ky, kz) = (ak.apply_unchecked(x), ak.apply_unchecked(y), ak.apply_unchecked(z));
        let inner = m(&m(&d.apply_unchecked(x), &ky), &kz)
            .add(&m(&m(&kx, &d.apply_unchecked(y)), &kz))
            .add(&m(&m(&kx, &ky), &d.apply_unchecked(z)));
        a.alpha_of(&inner)
    };
    let second = |x: &Vector, y: &Vector, z: &Vector| m(&m(&ak.apply_unchecked(x), &ak.apply_unchecked(y)), &diff.apply_unchecked(z));
    let s_a = expansion(x, y, z).add(&expansion(y, z, x)).add(&expansion(z, x, y));
    let s_b = second(x, y, z).add(&second(y, z, x)).add(&second(z, x, y));
    Ok((s_a, s_b))
}

/// Spanning set of `A²`: all basis products of both sides.
pub fn square_span(a: &HomDialgebra) -> SolutionSpace {
    let n = a.dim();
    let mut products = Vec::new();
    for side in Side::BOTH {
        for i in 0..n {
            for j in 0..n {
                products.push(a.table(side).basis_product(i, j).into_coords());
            }
        }
    }
    SolutionSpace::from_span(n, a.backend(), &products).expect("products have length n")
}

/// Central derivations: `ψ(A) ⊆ Z(A)`, `ψ(A²) = 0` and `ψα = αψ`.
pub fn central_derivation_space(a: &HomDialgebra) -> SolutionSpace {
    let n = a.dim();
    let b = a.backend();
    let center_constraints = centroids::center(a).annihilator();
    let square = square_span(a);
    map_space(n, b, |psi| central_residual(a, psi, &center_constraints, &square))
}

fn central_residual(a: &HomDialgebra, psi: &LinearMap, center_constraints: &Matrix, square: &SolutionSpace) -> Vec<Scalar> {
    let n = a.dim();
    let mut out = commutator_residual(psi, a.alpha());
    for j in 0..n {
        out.extend(center_constraints.mul_vec(psi.column(j).coords()).expect("length n"));
    }
    for v in square.basis() {
        out.extend(psi.apply_unchecked(&Vector::from_coords(v.clone())).into_coords());
    }
    out
}

/// Membership in the central-derivation space, pointwise.
pub fn is_central_derivation(a: &HomDialgebra, psi: &LinearMap) -> Result<bool> {
    check_dim(a.dim(), psi.dim())?;
    let center_constraints = centroids::center(a).annihilator();
    Ok(central_residual(a, psi, &center_constraints, &square_span(a)).iter().all(Scalar::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MultTable;

    const B: Backend = Backend::Rational;

    #[test]
    fn lookup_assembly_matches_pointwise_residuals() {
        for e in crate::catalog::entries() {
            let inst = e.instantiate_default().unwrap();
            let a = inst.algebra();
            for k in 0..3 {
                let slow = map_space(a.dim(), a.backend(), |d| derivation_residual(a, d, k));
                assert!(slow.same_subspace(&derivation_space(a, k)), "{} k={k}", e.id());
            }
            let slow = map_space(a.dim(), a.backend(), |p| centroids::centroid_residual(a, p));
            assert!(slow.same_subspace(&centroids::linear_centroid_space(a)), "{}", e.id());
        }
    }

    /// Two-dimensional example: ⊣ = ⊢ with e1e2 = e1, e2e2 = e1+e2; α(e1) = e1, α(e2) = e1+e2.
    fn sample() -> HomDialgebra {
        let mut t = MultTable::zero(2, B);
        t.set_product(0, 1, &Vector::from_i64(B, &[1, 0]));
        t.set_product(1, 1, &Vector::from_i64(B, &[1, 1]));
        let alpha = LinearMap::from_i64_rows(B, &[&[1, 1], &[0, 1]]);
        HomDialgebra::new("s", t.clone(), t, alpha).unwrap()
    }

    #[test]
    fn sample_has_one_dimensional_derivations() {
        let a = sample();
        let basis = derivation_basis(&a, 1);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], LinearMap::from_i64_rows(B, &[&[0, 1], &[0, 0]]));
        assert!(is_derivation(&a, &basis[0], 1).unwrap().pass());
    }

    #[test]
    fn zero_algebra_has_every_map() {
        let a = HomDialgebra::zero_products("z", LinearMap::identity(3, B));
        assert_eq!(derivation_space(&a, 1).dim(), 9);
        assert_eq!(central_derivation_space(&a).dim(), 9);
        for kind in [TripleKind::Associative, TripleKind::Jordan] {
            assert_eq!(triple_derivation_space(&a, 1, kind, Side::Left).dim(), 9);
        }
    }

    #[test]
    fn fixed_points_and_inner_maps() {
        let a = sample();
        let fixed = alpha_fixed_points(&a);
        assert_eq!(fixed.dim(), 1);
        assert!(fixed.contains(Vector::from_i64(B, &[1, 0]).coords()));
        let f = Vector::from_i64(B, &[1, 0]);
        assert!(inner_map(&a, &f, 1, Side::Left).unwrap().is_zero());
        let not_fixed = Vector::from_i64(B, &[0, 1]);
        assert_eq!(inner_map(&a, &not_fixed, 1, Side::Left), Err(Error::NotFixedPoint));
        assert_eq!(Error::NotFixedPoint.to_string(), "f is not an α-fixed point");
    }

    #[test]
    fn bracket_requires_derivations() {
        let a = sample();
        let d = derivation_basis(&a, 1).remove(0);
        assert!(bracket_check(&a, &d, 1, &d, 1).unwrap().pass());
        let id = LinearMap::identity(2, B);
        assert!(matches!(bracket_check(&a, &id, 1, &d, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn associative_triple_solutions_are_jordan() {
        let a = sample();
        for side in Side::BOTH {
            let assoc = triple_derivation_space(&a, 1, TripleKind::Associative, side);
            let jordan = triple_derivation_space(&a, 1, TripleKind::Jordan, side);
            assert!(assoc.is_subspace_of(&jordan));
        }
    }

    #[test]
    fn cyclic_sums_vanish_when_d_equals_delta() {
        let a = sample();
        let d = derivation_basis(&a, 1).remove(0);
        let e2 = a.basis(1);
        let (_, s_b) = cyclic_sum_check(&a, &d, &d, 1, &e2, &e2, &e2).unwrap();
        assert!(s_b.is_zero());
    }
}
