//! Centroids, centralizers and the center.
//!
//! A centroid element is a linear map `ψ` with `ψα = αψ` and
//! `ψ(x)•α(y) = ψ(x)•ψ(y) = α(x)•ψ(y)` for both products. The outer
//! equality is linear in `ψ` and is solved exactly; the middle one is
//! quadratic, so it is expanded over the linear solution space and
//! reported as explicit polynomial constraints on the coordinates `t`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{HomDialgebra, LinearMap, Side, Vector};
use crate::axioms::{AxiomReport, IdentityRecord};
use crate::derivations;
use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;
use crate::solver::{self, SolutionSpace};

/// Which part of the centroid definition to impose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CentroidVariant {
    /// Commutation with α and the outer equality only.
    #[default]
    Linear,
    /// Additionally the middle equality `ψ(x)•ψ(y) = ψ(x)•α(y)`.
    Full,
}

impl std::str::FromStr for CentroidVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(CentroidVariant::Linear),
            "full" => Ok(CentroidVariant::Full),
            other => Err(Error::precondition(format!("unknown centroid variant `{other}`"))),
        }
    }
}

/// `ψα − αψ`, then `ψ(e_i)•α(e_j) − α(e_i)•ψ(e_j)` for `⊣` and `⊢`.
pub fn centroid_residual(a: &HomDialgebra, psi: &LinearMap) -> Vec<Scalar> {
    let n = a.dim();
    let alpha = a.alpha();
    let mut out = psi.compose_unchecked(alpha).sub(&alpha.compose_unchecked(psi)).entries().to_vec();
    for side in Side::BOTH {
        for i in 0..n {
            for j in 0..n {
                let (ei, ej) = (a.basis(i), a.basis(j));
                let r = a
                    .mul(side, &psi.apply_unchecked(&ei), &a.alpha_of(&ej))
                    .sub(&a.mul(side, &a.alpha_of(&ei), &psi.apply_unchecked(&ej)));
                out.extend(r.into_coords());
            }
        }
    }
    out
}

pub fn linear_centroid_space(a: &HomDialgebra) -> SolutionSpace {
    let (n, b) = (a.dim(), a.backend());
    let tp = derivations::TwistedProducts::new(a, a.alpha());
    // Same columns as `centroid_residual` on elementary maps.
    let m = solver::assemble(n * n, b, |u| {
        let (input, output) = (u / n, u % n);
        let mut col = derivations::commutator_residual(&derivations::elementary(n, b, u), a.alpha());
        for s in 0..2 {
            for i in 0..n {
                for j in 0..n {
                    let mut v = Vector::zero(n, b);
                    if i == input {
                        v = v.add(&tp.left[s][output * n + j]);
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

/// `Σ_{a≤b} quadratic[a,b]·t_a t_b − Σ_a linear[a]·t_a = 0`, the coordinate
/// `r` of `ψ(e_i)•ψ(e_j) − ψ(e_i)•α(e_j)` for `ψ = Σ t_a ψ_a`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadraticConstraint {
    pub side: &'static str,
    /// 0-based `(i, j, r)`.
    pub at: (usize, usize, usize),
    pub quadratic: Vec<(usize, usize, Scalar)>,
    pub linear: Vec<(usize, Scalar)>,
}

impl QuadraticConstraint {
    pub fn evaluate(&self, t: &[Scalar]) -> Scalar {
        let b = t.first().map_or(crate::scalar::Backend::Rational, Scalar::backend);
        let q = self.quadratic.iter().fold(Scalar::zero(b), |acc, (p, r, c)| acc + &(c * &t[*p]) * &t[*r]);
        let l = self.linear.iter().fold(Scalar::zero(b), |acc, (p, c)| acc + c * &t[*p]);
        q - l
    }
}

impl fmt::Display for QuadraticConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self
            .quadratic
            .iter()
            .map(|(p, r, c)| if p == r { format!("({c})·t{}²", p + 1) } else { format!("({c})·t{}t{}", p + 1, r + 1) })
            .collect();
        terms.extend(self.linear.iter().map(|(p, c)| format!("-({c})·t{}", p + 1)));
        let (i, j, r) = self.at;
        write!(f, "{} (e{}, e{}) coord {}: {} = 0", self.side, i + 1, j + 1, r + 1, terms.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CentroidResult {
    pub linear: SolutionSpace,
    pub closed: bool,
    pub constraints: Vec<QuadraticConstraint>,
}

impl CentroidResult {
    /// Dimension of the full centroid when it is a linear space, i.e. when closed.
    pub fn full_dim_if_closed(&self) -> Option<usize> {
        self.closed.then(|| self.linear.dim())
    }

    /// For a one-parameter linear space that is not closed, the finitely
    /// many values of `t` satisfying every constraint (`q t² = l t`).
    pub fn single_parameter_points(&self) -> Option<Vec<Scalar>> {
        if self.closed || self.linear.dim() != 1 {
            return None;
        }
        let b = self.linear.backend();
        let mut points = vec![Scalar::zero(b)];
        let coef = |c: &QuadraticConstraint| {
            let q = c.quadratic.first().map_or(Scalar::zero(b), |x| x.2.clone());
            let l = c.linear.first().map_or(Scalar::zero(b), |x| x.1.clone());
            (q, l)
        };
        // A nonzero root must satisfy q t = l for every constraint.
        let mut root: Option<Scalar> = None;
        for c in &self.constraints {
            let (q, l) = coef(c);
            if q.is_zero() {
                if !l.is_zero() {
                    return Some(points);
                }
                continue;
            }
            let t = l.checked_div(&q).expect("q nonzero");
            if t.is_zero() {
                return Some(points);
            }
            match &root {
                None => root = Some(t),
                Some(r) if (r - &t).is_zero() => {}
                Some(_) => return Some(points),
            }
        }
        if let Some(r) = root {
            points.push(r);
        }
        Some(points)
    }
}

/// Expands the middle equality over `space` (which should be the linear
/// centroid of `a`).
pub fn centroid_closure(a: &HomDialgebra, space: &SolutionSpace) -> Result<CentroidResult> {
    let n = a.dim();
    let maps = space.basis_maps(n)?;
    let m = maps.len();
    let mut constraints = Vec::new();
    for side in Side::BOTH {
        for i in 0..n {
            for j in 0..n {
                let (ei, ej) = (a.basis(i), a.basis(j));
                let images: Vec<Vector> = maps.iter().map(|p| p.apply_unchecked(&ei)).collect();
                let images_j: Vec<Vector> = maps.iter().map(|p| p.apply_unchecked(&ej)).collect();
                let linear_terms: Vec<Vector> = images.iter().map(|pi| a.mul(side, pi, &a.alpha_of(&ej))).collect();
                let mut quad: Vec<(usize, usize, Vector)> = Vec::new();
                for p in 0..m {
                    for q in p..m {
                        let mut v = a.mul(side, &images[p], &images_j[q]);
                        if p != q {
                            v = v.add(&a.mul(side, &images[q], &images_j[p]));
                        }
                        quad.push((p, q, v));
                    }
                }
                for r in 0..n {
                    let quadratic: Vec<(usize, usize, Scalar)> = quad
                        .iter()
                        .filter(|(_, _, v)| !v.get(r).is_zero())
                        .map(|(p, q, v)| (*p, *q, v.get(r).clone()))
                        .collect();
                    let linear: Vec<(usize, Scalar)> = linear_terms
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.get(r).is_zero())
                        .map(|(p, v)| (p, v.get(r).clone()))
                        .collect();
                    if !quadratic.is_empty() || !linear.is_empty() {
                        constraints.push(QuadraticConstraint {
                            side: side.symbol(),
                            at: (i, j, r),
                            quadratic,
                            linear,
                        });
                    }
                }
            }
        }
    }
    Ok(CentroidResult {
        linear: space.clone(),
        closed: constraints.is_empty(),
        constraints,
    })
}

pub fn centroid(a: &HomDialgebra) -> Result<CentroidResult> {
    centroid_closure(a, &linear_centroid_space(a))
}

/// Pointwise membership with witnesses.
pub fn is_centroid_member(a: &HomDialgebra, psi: &LinearMap, variant: CentroidVariant) -> Result<AxiomReport> {
    check_dim(a.dim(), psi.dim())?;
    let n = a.dim();
    let commute: Vec<_> = (0..n)
        .filter_map(|j| {
            let e = a.basis(j);
            let r = psi.apply_unchecked(&a.alpha_of(&e)).sub(&a.alpha_of(&psi.apply_unchecked(&e)));
            (!r.is_zero()).then(|| crate::axioms::Violation { at: vec![j], residual: r })
        })
        .collect();
    let mut records = vec![IdentityRecord::new(1, "ψ∘α = α∘ψ", commute)];
    let mut id = 2;
    for side in Side::BOTH {
        let s = side.symbol();
        let outer = crate::axioms::bilinear(n, a.backend(), |x, y| {
            a.mul(side, &psi.apply_unchecked(x), &a.alpha_of(y)).sub(&a.mul(side, &a.alpha_of(x), &psi.apply_unchecked(y)))
        });
        records.push(IdentityRecord::new(id, format!("ψ(x){s}α(y) = α(x){s}ψ(y)"), outer));
        id += 1;
        if variant == CentroidVariant::Full {
            let middle = crate::axioms::bilinear(n, a.backend(), |x, y| {
                let px = psi.apply_unchecked(x);
                a.mul(side, &px, &psi.apply_unchecked(y)).sub(&a.mul(side, &px, &a.alpha_of(y)))
            });
            records.push(IdentityRecord::new(id, format!("ψ(x){s}ψ(y) = ψ(x){s}α(y)"), middle));
            id += 1;
        }
    }
    Ok(AxiomReport::new(format!("{} (centroid)", a.name()), records))
}

/// `Z_A(H)`: the `x ∈ H` with `α(x)•h = h•α(x) = 0` for all `h ∈ H` and both products.
pub fn centralizer(a: &HomDialgebra, h: &SolutionSpace) -> Result<SolutionSpace> {
    let n = a.dim();
    check_dim(n, h.ambient())?;
    let b = a.backend();
    let hs = h.basis_vectors();
    let residual = |x: &Vector| -> Vec<Scalar> {
        let ax = a.alpha_of(x);
        let mut out = Vec::new();
        for side in Side::BOTH {
            for hv in &hs {
                out.extend(a.mul(side, &ax, hv).into_coords());
                out.extend(a.mul(side, hv, &ax).into_coords());
            }
        }
        out
    };
    let m = solver::assemble(n, b, |u| residual(&Vector::basis(n, u, b)));
    solver::nullspace(&m).intersection(h)
}

pub fn center(a: &HomDialgebra) -> SolutionSpace {
    centralizer(a, &SolutionSpace::full(a.dim(), a.backend())).expect("dimensions agree")
}

/// Outcome of the composition checks for one pair `(φ, d)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompositionAudit {
    /// (a) `φ∘d` is an α-derivation.
    pub phi_d_is_derivation: bool,
    pub phi_d_report: AxiomReport,
    /// (b) `d∘φ` lies in the linear centroid ...
    pub d_phi_in_centroid: bool,
    /// ... and `φ∘d` is a central derivation; (b) holds when these agree.
    pub phi_d_central: bool,
    /// (c) `[d, φ]` is a central derivation.
    pub bracket_central: bool,
}

impl CompositionAudit {
    pub fn equivalence_holds(&self) -> bool {
        self.d_phi_in_centroid == self.phi_d_central
    }
}

pub fn composition_audit(a: &HomDialgebra, phi: &LinearMap, d: &LinearMap) -> Result<CompositionAudit> {
    check_dim(a.dim(), phi.dim())?;
    check_dim(a.dim(), d.dim())?;
    if !centroid_residual(a, phi).iter().all(Scalar::is_zero) {
        return Err(Error::precondition("φ is not in the linear centroid"));
    }
    if !derivations::is_derivation(a, d, 1)?.pass() {
        return Err(Error::precondition("d is not an α-derivation"));
    }
    let phi_d = phi.compose_unchecked(d);
    let d_phi = d.compose_unchecked(phi);
    let phi_d_report = derivations::is_derivation(a, &phi_d, 1)?;
    Ok(CompositionAudit {
        phi_d_is_derivation: phi_d_report.pass(),
        phi_d_report,
        d_phi_in_centroid: centroid_residual(a, &d_phi).iter().all(Scalar::is_zero),
        phi_d_central: derivations::is_central_derivation(a, &phi_d)?,
        bracket_central: derivations::is_central_derivation(a, &d.commutator(phi))?,
    })
}

/// Comparison of the central derivations with `Der_α(A) ∩ Cent(A)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CentralIdentityAudit {
    /// The centroid used was closed, so `Cent(A)` is a linear space.
    pub closed: bool,
    pub central_dim: usize,
    pub intersection_dim: usize,
    pub central_within_intersection: bool,
    pub intersection_within_central: bool,
}

impl CentralIdentityAudit {
    pub fn equal(&self) -> bool {
        self.central_within_intersection && self.intersection_within_central
    }
}

pub fn central_identity_audit(a: &HomDialgebra) -> Result<CentralIdentityAudit> {
    let cent = centroid(a)?;
    let der = derivations::derivation_space(a, 1);
    let central = derivations::central_derivation_space(a);
    let inter = der.intersection(&cent.linear)?;
    Ok(CentralIdentityAudit {
        closed: cent.closed,
        central_dim: central.dim(),
        intersection_dim: inter.dim(),
        central_within_intersection: central.is_subspace_of(&inter),
        intersection_within_central: inter.is_subspace_of(&central),
    })
}
