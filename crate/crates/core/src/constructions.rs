//! Structure-producing constructions: transport along an invertible map,
//! the dipterous Yau twist, the untwist candidate, and the passages between
//! Zinbiel, dendriform and commutative Hom-associative products.

use rand::Rng;

use crate::algebra::{HomDialgebra, LinearMap, MultTable, Side, Vector};
use crate::axioms::{self, bilinear, AxiomReport, DendriformVariant, DipterousSide, IdentityRecord, Violation};
use crate::error::{check_dim, Error, Result};
use crate::scalar::{Backend, Scalar};
use crate::solver;

fn transport_table(t: &MultTable, phi: &LinearMap, phi_inv: &LinearMap) -> MultTable {
    let n = t.dim();
    let b = t.backend().join(phi.backend());
    let pre: Vec<Vector> = (0..n).map(|i| phi_inv.apply_unchecked(&Vector::basis(n, i, b))).collect();
    let mut out = MultTable::zero(n, b);
    for i in 0..n {
        for j in 0..n {
            out.set_product(i, j, &phi.apply_unchecked(&t.multiply_unchecked(&pre[i], &pre[j])));
        }
    }
    out
}

/// `x ⊣' y = Φ(Φ⁻¹x ⊣ Φ⁻¹y)`, likewise `⊢'`, and `α' = ΦαΦ⁻¹`.
pub fn transport(a: &HomDialgebra, phi: &LinearMap) -> Result<HomDialgebra> {
    check_dim(a.dim(), phi.dim())?;
    let phi = phi.to_backend(a.backend().join(phi.backend()))?;
    let a = a.to_backend(phi.backend())?;
    let phi_inv = solver::invert_map(&phi)?;
    HomDialgebra::new(
        format!("{}^Φ", a.name()),
        transport_table(a.left(), &phi, &phi_inv),
        transport_table(a.right(), &phi, &phi_inv),
        phi.compose_unchecked(a.alpha()).compose_unchecked(&phi_inv),
    )
}

/// Checks that `φ: A → B` satisfies `φ(x•y) = φ(x)•φ(y)` for both products and `φα_A = α_B φ`.
pub fn is_homomorphism(a: &HomDialgebra, b: &HomDialgebra, phi: &LinearMap) -> Result<AxiomReport> {
    check_dim(a.dim(), phi.dim())?;
    check_dim(b.dim(), phi.dim())?;
    let n = a.dim();
    let backend = a.backend().join(b.backend());
    let mut records = Vec::new();
    for (idx, side) in Side::BOTH.into_iter().enumerate() {
        let s = side.symbol();
        let v = bilinear(n, backend, |x, y| {
            phi.apply_unchecked(&a.mul(side, x, y)).sub(&b.mul(side, &phi.apply_unchecked(x), &phi.apply_unchecked(y)))
        });
        records.push(IdentityRecord::new(idx + 1, format!("φ(x{s}y) = φ(x){s}φ(y)"), v));
    }
    let commute: Vec<Violation> = (0..n)
        .filter_map(|j| {
            let e = Vector::basis(n, j, backend);
            let r = phi.apply_unchecked(&a.alpha_of(&e)).sub(&b.alpha_of(&phi.apply_unchecked(&e)));
            (!r.is_zero()).then(|| Violation { at: vec![j], residual: r })
        })
        .collect();
    records.push(IdentityRecord::new(3, "φ∘α = α'∘φ", commute));
    Ok(AxiomReport::new(format!("{} → {} (homomorphism)", a.name(), b.name()), records))
}

/// Bijective homomorphism `A → A`.
pub fn is_automorphism(a: &HomDialgebra, psi: &LinearMap) -> Result<AxiomReport> {
    let mut report = is_homomorphism(a, a, psi)?;
    let bijective = solver::map_rank(psi) == a.dim();
    report.identities.push(IdentityRecord::new(
        4,
        "ψ is bijective",
        if bijective {
            vec![]
        } else {
            vec![Violation {
                at: vec![],
                residual: Vector::zero(a.dim(), a.backend()),
            }]
        },
    ));
    report.structure = format!("{} (automorphism)", a.name());
    Ok(report)
}

/// Verifies that `ΦψΦ⁻¹` is an automorphism of `transport(A, Φ)` for an automorphism `ψ` of `A`.
pub fn conjugate_automorphism_check(a: &HomDialgebra, phi: &LinearMap, psi: &LinearMap) -> Result<AxiomReport> {
    let pre = is_automorphism(a, psi)?;
    if let Some((record, _)) = pre.first_violation() {
        return Err(Error::precondition(format!("ψ is not an automorphism: {} fails", record.identity)));
    }
    let t = transport(a, phi)?;
    let phi = phi.to_backend(t.backend())?;
    let conj = phi
        .compose_unchecked(&psi.to_backend(t.backend())?)
        .compose_unchecked(&solver::invert_map(&phi)?);
    is_automorphism(&t, &conj)
}

/// A dipterous structure `(∗, ≻ or ≺, α)` together with its identity report.
#[derive(Clone, Debug, PartialEq)]
pub struct Dipterous {
    pub star: MultTable,
    pub other: MultTable,
    pub alpha: LinearMap,
    pub side: DipterousSide,
    pub report: AxiomReport,
}

/// `(α∘∗, α∘other, α)` for an untwisted dipterous algebra and an endomorphism `α`.
pub fn yau_twist_dipterous(star: &MultTable, other: &MultTable, alpha: &LinearMap, side: DipterousSide) -> Result<Dipterous> {
    let n = alpha.dim();
    let id = LinearMap::identity(n, alpha.backend());
    let base = axioms::check_dipterous(star, other, &id, side)?;
    if let Some((r, v)) = base.first_violation() {
        return Err(Error::precondition(format!("untwisted structure fails {} at {v}", r.identity)));
    }
    for (name, t) in [("∗", star), ("second product", other)] {
        let v = bilinear(n, alpha.backend(), |x, y| {
            alpha
                .apply_unchecked(&t.multiply_unchecked(x, y))
                .sub(&t.multiply_unchecked(&alpha.apply_unchecked(x), &alpha.apply_unchecked(y)))
        });
        if let Some(w) = v.first() {
            return Err(Error::precondition(format!("α is not an endomorphism of {name}: fails at {w}")));
        }
    }
    let star = star.post_compose(alpha);
    let other = other.post_compose(alpha);
    let report = axioms::check_dipterous(&star, &other, alpha, side)?;
    Ok(Dipterous {
        star,
        other,
        alpha: alpha.clone(),
        side,
        report,
    })
}

/// How the untwist composes `α` with the products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum UntwistVariant {
    /// `⊣' = α∘⊣`, `⊢' = α∘⊢`.
    #[default]
    Literal,
    /// `⊣' = α⁻¹∘⊣`, `⊢' = α⁻¹∘⊢` (requires invertible `α`).
    Inverse,
}

/// Builds the untwisted tables with twisting map `id` and checks them.
pub fn untwist_candidate(a: &HomDialgebra, variant: UntwistVariant) -> Result<(HomDialgebra, AxiomReport)> {
    let m = match variant {
        UntwistVariant::Literal => a.alpha().clone(),
        UntwistVariant::Inverse => solver::invert_map(a.alpha())?,
    };
    let u = HomDialgebra::new(
        format!("{} (untwisted)", a.name()),
        a.left().post_compose(&m),
        a.right().post_compose(&m),
        LinearMap::identity(a.dim(), a.backend()),
    )?;
    let report = axioms::check_dialgebra(&u);
    Ok((u, report))
}

/// Inverse of the literal untwist when `α` is invertible: composes the tables with `α⁻¹`.
pub fn retwist(untwisted: &HomDialgebra, alpha: &LinearMap) -> Result<HomDialgebra> {
    let inv = solver::invert_map(alpha)?;
    HomDialgebra::new(
        untwisted.name().trim_end_matches(" (untwisted)").to_string(),
        untwisted.left().post_compose(&inv),
        untwisted.right().post_compose(&inv),
        alpha.clone(),
    )
}

fn require_zinbiel(circ: &MultTable, alpha: &LinearMap) -> Result<()> {
    let r = axioms::check_zinbiel(circ, alpha)?;
    match r.first_violation() {
        None => Ok(()),
        Some((_, v)) => Err(Error::precondition(format!(
            "not Hom-Zinbiel: fails at {v} ({} violations)",
            r.violation_count()
        ))),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Dendriform {
    pub prec: MultTable,
    pub succ: MultTable,
    pub alpha: LinearMap,
    pub report: AxiomReport,
}

/// `x≺y = x∘y`, `x≻y = y∘x`.
pub fn zinbiel_to_dendriform(circ: &MultTable, alpha: &LinearMap) -> Result<Dendriform> {
    require_zinbiel(circ, alpha)?;
    let prec = circ.clone();
    let succ = circ.transpose();
    let report = axioms::check_dendriform(&prec, &succ, alpha, DendriformVariant::Standard)?;
    Ok(Dendriform {
        prec,
        succ,
        alpha: alpha.clone(),
        report,
    })
}

/// `x·y = x∘y + y∘x`, reported for Hom-associativity (identity 1) and commutativity (identity 2).
pub fn symmetrize_zinbiel(circ: &MultTable, alpha: &LinearMap) -> Result<(MultTable, AxiomReport)> {
    require_zinbiel(circ, alpha)?;
    let m = circ.add(&circ.transpose());
    let n = m.dim();
    let commutative = bilinear(n, m.backend(), |x, y| m.multiply_unchecked(x, y).sub(&m.multiply_unchecked(y, x)));
    let report = AxiomReport::new(
        "symmetrized Zinbiel product",
        vec![
            IdentityRecord::new(1, "(x·y)·α(z) = α(x)·(y·z)", axioms::hom_associativity(&m, alpha)?),
            IdentityRecord::new(2, "x·y = y·x", commutative),
        ],
    );
    Ok((m, report))
}

/// For a dendriform structure with `x≺y = y≻x`, returns `∘ = ≺` and its Zinbiel report.
pub fn commutative_dendriform_to_zinbiel(prec: &MultTable, succ: &MultTable, alpha: &LinearMap) -> Result<(MultTable, AxiomReport)> {
    let d = axioms::check_dendriform(prec, succ, alpha, DendriformVariant::Standard)?;
    if let Some((r, v)) = d.first_violation() {
        return Err(Error::precondition(format!("not Hom-dendriform: identity {} fails at {v}", r.id)));
    }
    if *prec != succ.transpose() {
        return Err(Error::precondition("not commutative: x≺y ≠ y≻x"));
    }
    let circ = prec.clone();
    let report = axioms::check_zinbiel(&circ, alpha)?;
    Ok((circ, report))
}

/// Random invertible map with small integer entries in `-2..=2`.
pub fn random_invertible_map<R: Rng>(n: usize, backend: Backend, rng: &mut R) -> LinearMap {
    loop {
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|_| (0..n).map(|_| Scalar::from_i64(backend, rng.gen_range(-2..=2))).collect())
            .collect();
        let m = LinearMap::from_rows(rows).expect("square");
        if solver::map_rank(&m) == n {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: Backend = Backend::Rational;

    fn square() -> MultTable {
        let mut t = MultTable::zero(2, B);
        t.set_product(0, 0, &Vector::from_i64(B, &[0, 1]));
        t
    }

    #[test]
    fn transport_by_identity_is_identity() {
        let mut t = MultTable::zero(2, B);
        t.set_product(0, 1, &Vector::from_i64(B, &[1, 0]));
        let a = HomDialgebra::new("a", t.clone(), t, LinearMap::identity(2, B)).unwrap();
        let b = transport(&a, &LinearMap::identity(2, B)).unwrap();
        assert_eq!(b.left(), a.left());
        assert_eq!(b.alpha(), a.alpha());
        assert!(is_homomorphism(&a, &b, &LinearMap::identity(2, B)).unwrap().pass());
    }

    #[test]
    fn transport_is_isomorphism_and_functorial() {
        let mut t = MultTable::zero(2, B);
        t.set_product(0, 1, &Vector::from_i64(B, &[1, 0]));
        t.set_product(1, 1, &Vector::from_i64(B, &[1, 1]));
        let a = HomDialgebra::new("a", t.clone(), t, LinearMap::from_i64_rows(B, &[&[1, 1], &[0, 1]])).unwrap();
        let p1 = LinearMap::from_i64_rows(B, &[&[1, 1], &[0, 1]]);
        let p2 = LinearMap::from_i64_rows(B, &[&[2, 0], &[1, 1]]);
        let t1 = transport(&a, &p1).unwrap();
        assert!(is_homomorphism(&a, &t1, &p1).unwrap().pass());
        let twice = transport(&t1, &p2).unwrap();
        let once = transport(&a, &p2.compose(&p1).unwrap()).unwrap();
        assert_eq!(twice.left(), once.left());
        assert_eq!(twice.right(), once.right());
        assert_eq!(twice.alpha(), once.alpha());
        let singular = LinearMap::from_i64_rows(B, &[&[1, 1], &[1, 1]]);
        assert_eq!(transport(&a, &singular), Err(Error::SingularMap));
    }

    #[test]
    fn zinbiel_round_trip() {
        let id = LinearMap::identity(2, B);
        let d = zinbiel_to_dendriform(&square(), &id).unwrap();
        assert!(d.report.pass());
        let (circ, z) = commutative_dendriform_to_zinbiel(&d.prec, &d.succ, &id).unwrap();
        assert_eq!(circ, square());
        assert!(z.pass());
        let (m, report) = symmetrize_zinbiel(&square(), &id).unwrap();
        assert!(report.pass());
        assert_eq!(m.get(0, 0, 1), &Scalar::from_i64(B, 2));
    }

    #[test]
    fn untwist_and_retwist() {
        let mut t = MultTable::zero(2, B);
        t.set_product(0, 1, &Vector::from_i64(B, &[1, 0]));
        t.set_product(1, 1, &Vector::from_i64(B, &[1, 1]));
        let alpha = LinearMap::from_i64_rows(B, &[&[1, 1], &[0, 1]]);
        let a = HomDialgebra::new("a", t.clone(), t, alpha.clone()).unwrap();
        let (u, _) = untwist_candidate(&a, UntwistVariant::Literal).unwrap();
        let back = retwist(&u, &alpha).unwrap();
        assert_eq!(back.left(), a.left());
        assert_eq!(back.right(), a.right());
    }
}
