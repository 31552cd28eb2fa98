//! Axiom checkers: the five Hom-associative dialgebra identities,
//! multiplicativity of the twisting map, bar units, the dendriform, Zinbiel
//! and dipterous identities, and the five-variable triple system.
//!
//! Every identity is multilinear, so it suffices to test it on basis
//! vectors. Checkers never stop at the first failure: a report lists every
//! violating index tuple together with its residual `LHS − RHS`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{HomDialgebra, LinearMap, MultTable, Side, Vector};
use crate::error::{check_dim, Result};
use crate::scalar::{Backend, Scalar};
use crate::solver::{self, Matrix, SolutionSpace};

/// One failure of an identity on basis vectors (indices are 0-based).
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub at: Vec<usize>,
    pub residual: Vector,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at: Vec<String> = self.at.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(f, "({}) residual {}", at.join(", "), self.residual)
    }
}

impl Serialize for Violation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Violation", 2)?;
        st.serialize_field("at", &self.at.iter().map(|i| i + 1).collect::<Vec<_>>())?;
        st.serialize_field("residual", &self.residual.to_string())?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityRecord {
    pub id: usize,
    pub identity: String,
    pub pass: bool,
    pub violations: Vec<Violation>,
}

impl IdentityRecord {
    pub fn new(id: usize, identity: impl Into<String>, violations: Vec<Violation>) -> Self {
        IdentityRecord {
            id,
            identity: identity.into(),
            pass: violations.is_empty(),
            violations,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    pub structure: String,
    pub identities: Vec<IdentityRecord>,
}

impl AxiomReport {
    pub fn new(structure: impl Into<String>, identities: Vec<IdentityRecord>) -> Self {
        AxiomReport {
            structure: structure.into(),
            identities,
        }
    }

    pub fn pass(&self) -> bool {
        self.identities.iter().all(|r| r.pass)
    }

    pub fn passing(&self) -> usize {
        self.identities.iter().filter(|r| r.pass).count()
    }

    pub fn violation_count(&self) -> usize {
        self.identities.iter().map(|r| r.violations.len()).sum()
    }

    pub fn record(&self, id: usize) -> Option<&IdentityRecord> {
        self.identities.iter().find(|r| r.id == id)
    }

    /// First failing record and its first violation, for short messages.
    pub fn first_violation(&self) -> Option<(&IdentityRecord, &Violation)> {
        self.identities
            .iter()
            .find_map(|r| r.violations.first().map(|v| (r, v)))
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}/{} identities pass", self.structure, self.passing(), self.identities.len())?;
        for r in &self.identities {
            let status = if r.pass { "pass" } else { "FAIL" };
            writeln!(f, "  [{}] {} {}", r.id, status, r.identity)?;
            for v in &r.violations {
                writeln!(f, "      at {v}")?;
            }
        }
        Ok(())
    }
}

/// Shape of a Hom-associativity identity `(x ∘₁ y) ∘₂ α(z) = α(x) ∘₃ (y ∘₄ z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub lhs_inner: Side,
    pub lhs_outer: Side,
    pub rhs_outer: Side,
    pub rhs_inner: Side,
}

const fn shape(lhs_inner: Side, lhs_outer: Side, rhs_outer: Side, rhs_inner: Side) -> Shape {
    Shape {
        lhs_inner,
        lhs_outer,
        rhs_outer,
        rhs_inner,
    }
}

use Side::{Left as L, Right as R};

/// The five defining identities, numbered 1 to 5.
pub const AXIOMS: [Shape; 5] = [
    shape(L, L, L, L),
    shape(L, L, L, R),
    shape(R, L, R, L),
    shape(L, R, R, R),
    shape(R, R, R, R),
];

impl Shape {
    pub fn describe(&self) -> String {
        format!(
            "(x{}y){}α(z) = α(x){}(y{}z)",
            self.lhs_inner.symbol(),
            self.lhs_outer.symbol(),
            self.rhs_outer.symbol(),
            self.rhs_inner.symbol()
        )
    }

    pub fn residual(&self, a: &HomDialgebra, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let lhs = a.mul(self.lhs_outer, &a.mul(self.lhs_inner, x, y), &a.alpha_of(z));
        let rhs = a.mul(self.rhs_outer, &a.alpha_of(x), &a.mul(self.rhs_inner, y, z));
        lhs.sub(&rhs)
    }
}

fn basis(n: usize, backend: Backend) -> Vec<Vector> {
    (0..n).map(|i| Vector::basis(n, i, backend)).collect()
}

/// Evaluates a trilinear residual on all basis triples.
fn trilinear<F>(n: usize, backend: Backend, residual: F) -> Vec<Violation>
where
    F: Fn(&Vector, &Vector, &Vector) -> Vector,
{
    let e = basis(n, backend);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let r = residual(&e[i], &e[j], &e[k]);
                if !r.is_zero() {
                    out.push(Violation {
                        at: vec![i, j, k],
                        residual: r,
                    });
                }
            }
        }
    }
    out
}

/// Evaluates a bilinear residual on all basis pairs.
pub(crate) fn bilinear<F>(n: usize, backend: Backend, residual: F) -> Vec<Violation>
where
    F: Fn(&Vector, &Vector) -> Vector,
{
    let e = basis(n, backend);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let r = residual(&e[i], &e[j]);
            if !r.is_zero() {
                out.push(Violation {
                    at: vec![i, j],
                    residual: r,
                });
            }
        }
    }
    out
}

/// The five dialgebra identities on all basis triples.
pub fn check_dialgebra(a: &HomDialgebra) -> AxiomReport {
    let ops = Operators::new(a);
    let records = AXIOMS
        .iter()
        .enumerate()
        .map(|(idx, s)| IdentityRecord::new(idx + 1, s.describe(), ops.violations(s)))
        .collect();
    AxiomReport::new(format!("{} (Hom-associative dialgebra)", a.name()), records)
}

/// Everything [`Shape::residual`] needs on basis triples, computed once:
/// the basis products and the operators `v ↦ v ∘ α(e_k)` and `v ↦ α(e_i) ∘ v`
/// as matrices, so each triple costs two matrix–vector products.
struct Operators {
    n: usize,
    products: [Vec<Vector>; 2],
    right_by_alpha: [Vec<LinearMap>; 2],
    left_by_alpha: [Vec<LinearMap>; 2],
}

impl Operators {
    fn new(a: &HomDialgebra) -> Self {
        let n = a.dim();
        let e = basis(n, a.backend());
        let alpha: Vec<Vector> = e.iter().map(|x| a.alpha_of(x)).collect();
        let per_side = |f: &dyn Fn(Side) -> Vec<LinearMap>| [f(Side::Left), f(Side::Right)];
        Operators {
            n,
            products: [Side::Left, Side::Right].map(|side| {
                (0..n * n).map(|ij| a.table(side).basis_product(ij / n, ij % n)).collect()
            }),
            right_by_alpha: per_side(&|side| {
                alpha.iter().map(|ak| LinearMap::from_images(&e.iter().map(|x| a.mul(side, x, ak)).collect::<Vec<_>>())).collect()
            }),
            left_by_alpha: per_side(&|side| {
                alpha.iter().map(|ai| LinearMap::from_images(&e.iter().map(|x| a.mul(side, ai, x)).collect::<Vec<_>>())).collect()
            }),
        }
    }

    fn violations(&self, s: &Shape) -> Vec<Violation> {
        let n = self.n;
        let (li, lo, ro, ri) = (s.lhs_inner as usize, s.lhs_outer as usize, s.rhs_outer as usize, s.rhs_inner as usize);
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.right_by_alpha[lo][k].apply_unchecked(&self.products[li][i * n + j]);
                    let rhs = self.left_by_alpha[ro][i].apply_unchecked(&self.products[ri][j * n + k]);
                    let r = lhs.sub(&rhs);
                    if !r.is_zero() {
                        out.push(Violation { at: vec![i, j, k], residual: r });
                    }
                }
            }
        }
        out
    }
}

/// `α(x•y) = α(x)•α(y)` for both products, on all basis pairs.
pub fn check_multiplicativity(a: &HomDialgebra) -> AxiomReport {
    let records = Side::BOTH
        .iter()
        .enumerate()
        .map(|(idx, &side)| {
            let s = side.symbol();
            let violations = bilinear(a.dim(), a.backend(), |x, y| {
                a.alpha_of(&a.mul(side, x, y)).sub(&a.mul(side, &a.alpha_of(x), &a.alpha_of(y)))
            });
            IdentityRecord::new(idx + 1, format!("α(x{s}y) = α(x){s}α(y)"), violations)
        })
        .collect();
    AxiomReport::new(format!("{} (multiplicativity)", a.name()), records)
}

/// The identities written directly in structure constants: with
/// `e_i • e_j = Σ_k g_ij^k e_k` and `α(e_j) = Σ_i a_ij e_i`, identity
/// `(∘₁, ∘₂ | ∘₃, ∘₄)` reads, for every `i, j, k, r`,
///
/// `Σ_{p,q} g¹_ij^p a_qk g²_pq^r = Σ_{p,q} a_pi g⁴_jk^q g³_pq^r`.
///
/// Returns the nonzero differences as `(identity, [i, j, k], r, value)`.
/// This path shares no code with [`check_dialgebra`], so the two act as
/// cross-checks of each other.
pub fn index_sum_residuals(a: &HomDialgebra) -> Vec<(usize, [usize; 3], usize, Scalar)> {
    let n = a.dim();
    let b = a.backend();
    let alpha = a.alpha();
    let mut out = Vec::new();
    for (idx, s) in AXIOMS.iter().enumerate() {
        let (g1, g2, g3, g4) = (a.table(s.lhs_inner), a.table(s.lhs_outer), a.table(s.rhs_outer), a.table(s.rhs_inner));
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for r in 0..n {
                        let mut total = Scalar::zero(b);
                        for p in 0..n {
                            for q in 0..n {
                                let lhs = &(g1.get(i, j, p) * alpha.get(q, k)) * g2.get(p, q, r);
                                let rhs = &(alpha.get(p, i) * g4.get(j, k, q)) * g3.get(p, q, r);
                                total = &total + &(&lhs - &rhs);
                            }
                        }
                        if !total.is_zero() {
                            out.push((idx + 1, [i, j, k], r, total));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Bar units: vectors `e` with `x ⊣ e = e ⊢ x = α(x) = x` for all `x`.
#[derive(Clone, Debug, PartialEq)]
pub enum BarUnits {
    /// No bar unit exists, with the reason.
    Empty(String),
    /// The affine subspace `particular + directions`.
    Affine { particular: Vector, directions: SolutionSpace },
}

impl BarUnits {
    pub fn is_empty(&self) -> bool {
        matches!(self, BarUnits::Empty(_))
    }

    /// Dimension of the affine family, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        match self {
            BarUnits::Empty(_) => None,
            BarUnits::Affine { directions, .. } => Some(directions.dim()),
        }
    }

    pub fn contains(&self, e: &Vector) -> bool {
        match self {
            BarUnits::Empty(_) => false,
            BarUnits::Affine { particular, directions } => directions.contains(e.sub(particular).coords()),
        }
    }
}

pub fn find_bar_units(a: &HomDialgebra) -> Result<BarUnits> {
    if !a.alpha().is_identity() {
        return Ok(BarUnits::Empty("α is not identity".into()));
    }
    let n = a.dim();
    let b = a.backend();
    // Unknown e = Σ_m e_m; rows are coordinate r of e_i ⊣ e − e_i, then of e ⊢ e_i − e_i.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for side in Side::BOTH {
        let table = a.table(side);
        for i in 0..n {
            for r in 0..n {
                let row = (0..n)
                    .map(|m| match side {
                        Side::Left => table.get(i, m, r).clone(),
                        Side::Right => table.get(m, i, r).clone(),
                    })
                    .collect();
                rows.push(row);
                rhs.push(if i == r { Scalar::one(b) } else { Scalar::zero(b) });
            }
        }
    }
    let m = Matrix::from_rows(n, b, rows)?;
    Ok(match solver::solve_affine(&m, &rhs)? {
        None => BarUnits::Empty("x⊣e = e⊢x = x has no solution".into()),
        Some((p, directions)) => BarUnits::Affine {
            particular: Vector::from_coords(p),
            directions,
        },
    })
}

/// Conventions for the third dendriform identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DendriformVariant {
    /// `(x≺y + x≻y)≻α(z) = α(x)≻(y≻z)`.
    #[default]
    Standard,
    /// The literal reading `(x≺y + x≻y)≺α(z) = α(x)≻(y≻z)`.
    AsPrinted,
}

impl DendriformVariant {
    pub fn name(self) -> &'static str {
        match self {
            DendriformVariant::Standard => "standard",
            DendriformVariant::AsPrinted => "as-printed",
        }
    }
}

fn shapes_agree(tables: &[&MultTable], alpha: &LinearMap) -> Result<(usize, Backend)> {
    let n = alpha.dim();
    let backend = alpha.backend();
    for t in tables {
        check_dim(n, t.dim())?;
    }
    Ok((n, backend))
}

/// The three dendriform identities for `≺` (`prec`) and `≻` (`succ`).
pub fn check_dendriform(prec: &MultTable, succ: &MultTable, alpha: &LinearMap, variant: DendriformVariant) -> Result<AxiomReport> {
    let (n, b) = shapes_agree(&[prec, succ], alpha)?;
    let p = |x: &Vector, y: &Vector| prec.multiply_unchecked(x, y);
    let s = |x: &Vector, y: &Vector| succ.multiply_unchecked(x, y);
    let both = |x: &Vector, y: &Vector| p(x, y).add(&s(x, y));
    let al = |x: &Vector| alpha.apply_unchecked(x);
    let first = trilinear(n, b, |x, y, z| p(&p(x, y), &al(z)).sub(&p(&al(x), &both(y, z))));
    let second = trilinear(n, b, |x, y, z| p(&s(x, y), &al(z)).sub(&s(&al(x), &p(y, z))));
    let third = trilinear(n, b, |x, y, z| {
        let lhs = match variant {
            DendriformVariant::Standard => s(&both(x, y), &al(z)),
            DendriformVariant::AsPrinted => p(&both(x, y), &al(z)),
        };
        lhs.sub(&s(&al(x), &s(y, z)))
    });
    let third_lhs = match variant {
        DendriformVariant::Standard => "(x≺y+x≻y)≻α(z)",
        DendriformVariant::AsPrinted => "(x≺y+x≻y)≺α(z)",
    };
    Ok(AxiomReport::new(
        format!("Hom-dendriform ({})", variant.name()),
        vec![
            IdentityRecord::new(1, "(x≺y)≺α(z) = α(x)≺(y≺z+y≻z)", first),
            IdentityRecord::new(2, "(x≻y)≺α(z) = α(x)≻(y≺z)", second),
            IdentityRecord::new(3, format!("{third_lhs} = α(x)≻(y≻z)"), third),
        ],
    ))
}

/// The Zinbiel identity `(x∘y)∘α(z) = α(x)∘(y∘z) + α(x)∘(z∘y)`.
pub fn check_zinbiel(circ: &MultTable, alpha: &LinearMap) -> Result<AxiomReport> {
    let (n, b) = shapes_agree(&[circ], alpha)?;
    let c = |x: &Vector, y: &Vector| circ.multiply_unchecked(x, y);
    let violations = trilinear(n, b, |x, y, z| {
        let ax = alpha.apply_unchecked(x);
        c(&c(x, y), &alpha.apply_unchecked(z)).sub(&c(&ax, &c(y, z))).sub(&c(&ax, &c(z, y)))
    });
    Ok(AxiomReport::new(
        "Hom-Zinbiel",
        vec![IdentityRecord::new(1, "(x∘y)∘α(z) = α(x)∘(y∘z)+α(x)∘(z∘y)", violations)],
    ))
}

/// Which one-sided dipterous convention is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DipterousSide {
    /// Second operation `≻` with `(x∗y)≻α(z) = α(x)≻(y≻z)`.
    Left,
    /// Second operation `≺` with `(x≺y)≺α(z) = α(x)≺(y∗z)`.
    Right,
}

impl DipterousSide {
    pub fn name(self) -> &'static str {
        match self {
            DipterousSide::Left => "left",
            DipterousSide::Right => "right",
        }
    }
}

/// Failures of `(x•y)•α(z) = α(x)•(y•z)` for a single product.
pub fn hom_associativity(table: &MultTable, alpha: &LinearMap) -> Result<Vec<Violation>> {
    let (n, b) = shapes_agree(&[table], alpha)?;
    let m = |x: &Vector, y: &Vector| table.multiply_unchecked(x, y);
    Ok(trilinear(n, b, |x, y, z| {
        m(&m(x, y), &alpha.apply_unchecked(z)).sub(&m(&alpha.apply_unchecked(x), &m(y, z)))
    }))
}

/// The dipterous identities: the mixed identity for the chosen side, then
/// Hom-associativity of `∗`.
pub fn check_dipterous(star: &MultTable, other: &MultTable, alpha: &LinearMap, side: DipterousSide) -> Result<AxiomReport> {
    let (n, b) = shapes_agree(&[star, other], alpha)?;
    let st = |x: &Vector, y: &Vector| star.multiply_unchecked(x, y);
    let o = |x: &Vector, y: &Vector| other.multiply_unchecked(x, y);
    let al = |x: &Vector| alpha.apply_unchecked(x);
    let (mixed, text) = match side {
        DipterousSide::Left => (
            trilinear(n, b, |x, y, z| o(&st(x, y), &al(z)).sub(&o(&al(x), &o(y, z)))),
            "(x∗y)≻α(z) = α(x)≻(y≻z)",
        ),
        DipterousSide::Right => (
            trilinear(n, b, |x, y, z| o(&o(x, y), &al(z)).sub(&o(&al(x), &st(y, z)))),
            "(x≺y)≺α(z) = α(x)≺(y∗z)",
        ),
    };
    Ok(AxiomReport::new(
        format!("Hom-dipterous ({})", side.name()),
        vec![
            IdentityRecord::new(1, text, mixed),
            IdentityRecord::new(2, "(x∗y)∗α(z) = α(x)∗(y∗z)", hom_associativity(star, alpha)?),
        ],
    ))
}

/// The triple system for one product:
/// `((((x•y)•α(z))•α(u))•α(w) = ((α(x)•(y•z))•α(u))•α(w) = α(x)•(α(y)•((z•u)•α(w)))`,
/// checked as two identities on all `n⁵` basis tuples.
pub fn check_triple_system(a: &HomDialgebra, side: Side) -> AxiomReport {
    let n = a.dim();
    let e = basis(n, a.backend());
    let m = |x: &Vector, y: &Vector| a.mul(side, x, y);
    let al = |x: &Vector| a.alpha_of(x);
    let mut first = Vec::new();
    let mut second = Vec::new();
    for x in 0..n {
        let ax = al(&e[x]);
        for y in 0..n {
            let ay = al(&e[y]);
            let xy = m(&e[x], &e[y]);
            for z in 0..n {
                let xy_z = m(&xy, &al(&e[z]));
                let x_yz = m(&ax, &m(&e[y], &e[z]));
                for u in 0..n {
                    let au = al(&e[u]);
                    let (t1u, t2u) = (m(&xy_z, &au), m(&x_yz, &au));
                    let zu = m(&e[z], &e[u]);
                    for w in 0..n {
                        let aw = al(&e[w]);
                        let t1 = m(&t1u, &aw);
                        let t2 = m(&t2u, &aw);
                        let t3 = m(&ax, &m(&ay, &m(&zu, &aw)));
                        let at = vec![x, y, z, u, w];
                        let d12 = t1.sub(&t2);
                        if !d12.is_zero() {
                            first.push(Violation { at: at.clone(), residual: d12 });
                        }
                        let d23 = t2.sub(&t3);
                        if !d23.is_zero() {
                            second.push(Violation { at, residual: d23 });
                        }
                    }
                }
            }
        }
    }
    let s = side.symbol();
    AxiomReport::new(
        format!("{} (triple system, {s})", a.name()),
        vec![
            IdentityRecord::new(1, format!("(((x{s}y){s}α(z)){s}α(u)){s}α(w) = ((α(x){s}(y{s}z)){s}α(u)){s}α(w)"), first),
            IdentityRecord::new(2, format!("((α(x){s}(y{s}z)){s}α(u)){s}α(w) = α(x){s}(α(y){s}((z{s}u){s}α(w)))"), second),
        ],
    )
}
