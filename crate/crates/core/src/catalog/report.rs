//! Batch verification of every catalog entry against its printed claims.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{entries, CatalogEntry, Instance, Printed, StructureKind};
use crate::algebra::{LinearMap, Side};
use crate::axioms::{self, AxiomReport};
use crate::centroids::{self, CentralIdentityAudit};
use crate::derivations;
use crate::error::Result;
use crate::invariants::{self, Fingerprint};
use crate::scalar::Scalar;
use crate::solver::SolutionSpace;

/// What `verify_all` computes beyond the per-entry basics.
#[derive(Clone, Debug)]
pub struct ReportOptions {
    /// Overrides for the default instantiation; names an entry does not use
    /// are ignored for that entry.
    pub params: BTreeMap<String, Scalar>,
    /// Also instantiate parametric entries with every parameter 0, 1 and 2.
    pub sweeps: bool,
    /// Run the composition and central-derivation audits.
    pub audits: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            params: BTreeMap::new(),
            sweeps: true,
            audits: true,
        }
    }
}

/// A difference between what was computed and what is printed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discrepancy {
    pub code: &'static str,
    pub detail: String,
}

impl Discrepancy {
    fn new(code: &'static str, detail: impl Into<String>) -> Self {
        Discrepancy { code, detail: detail.into() }
    }
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.detail)
    }
}

/// How a printed matrix family compares with the computed space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrintedCheck {
    pub claimed_dim: usize,
    /// `false` when the printed entries are not linear in their symbols.
    pub parsed: bool,
    pub symbols: Vec<String>,
    /// Symbols whose matrix (that symbol 1, the rest 0) is not in the space.
    pub non_members: Vec<String>,
    /// Dimension of the span of the printed matrices.
    pub printed_span_dim: Option<usize>,
    /// The printed span equals the computed space.
    pub equals_computed: Option<bool>,
}

/// Whether `inner_map(A, f, 1, side)` is an α²-derivation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InnerMapRecord {
    pub fixed_point: String,
    pub side: &'static str,
    pub is_derivation: bool,
}

/// Counts over all pairs `(φ, d)` of centroid and derivation basis maps.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompositionSummary {
    pub pairs: usize,
    /// Pairs where `φ∘d` is an α-derivation.
    pub phi_d_derivation: usize,
    /// Pairs where `d∘φ ∈ Cent` agrees with `φ∘d` being central.
    pub equivalence_agrees: usize,
    /// Pairs where `[d, φ]` is a central derivation.
    pub bracket_central: usize,
    /// 1-based indices `(φ, d)` of pairs where `φ∘d` is not a derivation.
    pub failing_pairs: Vec<(usize, usize)>,
}

/// One instantiation of a parametric entry.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRecord {
    pub value: i64,
    pub axioms_pass: bool,
    pub multiplicative: bool,
    pub der_dim: Option<usize>,
    pub cent_dim_linear: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub structure: &'static str,
    pub dim: usize,
    pub backend: &'static str,
    pub params: BTreeMap<String, String>,
    pub axioms: AxiomReport,
    pub multiplicative: bool,
    /// Dimension of the α-derivations (k = 1).
    pub der_dim: Option<usize>,
    /// Dimensions of the αᵏ-derivations for k = 0, 1, 2.
    pub der_dims_by_k: Vec<usize>,
    /// Dimension listed with the entry, compared against `der_dim`.
    #[serde(rename = "der_dim_paper")]
    pub der_dim_claimed: Option<usize>,
    pub der_printed: Option<PrintedCheck>,
    pub cent_dim_linear: Option<usize>,
    /// Dimension of the full centroid when the linear stage is closed under the quadratic constraints.
    pub cent_dim_full_closed: Option<usize>,
    /// For a non-closed one-parameter linear stage, the admissible parameter values.
    pub cent_points: Option<Vec<String>>,
    #[serde(rename = "cent_dim_paper")]
    pub cent_dim_claimed: Option<usize>,
    pub cent_printed: Option<PrintedCheck>,
    pub inner_maps: Vec<InnerMapRecord>,
    pub composition: Option<CompositionSummary>,
    pub central_identity: Option<CentralIdentityAudit>,
    pub sweeps: Vec<SweepRecord>,
    pub fingerprint: Option<Fingerprint>,
    pub notes: Vec<String>,
    pub discrepancies: Vec<Discrepancy>,
}

/// Observed range of a dimension over one size class versus the printed range.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RangeCheck {
    pub quantity: &'static str,
    pub dim: usize,
    pub claimed_range: (usize, usize),
    pub observed_range: Option<(usize, usize)>,
    pub within: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<EntryReport>,
    pub ranges: Vec<RangeCheck>,
    pub notes: Vec<&'static str>,
}

impl VerificationReport {
    pub fn discrepancy_count(&self) -> usize {
        self.entries.iter().map(|e| e.discrepancies.len()).sum()
    }

    pub fn entry(&self, id: &str) -> Option<&EntryReport> {
        self.entries.iter().find(|e| e.id == id)
    }
}

const GLOBAL_NOTES: &[&str] = &[
    "fingerprint fields are this toolkit's own choice of invariants",
    "centroid dimensions are compared against the linear stage; the full centroid is reported when the quadratic constraints hold identically",
    "printed matrices are read with row i holding the image of e_i",
];

const CLAIMED_RANGES: &[(&str, usize, (usize, usize))] = &[
    ("derivations", 2, (0, 2)),
    ("derivations", 3, (0, 3)),
    ("derivations", 4, (1, 4)),
    ("centroids", 2, (1, 3)),
    ("centroids", 3, (1, 5)),
    ("centroids", 4, (0, 6)),
];

fn printed_check(p: Printed, computed: &SolutionSpace, member: impl Fn(&LinearMap) -> bool) -> Result<PrintedCheck> {
    let symbols = p.symbols();
    let Some(maps) = p.maps(computed.backend()) else {
        return Ok(PrintedCheck {
            claimed_dim: p.dim,
            parsed: false,
            symbols,
            non_members: Vec::new(),
            printed_span_dim: None,
            equals_computed: None,
        });
    };
    let maps = maps?;
    let n = maps.first().map_or(0, |(_, m)| m.dim());
    let non_members = maps.iter().filter(|(_, m)| !member(m)).map(|(s, _)| s.clone()).collect();
    let vectors: Vec<Vec<Scalar>> = maps.iter().map(|(_, m)| m.to_unknowns()).collect();
    let span = SolutionSpace::from_span(n * n, computed.backend(), &vectors)?;
    Ok(PrintedCheck {
        claimed_dim: p.dim,
        parsed: true,
        symbols,
        non_members,
        printed_span_dim: Some(span.dim()),
        equals_computed: Some(span.same_subspace(computed)),
    })
}

fn printed_discrepancies(what: &str, check: &PrintedCheck, out: &mut Vec<Discrepancy>) {
    if !check.parsed {
        out.push(Discrepancy::new("PRINTED_NONLINEAR", format!("printed {what} matrix is not linear in its symbols")));
        return;
    }
    if !check.non_members.is_empty() {
        out.push(Discrepancy::new(
            "PRINTED_MATRIX_NOT_MEMBER",
            format!("printed {what} matrices for {} fail the defining identities", check.non_members.join(", ")),
        ));
    }
    if check.printed_span_dim != Some(check.claimed_dim) {
        out.push(Discrepancy::new(
            "PRINTED_DIM_INCONSISTENT",
            format!(
                "printed {what} matrix has {} free entries but claims dimension {}",
                check.printed_span_dim.unwrap_or(0),
                check.claimed_dim
            ),
        ));
    }
    if check.equals_computed == Some(false) {
        out.push(Discrepancy::new("PRINTED_SPACE_DIFFERS", format!("printed {what} span differs from the computed space")));
    }
}

fn sweep(entry: &CatalogEntry, value: i64) -> Result<SweepRecord> {
    let inst = entry.instantiate(&entry.uniform_params(value))?;
    let a = inst.algebra();
    let dialgebra = inst.structure.kind == StructureKind::Dialgebra;
    Ok(SweepRecord {
        value,
        axioms_pass: inst.structure.check()?.pass(),
        multiplicative: axioms::check_multiplicativity(a).pass(),
        der_dim: dialgebra.then(|| derivations::derivation_space(a, 1).dim()),
        cent_dim_linear: dialgebra.then(|| centroids::linear_centroid_space(a).dim()),
    })
}

fn composition_summary(inst: &Instance, cent: &SolutionSpace, der: &SolutionSpace) -> Result<CompositionSummary> {
    let a = inst.algebra();
    let n = a.dim();
    let mut s = CompositionSummary {
        pairs: 0,
        phi_d_derivation: 0,
        equivalence_agrees: 0,
        bracket_central: 0,
        failing_pairs: Vec::new(),
    };
    for (pi, phi) in cent.basis_maps(n)?.iter().enumerate() {
        for (di, d) in der.basis_maps(n)?.iter().enumerate() {
            let audit = centroids::composition_audit(a, phi, d)?;
            s.pairs += 1;
            if audit.phi_d_is_derivation {
                s.phi_d_derivation += 1;
            } else {
                s.failing_pairs.push((pi + 1, di + 1));
            }
            s.equivalence_agrees += usize::from(audit.equivalence_holds());
            s.bracket_central += usize::from(audit.bracket_central);
        }
    }
    Ok(s)
}

/// Verifies one catalog entry.
pub fn verify_entry(entry: &CatalogEntry, options: &ReportOptions) -> Result<EntryReport> {
    let mut params = entry.uniform_params(1);
    for (k, v) in &options.params {
        if let Some(slot) = params.get_mut(k) {
            *slot = v.clone();
        }
    }
    let inst = entry.instantiate(&params)?;
    let a = inst.algebra();
    let n = a.dim();
    let axioms = inst.structure.check()?;
    let multiplicative = axioms::check_multiplicativity(a).pass();
    let mut discrepancies = Vec::new();
    for note in entry.notes() {
        if let Some(rest) = note.strip_prefix("UNPARSEABLE_AS_PRINTED: ") {
            discrepancies.push(Discrepancy::new("UNPARSEABLE_AS_PRINTED", rest));
        }
    }
    if let Some((rec, v)) = axioms.first_violation() {
        discrepancies.push(Discrepancy::new(
            "AXIOM_FAILURE",
            format!("identity {} ({}) fails at {v}; {} violations in total", rec.id, rec.identity, axioms.violation_count()),
        ));
    }
    if !multiplicative {
        discrepancies.push(Discrepancy::new("NOT_MULTIPLICATIVE", "α is not multiplicative for both products"));
    }

    let mut report = EntryReport {
        id: entry.id().to_string(),
        structure: entry.kind().name(),
        dim: n,
        backend: a.backend().name(),
        params: inst.params.iter().map(|(k, v)| (k.clone(), v.to_string())).collect(),
        axioms,
        multiplicative,
        der_dim: None,
        der_dims_by_k: Vec::new(),
        der_dim_claimed: entry.der_dim_claimed(),
        der_printed: None,
        cent_dim_linear: None,
        cent_dim_full_closed: None,
        cent_points: None,
        cent_dim_claimed: entry.cent_dim_claimed(),
        cent_printed: None,
        inner_maps: Vec::new(),
        composition: None,
        central_identity: None,
        sweeps: Vec::new(),
        fingerprint: None,
        notes: entry.notes().iter().map(|s| s.to_string()).collect(),
        discrepancies: Vec::new(),
    };

    if options.sweeps && !entry.params().is_empty() {
        report.sweeps = [0, 1, 2].into_iter().map(|v| sweep(entry, v)).collect::<Result<_>>()?;
    }

    if entry.kind() != StructureKind::Dialgebra {
        report.discrepancies = discrepancies;
        return Ok(report);
    }

    let der = derivations::derivation_space(a, 1);
    report.der_dim = Some(der.dim());
    report.der_dims_by_k = (0..3).map(|k| derivations::derivation_space(a, k).dim()).collect();
    if let Some(claim) = entry.der_dim_claimed() {
        if claim != der.dim() {
            discrepancies.push(Discrepancy::new("DER_DIM_MISMATCH", format!("computed {} versus printed {claim}", der.dim())));
        }
    }
    if let Some(p) = entry.printed_derivations() {
        let check = printed_check(p, &der, |m| derivations::is_derivation(a, m, 1).is_ok_and(|r| r.pass()))?;
        printed_discrepancies("derivation", &check, &mut discrepancies);
        report.der_printed = Some(check);
    }

    let cent = centroids::centroid(a)?;
    report.cent_dim_linear = Some(cent.linear.dim());
    report.cent_dim_full_closed = cent.full_dim_if_closed();
    report.cent_points = cent.single_parameter_points().map(|pts| pts.iter().map(ToString::to_string).collect());
    if !cent.closed {
        discrepancies.push(Discrepancy::new(
            "CENTROID_NOT_CLOSED",
            format!("{} quadratic constraints do not vanish on the linear stage", cent.constraints.len()),
        ));
    }
    if let Some(claim) = entry.cent_dim_claimed() {
        if claim != cent.linear.dim() {
            discrepancies.push(Discrepancy::new(
                "CENT_DIM_MISMATCH",
                format!("computed linear dimension {} versus printed {claim}", cent.linear.dim()),
            ));
        }
    }
    if let Some(p) = entry.printed_centroids() {
        let check = printed_check(p, &cent.linear, |m| centroids::centroid_residual(a, m).iter().all(Scalar::is_zero))?;
        printed_discrepancies("centroid", &check, &mut discrepancies);
        report.cent_printed = Some(check);
    }

    let fixed = derivations::alpha_fixed_points(a);
    for f in fixed.basis_vectors() {
        for side in Side::BOTH {
            let d = derivations::inner_map(a, &f, 1, side)?;
            report.inner_maps.push(InnerMapRecord {
                fixed_point: f.to_string(),
                side: side.symbol(),
                is_derivation: derivations::is_derivation(a, &d, 2)?.pass(),
            });
        }
    }

    if options.audits && report.axioms.pass() {
        report.composition = Some(composition_summary(&inst, &cent.linear, &der)?);
        report.central_identity = Some(centroids::central_identity_audit(a)?);
    }
    report.fingerprint = Some(invariants::fingerprint(a));
    report.discrepancies = discrepancies;
    Ok(report)
}

/// Verifies every catalog entry, in catalog order.
pub fn verify_all(options: &ReportOptions) -> Result<VerificationReport> {
    let all: Vec<CatalogEntry> = entries().collect();
    let results: Vec<Result<EntryReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = all.iter().map(|e| scope.spawn(|| verify_entry(e, options))).collect();
        handles.into_iter().map(|h| h.join().expect("entry verification panicked")).collect()
    });
    let reports = results.into_iter().collect::<Result<Vec<_>>>()?;
    let ranges = CLAIMED_RANGES
        .iter()
        .map(|&(quantity, dim, claimed_range)| {
            let dims: Vec<usize> = reports
                .iter()
                .filter(|r| r.structure == "dialgebra" && r.dim == dim && r.axioms.pass())
                .filter_map(|r| if quantity == "derivations" { r.der_dim } else { r.cent_dim_linear })
                .collect();
            let observed_range = dims.iter().min().zip(dims.iter().max()).map(|(a, b)| (*a, *b));
            RangeCheck {
                quantity,
                dim,
                claimed_range,
                observed_range,
                within: observed_range.is_some_and(|(lo, hi)| lo >= claimed_range.0 && hi <= claimed_range.1),
            }
        })
        .collect();
    Ok(VerificationReport {
        entries: reports,
        ranges,
        notes: GLOBAL_NOTES.to_vec(),
    })
}

impl fmt::Display for EntryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |d| d.to_string());
        write!(
            f,
            "{:<8} {:<15} axioms {}/{} mult {} der {} (printed {}) cent {} (printed {}) discrepancies {}",
            self.id,
            self.structure,
            self.axioms.passing(),
            self.axioms.identities.len(),
            if self.multiplicative { "yes" } else { "no" },
            opt(self.der_dim),
            opt(self.der_dim_claimed),
            opt(self.cent_dim_linear),
            opt(self.cent_dim_claimed),
            self.discrepancies.len()
        )
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{e}")?;
            for d in &e.discrepancies {
                writeln!(f, "    {d}")?;
            }
        }
        for r in &self.ranges {
            let observed = r.observed_range.map_or("none".to_string(), |(a, b)| format!("{a}..{b}"));
            writeln!(
                f,
                "range {} dim {}: observed {observed}, printed {}..{} ({})",
                r.quantity,
                r.dim,
                r.claimed_range.0,
                r.claimed_range.1,
                if r.within { "within" } else { "outside" }
            )?;
        }
        write!(f, "{} discrepancies", self.discrepancy_count())
    }
}
