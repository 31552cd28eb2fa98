//! The `hdialg` command line.
//!
//! Exit codes: 0 when every requested check passes, 1 when violations or
//! discrepancies are found, 2 on usage or I/O errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::algebra::{HomDialgebra, LinearMap};
use crate::axioms::{self, AxiomReport};
use crate::catalog::{self, format, ReportOptions, Structure, StructureKind};
use crate::centroids::{self, CentroidVariant};
use crate::constructions::{self, UntwistVariant};
use crate::derivations;
use crate::error::{Error, Result};
use crate::invariants::{self, CompareVerdict, SearchOptions};
use crate::scalar::{self, Backend, Scalar};
use crate::solver::SolutionSpace;

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "hdialg", version, about = "Exact checks for Hom-associative dialgebras")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Tolerance of the complex backend.
    #[arg(long, global = true, value_name = "EPS")]
    eps: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the defining identities and multiplicativity.
    Verify { target: String },
    /// Solve for the αᵏ-derivations.
    Der {
        target: String,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Solve for the centroid.
    Cent {
        target: String,
        #[arg(long, value_enum, default_value_t = Variant::Linear)]
        variant: Variant,
    },
    /// Print the isomorphism fingerprint.
    Fp { target: String },
    /// Compare two algebras up to isomorphism.
    Cmp {
        first: String,
        second: String,
        /// Run the numeric isomorphism search when fingerprints agree.
        #[arg(long)]
        search_iso: bool,
        #[arg(long, default_value_t = 200)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List or verify the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Transport a structure along an invertible map.
    Transport {
        target: String,
        /// Matrix file: n rows of n entries, entry (i, j) the coefficient of e_i in Φ(e_j).
        #[arg(long, conflicts_with = "random", required_unless_present = "random")]
        matrix: Option<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build a related structure.
    Construct { kind: ConstructKind, target: String },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// List the entries.
    List,
    /// Verify every entry against its printed claims.
    Report {
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Parameter overrides, e.g. `a=2,b=1/2`.
        #[arg(long)]
        params: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Variant {
    Linear,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    /// Hom-Zinbiel → Hom-dendriform.
    Zinbiel2dend,
    /// Hom-Zinbiel → commutative Hom-associative product.
    Symmetrize,
    /// Untwisted dipterous algebra + endomorphism → Hom-dipterous algebra.
    Diptwist,
    /// Compose the products with α and reset α to the identity.
    Untwist,
}

struct Output {
    code: i32,
    text: String,
}

impl Output {
    fn new(code: i32, text: String) -> Self {
        Output { code, text }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run(argv: &[String]) -> Outcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if let Some(eps) = cli.eps {
        if !(eps.is_finite() && eps >= 0.0) {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: --eps must be a finite nonnegative number, got {eps}\n"),
            };
        }
        scalar::set_epsilon(eps);
    }
    match dispatch(&cli) {
        Ok(out) => Outcome {
            code: out.code,
            stdout: out.text,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// A resolved target and, for catalog targets, the entry id.
struct Target {
    structure: Structure,
    catalog_id: Option<String>,
}

fn load(spec: &str) -> Result<Target> {
    if let Some(id) = spec.strip_prefix("catalog:") {
        let inst = catalog::get(id, None)?;
        return Ok(Target {
            catalog_id: Some(inst.entry.id().to_string()),
            structure: inst.structure,
        });
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Error::Io(format!("{spec}: {e}")))?;
    let structure = format::parse(&text).map_err(|e| match e {
        Error::Parse { line, message } => Error::Io(format!("{spec}: line {line}: {message}")),
        other => other,
    })?;
    Ok(Target { structure, catalog_id: None })
}

fn require_dialgebra(t: &Target) -> Result<&HomDialgebra> {
    match t.structure.kind {
        StructureKind::Dialgebra => Ok(&t.structure.algebra),
        other => Err(Error::precondition(format!("this command needs a dialgebra, the target is {other}"))),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON serialization");
    s.push('\n');
    s
}

fn map_rows(m: &LinearMap) -> Vec<Vec<String>> {
    m.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Verify { target } => verify(&load(target)?, cli.json),
        Command::Der { target, k } => der(&load(target)?, *k, cli.json),
        Command::Cent { target, variant } => cent(&load(target)?, *variant, cli.json),
        Command::Fp { target } => {
            let t = load(target)?;
            let fp = invariants::fingerprint(require_dialgebra(&t)?);
            let text = if cli.json { to_json(&fp) } else { format!("{fp}") };
            Ok(Output::new(0, text))
        }
        Command::Cmp {
            first,
            second,
            search_iso,
            budget,
            seed,
        } => {
            let (a, b) = (load(first)?, load(second)?);
            let search = search_iso.then_some(SearchOptions {
                budget: *budget,
                seed: *seed,
            });
            let verdict = invariants::compare(require_dialgebra(&a)?, require_dialgebra(&b)?, search);
            let code = i32::from(matches!(verdict, CompareVerdict::Unknown { .. }));
            let text = if cli.json { to_json(&verdict) } else { format!("{verdict}\n") };
            Ok(Output::new(code, text))
        }
        Command::Catalog { action } => catalog_cmd(action, cli.json),
        Command::Transport {
            target,
            matrix,
            random,
            seed,
        } => {
            let t = load(target)?;
            let a = &t.structure.algebra;
            let phi = match matrix {
                Some(path) => read_matrix(path, a.dim(), a.backend())?,
                None => {
                    debug_assert!(*random);
                    let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                    constructions::random_invertible_map(a.dim(), a.backend(), &mut rng)
                }
            };
            let moved = Structure {
                kind: t.structure.kind,
                algebra: constructions::transport(a, &phi)?,
            };
            let text = format::serialize(&moved);
            let text = if cli.json { to_json(&json!({ "phi": map_rows(&phi), "algebra": text })) } else { text };
            Ok(Output::new(0, text))
        }
        Command::Construct { kind, target } => construct(*kind, &load(target)?, cli.json),
    }
}

fn report_text(out: &mut String, label: &str, r: &AxiomReport) {
    let _ = writeln!(out, "{label}: {}/{} {} pass", r.passing(), r.identities.len(), r.structure);
    for rec in &r.identities {
        let status = if rec.pass { "pass".to_string() } else { format!("FAIL ({} violations)", rec.violations.len()) };
        let _ = writeln!(out, "  [{}] {}: {status}", rec.id, rec.identity);
        for v in rec.violations.iter().take(5) {
            let _ = writeln!(out, "      at {v}");
        }
    }
}

fn verify(t: &Target, json: bool) -> Result<Output> {
    let a = &t.structure.algebra;
    let mut report = t.structure.check()?;
    if t.structure.kind == StructureKind::Dialgebra {
        report.structure = "axioms".into();
    }
    let mult = axioms::check_multiplicativity(a);
    let code = i32::from(!(report.pass() && mult.pass()));
    if json {
        let v = json!({
            "id": a.name(),
            "structure": t.structure.kind.name(),
            "axioms": report,
            "multiplicative": mult.pass(),
            "multiplicativity": mult,
        });
        return Ok(Output::new(code, to_json(&v)));
    }
    let mut out = String::new();
    report_text(&mut out, a.name(), &report);
    let _ = writeln!(out, "multiplicativity: {}", if mult.pass() { "pass" } else { "FAIL" });
    if !mult.pass() {
        report_text(&mut out, "  multiplicativity", &mult);
    }
    Ok(Output::new(code, out))
}

fn basis_text(out: &mut String, space: &SolutionSpace, n: usize) -> Result<Vec<Vec<Vec<String>>>> {
    let maps = space.basis_maps(n)?;
    for (i, m) in maps.iter().enumerate() {
        let _ = writeln!(out, "basis element {} (column j is the image of e_j):", i + 1);
        let _ = writeln!(out, "{m}");
    }
    Ok(maps.iter().map(map_rows).collect())
}

fn claim_check(out: &mut String, claim: Option<usize>, computed: usize) -> i32 {
    match claim {
        Some(c) if c != computed => {
            let _ = writeln!(out, "discrepancy: printed dimension {c}, computed {computed}");
            1
        }
        Some(_) => {
            let _ = writeln!(out, "matches printed dimension");
            0
        }
        None => 0,
    }
}

fn der(t: &Target, k: u32, json: bool) -> Result<Output> {
    let a = require_dialgebra(t)?;
    let space = derivations::derivation_space(a, k);
    let claim = match (&t.catalog_id, k) {
        (Some(id), 1) => catalog::entry(id)?.der_dim_claimed(),
        _ => None,
    };
    let mut out = String::new();
    let _ = writeln!(out, "α^{k}-derivations of {}: dimension {}", a.name(), space.dim());
    let basis = basis_text(&mut out, &space, a.dim())?;
    let code = claim_check(&mut out, claim, space.dim());
    if json {
        let v = json!({ "id": a.name(), "k": k, "dim": space.dim(), "dim_claimed": claim, "basis": basis });
        return Ok(Output::new(code, to_json(&v)));
    }
    Ok(Output::new(code, out))
}

fn cent(t: &Target, variant: Variant, json: bool) -> Result<Output> {
    let a = require_dialgebra(t)?;
    let claim = match &t.catalog_id {
        Some(id) => catalog::entry(id)?.cent_dim_claimed(),
        None => None,
    };
    let result = centroids::centroid(a)?;
    let mut out = String::new();
    let _ = writeln!(out, "linear centroid of {}: dimension {}", a.name(), result.linear.dim());
    let basis = basis_text(&mut out, &result.linear, a.dim())?;
    let code = claim_check(&mut out, claim, result.linear.dim());
    let variant = match variant {
        Variant::Linear => CentroidVariant::Linear,
        Variant::Full => CentroidVariant::Full,
    };
    let mut full = serde_json::Value::Null;
    if variant == CentroidVariant::Full {
        if result.closed {
            let _ = writeln!(out, "full centroid: closed, dimension {}", result.linear.dim());
        } else {
            let _ = writeln!(out, "full centroid: not a linear space; {} quadratic constraints:", result.constraints.len());
            for c in &result.constraints {
                let _ = writeln!(out, "  {c}");
            }
            if let Some(points) = result.single_parameter_points() {
                let pts: Vec<String> = points.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "admissible multiples of the basis element: {{{}}}", pts.join(", "));
            }
        }
        full = json!({
            "closed": result.closed,
            "dim": result.full_dim_if_closed(),
            "constraints": result.constraints.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "points": result.single_parameter_points().map(|p| p.iter().map(ToString::to_string).collect::<Vec<_>>()),
        });
    }
    if json {
        let v = json!({
            "id": a.name(),
            "variant": if variant == CentroidVariant::Full { "full" } else { "linear" },
            "dim_linear": result.linear.dim(),
            "dim_claimed": claim,
            "basis": basis,
            "full": full,
        });
        return Ok(Output::new(code, to_json(&v)));
    }
    Ok(Output::new(code, out))
}

fn parse_params(text: &str) -> Result<BTreeMap<String, Scalar>> {
    let mut out = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| Error::precondition(format!("parameter `{item}` is not of the form name=value")))?;
        let v = Scalar::parse(value, Backend::Rational).or_else(|_| Scalar::parse(value, Backend::Complex))?;
        out.insert(name.trim().to_string(), v);
    }
    Ok(out)
}

fn catalog_cmd(action: &CatalogAction, json: bool) -> Result<Output> {
    match action {
        CatalogAction::List => {
            let rows: Vec<_> = catalog::entries()
                .map(|e| (e.id(), e.kind().name(), e.dim(), e.backend().name(), e.params().join(",")))
                .collect();
            if json {
                let v: Vec<_> = rows
                    .iter()
                    .map(|(id, kind, dim, backend, params)| json!({"id": id, "structure": kind, "dim": dim, "scalars": backend, "params": params}))
                    .collect();
                return Ok(Output::new(0, to_json(&v)));
            }
            let mut out = String::new();
            for (id, kind, dim, backend, params) in rows {
                let _ = writeln!(out, "{id:<8} {kind:<15} dim {dim}  {backend:<8} {params}");
            }
            Ok(Output::new(0, out))
        }
        CatalogAction::Report { out, params } => {
            let options = ReportOptions {
                params: params.as_deref().map(parse_params).transpose()?.unwrap_or_default(),
                ..ReportOptions::default()
            };
            let report = catalog::verify_all(&options)?;
            let json_text = to_json(&report);
            if let Some(path) = out {
                std::fs::write(path, &json_text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            }
            let code = i32::from(report.discrepancy_count() > 0);
            let text = if json { json_text } else { format!("{report}\n") };
            Ok(Output::new(code, text))
        }
    }
}

fn read_matrix(path: &Path, n: usize, backend: Backend) -> Result<LinearMap> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut rows = Vec::new();
    let mut last = 0;
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let cells: Vec<&str> = body.split_whitespace().collect();
        if cells.is_empty() {
            continue;
        }
        last = i + 1;
        let at = |m: String| Error::Io(format!("{}: line {}: {m}", path.display(), i + 1));
        if cells.len() != n {
            return Err(at(format!("expected {n} entries, found {}", cells.len())));
        }
        let row = cells.iter().map(|c| Scalar::parse(c, backend).map_err(|e| at(e.to_string()))).collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::Io(format!("{}: line {}: expected {n} rows, found {}", path.display(), last.max(1), rows.len())));
    }
    LinearMap::from_rows(rows)
}

fn construct(kind: ConstructKind, t: &Target, json: bool) -> Result<Output> {
    let a = &t.structure.algebra;
    if kind == ConstructKind::Diptwist && !matches!(t.structure.kind, StructureKind::Dipterous(_)) {
        return Err(Error::precondition("diptwist needs a dipterous target"));
    }
    if kind == ConstructKind::Untwist {
        require_dialgebra(t)?;
    }
    // An input that fails the construction's hypothesis is a finding, not a usage error.
    let built = (|| -> Result<(Structure, AxiomReport)> {
        Ok(match kind {
        ConstructKind::Zinbiel2dend => {
            let d = constructions::zinbiel_to_dendriform(a.left(), a.alpha())?;
            let alg = HomDialgebra::new(format!("{} (dendriform)", a.name()), d.prec, d.succ, d.alpha)?;
            (Structure { kind: StructureKind::Dendriform, algebra: alg }, d.report)
        }
        ConstructKind::Symmetrize => {
            let (m, report) = constructions::symmetrize_zinbiel(a.left(), a.alpha())?;
            let alg = HomDialgebra::new(format!("{} (symmetrized)", a.name()), m.clone(), m, a.alpha().clone())?;
            (Structure::dialgebra(alg), report)
        }
        ConstructKind::Diptwist => {
            let StructureKind::Dipterous(side) = t.structure.kind else { unreachable!("checked above") };
            let d = constructions::yau_twist_dipterous(a.left(), a.right(), a.alpha(), side)?;
            let alg = HomDialgebra::new(format!("{} (twisted)", a.name()), d.star, d.other, d.alpha)?;
            (Structure { kind: t.structure.kind, algebra: alg }, d.report)
        }
        ConstructKind::Untwist => {
            let (u, report) = constructions::untwist_candidate(require_dialgebra(t)?, UntwistVariant::Literal)?;
            (Structure::dialgebra(u), report)
        }
        })
    })();
    let (structure, report) = match built {
        Ok(b) => b,
        Err(Error::Precondition(msg)) => return Ok(Output::new(1, format!("hypothesis not met: {msg}\n"))),
        Err(e) => return Err(e),
    };
    let code = i32::from(!report.pass());
    let text = format::serialize(&structure);
    if json {
        return Ok(Output::new(code, to_json(&json!({ "algebra": text, "report": report }))));
    }
    let mut out = text;
    report_text(&mut out, "construction", &report);
    Ok(Output::new(code, out))
}
