//! The `lieforge` command line.
//!
//! Every verb prints one report envelope
//! `{tool_version, command, convention, payload, provenance}`; JSON keys are
//! sorted. Exit status is 0 on success, 2 when a Jacobi sweep finds
//! violations and 1 on usage or internal errors. The worker count changes
//! only wall time, so it is not echoed and output is identical across it.

pub mod names;
pub mod render;

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::builder::classical::{so_chain, sp_chain, su_chain};
use crate::builder::exceptional::{build_exceptional, spinor_extension, EXCEPTIONAL};
use crate::builder::format::{export, parse};
use crate::builder::killing::{cartan_subalgebra, is_compact_semisimple};
use crate::builder::matrices::{so_table, sp_table, su_table};
use crate::builder::{check_well_formed, verify_jacobi_with, BuildError, JacobiReport, StructureTable};
use crate::kostant::{multiplets, spin_split_under_u, EqualRankPair, KostantError, RootRef, DEFAULT_CAP};
use crate::rootsys::{build_root_system, fundamental_dims, Family, RootError, NODE_CONVENTION};
use crate::topol::{all_cosets, coset_dim, coset_preset, sphere_structure_report, COMPUTED, REFERENCE_DATA};

pub use names::{canonical_label, parse_group, parse_simple, GroupName};
pub use render::Format;

pub const WORKERS_ENV: &str = "LIEFORGE_WORKERS";

#[derive(Parser, Debug, Clone)]
#[command(name = "lieforge", version, about = "Exact Lie algebra construction and root-system reports")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Threads for Jacobi sweeps.
    #[arg(long, env = WORKERS_ENV, default_value_t = 1, global = true)]
    pub workers: usize,
    /// Maximum Weyl-orbit points enumerated.
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    pub cap: usize,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verb {
    /// Build G2, F4, E6, E7, E8, so(n), su(n), sp(n) or so(n)+spin.
    Build {
        target: String,
        /// Re-run the Jacobi sweep and check the Killing form and Cartan rank.
        #[arg(long)]
        verify: bool,
    },
    /// Jacobi sweep of a structure-constant file.
    Verify { file: PathBuf },
    /// Root system of a simple group.
    Roots { group: String },
    Exponents { group: String },
    /// Fundamental-module dimensions.
    Dims { group: String },
    /// Kostant multiplet of an equal-rank pair, e.g. `F4 B4` or `SU(5) U(4)`.
    Kostant {
        big: String,
        small: Option<String>,
        /// Named pair: F4/B4, A4/A3+t or C3/C1xC2.
        #[arg(long)]
        preset: Option<String>,
        /// Simple roots of the subgroup: 1-based indices or `-theta`, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        roots: Option<Vec<String>>,
        #[arg(long, default_value_t = 0)]
        torus: usize,
    },
    /// Spin(2n) module under U(n).
    Spinsplit { n: usize },
    Topology { group: String },
    /// Homogeneous-space dimensions; all known spaces when none is named.
    Coset { space: Option<String> },
    /// Build a target and print its structure-constant file.
    Export {
        target: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parse and verify a structure-constant file.
    Import { file: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Violations(Value),
}

impl From<BuildError> for Failure {
    fn from(e: BuildError) -> Self {
        match e {
            BuildError::JacobiFailure(r) => Failure::Violations(json!({ "jacobi": *r })),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<KostantError> for Failure {
    fn from(e: KostantError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<RootError> for Failure {
    fn from(e: RootError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

/// Payload plus the keys that are reference data rather than computed.
struct Report {
    payload: Value,
    reference: &'static [&'static str],
    failed: bool,
    raw: Option<String>,
}

impl Report {
    fn computed(payload: Value) -> Self {
        Report {
            payload,
            reference: &[],
            failed: false,
            raw: None,
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome {
                        code: 0,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    if cli.workers == 0 {
        return usage("--workers must be at least 1".into());
    }
    let report = match dispatch(cli) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => return usage(msg),
        Err(Failure::Violations(payload)) => Report {
            payload,
            reference: &[],
            failed: true,
            raw: None,
        },
    };
    let code = if report.failed { 2 } else { 0 };
    if let Some(raw) = report.raw {
        return Outcome {
            code,
            stdout: raw,
            stderr: String::new(),
        };
    }
    let provenance: BTreeMap<String, &str> = match &report.payload {
        Value::Object(m) => m
            .keys()
            .map(|k| {
                let tag = if report.reference.contains(&k.as_str()) {
                    REFERENCE_DATA
                } else {
                    COMPUTED
                };
                (k.clone(), tag)
            })
            .collect(),
        _ => BTreeMap::new(),
    };
    let mut command = to_value(&cli.verb);
    if let Value::Object(m) = &mut command {
        m.insert("format".into(), json!(cli.format.name()));
        m.insert("cap".into(), json!(cli.cap));
    }
    let envelope = json!({
        "tool_version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "convention": NODE_CONVENTION,
        "payload": report.payload,
        "provenance": provenance,
    });
    Outcome {
        code,
        stdout: render::render(&envelope, cli.format),
        stderr: if report.failed {
            "Jacobi identity violated\n".into()
        } else {
            String::new()
        },
    }
}

fn usage(msg: String) -> Outcome {
    Outcome {
        code: 1,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    }
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    let workers = cli.workers;
    match &cli.verb {
        Verb::Build { target, verify } => build_report(target, *verify, workers),
        Verb::Verify { file } => {
            let t = parse(&read(file)?)?;
            let jacobi = verify_jacobi_with(&t, workers)?;
            Ok(table_report(&t, jacobi, false))
        }
        Verb::Import { file } => {
            let t = parse(&read(file)?)?;
            let jacobi = verify_jacobi_with(&t, workers)?;
            Ok(table_report(&t, jacobi, true))
        }
        Verb::Export { target, out } => {
            let built = build_target(target, workers)?;
            let text = export(&built.table);
            match out {
                None => Ok(Report {
                    raw: Some(text),
                    ..Report::computed(Value::Null)
                }),
                Some(path) => {
                    std::fs::write(path, &text)
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    Ok(Report::computed(json!({
                        "path": path.display().to_string(),
                        "name": built.table.name,
                        "dim": built.table.dim(),
                        "lines": text.lines().count() - 1,
                    })))
                }
            }
        }
        Verb::Roots { group } => {
            let id = parse_simple(group)?;
            let rs = build_root_system(id)?;
            Ok(Report::computed(json!({
                "group": id,
                "rank": rs.rank(),
                "dim": rs.dim(),
                "cartan_matrix": rs.cartan,
                "positive_root_count": rs.positive_roots.len(),
                "positive_roots": rs.positive_roots,
                "highest_root": rs.highest_root(),
                "height_distribution": rs.height_distribution(),
                "weyl_order": rs.weyl_order,
                "coxeter_number": rs.coxeter_number,
            })))
        }
        Verb::Exponents { group } => {
            let id = parse_simple(group)?;
            let rs = build_root_system(id)?;
            Ok(Report::computed(json!({
                "group": id,
                "exponents": rs.exponents,
                "degrees": rs.degrees,
                "weyl_order": rs.weyl_order,
                "coxeter_number": rs.coxeter_number,
            })))
        }
        Verb::Dims { group } => {
            let id = parse_simple(group)?;
            Ok(Report::computed(json!({
                "group": id,
                "fundamental_dims": fundamental_dims(id)?,
            })))
        }
        Verb::Kostant {
            big,
            small,
            preset,
            roots,
            torus,
        } => {
            let pair = resolve_pair(big, small.as_deref(), preset.as_deref(), roots.as_deref(), *torus)?;
            let m = multiplets(&pair, cli.cap)?;
            let entries: Vec<Value> = m
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "sign": if e.sign > 0 { "+" } else { "-" },
                        "dimension": e.dimension,
                        "weight": e.weight.labels,
                        "charges": e.charges,
                        "length": e.length,
                    })
                })
                .collect();
            Ok(Report::computed(json!({
                "pair": m.pair,
                "euler_number": m.chi,
                "coset_dim": pair.coset_dim(),
                "small_simple_roots": pair.small_simple_roots,
                "entries": entries,
                "signed_sum": m.signed_sum(),
                "unsigned_sum": m.unsigned_sum(),
            })))
        }
        Verb::Spinsplit { n } => {
            if !(1..=12).contains(n) {
                return Err(format!("spinsplit needs 1 <= n <= 12, got {n}").into());
            }
            let entries: Vec<Value> = spin_split_under_u(*n)
                .into_iter()
                .map(|(p, d, s)| json!({"degree": p, "dimension": d, "sign": if s > 0 { "+" } else { "-" }}))
                .collect();
            Ok(Report::computed(json!({
                "n": n,
                "total": 1u64 << n,
                "entries": entries,
            })))
        }
        Verb::Topology { group } => {
            let id = parse_simple(group)?;
            Ok(Report {
                reference: &["torsion_primes", "fibration_notes"],
                ..Report::computed(to_value(&sphere_structure_report(id)))
            })
        }
        Verb::Coset { space } => {
            let entries = match space {
                Some(s) => vec![coset_preset(s).map_err(|e| e.to_string())?],
                None => all_cosets(),
            };
            let rows = entries
                .iter()
                .map(|e| {
                    let dim = coset_dim(e).map_err(|e| e.to_string())?;
                    Ok(json!({
                        "space": e.space_name,
                        "big": e.big.name,
                        "small": e.small.name,
                        "big_dim": e.big.dim(),
                        "small_dim": e.small.dim(),
                        "dim": dim,
                    }))
                })
                .collect::<Result<Vec<_>, String>>()?;
            Ok(Report::computed(json!({ "cosets": rows })))
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn table_report(t: &StructureTable, jacobi: JacobiReport, detail: bool) -> Report {
    let mut payload = json!({
        "name": t.name,
        "dim": t.dim(),
        "jacobi": jacobi,
    });
    if detail {
        payload["nonzero_brackets"] = json!(t.iter().count());
        payload["nonzero_constants"] = json!(t.nnz());
        payload["well_formed"] = json!(check_well_formed(t));
    }
    Report {
        failed: jacobi.violations > 0,
        ..Report::computed(payload)
    }
}

/// A build target on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Exceptional(&'static str),
    So(usize),
    Su(usize),
    Sp(usize),
    SoSpin(usize),
}

pub fn parse_target(s: &str) -> Result<Target, String> {
    let t = s.trim();
    let lower = t.to_ascii_lowercase();
    if let Some(name) = EXCEPTIONAL.iter().find(|n| n.eq_ignore_ascii_case(t)) {
        return Ok(Target::Exceptional(name));
    }
    let number = |rest: &str| -> Option<usize> { rest.strip_suffix(')')?.trim().parse().ok() };
    if let Some(rest) = lower.strip_suffix("+spin") {
        if let Some(n) = rest.trim().strip_prefix("so(").and_then(number) {
            return Ok(Target::SoSpin(n));
        }
    }
    for (prefix, make) in [
        ("so(", Target::So as fn(usize) -> Target),
        ("su(", Target::Su),
        ("sp(", Target::Sp),
    ] {
        if let Some(n) = lower.strip_prefix(prefix).and_then(number) {
            return Ok(make(n));
        }
    }
    let id = parse_simple(t).map_err(|_| {
        format!("unknown build target {s:?}; expected G2, F4, E6, E7, E8, so(n), su(n), sp(n) or so(n)+spin")
    })?;
    let n = id.rank();
    Ok(match id.family() {
        Family::A => Target::Su(n + 1),
        Family::B => Target::So(2 * n + 1),
        Family::C => Target::Sp(n),
        Family::D => Target::So(2 * n),
        _ => Target::Exceptional(EXCEPTIONAL.iter().find(|x| **x == id.to_string()).expect("exceptional")),
    })
}

struct Built {
    table: StructureTable,
    report: JacobiReport,
    summands: Vec<(String, usize)>,
    coefficients: Vec<(String, String)>,
    steps: Vec<Value>,
}

fn build_target(s: &str, workers: usize) -> Result<Built, Failure> {
    let target = parse_target(s)?;
    let classical = |base: StructureTable, chain: Vec<crate::builder::Extension>| -> Result<Built, Failure> {
        let steps = chain
            .iter()
            .map(|e| {
                json!({
                    "name": e.table.name,
                    "dim": e.table.dim(),
                    "violations": e.report.violations,
                    "triples_checked": e.report.triples_checked,
                    "scales": e.scales.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let (table, report) = match chain.into_iter().last() {
            Some(e) => (e.table, e.report),
            None => {
                let r = verify_jacobi_with(&base, workers)?;
                (base, r)
            }
        };
        Ok(Built {
            summands: vec![("adjoint".into(), table.dim())],
            table,
            report,
            coefficients: vec![],
            steps,
        })
    };
    match target {
        Target::Exceptional(name) => exceptional(build_exceptional(name, workers)?),
        Target::SoSpin(n) => exceptional(spinor_extension(n, workers)?),
        Target::So(n) if n >= 2 => classical(so_table(n.min(2)), so_chain(n, workers)?),
        Target::Su(n) if n >= 1 => classical(su_table(1), su_chain(n, workers)?),
        Target::Sp(n) => classical(sp_table(0), sp_chain(n, workers)?),
        other => Err(format!("{other:?} is empty").into()),
    }
}

fn exceptional(b: crate::builder::exceptional::ExceptionalBuild) -> Result<Built, Failure> {
    Ok(Built {
        table: b.table,
        report: b.report,
        summands: b.recipe.summands,
        coefficients: b.coefficients.into_iter().map(|(k, v)| (k, v.to_string())).collect(),
        steps: vec![],
    })
}

fn build_report(target: &str, verify: bool, workers: usize) -> Result<Report, Failure> {
    let b = build_target(target, workers)?;
    let mut payload = json!({
        "name": b.table.name,
        "dim": b.table.dim(),
        "summands": b.summands.iter().map(|(r, d)| json!({"role": r, "dim": d})).collect::<Vec<_>>(),
        "coefficients": b.coefficients.iter().cloned().collect::<BTreeMap<_, _>>(),
        "jacobi": b.report,
        "nonzero_constants": b.table.nnz(),
    });
    if !b.steps.is_empty() {
        payload["steps"] = json!(b.steps);
    }
    let mut failed = b.report.violations > 0;
    if verify {
        let again = verify_jacobi_with(&b.table, workers)?;
        failed |= again.violations > 0;
        payload["jacobi"] = to_value(&again);
        let cartan = cartan_subalgebra(&b.table)?;
        payload["killing"] = json!({
            "negative_definite": is_compact_semisimple(&b.table)?,
            "cartan_rank": cartan.rank,
            "cartan_self_centralizing": cartan.self_centralizing,
        });
    }
    Ok(Report {
        failed,
        ..Report::computed(payload)
    })
}

fn sorted_labels(g: &GroupName) -> (Vec<String>, usize) {
    let mut v: Vec<String> = g.factors.iter().map(|f| canonical_label(*f)).collect();
    v.sort();
    (v, g.torus)
}

fn resolve_pair(
    big: &str,
    small: Option<&str>,
    preset: Option<&str>,
    roots: Option<&[String]>,
    torus: usize,
) -> Result<EqualRankPair, Failure> {
    if let Some(p) = preset {
        return Ok(EqualRankPair::preset(p)?);
    }
    let g = parse_simple(big)?;
    if let Some(refs) = roots {
        let refs = refs
            .iter()
            .map(|r| match r.trim() {
                "-theta" | "lowest" => Ok(RootRef::LowestRoot),
                x => x
                    .parse::<usize>()
                    .map(RootRef::Simple)
                    .map_err(|_| format!("bad root reference {x:?}")),
            })
            .collect::<Result<Vec<_>, String>>()?;
        return Ok(EqualRankPair::new(g, &refs, torus)?);
    }
    let want = match small {
        Some(s) => sorted_labels(&parse_group(s)?),
        None => return Ok(EqualRankPair::identity(g)?),
    };
    let mut candidates = vec![EqualRankPair::identity(g)];
    for name in ["F4/B4", "A4/A3+t", "C3/C1xC2"] {
        if name.starts_with(&g.to_string()) {
            candidates.push(EqualRankPair::preset(name));
        }
    }
    match g.family() {
        Family::A => candidates.push(EqualRankPair::unitary_in_special_unitary(g.rank())),
        Family::D => candidates.push(EqualRankPair::unitary_in_orthogonal(g.rank())),
        _ => {}
    }
    for c in candidates.into_iter().flatten() {
        let got: GroupName = GroupName {
            factors: c.components.iter().map(|(id, _)| *id).collect(),
            torus: c.torus,
        };
        if sorted_labels(&got) == want {
            return Ok(c);
        }
    }
    Err(format!(
        "no built-in embedding of {} in {g}; pass --roots with the subgroup's simple roots",
        small.unwrap_or_default()
    )
    .into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> Value {
        let mut full = vec!["lieforge"];
        full.extend_from_slice(args);
        let o = run_args(full);
        assert_eq!(o.code, 0, "{}", o.stderr);
        serde_json::from_str(&o.stdout).unwrap()
    }

    #[test]
    fn exponents_e8() {
        let v = run_ok(&["exponents", "E8"]);
        assert_eq!(v["payload"]["exponents"], json!([1, 7, 11, 13, 17, 19, 23, 29]));
        assert_eq!(v["convention"], "bourbaki");
    }

    #[test]
    fn kostant_f4_b4() {
        let v = run_ok(&["kostant", "F4", "B4"]);
        let e = v["payload"]["entries"].as_array().unwrap();
        let dims: Vec<u64> = e.iter().map(|x| x["dimension"].as_u64().unwrap()).collect();
        let signs: Vec<&str> = e.iter().map(|x| x["sign"].as_str().unwrap()).collect();
        assert_eq!(dims, vec![44, 128, 84]);
        assert_eq!(signs, vec!["+", "-", "+"]);
        let v = run_ok(&["kostant", "Sp(3)", "Sp(1)xSp(2)"]);
        assert_eq!(v["payload"]["euler_number"], 3);
        let v = run_ok(&["kostant", "SU(5)", "U(4)"]);
        assert_eq!(v["payload"]["unsigned_sum"], 16);
    }

    #[test]
    fn torsion_provenance() {
        let v = run_ok(&["topology", "E8"]);
        assert_eq!(v["provenance"]["torsion_primes"], REFERENCE_DATA);
        assert_eq!(v["provenance"]["poincare"], COMPUTED);
        assert_eq!(v["payload"]["torsion_primes"], json!([2, 3, 5]));
    }

    #[test]
    fn targets() {
        assert_eq!(parse_target("so(9)").unwrap(), Target::So(9));
        assert_eq!(parse_target("SO(9)").unwrap(), Target::So(9));
        assert_eq!(parse_target("B4").unwrap(), Target::So(9));
        assert_eq!(parse_target("SU(5)").unwrap(), Target::Su(5));
        assert_eq!(parse_target("so(11)+spin").unwrap(), Target::SoSpin(11));
        assert_eq!(parse_target("e7").unwrap(), Target::Exceptional("E7"));
        assert!(parse_target("H3").is_err());
    }

    #[test]
    fn usage_errors() {
        for args in [
            vec!["lieforge", "frobnicate"],
            vec!["lieforge", "roots", "U(3)"],
            vec!["lieforge", "spinsplit", "13"],
            vec!["lieforge", "--workers", "0", "roots", "A2"],
            vec!["lieforge", "kostant", "E6", "A5"],
        ] {
            assert_eq!(run_args(args.clone()).code, 1, "{args:?}");
        }
    }
}
