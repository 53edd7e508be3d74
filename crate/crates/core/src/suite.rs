//! Manifest-driven batch runs producing a machine-readable report.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::coloring::{color_with_stats, oracle_chi_a, palette_size, verify_acyclic, OracleResult, DEFAULT_BUDGET};
use crate::corpus::{
    from_json_str, named_instance, parse_graph6, read_drawing, standard_corpus, write_drawing, write_graph6,
    CorpusError, GeneratorSpec,
};
use crate::discharging::{apply_rules, audit, initial_charges, Charge};
use crate::model::{edge_bound_check, validate_drawing, AbstractGraph, OnePlanarDrawing};
use crate::structure::{find_configuration, find_light_path3, find_light_star3};
use crate::triangulation::{canonical_triangulate, is_canonical};

pub const THREADS_ENV: &str = "ONEPLANAR_THREADS";

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("entry {name}: {source}")]
    Input {
        name: String,
        #[source]
        source: CorpusError,
    },
    #[error(transparent)]
    Manifest(#[from] CorpusError),
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Validate,
    Triangulate,
    FindConfig,
    Light,
    Discharge,
    Color,
    Oracle,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Validate,
        Check::Triangulate,
        Check::FindConfig,
        Check::Light,
        Check::Discharge,
        Check::Color,
        Check::Oracle,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Named(String),
    Graph6(String),
    /// A `.g6` file (first line) or a drawing JSON file, relative to the manifest.
    File(PathBuf),
    Gen(GeneratorSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    pub name: String,
    pub source: Source,
    /// Defaults to every check.
    #[serde(default)]
    pub checks: Option<Vec<Check>>,
}

/// Appends the standard generated corpus to the manifest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusDirective {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub entries: Vec<ManifestEntry>,
    #[serde(default)]
    pub corpus: Option<CorpusDirective>,
    /// Checks for corpus entries; defaults to every check.
    #[serde(default)]
    pub corpus_checks: Option<Vec<Check>>,
    /// Largest vertex count the oracle is run on.
    #[serde(default = "default_oracle_vertices")]
    pub oracle_max_vertices: usize,
}

fn default_oracle_vertices() -> usize {
    9
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self, CorpusError> {
        from_json_str(text)
    }

    /// Entries with the corpus directive expanded.
    pub fn expanded(&self) -> Vec<ManifestEntry> {
        let mut out = self.entries.clone();
        if let Some(c) = self.corpus {
            for (i, spec) in standard_corpus(c.count, c.n_min, c.n_max, c.seed).into_iter().enumerate() {
                out.push(ManifestEntry {
                    name: format!("corpus-{i:04}-{}", spec.label()),
                    source: Source::Gen(spec),
                    checks: self.corpus_checks.clone(),
                });
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: Check,
    pub status: Status,
    pub detail: Value,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryReport {
    pub name: String,
    pub input_sha256: String,
    pub vertices: usize,
    pub edges: usize,
    pub crossings: Option<usize>,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub entries: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub manifest_sha256: String,
    pub summary: Summary,
    pub entries: Vec<EntryReport>,
    pub elapsed_ms: f64,
}

impl RunReport {
    pub fn ok(&self) -> bool {
        self.summary.failed == 0
    }

    /// The process exit code: 0 iff no check failed.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.ok())
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Thread cap from `ONEPLANAR_THREADS`, ignoring unparsable or zero values.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&t| t > 0)
}

/// A loaded input: drawings support every check, bare graphs only the
/// abstract ones.
#[derive(Debug, Clone)]
pub enum Input {
    Drawing(OnePlanarDrawing),
    Graph(AbstractGraph),
}

impl Input {
    pub fn graph(&self) -> &AbstractGraph {
        match self {
            Input::Drawing(d) => d.base(),
            Input::Graph(g) => g,
        }
    }

    fn digest(&self) -> String {
        match self {
            Input::Drawing(d) => sha256_hex(write_drawing(d).as_bytes()),
            Input::Graph(g) => sha256_hex(write_graph6(g).as_bytes()),
        }
    }
}

/// Reads a graph6 line or a drawing JSON document, deciding by content.
pub fn load_input_text(text: &str) -> Result<Input, CorpusError> {
    let t = text.trim_start();
    if t.starts_with('{') {
        Ok(Input::Drawing(read_drawing(text)?))
    } else {
        let line = t.lines().next().unwrap_or("");
        Ok(Input::Graph(parse_graph6(line)?))
    }
}

fn load(source: &Source, base: &Path) -> Result<Input, SuiteError> {
    let map = |e: CorpusError| SuiteError::Manifest(e);
    match source {
        Source::Named(n) => named_instance(n).map(Input::Drawing).map_err(map),
        Source::Graph6(s) => parse_graph6(s).map(Input::Graph).map_err(map),
        Source::Gen(spec) => spec.generate().map(Input::Drawing).map_err(map),
        Source::File(p) => {
            let path = base.join(p);
            let text = std::fs::read_to_string(&path).map_err(|source| SuiteError::Io { path, source })?;
            load_input_text(&text).map_err(map)
        }
    }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn skipped(reason: &str) -> (Status, Value) {
    (Status::Skipped, json!({ "reason": reason }))
}

fn charge_str(c: &Charge) -> String {
    c.to_string()
}

fn run_check(check: Check, input: &Input, oracle_max: usize) -> (Status, Value) {
    let g = input.graph();
    let drawing = match input {
        Input::Drawing(d) => Some(d),
        Input::Graph(_) => None,
    };
    match check {
        Check::Validate => {
            let Some(d) = drawing else {
                return skipped("no drawing");
            };
            let bound = edge_bound_check(d);
            match validate_drawing(d) {
                Ok(rep) => (
                    pass_if(rep.is_valid() && bound.pass),
                    json!({ "valid": rep.is_valid(), "violations": rep.violations, "edge_bound": bound }),
                ),
                Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
            }
        }
        Check::Triangulate => {
            let Some(d) = drawing else {
                return skipped("no drawing");
            };
            match canonical_triangulate(d) {
                Ok(t) => {
                    let canonical = is_canonical(t.drawing());
                    let idempotent = canonical_triangulate(t.drawing())
                        .map(|again| again.drawing() == t.drawing() && again.provenance().is_empty())
                        .unwrap_or(false);
                    let p = t.provenance();
                    (
                        pass_if(canonical && idempotent),
                        json!({
                            "canonical": canonical,
                            "idempotent": idempotent,
                            "edges": t.drawing().base().edge_count(),
                            "added_kite_edges": p.added_kite_edges.len(),
                            "removed_duplicates": p.removed_duplicates.len(),
                            "added_fill_edges": p.added_fill_edges.len(),
                        }),
                    )
                }
                Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
            }
        }
        Check::FindConfig => match find_configuration(g) {
            Ok(c) => (Status::Pass, serde_json::to_value(c).unwrap_or(Value::Null)),
            Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
        },
        Check::Light => {
            let delta = g.min_degree().unwrap_or(0);
            if delta < 4 {
                return skipped("minimum degree below 4");
            }
            let path = find_light_path3(g);
            let star = (delta >= 5).then(|| find_light_star3(g));
            let path_ok = path.as_ref().is_ok_and(|p| p.degrees.iter().all(|&x| x <= 35));
            let star_ok = match &star {
                Some(s) => s.as_ref().is_ok_and(|s| s.degrees.iter().all(|&x| x <= 35)),
                None => true,
            };
            let show = |r: Result<Value, String>| r.unwrap_or_else(|e| json!({ "error": e }));
            (
                pass_if(path_ok && star_ok),
                json!({
                    "path3": show(path.map(|p| json!(p)).map_err(|e| e.to_string())),
                    "star3": star.map(|s| show(s.map(|s| json!(s)).map_err(|e| e.to_string()))),
                }),
            )
        }
        Check::Discharge => {
            let Some(d) = drawing else {
                return skipped("no drawing");
            };
            let t = match canonical_triangulate(d) {
                Ok(t) => t,
                Err(e) => return (Status::Fail, json!({ "error": e.to_string() })),
            };
            let initial = match initial_charges(t.plane()) {
                Ok(l) => l,
                Err(e) => return (Status::Fail, json!({ "error": e.to_string() })),
            };
            let last = apply_rules(t.plane(), &initial);
            let rep = audit(&initial, &last);
            let minus_eight = Charge::integer(-8);
            let ok = rep.conserved && rep.initial_total == minus_eight && rep.unbalanced_faces.is_empty();
            (
                pass_if(ok),
                json!({
                    "initial_total": charge_str(&rep.initial_total),
                    "final_total": charge_str(&rep.final_total),
                    "conserved": rep.conserved,
                    "unbalanced_faces": rep.unbalanced_faces.len(),
                    "negative_elements": rep.negatives.len(),
                    "transfers": last.transcript.len(),
                }),
            )
        }
        Check::Color => match color_with_stats(g, None, DEFAULT_BUDGET) {
            Ok(run) => {
                let rep = verify_acyclic(g, &run.coloring);
                let within = rep.max_color.is_none_or(|c| c < run.coloring.palette);
                (
                    pass_if(rep.is_ok() && within),
                    json!({
                        "palette": run.coloring.palette,
                        "colors_used": rep.colors_used,
                        "max_color": rep.max_color,
                        "verified": rep.is_ok(),
                        "violations": rep.violations.len(),
                        "plan_steps": run.plan.steps.len(),
                        "backtracks": run.total_backtracks(),
                    }),
                )
            }
            Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
        },
        Check::Oracle => {
            if g.n() > oracle_max {
                return skipped("too many vertices");
            }
            let palette = palette_size(g.max_degree());
            match oracle_chi_a(g, palette) {
                OracleResult::Exact(k) => (Status::Pass, json!({ "chi_a": k, "palette": palette })),
                OracleResult::Exceeded => (Status::Fail, json!({ "chi_a": null, "palette": palette })),
            }
        }
    }
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn run_entry(entry: &ManifestEntry, input: &Input, oracle_max: usize) -> EntryReport {
    let start = Instant::now();
    let checks = entry.checks.clone().unwrap_or_else(|| Check::ALL.to_vec());
    let results = checks
        .into_iter()
        .map(|check| {
            let t = Instant::now();
            let (status, detail) = run_check(check, input, oracle_max);
            CheckResult {
                check,
                status,
                detail,
                elapsed_ms: ms(t),
            }
        })
        .collect();
    let g = input.graph();
    EntryReport {
        name: entry.name.clone(),
        input_sha256: input.digest(),
        vertices: g.n(),
        edges: g.edge_count(),
        crossings: match input {
            Input::Drawing(d) => Some(d.crossings().len()),
            Input::Graph(_) => None,
        },
        checks: results,
        elapsed_ms: ms(start),
    }
}

/// Loads every input, then runs the entries in parallel; the report keeps
/// manifest order. File sources resolve against `base_dir`.
pub fn run_suite(
    manifest: &Manifest,
    manifest_text: &str,
    base_dir: &Path,
    threads: Option<usize>,
) -> Result<RunReport, SuiteError> {
    let start = Instant::now();
    let entries = manifest.expanded();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| SuiteError::Pool(e.to_string()))?;
    let reports = pool.install(|| {
        entries
            .par_iter()
            .map(|e| {
                let input = load(&e.source, base_dir).map_err(|err| match err {
                    SuiteError::Manifest(source) => SuiteError::Input {
                        name: e.name.clone(),
                        source,
                    },
                    other => other,
                })?;
                Ok(run_entry(e, &input, manifest.oracle_max_vertices))
            })
            .collect::<Result<Vec<_>, SuiteError>>()
    })?;
    let mut summary = Summary {
        entries: reports.len(),
        ..Summary::default()
    };
    for c in reports.iter().flat_map(|r| &r.checks) {
        match c.status {
            Status::Pass => summary.passed += 1,
            Status::Fail => summary.failed += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    Ok(RunReport {
        tool: "oneplanar".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        manifest_sha256: sha256_hex(manifest_text.as_bytes()),
        summary,
        entries: reports,
        elapsed_ms: ms(start),
    })
}

/// Reads and runs a manifest file.
pub fn run_manifest_file(path: &Path, threads: Option<usize>) -> Result<RunReport, SuiteError> {
    let text = std::fs::read_to_string(path).map_err(|source| SuiteError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let manifest = Manifest::parse(&text)?;
    run_suite(&manifest, &text, path.parent().unwrap_or(Path::new(".")), threads)
}

/// Drops every `elapsed_ms` field, leaving the parts that must be
/// reproducible.
pub fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("elapsed_ms");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}
