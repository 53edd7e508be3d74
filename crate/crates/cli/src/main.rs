use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::{json, Value};

use oneplanar::coloring::{
    color_with_stats, oracle_chi_a, palette_size, verify_acyclic, ColorLists, EdgeColoring, OracleResult,
    DEFAULT_BUDGET,
};
use oneplanar::corpus::{from_json_str, named_instance, write_drawing, write_graph6, GeneratorKind, GeneratorSpec};
use oneplanar::discharging::{apply_rules, audit, initial_charges};
use oneplanar::model::{edge_bound_check, validate_drawing, OnePlanarDrawing};
use oneplanar::structure::{classify_neighbors, find_configuration, find_light_path3, find_light_star3};
use oneplanar::suite::{load_input_text, run_manifest_file, threads_from_env, Input, Status};
use oneplanar::triangulation::{canonical_triangulate, CanonicalTriangulation};

#[derive(Parser)]
#[command(name = "oneplanar", version, about = "Structural algorithms for 1-planar drawings")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    PlaneTriangulation,
    RandomOneplanar,
    ThinnedOneplanar,
    Named,
}

impl From<Kind> for GeneratorKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::PlaneTriangulation => GeneratorKind::PlaneTriangulation,
            Kind::RandomOneplanar => GeneratorKind::RandomOneplanar,
            Kind::ThinnedOneplanar => GeneratorKind::ThinnedOneplanar,
            Kind::Named => GeneratorKind::Named,
        }
    }
}

/// Inputs are a drawing JSON file, a `.g6` file, or `named:<instance>`.
#[derive(Subcommand)]
enum Command {
    /// Check a drawing and the edge bound `e <= 4v - 8`.
    Validate { input: String },
    /// Canonical triangulation of a drawing.
    Triangulate {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Neighbour classification around real vertices of the triangulation.
    Census {
        input: String,
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// First vertex carrying one of the unavoidable configurations.
    FindConfig { input: String },
    /// Light 3-path and, for minimum degree 5, light 3-star.
    Light { input: String },
    /// Run the discharging rules on the canonical triangulation.
    Discharge {
        input: String,
        /// Include every transfer in the output.
        #[arg(long)]
        transcript: bool,
    },
    /// Acyclic edge coloring.
    Color {
        input: String,
        #[arg(long)]
        lists: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring for properness and bichromatic cycles.
    Verify { input: String, coloring: PathBuf },
    /// Exact acyclic chromatic index by exhaustive search.
    Oracle {
        input: String,
        /// Defaults to the palette size.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Generate a drawing.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "0")]
        fraction: Ratio<u32>,
        #[arg(long, default_value = "0")]
        removal: Ratio<u32>,
        #[arg(long)]
        name: Option<String>,
        /// Write graph6 instead of drawing JSON.
        #[arg(long)]
        g6: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a manifest and write the report.
    RunSuite {
        manifest: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Overrides ONEPLANAR_THREADS.
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn load(spec: &str) -> Result<Input> {
    if let Some(name) = spec.strip_prefix("named:") {
        return Ok(Input::Drawing(named_instance(name)?));
    }
    let text = fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
    load_input_text(&text).with_context(|| format!("parsing {spec}"))
}

fn load_drawing(spec: &str) -> Result<OnePlanarDrawing> {
    match load(spec)? {
        Input::Drawing(d) => Ok(d),
        Input::Graph(_) => bail!("{spec} is a bare graph; this command needs a drawing"),
    }
}

fn triangulate(d: &OnePlanarDrawing) -> Result<CanonicalTriangulation> {
    Ok(canonical_triangulate(d)?)
}

fn write_out(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
        Format::Text => println!("{}", text()),
    }
    Ok(())
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn list(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<ExitCode> {
    let f = cli.format;
    match cli.command {
        Command::Validate { input } => {
            let d = load_drawing(&input)?;
            let rep = validate_drawing(&d)?;
            let bound = edge_bound_check(&d);
            let ok = rep.is_valid() && bound.pass;
            emit(f, &json!({ "validation": rep, "edge_bound": bound }), || {
                format!(
                    "{rep}\nedges {} / bound {} ({})",
                    bound.edges,
                    bound.bound,
                    if bound.pass { "ok" } else { "exceeded" }
                )
            })?;
            Ok(status(ok))
        }
        Command::Triangulate { input, output } => {
            let t = triangulate(&load_drawing(&input)?)?;
            let p = t.provenance();
            if let Some(path) = &output {
                write_out(path, &write_drawing(t.drawing()))?;
            }
            let drawing: Value = serde_json::from_str(&write_drawing(t.drawing()))?;
            let value = match output {
                Some(_) => json!({ "provenance": p }),
                None => json!({ "provenance": p, "drawing": drawing }),
            };
            emit(f, &value, || {
                format!(
                    "{} edges; kite edges added {}, duplicates rerouted {}, fill edges added {}",
                    t.drawing().base().edge_count(),
                    p.added_kite_edges.len(),
                    p.removed_duplicates.len(),
                    p.added_fill_edges.len()
                )
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { input, vertex } => {
            let t = triangulate(&load_drawing(&input)?)?;
            let pg = t.plane();
            let vertices: Vec<usize> = match vertex {
                Some(v) => vec![v],
                None => (0..pg.real_count()).collect(),
            };
            let census = vertices
                .into_iter()
                .map(|v| classify_neighbors(pg, v))
                .collect::<Result<Vec<_>, _>>()?;
            emit(f, &census, || {
                census
                    .iter()
                    .map(|c| {
                        format!(
                            "{}: degree {} c={} t={} x={} i={} j={} heavy={} I={} II={} III={}",
                            c.center,
                            c.degree,
                            c.c,
                            c.t,
                            c.x,
                            c.i,
                            c.j,
                            c.classes.heavy,
                            c.classes.class_i,
                            c.classes.class_ii,
                            c.classes.class_iii
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::FindConfig { input } => {
            let input = load(&input)?;
            match find_configuration(input.graph()) {
                Ok(c) => {
                    emit(f, &c, || {
                        format!(
                            "{:?} at {}: neighbours {} with degrees {}",
                            c.kind,
                            c.center,
                            list(&c.neighbors),
                            list(&c.neighbor_degrees)
                        )
                    })?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    emit(f, &json!({ "error": e.to_string() }), || e.to_string())?;
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Light { input } => {
            let input = load(&input)?;
            let g = input.graph();
            let path = find_light_path3(g)?;
            let star = match g.min_degree() {
                Some(d) if d >= 5 => Some(find_light_star3(g)?),
                _ => None,
            };
            emit(f, &json!({ "path3": path, "star3": star }), || {
                let mut s = format!("path {} degrees {}", list(&path.path), list(&path.degrees));
                if let Some(st) = &star {
                    s += &format!(
                        "\nstar centre {} leaves {} degrees {}",
                        st.center,
                        list(&st.leaves),
                        list(&st.degrees)
                    );
                }
                s
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Discharge { input, transcript } => {
            let t = triangulate(&load_drawing(&input)?)?;
            let initial = initial_charges(t.plane())?;
            let last = apply_rules(t.plane(), &initial);
            let rep = audit(&initial, &last);
            let mut value = json!({
                "audit": rep,
                "vertex_charges": last.vertex_charges,
                "face_charges": last.face_charges,
            });
            if transcript {
                value["transcript"] = serde_json::to_value(&last.transcript)?;
            }
            emit(f, &value, || {
                format!(
                    "initial {} final {} conserved {}; {} transfers, {} unbalanced faces, {} negative elements",
                    rep.initial_total,
                    rep.final_total,
                    rep.conserved,
                    last.transcript.len(),
                    rep.unbalanced_faces.len(),
                    rep.negatives.len()
                )
            })?;
            Ok(status(rep.conserved && rep.unbalanced_faces.is_empty()))
        }
        Command::Color { input, lists, output } => {
            let input = load(&input)?;
            let g = input.graph();
            let lists = match lists {
                Some(p) => {
                    let text = fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
                    Some(from_json_str::<ColorLists>(&text)?)
                }
                None => None,
            };
            let run = color_with_stats(g, lists.as_ref(), DEFAULT_BUDGET)?;
            let rep = verify_acyclic(g, &run.coloring);
            let coloring = serde_json::to_string(&run.coloring)?;
            let summary = json!({
                "palette": run.coloring.palette,
                "colors_used": rep.colors_used,
                "verified": rep.is_ok(),
                "plan_steps": run.plan.steps.len(),
                "backtracks": run.total_backtracks(),
            });
            match output {
                Some(p) => {
                    write_out(&p, &(coloring + "\n"))?;
                    emit(f, &summary, || {
                        format!(
                            "L={} colors used {} verified {} ({} steps, {} backtracks)",
                            run.coloring.palette,
                            rep.colors_used,
                            rep.is_ok(),
                            run.plan.steps.len(),
                            run.total_backtracks()
                        )
                    })?;
                }
                None => println!("{coloring}"),
            }
            Ok(status(rep.is_ok()))
        }
        Command::Verify { input, coloring } => {
            let input = load(&input)?;
            let text = fs::read_to_string(&coloring).with_context(|| format!("reading {}", coloring.display()))?;
            let c: EdgeColoring = from_json_str(&text)?;
            let rep = verify_acyclic(input.graph(), &c);
            emit(f, &rep, || {
                let mut s = format!(
                    "total {} proper {} acyclic {} ({} colors)",
                    rep.total, rep.proper, rep.acyclic, rep.colors_used
                );
                for v in &rep.violations {
                    s += &format!("\n  {v:?}");
                }
                s
            })?;
            Ok(status(rep.is_ok()))
        }
        Command::Oracle { input, limit } => {
            let input = load(&input)?;
            let g = input.graph();
            let limit = limit.unwrap_or_else(|| palette_size(g.max_degree()));
            let r = oracle_chi_a(g, limit);
            let value = match r {
                OracleResult::Exact(k) => json!({ "chi_a": k, "limit": limit }),
                OracleResult::Exceeded => json!({ "chi_a": null, "limit": limit }),
            };
            emit(f, &value, || match r {
                OracleResult::Exact(k) => format!("chi'_a = {k}"),
                OracleResult::Exceeded => format!("exceeds {limit}"),
            })?;
            Ok(status(r != OracleResult::Exceeded))
        }
        Command::Gen {
            kind,
            n,
            seed,
            fraction,
            removal,
            name,
            g6,
            output,
        } => {
            let spec = GeneratorSpec {
                kind: kind.into(),
                n,
                crossing_fraction: fraction,
                removal_fraction: removal,
                seed,
                name,
            };
            let d = spec.generate()?;
            let text = if g6 {
                write_graph6(d.base()) + "\n"
            } else {
                write_drawing(&d)
            };
            match output {
                Some(p) => write_out(&p, &text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::RunSuite {
            manifest,
            output,
            threads,
        } => {
            let report = run_manifest_file(&manifest, threads.or_else(threads_from_env))?;
            let text = serde_json::to_string_pretty(&report)? + "\n";
            if let Some(p) = &output {
                write_out(p, &text)?;
            }
            match (f, output.is_some()) {
                (Format::Json, false) => print!("{text}"),
                (Format::Json, true) => println!("{}", serde_json::to_string_pretty(&report.summary)?),
                (Format::Text, _) => {
                    for e in &report.entries {
                        let failed: Vec<String> = e
                            .checks
                            .iter()
                            .filter(|c| c.status == Status::Fail)
                            .map(|c| format!("{:?}", c.check))
                            .collect();
                        let verdict = if failed.is_empty() {
                            "ok".to_string()
                        } else {
                            format!("FAILED {}", failed.join(","))
                        };
                        println!("{:<40} {verdict}", e.name);
                    }
                    let s = report.summary;
                    println!(
                        "{} entries: {} passed, {} failed, {} skipped",
                        s.entries, s.passed, s.failed, s.skipped
                    );
                }
            }
            Ok(ExitCode::from(report.exit_code() as u8))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
