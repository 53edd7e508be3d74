//! Python bindings. Drawings and reports cross the boundary as JSON text;
//! graphs as `(n, edges)`.

use std::collections::HashMap;
use std::path::Path;

use num_rational::Ratio;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use oneplanar::coloring::{self, EdgeColoring, OracleResult};
use oneplanar::corpus::{self, GeneratorKind, GeneratorSpec};
use oneplanar::discharging::{apply_rules, audit, initial_charges};
use oneplanar::model::{edge, edge_bound_check, validate_drawing, AbstractGraph};
use oneplanar::structure;
use oneplanar::suite::{self, Manifest};
use oneplanar::triangulation::canonical_triangulate;

type Edges = Vec<(usize, usize)>;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn graph(n: usize, edges: Edges) -> PyResult<AbstractGraph> {
    AbstractGraph::from_edges(n, edges).map_err(err)
}

#[pyfunction]
fn named_instance(name: &str) -> PyResult<String> {
    corpus::named_instance(name).map(|d| corpus::write_drawing(&d)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (kind, n=0, seed=0, fraction="0", removal="0", name=None))]
fn generate(kind: &str, n: usize, seed: u64, fraction: &str, removal: &str, name: Option<String>) -> PyResult<String> {
    let kind: GeneratorKind = serde_json::from_value(serde_json::Value::String(kind.into())).map_err(err)?;
    let ratio = |s: &str| s.parse::<Ratio<u32>>().map_err(err);
    let spec = GeneratorSpec {
        kind,
        n,
        crossing_fraction: ratio(fraction)?,
        removal_fraction: ratio(removal)?,
        seed,
        name,
    };
    spec.generate().map(|d| corpus::write_drawing(&d)).map_err(err)
}

/// `(n, edges)` of a drawing's underlying graph.
#[pyfunction]
fn drawing_graph(drawing: &str) -> PyResult<(usize, Edges)> {
    let d = corpus::read_drawing(drawing).map_err(err)?;
    Ok((d.n(), d.base().edges()))
}

/// Whether the drawing is valid and within `4v - 8` edges.
#[pyfunction]
fn validate(drawing: &str) -> PyResult<bool> {
    let d = corpus::read_drawing(drawing).map_err(err)?;
    let rep = validate_drawing(&d).map_err(err)?;
    Ok(rep.is_valid() && edge_bound_check(&d).pass)
}

#[pyfunction]
fn triangulate(drawing: &str) -> PyResult<String> {
    let d = corpus::read_drawing(drawing).map_err(err)?;
    canonical_triangulate(&d)
        .map(|t| corpus::write_drawing(t.drawing()))
        .map_err(err)
}

/// Initial and final charge totals as `"p/q"` strings.
#[pyfunction]
fn discharge(drawing: &str) -> PyResult<(String, String)> {
    let d = corpus::read_drawing(drawing).map_err(err)?;
    let t = canonical_triangulate(&d).map_err(err)?;
    let initial = initial_charges(t.plane()).map_err(err)?;
    let rep = audit(&initial, &apply_rules(t.plane(), &initial));
    Ok((rep.initial_total.to_string(), rep.final_total.to_string()))
}

#[pyfunction]
fn parse_graph6(text: &str) -> PyResult<(usize, Edges)> {
    let g = corpus::parse_graph6(text).map_err(err)?;
    Ok((g.n(), g.edges()))
}

#[pyfunction]
fn write_graph6(n: usize, edges: Edges) -> PyResult<String> {
    Ok(corpus::write_graph6(&graph(n, edges)?))
}

/// `(kind, center, neighbours)` or `None`.
#[pyfunction]
fn find_configuration(n: usize, edges: Edges) -> PyResult<Option<(String, usize, Vec<usize>)>> {
    match structure::find_configuration(&graph(n, edges)?) {
        Ok(c) => Ok(Some((format!("{:?}", c.kind), c.center, c.neighbors))),
        Err(structure::StructureError::NotFound) => Ok(None),
        Err(e) => Err(err(e)),
    }
}

#[pyfunction]
fn palette_size(max_degree: usize) -> usize {
    coloring::palette_size(max_degree)
}

#[pyfunction]
fn acyclic_edge_color(n: usize, edges: Edges) -> PyResult<HashMap<(usize, usize), usize>> {
    let c = coloring::acyclic_edge_color(&graph(n, edges)?).map_err(err)?;
    Ok(c.assignment.into_iter().collect())
}

#[pyfunction]
fn verify_acyclic(n: usize, edges: Edges, colors: HashMap<(usize, usize), usize>) -> PyResult<bool> {
    let g = graph(n, edges)?;
    let c = EdgeColoring {
        palette: coloring::palette_size(g.max_degree()),
        assignment: colors.into_iter().map(|((u, v), c)| (edge(u, v), c)).collect(),
    };
    Ok(coloring::verify_acyclic(&g, &c).is_ok())
}

#[pyfunction]
fn oracle_chi_a(n: usize, edges: Edges, limit: usize) -> PyResult<Option<usize>> {
    Ok(match coloring::oracle_chi_a(&graph(n, edges)?, limit) {
        OracleResult::Exact(k) => Some(k),
        OracleResult::Exceeded => None,
    })
}

/// Runs a manifest given as JSON text; returns the report as JSON text.
#[pyfunction]
#[pyo3(signature = (manifest, base_dir=".", threads=None))]
fn run_suite(py: Python<'_>, manifest: &str, base_dir: &str, threads: Option<usize>) -> PyResult<String> {
    let m = Manifest::parse(manifest).map_err(err)?;
    let report = py
        .detach(|| suite::run_suite(&m, manifest, Path::new(base_dir), threads.or_else(suite::threads_from_env)))
        .map_err(err)?;
    serde_json::to_string(&report).map_err(err)
}

#[pymodule]
fn pyoneplanar(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(named_instance, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(drawing_graph, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(triangulate, m)?)?;
    m.add_function(wrap_pyfunction!(discharge, m)?)?;
    m.add_function(wrap_pyfunction!(parse_graph6, m)?)?;
    m.add_function(wrap_pyfunction!(write_graph6, m)?)?;
    m.add_function(wrap_pyfunction!(find_configuration, m)?)?;
    m.add_function(wrap_pyfunction!(palette_size, m)?)?;
    m.add_function(wrap_pyfunction!(acyclic_edge_color, m)?)?;
    m.add_function(wrap_pyfunction!(verify_acyclic, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_chi_a, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
