//! Python bindings: graph construction, edge-type censuses, index evaluation,
//! closed-form expectations and the seeded Monte-Carlo estimator.

use std::collections::HashMap;
use std::str::FromStr;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sombor_core::closed_forms::{
    self, average_over_chains, chain_extremes, expected_chain_general, expected_chain_variant,
    expectation_gap, family_census, family_index_census, family_index_paper, resolve_chain_shift,
    FamilyParams,
};
use sombor_core::generators::{
    build_chain, build_graphene, build_nanocone, enumerate_chains_capped, incremental_census,
    sample_chain, DEFAULT_ENUMERATION_CAP,
};
use sombor_core::random_experiments::{exact_expectation_enumeration_capped, mc_expectation};
use sombor_core::{
    sombor_from_census, sombor_general, ChainFamily, ChainProbabilities, ChainSpec, IndexVariant,
    MolecularGraph,
};

fn value_error(err: sombor_core::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn parse_family(token: &str) -> PyResult<ChainFamily> {
    match token {
        "hex" | "hexagonal" => Ok(ChainFamily::Hexagonal),
        "phen" | "phenylene" => Ok(ChainFamily::Phenylene),
        other => Err(PyValueError::new_err(format!(
            "unknown chain family {other:?}; expected 'hex' or 'phen'"
        ))),
    }
}

/// Variants: "plain", "reduced", "average", or a numeric shift like "2.5".
fn parse_variant(token: &str) -> PyResult<IndexVariant> {
    match token {
        "plain" => Ok(IndexVariant::Plain),
        "reduced" => Ok(IndexVariant::Reduced),
        "average" => Ok(IndexVariant::Average),
        other => other
            .strip_prefix("custom:")
            .unwrap_or(other)
            .parse::<f64>()
            .map(IndexVariant::Custom)
            .map_err(|_| {
                PyValueError::new_err(format!(
                    "unknown variant {other:?}; expected 'plain', 'reduced', 'average' or a number"
                ))
            }),
    }
}

fn probabilities(p1: f64, p2: f64) -> PyResult<ChainProbabilities> {
    ChainProbabilities::new(p1, p2).map_err(value_error)
}

/// A simple connected molecular graph with dense vertex ids.
#[pyclass(name = "Graph")]
struct Graph {
    inner: MolecularGraph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(vertex_count: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        MolecularGraph::new(vertex_count, edges)
            .map(|inner| Graph { inner })
            .map_err(value_error)
    }

    /// Parse the canonical JSON form.
    #[staticmethod]
    fn from_json(json: &str) -> PyResult<Self> {
        MolecularGraph::from_json(json)
            .map(|inner| Graph { inner })
            .map_err(value_error)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    /// Edges in canonical order (u < v, sorted).
    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges().to_vec()
    }

    /// Degree of every vertex, indexed by vertex id.
    fn degree_sequence(&self) -> Vec<u32> {
        self.inner.degree_sequence()
    }

    /// Edge-type census as a dict keyed by sorted degree pairs.
    fn census(&self) -> HashMap<(u32, u32), u64> {
        self.inner.census().pairs().collect()
    }

    /// Average degree as an exact (numerator, denominator) pair.
    fn average_degree(&self) -> PyResult<(u64, u64)> {
        let ratio = self.inner.average_degree().map_err(value_error)?;
        Ok((*ratio.numer(), *ratio.denom()))
    }

    /// Generalized index at shift `a`, summed edge-wise.
    fn sombor(&self, a: f64) -> PyResult<f64> {
        sombor_general(&self.inner, a).map_err(value_error)
    }

    /// Index under a named variant ("plain", "reduced", "average", or a shift).
    fn sombor_variant(&self, variant: &str) -> PyResult<f64> {
        let variant = parse_variant(variant)?;
        sombor_core::sombor_variant(&self.inner, variant).map_err(value_error)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(vertex_count={}, edge_count={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// Build a chain from its spec string, e.g. "hex:5:212" or "phen:2:".
#[pyfunction]
fn build_chain_graph(spec: &str) -> PyResult<Graph> {
    let spec = ChainSpec::from_str(spec).map_err(value_error)?;
    build_chain(&spec).map(|inner| Graph { inner }).map_err(value_error)
}

/// Build a graphene sheet GN(n, k).
#[pyfunction]
#[pyo3(signature = (n, k, relaxed = false))]
fn build_graphene_graph(n: u64, k: u64, relaxed: bool) -> PyResult<Graph> {
    build_graphene(n, k, relaxed).map(|inner| Graph { inner }).map_err(value_error)
}

/// Build a carbon nanocone CNC_k(n).
#[pyfunction]
#[pyo3(signature = (k, n, relaxed = false))]
fn build_nanocone_graph(k: u64, n: u64, relaxed: bool) -> PyResult<Graph> {
    build_nanocone(k, n, relaxed).map(|inner| Graph { inner }).map_err(value_error)
}

/// Chain census (m22, m23, m33) computed incrementally from a spec string.
#[pyfunction]
fn chain_census(spec: &str) -> PyResult<(u64, u64, u64)> {
    let spec = ChainSpec::from_str(spec).map_err(value_error)?;
    let census = incremental_census(spec.family(), spec.steps());
    Ok((census.m22(), census.m23(), census.m33()))
}

/// Index of a chain evaluated through its census.
#[pyfunction]
fn chain_index(spec: &str, variant: &str) -> PyResult<f64> {
    let spec = ChainSpec::from_str(spec).map_err(value_error)?;
    let variant = parse_variant(variant)?;
    let shift = resolve_chain_shift(spec.family(), spec.n(), variant).map_err(value_error)?;
    let census = incremental_census(spec.family(), spec.steps());
    sombor_from_census(&census, shift).map_err(value_error)
}

/// Draw a random chain spec string with i.i.d. steps.
#[pyfunction]
fn sample_chain_spec(family: &str, n: u64, p1: f64, p2: f64, seed: u64) -> PyResult<String> {
    let family = parse_family(family)?;
    let spec = sample_chain(family, n, probabilities(p1, p2)?, seed).map_err(value_error)?;
    Ok(spec.to_string())
}

/// All 3^(n-2) chain spec strings of length n, in lexicographic order.
#[pyfunction]
#[pyo3(signature = (family, n, cap = DEFAULT_ENUMERATION_CAP))]
fn enumerate_chain_specs(family: &str, n: u64, cap: u64) -> PyResult<Vec<String>> {
    let family = parse_family(family)?;
    let specs = enumerate_chains_capped(family, n, cap).map_err(value_error)?;
    Ok(specs.iter().map(|s| s.to_string()).collect())
}

/// Closed-form expected index over the random chain model.
#[pyfunction]
fn expected_value(family: &str, n: u64, p1: f64, p2: f64, variant: &str) -> PyResult<f64> {
    let family = parse_family(family)?;
    let variant = parse_variant(variant)?;
    expected_chain_variant(family, n, probabilities(p1, p2)?, variant)
        .map(|r| r.value)
        .map_err(value_error)
}

/// Closed-form expected index at an arbitrary shift `a`.
#[pyfunction]
fn expected_value_shift(family: &str, n: u64, p1: f64, p2: f64, a: f64) -> PyResult<f64> {
    let family = parse_family(family)?;
    expected_chain_general(family, n, probabilities(p1, p2)?, a).map_err(value_error)
}

/// Exact expectation by weighted enumeration of all chains.
#[pyfunction]
#[pyo3(signature = (family, n, p1, p2, a, cap = DEFAULT_ENUMERATION_CAP))]
fn exact_expectation(family: &str, n: u64, p1: f64, p2: f64, a: f64, cap: u64) -> PyResult<f64> {
    let family = parse_family(family)?;
    exact_expectation_enumeration_capped(family, n, probabilities(p1, p2)?, a, cap)
        .map_err(value_error)
}

/// (min, max) of the index over all chains of length n.
#[pyfunction]
fn chain_extreme_values(family: &str, n: u64, variant: &str) -> PyResult<(f64, f64)> {
    let family = parse_family(family)?;
    let variant = parse_variant(variant)?;
    chain_extremes(family, n, variant).map_err(value_error)
}

/// Uniform average of the index over all chains of length n at shift `a`.
#[pyfunction]
fn chain_average(family: &str, n: u64, a: f64) -> PyResult<f64> {
    let family = parse_family(family)?;
    average_over_chains(family, n, a).map_err(value_error)
}

/// Phenylene-minus-hexagonal expected-value gaps (plain, reduced) at length n.
#[pyfunction]
fn expectation_gaps(n: u64) -> PyResult<(f64, f64)> {
    expectation_gap(n).map_err(value_error)
}

fn family_params(
    family: &str,
    n: Option<u64>,
    k: Option<u64>,
    p: Option<u64>,
    r: Option<u64>,
) -> PyResult<FamilyParams> {
    let need = |value: Option<u64>, name: &str| {
        value.ok_or_else(|| PyValueError::new_err(format!("{family} requires parameter {name}")))
    };
    match family {
        "graphene" => FamilyParams::graphene(need(n, "n")?, need(k, "k")?).map_err(value_error),
        "coronoid" => {
            FamilyParams::coronoid(need(n, "n")?, need(p, "p")?, need(r, "r")?).map_err(value_error)
        }
        "nanocone" => FamilyParams::nanocone(need(k, "k")?, need(n, "n")?).map_err(value_error),
        other => Err(PyValueError::new_err(format!(
            "unknown family {other:?}; expected 'graphene', 'coronoid' or 'nanocone'"
        ))),
    }
}

/// Census summary of a lattice family member as a dict.
#[pyfunction]
#[pyo3(signature = (family, n = None, k = None, p = None, r = None))]
fn family_census_summary(
    py: Python<'_>,
    family: &str,
    n: Option<u64>,
    k: Option<u64>,
    p: Option<u64>,
    r: Option<u64>,
) -> PyResult<Py<pyo3::types::PyDict>> {
    let summary = family_census(&family_params(family, n, k, p, r)?).map_err(value_error)?;
    let dict = pyo3::types::PyDict::new(py);
    dict.set_item("m22", summary.census.m22())?;
    dict.set_item("m23", summary.census.m23())?;
    dict.set_item("m33", summary.census.m33())?;
    dict.set_item("vertices", summary.vertices)?;
    dict.set_item("edges", summary.edges)?;
    dict.set_item("degree2_count", summary.degree2_count)?;
    dict.set_item("degree3_count", summary.degree3_count)?;
    Ok(dict.unbind())
}

/// Index of a lattice family member; `source` selects the evaluation route:
/// "census" (construction-backed) or "paper" (published closed forms).
#[pyfunction]
#[pyo3(signature = (family, variant, source = "census", n = None, k = None, p = None, r = None))]
fn family_index(
    family: &str,
    variant: &str,
    source: &str,
    n: Option<u64>,
    k: Option<u64>,
    p: Option<u64>,
    r: Option<u64>,
) -> PyResult<f64> {
    let params = family_params(family, n, k, p, r)?;
    let variant = parse_variant(variant)?;
    match source {
        "census" => family_index_census(&params, variant).map_err(value_error),
        "paper" => family_index_paper(&params, variant).map_err(value_error),
        other => Err(PyValueError::new_err(format!(
            "unknown source {other:?}; expected 'census' or 'paper'"
        ))),
    }
}

/// Average degree of a chain family at length n as (numerator, denominator).
#[pyfunction]
fn chain_average_degree(family: &str, n: u64) -> PyResult<(u64, u64)> {
    let family = parse_family(family)?;
    let ratio = closed_forms::chain_average_degree(family, n).map_err(value_error)?;
    Ok((*ratio.numer(), *ratio.denom()))
}

/// Seeded Monte-Carlo estimate; returns a dict with mean, std_error, samples,
/// seed and elapsed seconds. Bit-identical for a fixed seed at any worker count.
#[pyfunction]
#[pyo3(signature = (family, n, p1, p2, variant, samples, seed, workers = 1))]
#[allow(clippy::too_many_arguments)]
fn mc_estimate(
    py: Python<'_>,
    family: &str,
    n: u64,
    p1: f64,
    p2: f64,
    variant: &str,
    samples: u64,
    seed: u64,
    workers: usize,
) -> PyResult<Py<pyo3::types::PyDict>> {
    let family = parse_family(family)?;
    let variant = parse_variant(variant)?;
    let probs = probabilities(p1, p2)?;
    let result = py
        .detach(|| mc_expectation(family, n, probs, variant, samples, seed, workers))
        .map_err(value_error)?;
    let dict = pyo3::types::PyDict::new(py);
    dict.set_item("mean", result.mean)?;
    dict.set_item("std_error", result.std_error)?;
    dict.set_item("samples", result.samples)?;
    dict.set_item("seed", result.seed)?;
    dict.set_item("elapsed_s", result.elapsed.as_secs_f64())?;
    Ok(dict.unbind())
}

/// Shift `a` that a variant resolves to for a chain family at length n.
#[pyfunction]
fn variant_shift(family: &str, n: u64, variant: &str) -> PyResult<f64> {
    let family = parse_family(family)?;
    let variant = parse_variant(variant)?;
    resolve_chain_shift(family, n, variant).map_err(value_error)
}

/// Exact average degree of a lattice family member as (numerator, denominator).
#[pyfunction]
#[pyo3(signature = (family, n = None, k = None, p = None, r = None))]
fn family_average_degree(
    family: &str,
    n: Option<u64>,
    k: Option<u64>,
    p: Option<u64>,
    r: Option<u64>,
) -> PyResult<(u64, u64)> {
    let params = family_params(family, n, k, p, r)?;
    let ratio = closed_forms::family_average_degree(&params).map_err(value_error)?;
    Ok((*ratio.numer(), *ratio.denom()))
}

#[pymodule]
fn sombor_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(build_chain_graph, m)?)?;
    m.add_function(wrap_pyfunction!(build_graphene_graph, m)?)?;
    m.add_function(wrap_pyfunction!(build_nanocone_graph, m)?)?;
    m.add_function(wrap_pyfunction!(chain_census, m)?)?;
    m.add_function(wrap_pyfunction!(chain_index, m)?)?;
    m.add_function(wrap_pyfunction!(sample_chain_spec, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_chain_specs, m)?)?;
    m.add_function(wrap_pyfunction!(expected_value, m)?)?;
    m.add_function(wrap_pyfunction!(expected_value_shift, m)?)?;
    m.add_function(wrap_pyfunction!(exact_expectation, m)?)?;
    m.add_function(wrap_pyfunction!(chain_extreme_values, m)?)?;
    m.add_function(wrap_pyfunction!(chain_average, m)?)?;
    m.add_function(wrap_pyfunction!(expectation_gaps, m)?)?;
    m.add_function(wrap_pyfunction!(family_census_summary, m)?)?;
    m.add_function(wrap_pyfunction!(family_index, m)?)?;
    m.add_function(wrap_pyfunction!(chain_average_degree, m)?)?;
    m.add_function(wrap_pyfunction!(family_average_degree, m)?)?;
    m.add_function(wrap_pyfunction!(mc_estimate, m)?)?;
    m.add_function(wrap_pyfunction!(variant_shift, m)?)?;
    m.add("DEFAULT_ENUMERATION_CAP", DEFAULT_ENUMERATION_CAP)?;
    Ok(())
}
