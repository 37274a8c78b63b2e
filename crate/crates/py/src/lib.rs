//! Python bindings: graphs, parameters, optimal families, reconfiguration
//! graphs and the realizability constructions.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use domrec_core::constructions::{
    construct_connelly_with_pendants, construct_id, construct_locating, construct_upper, multiply, ConstructionKind,
};
use domrec_core::reconfig::{self, AdjacencyModel, ReconfigGraph};
use domrec_core::solvers::{self, ParamValue};
use domrec_core::{verify, DomVariant, VertexSet};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_variant(name: &str) -> PyResult<DomVariant> {
    name.parse().map_err(|_| value_error(format!("unknown variant '{name}'")))
}

fn parse_model(name: &str) -> PyResult<AdjacencyModel> {
    name.parse().map_err(value_error)
}

fn to_set(g: &domrec_core::Graph, vertices: Vec<usize>) -> PyResult<VertexSet> {
    for &v in &vertices {
        if v >= g.n() {
            return Err(PyIndexError::new_err(format!("vertex {v} out of range for {} vertices", g.n())));
        }
    }
    Ok(vertices.into_iter().collect())
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(frozen, skip_from_py_object, name = "Graph")]
#[derive(Clone)]
struct PyGraph {
    inner: domrec_core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges, labels=None))]
    fn new(n: usize, edges: Vec<(usize, usize)>, labels: Option<Vec<String>>) -> PyResult<Self> {
        let inner = domrec_core::Graph::from_edge_list(n, &edges, labels).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = domrec_core::Graph::parse_graph6(text).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    /// `K4-e`, `C5`, `P3`, `K2`, `2K1`, ...
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        let inner = domrec_core::Graph::named(name).ok_or_else(|| value_error(format!("unknown graph '{name}'")))?;
        Ok(PyGraph { inner })
    }

    /// One of the gadgets `c`, `bull`, `z`.
    #[staticmethod]
    fn gadget(name: &str) -> PyResult<Self> {
        let kind = domrec_core::GadgetKind::from_name(name)
            .ok_or_else(|| value_error(format!("unknown gadget '{name}'")))?;
        Ok(PyGraph {
            inner: domrec_core::make_gadget(kind).graph,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn labels(&self) -> Vec<String> {
        (0..self.inner.n()).map(|v| self.inner.label(v)).collect()
    }

    fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.index_of(label)
    }

    fn closed_neighborhood(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.closed_neighborhood(v).map_err(value_error)?.to_vec())
    }

    fn to_graph6(&self) -> PyResult<String> {
        self.inner.to_graph6().map_err(value_error)
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

/// A parameter value: an int, `"infinity"` or `"undefined"`.
#[derive(IntoPyObject)]
enum Value {
    Finite(usize),
    Other(String),
}

impl From<ParamValue> for Value {
    fn from(v: ParamValue) -> Self {
        match v {
            ParamValue::Finite(k) => Value::Finite(k),
            other => Value::Other(other.to_string()),
        }
    }
}

#[derive(IntoPyObject)]
struct Reconfig {
    model: String,
    nodes: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl From<&ReconfigGraph> for Reconfig {
    fn from(r: &ReconfigGraph) -> Self {
        Reconfig {
            model: r.model.to_string(),
            nodes: r.nodes.iter().map(VertexSet::to_vec).collect(),
            edges: r.edges.clone(),
        }
    }
}

#[derive(IntoPyObject)]
struct Analysis {
    components: usize,
    component_sizes: Vec<usize>,
    diameters: Vec<usize>,
    stuck: Vec<Vec<usize>>,
    frozen: Vec<Vec<usize>>,
}

#[derive(IntoPyObject)]
struct Report {
    variant: String,
    value: Value,
    set_count: usize,
    sets: Vec<String>,
    family_matches: bool,
    isomorphic: bool,
    witness: Option<Vec<usize>>,
}

#[pyfunction]
fn parameter(g: &PyGraph, variant: &str) -> PyResult<Value> {
    Ok(solvers::parameter(&g.inner, parse_variant(variant)?).into())
}

/// Every optimal set, in canonical order.
#[pyfunction]
fn optimal_sets(g: &PyGraph, variant: &str) -> PyResult<Vec<Vec<usize>>> {
    let opt = solvers::bb_optimal(&g.inner, parse_variant(variant)?);
    Ok(opt.family.iter().map(VertexSet::to_vec).collect())
}

/// The subset-scan oracle; slow above ~24 vertices.
#[pyfunction]
fn brute_force_sets(g: &PyGraph, variant: &str) -> PyResult<Vec<Vec<usize>>> {
    let opt = solvers::brute_force_optimal(&g.inner, parse_variant(variant)?);
    Ok(opt.family.iter().map(VertexSet::to_vec).collect())
}

#[pyfunction]
fn minimal_dominating_sets(g: &PyGraph) -> Vec<Vec<usize>> {
    solvers::enumerate_minimal_dominating(&g.inner)
        .iter()
        .map(VertexSet::to_vec)
        .collect()
}

#[pyfunction]
fn satisfies(g: &PyGraph, vertices: Vec<usize>, variant: &str) -> PyResult<bool> {
    let s = to_set(&g.inner, vertices)?;
    Ok(domrec_core::satisfies(&g.inner, s, parse_variant(variant)?))
}

#[pyfunction]
#[pyo3(signature = (g, variant, model="slide"))]
fn variant_graph(g: &PyGraph, variant: &str, model: &str) -> PyResult<Reconfig> {
    let r = reconfig::build_variant_graph(&g.inner, parse_variant(variant)?, parse_model(model)?)
        .map_err(value_error)?;
    Ok((&r).into())
}

#[pyfunction]
fn k_dominating_graph(g: &PyGraph, k: usize) -> Reconfig {
    (&reconfig::build_k_dominating_graph(&g.inner, k)).into()
}

/// Components, diameters and per-node stuck/frozen vertices of the variant
/// graph (or of `D_k` when `k` is given).
#[pyfunction]
#[pyo3(signature = (g, variant="gamma", model="slide", k=None))]
fn analyze(g: &PyGraph, variant: &str, model: &str, k: Option<usize>) -> PyResult<Analysis> {
    let r = match k {
        Some(k) => reconfig::build_k_dominating_graph(&g.inner, k),
        None => reconfig::build_variant_graph(&g.inner, parse_variant(variant)?, parse_model(model)?)
            .map_err(value_error)?,
    };
    let a = reconfig::analyze(&r);
    let frozen = reconfig::frozen_vertices(&r);
    Ok(Analysis {
        components: a.component_count,
        component_sizes: a.component_sizes,
        diameters: a.diameters,
        stuck: (0..r.node_count()).map(|i| reconfig::stuck_vertices(&r, i).to_vec()).collect(),
        frozen: (0..r.node_count()).map(|i| frozen[&i].to_vec()).collect(),
    })
}

/// Builds `connelly`, `id`, `locating` or `upper` on host `h`. Returns the
/// graph and its label → index map.
#[pyfunction]
#[pyo3(signature = (target, h, extra=0))]
fn construct(target: &str, h: &PyGraph, extra: usize) -> PyResult<(PyGraph, BTreeMap<String, usize>)> {
    let kind = ConstructionKind::from_name(target).ok_or_else(|| value_error(format!("unknown target '{target}'")))?;
    let c = match kind {
        ConstructionKind::Connelly => construct_connelly_with_pendants(&h.inner, 2 + extra),
        ConstructionKind::Id => construct_id(&h.inner),
        ConstructionKind::Locating => construct_locating(&h.inner, false),
        ConstructionKind::Upper => construct_upper(&h.inner),
    }
    .map_err(value_error)?;
    let c = if extra > 0 && kind != ConstructionKind::Connelly {
        multiply(&c, extra).map_err(value_error)?
    } else {
        c
    };
    let labels = c.label_map();
    Ok((PyGraph { inner: c.graph }, labels))
}

#[pyfunction]
#[pyo3(signature = (h, variant, model="slide"))]
fn verify_realizability(h: &PyGraph, variant: &str, model: &str) -> PyResult<Report> {
    let r = verify::verify_realizability(&h.inner, parse_variant(variant)?, parse_model(model)?).map_err(value_error)?;
    Ok(Report {
        variant: r.variant.to_string(),
        value: r.value.into(),
        set_count: r.set_count,
        sets: r.sets,
        family_matches: r.family_matches,
        isomorphic: r.isomorphic,
        witness: r.witness,
    })
}

#[pyfunction]
fn are_isomorphic(a: &PyGraph, b: &PyGraph) -> Option<Vec<usize>> {
    verify::are_isomorphic(&a.inner, &b.inner)
}

#[pymodule]
fn domrec(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(parameter, m)?)?;
    m.add_function(wrap_pyfunction!(optimal_sets, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_sets, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_dominating_sets, m)?)?;
    m.add_function(wrap_pyfunction!(satisfies, m)?)?;
    m.add_function(wrap_pyfunction!(variant_graph, m)?)?;
    m.add_function(wrap_pyfunction!(k_dominating_graph, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(verify_realizability, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    let variants: Vec<&str> = DomVariant::ALL.iter().map(|v| v.name()).collect();
    m.add("VARIANTS", variants)?;
    Ok(())
}
