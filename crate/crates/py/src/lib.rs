//! Python bindings: graphs, embeddings, the embedding pipeline, the
//! verifier and the generators.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use bcp_book::coloring::{induced_edge_coloring, three_face_coloring};
use bcp_book::decomposition::ternary_decompose;
use bcp_book::format::json::{
    coloring_to_json, decomposition_to_json, embedding_from_json, embedding_to_json, graph_from_json,
    graph_to_json,
};
use bcp_book::format::{emit_graph6, parse_graph6};
use bcp_book::generate;
use bcp_book::verify::{check_structure, mbt_oracle_with_limit, DEFAULT_ORACLE_LIMIT};
use bcp_book::{Error, Mbt};

fn to_py_err(e: Error) -> PyErr {
    if e.is_invalid_input() {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

/// Hands a JSON value to Python through `json.loads`.
fn json_to_py<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (value.to_string(),))
}

#[pyclass(name = "Graph", module = "bcpbook", frozen)]
struct PyGraph {
    inner: bcp_book::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = bcp_book::Graph::from_edge_list(n, edges).map_err(to_py_err)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = parse_graph6(text).map_err(to_py_err)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = graph_from_json(text).map_err(to_py_err)?;
        Ok(Self { inner })
    }

    fn to_graph6(&self) -> String {
        emit_graph6(&self.inner)
    }

    fn to_json(&self) -> String {
        graph_to_json(&self.inner).to_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn is_cubic(&self) -> bool {
        self.inner.is_cubic()
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    fn is_planar(&self) -> bool {
        bcp_book::planar::is_planar(&self.inner)
    }

    fn edge_connectivity(&self) -> PyResult<usize> {
        self.inner.edge_connectivity().map_err(to_py_err)
    }

    fn vertex_connectivity(&self) -> PyResult<usize> {
        self.inner.vertex_connectivity().map_err(to_py_err)
    }

    /// Structural predicates as a dict.
    fn check<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let report = check_structure(&self.inner).map_err(to_py_err)?;
        json_to_py(py, &serde_json::json!(report))
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.n(), self.inner.edge_count())
    }
}

#[pyclass(name = "BookEmbedding", module = "bcpbook", frozen)]
struct PyBookEmbedding {
    inner: bcp_book::BookEmbedding,
}

#[pymethods]
impl PyBookEmbedding {
    #[new]
    fn new(spine: Vec<usize>, pages: Vec<((usize, usize), usize)>) -> PyResult<Self> {
        let spine = bcp_book::SpineOrder::new(spine).map_err(to_py_err)?;
        let inner = bcp_book::BookEmbedding::new(spine, pages).map_err(to_py_err)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = embedding_from_json(text).map_err(to_py_err)?;
        Ok(Self { inner })
    }

    fn to_json(&self) -> String {
        embedding_to_json(&self.inner).to_string()
    }

    #[getter]
    fn spine(&self) -> Vec<usize> {
        self.inner.spine.as_slice().to_vec()
    }

    /// `{(u, v): page}` with `u < v`.
    #[getter]
    fn pages<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let out = PyDict::new(py);
        for &(e, p) in self.inner.pages() {
            out.set_item(e, p)?;
        }
        Ok(out)
    }

    fn page_count(&self) -> usize {
        self.inner.page_count()
    }

    fn rotated(&self, steps: usize) -> Self {
        Self {
            inner: self.inner.with_spine(self.inner.spine.rotate(steps)),
        }
    }

    fn reversed(&self) -> Self {
        Self {
            inner: self.inner.with_spine(self.inner.spine.reversed()),
        }
    }

    fn render_svg(&self) -> String {
        bcp_book::render::render_svg(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "BookEmbedding(n={}, pages={})",
            self.inner.spine.len(),
            self.inner.page_count()
        )
    }
}

/// 3-page matching book embedding of a connected BCP graph.
#[pyfunction]
fn embed(py: Python<'_>, g: &PyGraph) -> PyResult<PyBookEmbedding> {
    let graph = g.inner.clone();
    let inner = py.detach(move || bcp_book::embed(&graph)).map_err(to_py_err)?;
    Ok(PyBookEmbedding { inner })
}

/// Violations of `be` as a graph embedding on at most `pages` pages.
#[pyfunction]
#[pyo3(signature = (g, be, pages = 3))]
fn verify<'py>(py: Python<'py>, g: &PyGraph, be: &PyBookEmbedding, pages: usize) -> PyResult<Bound<'py, PyAny>> {
    let v = bcp_book::verify_matching_book_embedding(&g.inner, &be.inner, pages).map_err(to_py_err)?;
    json_to_py(py, &serde_json::json!(v))
}

/// Exact matching book thickness, or `None` above `page_bound`.
#[pyfunction]
#[pyo3(signature = (g, page_bound = None, limit = DEFAULT_ORACLE_LIMIT))]
fn mbt(py: Python<'_>, g: &PyGraph, page_bound: Option<usize>, limit: usize) -> PyResult<Option<usize>> {
    let bound = page_bound.unwrap_or(g.inner.edge_count().max(1));
    let graph = g.inner.clone();
    match py.detach(move || mbt_oracle_with_limit(&graph, bound, limit)).map_err(to_py_err)? {
        Mbt::Exact(p) => Ok(Some(p)),
        Mbt::ExceedsBound => Ok(None),
    }
}

/// `{"faces": {..}, "edges": {"u-v": "E1+E2", ..}}`.
#[pyfunction]
fn color<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let emb = bcp_book::planar_embedding(&g.inner).map_err(to_py_err)?;
    let fc = three_face_coloring(&emb).map_err(to_py_err)?;
    let ec = induced_edge_coloring(&emb, &fc).map_err(to_py_err)?;
    json_to_py(py, &coloring_to_json(&fc, &ec))
}

/// Ladder decomposition tree as nested dicts.
#[pyfunction]
fn decompose<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let tree = ternary_decompose(&g.inner).map_err(to_py_err)?;
    json_to_py(py, &decomposition_to_json(&tree))
}

#[pyfunction]
fn gen_prism(m: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: generate::gen_prism(m).map_err(to_py_err)?,
    })
}

#[pyfunction]
fn gen_cube() -> PyGraph {
    PyGraph {
        inner: generate::gen_cube(),
    }
}

#[pyfunction]
fn gen_ladder(k: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: generate::gen_ladder(k).map_err(to_py_err)?,
    })
}

#[pyfunction]
fn gen_join(left: &PyGraph, e_left: (usize, usize), right: &PyGraph, e_right: (usize, usize), k: usize) -> PyResult<PyGraph> {
    let inner = generate::gen_join(&left.inner, e_left, &right.inner, e_right, k).map_err(to_py_err)?;
    Ok(PyGraph { inner })
}

#[pyfunction]
#[pyo3(signature = (prisms, ladders, seed = None))]
fn gen_chain(prisms: Vec<usize>, ladders: Vec<usize>, seed: Option<u64>) -> PyResult<PyGraph> {
    let inner = generate::gen_chain(&prisms, &ladders, seed).map_err(to_py_err)?;
    Ok(PyGraph { inner })
}

/// The acceptance corpus as `(name, Graph)` pairs.
#[pyfunction]
fn corpus() -> Vec<(String, PyGraph)> {
    generate::corpus()
        .into_iter()
        .map(|c| (c.name, PyGraph { inner: c.graph }))
        .collect()
}

#[pymodule]
fn bcpbook(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyBookEmbedding>()?;
    m.add_function(wrap_pyfunction!(embed, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(mbt, m)?)?;
    m.add_function(wrap_pyfunction!(color, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(gen_prism, m)?)?;
    m.add_function(wrap_pyfunction!(gen_cube, m)?)?;
    m.add_function(wrap_pyfunction!(gen_ladder, m)?)?;
    m.add_function(wrap_pyfunction!(gen_join, m)?)?;
    m.add_function(wrap_pyfunction!(gen_chain, m)?)?;
    m.add_function(wrap_pyfunction!(corpus, m)?)?;
    Ok(())
}
