//! Python bindings for `friendship-core`.
//!
//! Digraphs and designs are wrapped as classes; reports and verdicts come
//! back as plain dicts with the same shape as the CLI's JSON output.

use friendship_core::{construct, design, search, verify, Design, Digraph, Error};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde::Serialize;
use serde_json::Value;

create_exception!(friendship_digraph, FriendshipError, PyValueError);

fn err(e: Error) -> PyErr {
    FriendshipError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, value: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match value {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, v) in map {
                dict.set_item(k, to_py(py, v)?)?;
            }
            dict.into_any()
        }
    })
}

fn to_dict<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let json = serde_json::to_value(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    to_py(py, &json)
}

#[pyclass(name = "Digraph", module = "friendship_digraph", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyDigraph {
    inner: Digraph,
}

#[pymethods]
impl PyDigraph {
    #[new]
    #[pyo3(signature = (n, arcs = Vec::new()))]
    fn new(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyDigraph {
            inner: Digraph::from_arcs(n, arcs).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyDigraph {
            inner: Digraph::from_json(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn circulant(n: usize, offsets: Vec<usize>) -> PyResult<Self> {
        Ok(PyDigraph {
            inner: Digraph::circulant(n, &offsets).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn arc_count(&self) -> usize {
        self.inner.arc_count()
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().collect()
    }

    fn has_arc(&self, u: usize, v: usize) -> bool {
        self.inner.has_arc(u, v)
    }

    fn out_neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.out_neighbors(v).map_err(err)?.to_vec())
    }

    fn in_neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.in_neighbors(v).map_err(err)?.to_vec())
    }

    fn common_out_neighbors(&self, u: usize, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.common_out_neighbors(u, v).map_err(err)?.to_vec())
    }

    fn reverse(&self) -> Self {
        PyDigraph {
            inner: self.inner.reverse(),
        }
    }

    fn __repr__(&self) -> String {
        format!("Digraph(n={}, arcs={})", self.inner.order(), self.inner.arc_count())
    }
}

#[pyclass(name = "Design", module = "friendship_digraph", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyDesign {
    inner: Design,
}

#[pymethods]
impl PyDesign {
    #[new]
    fn new(v: usize, blocks: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyDesign {
            inner: Design::new(v, blocks).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyDesign {
            inner: Design::from_json(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn varieties(&self) -> usize {
        self.inner.varieties()
    }

    #[getter]
    fn blocks(&self) -> Vec<Vec<usize>> {
        self.inner.blocks().to_vec()
    }

    #[pyo3(name = "validate", signature = (k, lam = 1))]
    fn validate<'py>(&self, py: Python<'py>, k: usize, lam: usize) -> PyResult<Bound<'py, PyAny>> {
        let report = design::validate_sbibd(&self.inner, k, lam);
        let dict = to_dict(py, &report)?;
        dict.set_item("valid", report.is_valid())?;
        Ok(dict)
    }

    fn __repr__(&self) -> String {
        format!("Design(v={}, blocks={})", self.inner.varieties(), self.inner.block_count())
    }
}

#[pyfunction]
fn fancy_wheel(cycle_lengths: Vec<usize>) -> PyResult<PyDigraph> {
    Ok(PyDigraph {
        inner: construct::fancy_wheel(&cycle_lengths).map_err(err)?,
    })
}

#[pyfunction]
fn projective_plane(q: u32) -> PyResult<PyDesign> {
    Ok(PyDesign {
        inner: design::projective_plane(q).map_err(err)?,
    })
}

#[pyfunction]
#[pyo3(signature = (design, seed = None))]
fn digraph_from_sbibd(design: &PyDesign, seed: Option<u64>) -> PyResult<PyDigraph> {
    Ok(PyDigraph {
        inner: construct::digraph_from_sbibd(&design.inner, seed).map_err(err)?,
    })
}

#[pyfunction]
fn design_from_digraph(digraph: &PyDigraph) -> PyDesign {
    PyDesign {
        inner: design::design_from_digraph(&digraph.inner),
    }
}

#[pyfunction]
#[pyo3(signature = (design, seed = None))]
fn complement_sdr(design: &PyDesign, seed: Option<u64>) -> PyResult<Vec<usize>> {
    Ok(construct::complement_sdr(&design.inner, seed).map_err(err)?.rep)
}

#[pyfunction]
#[pyo3(signature = (design, exhaustive = false))]
fn check_hall_condition<'py>(
    py: Python<'py>,
    design: &PyDesign,
    exhaustive: bool,
) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &construct::check_hall_condition(&design.inner, exhaustive).map_err(err)?)
}

#[pyfunction]
fn bipartite_max_matching(
    left_count: usize,
    right_count: usize,
    edges: Vec<(usize, usize)>,
) -> PyResult<Vec<(usize, usize)>> {
    Ok(friendship_core::bipartite_max_matching(left_count, right_count, &edges)
        .map_err(err)?
        .pairs)
}

#[pyfunction]
fn is_friendship<'py>(py: Python<'py>, digraph: &PyDigraph) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &verify::is_friendship(&digraph.inner))
}

/// The six consequence checks, one dict each.
#[pyfunction]
fn consequence_reports<'py>(py: Python<'py>, digraph: &PyDigraph) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &verify::consequence_reports(&digraph.inner))
}

#[pyfunction]
fn classify<'py>(py: Python<'py>, digraph: &PyDigraph) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &verify::classify(&digraph.inner).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (n, modulo_iso = false, max_results = None, allow_large = false))]
fn enumerate_friendship_digraphs(
    n: usize,
    modulo_iso: bool,
    max_results: Option<usize>,
    allow_large: bool,
) -> PyResult<Vec<PyDigraph>> {
    let config = search::SearchConfig {
        n,
        max_results,
        modulo_iso,
        allow_large,
    };
    Ok(search::enumerate_friendship_digraphs(&config)
        .map_err(err)?
        .into_iter()
        .map(|inner| PyDigraph { inner })
        .collect())
}

#[pyfunction]
fn is_isomorphic(a: &PyDigraph, b: &PyDigraph) -> PyResult<bool> {
    search::is_isomorphic(&a.inner, &b.inner).map_err(err)
}

#[pymodule]
fn friendship_digraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("FriendshipError", m.py().get_type::<FriendshipError>())?;
    m.add_class::<PyDigraph>()?;
    m.add_class::<PyDesign>()?;
    m.add_function(wrap_pyfunction!(fancy_wheel, m)?)?;
    m.add_function(wrap_pyfunction!(projective_plane, m)?)?;
    m.add_function(wrap_pyfunction!(digraph_from_sbibd, m)?)?;
    m.add_function(wrap_pyfunction!(design_from_digraph, m)?)?;
    m.add_function(wrap_pyfunction!(complement_sdr, m)?)?;
    m.add_function(wrap_pyfunction!(check_hall_condition, m)?)?;
    m.add_function(wrap_pyfunction!(bipartite_max_matching, m)?)?;
    m.add_function(wrap_pyfunction!(is_friendship, m)?)?;
    m.add_function(wrap_pyfunction!(consequence_reports, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_friendship_digraphs, m)?)?;
    m.add_function(wrap_pyfunction!(is_isomorphic, m)?)?;
    Ok(())
}
