//! Python bindings: certificates, verification, clique queries and search.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ::cyclic_ramsey as core;
use core::{CirculantGraph, ColorVerdict, DistanceSet};

fn to_py_err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn graph(n: usize, distances: Vec<usize>) -> PyResult<CirculantGraph> {
    CirculantGraph::new(n, distances.into_iter().collect()).map_err(to_py_err)
}

#[pyclass(
    name = "Certificate",
    module = "cyclic_ramsey",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyCertificate {
    inner: core::ColoringCertificate,
}

#[pymethods]
impl PyCertificate {
    #[new]
    #[pyo3(signature = (n, colors, targets, name=None))]
    fn new(
        n: usize,
        colors: Vec<Vec<usize>>,
        targets: Vec<usize>,
        name: Option<String>,
    ) -> PyResult<Self> {
        let colors = colors
            .into_iter()
            .map(|c| c.into_iter().collect::<DistanceSet>())
            .collect();
        core::ColoringCertificate::new(n, colors, targets, name)
            .map(|inner| PyCertificate { inner })
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::parse_certificate(text)
            .map(|inner| PyCertificate { inner })
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        core::builtin_certificate(name)
            .map(|inner| PyCertificate { inner })
            .map_err(to_py_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn name(&self) -> Option<String> {
        self.inner.name.clone()
    }

    #[getter]
    fn colors(&self) -> Vec<Vec<usize>> {
        self.inner
            .colors
            .iter()
            .map(|c| c.as_slice().to_vec())
            .collect()
    }

    #[getter]
    fn targets(&self) -> Vec<usize> {
        self.inner.targets.clone()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    /// Structural problems as strings; empty when valid.
    fn validate(&self) -> Vec<String> {
        self.inner
            .validate_structure()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    /// Image under `x -> u*x` for a unit `u` modulo `n`.
    fn scaled(&self, u: usize) -> PyResult<Self> {
        self.inner
            .scaled(u)
            .map(|inner| PyCertificate { inner })
            .map_err(to_py_err)
    }

    /// 1-based color of edge `{i, j}`, or None.
    fn edge_color(&self, i: usize, j: usize) -> Option<usize> {
        core::edge_color(&self.inner, i, j)
    }

    fn __repr__(&self) -> String {
        format!(
            "Certificate(name={:?}, n={}, targets={:?})",
            self.inner.display_name(),
            self.inner.n,
            self.inner.targets
        )
    }

    fn __str__(&self) -> String {
        self.inner.to_text()
    }
}

#[pyclass(name = "Report", module = "cyclic_ramsey", frozen)]
pub struct PyReport {
    inner: core::VerificationReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn valid(&self) -> bool {
        self.inner.is_valid()
    }

    #[getter]
    fn proven_bound(&self) -> Option<String> {
        self.inner.proven_bound()
    }

    /// True per color when that color is clique-free.
    #[getter]
    fn pattern(&self) -> Vec<bool> {
        self.inner.pattern()
    }

    /// One entry per color: the witness vertices, or None.
    #[getter]
    fn witnesses(&self) -> Vec<Option<Vec<usize>>> {
        self.inner
            .colors
            .iter()
            .map(|c| match &c.verdict {
                ColorVerdict::Violated(w) => Some(w.vertices.clone()),
                _ => None,
            })
            .collect()
    }

    #[getter]
    fn elapsed_ms(&self) -> f64 {
        self.inner.elapsed().as_secs_f64() * 1e3
    }

    fn render(&self) -> String {
        self.inner.render()
    }

    fn summary(&self) -> String {
        self.inner.summary_line()
    }

    fn __repr__(&self) -> String {
        format!("Report({})", self.inner.result_line())
    }
}

#[pyfunction]
fn builtin_names() -> Vec<&'static str> {
    core::BUILTIN_NAMES.to_vec()
}

#[pyfunction]
#[pyo3(signature = (cert, brute_force=false, fail_fast=false))]
fn verify(
    py: Python<'_>,
    cert: &PyCertificate,
    brute_force: bool,
    fail_fast: bool,
) -> PyResult<PyReport> {
    let options = core::VerifyOptions {
        fail_fast,
        ..Default::default()
    };
    let cert = cert.inner.clone();
    let report = py.detach(move || {
        if brute_force {
            core::verifier::verify_with_oracle_opts(&cert, &options)
        } else {
            core::verify_with(&cert, &options)
        }
    });
    report.map(|inner| PyReport { inner }).map_err(to_py_err)
}

#[pyfunction]
fn circular_distance(i: usize, j: usize, n: usize) -> PyResult<usize> {
    if i >= n || j >= n || i == j {
        return Err(PyValueError::new_err("need distinct vertices in 0..n"));
    }
    Ok(core::circular_distance(i, j, n))
}

/// A K_t in the circulant graph, as sorted vertices, or None.
#[pyfunction]
fn has_clique(n: usize, distances: Vec<usize>, t: usize) -> PyResult<Option<Vec<usize>>> {
    if t == 0 {
        return Err(PyValueError::new_err("t must be at least 1"));
    }
    Ok(core::has_clique(&graph(n, distances)?, t).map(|w| w.vertices))
}

#[pyfunction]
fn max_clique(n: usize, distances: Vec<usize>, cap: usize) -> PyResult<usize> {
    if cap == 0 {
        return Err(PyValueError::new_err("cap must be at least 1"));
    }
    Ok(core::max_clique_bounded(&graph(n, distances)?, cap))
}

#[pyfunction]
fn count_cliques_through_zero(n: usize, distances: Vec<usize>, t: usize) -> PyResult<u64> {
    if t == 0 {
        return Err(PyValueError::new_err("t must be at least 1"));
    }
    Ok(core::count_cliques_through_zero(&graph(n, distances)?, t))
}

/// Returns `(certificate or None, log lines)`.
#[pyfunction]
#[pyo3(signature = (n, targets, seed, max_iters=10_000, restarts=10, tabu_tenure=None, workers=1))]
#[allow(clippy::too_many_arguments)]
fn search(
    py: Python<'_>,
    n: usize,
    targets: Vec<usize>,
    seed: u64,
    max_iters: u64,
    restarts: u64,
    tabu_tenure: Option<usize>,
    workers: usize,
) -> PyResult<(Option<PyCertificate>, Vec<String>)> {
    let tabu_tenure = tabu_tenure.unwrap_or_else(|| core::search::default_tenure(n, targets.len()));
    let config = core::SearchConfig {
        n,
        targets,
        seed,
        max_iters,
        restarts,
        tabu_tenure,
        workers,
    };
    let outcome = py
        .detach(move || core::search(&config))
        .map_err(to_py_err)?;
    Ok((
        outcome.certificate.map(|inner| PyCertificate { inner }),
        outcome.log,
    ))
}

#[pymodule(name = "cyclic_ramsey")]
fn cyclic_ramsey_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCertificate>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(builtin_names, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(circular_distance, m)?)?;
    m.add_function(wrap_pyfunction!(has_clique, m)?)?;
    m.add_function(wrap_pyfunction!(max_clique, m)?)?;
    m.add_function(wrap_pyfunction!(count_cliques_through_zero, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    Ok(())
}
