//! Python bindings. Polynomials are coefficient lists in ascending degree,
//! rationals are `fractions.Fraction`, and groups are lists of generating
//! image arrays (the automorphism group when omitted).

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::Value;

use orbchrom::automorphism::automorphism_group;
use orbchrom::forge::{check_problem1, find_premise, forge as forge_graph, DEFAULT_S_MAX};
use orbchrom::graph::Graph as CoreGraph;
use orbchrom::json as j;
use orbchrom::outerplanar::verify_theorem2;
use orbchrom::perm::{quotient as quotient_graph, PermGroup, Permutation};
use orbchrom::planarity::{is_outerplanar, is_planar};
use orbchrom::poly::{chromatic as chromatic_poly, orbital_chromatic as orbital_poly, IntPoly};
use orbchrom::roots::{default_width, isolate_real_roots, RealRoot};
use orbchrom::{Error, Rational};

create_exception!(orbchrom, OrbchromError, PyValueError);
create_exception!(orbchrom, PremiseError, OrbchromError);
create_exception!(orbchrom, ExhaustedError, OrbchromError);
create_exception!(orbchrom, ResourceLimitError, OrbchromError);

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::Premise(_) => PremiseError::new_err(msg),
        Error::Exhausted { .. } => ExhaustedError::new_err(msg),
        Error::ResourceLimit { .. } => ResourceLimitError::new_err(msg),
        _ => OrbchromError::new_err(msg),
    }
}

/// A finite simple graph on vertices `0..n`, optionally with loops.
#[pyclass(frozen, eq, skip_from_py_object, module = "orbchrom")]
#[derive(Clone, PartialEq)]
struct Graph {
    inner: CoreGraph,
}

fn wrap(g: orbchrom::Result<CoreGraph>) -> PyResult<Graph> {
    g.map(|inner| Graph { inner }).map_err(to_py)
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges, loops = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>, loops: Vec<usize>) -> PyResult<Self> {
        wrap(CoreGraph::from_parts(n, edges, loops))
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        wrap(CoreGraph::cycle(n))
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        wrap(CoreGraph::path(n))
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        wrap(CoreGraph::complete(n))
    }

    /// `K_n` joined to `s` independent vertices.
    #[staticmethod]
    fn clique_star(n: usize, s: usize) -> PyResult<Self> {
        wrap(CoreGraph::clique_star(n, s))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| OrbchromError::new_err(e.to_string()))?;
        wrap(j::graph_from_json(&v))
    }

    fn to_json(&self) -> String {
        j::graph_to_json(&self.inner).to_string()
    }

    /// Copy `i` of `K_n ∨ E_s` attached at each vertex.
    fn suspend(&self, n: usize, s: usize) -> PyResult<Self> {
        wrap(self.inner.suspend(n, s))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.num_vertices()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().iter().map(|e| (e.u, e.v)).collect()
    }

    #[getter]
    fn loops(&self) -> Vec<usize> {
        self.inner.loops().to_vec()
    }

    fn is_planar(&self) -> bool {
        is_planar(&self.inner)
    }

    fn is_outerplanar(&self) -> PyResult<bool> {
        is_outerplanar(&self.inner).map_err(to_py)
    }

    fn automorphism_order(&self) -> PyResult<usize> {
        automorphism_group(&self.inner)
            .map(|g| g.order())
            .map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, {:?})", self.n(), self.edges())
    }
}

fn group(g: &CoreGraph, generators: Option<Vec<Vec<usize>>>) -> PyResult<PermGroup> {
    match generators {
        None => automorphism_group(g).map_err(to_py),
        Some(gens) => {
            let gens = gens
                .into_iter()
                .map(Permutation::new)
                .collect::<orbchrom::Result<Vec<_>>>()
                .map_err(to_py)?;
            PermGroup::close(g.num_vertices(), &gens).map_err(to_py)
        }
    }
}

fn coeffs(p: &IntPoly) -> Vec<BigInt> {
    p.coeffs().to_vec()
}

fn json_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

/// Chromatic polynomial coefficients, ascending.
#[pyfunction]
fn chromatic(g: &Graph) -> Vec<BigInt> {
    coeffs(&chromatic_poly(&g.inner))
}

/// Orbital chromatic polynomial as `(numerator coefficients, denominator)`.
#[pyfunction]
#[pyo3(signature = (g, generators = None))]
fn orbital_chromatic(
    g: &Graph,
    generators: Option<Vec<Vec<usize>>>,
) -> PyResult<(Vec<BigInt>, BigInt)> {
    let op = orbital_poly(&g.inner, &group(&g.inner, generators)?).map_err(to_py)?;
    Ok((coeffs(op.numerator()), op.denominator().clone()))
}

/// Quotient graph by one automorphism.
#[pyfunction]
fn quotient(g: &Graph, images: Vec<usize>) -> PyResult<Graph> {
    let p = Permutation::new(images).map_err(to_py)?;
    wrap(quotient_graph(&g.inner, &p))
}

/// Exact rational roots, then isolating intervals of the remaining roots.
type Roots = (Vec<Rational>, Vec<(Rational, Rational)>);

/// Real roots of an integer polynomial: `(exact, intervals)` where exact
/// roots are fractions and every other root lies in a half-open `(lo, hi]`.
#[pyfunction]
#[pyo3(signature = (coefficients, width = None))]
fn real_roots(coefficients: Vec<BigInt>, width: Option<Rational>) -> PyResult<Roots> {
    let p = IntPoly::new(coefficients);
    let report = isolate_real_roots(&p, &width.unwrap_or_else(default_width)).map_err(to_py)?;
    let mut exact = Vec::new();
    let mut intervals = Vec::new();
    for root in &report.roots {
        match root {
            RealRoot::Rational(x) => exact.push(x.clone()),
            RealRoot::Irrational { interval, .. } => {
                intervals.push((interval.lo.clone(), interval.hi.clone()))
            }
        }
    }
    Ok((exact, intervals))
}

/// Whether every real orbital chromatic root is at most the largest chromatic root.
#[pyfunction]
#[pyo3(signature = (g, generators = None))]
fn check_bound<'py>(
    py: Python<'py>,
    g: &Graph,
    generators: Option<Vec<Vec<usize>>>,
) -> PyResult<Bound<'py, PyAny>> {
    let report = check_problem1(&g.inner, &group(&g.inner, generators)?).map_err(to_py)?;
    json_to_py(py, &j::bound_report_to_json(&report))
}

/// Builds a graph and group whose orbital chromatic polynomial has a root
/// above every chromatic root, as a JSON-shaped dict.
#[pyfunction]
#[pyo3(signature = (g, generators = None, s_max = DEFAULT_S_MAX))]
fn forge<'py>(
    py: Python<'py>,
    g: &Graph,
    generators: Option<Vec<Vec<usize>>>,
    s_max: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let group = group(&g.inner, generators)?;
    let premise = find_premise(&g.inner, &group)
        .map_err(to_py)?
        .ok_or_else(|| PremiseError::new_err("no element with a unique smallest quotient that is negative above the chromatic roots"))?;
    let result = forge_graph(&premise, s_max).map_err(to_py)?;
    json_to_py(py, &j::forge_result_to_json(&result))
}

/// Chromatic roots and per-subgroup bound verdicts for an outerplanar graph.
#[pyfunction]
fn verify_outerplanar<'py>(py: Python<'py>, g: &Graph) -> PyResult<Bound<'py, PyAny>> {
    let report = verify_theorem2(&g.inner).map_err(to_py)?;
    json_to_py(py, &j::outerplanar_report_to_json(&report))
}

#[pymodule(name = "orbchrom")]
mod module {
    #[pymodule_export]
    use super::{
        check_bound, chromatic, forge, orbital_chromatic, quotient, real_roots, verify_outerplanar,
        ExhaustedError, Graph, OrbchromError, PremiseError, ResourceLimitError,
    };
}
