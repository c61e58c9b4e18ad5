//! Python bindings for the D2CS library.
//!
//! Exposes the graph type, the family generators, the closed-form counters,
//! the brute-force oracle, the square-clique enumerator and the strongly
//! chordal machinery. Vertex sets cross the boundary as sorted lists of
//! 1-based ids; counts come back as Python ints with full precision.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use d2cs_core::formulas::BigCount;
use d2cs_core::generators::FamilySpec;
use d2cs_core::graph::Graph as CoreGraph;
use d2cs_core::schordal::{EliminationOrdering, SeoCheck};
use d2cs_core::{edgelist, enum_all, formulas, oracle, reconcile, schordal, Distance, VertexSet};

fn err(e: d2cs_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_set(members: &[usize]) -> VertexSet {
    members.iter().copied().collect()
}

fn sets_to_lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

fn effective_limit(limit: Option<usize>) -> usize {
    limit.unwrap_or(oracle::DEFAULT_LIMIT)
}

type OracleTriple = (BigCount, Vec<BigCount>, Option<Vec<Vec<usize>>>);

/// A simple undirected graph on vertices 1..=n.
#[pyclass(frozen, module = "d2cs")]
struct Graph {
    inner: CoreGraph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph {
            inner: CoreGraph::new(n, &edges).map_err(err)?,
        })
    }

    /// Parse the edge-list format ("n m" header, then "u v" lines).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: edgelist::parse(text).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self
            .inner
            .closed_neighborhood(v)
            .map_err(err)?
            .to_vec()
            .into_iter()
            .filter(|&u| u != v)
            .collect())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        Ok(self.neighbors(v)?.len())
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        let nbrs = self.neighbors(u)?;
        if v < 1 || v > self.inner.n() {
            return Err(err(d2cs_core::Error::VertexOutOfRange {
                v,
                n: self.inner.n(),
            }));
        }
        Ok(nbrs.contains(&v))
    }

    /// Shortest-path distances from `source`, indexed by vertex; None for
    /// unreachable vertices.
    fn bfs_distances(&self, source: usize) -> PyResult<Vec<Option<usize>>> {
        Ok(self
            .inner
            .bfs_distances(source)
            .map_err(err)?
            .into_iter()
            .map(Distance::as_finite)
            .collect())
    }

    /// None when the graph is disconnected.
    fn diameter(&self) -> Option<usize> {
        self.inner.diameter().as_finite()
    }

    fn square(&self) -> Graph {
        Graph {
            inner: self.inner.square(),
        }
    }

    /// The subgraph induced by `members`, plus the map from new ids back to
    /// original ids.
    fn induced_subgraph(&self, members: Vec<usize>) -> PyResult<(Graph, Vec<usize>)> {
        let (g, map) = self
            .inner
            .induced_subgraph(&to_set(&members))
            .map_err(err)?;
        Ok((Graph { inner: g }, map))
    }

    fn is_d2cs(&self, members: Vec<usize>) -> PyResult<bool> {
        self.inner.is_d2cs(&to_set(&members)).map_err(err)
    }

    fn closed_neighborhood(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.closed_neighborhood(v).map_err(err)?.to_vec())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.inner.components().iter().map(|c| c.to_vec()).collect()
    }

    fn to_edgelist(&self) -> String {
        edgelist::write(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Build a family instance; same surface as the CLI: generate("kary", "2,3").
#[pyfunction]
#[pyo3(signature = (family, params, seed=None))]
fn generate(family: &str, params: &str, seed: Option<u64>) -> PyResult<Graph> {
    let spec = FamilySpec::from_cli(family, params, seed).map_err(err)?;
    Ok(Graph {
        inner: spec.generate().map_err(err)?,
    })
}

/// Evaluate a family's closed-form count. Returns (value, disputed): the
/// k-tree formula is disputed because it ignores the instance shape.
#[pyfunction]
fn count_formula(family: &str, params: &str) -> PyResult<(BigCount, bool)> {
    let spec = FamilySpec::from_cli(family, params, None).map_err(err)?;
    let v = spec.formula_count().map_err(err)?;
    Ok((v.value, v.disputed))
}

#[pyfunction]
fn fib(n: u64) -> BigCount {
    formulas::fib(n)
}

#[pyfunction]
fn lucas(n: u64) -> BigCount {
    formulas::lucas(n)
}

/// (lower, upper, fmax) for rooted trees with max degree k and height h.
#[pyfunction]
fn kary_bounds(k: u64, h: u64) -> PyResult<(BigCount, BigCount, BigCount)> {
    let b = formulas::kary_bounds(k, h).map_err(err)?;
    Ok((b.lower, b.upper, b.fmax))
}

/// Brute-force count of all D2CS. Returns (total, by_size, sets); sets is
/// None unless collect is set, and comes in ascending bitmask order.
#[pyfunction]
#[pyo3(signature = (graph, collect=false, limit=None))]
fn oracle_count(graph: &Graph, collect: bool, limit: Option<usize>) -> PyResult<OracleTriple> {
    let r =
        oracle::oracle_count_limited(&graph.inner, collect, effective_limit(limit)).map_err(err)?;
    Ok((r.total, r.by_size, r.sets.as_deref().map(sets_to_lists)))
}

#[pyfunction]
#[pyo3(signature = (graph, limit=None))]
fn oracle_maximal(graph: &Graph, limit: Option<usize>) -> PyResult<Vec<Vec<usize>>> {
    let sets = oracle::oracle_maximal_limited(&graph.inner, effective_limit(limit)).map_err(err)?;
    Ok(sets_to_lists(&sets))
}

#[pyfunction]
#[pyo3(signature = (graph, limit=None))]
fn oracle_maximum(graph: &Graph, limit: Option<usize>) -> PyResult<Vec<usize>> {
    Ok(
        oracle::oracle_maximum_limited(&graph.inner, effective_limit(limit))
            .map_err(err)?
            .to_vec(),
    )
}

/// Count all D2CS of a connected graph via cliques of the square. Returns
/// (total, sets) where sets lists the size->=3 D2CS when emit_sets is set.
#[pyfunction]
#[pyo3(signature = (graph, emit_sets=false))]
fn enum_all_d2cs(graph: &Graph, emit_sets: bool) -> PyResult<(BigCount, Option<Vec<Vec<usize>>>)> {
    let mut sets = emit_sets.then(Vec::new);
    let total = enum_all::enum_all_d2cs(&graph.inner, |s| {
        if let Some(sets) = sets.as_mut() {
            sets.push(s.to_vec());
        }
    })
    .map_err(err)?;
    Ok((total, sets))
}

/// None when the ordering is a strong elimination ordering, otherwise a
/// description of the first violation.
#[pyfunction]
fn verify_seo(graph: &Graph, order: Vec<usize>) -> PyResult<Option<String>> {
    let ordering = EliminationOrdering::new(order).map_err(err)?;
    match schordal::verify_seo(&graph.inner, &ordering).map_err(err)? {
        SeoCheck::Valid => Ok(None),
        SeoCheck::Violation(v) => Ok(Some(v.to_string())),
    }
}

/// A strong elimination ordering, or None when the graph has none (is not
/// strongly chordal).
#[pyfunction]
fn find_seo(graph: &Graph) -> Option<Vec<usize>> {
    schordal::find_seo(&graph.inner).map(|o| o.as_slice().to_vec())
}

/// Run the published pseudocode literally. Returns (sets, notes) with sets
/// in print order, optionally deduplicated.
#[pyfunction]
#[pyo3(signature = (graph, order, dedup=false))]
fn maximal_d2cs_paper(
    graph: &Graph,
    order: Vec<usize>,
    dedup: bool,
) -> PyResult<(Vec<Vec<usize>>, Vec<String>)> {
    let ordering = EliminationOrdering::new(order).map_err(err)?;
    let run = schordal::maximal_d2cs_paper(&graph.inner, &ordering).map_err(err)?;
    let sets = if dedup {
        run.deduped()
    } else {
        run.printed.clone()
    };
    Ok((sets_to_lists(&sets), run.notes))
}

/// The maximal-D2CS family of a connected strongly chordal graph.
#[pyfunction]
fn maximal_d2cs_reference(graph: &Graph) -> PyResult<Vec<Vec<usize>>> {
    Ok(sets_to_lists(
        &schordal::maximal_d2cs_reference(&graph.inner).map_err(err)?,
    ))
}

#[pyfunction]
fn count_maximal_schordal(graph: &Graph) -> PyResult<BigCount> {
    schordal::count_maximal_schordal(&graph.inner).map_err(err)
}

/// Run a default reconciliation suite ("all", "formulas", "findings" or
/// "schordal") and return the JSON report.
#[pyfunction]
#[pyo3(signature = (suite="all", limit=None))]
fn reconcile_default(suite: &str, limit: Option<usize>) -> PyResult<String> {
    let checks = match suite {
        "all" => reconcile::default_suite(),
        "formulas" => reconcile::default_formula_checks(),
        "findings" => reconcile::default_findings_checks(),
        "schordal" => reconcile::default_schordal_checks(),
        other => return Err(PyValueError::new_err(format!("unknown suite '{other}'"))),
    };
    Ok(reconcile::run(&checks, effective_limit(limit), false).to_json())
}

#[pymodule]
fn d2cs(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(count_formula, m)?)?;
    m.add_function(wrap_pyfunction!(fib, m)?)?;
    m.add_function(wrap_pyfunction!(lucas, m)?)?;
    m.add_function(wrap_pyfunction!(kary_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_count, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_maximal, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_maximum, m)?)?;
    m.add_function(wrap_pyfunction!(enum_all_d2cs, m)?)?;
    m.add_function(wrap_pyfunction!(verify_seo, m)?)?;
    m.add_function(wrap_pyfunction!(find_seo, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_d2cs_paper, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_d2cs_reference, m)?)?;
    m.add_function(wrap_pyfunction!(count_maximal_schordal, m)?)?;
    m.add_function(wrap_pyfunction!(reconcile_default, m)?)?;
    m.add("ORACLE_DEFAULT_LIMIT", oracle::DEFAULT_LIMIT)?;
    Ok(())
}
