//! Python bindings. Exact rationals cross the boundary as
//! `fractions.Fraction`; inputs may be ints, Fractions or `"p/q"` strings.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use dcomplete::catalog::{catalog, catalog_poset};
use dcomplete::classical::{classical_insert_rsk, reading_order, toggle_rpp as rpp_by_toggles, MatrixFilling};
use dcomplete::dstructure::{check_d_complete, find_d_intervals};
use dcomplete::extensions::{collect_linear_extensions, count_linear_extensions_capped, DEFAULT_CAP};
use dcomplete::format::{parse_poset, write_poset};
use dcomplete::hooks::RationalPoint;
use dcomplete::rational::{format_rational, parse_rational};
use dcomplete::rsk::{diagonal_sums, inverse_rsk, is_stable, rsk, stable_insertion_order, Filling, InsertionOrder};
use dcomplete::suite::{Suite, CRITERIA};
use dcomplete::verify::{verify_multivariate, verify_proctor_capped, weight_eval};
use dcomplete::{Analysis, Error, LinearExtension, Poset, Rational};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Contract(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((format_rational(r),))
}

fn big_int<'py>(py: Python<'py>, v: impl ToString) -> PyResult<Bound<'py, PyAny>> {
    py.import("builtins")?.getattr("int")?.call1((v.to_string(),))
}

fn rationals(values: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    values
        .iter()
        .map(|v| parse_rational(&v.str()?.to_string()).map_err(to_py_err))
        .collect()
}

fn fractions<'py>(py: Python<'py>, values: &[Rational]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    values.iter().map(|v| fraction(py, v)).collect()
}

/// A finite poset; covers are `(low, high)` pairs on elements `0..n`.
#[pyclass(name = "Poset", module = "dcomplete_py")]
struct PyPoset {
    poset: Poset,
    analysis: Option<Analysis>,
}

impl PyPoset {
    fn wrap(poset: Poset) -> Self {
        let analysis = Analysis::new(poset.clone()).ok();
        PyPoset { poset, analysis }
    }

    fn analysis(&self) -> PyResult<&Analysis> {
        self.analysis
            .as_ref()
            .ok_or_else(|| PyValueError::new_err("the poset is not d-complete"))
    }

    fn order(&self, order: Option<Vec<usize>>) -> Option<InsertionOrder> {
        order.map(|o| InsertionOrder(LinearExtension(o)))
    }
}

#[pymethods]
impl PyPoset {
    #[new]
    #[pyo3(signature = (n, covers, names=None))]
    fn new(n: usize, covers: Vec<(usize, usize)>, names: Option<Vec<String>>) -> PyResult<Self> {
        let mut poset = Poset::from_cover_relations(n, &covers).map_err(to_py_err)?;
        if let Some(names) = names {
            if names.len() != n {
                return Err(PyValueError::new_err(format!("{} names for {n} elements", names.len())));
            }
            poset = poset.with_names(names);
        }
        Ok(PyPoset::wrap(poset))
    }

    /// Parses the `elements` / `name` / `cover` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyPoset::wrap(parse_poset(text).map_err(to_py_err)?))
    }

    /// A built-in poset such as `d4`, `young-3,2`, `shifted-4,2`,
    /// `tree-5-2` or `ten-element`.
    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        Ok(PyPoset::wrap(catalog_poset(name).map_err(to_py_err)?))
    }

    fn to_text(&self) -> String {
        write_poset(&self.poset)
    }

    fn __len__(&self) -> usize {
        self.poset.len()
    }

    fn __repr__(&self) -> String {
        format!("Poset(n={}, covers={:?})", self.poset.len(), self.poset.cover_pairs())
    }

    #[getter]
    fn covers(&self) -> Vec<(usize, usize)> {
        self.poset.cover_pairs().to_vec()
    }

    #[getter]
    fn names(&self) -> Vec<Option<String>> {
        self.poset.elements().map(|p| self.poset.name(p).map(str::to_string)).collect()
    }

    fn leq(&self, a: usize, b: usize) -> PyResult<bool> {
        if a >= self.poset.len() || b >= self.poset.len() {
            return Err(PyValueError::new_err("element out of range"));
        }
        Ok(self.poset.leq(a, b))
    }

    fn is_d_complete(&self) -> bool {
        self.analysis.is_some()
    }

    /// `(axiom, witness)` pairs; empty for a d-complete poset.
    fn violations(&self) -> Vec<(u8, Vec<usize>)> {
        check_d_complete(&self.poset)
            .violations
            .into_iter()
            .map(|v| (v.axiom, v.witness))
            .collect()
    }

    fn d_intervals<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        find_d_intervals(&self.poset)
            .into_iter()
            .map(|d| {
                let out = PyDict::new(py);
                out.set_item("k", d.k)?;
                out.set_item("bottom", d.bottom)?;
                out.set_item("top", d.top)?;
                out.set_item("sides", d.sides)?;
                out.set_item("neck", d.neck)?;
                out.set_item("tail", d.tail)?;
                Ok(out)
            })
            .collect()
    }

    /// Each diagonal as a chain, bottom element first.
    fn diagonals(&self) -> PyResult<Vec<Vec<usize>>> {
        let an = self.analysis()?;
        let part = an.diagonals();
        Ok((0..part.len()).map(|d| part.chain(an.poset(), d)).collect())
    }

    fn adjacent_diagonals(&self) -> PyResult<Vec<(usize, usize)>> {
        Ok(self.analysis()?.diagonals().adjacent_pairs())
    }

    fn hook_vectors(&self) -> PyResult<Vec<Vec<i64>>> {
        Ok(self.analysis()?.hooks().iter().map(|h| h.entries().to_vec()).collect())
    }

    fn hook_lengths(&self) -> PyResult<Vec<i64>> {
        Ok(self.analysis()?.hook_lengths())
    }

    /// `H_p(x)` for every element at a positive point indexed by diagonal.
    fn hook_polynomials<'py>(&self, py: Python<'py>, x: Vec<Bound<'py, PyAny>>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let point = RationalPoint::new(rationals(&x)?).map_err(to_py_err)?;
        let values = self.analysis()?.hook_polynomials(&point).map_err(to_py_err)?;
        fractions(py, &values)
    }

    #[pyo3(signature = (cap=DEFAULT_CAP))]
    fn linear_extensions(&self, cap: u64) -> PyResult<Vec<Vec<usize>>> {
        Ok(collect_linear_extensions(&self.poset, cap)
            .map_err(to_py_err)?
            .into_iter()
            .map(|t| t.0)
            .collect())
    }

    #[pyo3(signature = (cap=DEFAULT_CAP))]
    fn count_linear_extensions<'py>(&self, py: Python<'py>, cap: u64) -> PyResult<Bound<'py, PyAny>> {
        big_int(py, count_linear_extensions_capped(&self.poset, cap).map_err(to_py_err)?)
    }

    /// RSK of a nonnegative filling, along `order` (top element first) or
    /// a stable order.
    #[pyo3(signature = (t, order=None))]
    fn rsk<'py>(&self, py: Python<'py>, t: Vec<Bound<'py, PyAny>>, order: Option<Vec<usize>>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let an = self.analysis()?;
        let s = rsk(an, &Filling::new(rationals(&t)?), self.order(order).as_ref()).map_err(to_py_err)?;
        fractions(py, s.values())
    }

    #[pyo3(signature = (s, order=None))]
    fn inverse_rsk<'py>(&self, py: Python<'py>, s: Vec<Bound<'py, PyAny>>, order: Option<Vec<usize>>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let an = self.analysis()?;
        let t = inverse_rsk(an, &Filling::new(rationals(&s)?), self.order(order).as_ref()).map_err(to_py_err)?;
        fractions(py, t.values())
    }

    fn stable_order(&self) -> PyResult<Vec<usize>> {
        Ok(stable_insertion_order(self.analysis()?).map_err(to_py_err)?.0 .0)
    }

    fn is_stable(&self, order: Vec<usize>) -> PyResult<bool> {
        Ok(is_stable(self.analysis()?, &InsertionOrder(LinearExtension(order))))
    }

    fn diagonal_sums<'py>(&self, py: Python<'py>, s: Vec<Bound<'py, PyAny>>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let an = self.analysis()?;
        if s.len() != an.len() {
            return Err(PyValueError::new_err(format!("{} values for {} elements", s.len(), an.len())));
        }
        fractions(py, &diagonal_sums(an.diagonals(), &Filling::new(rationals(&s)?)))
    }

    /// `weight(T)` of a linear extension listed top element first.
    fn weight<'py>(&self, py: Python<'py>, extension: Vec<usize>, x: Vec<Bound<'py, PyAny>>) -> PyResult<Bound<'py, PyAny>> {
        let point = RationalPoint::new(rationals(&x)?).map_err(to_py_err)?;
        let w = weight_eval(self.analysis()?, &LinearExtension(extension), &point).map_err(to_py_err)?;
        fraction(py, &w.value)
    }

    /// `{"extensions", "hook_product", "factorial", "ok"}`.
    #[pyo3(signature = (cap=DEFAULT_CAP))]
    fn verify_proctor<'py>(&self, py: Python<'py>, cap: u64) -> PyResult<Bound<'py, PyDict>> {
        let c = verify_proctor_capped(self.analysis()?, cap).map_err(to_py_err)?;
        let out = PyDict::new(py);
        out.set_item("extensions", big_int(py, &c.extensions)?)?;
        out.set_item("hook_product", big_int(py, &c.hook_product)?)?;
        out.set_item("factorial", big_int(py, &c.factorial)?)?;
        out.set_item("ok", c.ok)?;
        Ok(out)
    }

    /// Whether the multivariate identity holds exactly at `points` random
    /// rational points.
    #[pyo3(signature = (points=20, seed=7, cap=DEFAULT_CAP))]
    fn verify_hlf(&self, points: usize, seed: u64, cap: u64) -> PyResult<bool> {
        Ok(verify_multivariate(self.analysis()?, points, seed, cap).map_err(to_py_err)?.ok())
    }
}

#[pyfunction]
fn catalog_names() -> Vec<String> {
    catalog().into_iter().map(|e| e.name).collect()
}

type Rows = Vec<Vec<u64>>;

fn matrix(rows: Rows) -> PyResult<MatrixFilling> {
    MatrixFilling::new(rows).map_err(to_py_err)
}

/// The insertion tableaux `(P, Q)` of a nonnegative integer matrix.
#[pyfunction]
fn classical_rsk(rows: Rows) -> PyResult<(Rows, Rows)> {
    let (p, q) = classical_insert_rsk(&matrix(rows)?);
    Ok((p.rows().to_vec(), q.rows().to_vec()))
}

/// The reverse plane partition built square by square in reading order.
#[pyfunction]
fn toggle_rpp(rows: Rows) -> PyResult<Rows> {
    let m = matrix(rows)?;
    let r = rpp_by_toggles(&m, &reading_order(m.height(), m.width())).map_err(to_py_err)?;
    Ok(r.rows().to_vec())
}

/// `(id, name, passed, detail)`.
type CriterionRow = (usize, String, bool, String);

/// One row per acceptance criterion run.
#[pyfunction]
#[pyo3(signature = (seed=7, criterion=None))]
fn run_suite(seed: u64, criterion: Option<usize>) -> PyResult<Vec<CriterionRow>> {
    let ids: Vec<usize> = match criterion {
        Some(id) if (1..=CRITERIA).contains(&id) => vec![id],
        Some(id) => return Err(PyValueError::new_err(format!("no criterion {id}"))),
        None => (1..=CRITERIA).collect(),
    };
    let suite = Suite::new(seed).map_err(to_py_err)?;
    Ok(ids
        .into_iter()
        .map(|id| {
            let r = suite.criterion(id);
            (r.id, r.name.to_string(), r.passed, r.detail)
        })
        .collect())
}

#[pymodule]
fn dcomplete_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoset>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(classical_rsk, m)?)?;
    m.add_function(wrap_pyfunction!(toggle_rpp, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
