//! Python bindings. Reports come back as plain dicts and lists.

use clap::Parser;
use dahalab::cli::{emit, run, Cli};
use dahalab::cm::{self, CMPoint, DiagPair};
use dahalab::daha::{self, Rep};
use dahalab::macdonald::{self, Convention, HcDictionary};
use dahalab::params::Params;
use dahalab::qgroup::{self, AlgebraKind, QuadraticAlgebra, UqModel, UqRep};
use dahalab::report::Suite;
use dahalab::scalar::{parse_rational, Field, QTScalar, Rational, SpecMap};
use dahalab::weight::Weight;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

fn err(e: dahalab::Error) -> PyErr {
    match e {
        dahalab::Error::Config(_) | dahalab::Error::Parse(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(a) => {
            let l = PyList::empty(py);
            for x in a {
                l.append(to_py(py, x)?)?;
            }
            l.into_any()
        }
        Value::Object(m) => {
            let d = PyDict::new(py);
            for (k, x) in m {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn suite<'py>(py: Python<'py>, s: &Suite) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &s.to_json())
}

fn rationals(v: &[String]) -> PyResult<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s).ok_or_else(|| PyValueError::new_err(format!("not a rational: {s:?}")))).collect()
}

fn rational(s: &str) -> PyResult<Rational> {
    parse_rational(s).ok_or_else(|| PyValueError::new_err(format!("not a rational: {s:?}")))
}

/// Element of `Q(q, t)`.
#[pyclass(name = "QT", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyQT(QTScalar);

#[pymethods]
impl PyQT {
    /// Parses strings such as `"(q^2 - t)/(1 + t)"`.
    #[new]
    fn new(s: &str) -> PyResult<Self> {
        s.parse().map(PyQT).map_err(err)
    }

    #[staticmethod]
    fn q() -> Self {
        PyQT(QTScalar::q())
    }

    #[staticmethod]
    fn t() -> Self {
        PyQT(QTScalar::t())
    }

    #[staticmethod]
    fn monomial(c: i64, a: i32, b: i32) -> Self {
        PyQT(QTScalar::monomial(c, a, b))
    }

    fn __add__(&self, o: &Self) -> Self {
        PyQT(self.0.add_ref(&o.0))
    }

    fn __sub__(&self, o: &Self) -> Self {
        PyQT(self.0.sub_ref(&o.0))
    }

    fn __mul__(&self, o: &Self) -> Self {
        PyQT(self.0.mul_ref(&o.0))
    }

    fn __truediv__(&self, o: &Self) -> PyResult<Self> {
        self.0.div_ref(&o.0).map(PyQT).ok_or_else(|| pyo3::exceptions::PyZeroDivisionError::new_err("division by zero"))
    }

    fn __neg__(&self) -> Self {
        PyQT(self.0.neg_ref())
    }

    fn __pow__(&self, e: i64, _m: Option<i64>) -> PyResult<Self> {
        self.0
            .pow_i(e)
            .map(PyQT)
            .ok_or_else(|| pyo3::exceptions::PyZeroDivisionError::new_err("zero to a negative power"))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QT({:?})", self.0.to_string())
    }
}

/// The polynomial representation at generic `(q, t)`.
#[pyclass(name = "Daha", frozen)]
struct PyDaha {
    rep: Rep<QTScalar>,
}

#[pymethods]
impl PyDaha {
    #[new]
    fn new(n: usize) -> PyResult<Self> {
        if !(1..=4).contains(&n) {
            return Err(PyValueError::new_err("n must be in 1..=4"));
        }
        Ok(PyDaha { rep: Rep::new(Params::generic(n)) })
    }

    #[getter]
    fn n(&self) -> usize {
        self.rep.n()
    }

    #[pyo3(signature = (window = 3))]
    fn verify_presentation<'py>(&self, py: Python<'py>, window: i64) -> PyResult<Bound<'py, PyAny>> {
        suite(py, &daha::verify_presentation(&self.rep, window))
    }

    #[pyo3(signature = (count = 200, max_len = 5, seed = 1, window = 3))]
    fn pbw_roundtrip<'py>(
        &self,
        py: Python<'py>,
        count: usize,
        max_len: usize,
        seed: u64,
        window: i64,
    ) -> PyResult<Bound<'py, PyAny>> {
        suite(py, &daha::pbw_roundtrip(&self.rep, count, max_len, seed, window))
    }

    fn spherical<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        suite(py, &daha::spherical_check(self.rep.params()))
    }
}

fn convention(full: bool) -> Convention {
    if full {
        Convention::Full
    } else {
        Convention::Coset
    }
}

/// `P_lambda` at generic `(q, t)` as `[{"m": ..., "coeff": ...}]`.
#[pyfunction]
fn macdonald_poly<'py>(py: Python<'py>, lam: Vec<i64>) -> PyResult<Bound<'py, PyAny>> {
    let p = Params::<QTScalar>::generic(lam.len());
    let m = macdonald::macdonald_poly(&Weight(lam), &p).map_err(err)?;
    to_py(py, &m.poly.to_json())
}

#[pyfunction]
#[pyo3(signature = (n, full = true))]
fn hc_commute<'py>(py: Python<'py>, n: usize, full: bool) -> PyResult<Bound<'py, PyAny>> {
    suite(py, &macdonald::commuting_family_check(&Params::<QTScalar>::generic(n), convention(full)))
}

#[pyfunction]
#[pyo3(signature = (n, i, degree = 4, full = true, invert_t = true))]
fn hc_compare<'py>(
    py: Python<'py>,
    n: usize,
    i: usize,
    degree: i64,
    full: bool,
    invert_t: bool,
) -> PyResult<Bound<'py, PyAny>> {
    if i == 0 || i > n {
        return Err(PyValueError::new_err(format!("i must be in 1..={n}")));
    }
    let d = if invert_t { HcDictionary::InvertT } else { HcDictionary::Literal };
    suite(py, &macdonald::spherical_hc_compare(i, &Params::<QTScalar>::generic(n), degree, convention(full), d))
}

/// Central candidates at `q = u^m, t = u^k` with `u^m` of order `l`.
#[pyfunction]
#[pyo3(signature = (n, l, k = 1, m = 1, window = 3))]
fn center<'py>(py: Python<'py>, n: usize, l: u32, k: i64, m: i64, window: i64) -> PyResult<Bound<'py, PyAny>> {
    let s = SpecMap::new(l, k, m).map_err(err)?;
    let r = dahalab::center::center_suite(n, &s, window, false).map_err(err)?;
    suite(py, &r)
}

/// A Calogero-Moser point `(g, g', v, phi)` over the rationals.
#[pyclass(name = "CMPoint", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCMPoint(CMPoint<Rational>);

#[pymethods]
impl PyCMPoint {
    /// The explicit point `x_{h,h'}`; scalars are strings like `"3/4"`.
    #[staticmethod]
    fn from_pair(h: Vec<String>, hp: Vec<String>, zeta2l: &str) -> PyResult<Self> {
        if h.len() != hp.len() {
            return Err(PyValueError::new_err("h and hp differ in length"));
        }
        let d = DiagPair::new(rationals(&h)?, rationals(&hp)?);
        cm::point_from_pair(&d, &rational(zeta2l)?).map(PyCMPoint).map_err(err)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| PyValueError::new_err(e.to_string()))?;
        CMPoint::from_json(&v).map(PyCMPoint).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.to_json())
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn moment_plus_is_zero(&self) -> bool {
        cm::moment_plus(&self.0).is_zero()
    }

    fn is_cyclic(&self) -> bool {
        cm::is_cyclic(&self.0)
    }

    /// `(h, h')` with `h` sorted.
    fn normal_form(&self) -> PyResult<(Vec<String>, Vec<String>)> {
        let d = cm::normal_form(&self.0).map_err(err)?;
        let s = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect();
        Ok((s(&d.h), s(&d.hp)))
    }

    fn fourier(&self) -> PyResult<Self> {
        cm::fourier_point(&self.0).map(PyCMPoint).map_err(err)
    }

    /// Conjugate by an integer matrix given as rows.
    fn act(&self, rows: Vec<Vec<i64>>) -> PyResult<Self> {
        let a = dahalab::matrix::Matrix::from_rows(
            rows.into_iter().map(|r| r.into_iter().map(Rational::from_i64).collect()).collect(),
        );
        cm::g_act(&a, &self.0).map(PyCMPoint).map_err(err)
    }

    #[pyo3(signature = (depth = 2))]
    fn invariants<'py>(&self, py: Python<'py>, depth: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &cm::invariants(&self.0, depth).to_json())
    }
}

/// Antisymmetry and Jacobi for the matrix Poisson bracket, plus the
/// `{tr(g^a), tr(g^b)}` report.
#[pyfunction]
#[pyo3(signature = (n = 2, max_power = 2))]
fn poisson_brackets<'py>(py: Python<'py>, n: usize, max_power: u32) -> PyResult<Bound<'py, PyAny>> {
    if !(1..=3).contains(&n) {
        return Err(PyValueError::new_err("n must be in 1..=3"));
    }
    let t = cm::poisson_bracket_table(n);
    let l = PyList::empty(py);
    l.append(suite(py, &cm::bracket_suite(&t))?)?;
    l.append(suite(py, &cm::rs_report(&t, max_power))?)?;
    Ok(l.into_any())
}

/// A quadratic algebra built from `R^q`.
#[pyclass(name = "QuadraticAlgebra")]
struct PyQuadratic(QuadraticAlgebra);

#[pymethods]
impl PyQuadratic {
    /// `kind` is `"reflection_F"` or `"double_D"`.
    #[new]
    fn new(kind: &str, n: usize) -> PyResult<Self> {
        let k = AlgebraKind::parse(kind).map_err(err)?;
        qgroup::build_algebra(k, n).map(PyQuadratic).map_err(err)
    }

    #[getter]
    fn ngens(&self) -> usize {
        self.0.ngens()
    }

    fn graded_dim(&mut self, d: usize) -> PyResult<usize> {
        self.0.graded_dim(d).map_err(err)
    }

    fn hilbert_series(&mut self, max_degree: usize) -> PyResult<Vec<usize>> {
        (0..=max_degree).map(|d| self.0.graded_dim(d).map_err(err)).collect()
    }

    /// Basis of the degree-`d` center, each element formatted as a string.
    fn central_elements(&mut self, d: usize) -> PyResult<Vec<String>> {
        let zs = self.0.central_elements(d).map_err(err)?;
        Ok(zs.iter().map(|z| self.0.format(z, d)).collect())
    }
}

#[pyfunction]
fn r_matrix_check<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    suite(py, &qgroup::ybe_check(n))
}

/// `model` is `"wt"` or `"torus"`.
#[pyfunction]
#[pyo3(signature = (model, n, grid = 2))]
fn uq_check<'py>(py: Python<'py>, model: &str, n: usize, grid: i64) -> PyResult<Bound<'py, PyAny>> {
    let m = match model {
        "wt" => UqModel::Wt,
        "torus" => UqModel::Torus,
        _ => return Err(PyValueError::new_err(format!("unknown model {model:?}"))),
    };
    if !(1..=3).contains(&n) {
        return Err(PyValueError::new_err("n must be in 1..=3"));
    }
    suite(py, &qgroup::uq_relation_check(&UqRep::new(m, n), grid))
}

/// Runs the command line, e.g. `run_cli(["rtt", "dims"])`, returning the
/// report as text.
#[pyfunction]
fn run_cli(args: Vec<String>) -> PyResult<String> {
    let cli = Cli::try_parse_from(std::iter::once("dahalab".to_string()).chain(args))
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    let report = run(&cli).map_err(err)?;
    let out = emit(&report, cli.format).map_err(err)?;
    String::from_utf8(out).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

#[pymodule]
pub fn pydahalab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQT>()?;
    m.add_class::<PyDaha>()?;
    m.add_class::<PyCMPoint>()?;
    m.add_class::<PyQuadratic>()?;
    m.add_function(wrap_pyfunction!(macdonald_poly, m)?)?;
    m.add_function(wrap_pyfunction!(hc_commute, m)?)?;
    m.add_function(wrap_pyfunction!(hc_compare, m)?)?;
    m.add_function(wrap_pyfunction!(center, m)?)?;
    m.add_function(wrap_pyfunction!(poisson_brackets, m)?)?;
    m.add_function(wrap_pyfunction!(r_matrix_check, m)?)?;
    m.add_function(wrap_pyfunction!(uq_check, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
