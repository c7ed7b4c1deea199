//! Python bindings: exact series, the double series and families, closed
//! forms, the partition oracle and the identity catalog.

use num_bigint::BigInt;
use pyo3::exceptions::{PyArithmeticError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qdouble::closedforms::{closed_form as core_closed_form, ClosedFormId};
use qdouble::partitions::{
    enumerate_representations as core_enumerate, f1_partition_scan as core_scan,
};
use qdouble::qproducts::{
    poch_finite, poch_infinite, poch_quotient as core_quotient, PochhammerSpec,
};
use qdouble::registry::{Catalog, VerificationReport};
use qdouble::series::{Coeff, LaurentSeries};
use qdouble::{Error, Family, FamilyId, SeriesId};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        Error::InvalidParameter(_) | Error::UnknownId(_) | Error::BeyondOrder { .. } => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyArithmeticError::new_err(e.to_string()),
    }
}

fn coeff_to_py(py: Python<'_>, c: &Coeff) -> PyResult<Py<PyAny>> {
    if c.is_integer() {
        return Ok(c.numer().clone().into_pyobject(py)?.into_any().unbind());
    }
    let fraction = py.import("fractions")?.getattr("Fraction")?;
    Ok(fraction
        .call1((c.numer().clone(), c.denom().clone()))?
        .unbind())
}

fn series_id(name: &str) -> PyResult<SeriesId> {
    name.parse().map_err(to_py)
}

/// Truncated Laurent series with exact rational coefficients.
#[pyclass(name = "Series", module = "qdouble", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PySeries {
    inner: LaurentSeries,
}

impl From<LaurentSeries> for PySeries {
    fn from(inner: LaurentSeries) -> Self {
        PySeries { inner }
    }
}

#[pymethods]
impl PySeries {
    #[new]
    #[pyo3(signature = (coeffs, order, offset = 0))]
    fn new(coeffs: Vec<BigInt>, order: i64, offset: i64) -> Self {
        let coeffs = coeffs.into_iter().map(Coeff::from_integer).collect();
        LaurentSeries::from_coeffs(offset, coeffs, order).into()
    }

    #[staticmethod]
    fn monomial(c: BigInt, e: i64, order: i64) -> Self {
        LaurentSeries::monomial(Coeff::from_integer(c), e, order).into()
    }

    #[getter]
    fn order(&self) -> i64 {
        self.inner.order()
    }

    #[getter]
    fn valuation(&self) -> Option<i64> {
        self.inner.valuation()
    }

    fn coeff(&self, py: Python<'_>, e: i64) -> PyResult<Py<PyAny>> {
        coeff_to_py(py, &self.inner.coeff(e).map_err(to_py)?)
    }

    /// Coefficients of `q^lo..q^hi`; `hi` defaults to the order.
    #[pyo3(signature = (lo = 0, hi = None))]
    fn coeffs(&self, py: Python<'_>, lo: i64, hi: Option<i64>) -> PyResult<Vec<Py<PyAny>>> {
        let hi = hi.unwrap_or(self.inner.order());
        self.inner
            .coeffs_between(lo, hi)
            .map_err(to_py)?
            .iter()
            .map(|c| coeff_to_py(py, c))
            .collect()
    }

    fn is_integral(&self) -> bool {
        self.inner.is_integral()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn shift(&self, e: i64) -> Self {
        self.inner.shift(e).into()
    }

    fn truncate(&self, order: i64) -> Self {
        self.inner.truncate(order).into()
    }

    fn invert(&self) -> PyResult<Self> {
        Ok(self.inner.invert().map_err(to_py)?.into())
    }

    /// First exponent where the two series differ, up to `order`.
    fn first_mismatch(&self, other: &PySeries, order: i64) -> PyResult<Option<i64>> {
        Ok(
            LaurentSeries::first_mismatch(&self.inner, &other.inner, order)
                .map_err(to_py)?
                .map(|m| m.exponent),
        )
    }

    fn __add__(&self, other: &PySeries) -> Self {
        (&self.inner + &other.inner).into()
    }

    fn __sub__(&self, other: &PySeries) -> Self {
        (&self.inner - &other.inner).into()
    }

    fn __mul__(&self, other: &PySeries) -> Self {
        (&self.inner * &other.inner).into()
    }

    fn __truediv__(&self, other: &PySeries) -> PyResult<Self> {
        Ok(self.inner.checked_div(&other.inner).map_err(to_py)?.into())
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __eq__(&self, other: &PySeries) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Series({})", self.inner)
    }
}

/// One of `f1`, `f2`, `g`.
#[pyfunction]
fn double_series(name: &str, order: i64) -> PyResult<PySeries> {
    Ok(qdouble::double_series(series_id(name)?, order).into())
}

/// Family `a`, `aprime`, `b` or `bprime` with parameter `m`.
#[pyfunction]
fn family_series(family: &str, m: u32, order: i64) -> PyResult<PySeries> {
    let fam: Family = family.parse().map_err(to_py)?;
    let id = FamilyId::new(fam, m).map_err(to_py)?;
    Ok(qdouble::family_series(id, order).map_err(to_py)?.into())
}

#[pyfunction]
#[pyo3(signature = (tag, order, m = None))]
fn closed_form(tag: &str, order: i64, m: Option<u32>) -> PyResult<PySeries> {
    let id = ClosedFormId::parse(tag, m).map_err(to_py)?;
    Ok(core_closed_form(id, order).map_err(to_py)?.into())
}

#[pyfunction]
fn theta(order: i64) -> PyResult<PySeries> {
    Ok(qdouble::theta(order).map_err(to_py)?.into())
}

#[pyfunction]
fn lambert_theta(order: i64) -> PySeries {
    qdouble::lambert_theta(order).into()
}

fn spec(start: i64, step: i64, length: Option<u64>) -> PyResult<PochhammerSpec> {
    match length {
        Some(n) => PochhammerSpec::finite(start, step, n),
        None => PochhammerSpec::infinite(start, step),
    }
    .map_err(to_py)
}

/// `(q^start; q^step)_length`, infinite when `length` is omitted.
#[pyfunction]
#[pyo3(signature = (start, step, order, length = None))]
fn poch(start: i64, step: i64, order: i64, length: Option<u64>) -> PyResult<PySeries> {
    let s = spec(start, step, length)?;
    let r = if length.is_some() {
        poch_finite(&s, order)
    } else {
        poch_infinite(&s, order)
    };
    Ok(r.map_err(to_py)?.into())
}

/// Quotient of products given as `(start, step, length or None)` tuples.
#[pyfunction]
fn poch_quotient(
    nums: Vec<(i64, i64, Option<u64>)>,
    dens: Vec<(i64, i64, Option<u64>)>,
    order: i64,
) -> PyResult<PySeries> {
    let nums = nums
        .into_iter()
        .map(|(a, s, l)| spec(a, s, l))
        .collect::<PyResult<Vec<_>>>()?;
    let dens = dens
        .into_iter()
        .map(|(a, s, l)| spec(a, s, l))
        .collect::<PyResult<Vec<_>>>()?;
    Ok(core_quotient(&nums, &dens, order).map_err(to_py)?.into())
}

#[pyfunction]
fn representation_count(name: &str, n: u64) -> PyResult<i64> {
    Ok(qdouble::representation_count(series_id(name)?, n).value())
}

type RepTuple = (i64, u32, u32, Vec<u32>, Vec<u32>);

/// Signed representations as `(sign, k, n, evens, odds)` tuples.
#[pyfunction]
fn enumerate_representations(name: &str, n: u64) -> PyResult<Vec<RepTuple>> {
    Ok(core_enumerate(series_id(name)?, n)
        .into_iter()
        .map(|r| (r.sign(), r.k, r.n, r.evens, r.odds))
        .collect())
}

#[pyfunction]
fn f1_partition_scan(n: u32) -> i64 {
    core_scan(n).value()
}

fn report_dict<'py>(py: Python<'py>, r: &VerificationReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("id", &r.id)?;
    d.set_item("order", r.order)?;
    d.set_item("status", r.status.to_string())?;
    d.set_item("severity", r.severity.to_string())?;
    d.set_item("first_mismatch", r.first_mismatch)?;
    d.set_item("lhs_coeff", &r.lhs_coeff)?;
    d.set_item("rhs_coeff", &r.rhs_coeff)?;
    d.set_item("integral", r.integral)?;
    d.set_item("message", &r.message)?;
    d.set_item("wall_ms", r.wall_time.as_millis() as u64)?;
    Ok(d)
}

#[pyfunction]
fn list_identities(py: Python<'_>) -> PyResult<Vec<Bound<'_, PyDict>>> {
    Catalog::standard()
        .list()
        .into_iter()
        .map(|s| {
            let d = PyDict::new(py);
            d.set_item("id", s.id)?;
            d.set_item("anchor", s.anchor)?;
            d.set_item("default_order", s.default_order)?;
            d.set_item("severity", s.severity.to_string())?;
            d.set_item("relation", s.relation.to_string())?;
            Ok(d)
        })
        .collect()
}

/// Reports for every identity whose id matches `pattern` (`*` wildcards).
#[pyfunction]
#[pyo3(signature = (pattern, order = None, jobs = 1))]
fn verify<'py>(
    py: Python<'py>,
    pattern: &str,
    order: Option<i64>,
    jobs: usize,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let summary = Catalog::standard().verify_matching(pattern, order, jobs);
    if summary.reports.is_empty() {
        return Err(to_py(Error::UnknownId(pattern.to_string())));
    }
    summary.reports.iter().map(|r| report_dict(py, r)).collect()
}

#[pymodule]
#[pyo3(name = "qdouble")]
fn qdouble_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PySeries>()?;
    m.add_function(wrap_pyfunction!(double_series, m)?)?;
    m.add_function(wrap_pyfunction!(family_series, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(lambert_theta, m)?)?;
    m.add_function(wrap_pyfunction!(poch, m)?)?;
    m.add_function(wrap_pyfunction!(poch_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(representation_count, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_representations, m)?)?;
    m.add_function(wrap_pyfunction!(f1_partition_scan, m)?)?;
    m.add_function(wrap_pyfunction!(list_identities, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
