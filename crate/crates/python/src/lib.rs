//! Python bindings: exact matrices, subspaces, relations, complexes, grids
//! and the lemma checks, with instances passed as the CLI's JSON documents
//! (either `str` or a JSON-compatible `dict`).

use dchase_core::genrand::{random_cross, random_exact_grid, random_hom_instance, random_snake_input, GenConfig};
use dchase_core::grid::{
    ccl_homology_dims, ccl_homology_iso, corollary_check, kcl_homology_dims, kcl_homology_iso,
};
use dchase_core::quiverhom::{additivity_check, hom_grid};
use dchase_core::relation::verify_cross_lemma;
use dchase_core::snake::{snake_via_grids, SnakeResult};
use dchase_core::subspace::{image, kernel};
use dchase_core::suite::{selftest_json, Suite};
use dchase_core::{io, ChainComplex, Error, Field, Orientation, Scalar, StaircaseShape};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::{json, Value};

create_exception!(dchase, DchaseError, PyException, "Base class of dchase errors.");
create_exception!(dchase, HypothesisError, DchaseError, "The input violates a hypothesis.");
create_exception!(dchase, TheoremViolation, DchaseError, "A checked statement failed.");

fn to_py(e: Error) -> PyErr {
    match e {
        Error::TheoremViolation(_) => TheoremViolation::new_err(e.to_string()),
        Error::Hypothesis(_) | Error::InvalidGrid(_) | Error::NotComplex { .. } | Error::NotInduced { .. } => {
            HypothesisError::new_err(e.to_string())
        }
        _ => DchaseError::new_err(e.to_string()),
    }
}

trait OrPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrPy<T> for dchase_core::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

fn field_of(arg: &Bound<'_, PyAny>) -> PyResult<Field> {
    io::field_from_arg(&arg.str()?.to_string()).py()
}

fn scalar_in(f: Field, x: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    io::scalar_from_json(&Value::String(x.str()?.to_string()), f, "entry").py()
}

fn scalar_out<'py>(py: Python<'py>, s: &Scalar) -> PyResult<Bound<'py, PyAny>> {
    match s {
        Scalar::Mod(n) => Ok(n.into_pyobject(py)?.into_any()),
        Scalar::Rat(_) => match s.to_i64() {
            Some(n) => Ok(n.into_pyobject(py)?.into_any()),
            None => py.import("fractions")?.getattr("Fraction")?.call1((s.to_string(),)),
        },
    }
}

fn vector_in(f: Field, v: &Bound<'_, PyAny>) -> PyResult<Vec<Scalar>> {
    v.try_iter()?.map(|x| scalar_in(f, &x?)).collect()
}

fn vector_out<'py>(py: Python<'py>, v: &[Scalar]) -> PyResult<Bound<'py, PyList>> {
    let items = v.iter().map(|s| scalar_out(py, s)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// A JSON document given as `str` or as a JSON-compatible object.
fn json_in(doc: &Bound<'_, PyAny>) -> PyResult<Value> {
    let text = match doc.extract::<String>() {
        Ok(s) => s,
        Err(_) => doc.py().import("json")?.call_method1("dumps", (doc,))?.extract()?,
    };
    io::parse_text(&text).py()
}

fn json_out<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

/// A matrix over `F_p` or `Q`. Entries are ints, `Fraction`s or `"a/b"`
/// strings; vectors are columns.
#[pyclass(name = "Matrix", module = "dchase", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyMatrix {
    inner: dchase_core::LinearMap,
}

impl From<dchase_core::LinearMap> for PyMatrix {
    fn from(inner: dchase_core::LinearMap) -> Self {
        PyMatrix { inner }
    }
}

#[pymethods]
impl PyMatrix {
    /// `Matrix(rows, field=2, cols=None)`; `cols` is needed only when there
    /// are no rows.
    #[new]
    #[pyo3(signature = (rows, field = None, cols = None))]
    fn new(rows: &Bound<'_, PyAny>, field: Option<&Bound<'_, PyAny>>, cols: Option<usize>) -> PyResult<Self> {
        let f = match field {
            Some(arg) => field_of(arg)?,
            None => Field::Prime(2),
        };
        let rows: Vec<Vec<Scalar>> = rows.try_iter()?.map(|r| vector_in(f, &r?)).collect::<PyResult<_>>()?;
        let width = match (rows.first(), cols) {
            (Some(r), Some(c)) if r.len() != c => {
                return Err(PyValueError::new_err(format!("rows have {} entries, cols = {c}", r.len())))
            }
            (Some(r), _) => r.len(),
            (None, c) => c.unwrap_or(0),
        };
        if rows.iter().any(|r| r.len() != width) {
            return Err(PyValueError::new_err("rows have different lengths"));
        }
        Ok(dchase_core::LinearMap::from_rows(f, width, rows).into())
    }

    #[staticmethod]
    #[pyo3(signature = (n, field = None))]
    fn identity(n: usize, field: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let f = field.map(field_of).transpose()?.unwrap_or(Field::Prime(2));
        Ok(dchase_core::LinearMap::identity(f, n).into())
    }

    #[getter]
    fn rows(&self) -> usize {
        self.inner.rows()
    }

    #[getter]
    fn cols(&self) -> usize {
        self.inner.cols()
    }

    /// `"2"`, `"5"`, ... or `"Q"`.
    #[getter]
    fn field(&self) -> String {
        match self.inner.field() {
            Field::Prime(p) => p.to_string(),
            Field::Rationals => "Q".into(),
        }
    }

    fn tolist<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let rows = (0..self.inner.rows()).map(|r| vector_out(py, self.inner.row(r))).collect::<PyResult<Vec<_>>>()?;
        PyList::new(py, rows)
    }

    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn transpose(&self) -> Self {
        self.inner.transpose().into()
    }

    fn inverse(&self) -> Option<Self> {
        self.inner.inverse().map(Into::into)
    }

    /// Some `x` with `self @ x == b`, or `None`.
    fn solve<'py>(&self, py: Python<'py>, b: &Bound<'_, PyAny>) -> PyResult<Option<Bound<'py, PyList>>> {
        let b = vector_in(self.inner.field(), b)?;
        if b.len() != self.inner.rows() {
            return Err(PyValueError::new_err(format!("expected {} entries", self.inner.rows())));
        }
        self.inner.solve(&b).map(|x| vector_out(py, &x)).transpose()
    }

    fn apply<'py>(&self, py: Python<'py>, v: &Bound<'_, PyAny>) -> PyResult<Bound<'py, PyList>> {
        let v = vector_in(self.inner.field(), v)?;
        if v.len() != self.inner.cols() {
            return Err(PyValueError::new_err(format!("expected {} entries", self.inner.cols())));
        }
        vector_out(py, &self.inner.apply(&v))
    }

    fn kernel(&self) -> PySubspace {
        kernel(&self.inner).into()
    }

    fn image(&self) -> PySubspace {
        image(&self.inner).into()
    }

    fn __matmul__(&self, other: &PyMatrix) -> PyResult<Self> {
        self.inner.compose(&other.inner).py().map(Into::into)
    }

    fn __add__(&self, other: &PyMatrix) -> PyResult<Self> {
        self.inner.try_add(&other.inner).py().map(Into::into)
    }

    fn __getitem__<'py>(&self, py: Python<'py>, index: (usize, usize)) -> PyResult<Bound<'py, PyAny>> {
        let (r, c) = index;
        if r >= self.inner.rows() || c >= self.inner.cols() {
            return Err(PyIndexError::new_err(format!("({r}, {c}) is outside a {}x{} matrix", self.inner.rows(), self.inner.cols())));
        }
        scalar_out(py, self.inner.get(r, c))
    }

    fn __repr__(&self) -> String {
        let rows: Vec<String> = (0..self.inner.rows())
            .map(|r| format!("[{}]", self.inner.row(r).iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        format!("Matrix([{}], field={:?}, cols={})", rows.join(", "), self.field(), self.inner.cols())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

/// A subspace of `F^n`, kept in reduced row echelon form so that equal
/// subspaces compare equal.
#[pyclass(name = "Subspace", module = "dchase", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PySubspace {
    inner: dchase_core::Subspace,
}

impl From<dchase_core::Subspace> for PySubspace {
    fn from(inner: dchase_core::Subspace) -> Self {
        PySubspace { inner }
    }
}

#[pymethods]
impl PySubspace {
    /// The span of `vectors` inside `F^ambient_dim`.
    #[new]
    #[pyo3(signature = (ambient_dim, vectors, field = None))]
    fn new(ambient_dim: usize, vectors: &Bound<'_, PyAny>, field: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let f = field.map(field_of).transpose()?.unwrap_or(Field::Prime(2));
        let gens: Vec<Vec<Scalar>> = vectors.try_iter()?.map(|v| vector_in(f, &v?)).collect::<PyResult<_>>()?;
        if gens.iter().any(|g| g.len() != ambient_dim) {
            return Err(PyValueError::new_err(format!("vectors must have {ambient_dim} entries")));
        }
        Ok(dchase_core::Subspace::span(f, ambient_dim, gens).into())
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.inner.ambient_dim()
    }

    /// The reduced basis, one vector per row.
    fn basis(&self) -> PyMatrix {
        self.inner.basis().clone().into()
    }

    fn contains(&self, v: &Bound<'_, PyAny>) -> PyResult<bool> {
        self.inner.contains(&vector_in(self.inner.field(), v)?).py()
    }

    fn __contains__(&self, v: &Bound<'_, PyAny>) -> PyResult<bool> {
        self.contains(v)
    }

    fn __add__(&self, other: &PySubspace) -> PyResult<Self> {
        self.inner.sum(&other.inner).py().map(Into::into)
    }

    fn __and__(&self, other: &PySubspace) -> PyResult<Self> {
        self.inner.intersect(&other.inner).py().map(Into::into)
    }

    fn issubspace(&self, other: &PySubspace) -> PyResult<bool> {
        self.inner.leq(&other.inner).py()
    }

    fn __repr__(&self) -> String {
        format!("Subspace(dim={}, ambient_dim={})", self.inner.dim(), self.inner.ambient_dim())
    }
}

/// A linear relation: a subspace of `B (+) A`, read as a partial
/// multivalued map from `A` to `B`.
#[pyclass(name = "Relation", module = "dchase", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyRelation {
    inner: dchase_core::Relation,
}

impl From<dchase_core::Relation> for PyRelation {
    fn from(inner: dchase_core::Relation) -> Self {
        PyRelation { inner }
    }
}

#[pymethods]
impl PyRelation {
    /// `{(f a, a)}`
    #[staticmethod]
    fn graph(f: &PyMatrix) -> Self {
        dchase_core::Relation::graph(&f.inner).into()
    }

    fn inverse(&self) -> Self {
        self.inner.inverse().into()
    }

    /// `self . other`: first `other`, then `self`.
    fn compose(&self, other: &PyRelation) -> PyResult<Self> {
        self.inner.compose(&other.inner).py().map(Into::into)
    }

    fn __matmul__(&self, other: &PyRelation) -> PyResult<Self> {
        self.compose(other)
    }

    fn member(&self, b: &Bound<'_, PyAny>, a: &Bound<'_, PyAny>) -> PyResult<bool> {
        let f = self.inner.field();
        self.inner.member(&vector_in(f, b)?, &vector_in(f, a)?).py()
    }

    fn domain(&self) -> PySubspace {
        self.inner.domain().into()
    }

    fn range(&self) -> PySubspace {
        self.inner.range().into()
    }

    /// `{b : (b, 0) in self}`
    fn homogeneous(&self) -> PySubspace {
        self.inner.homogeneous().into()
    }

    /// The matrix, if the relation is the graph of a map.
    fn to_matrix(&self) -> Option<PyMatrix> {
        self.inner.to_map().map(Into::into)
    }

    fn __repr__(&self) -> String {
        format!(
            "Relation({} <- {}, dim={})",
            self.inner.left_dim(),
            self.inner.right_dim(),
            self.inner.space().dim()
        )
    }
}

/// Homology dimensions of the complex `V_0 -> V_1 -> ...` with the given maps.
#[pyfunction]
fn homology_dims(maps: Vec<PyMatrix>) -> PyResult<Vec<usize>> {
    ChainComplex::from_maps(maps.into_iter().map(|m| m.inner).collect()).py()?.homology_dims().py()
}

fn shape_of(shape: Vec<usize>) -> PyResult<StaircaseShape> {
    StaircaseShape::new(shape).py()
}

fn orientation_of(name: &str) -> PyResult<Orientation> {
    io::orientation_from_str(name).py()
}

/// A commutative grid of vector spaces on a staircase shape.
#[pyclass(name = "Grid", module = "dchase", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGrid {
    inner: dchase_core::Grid,
}

#[pymethods]
impl PyGrid {
    /// Parses the grid JSON document (`str` or `dict`).
    #[staticmethod]
    #[pyo3(signature = (doc, field = None))]
    fn from_json(doc: &Bound<'_, PyAny>, field: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let over = field.map(field_of).transpose()?;
        Ok(PyGrid { inner: io::grid_from_json(&json_in(doc)?, over).py()? })
    }

    /// A seeded grid with exact rows and columns.
    #[staticmethod]
    #[pyo3(signature = (seed, field = None, shape = vec![3, 3, 3], max_dim = 3, orientation = "kernel"))]
    fn random(
        seed: u64,
        field: Option<&Bound<'_, PyAny>>,
        shape: Vec<usize>,
        max_dim: usize,
        orientation: &str,
    ) -> PyResult<Self> {
        let f = field.map(field_of).transpose()?.unwrap_or(Field::Prime(2));
        let cfg = GenConfig::new(seed, f, max_dim).with_shape(shape_of(shape)?).with_orientation(orientation_of(orientation)?);
        Ok(PyGrid { inner: random_exact_grid(&cfg).py()? })
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_out(py, &io::grid_to_json(&self.inner))
    }

    #[getter]
    fn shape(&self) -> Vec<usize> {
        self.inner.shape().row_lengths().to_vec()
    }

    #[getter]
    fn orientation(&self) -> &'static str {
        self.inner.orientation().name()
    }

    /// Dimensions of the spaces, row by row.
    #[getter]
    fn spaces(&self) -> Vec<Vec<usize>> {
        self.inner.spaces().to_vec()
    }

    fn is_valid(&self) -> bool {
        self.inner.is_valid()
    }

    /// Offending cells (1-based) by kind; all lists empty for a valid grid.
    fn validate<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = self.inner.validate();
        let one_based = |cells: &[(usize, usize)]| cells.iter().map(|&(i, j)| (i + 1, j + 1)).collect::<Vec<_>>();
        let d = PyDict::new(py);
        d.set_item("non_commuting", one_based(&r.non_commuting))?;
        d.set_item("inexact_rows", one_based(&r.inexact_rows))?;
        d.set_item("inexact_columns", one_based(&r.inexact_columns))?;
        Ok(d)
    }

    fn dualize(&self) -> Self {
        PyGrid { inner: self.inner.dualize() }
    }

    fn transpose(&self) -> Self {
        PyGrid { inner: self.inner.transpose() }
    }

    /// `(top, left, admissible)`: homology dimensions of the kernel complexes,
    /// where index `k` holds position `k + 1`.
    fn kcl_homology_dims(&self) -> PyResult<(Vec<usize>, Vec<usize>, Vec<usize>)> {
        let d = kcl_homology_dims(&self.inner).py()?;
        Ok((d.top, d.left, d.admissible))
    }

    /// `(right, bottom, admissible)` homology dimensions of the cokernel complexes.
    fn ccl_homology_dims(&self) -> PyResult<(Vec<usize>, Vec<usize>, Vec<usize>)> {
        let d = ccl_homology_dims(&self.inner).py()?;
        Ok((d.right, d.bottom, d.admissible))
    }

    /// The homology isomorphism at position `n`, in homology coordinates.
    fn kcl_iso(&self, n: usize) -> PyResult<PyMatrix> {
        Ok(kcl_homology_iso(&self.inner, n).py()?.matrix.into())
    }

    fn ccl_iso(&self, n: usize) -> PyResult<PyMatrix> {
        Ok(ccl_homology_iso(&self.inner, n).py()?.matrix.into())
    }

    /// `(top, left, holds)` for a grid of shape `[3, 3, 2]`.
    fn corollary(&self) -> PyResult<(Vec<usize>, Vec<usize>, bool)> {
        let r = corollary_check(&self.inner).py()?;
        Ok((r.top, r.left, r.holds))
    }

    fn __repr__(&self) -> String {
        format!("Grid(shape={:?}, orientation={:?})", self.shape(), self.orientation())
    }
}

fn snake_dict<'py>(py: Python<'py>, r: &SnakeResult) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("six_term_dims", r.six_term.dims().to_vec())?;
    d.set_item("homology", r.six_term.homology_dims().py()?)?;
    d.set_item("delta", PyMatrix::from(r.delta.clone()))?;
    d.set_item("exact", r.verdicts().to_vec())?;
    d.set_item("f_monic_iff", r.f_monic_iff)?;
    d.set_item("gp_epi_iff", r.gp_epi_iff)?;
    d.set_item("holds", r.holds())?;
    Ok(d)
}

/// The six-term sequence of a snake diagram given as a JSON document.
/// With `via_grids`, it is derived from the grid lemmas instead of the
/// element chase.
#[pyfunction]
#[pyo3(signature = (doc, via_grids = false, field = None))]
fn snake<'py>(py: Python<'py>, doc: &Bound<'_, PyAny>, via_grids: bool, field: Option<&Bound<'_, PyAny>>) -> PyResult<Bound<'py, PyDict>> {
    let over = field.map(field_of).transpose()?;
    let input = io::snake_from_json(&json_in(doc)?, over).py()?;
    let r = if via_grids { snake_via_grids(&input) } else { dchase_core::snake::snake(&input) }.py()?;
    snake_dict(py, &r)
}

/// The three cross lemma verdicts, plus the enumeration check when it ran.
#[pyfunction]
#[pyo3(signature = (doc, field = None))]
fn cross<'py>(py: Python<'py>, doc: &Bound<'_, PyAny>, field: Option<&Bound<'_, PyAny>>) -> PyResult<Bound<'py, PyDict>> {
    let over = field.map(field_of).transpose()?;
    let r = verify_cross_lemma(&io::cross_from_json(&json_in(doc)?, over).py()?).py()?;
    let d = PyDict::new(py);
    d.set_item("image_transfer", r.image_transfer)?;
    d.set_item("kernel_domain", r.kernel_domain)?;
    d.set_item("kernel_range", r.kernel_range)?;
    d.set_item("enumerated", r.enumerated.map(|e| e.to_vec()))?;
    Ok(d)
}

/// The Hom grid of a short exact and a right exact sequence of quiver
/// representations, with the additivity report.
#[pyfunction]
#[pyo3(signature = (aseq, eseq, field = None))]
fn hom<'py>(py: Python<'py>, aseq: &Bound<'_, PyAny>, eseq: &Bound<'_, PyAny>, field: Option<&Bound<'_, PyAny>>) -> PyResult<Bound<'py, PyAny>> {
    let over = field.map(field_of).transpose()?;
    let a = io::short_exact_from_json(&json_in(aseq)?, over).py()?;
    let e = io::right_exact_from_json(&json_in(eseq)?, over).py()?;
    let g = hom_grid(&a, &e).py()?;
    let r = additivity_check(&a, &e).py()?;
    json_out(
        py,
        &json!({
            "grid_valid": g.is_valid(),
            "right": r.right,
            "bottom": r.bottom,
            "functor_dims": [r.e_a, r.e_b, r.e_c],
            "defect": r.defect,
            "summand": r.summand.flag,
        }),
    )
}

/// A seeded instance as a JSON-compatible object: `kind` is `"grid"`,
/// `"cross"`, `"snake"` or `"hom"`.
#[pyfunction]
#[pyo3(signature = (kind, seed, field = None, max_dim = 3))]
fn generate<'py>(py: Python<'py>, kind: &str, seed: u64, field: Option<&Bound<'_, PyAny>>, max_dim: usize) -> PyResult<Bound<'py, PyAny>> {
    let f = field.map(field_of).transpose()?.unwrap_or(Field::Prime(2));
    let cfg = GenConfig::new(seed, f, max_dim);
    let doc = match kind {
        "grid" => io::grid_to_json(&random_exact_grid(&cfg).py()?),
        "cross" => io::cross_to_json(&random_cross(&cfg).py()?),
        "snake" => io::snake_to_json(&random_snake_input(&cfg).py()?),
        "hom" => {
            let (a, e) = random_hom_instance(&cfg).py()?;
            json!({"aseq": io::short_exact_to_json(&a), "eseq": io::right_exact_to_json(&e)})
        }
        other => return Err(PyValueError::new_err(format!("unknown kind {other:?}"))),
    };
    json_out(py, &doc)
}

/// Runs every seeded suite and returns the report.
#[pyfunction]
#[pyo3(signature = (seeds = 200))]
fn selftest(py: Python<'_>, seeds: u64) -> PyResult<Bound<'_, PyAny>> {
    let reports: Vec<_> = py.detach(|| Suite::ALL.iter().map(|s| s.run(seeds)).collect());
    json_out(py, &selftest_json(seeds, &reports))
}

#[pymodule]
fn dchase(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatrix>()?;
    m.add_class::<PySubspace>()?;
    m.add_class::<PyRelation>()?;
    m.add_class::<PyGrid>()?;
    m.add_function(wrap_pyfunction!(homology_dims, m)?)?;
    m.add_function(wrap_pyfunction!(snake, m)?)?;
    m.add_function(wrap_pyfunction!(cross, m)?)?;
    m.add_function(wrap_pyfunction!(hom, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    m.add("DchaseError", m.py().get_type::<DchaseError>())?;
    m.add("HypothesisError", m.py().get_type::<HypothesisError>())?;
    m.add("TheoremViolation", m.py().get_type::<TheoremViolation>())?;
    m.add("PRNG", dchase_core::genrand::PRNG_ID)?;
    Ok(())
}
