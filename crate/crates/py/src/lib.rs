//! Python bindings: algebras, modules over `A` and over its ADR algebra,
//! and the main reports.

use std::sync::Arc;

use adr_core::adr::{build_context, AdrContext, Label, SCModule};
use adr_core::amod::Rep;
use adr_core::approx;
use adr_core::builtins;
use adr_core::expr::{Evaluator, Value};
use adr_core::quiver::{build_bound_algebra, parse_algebra_with, BoundAlgebra};
use adr_core::strat;
use adr_core::{Error, Field};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    if e.is_input_error() {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

type Labelled = Vec<((usize, usize), usize)>;

fn labelled(v: Vec<(Label, usize)>) -> Labelled {
    v.into_iter().map(|(Label(i, j), c)| ((i, j), c)).collect()
}

/// A bound quiver algebra `KQ/I`.
#[pyclass(frozen, module = "adr")]
struct Algebra {
    inner: Arc<BoundAlgebra>,
    ctx: std::sync::OnceLock<Arc<AdrContext>>,
}

impl Algebra {
    fn context(&self) -> PyResult<Arc<AdrContext>> {
        if let Some(c) = self.ctx.get() {
            return Ok(c.clone());
        }
        let c = build_context(&self.inner).map_err(py_err)?;
        Ok(self.ctx.get_or_init(|| c).clone())
    }

    fn wrap(inner: BoundAlgebra) -> Algebra {
        Algebra {
            inner: Arc::new(inner),
            ctx: std::sync::OnceLock::new(),
        }
    }
}

#[pymethods]
impl Algebra {
    /// Parses an algebra in the text format; `n` overrides a parameter named n.
    #[new]
    #[pyo3(signature = (text, n=None, field=None))]
    fn new(text: &str, n: Option<i64>, field: Option<&str>) -> PyResult<Algebra> {
        let overrides: Vec<(String, i64)> = n.map(|n| vec![("n".to_string(), n)]).unwrap_or_default();
        let field = field.map(str::parse::<Field>).transpose().map_err(py_err)?;
        let p = parse_algebra_with(text, &overrides, field).map_err(py_err)?;
        Ok(Algebra::wrap(build_bound_algebra(&p).map_err(py_err)?))
    }

    /// One of the shipped algebras: kx2, ex54, ex36, an.
    #[staticmethod]
    #[pyo3(signature = (name, n=None))]
    fn builtin(name: &str, n: Option<i64>) -> PyResult<Algebra> {
        Ok(Algebra::wrap(builtins::algebra(name, n).map_err(py_err)?))
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn loewy_length(&self) -> usize {
        self.inner.loewy_length()
    }

    fn to_text(&self) -> String {
        self.inner.presentation().to_text()
    }

    /// Evaluates a module expression; returns a `Module` or an `RModule`.
    fn module(&self, py: Python<'_>, expr: &str) -> PyResult<Py<PyAny>> {
        let mut ev = Evaluator::with_context(self.context()?);
        match ev.eval_str(expr).map_err(py_err)? {
            Value::A(m) => Ok(Py::new(py, Module { inner: m })?.into_any()),
            Value::R(m) => Ok(Py::new(py, RModule { inner: m })?.into_any()),
        }
    }

    /// Labels `(i, j)` of the summands of `G`.
    fn labels(&self) -> PyResult<Vec<(usize, usize)>> {
        Ok(self.context()?.labels().iter().map(|l| (l.0, l.1)).collect())
    }

    /// `dim R` of the ADR algebra.
    fn adr_dim(&self) -> PyResult<usize> {
        Ok(self.context()?.dim())
    }

    /// `Hom_A(G, M)`.
    fn hom_g(&self, m: &Module) -> PyResult<RModule> {
        Ok(RModule {
            inner: self.context()?.hom_g(&m.inner).map_err(py_err)?,
        })
    }

    fn projective_r(&self, i: usize, j: usize) -> PyResult<RModule> {
        Ok(RModule {
            inner: self.context()?.projective_label(Label(i, j)).map_err(py_err)?,
        })
    }

    fn standard(&self, i: usize, j: usize) -> PyResult<RModule> {
        let ctx = self.context()?;
        let s = ctx.index_of(Label(i, j)).map_err(py_err)?;
        Ok(RModule {
            inner: strat::standard_module(&ctx, s).map_err(py_err)?,
        })
    }

    /// Summand multiset of the minimal `Add(G)`-approximation of `m`, with
    /// the two verification flags.
    fn approximation(&self, m: &Module) -> PyResult<(Labelled, bool, bool)> {
        let r = approx::approx_general(&self.context()?, &m.inner).map_err(py_err)?;
        Ok((labelled(r.multiset()), r.is_approximation, r.is_right_minimal))
    }

    /// Ext^1 table rows `(label, rigid, targets)` and the violation list.
    fn ext_table(&self) -> PyResult<(Vec<((usize, usize), bool, Labelled)>, Vec<String>)> {
        let t = approx::ext1_support(&self.context()?).map_err(py_err)?;
        let rows = t
            .rows
            .into_iter()
            .map(|r| ((r.label.0, r.label.1), r.rigid, labelled(r.targets)))
            .collect();
        Ok((rows, t.violations))
    }

    fn __repr__(&self) -> String {
        format!("Algebra({:?}, dim={})", self.inner.name(), self.inner.dim())
    }
}

/// A module over `A`.
#[pyclass(frozen, module = "adr")]
struct Module {
    inner: Rep,
}

#[pymethods]
impl Module {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Dimension vector.
    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.inner.dims().to_vec()
    }

    #[getter]
    fn loewy_length(&self) -> usize {
        self.inner.loewy_length()
    }

    fn is_rigid(&self) -> bool {
        self.inner.is_rigid()
    }

    fn top(&self) -> Vec<usize> {
        self.inner.top_dims()
    }

    fn radical_layers(&self) -> Vec<Vec<usize>> {
        self.inner.radical_layers()
    }

    fn socle_layers(&self) -> Vec<Vec<usize>> {
        self.inner.socle_layers()
    }

    fn __repr__(&self) -> String {
        format!("Module(dims={:?})", self.inner.dims())
    }
}

/// A module over the ADR algebra.
#[pyclass(frozen, module = "adr")]
struct RModule {
    inner: SCModule,
}

#[pymethods]
impl RModule {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Composition multiplicities by label.
    fn composition_factors(&self) -> Labelled {
        labelled(self.inner.label_counts(self.inner.dims()))
    }

    #[getter]
    fn loewy_length(&self) -> usize {
        self.inner.loewy_length()
    }

    fn top(&self) -> Labelled {
        labelled(self.inner.label_counts(&self.inner.top()))
    }

    fn radical_layers(&self) -> Vec<Labelled> {
        approx::radical_layers(&self.inner).into_iter().map(labelled).collect()
    }

    fn is_delta_good(&self) -> bool {
        strat::is_delta_good(&self.inner)
    }

    fn is_delta_semisimple(&self) -> PyResult<bool> {
        Ok(strat::is_delta_semisimple(&self.inner).map_err(py_err)?.semisimple)
    }

    /// Layers of the `Δ`-semisimple filtration.
    fn delta_filtration(&self) -> PyResult<Vec<Labelled>> {
        let f = strat::delta_ss_filtration(&self.inner).map_err(py_err)?;
        Ok(f.layers.into_iter().map(labelled).collect())
    }

    /// Loewy lengths of the terms of a minimal projective resolution and
    /// whether they strictly decrease from step 1.
    #[pyo3(signature = (max_steps=approx::DEFAULT_MAX_STEPS))]
    fn resolution(&self, max_steps: usize) -> PyResult<(Vec<usize>, bool)> {
        let r = approx::minimal_resolution_r(&self.inner, max_steps).map_err(py_err)?;
        Ok((r.steps.iter().map(|s| s.loewy_length).collect(), r.dll_ok))
    }

    fn __repr__(&self) -> String {
        format!("RModule(dim={})", self.inner.dim())
    }
}

/// Runs the `A(n)` driver; returns `(ll_pair, dll_ok, all_checks_ok)`.
#[pyfunction]
#[pyo3(signature = (n, max_steps=approx::DEFAULT_MAX_STEPS))]
fn counterexample(n: i64, max_steps: usize) -> PyResult<((usize, usize), bool, bool)> {
    let r = approx::counterexample_driver(n, max_steps).map_err(py_err)?;
    Ok((r.ll_pair, r.dll_ok, r.all_checks_ok()))
}

#[pymodule]
fn adr(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_class::<Module>()?;
    m.add_class::<RModule>()?;
    m.add_function(wrap_pyfunction!(counterexample, m)?)?;
    Ok(())
}
