//! Python module `puncodes`: fields, functions, codes and the verifier.
//! Reports come back as plain dicts and lists with exact Python ints.

use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use serde::Serialize;

use puncodes::analysis::{self, Case, TheoremId, VerifyOptions};
use puncodes::boolfunc::{self, Family, FunctionSpec};
use puncodes::codegen::{self, BinaryLinearCode, Guards, Recipe, WeightDistribution};
use puncodes::gf2m::{FieldConfig, FieldCtx, FieldElement};
use puncodes::manifest::Manifest;

create_exception!(puncodes, PuncodesError, PyValueError, "Raised for invalid input, refused hypotheses and guard limits.");

/// Converts a core error, keeping its kind on the exception as `.kind`.
fn py_err(e: puncodes::Error) -> PyErr {
    let err = PuncodesError::new_err(e.to_string());
    Python::attach(|py| {
        let _ = err.value(py).setattr("kind", e.kind());
    });
    err
}

trait OrPy<T> {
    fn or_py(self) -> PyResult<T>;
}

impl<T> OrPy<T> for puncodes::Result<T> {
    fn or_py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

/// Serialized report as Python objects; big counts stay exact.
fn to_py<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn field_for(m: u32, modulus: Option<u64>) -> PyResult<FieldCtx> {
    FieldCtx::with_modulus(m, modulus).or_py()
}

/// GF(2^m) with a fixed modulus and primitive element.
#[pyclass(name = "Field", module = "puncodes", frozen)]
pub struct PyField {
    ctx: FieldCtx,
}

impl PyField {
    fn el(&self, x: u32) -> PyResult<FieldElement> {
        let e = FieldElement(x);
        if self.ctx.contains(e) {
            Ok(e)
        } else {
            Err(PyValueError::new_err(format!("{x} is not an element of GF(2^{})", self.ctx.m())))
        }
    }
}

#[pymethods]
impl PyField {
    /// The smallest irreducible polynomial of degree `m` unless `modulus`
    /// is given.
    #[new]
    #[pyo3(signature = (m, modulus=None))]
    fn new(m: u32, modulus: Option<u64>) -> PyResult<Self> {
        Ok(PyField { ctx: field_for(m, modulus)? })
    }

    #[getter]
    fn m(&self) -> u32 {
        self.ctx.m()
    }

    #[getter]
    fn modulus(&self) -> u64 {
        self.ctx.modulus()
    }

    #[getter]
    fn gamma(&self) -> u32 {
        self.ctx.gamma().0
    }

    #[getter]
    fn size(&self) -> usize {
        self.ctx.size()
    }

    fn add(&self, x: u32, y: u32) -> PyResult<u32> {
        Ok((self.el(x)? + self.el(y)?).0)
    }

    fn mul(&self, x: u32, y: u32) -> PyResult<u32> {
        Ok(self.ctx.mul(self.el(x)?, self.el(y)?).0)
    }

    fn inv(&self, x: u32) -> PyResult<Option<u32>> {
        Ok(self.ctx.inv(self.el(x)?).map(|e| e.0))
    }

    fn pow(&self, x: u32, e: u64) -> PyResult<u32> {
        Ok(self.ctx.pow(self.el(x)?, e).0)
    }

    fn gamma_pow(&self, i: u64) -> u32 {
        self.ctx.gamma_pow(i).0
    }

    /// Discrete logarithm to base gamma; `None` for 0.
    fn log(&self, x: u32) -> PyResult<Option<u64>> {
        Ok(self.ctx.log(self.el(x)?))
    }

    fn trace(&self, x: u32) -> PyResult<u32> {
        Ok(self.ctx.trace(self.el(x)?))
    }

    /// `Tr_k^m(x)`, an element of the subfield of size `2^k`.
    fn rel_trace(&self, k: u32, x: u32) -> PyResult<u32> {
        Ok(self.ctx.rel_trace(k, self.el(x)?).or_py()?.0)
    }

    fn frobenius(&self, x: u32, j: u32) -> PyResult<u32> {
        Ok(self.ctx.frobenius(self.el(x)?, j).0)
    }

    fn __repr__(&self) -> String {
        format!("Field(m={}, modulus={:#b}, gamma={:#x})", self.ctx.m(), self.ctx.modulus(), self.ctx.gamma().0)
    }
}

/// A catalog function on GF(2^m), e.g. `Function(7, "gold(1)")`.
#[pyclass(name = "Function", module = "puncodes", frozen)]
pub struct PyFunction {
    spec: FunctionSpec,
}

impl PyFunction {
    fn check_field(&self, field: &PyField) -> PyResult<()> {
        if field.ctx.m() == self.spec.m {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!("function is on m = {}, field has m = {}", self.spec.m, field.ctx.m())))
        }
    }
}

#[pymethods]
impl PyFunction {
    #[new]
    fn new(m: u32, family: &str) -> PyResult<Self> {
        Ok(PyFunction { spec: FunctionSpec::parse(m, family).or_py()? })
    }

    #[getter]
    fn m(&self) -> u32 {
        self.spec.m
    }

    #[getter]
    fn family(&self) -> String {
        self.spec.family.to_string()
    }

    fn eval(&self, field: &PyField, x: u32) -> PyResult<u32> {
        self.check_field(field)?;
        Ok(self.spec.eval(&field.ctx, field.el(x)?).or_py()?.0)
    }

    fn values(&self, field: &PyField) -> PyResult<Vec<u32>> {
        self.check_field(field)?;
        Ok(self.spec.value_table(&field.ctx).or_py()?.into_iter().map(|e| e.0).collect())
    }

    /// `W_f(a, b)`.
    fn walsh(&self, field: &PyField, a: u32, b: u32) -> PyResult<i64> {
        self.check_field(field)?;
        boolfunc::walsh(&field.ctx, &self.spec, field.el(a)?, field.el(b)?).or_py()
    }

    /// Walsh value distribution, AB/APN/permutation verdicts as a dict.
    fn spectrum<'py>(&self, py: Python<'py>, field: &PyField) -> PyResult<Bound<'py, PyAny>> {
        self.check_field(field)?;
        let r = py.detach(|| analysis::spectrum_report(&field.ctx, &self.spec)).or_py()?;
        to_py(py, &r)
    }

    fn is_ab(&self, py: Python<'_>, field: &PyField) -> PyResult<bool> {
        self.check_field(field)?;
        py.detach(|| boolfunc::is_ab(&field.ctx, &self.spec)).or_py()
    }

    fn is_apn(&self, py: Python<'_>, field: &PyField) -> PyResult<bool> {
        self.check_field(field)?;
        py.detach(|| boolfunc::is_apn(&field.ctx, &self.spec)).or_py()
    }

    fn is_permutation(&self, field: &PyField) -> PyResult<bool> {
        self.check_field(field)?;
        self.spec.is_permutation(&field.ctx).or_py()
    }

    fn __repr__(&self) -> String {
        format!("Function(m={}, {:?})", self.spec.m, self.spec.family.to_string())
    }
}

/// Position set recipe from keyword form.
fn recipe_from(
    field: &PyField,
    f: &FunctionSpec,
    kind: &str,
    t: Option<u64>,
    lam: Option<u32>,
    nu: Option<u8>,
) -> PyResult<Recipe> {
    Ok(match kind {
        "trace-support" => Recipe::TraceSupport,
        "whole" => Recipe::Whole,
        "cyclotomic" => Recipe::Cyclotomic { t: t.ok_or_else(|| PyValueError::new_err("cyclotomic needs t"))? },
        "trace-of-f" => Recipe::TraceOfF { function: *f, lambda: field.el(lam.unwrap_or(1))?, nu: nu.unwrap_or(0) },
        other => return Err(PyValueError::new_err(format!("unknown recipe {other:?}"))),
    })
}

/// A binary linear code in reduced echelon form.
#[pyclass(name = "Code", module = "puncodes", frozen)]
pub struct PyCode {
    code: BinaryLinearCode,
}

impl PyCode {
    fn distribution(&self, py: Python<'_>, max_k: usize) -> PyResult<WeightDistribution> {
        let guards = Guards { max_k, ..Guards::default() };
        py.detach(|| codegen::enumerate_weights(&self.code, &guards)).or_py()
    }
}

#[pymethods]
impl PyCode {
    /// `C(f)` punctured to the positions of `recipe`: one of
    /// `trace-support`, `trace-of-f` (`lam`, `nu`), `cyclotomic` (`t`) or
    /// `whole`.
    #[staticmethod]
    #[pyo3(signature = (field, function, recipe="trace-support", t=None, lam=None, nu=None))]
    fn build(
        field: &PyField,
        function: &PyFunction,
        recipe: &str,
        t: Option<u64>,
        lam: Option<u32>,
        nu: Option<u8>,
    ) -> PyResult<Self> {
        function.check_field(field)?;
        let r = recipe_from(field, &function.spec, recipe, t, lam, nu)?;
        let d = codegen::build_position_set(&field.ctx, &r).or_py()?;
        Ok(PyCode { code: codegen::build_code(&field.ctx, &function.spec, &d).or_py()? })
    }

    /// Code spanned by bit strings such as `"10110"`.
    #[staticmethod]
    fn from_rows(rows: Vec<String>) -> PyResult<Self> {
        let n = rows.first().map_or(0, String::len);
        let mut packed = Vec::with_capacity(rows.len());
        for r in &rows {
            if r.len() != n {
                return Err(PyValueError::new_err("rows differ in length"));
            }
            let mut v = vec![0u64; codegen::words_for(n)];
            for (j, c) in r.chars().enumerate() {
                match c {
                    '1' => codegen::set_bit(&mut v, j),
                    '0' => {}
                    _ => return Err(PyValueError::new_err(format!("bad bit {c:?}"))),
                }
            }
            packed.push(v);
        }
        Ok(PyCode { code: BinaryLinearCode::from_spanning_rows(n, packed) })
    }

    #[getter]
    fn n(&self) -> usize {
        self.code.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.code.k()
    }

    fn generator(&self) -> Vec<String> {
        self.code.generator_strings()
    }

    fn is_self_complementary(&self) -> bool {
        self.code.is_self_complementary()
    }

    fn dual(&self) -> Self {
        PyCode { code: self.code.dual() }
    }

    /// `[A_0, ..., A_n]` as exact ints.
    #[pyo3(signature = (max_k=26))]
    fn weight_distribution(&self, py: Python<'_>, max_k: usize) -> PyResult<Vec<BigUint>> {
        Ok(self.distribution(py, max_k)?.counts().to_vec())
    }

    #[pyo3(signature = (max_k=26))]
    fn min_distance(&self, py: Python<'_>, max_k: usize) -> PyResult<Option<usize>> {
        Ok(self.distribution(py, max_k)?.min_distance().ok())
    }

    /// Dual distance through the MacWilliams transform.
    #[pyo3(signature = (max_k=26))]
    fn dual_distance(&self, py: Python<'_>, max_k: usize) -> PyResult<Option<usize>> {
        let wd = self.distribution(py, max_k)?;
        codegen::dual_min_distance(&wd, self.code.k()).or_py()
    }

    #[pyo3(signature = (max_k=26))]
    fn dual_weight_distribution(&self, py: Python<'_>, max_k: usize) -> PyResult<Vec<BigUint>> {
        let wd = self.distribution(py, max_k)?;
        Ok(codegen::macwilliams_dual(&wd, self.code.k()).or_py()?.counts().to_vec())
    }

    fn __repr__(&self) -> String {
        format!("Code(n={}, k={})", self.code.n(), self.code.k())
    }
}

/// Dual weight distribution of a dimension-`k` code with distribution
/// `counts`.
#[pyfunction]
fn macwilliams(counts: Vec<BigUint>, k: usize) -> PyResult<Vec<BigUint>> {
    let wd = WeightDistribution::from_counts(counts);
    Ok(codegen::macwilliams_dual(&wd, k).or_py()?.counts().to_vec())
}

/// Parameters, weight table, dual distance and bound verdicts as a dict.
#[pyfunction]
#[pyo3(signature = (m, family, recipe="trace-support", t=None, lam=None, nu=None, modulus=None, max_k=26))]
#[allow(clippy::too_many_arguments)]
fn build<'py>(
    py: Python<'py>,
    m: u32,
    family: &str,
    recipe: &str,
    t: Option<u64>,
    lam: Option<u32>,
    nu: Option<u8>,
    modulus: Option<u64>,
    max_k: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let field = PyField { ctx: field_for(m, modulus)? };
    let spec = FunctionSpec::parse(m, family).or_py()?;
    let r = recipe_from(&field, &spec, recipe, t, lam, nu)?;
    let guards = Guards { max_k, ..Guards::default() };
    let report = py.detach(|| analysis::build_report(&field.ctx, &spec, &r, &guards, false)).or_py()?;
    to_py(py, &report)
}

/// Closed-form prediction for a theorem instance.
#[pyfunction]
#[pyo3(signature = (theorem, m, k=None, t=None, walsh_at_lambda=None))]
fn predict<'py>(
    py: Python<'py>,
    theorem: &str,
    m: u32,
    k: Option<u32>,
    t: Option<u64>,
    walsh_at_lambda: Option<i64>,
) -> PyResult<Bound<'py, PyAny>> {
    let theorem: TheoremId = theorem.parse().or_py()?;
    let p = analysis::predict(&analysis::PredictParams { theorem, m, k, t, walsh_at_lambda }).or_py()?;
    to_py(py, &p)
}

/// Builds, enumerates and compares one theorem instance.
#[pyfunction]
#[pyo3(signature = (theorem, m, function=None, k=None, t=None, lam=None, walsh_sign=None, override_hypotheses=false, modulus=None))]
#[allow(clippy::too_many_arguments)]
fn verify<'py>(
    py: Python<'py>,
    theorem: &str,
    m: u32,
    function: Option<String>,
    k: Option<u32>,
    t: Option<u64>,
    lam: Option<u32>,
    walsh_sign: Option<i8>,
    override_hypotheses: bool,
    modulus: Option<u64>,
) -> PyResult<Bound<'py, PyAny>> {
    let mut case = Case::new(theorem.parse().or_py()?, m);
    case.function = function;
    case.k = k;
    case.t = t;
    case.lambda = lam;
    case.walsh_sign = walsh_sign;
    case.override_hypotheses = override_hypotheses;
    let ctx = field_for(m, modulus)?;
    let opts = VerifyOptions { timing: false, ..VerifyOptions::default() };
    let report = py.detach(|| analysis::verify(&ctx, &case, &opts)).or_py()?;
    to_py(py, &report)
}

/// Runs a manifest (the built-in one by default) and returns the batch
/// report.
#[pyfunction]
#[pyo3(signature = (m_max=None, manifest=None, moduli=None, jobs=None))]
fn verify_all<'py>(
    py: Python<'py>,
    m_max: Option<u32>,
    manifest: Option<&str>,
    moduli: Option<Bound<'py, PyDict>>,
    jobs: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let mut man = match manifest {
        Some(text) => Manifest::from_toml_str(text).or_py()?,
        None => Manifest::builtin(),
    };
    if let Some(mm) = m_max {
        man = man.filter_m_max(mm);
    }
    // rebuilt through the TOML form so the moduli are validated
    let fields = match moduli {
        Some(d) => {
            let mut text = String::from("[moduli]\n");
            for (key, value) in d.iter() {
                text += &format!("{} = {}\n", key.extract::<u32>()?, value.extract::<u64>()?);
            }
            FieldConfig::from_toml_str(&text).or_py()?
        }
        None => FieldConfig::default(),
    };
    let opts = VerifyOptions { timing: false, ..VerifyOptions::default() };
    let batch = py.detach(|| analysis::verify_batch(&fields, &man.cases, &opts, jobs)).or_py()?;
    to_py(py, &batch)
}

#[pyfunction]
fn theorems() -> Vec<(&'static str, &'static str)> {
    TheoremId::ALL.iter().map(|t| (t.as_str(), t.description())).collect()
}

#[pyfunction]
fn families() -> Vec<(&'static str, &'static str)> {
    Family::CATALOG.to_vec()
}

#[pyfunction]
fn ab_exponents(m: u32) -> PyResult<Vec<u64>> {
    boolfunc::ab_monomial_exponents(m).or_py()
}

#[pymodule]
#[pyo3(name = "puncodes")]
pub fn puncodes_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("PuncodesError", m.py().get_type::<PuncodesError>())?;
    m.add_class::<PyField>()?;
    m.add_class::<PyFunction>()?;
    m.add_class::<PyCode>()?;
    m.add_function(wrap_pyfunction!(macwilliams, m)?)?;
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(predict, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    m.add_function(wrap_pyfunction!(theorems, m)?)?;
    m.add_function(wrap_pyfunction!(families, m)?)?;
    m.add_function(wrap_pyfunction!(ab_exponents, m)?)?;
    Ok(())
}
