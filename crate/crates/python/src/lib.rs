//! Python bindings: exact correlations, bounds, the Boolean-function
//! construction, verification and the exhaustive search.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use zcs_core as core;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn sequence(q: u32, exps: Vec<u32>) -> PyResult<core::QarySequence> {
    core::QarySequence::new(q, exps).map_err(value_err)
}

/// Coefficients `[a_0, …, a_{q−1}]` of `ρ(c, d; u) = Σ_j a_j ξ^j`.
#[pyfunction]
fn accf(q: u32, c: Vec<u32>, d: Vec<u32>, u: isize) -> PyResult<Vec<i64>> {
    let v = core::accf(&sequence(q, c)?, &sequence(q, d)?, u).map_err(value_err)?;
    Ok(v.coeffs().to_vec())
}

/// Whether `Σ_j a_j ξ^j` vanishes in `Z[ξ_q]`.
#[pyfunction]
fn is_zero(q: u32, coeffs: Vec<i64>) -> PyResult<bool> {
    Ok(core::CycloValue::from_coeffs(q, coeffs).map_err(value_err)?.is_zero())
}

/// Integer coefficients of `Φ_q`, constant term first.
#[pyfunction]
fn cyclotomic_polynomial(q: u32) -> PyResult<Vec<i64>> {
    core::cyclotomic_polynomial(q).map_err(value_err)
}

#[pyclass(name = "Bounds", frozen, get_all)]
struct PyBounds {
    n: usize,
    l: usize,
    z: usize,
    theorem1: u64,
    fan: u64,
    /// `(numerator, denominator)` of `N(L+Z−1)/Z`.
    welch_feng: (u64, u64),
}

#[pymethods]
impl PyBounds {
    fn welch_feng_float(&self) -> f64 {
        self.welch_feng.0 as f64 / self.welch_feng.1 as f64
    }

    fn __repr__(&self) -> String {
        format!(
            "Bounds(n={}, l={}, z={}, theorem1={}, fan={}, welch_feng={}/{})",
            self.n, self.l, self.z, self.theorem1, self.fan, self.welch_feng.0, self.welch_feng.1
        )
    }
}

#[pyfunction]
fn bounds(n: usize, l: usize, z: usize) -> PyResult<PyBounds> {
    let b = core::bounds(n, l, z).map_err(value_err)?;
    Ok(PyBounds {
        n,
        l,
        z,
        theorem1: b.theorem1,
        fan: b.fan,
        welch_feng: (*b.welch_feng.numer(), *b.welch_feng.denom()),
    })
}

/// One violated condition: `ρ(C^p, C^t; u)` with its exact coefficients.
#[pyclass(name = "Witness", frozen, get_all)]
struct PyWitness {
    p: usize,
    t: usize,
    u: isize,
    coeffs: Vec<i64>,
}

#[pymethods]
impl PyWitness {
    fn __repr__(&self) -> String {
        format!("Witness(p={}, t={}, u={}, coeffs={:?})", self.p, self.t, self.u, self.coeffs)
    }
}

#[pyclass(name = "Verification", frozen, get_all)]
struct PyVerification {
    z: usize,
    ok: bool,
    measured_z: usize,
    energy_ok: bool,
    failures: Vec<Py<PyWitness>>,
}

#[pymethods]
impl PyVerification {
    fn __bool__(&self) -> bool {
        self.ok
    }

    fn __repr__(&self) -> String {
        format!(
            "Verification(z={}, ok={}, measured_z={}, failures={})",
            self.z,
            self.ok,
            self.measured_z,
            self.failures.len()
        )
    }
}

#[pyclass(name = "WelchReport", frozen, get_all)]
struct PyWelchReport {
    rows: usize,
    cols: usize,
    column_energy: Vec<u64>,
    max_offdiag: f64,
    offdiag_exact_zero: bool,
    slack: i64,
    welch_lhs: f64,
    welch_rhs: f64,
    welch_holds: bool,
    alpha: usize,
    excluded_alpha_unit: bool,
}

/// A family of `M` flocks, each holding `N` exponent sequences of length `L`.
#[pyclass(name = "Family", frozen)]
struct PyFamily {
    inner: core::ZcsFamily,
}

#[pymethods]
impl PyFamily {
    #[new]
    #[pyo3(signature = (q, sets, z=None))]
    fn new(q: u32, sets: Vec<Vec<Vec<u32>>>, z: Option<usize>) -> PyResult<Self> {
        let inner = core::ZcsFamily::from_exponents(q, sets, z).map_err(value_err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn q(&self) -> u32 {
        self.inner.q()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.set_size()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.flock_size()
    }

    #[getter]
    fn l(&self) -> usize {
        self.inner.seq_len()
    }

    #[getter]
    fn claimed_z(&self) -> Option<usize> {
        self.inner.claimed_z()
    }

    fn sets(&self) -> Vec<Vec<Vec<u32>>> {
        self.inner.to_exponents()
    }

    /// Exact coefficients of `ρ(C^p, C^t; u)`.
    fn set_correlation(&self, p: usize, t: usize, u: isize) -> PyResult<Vec<i64>> {
        let m = self.inner.set_size();
        if p >= m || t >= m {
            return Err(value_err(format!("flock index out of range (M={m})")));
        }
        let v = core::set_correlation(self.inner.flock(p), self.inner.flock(t), u).map_err(value_err)?;
        Ok(v.coeffs().to_vec())
    }

    fn verify(&self, py: Python<'_>, z: usize) -> PyResult<PyVerification> {
        let r = core::verify_zcs(&self.inner, z).map_err(value_err)?;
        let failures = r
            .failures
            .into_iter()
            .map(|w| {
                Py::new(
                    py,
                    PyWitness {
                        p: w.p,
                        t: w.t,
                        u: w.u,
                        coeffs: w.value.coeffs().to_vec(),
                    },
                )
            })
            .collect::<PyResult<_>>()?;
        Ok(PyVerification {
            z: r.z,
            ok: r.ok,
            measured_z: r.measured_z,
            energy_ok: r.energy_ok,
            failures,
        })
    }

    fn max_zcz_width(&self) -> usize {
        core::max_zcz_width(&self.inner)
    }

    /// `(verdict, measured_z, bound)` with verdict one of
    /// `"optimal"`, `"suboptimal"`, `"not-a-ZCS"`.
    fn classify(&self) -> (String, usize, Option<u64>) {
        let c = core::classify_optimality(&self.inner);
        (c.verdict.to_string(), c.z, c.bound)
    }

    fn welch_check(&self, z: usize) -> PyResult<PyWelchReport> {
        let r = core::welch_matrix_check(&self.inner, z).map_err(value_err)?;
        Ok(PyWelchReport {
            rows: r.rows,
            cols: r.cols,
            max_offdiag: r.max_offdiag,
            offdiag_exact_zero: r.offdiag_exact_zero,
            slack: r.slack,
            welch_lhs: r.welch_lhs,
            welch_rhs: r.welch_rhs,
            welch_holds: r.welch_holds(),
            alpha: r.alpha,
            excluded_alpha_unit: r.excluded_alpha_unit,
            column_energy: r.column_energy,
        })
    }

    fn to_v1(&self) -> PyResult<String> {
        core::render_v1(&self.inner).map_err(value_err)
    }

    #[staticmethod]
    fn from_v1(text: &str) -> PyResult<Self> {
        let inner = core::parse_v1(text).map_err(value_err)?;
        Ok(Self { inner })
    }

    fn to_json(&self) -> String {
        core::to_json(&self.inner)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = core::from_json(text).map_err(value_err)?;
        Ok(Self { inner })
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        let z = self.claimed_z().map_or_else(|| "None".to_string(), |z| z.to_string());
        format!(
            "Family(q={}, M={}, N={}, L={}, Z={z})",
            self.q(),
            self.m(),
            self.n(),
            self.l()
        )
    }
}

/// Builds the `(b^n, 2^k, b^n, 2^k)` family; `blocks` are 1-based ordered
/// variable lists whose first entries are `1..=k`.
#[pyfunction]
#[pyo3(signature = (q, b, m, n, blocks, beta=None))]
fn construct(
    q: u32,
    b: u32,
    m: usize,
    n: usize,
    blocks: Vec<Vec<usize>>,
    beta: Option<Vec<u32>>,
) -> PyResult<PyFamily> {
    let beta = beta.unwrap_or_else(|| vec![0; m + 1]);
    let params = core::ConstructionParams::new(q, b, m, n, blocks, beta).map_err(value_err)?;
    let inner = core::build_zcs(&params).map_err(value_err)?;
    Ok(PyFamily { inner })
}

#[pyclass(name = "SearchResult", frozen, get_all)]
struct PySearchResult {
    best_m: usize,
    bound: u64,
    proven_exhaustive: bool,
    candidates_examined: u64,
    admissible_flocks: usize,
    witness: Option<Py<PyFamily>>,
}

/// Maximum set size over all `q`-ary `(N, L)` flocks at width `z`.
#[pyfunction]
#[pyo3(signature = (q, n, l, z, cap=core::search::DEFAULT_CAP, seed=0))]
fn search(py: Python<'_>, q: u32, n: usize, l: usize, z: usize, cap: u64, seed: u64) -> PyResult<PySearchResult> {
    let spec = core::SearchSpec {
        max_candidates: cap,
        seed,
        ..core::SearchSpec::new(q, n, l, z)
    };
    let r = py
        .detach(|| core::exhaustive_max_set_size(&spec))
        .map_err(value_err)?;
    let witness = r
        .witness
        .map(|inner| Py::new(py, PyFamily { inner }))
        .transpose()?;
    Ok(PySearchResult {
        best_m: r.best_m,
        bound: r.bound,
        proven_exhaustive: r.proven_exhaustive,
        candidates_examined: r.candidates_examined,
        admissible_flocks: r.admissible_flocks,
        witness,
    })
}

/// For orthogonal `c`, `d`: whether `|Σ_{i≠α} c_i d_i^*|² = 1` exactly.
#[pyfunction]
fn lemma2_check(q: u32, c: Vec<u32>, d: Vec<u32>, alpha: usize) -> PyResult<bool> {
    core::lemma2_check(&sequence(q, c)?, &sequence(q, d)?, alpha).map_err(value_err)
}

/// A seeded pair of orthogonal length-`l` ramp sequences.
#[pyfunction]
fn random_orthogonal_pair(q: u32, l: usize, seed: u64) -> PyResult<(Vec<u32>, Vec<u32>)> {
    let (c, d) = core::random_orthogonal_pair(q, l, seed).map_err(value_err)?;
    Ok((c.into_exponents(), d.into_exponents()))
}

#[pymodule]
fn zcs(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(accf, m)?)?;
    m.add_function(wrap_pyfunction!(is_zero, m)?)?;
    m.add_function(wrap_pyfunction!(cyclotomic_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(lemma2_check, m)?)?;
    m.add_function(wrap_pyfunction!(random_orthogonal_pair, m)?)?;
    m.add_class::<PyFamily>()?;
    m.add_class::<PyBounds>()?;
    m.add_class::<PyVerification>()?;
    m.add_class::<PyWitness>()?;
    m.add_class::<PyWelchReport>()?;
    m.add_class::<PySearchResult>()?;
    Ok(())
}
