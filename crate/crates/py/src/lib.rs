//! Python bindings for the Koszul homology toolkit.

use koszul2::koszul::{class_is_nonzero, homology_dim, is_boundary, is_cycle, DegreeSlice};
use koszul2::partitions;
use koszul2::{ExactField, KoszulElement, Partition};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn field_of(characteristic: u64) -> PyResult<ExactField> {
    ExactField::from_characteristic(characteristic).map_err(PyValueError::new_err)
}

#[pyclass(name = "Partition")]
#[derive(Clone)]
struct PyPartition {
    inner: Partition,
}

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<u32>) -> PyResult<Self> {
        Partition::new(parts)
            .map(|inner| PyPartition { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn parts(&self) -> Vec<u32> {
        self.inner.parts().to_vec()
    }

    fn weight(&self) -> u32 {
        self.inner.weight()
    }

    fn conjugate(&self) -> PyPartition {
        PyPartition { inner: self.inner.conjugate() }
    }

    fn is_self_conjugate(&self) -> bool {
        self.inner.is_self_conjugate()
    }

    fn durfee(&self) -> usize {
        self.inner.durfee()
    }

    /// Arm lengths in the Frobenius notation; requires self-conjugacy.
    fn frobenius_arms(&self) -> PyResult<Vec<u32>> {
        partitions::frobenius(&self.inner)
            .map(|f| f.arms().to_vec())
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn schur_dim(&self, n: usize) -> num_bigint::BigInt {
        partitions::schur_dim(&self.inner, n)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.inner.parts())
    }

    fn __eq__(&self, other: &PyPartition) -> bool {
        self.inner == other.inner
    }
}

#[pyclass(name = "Element")]
#[derive(Clone)]
struct PyElement {
    inner: KoszulElement,
}

#[pymethods]
impl PyElement {
    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_cycle(&self) -> bool {
        is_cycle(&self.inner)
    }

    fn is_boundary(&self) -> bool {
        is_boundary(&self.inner)
    }

    fn class_is_nonzero(&self) -> bool {
        class_is_nonzero(&self.inner)
    }

    /// Homological and internal degree, or None if mixed or zero.
    fn bidegree(&self) -> Option<(usize, u32)> {
        self.inner.bidegree()
    }

    fn multidegree(&self) -> Option<Vec<u32>> {
        self.inner.multidegree()
    }

    fn differential(&self) -> PyElement {
        PyElement { inner: self.inner.differential() }
    }

    fn wedge(&self, other: &PyElement) -> PyElement {
        PyElement { inner: self.inner.wedge_multiply(&other.inner) }
    }

    fn add(&self, other: &PyElement) -> PyElement {
        let mut out = self.inner.clone();
        out.add(&other.inner);
        PyElement { inner: out }
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element({})", self.inner)
    }
}

/// The distinguished hook cycle Z_i in n variables.
#[pyfunction]
#[pyo3(signature = (i, n, characteristic = 0))]
fn hook_cycle(i: usize, n: usize, characteristic: u64) -> PyResult<PyElement> {
    koszul2::hook_cycle(i, n, field_of(characteristic)?)
        .map(|inner| PyElement { inner })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// The cycle z_{a,b} for 1-based variable index tuples a (length t+1) and b (length t).
#[pyfunction]
#[pyo3(signature = (a, b, n, characteristic = 0))]
fn z_cycle(a: Vec<u8>, b: Vec<u8>, n: usize, characteristic: u64) -> PyResult<PyElement> {
    koszul2::z_cycle_vars(&a, &b, n, field_of(characteristic)?)
        .map(|inner| PyElement { inner })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Wedge product of the Z_i over a subset of {0, .., n-1}.
#[pyfunction]
#[pyo3(signature = (subset, n, characteristic = 0))]
fn z_product(subset: Vec<usize>, n: usize, characteristic: u64) -> PyResult<PyElement> {
    koszul2::cycles::squarefree_z_product(&subset, n, field_of(characteristic)?)
        .map(|inner| PyElement { inner })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Dimension of H_i in internal degree j.
#[pyfunction]
#[pyo3(signature = (n, i, j, characteristic = 0))]
fn homology_dimension(n: usize, i: usize, j: u32, characteristic: u64) -> PyResult<usize> {
    Ok(homology_dim(n, i, &DegreeSlice::Internal(j), field_of(characteristic)?))
}

/// Dimension of H_i in a fixed multidegree.
#[pyfunction]
#[pyo3(signature = (n, i, delta, characteristic = 0))]
fn homology_dimension_multi(n: usize, i: usize, delta: Vec<u32>, characteristic: u64) -> PyResult<usize> {
    if delta.len() != n {
        return Err(PyValueError::new_err("multidegree length must equal n"));
    }
    Ok(homology_dim(n, i, &DegreeSlice::Multi(delta), field_of(characteristic)?))
}

/// Self-conjugate partitions predicted in bidegree (i, j), as part lists.
#[pyfunction]
fn predicted_partitions(n: usize, i: u32, j: u32) -> Vec<PyPartition> {
    partitions::self_conjugate_enum(n, i, j)
        .into_iter()
        .map(|inner| PyPartition { inner })
        .collect()
}

/// Straighten z_{a,b} onto the tableau basis: list of (a, b, coefficient string).
#[pyfunction]
#[pyo3(signature = (a, b, n, characteristic = 0))]
fn straighten(
    a: Vec<u8>,
    b: Vec<u8>,
    n: usize,
    characteristic: u64,
) -> PyResult<Vec<(Vec<u8>, Vec<u8>, String)>> {
    let out = koszul2::straighten(&a, &b, n, field_of(characteristic)?)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(out
        .into_iter()
        .map(|(pair, c)| (pair.a.clone(), pair.b.clone(), c.to_string()))
        .collect())
}

/// Reduced homology dimension of the matching complex on n points.
#[pyfunction]
#[pyo3(signature = (n, dim, characteristic = 0))]
fn matching_homology(n: usize, dim: i64, characteristic: u64) -> PyResult<usize> {
    Ok(koszul2::matching::reduced_homology(n, dim, field_of(characteristic)?))
}

/// Torsion invariant factors (> 1) of the integral reduced homology.
#[pyfunction]
fn matching_torsion(n: usize, dim: i64) -> Vec<num_bigint::BigInt> {
    koszul2::matching::torsion(n, dim)
}

#[pymodule]
fn koszul2_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyElement>()?;
    m.add_function(wrap_pyfunction!(hook_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(z_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(z_product, m)?)?;
    m.add_function(wrap_pyfunction!(homology_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(homology_dimension_multi, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(straighten, m)?)?;
    m.add_function(wrap_pyfunction!(matching_homology, m)?)?;
    m.add_function(wrap_pyfunction!(matching_torsion, m)?)?;
    Ok(())
}
