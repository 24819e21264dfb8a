//! Python bindings over the core library. Scalars cross the boundary as
//! `"p/q"` strings, matrices and reports as JSON strings in the formats of
//! the command-line emitters, tableaux as nested lists of rows.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use ybfuse::algebra::{e_q_tableau, e_tableau};
use ybfuse::combinatorics::{
    self, count_hook_ssyt, count_ssyt, enumerate_syt, Partition, StandardTableau,
};
use ybfuse::emit;
use ybfuse::exact::{format_rational, parse_rational};
use ybfuse::fusion::{f_of_tableau, restrict_fused, tableau_contents};
use ybfuse::kernels::{base_ybe_check, gamma, r_matrix, Convention, KernelKind, KernelSpec};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn kernel(kind: &str, n: usize, m: usize, q: &str) -> PyResult<KernelSpec> {
    let kind = KernelKind::parse(kind).map_err(err)?;
    let q = if kind.is_hecke() {
        Some(parse_rational(q).map_err(err)?)
    } else {
        None
    };
    KernelSpec::new(kind, n, m, q).map_err(err)
}

fn tableau(rows: Vec<Vec<usize>>) -> PyResult<StandardTableau> {
    StandardTableau::new(rows).map_err(err)
}

fn shape(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

/// All standard tableaux of a shape, as lists of rows.
#[pyfunction]
fn standard_tableaux(parts: Vec<usize>) -> PyResult<Vec<Vec<Vec<usize>>>> {
    Ok(enumerate_syt(&shape(parts)?)
        .into_iter()
        .map(|t| t.rows().to_vec())
        .collect())
}

/// Hook lengths of a shape, row by row.
#[pyfunction]
fn hook_lengths(parts: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
    Ok(combinatorics::hook_lengths(&shape(parts)?))
}

/// Reciprocal of the product of all hook lengths, as "p/q".
#[pyfunction]
fn hook_product_scalar(parts: Vec<usize>) -> PyResult<String> {
    Ok(format_rational(&combinatorics::f_lambda(&shape(parts)?)))
}

/// The deformed hook scalar at a rational q, as "p/q".
#[pyfunction]
fn deformed_hook_scalar(parts: Vec<usize>, q: &str) -> PyResult<String> {
    let q = parse_rational(q).map_err(err)?;
    Ok(format_rational(
        &combinatorics::f_q_lambda(&shape(parts)?, &q).map_err(err)?,
    ))
}

/// Classical contents of a standard tableau, entry order, as "p/q" strings.
#[pyfunction]
fn classical_contents(rows: Vec<Vec<usize>>) -> PyResult<Vec<String>> {
    let t = tableau(rows)?;
    Ok(combinatorics::classical_contents(&t)
        .iter()
        .map(format_rational)
        .collect())
}

/// Number of weakly-increasing-row fillings with entries from 1..=n.
#[pyfunction]
fn semistandard_count(parts: Vec<usize>, n: usize) -> PyResult<usize> {
    Ok(count_ssyt(&shape(parts)?, n))
}

/// Number of hook semistandard fillings for the graded alphabet (n | m).
#[pyfunction]
fn hook_semistandard_count(parts: Vec<usize>, n: usize, m: usize) -> PyResult<usize> {
    Ok(count_hook_ssyt(&shape(parts)?, n, m))
}

/// The base solution of a kernel as a matrix JSON string.
#[pyfunction]
#[pyo3(signature = (kind, n, m=0, q="2"))]
fn kernel_matrix_json(kind: &str, n: usize, m: usize, q: &str) -> PyResult<String> {
    let k = kernel(kind, n, m, q)?;
    Ok(emit::ratfun_matrix_to_json(&r_matrix(&k)).to_string())
}

/// The unitarity scalar of a kernel, rendered in its spectral variable.
#[pyfunction]
#[pyo3(signature = (kind, n, m=0, q="2"))]
fn unitarity_scalar(kind: &str, n: usize, m: usize, q: &str) -> PyResult<String> {
    let k = kernel(kind, n, m, q)?;
    let g = gamma(&k).map_err(err)?;
    let var = match k.convention() {
        Convention::Additive => "u",
        Convention::Multiplicative => "a",
    };
    Ok(g.display_with_var(var))
}

/// Grid check of the base functional equation; true when every point agrees.
#[pyfunction]
#[pyo3(signature = (kind, n, m=0, q="2"))]
fn verify_base_ybe(kind: &str, n: usize, m: usize, q: &str) -> PyResult<bool> {
    Ok(base_ybe_check(&kernel(kind, n, m, q)?).passed())
}

/// Rank of the invariant subspace attached to a standard tableau.
#[pyfunction]
#[pyo3(signature = (kind, n, rows, m=0, q="2"))]
fn tableau_subspace_rank(
    kind: &str,
    n: usize,
    rows: Vec<Vec<usize>>,
    m: usize,
    q: &str,
) -> PyResult<usize> {
    let k = kernel(kind, n, m, q)?;
    Ok(f_of_tableau(&k, &tableau(rows)?).map_err(err)?.rank)
}

/// Restricted fused operator for a pair of tableaux, as a matrix JSON
/// string over rational functions (pivot-column bases).
#[pyfunction]
#[pyo3(signature = (kind, n, rows, rows2, m=0, q="2"))]
fn fused_matrix_json(
    kind: &str,
    n: usize,
    rows: Vec<Vec<usize>>,
    rows2: Vec<Vec<usize>>,
    m: usize,
    q: &str,
) -> PyResult<String> {
    let k = kernel(kind, n, m, q)?;
    let restricted = restrict_fused(&k, &tableau(rows)?, &tableau(rows2)?, None).map_err(err)?;
    Ok(emit::ratfun_matrix_to_json(&restricted).to_string())
}

/// Content string of a tableau in a kernel's convention, as "p/q" strings.
#[pyfunction]
#[pyo3(signature = (kind, n, rows, m=0, q="2"))]
fn kernel_contents(
    kind: &str,
    n: usize,
    rows: Vec<Vec<usize>>,
    m: usize,
    q: &str,
) -> PyResult<Vec<String>> {
    let k = kernel(kind, n, m, q)?;
    Ok(tableau_contents(&k, &tableau(rows)?)
        .map_err(err)?
        .iter()
        .map(format_rational)
        .collect())
}

/// Coefficients of the primitive idempotent of a tableau, as a dict from
/// one-line permutation strings to "p/q" coefficients.
#[pyfunction]
#[pyo3(signature = (group, rows, q="2"))]
fn idempotent_coefficients(
    group: &str,
    rows: Vec<Vec<usize>>,
    q: &str,
) -> PyResult<std::collections::BTreeMap<String, String>> {
    let t = tableau(rows)?;
    let coeffs = match group {
        "sym" => e_tableau(&t).map_err(err)?.constant_coeffs().map_err(err)?,
        "hecke" => {
            let q = parse_rational(q).map_err(err)?;
            e_q_tableau(&t, &q)
                .map_err(err)?
                .constant_coeffs()
                .map_err(err)?
        }
        other => return Err(PyValueError::new_err(format!("unknown group {other:?}"))),
    };
    Ok(coeffs
        .iter()
        .map(|(p, c)| (p.to_string(), format_rational(c)))
        .collect())
}

/// Rebuilds a worked example matrix and diffs it against its reference;
/// true when they agree entry by entry.
#[pyfunction]
#[pyo3(signature = (id, q="2"))]
fn reproduce_matches(id: &str, q: &str) -> PyResult<bool> {
    let q = parse_rational(q).map_err(err)?;
    Ok(ybfuse::golden::reproduce(id, &q).map_err(err)?.matches())
}

#[pymodule]
fn ybfuse_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(standard_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(hook_lengths, m)?)?;
    m.add_function(wrap_pyfunction!(hook_product_scalar, m)?)?;
    m.add_function(wrap_pyfunction!(deformed_hook_scalar, m)?)?;
    m.add_function(wrap_pyfunction!(classical_contents, m)?)?;
    m.add_function(wrap_pyfunction!(semistandard_count, m)?)?;
    m.add_function(wrap_pyfunction!(hook_semistandard_count, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_matrix_json, m)?)?;
    m.add_function(wrap_pyfunction!(unitarity_scalar, m)?)?;
    m.add_function(wrap_pyfunction!(verify_base_ybe, m)?)?;
    m.add_function(wrap_pyfunction!(tableau_subspace_rank, m)?)?;
    m.add_function(wrap_pyfunction!(fused_matrix_json, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_contents, m)?)?;
    m.add_function(wrap_pyfunction!(idempotent_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_matches, m)?)?;
    Ok(())
}
