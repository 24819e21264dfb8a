//! JSON and pretty emitters for scalars, matrices, and tableaux. JSON forms
//! are deterministic byte for byte for a fixed input.

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Polynomial, Rational, RationalFunction};
use crate::linalg::ExactMatrix;
use serde_json::{json, Value};

/// `{"num": [c0, c1, ..], "den": [d0, d1, ..]}` with `"p/q"` coefficients.
pub fn ratfun_to_json(f: &RationalFunction) -> Value {
    let coeffs = |p: &Polynomial| -> Vec<Value> {
        p.coeffs()
            .iter()
            .map(|c| Value::String(format_rational(c)))
            .collect()
    };
    let num = f.numerator();
    let den = f.denominator();
    json!({
        "num": if num.is_zero() { vec![Value::String("0/1".into())] } else { coeffs(num) },
        "den": coeffs(den),
    })
}

pub fn ratfun_from_json(v: &Value) -> Result<RationalFunction> {
    let coeffs = |key: &str| -> Result<Polynomial> {
        let arr = v
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Invalid(format!("missing coefficient list {key:?}")))?;
        let parsed: Result<Vec<Rational>> = arr
            .iter()
            .map(|c| {
                c.as_str()
                    .ok_or_else(|| Error::Invalid("coefficient must be a string".into()))
                    .and_then(parse_rational)
            })
            .collect();
        Ok(Polynomial::from_coeffs(parsed?))
    };
    RationalFunction::new(coeffs("num")?, coeffs("den")?)
}

/// `{"rows": r, "cols": c, "entries": [..]}`, entries row major.
pub fn matrix_to_json<T>(m: &ExactMatrix<T>, scalar: impl Fn(&T) -> Value) -> Value
where
    T: crate::linalg::Scalar,
{
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.entries().iter().map(scalar).collect::<Vec<_>>(),
    })
}

pub fn rational_matrix_to_json(m: &ExactMatrix<Rational>) -> Value {
    matrix_to_json(m, |c| Value::String(format_rational(c)))
}

pub fn ratfun_matrix_to_json(m: &ExactMatrix<RationalFunction>) -> Value {
    matrix_to_json(m, ratfun_to_json)
}

pub fn rational_matrix_from_json(v: &Value) -> Result<ExactMatrix<Rational>> {
    let rows = v
        .get("rows")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Invalid("missing rows".into()))? as usize;
    let cols = v
        .get("cols")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Invalid("missing cols".into()))? as usize;
    let entries = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Invalid("missing entries".into()))?;
    if entries.len() != rows * cols {
        return Err(Error::SizeMismatch(format!(
            "expected {} entries, found {}",
            rows * cols,
            entries.len()
        )));
    }
    let parsed: Result<Vec<Rational>> = entries
        .iter()
        .map(|e| {
            e.as_str()
                .ok_or_else(|| Error::Invalid("entry must be a string".into()))
                .and_then(parse_rational)
        })
        .collect();
    let parsed = parsed?;
    Ok(ExactMatrix::from_fn(rows, cols, |r, c| {
        parsed[r * cols + c].clone()
    }))
}

/// Aligned grid rendering; zero entries print as a point, matching the
/// display style used for the worked matrices.
pub fn pretty_matrix<T: crate::linalg::Scalar>(
    m: &ExactMatrix<T>,
    show: impl Fn(&T) -> String,
) -> String {
    let rendered: Vec<Vec<String>> = (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| {
                    let e = m.at(r, c);
                    if e.is_zero() {
                        ".".to_string()
                    } else {
                        show(e)
                    }
                })
                .collect()
        })
        .collect();
    let widths: Vec<usize> = (0..m.cols())
        .map(|c| rendered.iter().map(|row| row[c].len()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for row in &rendered {
        out.push('[');
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                out.push_str("  ");
            }
            out.push_str(&format!("{cell:>width$}", width = widths[c]));
        }
        out.push_str("]\n");
    }
    out
}

pub fn pretty_rational_matrix(m: &ExactMatrix<Rational>) -> String {
    pretty_matrix(m, |c| {
        if c.is_integer() {
            c.numer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        }
    })
}

pub fn pretty_ratfun_matrix(m: &ExactMatrix<RationalFunction>, var: &str) -> String {
    pretty_matrix(m, |f| f.display_with_var(var))
}

/// Tableaux travel as JSON lists of rows, e.g. `[[1,3],[2]]`.
pub fn tableau_from_json(text: &str) -> Result<crate::combinatorics::StandardTableau> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Invalid(format!("tableau is not valid JSON: {e}")))?;
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Invalid("tableau must be a list of rows".into()))?;
    let parsed: Result<Vec<Vec<usize>>> = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Invalid("tableau row must be a list".into()))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| Error::Invalid("tableau entry must be an integer".into()))
                })
                .collect()
        })
        .collect();
    crate::combinatorics::StandardTableau::new(parsed?)
}

pub fn tableau_to_json(t: &crate::combinatorics::StandardTableau) -> Value {
    json!(t.rows())
}
