//! File formats for matrices, weights, and measure tables, plus the JSON
//! encoders used by reports.
//!
//! Matrix file: {"n": k, "complex": true|false, "data": [...]} with data
//! row-major; entries are [re, im] pairs when complex, plain reals
//! otherwise. Weight file: {"increments": [c1, ..., cN], "tail": c}.
//! Measure file: {"n": k, "values": {"": 0, "1": v1, "1,2": v12, ...}}
//! with one key per subset, written as comma-separated ascending 1-based
//! indices; the table must be complete.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::falsify::Counterexample;
use crate::integrals::NonNegVector;
use crate::matrix::ComplexMatrix;
use crate::tol;
use crate::weights::{MonotoneMeasure, WeightFunction};

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid {what} file: {e}")))
}

#[derive(Deserialize)]
struct MatrixFile {
    n: usize,
    complex: bool,
    data: Vec<Value>,
}

fn number(v: &Value, what: &str) -> Result<f64> {
    let x = v
        .as_f64()
        .ok_or_else(|| Error::Parse(format!("{what} must be a number, got {v}")))?;
    if !x.is_finite() {
        return Err(Error::Parse(format!("{what} must be finite")));
    }
    Ok(x)
}

pub fn parse_matrix_str(text: &str) -> Result<ComplexMatrix> {
    let file: MatrixFile = from_json(text, "matrix")?;
    if file.n == 0 {
        return Err(Error::Parse("matrix dimension must be at least 1".into()));
    }
    if file.n > tol::MAX_DIM {
        return Err(Error::Parse(format!(
            "matrix dimension {} exceeds the supported maximum {}",
            file.n,
            tol::MAX_DIM
        )));
    }
    if file.data.len() != file.n * file.n {
        return Err(Error::Parse(format!(
            "matrix data has {} entries, expected {}",
            file.data.len(),
            file.n * file.n
        )));
    }
    let mut m = ComplexMatrix::zeros(file.n, file.n);
    for (idx, entry) in file.data.iter().enumerate() {
        let (i, j) = (idx / file.n, idx % file.n);
        let value = if file.complex {
            match entry.as_array() {
                Some(pair) if pair.len() == 2 => Complex64::new(
                    number(&pair[0], "matrix entry real part")?,
                    number(&pair[1], "matrix entry imaginary part")?,
                ),
                _ => {
                    return Err(Error::Parse(format!(
                        "complex matrix entries must be [re, im] pairs, got {entry}"
                    )))
                }
            }
        } else {
            Complex64::new(number(entry, "matrix entry")?, 0.0)
        };
        m[(i, j)] = value;
    }
    Ok(m)
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    parse_matrix_str(&read_text(path)?)
}

#[derive(Deserialize)]
struct WeightFile {
    increments: Vec<f64>,
    tail: f64,
}

pub fn parse_weight_str(text: &str) -> Result<WeightFunction> {
    let file: WeightFile = from_json(text, "weight")?;
    WeightFunction::new(file.increments, file.tail)
}

pub fn read_weight(path: &Path) -> Result<WeightFunction> {
    parse_weight_str(&read_text(path)?)
}

#[derive(Deserialize)]
struct MeasureFile {
    n: usize,
    values: Map<String, Value>,
}

fn subset_key_to_mask(key: &str, n: usize) -> Result<u64> {
    if key.is_empty() {
        return Ok(0);
    }
    let mut mask = 0u64;
    let mut last = 0usize;
    for part in key.split(',') {
        let idx: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad subset key '{key}': '{part}' is not an index")))?;
        if idx < 1 || idx > n {
            return Err(Error::Parse(format!(
                "subset key '{key}' mentions element {idx}, outside 1..={n}"
            )));
        }
        if idx <= last {
            return Err(Error::Parse(format!(
                "subset key '{key}' must list indices in strictly ascending order"
            )));
        }
        last = idx;
        mask |= 1 << (idx - 1);
    }
    Ok(mask)
}

fn mask_to_subset_key(mask: u64) -> String {
    let indices: Vec<String> = (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| (b + 1).to_string())
        .collect();
    indices.join(",")
}

pub fn parse_measure_str(text: &str) -> Result<MonotoneMeasure> {
    let file: MeasureFile = from_json(text, "measure")?;
    if file.n > tol::MAX_GROUND {
        return Err(Error::Parse(format!(
            "measure ground size {} exceeds the supported maximum {}",
            file.n,
            tol::MAX_GROUND
        )));
    }
    let size = 1usize << file.n;
    let mut table: Vec<Option<f64>> = vec![None; size];
    for (key, value) in &file.values {
        let mask = subset_key_to_mask(key, file.n)? as usize;
        if table[mask].is_some() {
            return Err(Error::Parse(format!(
                "measure table lists subset '{key}' more than once"
            )));
        }
        table[mask] = Some(number(value, &format!("measure of subset '{key}'"))?);
    }
    let values: Result<Vec<f64>> = table
        .into_iter()
        .enumerate()
        .map(|(mask, v)| {
            v.ok_or_else(|| {
                Error::Parse(format!(
                    "measure table is missing subset '{}'",
                    mask_to_subset_key(mask as u64)
                ))
            })
        })
        .collect();
    MonotoneMeasure::from_table(file.n, values?)
}

pub fn read_measure(path: &Path) -> Result<MonotoneMeasure> {
    parse_measure_str(&read_text(path)?)
}

/// Comma-separated list of non-negative decimals, e.g. "5,3,0.5".
pub fn parse_vector(text: &str) -> Result<NonNegVector> {
    let values: Result<Vec<f64>> = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("'{part}' is not a number")))
        })
        .collect();
    let values = values?;
    if values.is_empty() {
        return Err(Error::Parse("vector must have at least one entry".into()));
    }
    NonNegVector::new(values)
}

/// Canonical JSON form of a matrix (always the complex pair encoding).
pub fn matrix_to_json(m: &ComplexMatrix) -> Value {
    let data: Vec<Value> = m.entries().iter().map(|z| json!([z.re, z.im])).collect();
    json!({ "n": m.rows(), "complex": true, "data": data })
}

pub fn weight_to_json(w: &WeightFunction) -> Value {
    json!({ "increments": w.increments(), "tail": w.tail() })
}

pub fn counterexample_to_json(ce: &Counterexample) -> Value {
    json!({
        "p": ce.p,
        "lhs": ce.lhs,
        "rhs": ce.rhs,
        "margin": ce.margin,
        "grid_point": ce.grid_point.map(|(s, t)| json!({ "s": s, "t": t })),
        "a": matrix_to_json(&ce.a),
        "b": matrix_to_json(&ce.b),
    })
}
