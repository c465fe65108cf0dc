//! Discrete Choquet and Sugeno integrals of non-negative vectors with
//! respect to monotone measures.
//!
//! Both integrals sort the vector in descending order (ties broken by
//! ascending original index) and walk the chain of level sets
//! A_i = {sigma(1), ..., sigma(i)}. The Choquet integral telescopes the
//! sorted values against mu(A_i); the Sugeno integral replaces sum and
//! product by max and min, which keeps its arithmetic exact in floats.

use crate::error::{Error, Result};
use crate::weights::MonotoneMeasure;

/// A vector with finite, non-negative entries.
#[derive(Debug, Clone, PartialEq)]
pub struct NonNegVector(Vec<f64>);

impl NonNegVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::BadSpectrum {
                    context: format!("entry {i} is {v}, must be finite and >= 0"),
                });
            }
        }
        Ok(NonNegVector(values))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Indices sorted by descending value; equal values keep ascending index
/// order, so the permutation is deterministic.
pub fn sorted_indices_desc(x: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..x.len()).collect();
    idx.sort_by(|&a, &b| x[b].partial_cmp(&x[a]).unwrap().then(a.cmp(&b)));
    idx
}

/// The entries of x in descending order.
pub fn decreasing_rearrangement(x: &NonNegVector) -> Vec<f64> {
    let mut v = x.0.clone();
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

fn check_length(x: &NonNegVector, m: &MonotoneMeasure) -> Result<()> {
    if x.len() != m.ground_size() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: m.ground_size(),
            context: "vector length must equal the measure's ground size",
        });
    }
    Ok(())
}

/// Choquet integral: sum over i of (x_(i) - x_(i+1)) mu(A_i), with
/// x_(n+1) = 0.
pub fn choquet_integral(x: &NonNegVector, m: &MonotoneMeasure) -> Result<f64> {
    check_length(x, m)?;
    let order = sorted_indices_desc(x.as_slice());
    let n = order.len();
    let mut level_set = 0u64;
    let mut total = 0.0;
    for (i, &j) in order.iter().enumerate() {
        level_set |= 1 << j;
        let next = if i + 1 < n { x.as_slice()[order[i + 1]] } else { 0.0 };
        total += (x.as_slice()[j] - next) * m.value(level_set);
    }
    Ok(total)
}

/// Sugeno integral: max over i of min(x_(i), mu(A_i)). Pure max/min
/// arithmetic; no rounding is introduced.
pub fn sugeno_integral(x: &NonNegVector, m: &MonotoneMeasure) -> Result<f64> {
    check_length(x, m)?;
    let order = sorted_indices_desc(x.as_slice());
    let mut level_set = 0u64;
    let mut best = 0.0f64;
    for &j in &order {
        level_set |= 1 << j;
        best = best.max(x.as_slice()[j].min(m.value(level_set)));
    }
    Ok(best)
}

/// True iff (f_s - f_t)(g_s - g_t) >= 0 for every index pair: the two
/// vectors never order a pair of coordinates in opposite directions.
pub fn are_comonotonic(f: &[f64], g: &[f64]) -> Result<bool> {
    if f.len() != g.len() {
        return Err(Error::DimensionMismatch {
            left: f.len(),
            right: g.len(),
            context: "comonotonicity needs equal-length vectors",
        });
    }
    for s in 0..f.len() {
        for t in (s + 1)..f.len() {
            if (f[s] - f[t]) * (g[s] - g[t]) < 0.0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
