//! Norms induced by the non-linear traces: the Choquet trace norm, its
//! weighted Schatten p-relatives, Ky Fan and Ky Fan p-k norms as special
//! cases, and the Sugeno norm with its metric.
//!
//! Every norm routes through the singular values of the argument; powers
//! are applied to the spectrum, never by multiplying matrices. Triangle
//! inequalities for the weighted families hold exactly when the weight is
//! concave; the counterexample machinery for the non-concave regime lives
//! in `falsify`.

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::spectral::singular_values;
use crate::traces::{phi_alpha_of_spectrum, psi_alpha_of_spectrum};
use crate::weights::WeightFunction;

/// A weighted Schatten norm specification: weight plus exponent p >= 1.
#[derive(Debug, Clone, PartialEq)]
pub struct NormSpec {
    weight: WeightFunction,
    p: f64,
}

impl NormSpec {
    pub fn new(weight: WeightFunction, p: f64) -> Result<Self> {
        if !p.is_finite() || p < 1.0 {
            return Err(Error::InvalidExponent { p });
        }
        Ok(NormSpec { weight, p })
    }

    pub fn weight(&self) -> &WeightFunction {
        &self.weight
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

fn require_alpha_one(w: &WeightFunction) -> Result<()> {
    let alpha_one = w.alpha(1);
    if alpha_one <= 0.0 {
        return Err(Error::AlphaOneZero { alpha_one });
    }
    Ok(())
}

fn sorted_desc(mut values: Vec<f64>) -> Vec<f64> {
    values.sort_by(|a, b| b.partial_cmp(a).unwrap());
    values
}

/// Choquet trace norm: the Choquet-type trace of |a|.
pub fn choquet_norm(a: &ComplexMatrix, w: &WeightFunction) -> Result<f64> {
    require_alpha_one(w)?;
    let s = singular_values(a)?;
    Ok(phi_alpha_of_spectrum(&s, w))
}

/// Weighted Schatten p-norm: (Choquet trace of |a|^p)^(1/p). The p-th
/// powers are taken on the singular values directly.
pub fn schatten_choquet_norm(a: &ComplexMatrix, spec: &NormSpec) -> Result<f64> {
    require_alpha_one(spec.weight())?;
    let s = singular_values(a)?;
    let p = spec.p();
    if p == 1.0 {
        return Ok(phi_alpha_of_spectrum(&s, spec.weight()));
    }
    let powered = sorted_desc(s.iter().map(|x| x.powf(p)).collect());
    Ok(phi_alpha_of_spectrum(&powered, spec.weight()).powf(p.recip()))
}

fn check_kyfan_k(dim: usize, k: usize) -> Result<()> {
    if k == 0 || k > dim {
        return Err(Error::IndexOutOfRange {
            index: k,
            context: format!("Ky Fan order must be between 1 and the dimension {dim}"),
        });
    }
    Ok(())
}

/// Ky Fan norm: sum of the k largest singular values.
pub fn kyfan_norm(a: &ComplexMatrix, k: usize) -> Result<f64> {
    check_kyfan_k(a.rows().min(a.cols()), k)?;
    let s = singular_values(a)?;
    Ok(s[..k].iter().sum())
}

/// Ky Fan p-k norm: the entrywise p-norm of the k largest singular values.
pub fn kyfan_pk_norm(a: &ComplexMatrix, p: f64, k: usize) -> Result<f64> {
    if !p.is_finite() || p < 1.0 {
        return Err(Error::InvalidExponent { p });
    }
    check_kyfan_k(a.rows().min(a.cols()), k)?;
    let s = singular_values(a)?;
    if p == 1.0 {
        return Ok(s[..k].iter().sum());
    }
    Ok(s[..k].iter().map(|x| x.powf(p)).sum::<f64>().powf(p.recip()))
}

/// Terms of the Ky Fan decomposition of the weighted Schatten p-norm:
/// entry k-1 is (c_k - c_{k+1}) ||a||_{p,(k)}^p for k < n and
/// c_n ||a||_{p,(n)}^p for k = n. The terms sum to the p-th power of
/// `schatten_choquet_norm`.
pub fn kyfan_decomposition_terms(a: &ComplexMatrix, spec: &NormSpec) -> Result<Vec<f64>> {
    require_alpha_one(spec.weight())?;
    let s = singular_values(a)?;
    let n = s.len();
    let p = spec.p();
    let mut prefix = 0.0;
    let mut terms = Vec::with_capacity(n);
    for k in 1..=n {
        prefix += if p == 1.0 { s[k - 1] } else { s[k - 1].powf(p) };
        let coefficient = if k < n {
            spec.weight().increment(k) - spec.weight().increment(k + 1)
        } else {
            spec.weight().increment(n)
        };
        terms.push(coefficient * prefix);
    }
    Ok(terms)
}

/// Sugeno norm: the Sugeno-type trace of |a|.
pub fn sugeno_norm(a: &ComplexMatrix, w: &WeightFunction) -> Result<f64> {
    require_alpha_one(w)?;
    let s = singular_values(a)?;
    Ok(psi_alpha_of_spectrum(&s, w))
}

/// Sugeno metric: the Sugeno norm of a - b. Requires a concave weight;
/// the triangle inequality backing the metric fails otherwise.
pub fn sugeno_distance(a: &ComplexMatrix, b: &ComplexMatrix, w: &WeightFunction) -> Result<f64> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch {
            left: a.rows(),
            right: b.rows(),
            context: "distance needs matrices of the same shape",
        });
    }
    if !w.is_concave() {
        return Err(Error::NotConcave {
            context: "the Sugeno metric requires a concave weight",
        });
    }
    sugeno_norm(&a.sub(b), w)
}

/// Operator norm: the largest singular value.
pub fn operator_norm(a: &ComplexMatrix) -> Result<f64> {
    Ok(singular_values(a)?[0])
}
