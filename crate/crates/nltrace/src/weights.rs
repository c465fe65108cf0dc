//! Weight functions on ranks and the monotone set measures they induce.
//!
//! A weight function alpha maps 0, 1, 2, ... to cumulative sums of
//! non-negative increments: alpha(0) = 0 and alpha(n) = c_1 + ... + c_n,
//! where c_i comes from a finite stored prefix and a constant tail beyond
//! it. Concavity of alpha is equivalent to the increments being
//! non-increasing (tail included) and is what separates the norm regime
//! from the counterexample regime downstream.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::report::CheckLine;
use crate::tol;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightFunction {
    increments: Vec<f64>,
    tail: f64,
}

impl WeightFunction {
    /// All increments and the tail must be finite and non-negative.
    pub fn new(increments: Vec<f64>, tail: f64) -> Result<Self> {
        for (i, &c) in increments.iter().enumerate() {
            if !c.is_finite() || c < 0.0 {
                return Err(Error::BadSpectrum {
                    context: format!("weight increment {} is {c}, must be finite and >= 0", i + 1),
                });
            }
        }
        if !tail.is_finite() || tail < 0.0 {
            return Err(Error::BadSpectrum {
                context: format!("weight tail is {tail}, must be finite and >= 0"),
            });
        }
        Ok(WeightFunction { increments, tail })
    }

    /// The counting weight: alpha(n) = n.
    pub fn counting() -> Self {
        WeightFunction { increments: Vec::new(), tail: 1.0 }
    }

    /// Selects the k-th largest eigenvalue (1-based): increments are zero
    /// except c_k = 1, tail 0.
    pub fn selector(k: usize) -> Self {
        assert!(k >= 1);
        let mut increments = vec![0.0; k];
        increments[k - 1] = 1.0;
        WeightFunction { increments, tail: 0.0 }
    }

    /// Sums the k largest eigenvalues: k unit increments, tail 0.
    pub fn top_k(k: usize) -> Self {
        assert!(k >= 1);
        WeightFunction { increments: vec![1.0; k], tail: 0.0 }
    }

    pub fn increments(&self) -> &[f64] {
        &self.increments
    }

    pub fn tail(&self) -> f64 {
        self.tail
    }

    pub fn prefix_len(&self) -> usize {
        self.increments.len()
    }

    /// Increment c_i for 1-based i; the constant tail beyond the prefix.
    pub fn increment(&self, i: usize) -> f64 {
        assert!(i >= 1, "increments are 1-based");
        if i <= self.increments.len() {
            self.increments[i - 1]
        } else {
            self.tail
        }
    }

    /// alpha(n) = sum of the first n increments.
    pub fn alpha(&self, n: usize) -> f64 {
        let k = n.min(self.increments.len());
        let prefix: f64 = self.increments[..k].iter().sum();
        prefix + (n - k) as f64 * self.tail
    }

    /// True iff the increment sequence (tail included) is non-increasing,
    /// i.e. alpha is concave.
    pub fn is_concave(&self) -> bool {
        let mut prev = f64::INFINITY;
        for &c in &self.increments {
            if c > prev {
                return false;
            }
            prev = c;
        }
        self.tail <= prev
    }

    /// Smallest index i >= 0 with alpha(i) + alpha(i+2) > 2 alpha(i+1),
    /// i.e. the first strict increase c_{i+2} > c_{i+1}. None iff concave.
    pub fn first_nonconcavity(&self) -> Option<usize> {
        for k in 1..=self.increments.len() {
            if self.increment(k + 1) > self.increment(k) {
                return Some(k - 1);
            }
        }
        None
    }
}

/// A monotone measure on subsets of {1, ..., ground_size} with value 0 on
/// the empty set: either an explicit table indexed by subset bitmask, or
/// the cardinality rule mu(A) = alpha(|A|) induced by a weight function.
#[derive(Debug, Clone, PartialEq)]
pub enum MonotoneMeasure {
    Cardinality {
        ground_size: usize,
        weight: WeightFunction,
    },
    Table {
        ground_size: usize,
        values: Vec<f64>,
    },
}

impl MonotoneMeasure {
    pub fn cardinality(ground_size: usize, weight: WeightFunction) -> Self {
        MonotoneMeasure::Cardinality { ground_size, weight }
    }

    /// `values` indexed by subset bitmask, length exactly 2^ground_size.
    pub fn from_table(ground_size: usize, values: Vec<f64>) -> Result<Self> {
        if ground_size > tol::MAX_GROUND {
            return Err(Error::GroundTooLarge {
                ground_size,
                max: tol::MAX_GROUND,
            });
        }
        if values.len() != 1usize << ground_size {
            return Err(Error::Parse(format!(
                "measure table has {} entries, expected {}",
                values.len(),
                1usize << ground_size
            )));
        }
        if values[0] != 0.0 {
            return Err(Error::Parse(format!(
                "measure of the empty set must be 0, got {}",
                values[0]
            )));
        }
        for (mask, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::Parse(format!(
                    "measure value for subset mask {mask} is not finite"
                )));
            }
        }
        Ok(MonotoneMeasure::Table { ground_size, values })
    }

    pub fn ground_size(&self) -> usize {
        match self {
            MonotoneMeasure::Cardinality { ground_size, .. } => *ground_size,
            MonotoneMeasure::Table { ground_size, .. } => *ground_size,
        }
    }

    /// Measure of a subset given as a bitmask over {1, ..., ground_size}
    /// (bit e-1 set means element e is in the subset).
    pub fn value(&self, subset: u64) -> f64 {
        match self {
            MonotoneMeasure::Cardinality { ground_size, weight } => {
                debug_assert!(subset < (1u64 << ground_size));
                weight.alpha(subset.count_ones() as usize)
            }
            MonotoneMeasure::Table { values, .. } => values[subset as usize],
        }
    }
}

fn mask_to_indices(mask: u64) -> Vec<u64> {
    (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Verifies monotonicity: mu(A) <= mu(A + {e}) for every subset A and
/// element e outside A. Tables are checked exhaustively (ground size is
/// capped at construction); cardinality measures reduce to alpha being
/// non-decreasing on 0..=ground_size.
pub fn check_measure_monotone(m: &MonotoneMeasure) -> CheckLine {
    let n = m.ground_size();
    match m {
        MonotoneMeasure::Cardinality { weight, .. } => {
            for k in 0..n {
                if weight.alpha(k + 1) < weight.alpha(k) {
                    return CheckLine::fail(
                        "measure-monotone",
                        None,
                        json!({ "cardinality": k, "value": weight.alpha(k), "next": weight.alpha(k + 1) }),
                    );
                }
            }
            CheckLine::pass("measure-monotone", None)
        }
        MonotoneMeasure::Table { .. } => {
            for mask in 0..(1u64 << n) {
                for e in 0..n as u64 {
                    if mask >> e & 1 == 1 {
                        continue;
                    }
                    let bigger = mask | 1 << e;
                    if m.value(mask) > m.value(bigger) {
                        return CheckLine::fail(
                            "measure-monotone",
                            None,
                            json!({
                                "subset": mask_to_indices(mask),
                                "superset": mask_to_indices(bigger),
                                "value": m.value(mask),
                                "superset_value": m.value(bigger),
                            }),
                        );
                    }
                }
            }
            CheckLine::pass("measure-monotone", None)
        }
    }
}
