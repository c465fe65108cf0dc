//! Majorization of non-negative vectors, eigenvalue domination of PSD
//! matrices, and the constructive factorization a = c b c* with a
//! contraction c that witnesses domination.

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, HermitianMatrix};
use crate::spectral::eigh;
use crate::spectral::eigenvalue_sequence;
use crate::tol;

/// Outcome of a (weak) majorization comparison. On failure,
/// `failing_index` is the 1-based prefix length at which the comparison
/// broke (the full length n for a total-sum mismatch) and `gap` is the
/// amount by which it broke.
#[derive(Debug, Clone, PartialEq)]
pub struct MajorizationVerdict {
    pub relation_holds: bool,
    pub failing_index: Option<usize>,
    pub gap: Option<f64>,
}

impl MajorizationVerdict {
    fn holds() -> Self {
        MajorizationVerdict {
            relation_holds: true,
            failing_index: None,
            gap: None,
        }
    }

    fn fails(index: usize, gap: f64) -> Self {
        MajorizationVerdict {
            relation_holds: false,
            failing_index: Some(index),
            gap: Some(gap),
        }
    }
}

fn padded_decreasing(x: &[f64], len: usize) -> Vec<f64> {
    let mut v = x.to_vec();
    v.resize(len, 0.0);
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

/// Does y weakly majorize x: every prefix sum of the decreasing
/// rearrangement of x stays within PREFIX_SUM of the matching prefix sum
/// for y. Shorter input is zero-padded.
pub fn weak_majorizes(y: &[f64], x: &[f64]) -> MajorizationVerdict {
    let n = x.len().max(y.len());
    let xs = padded_decreasing(x, n);
    let ys = padded_decreasing(y, n);
    let mut px = 0.0;
    let mut py = 0.0;
    for k in 0..n {
        px += xs[k];
        py += ys[k];
        if px > py + tol::PREFIX_SUM {
            return MajorizationVerdict::fails(k + 1, px - py);
        }
    }
    MajorizationVerdict::holds()
}

/// Weak majorization plus equality of totals within PREFIX_SUM.
pub fn majorizes(y: &[f64], x: &[f64]) -> MajorizationVerdict {
    let weak = weak_majorizes(y, x);
    if !weak.relation_holds {
        return weak;
    }
    let n = x.len().max(y.len());
    let sx: f64 = x.iter().sum();
    let sy: f64 = y.iter().sum();
    if (sx - sy).abs() > tol::PREFIX_SUM {
        return MajorizationVerdict::fails(n, (sx - sy).abs());
    }
    MajorizationVerdict::holds()
}

/// True iff lambda_i(a) <= lambda_i(b) + EIGEN_DOMINATION_SLACK for every
/// i. Both matrices must be PSD and of equal dimension.
pub fn eigen_dominates(b: &HermitianMatrix, a: &HermitianMatrix) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
            context: "eigenvalue domination needs equal dimensions",
        });
    }
    let la = eigenvalue_sequence(a)?;
    let lb = eigenvalue_sequence(b)?;
    Ok(la
        .iter()
        .zip(&lb)
        .all(|(x, y)| *x <= *y + tol::EIGEN_DOMINATION_SLACK))
}

/// Factorizes a = c b c* with ||c|| <= 1, given that b eigen-dominates a.
///
/// Diagonalize both; with the spectra aligned in decreasing order, take
/// d_i = sqrt(lambda_i(a) / lambda_i(b)) capped at 1, or 0 when
/// lambda_i(b) is at the rank floor (domination then forces lambda_i(a)
/// to be negligible), and conjugate diag(d) back through the two
/// eigenbases.
pub fn construct_contraction(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<ComplexMatrix> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
            context: "contraction construction needs equal dimensions",
        });
    }
    let ea = eigh(a)?;
    let eb = eigh(b)?;
    let mut la = ea.values().to_vec();
    let mut lb = eb.values().to_vec();
    crate::spectral::clamp_psd(&mut la)?;
    crate::spectral::clamp_psd(&mut lb)?;
    for (i, (&x, &y)) in la.iter().zip(&lb).enumerate() {
        if x > y + tol::EIGEN_DOMINATION_SLACK {
            return Err(Error::NotDominated {
                index: i,
                lambda_a: x,
                lambda_b: y,
            });
        }
    }
    let d: Vec<f64> = la
        .iter()
        .zip(&lb)
        .map(|(&x, &y)| {
            if y <= tol::RANK_FLOOR {
                0.0
            } else {
                (x / y).sqrt().min(1.0)
            }
        })
        .collect();
    // c = V_a diag(d) V_b*
    let n = a.dim();
    let mut scaled = ea.vectors().clone();
    for j in 0..n {
        for i in 0..n {
            scaled[(i, j)] *= d[j];
        }
    }
    Ok(scaled.mul(&eb.vectors().adjoint()))
}
