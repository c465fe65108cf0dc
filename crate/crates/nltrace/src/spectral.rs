//! Hermitian eigendecomposition and the spectral operations built on it:
//! absolute value, singular values, functional calculus, and the
//! decomposition of an arbitrary square matrix into four PSD parts.
//!
//! The eigensolver is a cyclic complex Jacobi iteration: each rotation
//! annihilates one off-diagonal pair through a unitary similarity, sweeps
//! run in fixed (p, q) order, and convergence is declared when the
//! off-diagonal Frobenius mass falls below JACOBI_OFF_FACTOR times
//! (Frobenius norm + 1). Eigenvectors are accumulated exactly alongside,
//! so spectral projectors are available at full accuracy.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, HermitianMatrix};
use crate::tol;

/// Eigenvalues in non-increasing order with matching orthonormal
/// eigenvector columns: a = V diag(values) V*.
#[derive(Debug, Clone)]
pub struct EigenSequence {
    values: Vec<f64>,
    vectors: ComplexMatrix,
}

impl EigenSequence {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vectors(&self) -> &ComplexMatrix {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Rank-one projector onto the i-th eigenvector (0-based).
    pub fn projector(&self, i: usize) -> ComplexMatrix {
        let n = self.dim();
        let v = self.vectors.column(i);
        ComplexMatrix::from_fn(n, n, |r, c| v[r] * v[c].conj())
    }

    /// Projection onto the span of the k largest eigenvalues' vectors.
    pub fn top_projection(&self, k: usize) -> ComplexMatrix {
        assert!(k <= self.dim());
        let n = self.dim();
        let mut p = ComplexMatrix::zeros(n, n);
        for i in 0..k {
            p = p.add(&self.projector(i));
        }
        p
    }

    /// V diag(weights) V* for caller-supplied spectral weights.
    pub fn assemble(&self, weights: &[f64]) -> ComplexMatrix {
        assert_eq!(weights.len(), self.dim());
        let n = self.dim();
        let mut scaled = self.vectors.clone();
        for j in 0..n {
            for i in 0..n {
                scaled[(i, j)] *= weights[j];
            }
        }
        scaled.mul(&self.vectors.adjoint())
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.assemble(&self.values)
    }
}

fn off_diagonal_mass(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            sum += 2.0 * a[(i, j)].norm_sqr();
        }
    }
    sum.sqrt()
}

/// One Jacobi rotation annihilating the (p, q) entry. `a` stays Hermitian
/// by construction (mirror entries are written as conjugates) and `v`
/// accumulates the rotation on its columns.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.norm();
    if b == 0.0 {
        return;
    }
    let phase = apq / b;
    let phc = phase.conj();
    let alpha = a[(p, p)].re;
    let gamma = a[(q, q)].re;
    let tau = (gamma - alpha) / (2.0 * b);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let n = a.rows();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        let new_kp = akp.scale(c) - akq * phc.scale(s);
        let new_kq = akp.scale(s) + akq * phc.scale(c);
        a[(k, p)] = new_kp;
        a[(p, k)] = new_kp.conj();
        a[(k, q)] = new_kq;
        a[(q, k)] = new_kq.conj();
    }
    a[(p, p)] = Complex64::new(alpha - t * b, 0.0);
    a[(q, q)] = Complex64::new(gamma + t * b, 0.0);
    a[(p, q)] = Complex64::ZERO;
    a[(q, p)] = Complex64::ZERO;

    for k in 0..v.rows() {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp.scale(c) - vkq * phc.scale(s);
        v[(k, q)] = vkp.scale(s) + vkq * phc.scale(c);
    }
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn eigh(h: &HermitianMatrix) -> Result<EigenSequence> {
    let n = h.dim();
    let mut a = h.matrix().clone();
    let mut v = ComplexMatrix::identity(n);
    let target = tol::JACOBI_OFF_FACTOR * (a.frobenius_norm() + 1.0);

    let mut off = off_diagonal_mass(&a);
    let mut sweeps = 0;
    while off > target && sweeps < tol::JACOBI_MAX_SWEEPS {
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_mass(&a);
    }
    if off > target && off > tol::JACOBI_OFF_ACCEPT {
        return Err(Error::NoConvergence {
            off_diagonal: off,
            sweeps,
            dim: n,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&x, &y| diag[y].partial_cmp(&diag[x]).unwrap().then(x.cmp(&y)));

    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(EigenSequence { values, vectors })
}

/// Clamp policy for nominally PSD spectra: reject below
/// -PSD_FLOOR_FACTOR * (1 + operator norm), clamp the rest of the
/// negative range to zero.
pub fn clamp_psd(values: &mut [f64]) -> Result<()> {
    let op_norm = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let floor = -tol::PSD_FLOOR_FACTOR * (1.0 + op_norm);
    for v in values.iter_mut() {
        if *v < floor {
            return Err(Error::NotPositive {
                eigenvalue: *v,
                floor,
            });
        }
        if *v < 0.0 {
            *v = 0.0;
        }
    }
    Ok(())
}

/// Eigenvalues of a PSD matrix, non-increasing, with the clamp policy of
/// `clamp_psd` applied.
pub fn eigenvalue_sequence(a: &HermitianMatrix) -> Result<Vec<f64>> {
    let es = eigh(a)?;
    let mut values = es.values;
    clamp_psd(&mut values)?;
    Ok(values)
}

fn require_square(a: &ComplexMatrix, context: &'static str) -> Result<()> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            left: a.rows(),
            right: a.cols(),
            context,
        });
    }
    Ok(())
}

/// |a| = (a* a)^(1/2), computed through the spectrum of a* a.
pub fn abs_value(a: &ComplexMatrix) -> Result<HermitianMatrix> {
    require_square(a, "absolute value needs a square matrix")?;
    let gram = HermitianMatrix::symmetrized(a.adjoint().mul(a));
    let es = eigh(&gram)?;
    let mut values = es.values().to_vec();
    clamp_psd(&mut values)?;
    let roots: Vec<f64> = values.iter().map(|v| v.sqrt()).collect();
    Ok(HermitianMatrix::symmetrized(es.assemble(&roots)))
}

/// Singular values in non-increasing order: the square roots of the
/// clamped spectrum of a* a, which is the spectrum of |a|.
pub fn singular_values(a: &ComplexMatrix) -> Result<Vec<f64>> {
    require_square(a, "singular values need a square matrix")?;
    let gram = HermitianMatrix::symmetrized(a.adjoint().mul(a));
    let mut values = eigenvalue_sequence(&gram)?;
    for v in values.iter_mut() {
        *v = v.sqrt();
    }
    Ok(values)
}

/// A function defined on finitely many non-negative spectrum points,
/// vanishing at 0. Evaluation matches an eigenvalue to the nearest stored
/// point within SPECTRUM_LOOKUP.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumFunction {
    points: Vec<f64>,
    values: Vec<f64>,
}

impl SpectrumFunction {
    pub fn new(points: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if points.len() != values.len() {
            return Err(Error::DimensionMismatch {
                left: points.len(),
                right: values.len(),
                context: "spectrum function needs one value per point",
            });
        }
        let mut has_zero = false;
        for (i, &p) in points.iter().enumerate() {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::BadSpectrum {
                    context: format!("point {i} is {p}, must be finite and >= 0"),
                });
            }
            if !values[i].is_finite() || values[i] < 0.0 {
                return Err(Error::BadSpectrum {
                    context: format!("value at point {p} is {}, must be finite and >= 0", values[i]),
                });
            }
            if p == 0.0 {
                has_zero = true;
                if values[i] != 0.0 {
                    return Err(Error::BadSpectrum {
                        context: format!("value at 0 must be 0, got {}", values[i]),
                    });
                }
            }
            for &q in &points[..i] {
                if p == q {
                    return Err(Error::BadSpectrum {
                        context: format!("duplicate point {p}"),
                    });
                }
            }
        }
        if !has_zero {
            return Err(Error::BadSpectrum {
                context: "points must include 0".to_string(),
            });
        }
        Ok(SpectrumFunction { points, values })
    }

    /// Builds the function x -> f(x) over the given points by applying `f`.
    pub fn tabulate(points: Vec<f64>, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = points.iter().map(|&p| f(p)).collect();
        Self::new(points, values)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let mut best: Option<(f64, f64)> = None;
        for (i, &p) in self.points.iter().enumerate() {
            let d = (x - p).abs();
            if best.map_or(true, |(bd, _)| d < bd) {
                best = Some((d, self.values[i]));
            }
        }
        match best {
            Some((d, v)) if d <= tol::SPECTRUM_LOOKUP => Ok(v),
            _ => Err(Error::SpectrumMismatch {
                eigenvalue: x,
                tolerance: tol::SPECTRUM_LOOKUP,
            }),
        }
    }
}

/// Functional calculus on a PSD matrix: f(a) = sum of f(lambda_i) times
/// the i-th spectral projector. Every eigenvalue of `a` must match a
/// point of `f`.
pub fn apply_spectrum_function(a: &HermitianMatrix, f: &SpectrumFunction) -> Result<HermitianMatrix> {
    let es = eigh(a)?;
    let mut values = es.values().to_vec();
    clamp_psd(&mut values)?;
    let mapped: Result<Vec<f64>> = values.iter().map(|&l| f.eval(l)).collect();
    Ok(HermitianMatrix::symmetrized(es.assemble(&mapped?)))
}

/// a = pos_re - neg_re + i (pos_im - neg_im), all four PSD with
/// pos_re * neg_re = pos_im * neg_im = 0.
#[derive(Debug, Clone)]
pub struct FourParts {
    pub pos_re: HermitianMatrix,
    pub neg_re: HermitianMatrix,
    pub pos_im: HermitianMatrix,
    pub neg_im: HermitianMatrix,
}

impl FourParts {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let re = self.pos_re.matrix().sub(self.neg_re.matrix());
        let im = self.pos_im.matrix().sub(self.neg_im.matrix());
        re.add(&im.scale(Complex64::new(0.0, 1.0)))
    }
}

fn positive_negative_split(h: &HermitianMatrix) -> Result<(HermitianMatrix, HermitianMatrix)> {
    let es = eigh(h)?;
    let pos: Vec<f64> = es.values().iter().map(|&l| l.max(0.0)).collect();
    let neg: Vec<f64> = es.values().iter().map(|&l| (-l).max(0.0)).collect();
    Ok((
        HermitianMatrix::symmetrized(es.assemble(&pos)),
        HermitianMatrix::symmetrized(es.assemble(&neg)),
    ))
}

/// Decomposes an arbitrary square matrix through its Hermitian real and
/// imaginary parts, splitting each into positive and negative spectral
/// halves.
pub fn four_parts(a: &ComplexMatrix) -> Result<FourParts> {
    require_square(a, "four-part decomposition needs a square matrix")?;
    let re = HermitianMatrix::symmetrized(a.add(&a.adjoint()).scale_re(0.5));
    let im = HermitianMatrix::symmetrized(
        a.sub(&a.adjoint()).scale(Complex64::new(0.0, -0.5)),
    );
    let (pos_re, neg_re) = positive_negative_split(&re)?;
    let (pos_im, neg_im) = positive_negative_split(&im)?;
    Ok(FourParts {
        pos_re,
        neg_re,
        pos_im,
        neg_im,
    })
}
