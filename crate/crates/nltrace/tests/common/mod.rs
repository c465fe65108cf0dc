//! Shared test-side oracles, independent of the library's Jacobi
//! eigensolver.
//!
//! Eigenvalues are located by Sylvester inertia counting: for a shift x,
//! the number of eigenvalues of a Hermitian matrix below x equals the
//! number of negative pivots in the LDL* factorization of (A - xI)
//! (equivalently, the sign changes along the leading principal minors).
//! Each eigenvalue is then isolated by bisection on that monotone count.
//! This uses only Gaussian-elimination arithmetic, so agreement with the
//! rotation-based solver is genuine cross-validation.

#![allow(dead_code)]

use num_complex::Complex64;
use nltrace::matrix::HermitianMatrix;

/// Number of eigenvalues of `h` strictly below `x` (up to pivot nudging
/// by ~1e-13 when the factorization hits an exact zero pivot).
pub fn count_below(h: &HermitianMatrix, x: f64) -> usize {
    let mut shift = x;
    for _attempt in 0..16 {
        match ldl_pivots(h, shift) {
            Some(pivots) => return pivots.iter().filter(|&&d| d < 0.0).count(),
            None => shift += 1e-13 * (1.0 + shift.abs()),
        }
    }
    panic!("could not avoid zero pivots near shift {x}");
}

/// Diagonal of the LDL* factorization of (h - shift I), or None on a
/// zero pivot. No pivoting: breakdown is handled by nudging the shift.
fn ldl_pivots(h: &HermitianMatrix, shift: f64) -> Option<Vec<f64>> {
    let n = h.dim();
    let m = h.matrix();
    let mut l = vec![vec![Complex64::ZERO; n]; n];
    let mut d = vec![0.0f64; n];
    for j in 0..n {
        let mut dj = m[(j, j)].re - shift;
        for k in 0..j {
            dj -= l[j][k].norm_sqr() * d[k];
        }
        if dj == 0.0 || !dj.is_finite() {
            return None;
        }
        d[j] = dj;
        for i in (j + 1)..n {
            let mut v = m[(i, j)];
            for k in 0..j {
                v -= l[i][k] * l[j][k].conj() * d[k];
            }
            l[i][j] = v / dj;
        }
    }
    Some(d)
}

/// All eigenvalues of `h` in decreasing order, located independently of
/// the library eigensolver.
pub fn oracle_eigenvalues_desc(h: &HermitianMatrix) -> Vec<f64> {
    let n = h.dim();
    // Gershgorin bound on the spectrum
    let m = h.matrix();
    let radius = (0..n)
        .map(|i| (0..n).map(|j| m[(i, j)].norm()).sum::<f64>())
        .fold(0.0f64, f64::max)
        + 1.0;
    let mut ascending = Vec::with_capacity(n);
    for j in 1..=n {
        // smallest x with count_below(x) >= j, i.e. the j-th smallest eigenvalue
        let mut lo = -radius;
        let mut hi = radius;
        for _ in 0..120 {
            let mid = 0.5 * (lo + hi);
            if count_below(h, mid) >= j {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 1e-13 * (1.0 + mid.abs()) {
                break;
            }
        }
        ascending.push(0.5 * (lo + hi));
    }
    ascending.reverse();
    ascending
}

pub fn diag(values: &[f64]) -> HermitianMatrix {
    let n = values.len();
    let m = nltrace::matrix::ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::new(values[i], 0.0)
        } else {
            Complex64::ZERO
        }
    });
    HermitianMatrix::try_new(m).expect("diagonal real matrix is Hermitian")
}

pub fn assert_close(got: f64, want: f64, tolerance: f64, what: &str) {
    assert!(
        (got - want).abs() <= tolerance * (1.0 + want.abs()),
        "{what}: got {got}, want {want} (tolerance {tolerance:.1e})"
    );
}
