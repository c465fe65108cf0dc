//! Cross-validation of the rotation-based eigensolver against an
//! independent inertia-counting oracle, plus structural invariants of
//! the spectral decomposition.

mod common;

use common::{assert_close, diag, oracle_eigenvalues_desc};
use nltrace::falsify::{random_hermitian, random_psd, random_unitary, RandomSource};
use nltrace::matrix::HermitianMatrix;
use nltrace::spectral::{eigenvalue_sequence, eigh, singular_values};

#[test]
fn eigensolver_agrees_with_the_inertia_oracle_on_random_hermitian_matrices() {
    let mut src = RandomSource::new(0xA11CE);
    for trial in 0..60 {
        let dim = 1 + trial % 6;
        let h = random_hermitian(&mut src, dim);
        let got = eigh(&h).unwrap().values().to_vec();
        let want = oracle_eigenvalues_desc(&h);
        for (i, (&g, &w)) in got.iter().zip(&want).enumerate() {
            assert_close(g, w, 1e-8, &format!("trial {trial}, eigenvalue {i}"));
        }
    }
}

#[test]
fn eigensolver_agrees_with_the_oracle_on_psd_matrices() {
    let mut src = RandomSource::new(0xBEE);
    for trial in 0..40 {
        let dim = 2 + trial % 5;
        let a = random_psd(&mut src, dim, None).unwrap();
        let got = eigenvalue_sequence(&a).unwrap();
        let want = oracle_eigenvalues_desc(&a);
        for (i, (&g, &w)) in got.iter().zip(&want).enumerate() {
            // the library clamps PSD rounding dust at zero
            assert_close(g, w.max(0.0), 1e-8, &format!("trial {trial}, eigenvalue {i}"));
        }
    }
}

#[test]
fn oracle_pins_down_a_known_diagonal_spectrum() {
    let h = diag(&[5.0, -2.0, 3.5, 0.0]);
    let want = [5.0, 3.5, 0.0, -2.0];
    let got = oracle_eigenvalues_desc(&h);
    for (i, (&g, &w)) in got.iter().zip(&want).enumerate() {
        assert_close(g, w, 1e-10, &format!("eigenvalue {i}"));
    }
}

#[test]
fn eigenvalues_are_invariant_under_unitary_conjugation() {
    let mut src = RandomSource::new(77);
    for trial in 0..30 {
        let dim = 2 + trial % 5;
        let a = random_psd(&mut src, dim, None).unwrap();
        let u = random_unitary(&mut src, dim);
        let conj = HermitianMatrix::symmetrized(u.mul(a.matrix()).mul(&u.adjoint()));
        let la = eigenvalue_sequence(&a).unwrap();
        let lc = eigenvalue_sequence(&conj).unwrap();
        for (i, (&x, &y)) in la.iter().zip(&lc).enumerate() {
            assert_close(x, y, 1e-9, &format!("trial {trial}, eigenvalue {i}"));
        }
    }
}

#[test]
fn decomposition_reconstructs_the_matrix() {
    let mut src = RandomSource::new(4242);
    for trial in 0..30 {
        let dim = 1 + trial % 6;
        let h = random_hermitian(&mut src, dim);
        let es = eigh(&h).unwrap();
        let residual = es.reconstruct().sub(h.matrix()).frobenius_norm();
        assert!(
            residual <= 1e-9 * (1.0 + h.matrix().frobenius_norm()),
            "trial {trial}: reconstruction residual {residual}"
        );
        // eigenvectors are orthonormal
        let gram = es.vectors().adjoint().mul(es.vectors());
        let id_gap = gram
            .sub(&nltrace::matrix::ComplexMatrix::identity(dim))
            .frobenius_norm();
        assert!(id_gap <= 1e-10, "trial {trial}: eigenvector gram gap {id_gap}");
    }
}

#[test]
fn singular_values_match_eigenvalues_on_psd_input() {
    let mut src = RandomSource::new(909);
    for trial in 0..20 {
        let dim = 1 + trial % 6;
        let a = random_psd(&mut src, dim, None).unwrap();
        let sv = singular_values(a.matrix()).unwrap();
        let ev = eigenvalue_sequence(&a).unwrap();
        for (i, (&s, &e)) in sv.iter().zip(&ev).enumerate() {
            assert_close(s, e, 1e-8, &format!("trial {trial}, value {i}"));
        }
    }
}

#[test]
fn singular_values_survive_one_sided_unitary_factors() {
    let mut src = RandomSource::new(31337);
    for trial in 0..20 {
        let dim = 2 + trial % 4;
        let a = nltrace::falsify::random_complex(&mut src, dim);
        let u = random_unitary(&mut src, dim);
        let sa = singular_values(&a).unwrap();
        let sua = singular_values(&u.mul(&a)).unwrap();
        let sau = singular_values(&a.mul(&u)).unwrap();
        for i in 0..dim {
            assert_close(sua[i], sa[i], 1e-9, &format!("trial {trial}, left factor, value {i}"));
            assert_close(sau[i], sa[i], 1e-9, &format!("trial {trial}, right factor, value {i}"));
        }
    }
}
