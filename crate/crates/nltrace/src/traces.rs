//! Non-linear traces on PSD matrices: the Choquet-type functional
//! (a weighted sum over the eigenvalue sequence) and the Sugeno-type
//! functional (a max-min over it), together with their extensions to
//! arbitrary matrices via the four-part decomposition, an independent
//! oracle for the Sugeno value's projection characterization, and the
//! witness projections realizing it.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, HermitianMatrix};
use crate::spectral::{clamp_psd, eigenvalue_sequence, eigh, four_parts};
use crate::tol;
use crate::weights::WeightFunction;

fn debug_assert_sorted_desc(values: &[f64]) {
    debug_assert!(
        values.windows(2).all(|w| w[0] >= w[1]),
        "spectrum must be sorted in non-increasing order"
    );
}

/// Choquet-type trace of a non-increasing non-negative spectrum.
///
/// Evaluates both defining formulas, the increment form
/// sum_i c_i lambda_i and the telescoped form
/// sum_i (lambda_i - lambda_{i+1}) alpha(i) with lambda_{n+1} = 0, and
/// insists they agree; a disagreement would mean a bookkeeping bug, not
/// a data problem, so it panics.
pub fn phi_alpha_of_spectrum(values: &[f64], w: &WeightFunction) -> f64 {
    debug_assert_sorted_desc(values);
    let n = values.len();
    let increment_form: f64 = values
        .iter()
        .enumerate()
        .map(|(i, &l)| w.increment(i + 1) * l)
        .sum();
    let mut telescoped_form = 0.0;
    for i in 1..=n {
        let next = if i < n { values[i] } else { 0.0 };
        telescoped_form += (values[i - 1] - next) * w.alpha(i);
    }
    let scale = 1.0 + increment_form.abs().max(telescoped_form.abs());
    assert!(
        (increment_form - telescoped_form).abs() <= tol::DUAL_FORM_AGREEMENT * scale,
        "the two Choquet-trace formulas disagree: {increment_form} vs {telescoped_form}"
    );
    increment_form
}

/// Sugeno-type trace of a non-increasing non-negative spectrum:
/// max over i of min(lambda_i, alpha(i)). Exact float arithmetic.
pub fn psi_alpha_of_spectrum(values: &[f64], w: &WeightFunction) -> f64 {
    debug_assert_sorted_desc(values);
    let mut best = 0.0f64;
    for (i, &l) in values.iter().enumerate() {
        best = best.max(l.min(w.alpha(i + 1)));
    }
    best
}

/// Choquet-type trace of a PSD matrix.
pub fn phi_alpha(a: &HermitianMatrix, w: &WeightFunction) -> Result<f64> {
    Ok(phi_alpha_of_spectrum(&eigenvalue_sequence(a)?, w))
}

/// Sugeno-type trace of a PSD matrix.
pub fn psi_alpha(a: &HermitianMatrix, w: &WeightFunction) -> Result<f64> {
    Ok(psi_alpha_of_spectrum(&eigenvalue_sequence(a)?, w))
}

/// Extension of the Choquet-type trace to arbitrary square matrices via
/// the four-part decomposition a = a1 - a2 + i(a3 - a4):
/// phi(a1) - phi(a2) + i (phi(a3) - phi(a4)).
pub fn phi_alpha_extended(a: &ComplexMatrix, w: &WeightFunction) -> Result<Complex64> {
    let parts = four_parts(a)?;
    let re = phi_alpha(&parts.pos_re, w)? - phi_alpha(&parts.neg_re, w)?;
    let im = phi_alpha(&parts.pos_im, w)? - phi_alpha(&parts.neg_im, w)?;
    Ok(Complex64::new(re, im))
}

/// Extension of the Sugeno-type trace to arbitrary square matrices,
/// combined part by part like `phi_alpha_extended`.
pub fn psi_alpha_extended(a: &ComplexMatrix, w: &WeightFunction) -> Result<Complex64> {
    let parts = four_parts(a)?;
    let re = psi_alpha(&parts.pos_re, w)? - psi_alpha(&parts.neg_re, w)?;
    let im = psi_alpha(&parts.pos_im, w)? - psi_alpha(&parts.neg_im, w)?;
    Ok(Complex64::new(re, im))
}

/// The Sugeno value through its projection characterization:
/// the largest level lambda >= 0 admitting a finite-rank projection p
/// with lambda <= alpha(rank p) and p a p >= lambda p.
///
/// For the projection onto the top k eigenvectors the compression p a p
/// acts as diag(lambda_1, ..., lambda_k) on the range of p, so its
/// smallest eigenvalue there is lambda_k and the best feasible level for
/// that p is min(lambda_k, alpha(k)). Scanning k gives the supremum,
/// which this function computes by a code path separate from
/// `psi_alpha`; the two must agree bit for bit.
pub fn sugeno_max_oracle(a: &HermitianMatrix, w: &WeightFunction) -> Result<f64> {
    let values = eigenvalue_sequence(a)?;
    let mut best = 0.0f64;
    for k in (1..=values.len()).rev() {
        let feasible = w.alpha(k).min(values[k - 1]);
        if feasible > best {
            best = feasible;
        }
    }
    Ok(best)
}

/// Which side of the spectrum/weight crossing realizes the Sugeno value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObservationCase {
    /// lambda_1 >= alpha(1) and the crossing value is an eigenvalue.
    SpectrumCrossing,
    /// lambda_1 >= alpha(1) and the crossing value is a weight value.
    WeightCrossing,
    /// lambda_1 < alpha(1); the value is lambda_1 itself.
    BelowFirstWeight,
}

/// Witness projections for the Sugeno value of a PSD matrix.
///
/// `p` realizes the value from below (p a p >= value * p with
/// value <= alpha(rank p)) and `q0` bounds it from above
/// ((1 - q0) a (1 - q0) <= value * (1 - q0) with alpha(rank q0) <= value).
#[derive(Debug, Clone)]
pub struct ObservationProjections {
    pub p: HermitianMatrix,
    pub q0: HermitianMatrix,
    pub rank_p: usize,
    pub rank_q0: usize,
    pub case: ObservationCase,
    pub value: f64,
}

/// Constructs the witness projections by the crossing-index case split.
///
/// With m = #{i : lambda_i >= alpha(i)} (a prefix, since the spectrum is
/// non-increasing and alpha non-decreasing) and lambda zero-padded past
/// the dimension:
/// m = 0 gives the value lambda_1 with p the top eigenprojector;
/// lambda_{m+1} >= alpha(m) gives the value lambda_{m+1} with p spanning
/// m+1 top eigenvectors; otherwise the value is alpha(m) with p spanning
/// m. In every case q0 spans the first m eigenvectors.
pub fn observation_projections(
    a: &HermitianMatrix,
    w: &WeightFunction,
) -> Result<ObservationProjections> {
    let alpha_one = w.alpha(1);
    if alpha_one <= 0.0 {
        return Err(Error::AlphaOneZero { alpha_one });
    }
    let es = eigh(a)?;
    let mut values = es.values().to_vec();
    clamp_psd(&mut values)?;
    let n = values.len();
    let m = (1..=n)
        .take_while(|&i| values[i - 1] >= w.alpha(i))
        .count();

    let top = |k: usize| HermitianMatrix::symmetrized(es.top_projection(k));

    if m == 0 {
        return Ok(ObservationProjections {
            p: top(1),
            q0: HermitianMatrix::zeros(n),
            rank_p: 1,
            rank_q0: 0,
            case: ObservationCase::BelowFirstWeight,
            value: values[0],
        });
    }
    let lambda_next = if m < n { values[m] } else { 0.0 };
    if lambda_next >= w.alpha(m) {
        Ok(ObservationProjections {
            p: top(m + 1),
            q0: top(m),
            rank_p: m + 1,
            rank_q0: m,
            case: ObservationCase::SpectrumCrossing,
            value: lambda_next,
        })
    } else {
        Ok(ObservationProjections {
            p: top(m),
            q0: top(m),
            rank_p: m,
            rank_q0: m,
            case: ObservationCase::WeightCrossing,
            value: w.alpha(m),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counting() -> WeightFunction {
        WeightFunction::counting()
    }

    #[test]
    fn phi_with_counting_weight_is_the_trace() {
        let a = HermitianMatrix::from_real_diag(&[3.0, 1.0]);
        assert_eq!(phi_alpha(&a, &counting()).unwrap(), 4.0);
    }

    #[test]
    fn phi_with_single_unit_increment_is_the_top_eigenvalue() {
        let a = HermitianMatrix::from_real_diag(&[3.0, 1.0]);
        let w = WeightFunction::new(vec![1.0], 0.0).unwrap();
        assert_eq!(phi_alpha(&a, &w).unwrap(), 3.0);
    }

    #[test]
    fn phi_selector_picks_an_interior_eigenvalue() {
        let a = HermitianMatrix::from_real_diag(&[9.0, 4.0, 1.0]);
        assert_eq!(phi_alpha(&a, &WeightFunction::selector(2)).unwrap(), 4.0);
        assert_eq!(phi_alpha(&a, &WeightFunction::top_k(2)).unwrap(), 13.0);
    }

    #[test]
    fn psi_on_a_scaled_projection_saturates_at_the_weight() {
        // orthonormal pair in C^3
        let r3 = 3.0f64.sqrt().recip();
        let r2 = 2.0f64.sqrt().recip();
        let v1 = [r3, r3, r3];
        let v2 = [r2, -r2, 0.0];
        let m = ComplexMatrix::from_fn(3, 3, |i, j| {
            Complex64::new(5.0 * (v1[i] * v1[j] + v2[i] * v2[j]), 0.0)
        });
        let a = HermitianMatrix::try_new(m).unwrap();
        let w = WeightFunction::new(vec![1.0, 2.0], 0.0).unwrap();
        // value of the scaled projection: min(scale, alpha(rank)) = min(5, 3)
        assert_eq!(psi_alpha(&a, &w).unwrap(), 3.0);
    }

    #[test]
    fn psi_of_zero_is_zero() {
        let a = HermitianMatrix::zeros(3);
        assert_eq!(psi_alpha(&a, &counting()).unwrap(), 0.0);
    }

    #[test]
    fn psi_counting_example() {
        let a = HermitianMatrix::from_real_diag(&[5.0, 3.0, 0.5]);
        assert_eq!(psi_alpha(&a, &counting()).unwrap(), 2.0);
    }

    #[test]
    fn extended_phi_agrees_with_phi_on_psd() {
        let a = HermitianMatrix::from_real_diag(&[2.0, 1.0]);
        let ext = phi_alpha_extended(a.matrix(), &counting()).unwrap();
        assert!((ext.re - 3.0).abs() < 1e-12);
        assert!(ext.im.abs() < 1e-12);
    }

    #[test]
    fn extended_phi_of_a_sign_indefinite_diagonal() {
        let a = ComplexMatrix::diag(&[2.0, -3.0]);
        let ext = phi_alpha_extended(&a, &counting()).unwrap();
        assert!((ext.re + 1.0).abs() < 1e-12);
        assert!(ext.im.abs() < 1e-12);
    }

    #[test]
    fn extended_phi_of_a_purely_imaginary_matrix() {
        let a = ComplexMatrix::identity(2).scale(Complex64::new(0.0, 1.0));
        let w = WeightFunction::new(vec![1.0], 0.0).unwrap();
        let ext = phi_alpha_extended(&a, &w).unwrap();
        assert!(ext.re.abs() < 1e-12);
        assert!((ext.im - 1.0).abs() < 1e-12);
    }

    #[test]
    fn extended_psi_cases() {
        let w = WeightFunction::new(vec![3.0], 0.0).unwrap();
        let a = ComplexMatrix::diag(&[-5.0]);
        let ext = psi_alpha_extended(&a, &w).unwrap();
        assert_eq!(ext, Complex64::new(-3.0, 0.0));

        let w = WeightFunction::new(vec![2.0], 2.0).unwrap();
        let a = ComplexMatrix::diag(&[1.0, -1.0]);
        let ext = psi_alpha_extended(&a, &w).unwrap();
        assert_eq!(ext, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn oracle_matches_psi_exactly_on_simple_cases() {
        let w = counting();
        for diag in [
            vec![5.0, 3.0, 0.5],
            vec![0.0, 0.0],
            vec![0.5],
            vec![7.0, 7.0, 7.0, 7.0],
        ] {
            let a = HermitianMatrix::from_real_diag(&diag);
            let psi = psi_alpha(&a, &w).unwrap();
            let oracle = sugeno_max_oracle(&a, &w).unwrap();
            assert_eq!(psi, oracle);
        }
    }

    #[test]
    fn oracle_on_a_small_rank_one_matrix() {
        let a = HermitianMatrix::from_real_diag(&[0.5, 0.0, 0.0]);
        assert_eq!(sugeno_max_oracle(&a, &counting()).unwrap(), 0.5);
    }

    #[test]
    fn observation_below_first_weight() {
        let a = HermitianMatrix::from_real_diag(&[0.5]);
        let obs = observation_projections(&a, &counting()).unwrap();
        assert_eq!(obs.case, ObservationCase::BelowFirstWeight);
        assert_eq!(obs.value, 0.5);
        assert_eq!(obs.rank_p, 1);
        assert_eq!(obs.rank_q0, 0);
        assert!(obs.p.matrix().entry_distance(&ComplexMatrix::identity(1)) < 1e-14);
    }

    #[test]
    fn observation_weight_crossing_example() {
        let a = HermitianMatrix::from_real_diag(&[5.0, 3.0, 0.5]);
        let obs = observation_projections(&a, &counting()).unwrap();
        assert_eq!(obs.case, ObservationCase::WeightCrossing);
        assert_eq!(obs.value, 2.0);
        assert_eq!(obs.rank_p, 2);
        assert_eq!(obs.rank_q0, 2);
        assert_eq!(obs.value, psi_alpha(&a, &counting()).unwrap());
    }

    #[test]
    fn observation_spectrum_crossing_example() {
        // lambda = (5, 2.5, 0.1) with counting weight: m = 2, lambda_3 = 0.1 < alpha(2)
        // is weight-crossing; use (5, 2.5) with alpha = (0, 1, 2): m = 2, padded
        // lambda_3 = 0 < alpha(2) -> weight crossing again. For a spectrum
        // crossing take lambda = (5, 4, 2.5) counting: m = 3? 2.5 >= 3 no ->
        // m = 2, lambda_3 = 2.5 >= alpha(2) = 2 -> spectrum crossing, value 2.5.
        let a = HermitianMatrix::from_real_diag(&[5.0, 4.0, 2.5]);
        let obs = observation_projections(&a, &counting()).unwrap();
        assert_eq!(obs.case, ObservationCase::SpectrumCrossing);
        assert_eq!(obs.value, 2.5);
        assert_eq!(obs.rank_p, 3);
        assert_eq!(obs.rank_q0, 2);
        assert_eq!(obs.value, psi_alpha(&a, &counting()).unwrap());
    }

    #[test]
    fn observation_boundary_scaled_projector() {
        // a = alpha(1) * rank-one projector
        let a = HermitianMatrix::from_real_diag(&[1.0, 0.0, 0.0]);
        let obs = observation_projections(&a, &counting()).unwrap();
        assert_eq!(obs.value, 1.0);
        assert_eq!(obs.rank_p, 1);
        assert!(obs
            .p
            .matrix()
            .entry_distance(&ComplexMatrix::diag(&[1.0, 0.0, 0.0]))
            < 1e-14);
        assert_eq!(obs.case, ObservationCase::WeightCrossing);
    }

    #[test]
    fn observation_full_rank_saturation() {
        // every eigenvalue clears the weight: p = q0 = identity
        let a = HermitianMatrix::from_real_diag(&[9.0, 8.0, 7.0]);
        let obs = observation_projections(&a, &counting()).unwrap();
        assert_eq!(obs.case, ObservationCase::WeightCrossing);
        assert_eq!(obs.value, 3.0);
        assert_eq!(obs.rank_p, 3);
        assert!(obs.p.matrix().entry_distance(&ComplexMatrix::identity(3)) < 1e-12);
    }

    #[test]
    fn observation_requires_positive_first_weight() {
        let a = HermitianMatrix::from_real_diag(&[1.0]);
        let w = WeightFunction::new(vec![0.0, 1.0], 1.0).unwrap();
        assert!(matches!(
            observation_projections(&a, &w),
            Err(Error::AlphaOneZero { .. })
        ));
    }

    #[test]
    fn dual_formula_agreement_on_a_spread_spectrum() {
        let w = WeightFunction::new(vec![2.0, 1.0, 0.5], 0.25).unwrap();
        let values = [10.0, 5.0, 2.5, 1.25, 0.0];
        let phi = phi_alpha_of_spectrum(&values, &w);
        // independent expansion: 2*10 + 1*5 + 0.5*2.5 + 0.25*1.25
        assert!((phi - 26.5625).abs() < 1e-12);
    }
}
