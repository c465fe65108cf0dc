//! Seeded random generators and triangle-inequality counterexample
//! search.
//!
//! All randomness flows through `RandomSource`, a ChaCha8 stream seeded
//! from a u64, so every search and suite is reproducible from its seed
//! across platforms. Derived trials use seed + trial_index.
//!
//! For a non-concave weight the weighted Schatten p-norm fails the
//! triangle inequality, and the failure is witnessed inside an explicit
//! two-parameter family of diagonal matrices concentrated at the first
//! concavity ascent; `proof_family_counterexample` scans that family on
//! a deterministic grid. `random_search_counterexample` searches blind
//! random pairs instead and doubles as a no-violation check for concave
//! weights.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, HermitianMatrix};
use crate::norms::{schatten_choquet_norm, NormSpec};
use crate::tol;
use crate::weights::WeightFunction;

/// Deterministic random stream (ChaCha8) with a recorded seed.
#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Source for trial `index` of a run seeded with `base`: seed base + index.
    pub fn for_trial(base: u64, index: u64) -> Self {
        Self::new(base.wrapping_add(index))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn uniform(&mut self) -> f64 {
        self.rng.random()
    }

    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    pub fn complex_normal(&mut self) -> Complex64 {
        let re: f64 = self.normal();
        let im: f64 = self.normal();
        Complex64::new(re, im).scale(std::f64::consts::FRAC_1_SQRT_2)
    }
}

/// Square matrix of independent standard complex Gaussians.
pub fn random_complex(src: &mut RandomSource, dim: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, dim, |_, _| src.complex_normal())
}

/// Random Hermitian matrix (g + g*)/2 of a complex Gaussian g.
pub fn random_hermitian(src: &mut RandomSource, dim: usize) -> HermitianMatrix {
    HermitianMatrix::symmetrized(random_complex(src, dim))
}

/// Haar-like random unitary: Gaussian columns orthonormalized by two
/// passes of modified Gram-Schmidt.
pub fn random_unitary(src: &mut RandomSource, dim: usize) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut v: Vec<Complex64> = (0..dim).map(|_| src.complex_normal()).collect();
        for _pass in 0..2 {
            for u in &cols {
                let inner: Complex64 = u
                    .iter()
                    .zip(&v)
                    .map(|(ui, vi)| ui.conj() * vi)
                    .sum();
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= inner * ui;
                }
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-8 {
            continue;
        }
        for x in v.iter_mut() {
            *x = x.scale(norm.recip());
        }
        cols.push(v);
    }
    ComplexMatrix::from_fn(dim, dim, |i, j| cols[j][i])
}

/// Random PSD matrix u diag(spectrum) u* with a Haar-like u. A supplied
/// spectrum must have `dim` finite non-negative entries; otherwise the
/// spectrum is drawn as |N(0, 1)| samples.
pub fn random_psd(
    src: &mut RandomSource,
    dim: usize,
    spectrum: Option<&[f64]>,
) -> Result<HermitianMatrix> {
    let values: Vec<f64> = match spectrum {
        Some(s) => {
            if s.len() != dim {
                return Err(Error::BadSpectrum {
                    context: format!("spectrum has {} entries, expected {dim}", s.len()),
                });
            }
            for &x in s {
                if !x.is_finite() || x < 0.0 {
                    return Err(Error::BadSpectrum {
                        context: format!("spectrum entry {x} must be finite and >= 0"),
                    });
                }
            }
            s.to_vec()
        }
        None => (0..dim).map(|_| src.normal().abs()).collect(),
    };
    let u = random_unitary(src, dim);
    let scaled = ComplexMatrix::from_fn(dim, dim, |i, j| u[(i, j)] * values[j]);
    Ok(HermitianMatrix::symmetrized(scaled.mul(&u.adjoint())))
}

/// Random weight with `len` prefix increments. Concave weights sort
/// positive draws in decreasing order and keep the tail below the last
/// increment; non-concave weights are redrawn until some increment steps
/// up by at least 0.05, so downstream margins stay well clear of zero.
pub fn random_weight(src: &mut RandomSource, len: usize, concave: bool) -> WeightFunction {
    assert!(len >= 1);
    loop {
        let mut increments: Vec<f64> = (0..len).map(|_| src.uniform_in(0.1, 2.0)).collect();
        if concave {
            increments.sort_by(|a, b| b.partial_cmp(a).unwrap());
            let tail = increments[len - 1] * src.uniform();
            return WeightFunction::new(increments, tail).expect("draws are in range");
        }
        let has_ascent = increments.windows(2).any(|w| w[1] >= w[0] + 0.05);
        if len >= 2 && !has_ascent {
            continue;
        }
        if len == 1 {
            // force the ascent onto the second increment via the prefix
            let c1 = increments[0];
            increments.push(c1 + src.uniform_in(0.05, 1.0));
        }
        let tail = increments[increments.len() - 1] * src.uniform();
        return WeightFunction::new(increments, tail).expect("draws are in range");
    }
}

/// A verified triangle-inequality violation: lhs = |||a + b||| exceeds
/// rhs = |||a||| + |||b||| by `margin`.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub p: f64,
    pub a: ComplexMatrix,
    pub b: ComplexMatrix,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    /// (s, t) grid coordinates for family-based counterexamples.
    pub grid_point: Option<(f64, f64)>,
}

fn verify_violation(
    w: &WeightFunction,
    p: f64,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
) -> Result<(f64, f64, f64)> {
    let spec = NormSpec::new(w.clone(), p)?;
    let lhs = schatten_choquet_norm(&a.add(b), &spec)?;
    let rhs = schatten_choquet_norm(a, &spec)? + schatten_choquet_norm(b, &spec)?;
    Ok((lhs, rhs, lhs - rhs))
}

/// Scans the two-parameter family pinned at the weight's first concavity
/// ascent i: a has eigenvalues (2, ..., 2, 1+s, 1-t) on the first i+2
/// coordinates, b swaps the last two, so both share one spectrum while
/// the midpoint merges the split levels. s ranges over a 64-point
/// log-spaced grid in (0, s0] with s0 the largest s <= 1 keeping
/// alpha(i+2) - alpha(i) > (1+s)^p (alpha(i+1) - alpha(i)), t over a
/// 64-point linear grid in [0, 1]. Returns the maximum-margin grid point,
/// re-verified through the public norm path.
pub fn proof_family_counterexample(
    w: &WeightFunction,
    p: f64,
    dim: usize,
) -> Result<Counterexample> {
    if !p.is_finite() || p < 1.0 {
        return Err(Error::InvalidExponent { p });
    }
    let i = w.first_nonconcavity().ok_or(Error::ConcaveWeight)?;
    if dim < i + 2 {
        return Err(Error::IndexOutOfRange {
            index: dim,
            context: format!(
                "the counterexample family at ascent index {i} needs dimension at least {}",
                i + 2
            ),
        });
    }
    let low = w.alpha(i);
    let mid = w.alpha(i + 1);
    let high = w.alpha(i + 2);
    let d1 = mid - low;
    let d2 = high - mid;
    debug_assert!(d2 > d1, "first_nonconcavity guarantees an ascent");

    let s_top = if d1 <= 0.0 {
        1.0
    } else {
        let s_raw = ((high - low) / d1).powf(p.recip()) - 1.0;
        if s_raw > 1.0 {
            1.0
        } else {
            s_raw * (1.0 - 1e-9)
        }
    };

    let two_p = 2.0f64.powf(p);
    let mut best: Option<(f64, f64, f64)> = None;
    for j in 0..64 {
        let s = s_top * 10f64.powf(-5.0 * (1.0 - j as f64 / 63.0));
        for k in 0..64 {
            let t = k as f64 / 63.0;
            let u = 1.0 + (s - t) / 2.0;
            let split = two_p * low + (1.0 + s).powf(p) * d1 + (1.0 - t).powf(p) * d2;
            let merged = two_p * low + u.powf(p) * (d1 + d2);
            let margin = 2.0 * (merged.powf(p.recip()) - split.powf(p.recip()));
            if best.map_or(true, |(m, _, _)| margin > m) {
                best = Some((margin, s, t));
            }
        }
    }
    let (grid_margin, s, t) = best.expect("grid is nonempty");
    if grid_margin <= tol::COUNTEREXAMPLE_MARGIN {
        return Err(Error::SearchExhausted {
            context: format!(
                "no grid margin above {:.0e} for ascent index {i} at p = {p} (best {grid_margin:.3e})",
                tol::COUNTEREXAMPLE_MARGIN
            ),
        });
    }

    let mut diag_a = vec![0.0; dim];
    let mut diag_b = vec![0.0; dim];
    for slot in diag_a.iter_mut().take(i) {
        *slot = 2.0;
    }
    diag_b[..i].copy_from_slice(&diag_a[..i]);
    diag_a[i] = 1.0 + s;
    diag_a[i + 1] = 1.0 - t;
    diag_b[i] = 1.0 - t;
    diag_b[i + 1] = 1.0 + s;
    let a = ComplexMatrix::diag(&diag_a);
    let b = ComplexMatrix::diag(&diag_b);

    let (lhs, rhs, margin) = verify_violation(w, p, &a, &b)?;
    if margin <= tol::COUNTEREXAMPLE_MARGIN {
        return Err(Error::SearchExhausted {
            context: format!(
                "grid point (s = {s:.6}, t = {t:.6}) did not re-verify: margin {margin:.3e}"
            ),
        });
    }
    Ok(Counterexample {
        p,
        a,
        b,
        lhs,
        rhs,
        margin,
        grid_point: Some((s, t)),
    })
}

/// Blind random search for a triangle violation: trial 2k draws a
/// non-negative diagonal pair (where violations for non-concave weights
/// have positive measure), trial 2k+1 a general complex Gaussian pair.
/// Trial j uses the derived seed `seed + j`. Returns the first violation
/// with margin above COUNTEREXAMPLE_MARGIN, or None.
pub fn random_search_counterexample(
    w: &WeightFunction,
    p: f64,
    dim: usize,
    trials: usize,
    seed: u64,
) -> Result<Option<Counterexample>> {
    if !p.is_finite() || p < 1.0 {
        return Err(Error::InvalidExponent { p });
    }
    for trial in 0..trials {
        let mut src = RandomSource::for_trial(seed, trial as u64);
        let (a, b) = if trial % 2 == 0 {
            let entries_a: Vec<f64> = (0..dim).map(|_| src.normal().abs()).collect();
            let entries_b: Vec<f64> = (0..dim).map(|_| src.normal().abs()).collect();
            (ComplexMatrix::diag(&entries_a), ComplexMatrix::diag(&entries_b))
        } else {
            (random_complex(&mut src, dim), random_complex(&mut src, dim))
        };
        let (lhs, rhs, margin) = verify_violation(w, p, &a, &b)?;
        if margin > tol::COUNTEREXAMPLE_MARGIN {
            return Ok(Some(Counterexample {
                p,
                a,
                b,
                lhs,
                rhs,
                margin,
                grid_point: None,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::eigenvalue_sequence;

    #[test]
    fn same_seed_reproduces_the_stream() {
        let a = random_complex(&mut RandomSource::new(42), 3);
        let b = random_complex(&mut RandomSource::new(42), 3);
        assert_eq!(a.entries(), b.entries());
        let c = random_complex(&mut RandomSource::new(43), 3);
        assert_ne!(a.entries(), c.entries());
    }

    #[test]
    fn random_unitary_is_unitary() {
        let u = random_unitary(&mut RandomSource::new(7), 5);
        let gram = u.adjoint().mul(&u);
        assert!(gram.entry_distance(&ComplexMatrix::identity(5)) < 1e-12);
    }

    #[test]
    fn random_psd_realizes_a_prescribed_spectrum() {
        let spectrum = [3.0, 1.0, 0.5, 0.0];
        let a = random_psd(&mut RandomSource::new(11), 4, Some(&spectrum)).unwrap();
        let values = eigenvalue_sequence(&a).unwrap();
        for (got, want) in values.iter().zip(&spectrum) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn random_psd_rejects_bad_spectra() {
        let mut src = RandomSource::new(0);
        assert!(random_psd(&mut src, 2, Some(&[1.0])).is_err());
        assert!(random_psd(&mut src, 2, Some(&[1.0, -0.1])).is_err());
        assert!(random_psd(&mut src, 2, Some(&[1.0, f64::NAN])).is_err());
    }

    #[test]
    fn random_weights_have_the_requested_shape() {
        let mut src = RandomSource::new(5);
        for _ in 0..20 {
            assert!(random_weight(&mut src, 4, true).is_concave());
            let w = random_weight(&mut src, 4, false);
            assert!(w.first_nonconcavity().is_some());
        }
        let w = random_weight(&mut src, 1, false);
        assert!(w.first_nonconcavity().is_some());
    }

    #[test]
    fn family_counterexample_for_the_step_weight() {
        // increments (1, 2): alpha = (0, 1, 3), ascent at index 0
        let w = WeightFunction::new(vec![1.0, 2.0], 0.0).unwrap();
        let ce = proof_family_counterexample(&w, 1.0, 2).unwrap();
        assert!((ce.margin - 2.0).abs() < 1e-12, "margin {}", ce.margin);
        assert!(ce.lhs > ce.rhs + 1.0);
        let (s, t) = ce.grid_point.unwrap();
        assert_eq!((s, t), (1.0, 1.0));
    }

    #[test]
    fn family_counterexample_at_higher_p() {
        let w = WeightFunction::new(vec![1.0, 2.0], 0.0).unwrap();
        for p in [1.5, 2.0, 3.0] {
            let ce = proof_family_counterexample(&w, p, 3).unwrap();
            assert!(ce.margin > tol::COUNTEREXAMPLE_MARGIN);
        }
    }

    #[test]
    fn family_counterexample_at_an_interior_ascent() {
        // increments (2, 1, 1.8): ascent at index 1 (c_3 > c_2)
        let w = WeightFunction::new(vec![2.0, 1.0, 1.8], 0.0).unwrap();
        let ce = proof_family_counterexample(&w, 2.0, 4).unwrap();
        assert!(ce.margin > tol::COUNTEREXAMPLE_MARGIN);
        // the shared 2-block must be present in both matrices
        assert_eq!(ce.a[(0, 0)].re, 2.0);
        assert_eq!(ce.b[(0, 0)].re, 2.0);
    }

    #[test]
    fn family_requires_nonconcave_weight_and_enough_room() {
        assert!(matches!(
            proof_family_counterexample(&WeightFunction::counting(), 1.0, 4),
            Err(Error::ConcaveWeight)
        ));
        let w = WeightFunction::new(vec![1.0, 2.0], 0.0).unwrap();
        assert!(matches!(
            proof_family_counterexample(&w, 1.0, 1),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            proof_family_counterexample(&w, 0.5, 2),
            Err(Error::InvalidExponent { .. })
        ));
    }

    #[test]
    fn random_search_finds_the_step_weight_violation() {
        let w = WeightFunction::new(vec![1.0, 2.0], 0.0).unwrap();
        let found = random_search_counterexample(&w, 1.0, 2, 1000, 1)
            .unwrap()
            .expect("a violation should appear among diagonal trials");
        assert!(found.margin > tol::COUNTEREXAMPLE_MARGIN);
        assert!(found.lhs > found.rhs);
    }

    #[test]
    fn random_search_finds_nothing_for_a_concave_weight() {
        let w = WeightFunction::new(vec![2.0, 1.0], 0.5).unwrap();
        let found = random_search_counterexample(&w, 2.0, 3, 200, 3).unwrap();
        assert!(found.is_none());
    }
}
