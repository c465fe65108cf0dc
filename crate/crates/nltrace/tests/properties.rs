//! Randomized structural invariants of the vector-level machinery:
//! integrals, weight functions, and majorization. These stay off the
//! eigensolver so they can run thousands of cases cheaply.

use nltrace::integrals::{
    are_comonotonic, choquet_integral, decreasing_rearrangement, sugeno_integral, NonNegVector,
};
use nltrace::majorization::{majorizes, weak_majorizes};
use nltrace::traces::{phi_alpha_of_spectrum, psi_alpha_of_spectrum};
use nltrace::weights::{MonotoneMeasure, WeightFunction};
use proptest::prelude::*;

fn entries() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..10.0, 1..=6)
}

fn weight_parts() -> impl Strategy<Value = (Vec<f64>, f64)> {
    (prop::collection::vec(0.0f64..2.0, 0..=5), 0.0f64..1.5)
}

/// Same-length pair: a base vector and non-negative bumps.
fn paired_entries() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (1usize..=6).prop_flat_map(|n| {
        (
            prop::collection::vec(0.0f64..10.0, n),
            prop::collection::vec(0.0f64..3.0, n),
        )
    })
}

/// Non-decreasing non-negative transform coefficients for comonotone pairs.
fn transform_coeffs() -> impl Strategy<Value = (f64, f64, f64, f64)> {
    (0.0f64..3.0, 0.0f64..0.5, 0.0f64..3.0, 0.0f64..2.0)
}

fn counting_measure(n: usize) -> MonotoneMeasure {
    MonotoneMeasure::cardinality(n, WeightFunction::counting())
}

proptest! {
    #[test]
    fn counting_choquet_integral_is_the_sum(xs in entries()) {
        let x = NonNegVector::new(xs.clone()).unwrap();
        let got = choquet_integral(&x, &counting_measure(xs.len())).unwrap();
        let want: f64 = xs.iter().sum();
        prop_assert!((got - want).abs() <= 1e-10 * (1.0 + want));
    }

    #[test]
    fn choquet_integral_is_positively_homogeneous(
        xs in entries(),
        (inc, tail) in weight_parts(),
        c in 0.0f64..5.0,
    ) {
        let n = xs.len();
        let m = MonotoneMeasure::cardinality(n, WeightFunction::new(inc, tail).unwrap());
        let x = NonNegVector::new(xs.clone()).unwrap();
        let cx = NonNegVector::new(xs.iter().map(|v| c * v).collect()).unwrap();
        let got = choquet_integral(&cx, &m).unwrap();
        let want = c * choquet_integral(&x, &m).unwrap();
        prop_assert!((got - want).abs() <= 1e-9 * (1.0 + want.abs()));
    }

    #[test]
    fn choquet_integral_is_monotone(
        (xs, bumps) in paired_entries(),
        (inc, tail) in weight_parts(),
    ) {
        let n = xs.len();
        let m = MonotoneMeasure::cardinality(n, WeightFunction::new(inc, tail).unwrap());
        let lo = NonNegVector::new(xs.clone()).unwrap();
        let hi = NonNegVector::new(xs.iter().zip(&bumps).map(|(a, b)| a + b).collect()).unwrap();
        let vlo = choquet_integral(&lo, &m).unwrap();
        let vhi = choquet_integral(&hi, &m).unwrap();
        prop_assert!(vlo <= vhi + 1e-10 * (1.0 + vhi.abs()));
    }

    #[test]
    fn additive_table_measures_make_the_choquet_integral_linear(
        (xs, item_weights) in (1usize..=4).prop_flat_map(|n| {
            (
                prop::collection::vec(0.0f64..10.0, n),
                prop::collection::vec(0.0f64..2.0, n),
            )
        }),
    ) {
        let n = xs.len();
        let table: Vec<f64> = (0u64..(1 << n))
            .map(|mask| {
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| item_weights[i])
                    .sum()
            })
            .collect();
        let m = MonotoneMeasure::from_table(n, table).unwrap();
        let x = NonNegVector::new(xs.clone()).unwrap();
        let got = choquet_integral(&x, &m).unwrap();
        let want: f64 = xs.iter().zip(&item_weights).map(|(a, b)| a * b).sum();
        prop_assert!((got - want).abs() <= 1e-9 * (1.0 + want.abs()));
    }

    #[test]
    fn comonotone_transforms_add_under_the_choquet_integral(
        xs in entries(),
        (a1, b1, a2, c2) in transform_coeffs(),
    ) {
        let n = xs.len();
        let m = counting_measure(n);
        let f: Vec<f64> = xs.iter().map(|&t| a1 * t + b1 * t * t).collect();
        let g: Vec<f64> = xs.iter().map(|&t| a2 * t.sqrt() + c2 * t).collect();
        prop_assert!(are_comonotonic(&f, &g).unwrap());
        let sum: Vec<f64> = f.iter().zip(&g).map(|(p, q)| p + q).collect();
        let vf = choquet_integral(&NonNegVector::new(f).unwrap(), &m).unwrap();
        let vg = choquet_integral(&NonNegVector::new(g).unwrap(), &m).unwrap();
        let vs = choquet_integral(&NonNegVector::new(sum).unwrap(), &m).unwrap();
        prop_assert!((vs - (vf + vg)).abs() <= 1e-9 * (1.0 + vf + vg));
    }

    #[test]
    fn comonotone_transforms_are_maxitive_under_the_sugeno_integral(
        xs in entries(),
        (a1, b1, a2, c2) in transform_coeffs(),
        (inc, tail) in weight_parts(),
    ) {
        let n = xs.len();
        let m = MonotoneMeasure::cardinality(n, WeightFunction::new(inc, tail).unwrap());
        let f: Vec<f64> = xs.iter().map(|&t| a1 * t + b1 * t * t).collect();
        let g: Vec<f64> = xs.iter().map(|&t| a2 * t.sqrt() + c2 * t).collect();
        let join: Vec<f64> = f.iter().zip(&g).map(|(p, q)| p.max(*q)).collect();
        let vf = sugeno_integral(&NonNegVector::new(f).unwrap(), &m).unwrap();
        let vg = sugeno_integral(&NonNegVector::new(g).unwrap(), &m).unwrap();
        let vj = sugeno_integral(&NonNegVector::new(join).unwrap(), &m).unwrap();
        // pure max/min selections of shared inputs: exact equality
        prop_assert_eq!(vj, vf.max(vg));
    }

    #[test]
    fn sugeno_integral_is_bounded_by_peak_and_measure(
        xs in entries(),
        (inc, tail) in weight_parts(),
    ) {
        let n = xs.len();
        let w = WeightFunction::new(inc, tail).unwrap();
        let full = w.alpha(n);
        let m = MonotoneMeasure::cardinality(n, w);
        let x = NonNegVector::new(xs.clone()).unwrap();
        let v = sugeno_integral(&x, &m).unwrap();
        let peak = xs.iter().fold(0.0f64, |a, &b| a.max(b));
        prop_assert!(v <= peak);
        prop_assert!(v <= full);
    }

    #[test]
    fn negative_entries_are_rejected(xs in entries(), at in 0usize..6) {
        let mut xs = xs;
        let at = at % xs.len();
        xs[at] = -1.0;
        prop_assert!(NonNegVector::new(xs).is_err());
    }

    #[test]
    fn alpha_is_nondecreasing_from_zero((inc, tail) in weight_parts()) {
        let w = WeightFunction::new(inc, tail).unwrap();
        prop_assert_eq!(w.alpha(0), 0.0);
        for n in 0..10 {
            prop_assert!(w.alpha(n + 1) >= w.alpha(n));
        }
    }

    #[test]
    fn concavity_test_matches_the_reported_ascent((inc, tail) in weight_parts()) {
        let w = WeightFunction::new(inc, tail).unwrap();
        match w.first_nonconcavity() {
            None => {
                prop_assert!(w.is_concave());
                // midpoint inequality holds everywhere
                for i in 0..8 {
                    prop_assert!(w.alpha(i) + w.alpha(i + 2) <= 2.0 * w.alpha(i + 1) + 1e-12);
                }
            }
            Some(i) => {
                prop_assert!(!w.is_concave());
                prop_assert!(w.increment(i + 2) > w.increment(i + 1));
                // everything before the reported index is non-ascending
                for k in 1..=i {
                    prop_assert!(w.increment(k + 1) <= w.increment(k));
                }
            }
        }
    }

    #[test]
    fn weak_majorization_is_reflexive_and_respects_scaling(
        xs in entries(),
        c in 1.0f64..4.0,
    ) {
        prop_assert!(weak_majorizes(&xs, &xs).relation_holds);
        let cx: Vec<f64> = xs.iter().map(|v| c * v).collect();
        prop_assert!(weak_majorizes(&cx, &xs).relation_holds);
    }

    #[test]
    fn pointwise_domination_implies_weak_majorization((xs, bumps) in paired_entries()) {
        let ys: Vec<f64> = xs.iter().zip(&bumps).map(|(a, b)| a + b).collect();
        prop_assert!(weak_majorizes(&ys, &xs).relation_holds);
    }

    #[test]
    fn permutations_majorize_in_both_directions(xs in entries()) {
        let mut rev = xs.clone();
        rev.reverse();
        prop_assert!(majorizes(&rev, &xs).relation_holds);
        prop_assert!(majorizes(&xs, &rev).relation_holds);
    }

    #[test]
    fn zero_padding_does_not_change_weak_majorization((xs, bumps) in paired_entries()) {
        let ys: Vec<f64> = xs.iter().zip(&bumps).map(|(a, b)| a + b).collect();
        let mut padded = xs.clone();
        padded.push(0.0);
        prop_assert_eq!(
            weak_majorizes(&ys, &padded).relation_holds,
            weak_majorizes(&ys, &xs).relation_holds
        );
    }

    #[test]
    fn spectrum_trace_matches_the_choquet_integral(
        xs in entries(),
        (inc, tail) in weight_parts(),
    ) {
        let w = WeightFunction::new(inc, tail).unwrap();
        let x = NonNegVector::new(xs.clone()).unwrap();
        let sorted = decreasing_rearrangement(&x);
        let via_trace = phi_alpha_of_spectrum(&sorted, &w);
        let m = MonotoneMeasure::cardinality(xs.len(), w);
        let via_integral = choquet_integral(&x, &m).unwrap();
        prop_assert!((via_trace - via_integral).abs() <= 1e-10 * (1.0 + via_integral.abs()));
    }

    #[test]
    fn spectrum_sugeno_trace_matches_the_sugeno_integral(
        xs in entries(),
        (inc, tail) in weight_parts(),
    ) {
        let w = WeightFunction::new(inc, tail).unwrap();
        let x = NonNegVector::new(xs.clone()).unwrap();
        let sorted = decreasing_rearrangement(&x);
        let via_trace = psi_alpha_of_spectrum(&sorted, &w);
        let m = MonotoneMeasure::cardinality(xs.len(), w);
        let via_integral = sugeno_integral(&x, &m).unwrap();
        // both sides select among the same stored floats: exact
        prop_assert_eq!(via_trace, via_integral);
    }
}
