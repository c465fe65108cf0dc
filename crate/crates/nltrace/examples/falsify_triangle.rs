//! Concavity of the weight function is not decoration: for any
//! non-concave weight the induced "norm" breaks the triangle inequality.
//! The proof-family search turns the first ascent of the increments into
//! an explicit two-matrix counterexample; random search finds violations
//! by sampling.

use nltrace::falsify::{proof_family_counterexample, random_search_counterexample, RandomSource, random_weight};
use nltrace::weights::WeightFunction;

fn main() -> nltrace::Result<()> {
    // alpha = (1, 3): the second increment 2 exceeds the first
    let step = WeightFunction::new(vec![1.0, 2.0], 0.0)?;
    println!("weight increments (1, 2): first ascent at index {:?}", step.first_nonconcavity());

    for p in [1.0, 2.0] {
        let ce = proof_family_counterexample(&step, p, 2)?;
        println!(
            "p = {p}: |a+b| = {:.6} > {:.6} = |a| + |b|  (margin {:.6}, grid point {:?})",
            ce.lhs, ce.rhs, ce.margin, ce.grid_point
        );
    }

    // the same violation found by blind sampling of diagonal and dense pairs
    let ce = random_search_counterexample(&step, 1.0, 2, 500, 1)?
        .expect("violations have positive probability for this weight");
    println!(
        "random search: margin {:.6} with lhs {:.6} vs rhs {:.6}",
        ce.margin, ce.lhs, ce.rhs
    );

    // a concave weight is rejected outright: there is nothing to falsify
    let mut src = RandomSource::new(3);
    let concave = random_weight(&mut src, 3, true);
    match proof_family_counterexample(&concave, 1.0, 4) {
        Err(e) => println!("concave weight rejected: {e}"),
        Ok(_) => unreachable!("concave weights admit no counterexample"),
    }

    Ok(())
}
