//! Sugeno-type trace: instead of summing weighted eigenvalues it takes
//! max_i min(lambda_i, alpha(i)) - the level where the decreasing
//! spectrum crosses the increasing weight. For the counting weight this
//! is the h-index of the spectrum: the largest k with lambda_k >= k.

use nltrace::falsify::{random_psd, RandomSource};
use nltrace::traces::{observation_projections, psi_alpha, sugeno_max_oracle, ObservationCase};
use nltrace::weights::WeightFunction;

fn main() -> nltrace::Result<()> {
    let mut src = RandomSource::new(11);
    let a = random_psd(&mut src, 3, Some(&[5.0, 3.0, 0.5]))?;
    let counting = WeightFunction::counting();

    // lambda = (5, 3, 0.5), alpha = (1, 2, 3):
    // min(5,1)=1, min(3,2)=2, min(0.5,3)=0.5 -> the value is 2
    let value = psi_alpha(&a, &counting)?;
    println!("spectrum (5, 3, 0.5), counting weight -> {value}");

    // an independent scan over crossing indices must agree bit for bit
    assert_eq!(value, sugeno_max_oracle(&a, &counting)?);

    // witness projections: p realizes the value from below, the
    // complement of q0 caps it from above
    let obs = observation_projections(&a, &counting)?;
    let case = match obs.case {
        ObservationCase::SpectrumCrossing => "an eigenvalue at the crossing",
        ObservationCase::WeightCrossing => "a weight value at the crossing",
        ObservationCase::BelowFirstWeight => "the top eigenvalue (below alpha(1))",
    };
    println!(
        "witnesses: rank p = {}, rank q0 = {}, value {} comes from {case}",
        obs.rank_p, obs.rank_q0, obs.value
    );

    // a spectrum entirely below alpha(1) is reported by its top eigenvalue
    let small = random_psd(&mut src, 2, Some(&[0.4, 0.1]))?;
    println!(
        "spectrum (0.4, 0.1), counting weight  -> {}",
        psi_alpha(&small, &counting)?
    );

    Ok(())
}
