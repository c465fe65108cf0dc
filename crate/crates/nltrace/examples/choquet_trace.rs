//! Choquet-type trace of a PSD matrix: a weighted sum of the ordered
//! eigenvalues where the weights come from the increments of a weight
//! function alpha. Special increment patterns recover the linear trace,
//! single eigenvalues, and top-k sums.

use nltrace::falsify::{random_psd, RandomSource};
use nltrace::traces::phi_alpha;
use nltrace::weights::WeightFunction;
use nltrace::spectral::eigenvalue_sequence;

fn main() -> nltrace::Result<()> {
    // a 3x3 PSD matrix with spectrum (4, 2, 1) hidden by a random rotation
    let mut src = RandomSource::new(7);
    let a = random_psd(&mut src, 3, Some(&[4.0, 2.0, 1.0]))?;
    println!("eigenvalues: {:?}", eigenvalue_sequence(&a)?);

    // alpha(n) = n: every increment is 1, so the trace is linear
    let counting = WeightFunction::counting();
    println!("counting weight      -> {}", phi_alpha(&a, &counting)?);

    // a unit increment at position 2 picks out the second eigenvalue
    let second = WeightFunction::selector(2);
    println!("selector(2)          -> {}", phi_alpha(&a, &second)?);

    // two unit increments sum the two largest eigenvalues
    let top2 = WeightFunction::top_k(2);
    println!("top-2 sum            -> {}", phi_alpha(&a, &top2)?);

    // a genuinely concave weight: decreasing increments, constant tail
    let concave = WeightFunction::new(vec![1.0, 0.5, 0.25], 0.1)?;
    println!(
        "concave (1,.5,.25|.1) -> {} = 1*4 + 0.5*2 + 0.25*1",
        phi_alpha(&a, &concave)?
    );

    Ok(())
}
