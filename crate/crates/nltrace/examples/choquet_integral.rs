//! Discrete Choquet and Sugeno integrals against monotone set measures.
//! The Choquet integral is additive exactly on comonotone pairs; a
//! counterexample shows it is not additive in general.

use nltrace::integrals::{are_comonotonic, choquet_integral, sugeno_integral, NonNegVector};
use nltrace::weights::{MonotoneMeasure, WeightFunction};

fn main() -> nltrace::Result<()> {
    // the counting measure mu(A) = |A| makes both integrals classical:
    // Choquet is the sum, Sugeno is the crossing level
    let x = NonNegVector::new(vec![5.0, 3.0])?;
    let counting = MonotoneMeasure::cardinality(2, WeightFunction::counting());
    println!("x = (5, 3), mu = |A|");
    println!("  Choquet integral -> {}", choquet_integral(&x, &counting)?);
    println!("  Sugeno integral  -> {}", sugeno_integral(&x, &counting)?);

    // an explicit monotone table on {1, 2}: mu({1}) = 1, mu({2}) = 0.6,
    // mu({1,2}) = 1.2 (subadditive, so the integral is not linear)
    let table = MonotoneMeasure::from_table(2, vec![0.0, 1.0, 0.6, 1.2])?;
    let f = NonNegVector::new(vec![1.0, 0.0])?;
    let g = NonNegVector::new(vec![0.0, 1.0])?;
    let fg = NonNegVector::new(vec![1.0, 1.0])?;
    let (vf, vg, vfg) = (
        choquet_integral(&f, &table)?,
        choquet_integral(&g, &table)?,
        choquet_integral(&fg, &table)?,
    );
    println!("counter-monotone pair under a subadditive table measure:");
    println!("  integral(f) + integral(g) = {} but integral(f + g) = {vfg}", vf + vg);
    assert!(!are_comonotonic(f.as_slice(), g.as_slice())?);

    // comonotone pairs (increasing together) restore additivity
    let f = NonNegVector::new(vec![2.0, 0.5])?;
    let g = NonNegVector::new(vec![4.0, 1.0])?;
    assert!(are_comonotonic(f.as_slice(), g.as_slice())?);
    let sum = NonNegVector::new(vec![6.0, 1.5])?;
    let (vf, vg, vsum) = (
        choquet_integral(&f, &table)?,
        choquet_integral(&g, &table)?,
        choquet_integral(&sum, &table)?,
    );
    println!("comonotone pair under the same measure:");
    println!("  integral(f) + integral(g) = {} = integral(f + g) = {vsum}", vf + vg);

    Ok(())
}
