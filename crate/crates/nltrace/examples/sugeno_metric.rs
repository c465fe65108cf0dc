//! The Sugeno norm of |a| is subadditive for concave weights, so
//! d(a, b) = |a - b| is a metric on matrices - but it is NOT a vector
//! norm: it fails positive homogeneity, saturating at the weight ceiling.

use nltrace::falsify::{random_complex, RandomSource};
use nltrace::norms::{sugeno_distance, sugeno_norm};
use nltrace::weights::WeightFunction;

fn main() -> nltrace::Result<()> {
    let w = WeightFunction::new(vec![1.0, 0.5], 0.0)?;
    let mut src = RandomSource::new(5);
    let x = random_complex(&mut src, 3);
    let y = random_complex(&mut src, 3);
    let z = random_complex(&mut src, 3);

    println!("|x| = {}", sugeno_norm(&x, &w)?);
    let (dxy, dyx) = (sugeno_distance(&x, &y, &w)?, sugeno_distance(&y, &x, &w)?);
    println!("metric axioms:");
    println!("  d(x,x) = {}", sugeno_distance(&x, &x, &w)?);
    println!("  d(x,y) = {dxy} = d(y,x) = {dyx}");
    let (dxz, dyz) = (sugeno_distance(&x, &z, &w)?, sugeno_distance(&y, &z, &w)?);
    println!("  d(x,z) = {dxz} <= d(x,y) + d(y,z) = {}", dxy + dyz);

    // homogeneity failure: scaling past the weight ceiling changes nothing
    let a = random_complex(&mut src, 3);
    let na = sugeno_norm(&a, &w)?;
    let n2a = sugeno_norm(&a.scale_re(2.0), &w)?;
    let n10a = sugeno_norm(&a.scale_re(10.0), &w)?;
    println!("homogeneity failure (ceiling alpha = 1.5):");
    println!("  |a|   = {na}");
    println!("  |2a|  = {n2a}  (2|a| would be {})", 2.0 * na);
    println!("  |10a| = {n10a} (10|a| would be {})", 10.0 * na);

    Ok(())
}
