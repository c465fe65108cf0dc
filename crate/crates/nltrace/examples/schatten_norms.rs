//! Weighted Schatten p-norms and the Ky Fan family. For a concave weight
//! the p-th norm power splits into non-negative multiples of Ky Fan p-k
//! norm powers, which is what makes the triangle inequality work. The
//! weighted norms are also ideal norms: multiplying by a bounded factor
//! costs at most its operator norm.

use nltrace::falsify::{random_complex, RandomSource};
use nltrace::norms::{
    choquet_norm, kyfan_decomposition_terms, kyfan_norm, kyfan_pk_norm, operator_norm,
    schatten_choquet_norm, NormSpec,
};
use nltrace::weights::WeightFunction;

fn main() -> nltrace::Result<()> {
    let mut src = RandomSource::new(23);
    let a = random_complex(&mut src, 4);
    let w = WeightFunction::new(vec![1.0, 0.6, 0.3], 0.1)?;

    println!("weighted trace norm (p = 1)   -> {}", choquet_norm(&a, &w)?);
    for p in [1.5, 2.0, 3.0] {
        let spec = NormSpec::new(w.clone(), p)?;
        println!("weighted Schatten p = {p:<3}     -> {}", schatten_choquet_norm(&a, &spec)?);
    }
    println!("operator norm                 -> {}", operator_norm(&a)?);
    for k in 1..=4 {
        println!(
            "Ky Fan k = {k} -> {:<20} Ky Fan p-k (p = 2) -> {}",
            kyfan_norm(&a, k)?,
            kyfan_pk_norm(&a, 2.0, k)?
        );
    }

    // decomposition: entry k is (c_k - c_{k+1}) * (Ky Fan p-k norm)^p;
    // the entries sum to the p-th power of the weighted norm
    let spec = NormSpec::new(w.clone(), 2.0)?;
    let terms = kyfan_decomposition_terms(&a, &spec)?;
    let total: f64 = terms.iter().sum();
    let norm = schatten_choquet_norm(&a, &spec)?;
    println!("decomposition terms {terms:?}");
    println!("  sum {total} = norm^2 = {}", norm * norm);

    // ideal property: |a b| <= |a| * opnorm(b)
    let b = random_complex(&mut src, 4);
    let lhs = choquet_norm(&a.mul(&b), &w)?;
    let rhs = choquet_norm(&a, &w)? * operator_norm(&b)?;
    println!("ideal bound: |ab| = {lhs} <= {rhs} = |a| * opnorm(b)");

    Ok(())
}
