//! Eigenvalue domination between PSD matrices is the same thing as
//! being a compression: lambda_i(a) <= lambda_i(b) for every i exactly
//! when a = c b c* for some contraction c. The factor is constructed
//! explicitly, and domination is equivalently visible through the
//! selector trace probes.

use nltrace::falsify::{random_complex, random_psd, RandomSource};
use nltrace::majorization::{construct_contraction, eigen_dominates, majorizes, weak_majorizes};
use nltrace::matrix::HermitianMatrix;
use nltrace::norms::operator_norm;
use nltrace::spectral::eigenvalue_sequence;
use nltrace::traces::phi_alpha;
use nltrace::weights::WeightFunction;

fn main() -> nltrace::Result<()> {
    let mut src = RandomSource::new(37);
    let b = random_psd(&mut src, 4, Some(&[6.0, 4.0, 2.5, 1.0]))?;

    // squeeze b through a strict contraction
    let g = random_complex(&mut src, 4);
    let x = g.scale_re(0.8 / operator_norm(&g)?);
    let a = HermitianMatrix::symmetrized(x.mul(b.matrix()).mul(&x.adjoint()));

    let la = eigenvalue_sequence(&a)?;
    let lb = eigenvalue_sequence(&b)?;
    println!("lambda(a) = {la:?}");
    println!("lambda(b) = {lb:?}");
    println!("a <= b eigenvalue-wise: {}", eigen_dominates(&b, &a)?);
    println!("b weakly majorizes lambda(a): {}", weak_majorizes(&lb, &la).relation_holds);
    println!("b majorizes lambda(a) (needs equal totals): {}", majorizes(&lb, &la).relation_holds);

    // recover a contraction c with a = c b c*
    let c = construct_contraction(&a, &b)?;
    let residual = a.matrix().sub(&c.mul(b.matrix()).mul(&c.adjoint())).frobenius_norm();
    println!("constructed factor: opnorm(c) = {}, residual |a - cbc*|_F = {residual:.3e}",
        operator_norm(&c)?);

    // the same relation through trace probes: every selector weight agrees
    for i in 1..=4 {
        let w = WeightFunction::selector(i);
        println!("  selector {i}: {:.6} <= {:.6}", phi_alpha(&a, &w)?, phi_alpha(&b, &w)?);
    }

    // the reversed pair cannot be factored
    match construct_contraction(&b, &a) {
        Err(e) => println!("reversed pair is rejected: {e}"),
        Ok(_) => unreachable!("b strictly exceeds a"),
    }

    Ok(())
}
