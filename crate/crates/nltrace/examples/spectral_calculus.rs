//! The spectral toolbox underneath the traces: Hermitian
//! eigendecomposition, functions applied on the spectrum, the four-part
//! split of an arbitrary matrix into PSD pieces, and the extended traces
//! it enables.

use nltrace::falsify::{random_complex, random_hermitian, RandomSource};
use nltrace::spectral::{
    apply_spectrum_function, eigenvalue_sequence, eigh, four_parts, SpectrumFunction,
};
use nltrace::traces::{phi_alpha_extended, psi_alpha_extended};
use nltrace::weights::WeightFunction;

fn main() -> nltrace::Result<()> {
    let mut src = RandomSource::new(17);
    let h = random_hermitian(&mut src, 4);

    // decompose, then rebuild: u diag(lambda) u*
    let es = eigh(&h)?;
    println!("eigenvalues: {:?}", es.values());
    let residual = es.reconstruct().sub(h.matrix()).frobenius_norm();
    println!("reconstruction residual: {residual:.3e}");

    // apply x -> sqrt(x) on the spectrum of a PSD matrix
    let a = nltrace::falsify::random_psd(&mut src, 3, Some(&[4.0, 1.0, 0.25]))?;
    let mut pts = eigenvalue_sequence(&a)?;
    pts.push(0.0);
    let sqrt = SpectrumFunction::tabulate(pts, f64::sqrt)?;
    let root = apply_spectrum_function(&a, &sqrt)?;
    println!("sqrt of spectrum (4, 1, 0.25): {:?}", eigenvalue_sequence(&root)?);
    let back = root.matrix().mul(root.matrix()).sub(a.matrix()).frobenius_norm();
    println!("|sqrt(a)^2 - a|_F = {back:.3e}");

    // any square matrix splits into four PSD parts:
    // a = a1 - a2 + i(a3 - a4)
    let g = random_complex(&mut src, 3);
    let parts = four_parts(&g)?;
    let gap = parts.reconstruct().sub(&g).frobenius_norm();
    println!("four-part reconstruction gap: {gap:.3e}");

    // the split extends both traces off the PSD cone, linearly in parts
    let w = WeightFunction::new(vec![1.0, 0.5], 0.25)?;
    println!("extended Choquet-type trace: {}", phi_alpha_extended(&g, &w)?);
    println!("extended Sugeno-type trace:  {}", psi_alpha_extended(&g, &w)?);

    Ok(())
}
