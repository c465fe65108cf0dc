//! Non-linear traces of Choquet and Sugeno type on PSD Hermitian
//! matrices, the norms they induce, and the machinery to verify (or
//! falsify) their characteristic properties.
//!
//! The two central functionals, for a weight alpha given by increments
//! c_i (alpha(n) = c_1 + ... + c_n) and the decreasing eigenvalue
//! sequence lambda of a PSD matrix, are
//!
//! * the Choquet-type trace `phi_alpha` = sum of c_i lambda_i, and
//! * the Sugeno-type trace `psi_alpha` = max of min(lambda_i, alpha(i)).
//!
//! From these the crate builds weighted Schatten p-norms, Ky Fan norms,
//! the Sugeno norm and its metric ([`norms`]); majorization tests with a
//! constructive contraction factorization ([`majorization`]); witness
//! projections for the Sugeno value ([`traces`]); counterexample search
//! showing exactly when the triangle inequality fails ([`falsify`]);
//! and seeded property suites for all of the above ([`suites`]).
//!
//! Start with the runnable programs under `examples/`; each demonstrates
//! one capability end to end. The `nltrace` binary exposes the same
//! operations as batch subcommands with JSON reports.

pub mod cli;
pub mod error;
pub mod falsify;
pub mod integrals;
pub mod io;
pub mod majorization;
pub mod matrix;
pub mod norms;
pub mod report;
pub mod spectral;
pub mod suites;
pub mod tol;
pub mod traces;
pub mod weights;

pub use error::{Error, Result};
pub use matrix::{ComplexMatrix, HermitianMatrix};
pub use norms::{
    choquet_norm, kyfan_norm, kyfan_pk_norm, operator_norm, schatten_choquet_norm, sugeno_distance,
    sugeno_norm, NormSpec,
};
pub use spectral::{eigenvalue_sequence, eigh, singular_values, EigenSequence};
pub use traces::{observation_projections, phi_alpha, psi_alpha, sugeno_max_oracle};
pub use weights::{MonotoneMeasure, WeightFunction};
