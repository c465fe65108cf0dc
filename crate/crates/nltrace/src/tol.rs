//! Numeric tolerances used across the crate.
//!
//! Every constant is calibrated for matrix entries up to about 1e3 and
//! dimensions up to 256. Exact float comparison is used wherever a value
//! is produced by pure max/min arithmetic; the constants below cover the
//! paths that pass through the eigensolver.

/// Per-component bound for accepting a matrix as Hermitian on input.
pub const HERMITIAN_ENTRY: f64 = 1e-12;

/// Jacobi convergence target factor: off-diagonal Frobenius mass must drop
/// below this times (Frobenius norm + 1).
pub const JACOBI_OFF_FACTOR: f64 = 1e-13;

/// Off-diagonal mass above which hitting the sweep cap is an error.
pub const JACOBI_OFF_ACCEPT: f64 = 1e-9;

/// Hard cap on Jacobi sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues of a nominally PSD matrix may round below zero by at most
/// this factor times (1 + operator norm); anything lower is an error,
/// anything in between is clamped to zero.
pub const PSD_FLOOR_FACTOR: f64 = 1e-9;

/// Eigenvalues at or below this are treated as zero rank in the
/// contraction construction.
pub const RANK_FLOOR: f64 = 1e-12;

/// Agreement required between the two evaluation formulas of the
/// Choquet-type trace (scaled by 1 + magnitude).
pub const DUAL_FORM_AGREEMENT: f64 = 1e-10;

/// Slack for prefix-sum comparisons in majorization verdicts.
pub const PREFIX_SUM: f64 = 1e-10;

/// Slack for eigenvalue domination checks.
pub const EIGEN_DOMINATION_SLACK: f64 = 1e-9;

/// Allowed excess over 1 for the operator norm of a constructed contraction.
pub const CONTRACTION_NORM_SLACK: f64 = 1e-9;

/// Relative residual bound for the factorization a = c b c*.
pub const FACTORIZATION_RESIDUAL: f64 = 1e-7;

/// A triangle-inequality violation only counts with at least this margin.
pub const COUNTEREXAMPLE_MARGIN: f64 = 1e-9;

/// Nearest-point matching radius when applying a spectrum function.
pub const SPECTRUM_LOOKUP: f64 = 1e-9;

/// Largest matrix dimension accepted from files or flags.
pub const MAX_DIM: usize = 256;

/// Largest ground-set size for exhaustive measure tables.
pub const MAX_GROUND: usize = 12;
