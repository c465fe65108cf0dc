use thiserror::Error;

/// Crate-wide error type. Variants carry enough context to reconstruct the
/// failing call without a debugger.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} ({context})")]
    DimensionMismatch {
        left: usize,
        right: usize,
        context: &'static str,
    },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:.6e} below floor {floor:.6e}")]
    NotPositive { eigenvalue: f64, floor: f64 },

    #[error("eigensolver did not converge: off-diagonal mass {off_diagonal:.3e} after {sweeps} sweeps at dim {dim}")]
    NoConvergence {
        off_diagonal: f64,
        sweeps: usize,
        dim: usize,
    },

    #[error("ground set of size {ground_size} too large for an exhaustive table (max {max})")]
    GroundTooLarge { ground_size: usize, max: usize },

    #[error("eigenvalue {eigenvalue:.12e} not within {tolerance:.1e} of any point of the spectrum function")]
    SpectrumMismatch { eigenvalue: f64, tolerance: f64 },

    #[error("eigenvalue domination fails at index {index}: {lambda_a:.12e} > {lambda_b:.12e} + slack")]
    NotDominated {
        index: usize,
        lambda_a: f64,
        lambda_b: f64,
    },

    #[error("weight has alpha(1) = {alpha_one:.6e}; a positive first value is required here")]
    AlphaOneZero { alpha_one: f64 },

    #[error("weight is not concave ({context})")]
    NotConcave { context: &'static str },

    #[error("weight is concave; the counterexample family needs a non-concave weight")]
    ConcaveWeight,

    #[error("no counterexample found: {context}")]
    SearchExhausted { context: String },

    #[error("bad spectrum: {context}")]
    BadSpectrum { context: String },

    #[error("index {index} out of range ({context})")]
    IndexOutOfRange { index: usize, context: String },

    #[error("unknown check suite {name:?}; known suites: {known}")]
    UnknownSuite { name: String, known: String },

    #[error("exponent p = {p} out of range; p must be finite and >= 1")]
    InvalidExponent { p: f64 },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code class: 2 usage/parse, 3 math-domain, 1 failed check.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::UnknownSuite { .. } => 2,
            Error::SearchExhausted { .. } => 1,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
