use thiserror::Error;

/// Errors produced by covariance evaluation, sampling and estimation.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error(
        "quadrature did not converge after {subdivisions} subdivisions: \
         achieved abs error {achieved:.3e}, requested {requested:.3e}"
    )]
    QuadratureFailure {
        achieved: f64,
        requested: f64,
        subdivisions: u32,
    },

    #[error(
        "covariance matrix is not positive semidefinite within the jitter cap \
         {jitter_cap:.3e}; most negative eigenvalue estimate {min_eigenvalue:.3e}"
    )]
    NotPositiveSemidefinite {
        min_eigenvalue: f64,
        jitter_cap: f64,
    },

    #[error("spectral tail truncation failed: tail bound {tail_bound:.3e} exceeds tolerance {tolerance:.3e}")]
    TruncationFailure { tail_bound: f64, tolerance: f64 },

    #[error("requested backend is incompatible: {0}")]
    IncompatibleBackend(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("exponent fit needs at least {needed} usable ladder points, got {got}")]
    InsufficientFitPoints { needed: usize, got: usize },

    #[error("i/o: {0}")]
    Io(String),

    #[error("malformed container: {0}")]
    Format(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
