use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("series did not converge after {terms} terms (partial sum {partial_sum})")]
    Convergence { partial_sum: f64, terms: usize },

    #[error("target {target} is below the first local minimum {minimum} and cannot be bracketed")]
    Unbracketable { target: f64, minimum: f64 },

    #[error("quadrature did not reach tolerance (best estimate {estimate})")]
    Quadrature { estimate: f64 },

    #[error("svd of {rows}x{cols} matrix did not converge within {sweeps} sweeps")]
    SvdNoConvergence {
        rows: usize,
        cols: usize,
        sweeps: usize,
    },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("index {index} out of range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
