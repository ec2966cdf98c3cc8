use crate::integrals::EvalResult;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter value the library deliberately does not support.
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    /// The quadrature ladder ran out of refinement levels before the error
    /// estimate met the requested tolerance. The best evaluation is attached.
    #[error("precision exhausted: err_bound {:.3e} after {} nodes", best.err_bound, best.nodes_used)]
    PrecisionExhausted { best: EvalResult },

    /// Input data is degenerate (duplicate points, empty grid, ...).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// A sampled grid is too coarse for the requested derivative order.
    #[error("resolution error: {0}")]
    Resolution(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
