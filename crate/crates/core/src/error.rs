use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A named object does not exist for the requested parameters (e.g. `A` when `d = 2`).
    #[error("not defined: {0}")]
    NotDefined(String),

    /// The grid does not resolve the frequency box of an extremizer.
    #[error("insufficient resolution on axis {axis}: {detail}")]
    Resolution { axis: usize, detail: String },

    #[error("quadrature did not converge: achieved {achieved:e}, requested {requested:e}")]
    Quadrature { achieved: f64, requested: f64 },

    #[error("grid of {points} points exceeds the memory budget of {budget}")]
    Budget { points: usize, budget: usize },

    #[error("eigensolver failed: {0}")]
    Eigen(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
