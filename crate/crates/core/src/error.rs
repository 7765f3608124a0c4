use crate::aggregate::StatsError;
use crate::chart::ChartError;
use crate::io::ParseError;
use crate::render::RenderError;

/// Errors raised by the numeric pipeline: scaling, distances, similarity.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimError {
    #[error("chart collection is empty")]
    EmptyCollection,

    #[error("scale constant must be positive and finite, got {0}")]
    NonPositiveScale(f64),

    #[error("metric order must be a finite real >= 1, got {0}")]
    InvalidOrder(f64),

    #[error("vector has no components")]
    EmptyVector,

    #[error("component {index} must be a finite nonnegative number, got {value}")]
    InvalidComponent { index: usize, value: f64 },

    #[error("vectors have different dimensions: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("vectors were scaled by different constants: {left} vs {right}")]
    ScaleMismatch { left: f64, right: f64 },

    #[error("distance must be nonnegative, got {0}")]
    NegativeDistance(f64),

    #[error("distance must be finite, got {0}")]
    NonFiniteDistance(f64),
}

/// Any error the library can produce, with the parse/domain split the
/// CLI exit-code contract relies on.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Chart(#[from] ChartError),

    #[error(transparent)]
    Sim(#[from] SimError),

    #[error(transparent)]
    Stats(#[from] StatsError),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Render(#[from] RenderError),

    #[error("unknown chart name {0:?}")]
    UnknownChart(String),
}

impl Error {
    /// True for malformed-input errors (bad CSV/JSON structure), as opposed
    /// to domain validation failures on well-formed input.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
