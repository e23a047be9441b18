use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precision error: need {needed} known coefficients, have {available}")]
    Precision { needed: usize, available: usize },

    #[error("composition requires an inner series with zero constant term")]
    Composition,

    #[error("series is not invertible: {0}")]
    NotInvertible(&'static str),

    #[error("A-sequence too short: need {needed} entries, have {got}")]
    Length { needed: usize, got: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("vertex {vertex} out of range 1..={order}")]
    VertexRange { vertex: usize, order: usize },

    #[error("graph is disconnected: no path between {u} and {v}")]
    Disconnected { u: usize, v: usize },

    #[error("io coloring is improper: adjacent vertices {u} and {v} share color {color}")]
    IoViolation { u: usize, v: usize, color: usize },

    #[error("order {order} exceeds the configured cap {cap}")]
    Scale { order: usize, cap: usize },

    #[error("estimated work {estimate} vertex visits exceeds budget {budget}")]
    Budget { estimate: u128, budget: u128 },

    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
