use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(
        "value {value} at position {index} is not strictly positive; its logarithm is undefined"
    )]
    NonPositiveValue { index: usize, value: f64 },

    #[error("sample has {n} observation(s); at least 2 are required")]
    SampleTooSmall { n: usize },

    #[error("{what} is out of range: {value}")]
    OutOfRange { what: &'static str, value: f64 },

    #[error("chi-square degrees of freedom must be at least 1, got {df}")]
    InvalidDf { df: u64 },

    #[error("log-scale variance of group {group} is zero; the test statistic is undefined")]
    DegenerateVariance { group: u8 },

    #[error("invalid settings: {0}")]
    InvalidSettings(String),

    #[error("quadrature did not converge: last doubling from {grid_size} changed the value by {change:e}")]
    QuadratureNotConverged { grid_size: usize, change: f64 },

    #[error("replicate {replicate}: {source}")]
    Replicate {
        replicate: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("scenario {index}: {source}")]
    Scenario {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}
