//! Tests for comparing the means of two log-normal populations.
//!
//! The centrepiece is a generalized p-value whose distribution is free of the
//! nuisance parameters, computed by Monte Carlo over chi-square pivots. Two
//! baselines (a per-group generalized pivot and a large-sample Z-score) are
//! included, together with a reproducible parallel simulation engine for
//! size and power studies and a command-line front end.

pub mod cli;
pub mod distributions;
pub mod error;
pub mod hypothesis;
pub mod simulation;

pub use distributions::{summarize_log, LogSample, LogSummary, RngStream};
pub use error::{Error, Result};
pub use hypothesis::{
    gp_value, gp_value_quadrature, km_gp_value, zhou_z_value, Alternative, McSettings, Method,
    PValueResult, TestRequest,
};
pub use simulation::{run_grid, run_scenario, ExperimentConfig, ExperimentResult, Scenario};
