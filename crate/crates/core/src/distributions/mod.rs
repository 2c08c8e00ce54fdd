//! Random streams, special functions, samplers and log-scale summaries.

mod rng;
mod sampling;
mod special;
mod summary;

pub use rng::{hash64, mix64, RngStream};
pub use sampling::{chi_square_sample, std_normal_sample, ChiSquareSampler};
pub use special::{chi_square_ln_pdf, lognormal_mean, std_normal_cdf};
pub use summary::{summarize_log, LogSample, LogSummary};
