//! Empirical size and power of the tests.
//!
//! Every replicate draws two normal samples on the log scale, summarises
//! them, and runs each selected method one-sided (`H1: M1 > M2`) on the same
//! data. Replicate `r` of scenario `i` takes its data from stream
//! `(seed, hash64([DATA, i, r]))` and its inner Monte Carlo seed from
//! `hash64([seed, i, r])`, so results are bitwise identical for any thread
//! count. Rejection counts are integers, so their parallel sum is exact.

mod tables;

use rayon::prelude::*;

use crate::distributions::{hash64, lognormal_mean, std_normal_sample, LogSummary, RngStream};
use crate::error::{Error, Result};
use crate::hypothesis::{Alternative, McSettings, Method, TestRequest};

pub use tables::{table2, table3, PublishedRow, PUBLISHED_REPS};

const DATA_DOMAIN: u64 = 0x6461_7461;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Scenario {
    pub n1: u64,
    pub n2: u64,
    pub mu1: f64,
    pub mu2: f64,
    pub sigma1_sq: f64,
    pub sigma2_sq: f64,
}

impl Scenario {
    pub fn new(
        n1: u64,
        n2: u64,
        mu1: f64,
        mu2: f64,
        sigma1_sq: f64,
        sigma2_sq: f64,
    ) -> Result<Self> {
        let s = Self {
            n1,
            n2,
            mu1,
            mu2,
            sigma1_sq,
            sigma2_sq,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n1 < 2 || self.n2 < 2 {
            return Err(Error::SampleTooSmall {
                n: self.n1.min(self.n2) as usize,
            });
        }
        for (what, v) in [("mu1", self.mu1), ("mu2", self.mu2)] {
            if !v.is_finite() {
                return Err(Error::OutOfRange { what, value: v });
            }
        }
        for (what, v) in [("sigma1_sq", self.sigma1_sq), ("sigma2_sq", self.sigma2_sq)] {
            if v <= 0.0 || !v.is_finite() {
                return Err(Error::OutOfRange { what, value: v });
            }
        }
        Ok(())
    }

    /// `ln M1 - ln M2`.
    pub fn log_mean_difference(&self) -> f64 {
        (self.mu1 + 0.5 * self.sigma1_sq) - (self.mu2 + 0.5 * self.sigma2_sq)
    }

    /// True population means `(M1, M2)`.
    pub fn means(&self) -> Result<(f64, f64)> {
        Ok((
            lognormal_mean(self.mu1, self.sigma1_sq)?,
            lognormal_mean(self.mu2, self.sigma2_sq)?,
        ))
    }

    /// A size scenario has equal population means; anything else measures power.
    pub fn is_size(&self) -> bool {
        let a = self.mu1 + 0.5 * self.sigma1_sq;
        let b = self.mu2 + 0.5 * self.sigma2_sq;
        (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub reps: u64,
    pub inner_m: u64,
    pub alpha: f64,
    pub seed: u64,
    pub methods: Vec<Method>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            reps: 10_000,
            inner_m: 2000,
            alpha: 0.05,
            seed: 0,
            methods: Method::ALL.to_vec(),
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.reps < 1 {
            return Err(Error::InvalidSettings("reps must be at least 1".into()));
        }
        if self.inner_m < 1 {
            return Err(Error::InvalidSettings("inner_m must be at least 1".into()));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::InvalidSettings(format!(
                "alpha must lie in (0, 1), got {}",
                self.alpha
            )));
        }
        if self.methods.is_empty() {
            return Err(Error::InvalidSettings("no methods selected".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MethodOutcome {
    pub method: Method,
    pub rejections: u64,
    pub rate: f64,
    /// `sqrt(rate (1 - rate) / reps)`
    pub binom_se: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentResult {
    pub scenario: Scenario,
    pub reps: u64,
    pub outcomes: Vec<MethodOutcome>,
}

impl ExperimentResult {
    pub fn outcome(&self, method: Method) -> Option<&MethodOutcome> {
        self.outcomes.iter().find(|o| o.method == method)
    }

    pub fn rate(&self, method: Method) -> Option<f64> {
        self.outcome(method).map(|o| o.rate)
    }
}

fn draw_log_summary(n: u64, mu: f64, sigma_sq: f64, stream: &mut RngStream) -> Result<LogSummary> {
    let sd = sigma_sq.sqrt();
    let ys: Vec<f64> = (0..n)
        .map(|_| mu + sd * std_normal_sample(stream))
        .collect();
    LogSummary::from_log_values(&ys)
}

fn run_replicate(
    index: u64,
    replicate: u64,
    scenario: &Scenario,
    config: &ExperimentConfig,
) -> Result<Vec<bool>> {
    let mut data = RngStream::new(config.seed, hash64(&[DATA_DOMAIN, index, replicate]));
    let g1 = draw_log_summary(scenario.n1, scenario.mu1, scenario.sigma1_sq, &mut data)?;
    let g2 = draw_log_summary(scenario.n2, scenario.mu2, scenario.sigma2_sq, &mut data)?;
    let request = TestRequest::new(g1, g2, Alternative::Greater)?;
    let settings = McSettings::new(config.inner_m, hash64(&[config.seed, index, replicate]))?;
    config
        .methods
        .iter()
        .map(|method| Ok(method.run(&request, &settings)?.estimate <= config.alpha))
        .collect()
}

fn run_indexed(
    index: u64,
    scenario: &Scenario,
    config: &ExperimentConfig,
) -> Result<ExperimentResult> {
    config.validate()?;
    scenario.validate()?;
    let k = config.methods.len();
    let decisions: Vec<Result<Vec<bool>>> = (0..config.reps)
        .into_par_iter()
        .map(|r| run_replicate(index, r, scenario, config))
        .collect();
    let mut counts = vec![0u64; k];
    for (r, decision) in decisions.into_iter().enumerate() {
        let rejected = decision.map_err(|e| Error::Replicate {
            replicate: r,
            source: Box::new(e),
        })?;
        for (count, hit) in counts.iter_mut().zip(rejected) {
            *count += u64::from(hit);
        }
    }
    let reps = config.reps as f64;
    let outcomes = config
        .methods
        .iter()
        .zip(counts)
        .map(|(&method, rejections)| {
            let rate = rejections as f64 / reps;
            MethodOutcome {
                method,
                rejections,
                rate,
                binom_se: (rate * (1.0 - rate) / reps).sqrt(),
            }
        })
        .collect();
    Ok(ExperimentResult {
        scenario: *scenario,
        reps: config.reps,
        outcomes,
    })
}

pub fn run_scenario(scenario: &Scenario, config: &ExperimentConfig) -> Result<ExperimentResult> {
    run_indexed(0, scenario, config)
}

/// Runs every scenario; scenario `i` is seeded as index `i`, so the first
/// entry reproduces `run_scenario` exactly. Errors carry the scenario index.
pub fn run_grid(
    scenarios: &[Scenario],
    config: &ExperimentConfig,
) -> Result<Vec<ExperimentResult>> {
    let results: Vec<Result<ExperimentResult>> = scenarios
        .par_iter()
        .enumerate()
        .map(|(i, s)| run_indexed(i as u64, s, config))
        .collect();
    results
        .into_iter()
        .enumerate()
        .map(|(index, r)| {
            r.map_err(|e| Error::Scenario {
                index,
                source: Box::new(e),
            })
        })
        .collect()
}
