//! Tests for `H0: M1 <= M2` against `H1: M1 > M2` (or the two-sided
//! `M1 != M2`), where `Mi = exp(mu_i + sigma_i^2 / 2)` is the mean of
//! log-normal population `i`.
//!
//! Three methods are provided:
//!
//! * [`gp_value`]: the generalized p-value
//!
//!   ```text
//!   p = E[ Phi( (y2 - y1 + n2 s2^2 / (2 U2) - n1 s1^2 / (2 U1)) / sqrt(s1^2 / U1 + s2^2 / U2) ) ]
//!   ```
//!
//!   with independent `Ui ~ chi2(ni - 1)`, estimated by Monte Carlo.
//! * [`km_gp_value`]: the per-group generalized pivot baseline. It has the same
//!   exact value as `gp_value` but draws its own pivots.
//! * [`zhou_z_value`]: the deterministic large-sample Z-score baseline.
//!
//! [`gp_value_quadrature`] evaluates the same expectation as `gp_value` by
//! numerical integration and serves as an oracle for the Monte Carlo path.

mod generalized;
mod km;
mod monte_carlo;
mod quadrature;
mod zscore;

use std::fmt;
use std::str::FromStr;

use crate::distributions::LogSummary;
use crate::error::{Error, Result};

pub use generalized::{
    draw_pivots, generalized_variable, gp_value, mean_phi, phi_argument, two_sided_adjust,
    PhiArgument,
};
pub use km::{km_conditional_probability, km_gp_value};
pub use quadrature::gp_value_quadrature;
pub use zscore::{zhou_z_statistic, zhou_z_value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alternative {
    /// `H1: M1 > M2`
    Greater,
    /// `H1: M1 != M2`
    TwoSided,
}

impl Alternative {
    pub fn as_str(self) -> &'static str {
        match self {
            Alternative::Greater => "greater",
            Alternative::TwoSided => "two_sided",
        }
    }
}

impl fmt::Display for Alternative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Alternative {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "greater" => Ok(Alternative::Greater),
            "two_sided" | "two-sided" => Ok(Alternative::TwoSided),
            other => Err(format!(
                "unknown alternative '{other}' (expected greater or two_sided)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Gpv,
    Km,
    ZScore,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Gpv, Method::Km, Method::ZScore];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Gpv => "gpv",
            Method::Km => "km",
            Method::ZScore => "zscore",
        }
    }

    pub fn is_monte_carlo(self) -> bool {
        !matches!(self, Method::ZScore)
    }

    pub fn run(self, request: &TestRequest, settings: &McSettings) -> Result<PValueResult> {
        match self {
            Method::Gpv => gp_value(request, settings),
            Method::Km => km_gp_value(request, settings),
            Method::ZScore => zhou_z_value(request),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "gpv" | "a" => Ok(Method::Gpv),
            "km" | "b" => Ok(Method::Km),
            "zscore" | "c" => Ok(Method::ZScore),
            other => Err(format!(
                "unknown method '{other}' (expected gpv, km or zscore)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TestRequest {
    pub group1: LogSummary,
    pub group2: LogSummary,
    pub alternative: Alternative,
}

impl TestRequest {
    pub fn new(group1: LogSummary, group2: LogSummary, alternative: Alternative) -> Result<Self> {
        let request = Self {
            group1,
            group2,
            alternative,
        };
        request.validate()?;
        Ok(request)
    }

    pub fn validate(&self) -> Result<()> {
        self.group1.require_positive_variance(1)?;
        self.group2.require_positive_variance(2)
    }

    /// The same request with the groups exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            group1: self.group2,
            group2: self.group1,
            alternative: self.alternative,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct McSettings {
    /// Monte Carlo replicates.
    pub m: u64,
    pub seed: u64,
}

impl McSettings {
    pub fn new(m: u64, seed: u64) -> Result<Self> {
        let settings = Self { m, seed };
        settings.validate()?;
        Ok(settings)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 1 {
            return Err(Error::InvalidSettings("m must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PValueResult {
    pub estimate: f64,
    /// Monte Carlo standard error; exactly zero for deterministic methods.
    pub mc_se: f64,
    pub m: u64,
    pub method: Method,
}

/// Applies the requested alternative to a one-sided p-value and its standard
/// error. Two-sided results use `2 min(p, 1 - p)` with twice the one-sided SE.
fn finish(
    one_sided: f64,
    se: f64,
    m: u64,
    method: Method,
    alternative: Alternative,
) -> Result<PValueResult> {
    let one_sided = one_sided.clamp(0.0, 1.0);
    let (estimate, mc_se) = match alternative {
        Alternative::Greater => (one_sided, se),
        Alternative::TwoSided => (two_sided_adjust(one_sided)?, 2.0 * se),
    };
    Ok(PValueResult {
        estimate,
        mc_se,
        m,
        method,
    })
}
