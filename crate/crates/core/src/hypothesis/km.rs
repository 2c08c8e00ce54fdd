//! Per-group generalized pivot baseline.
//!
//! Each log-normal mean gets its own pivotal quantity
//!
//! ```text
//! G_i = y_i - Z_i sqrt(s_i^2 / U_i) + n_i s_i^2 / (2 U_i),   Z_i ~ N(0, 1), U_i ~ chi2(n_i - 1)
//! ```
//!
//! and the one-sided p-value is `P(G_1 - G_2 <= 0)`. Conditional on the
//! chi-square pivots, `Z_1 sqrt(s_1^2/U_1) - Z_2 sqrt(s_2^2/U_2)` is a centred
//! normal with variance `s_1^2/U_1 + s_2^2/U_2`, so the normal pivots are
//! integrated out exactly and only `(U_1, U_2)` are simulated.

use super::monte_carlo;
use super::{finish, McSettings, Method, PValueResult, TestRequest};
use crate::distributions::{std_normal_cdf, ChiSquareSampler, LogSummary};
use crate::error::Result;

pub(crate) const KM_DOMAIN: u64 = 0x6b6d_625f;

/// `P(G_1 - G_2 <= 0 | U_1 = u1, U_2 = u2)`.
pub fn km_conditional_probability(
    group1: &LogSummary,
    group2: &LogSummary,
    u1: f64,
    u2: f64,
) -> f64 {
    let location1 = group1.ybar + group1.n as f64 * group1.s2 / (2.0 * u1);
    let location2 = group2.ybar + group2.n as f64 * group2.s2 / (2.0 * u2);
    let scale = (group1.s2 / u1 + group2.s2 / u2).sqrt();
    std_normal_cdf((location2 - location1) / scale)
}

pub fn km_gp_value(request: &TestRequest, settings: &McSettings) -> Result<PValueResult> {
    settings.validate()?;
    request.validate()?;
    let (g1, g2) = (request.group1, request.group2);
    let chi1 = ChiSquareSampler::new(g1.n - 1)?;
    let chi2 = ChiSquareSampler::new(g2.n - 1)?;
    let acc = monte_carlo::average(settings.m, settings.seed, KM_DOMAIN, |stream| {
        let u1 = chi1.sample(stream);
        let u2 = chi2.sample(stream);
        km_conditional_probability(&g1, &g2, u1, u2)
    });
    finish(
        acc.mean(),
        acc.standard_error(),
        settings.m,
        Method::Km,
        request.alternative,
    )
}
