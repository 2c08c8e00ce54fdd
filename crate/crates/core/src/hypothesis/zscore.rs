//! Large-sample Z-score baseline (Cox-type statistic on unbiased variances).

use super::{finish, Method, PValueResult, TestRequest};
use crate::distributions::std_normal_cdf;
use crate::error::{Error, Result};

/// `Z = (y1 - y2 + (v1 - v2)/2) / sqrt(v1/n1 + v2/n2 + v1^2/(2(n1-1)) + v2^2/(2(n2-1)))`
/// with unbiased variances `v_i = n_i s_i^2 / (n_i - 1)`.
pub fn zhou_z_statistic(request: &TestRequest) -> Result<f64> {
    let (g1, g2) = (&request.group1, &request.group2);
    if g1.n < 2 || g2.n < 2 {
        return Err(Error::SampleTooSmall {
            n: g1.n.min(g2.n) as usize,
        });
    }
    request.validate()?;
    let (n1, n2) = (g1.n as f64, g2.n as f64);
    let (v1, v2) = (g1.unbiased_variance(), g2.unbiased_variance());
    let num = g1.ybar - g2.ybar + 0.5 * (v1 - v2);
    let var = v1 / n1 + v2 / n2 + v1 * v1 / (2.0 * (n1 - 1.0)) + v2 * v2 / (2.0 * (n2 - 1.0));
    Ok(num / var.sqrt())
}

/// Deterministic, so `mc_se = 0` and `m = 0`.
pub fn zhou_z_value(request: &TestRequest) -> Result<PValueResult> {
    let z = zhou_z_statistic(request)?;
    // upper tail as Phi(-z) keeps precision for large z
    finish(
        std_normal_cdf(-z),
        0.0,
        0,
        Method::ZScore,
        request.alternative,
    )
}
