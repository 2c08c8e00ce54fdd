use super::monte_carlo::{self, MeanAccumulator, CHUNK};
use super::{finish, McSettings, Method, PValueResult, TestRequest};
use crate::distributions::{hash64, std_normal_cdf, ChiSquareSampler, LogSummary, RngStream};
use crate::error::{Error, Result};

pub(crate) const GPV_DOMAIN: u64 = 0x6770_7661;

/// The argument of `Phi` inside the generalized p-value expectation, with the
/// data-dependent parts folded once so the Monte Carlo loop only divides by
/// the pivots.
#[derive(Clone, Copy, Debug)]
pub struct PhiArgument {
    shift: f64,
    half_ss1: f64,
    half_ss2: f64,
    s1_sq: f64,
    s2_sq: f64,
}

impl PhiArgument {
    pub fn new(group1: &LogSummary, group2: &LogSummary) -> Result<Self> {
        group1.require_positive_variance(1)?;
        group2.require_positive_variance(2)?;
        Ok(Self {
            shift: group2.ybar - group1.ybar,
            half_ss1: 0.5 * group1.n as f64 * group1.s2,
            half_ss2: 0.5 * group2.n as f64 * group2.s2,
            s1_sq: group1.s2,
            s2_sq: group2.s2,
        })
    }

    /// `(y2 - y1 + n2 s2^2 / (2 u2) - n1 s1^2 / (2 u1)) / sqrt(s1^2 / u1 + s2^2 / u2)`
    #[inline]
    pub fn eval(&self, u1: f64, u2: f64) -> f64 {
        let num = self.shift + self.half_ss2 / u2 - self.half_ss1 / u1;
        let den = (self.s1_sq / u1 + self.s2_sq / u2).sqrt();
        num / den
    }
}

fn check_pivots(u1: f64, u2: f64) -> Result<()> {
    for (what, u) in [("u1", u1), ("u2", u2)] {
        if u <= 0.0 || !u.is_finite() {
            return Err(Error::OutOfRange { what, value: u });
        }
    }
    Ok(())
}

pub fn phi_argument(group1: &LogSummary, group2: &LogSummary, u1: f64, u2: f64) -> Result<f64> {
    check_pivots(u1, u2)?;
    Ok(PhiArgument::new(group1, group2)?.eval(u1, u2))
}

/// The generalized test variable
///
/// ```text
/// T = y1 - y2 + z sqrt(s1^2 / u1 + s2^2 / u2) + n1 s1^2 / (2 u1) - n2 s2^2 / (2 u2) - theta
/// ```
///
/// evaluated at fixed pivot values. Used to check the defining properties of
/// the test variable; p-values go through [`gp_value`].
pub fn generalized_variable(
    group1: &LogSummary,
    group2: &LogSummary,
    theta: f64,
    z: f64,
    u1: f64,
    u2: f64,
) -> Result<f64> {
    check_pivots(u1, u2)?;
    group1.require_positive_variance(1)?;
    group2.require_positive_variance(2)?;
    let (n1, n2) = (group1.n as f64, group2.n as f64);
    let spread = (group1.s2 / u1 + group2.s2 / u2).sqrt();
    Ok(
        group1.ybar - group2.ybar + z * spread + n1 * group1.s2 / (2.0 * u1)
            - n2 * group2.s2 / (2.0 * u2)
            - theta,
    )
}

pub fn two_sided_adjust(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            what: "p-value",
            value: p,
        });
    }
    Ok(2.0 * p.min(1.0 - p))
}

fn samplers(
    group1: &LogSummary,
    group2: &LogSummary,
) -> Result<(ChiSquareSampler, ChiSquareSampler)> {
    Ok((
        ChiSquareSampler::new(group1.n - 1)?,
        ChiSquareSampler::new(group2.n - 1)?,
    ))
}

/// Monte Carlo generalized p-value: the average of `Phi(arg(U1, U2))` over
/// `m` independent pivot pairs `Ui ~ chi2(ni - 1)`.
///
/// The estimate depends only on the two summaries, `m` and the seed.
pub fn gp_value(request: &TestRequest, settings: &McSettings) -> Result<PValueResult> {
    settings.validate()?;
    let arg = PhiArgument::new(&request.group1, &request.group2)?;
    let (chi1, chi2) = samplers(&request.group1, &request.group2)?;
    let acc = monte_carlo::average(settings.m, settings.seed, GPV_DOMAIN, |stream| {
        let u1 = chi1.sample(stream);
        let u2 = chi2.sample(stream);
        std_normal_cdf(arg.eval(u1, u2))
    });
    finish(
        acc.mean(),
        acc.standard_error(),
        settings.m,
        Method::Gpv,
        request.alternative,
    )
}

/// The pivot pairs `(U1, U2)` that [`gp_value`] draws for sample sizes
/// `(n1, n2)` under `settings`, in order.
pub fn draw_pivots(n1: u64, n2: u64, settings: &McSettings) -> Result<Vec<(f64, f64)>> {
    settings.validate()?;
    if n1 < 2 || n2 < 2 {
        return Err(Error::SampleTooSmall {
            n: n1.min(n2) as usize,
        });
    }
    let chi1 = ChiSquareSampler::new(n1 - 1)?;
    let chi2 = ChiSquareSampler::new(n2 - 1)?;
    let mut pivots = Vec::with_capacity(settings.m as usize);
    for c in 0..settings.m.div_ceil(CHUNK) {
        let mut stream = RngStream::new(settings.seed, hash64(&[GPV_DOMAIN, c]));
        for _ in 0..CHUNK.min(settings.m - c * CHUNK) {
            let u1 = chi1.sample(&mut stream);
            let u2 = chi2.sample(&mut stream);
            pivots.push((u1, u2));
        }
    }
    Ok(pivots)
}

/// One-sided generalized p-value averaged over caller-supplied pivot pairs.
pub fn mean_phi(
    group1: &LogSummary,
    group2: &LogSummary,
    pivots: &[(f64, f64)],
) -> Result<PValueResult> {
    let arg = PhiArgument::new(group1, group2)?;
    let mut acc = MeanAccumulator::default();
    for &(u1, u2) in pivots {
        check_pivots(u1, u2)?;
        acc.push(std_normal_cdf(arg.eval(u1, u2)));
    }
    Ok(PValueResult {
        estimate: acc.mean(),
        mc_se: acc.standard_error(),
        m: pivots.len() as u64,
        method: Method::Gpv,
    })
}
