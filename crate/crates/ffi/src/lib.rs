//! C ABI for `lognormal-gpv`.
//!
//! Conventions:
//! - every fallible call returns an `LngStatus`; `LNG_STATUS_OK` is zero and
//!   errors are negative;
//! - results are written through caller-owned out-pointers, which are left
//!   untouched on error;
//! - random streams and simulation experiments are opaque handles created by
//!   `*_new` and released by the matching `*_free`;
//! - no panic crosses the boundary; one surfaces as `LNG_STATUS_PANIC`.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use lognormal_gpv::distributions::{chi_square_sample, std_normal_cdf, std_normal_sample};
use lognormal_gpv::hypothesis::{self, two_sided_adjust};
use lognormal_gpv::simulation::{self, ExperimentResult};
use lognormal_gpv::{
    Alternative, Error, LogSample, LogSummary, McSettings, Method, RngStream, TestRequest,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LngStatus {
    Ok = 0,
    NullPointer = -1,
    NonPositiveValue = -2,
    SampleTooSmall = -3,
    OutOfRange = -4,
    InvalidDf = -5,
    DegenerateVariance = -6,
    InvalidSettings = -7,
    NotConverged = -8,
    SimulationFailed = -9,
    InvalidArgument = -10,
    Panic = -99,
}

impl From<&Error> for LngStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NonPositiveValue { .. } => LngStatus::NonPositiveValue,
            Error::SampleTooSmall { .. } => LngStatus::SampleTooSmall,
            Error::OutOfRange { .. } => LngStatus::OutOfRange,
            Error::InvalidDf { .. } => LngStatus::InvalidDf,
            Error::DegenerateVariance { .. } => LngStatus::DegenerateVariance,
            Error::InvalidSettings(_) => LngStatus::InvalidSettings,
            Error::QuadratureNotConverged { .. } => LngStatus::NotConverged,
            Error::Replicate { .. } | Error::Scenario { .. } => LngStatus::SimulationFailed,
        }
    }
}

/// Values accepted by the `alternative` parameters.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LngAlternative {
    Greater = 0,
    TwoSided = 1,
}

/// Values accepted by the `method` parameters.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LngMethod {
    Gpv = 0,
    Km = 1,
    Zscore = 2,
}

impl From<Method> for LngMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Gpv => LngMethod::Gpv,
            Method::Km => LngMethod::Km,
            Method::ZScore => LngMethod::Zscore,
        }
    }
}

/// Log-scale sufficient statistics; `s2` has divisor `n`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LngSummary {
    pub n: u64,
    pub ybar: f64,
    pub s2: f64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LngPValue {
    pub estimate: f64,
    pub mc_se: f64,
    pub m: u64,
    pub method: LngMethod,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LngScenario {
    pub n1: u64,
    pub n2: u64,
    pub mu1: f64,
    pub mu2: f64,
    pub sigma1_sq: f64,
    pub sigma2_sq: f64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LngOutcome {
    pub rejections: u64,
    pub reps: u64,
    pub rate: f64,
    pub binom_se: f64,
}

/// Opaque random stream.
pub struct LngRng(RngStream);

/// Opaque simulation experiment: a scenario list, a configuration and,
/// after `lng_experiment_run`, the results.
pub struct LngExperiment {
    config: simulation::ExperimentConfig,
    scenarios: Vec<simulation::Scenario>,
    results: Option<Vec<ExperimentResult>>,
}

fn guard(f: impl FnOnce() -> LngStatus) -> LngStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(LngStatus::Panic)
}

fn status_of<T>(r: Result<T, Error>, write: impl FnOnce(T)) -> LngStatus {
    match r {
        Ok(v) => {
            write(v);
            LngStatus::Ok
        }
        Err(e) => LngStatus::from(&e),
    }
}

fn method_arg(code: i32) -> Option<Method> {
    match code {
        0 => Some(Method::Gpv),
        1 => Some(Method::Km),
        2 => Some(Method::ZScore),
        _ => None,
    }
}

fn alternative_arg(code: i32) -> Option<Alternative> {
    match code {
        0 => Some(Alternative::Greater),
        1 => Some(Alternative::TwoSided),
        _ => None,
    }
}

fn summary(s: &LngSummary) -> Result<LogSummary, Error> {
    LogSummary::new(s.n, s.ybar, s.s2)
}

fn request(
    g1: &LngSummary,
    g2: &LngSummary,
    alternative: Alternative,
) -> Result<TestRequest, Error> {
    TestRequest::new(summary(g1)?, summary(g2)?, alternative)
}

fn pvalue(r: hypothesis::PValueResult) -> LngPValue {
    LngPValue {
        estimate: r.estimate,
        mc_se: r.mc_se,
        m: r.m,
        method: r.method.into(),
    }
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn lng_status_message(status: i32) -> *const c_char {
    let msg: &'static [u8] = match status {
        0 => b"ok\0",
        -1 => b"null pointer argument\0",
        -2 => b"value is not strictly positive\0",
        -3 => b"sample size below 2\0",
        -4 => b"argument out of range\0",
        -5 => b"degrees of freedom below 1\0",
        -6 => b"zero log-scale variance\0",
        -7 => b"invalid settings\0",
        -8 => b"numerical integration did not converge\0",
        -9 => b"simulation failed\0",
        -10 => b"invalid argument\0",
        -99 => b"internal panic\0",
        _ => b"unknown status\0",
    };
    msg.as_ptr().cast()
}

#[no_mangle]
pub extern "C" fn lng_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[no_mangle]
pub extern "C" fn lng_std_normal_cdf(x: f64) -> f64 {
    std_normal_cdf(x)
}

/// # Safety
/// `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn lng_two_sided_adjust(p: f64, out: *mut f64) -> LngStatus {
    guard(|| {
        let Some(out) = (unsafe { out.as_mut() }) else {
            return LngStatus::NullPointer;
        };
        status_of(two_sided_adjust(p), |v| *out = v)
    })
}

/// Summarises `len` positive original-scale values.
///
/// # Safety
/// `values` must point to `len` readable doubles; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn lng_summarize_log(
    values: *const f64,
    len: usize,
    out: *mut LngSummary,
) -> LngStatus {
    guard(|| {
        if values.is_null() {
            return LngStatus::NullPointer;
        }
        let Some(out) = (unsafe { out.as_mut() }) else {
            return LngStatus::NullPointer;
        };
        let xs = unsafe { std::slice::from_raw_parts(values, len) };
        status_of(LogSample::new(xs.to_vec()), |sample| {
            let s = lognormal_gpv::summarize_log(&sample);
            *out = LngSummary {
                n: s.n,
                ybar: s.ybar,
                s2: s.s2,
            };
        })
    })
}

/// Runs `method` (an `LngMethod`) on two summaries; `alternative` is an
/// `LngAlternative`. `m` and `seed` are ignored by the
/// deterministic Z-score method.
///
/// # Safety
/// `group1`, `group2` must be valid for reads and `out` for a write.
#[no_mangle]
pub unsafe extern "C" fn lng_test(
    method: i32,
    group1: *const LngSummary,
    group2: *const LngSummary,
    alternative: i32,
    m: u64,
    seed: u64,
    out: *mut LngPValue,
) -> LngStatus {
    guard(|| {
        let (Some(g1), Some(g2), Some(out)) = (
            unsafe { group1.as_ref() },
            unsafe { group2.as_ref() },
            unsafe { out.as_mut() },
        ) else {
            return LngStatus::NullPointer;
        };
        let (Some(method), Some(alternative)) = (method_arg(method), alternative_arg(alternative))
        else {
            return LngStatus::InvalidArgument;
        };
        let run = || {
            let req = request(g1, g2, alternative)?;
            match method {
                Method::ZScore => hypothesis::zhou_z_value(&req),
                _ => method.run(&req, &McSettings::new(m, seed)?),
            }
        };
        status_of(run(), |r| *out = pvalue(r))
    })
}

/// Quadrature value of the generalized p-value.
///
/// # Safety
/// `group1`, `group2` must be valid for reads and `out` for a write.
#[no_mangle]
pub unsafe extern "C" fn lng_gp_value_quadrature(
    group1: *const LngSummary,
    group2: *const LngSummary,
    alternative: i32,
    grid_size: usize,
    out: *mut f64,
) -> LngStatus {
    guard(|| {
        let (Some(g1), Some(g2), Some(out)) = (
            unsafe { group1.as_ref() },
            unsafe { group2.as_ref() },
            unsafe { out.as_mut() },
        ) else {
            return LngStatus::NullPointer;
        };
        let Some(alternative) = alternative_arg(alternative) else {
            return LngStatus::InvalidArgument;
        };
        let run = || hypothesis::gp_value_quadrature(&request(g1, g2, alternative)?, grid_size);
        status_of(run(), |v| *out = v)
    })
}

#[no_mangle]
pub extern "C" fn lng_rng_new(seed: u64, stream_id: u64) -> *mut LngRng {
    Box::into_raw(Box::new(LngRng(RngStream::new(seed, stream_id))))
}

/// # Safety
/// `rng` must be null or a handle from `lng_rng_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lng_rng_free(rng: *mut LngRng) {
    if !rng.is_null() {
        drop(unsafe { Box::from_raw(rng) });
    }
}

/// # Safety
/// `rng` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn lng_rng_chi_square(rng: *mut LngRng, df: u64, out: *mut f64) -> LngStatus {
    guard(|| {
        let (Some(rng), Some(out)) = (unsafe { rng.as_mut() }, unsafe { out.as_mut() }) else {
            return LngStatus::NullPointer;
        };
        status_of(chi_square_sample(df, &mut rng.0), |v| *out = v)
    })
}

/// # Safety
/// `rng` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn lng_rng_std_normal(rng: *mut LngRng, out: *mut f64) -> LngStatus {
    guard(|| {
        let (Some(rng), Some(out)) = (unsafe { rng.as_mut() }, unsafe { out.as_mut() }) else {
            return LngStatus::NullPointer;
        };
        *out = std_normal_sample(&mut rng.0);
        LngStatus::Ok
    })
}

/// New experiment running all three methods. Returns null if the settings
/// are invalid.
#[no_mangle]
pub extern "C" fn lng_experiment_new(
    reps: u64,
    inner_m: u64,
    alpha: f64,
    seed: u64,
) -> *mut LngExperiment {
    let config = simulation::ExperimentConfig {
        reps,
        inner_m,
        alpha,
        seed,
        methods: Method::ALL.to_vec(),
    };
    if config.validate().is_err() {
        return std::ptr::null_mut();
    }
    Box::into_raw(Box::new(LngExperiment {
        config,
        scenarios: Vec::new(),
        results: None,
    }))
}

/// # Safety
/// `exp` must be null or a handle from `lng_experiment_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lng_experiment_free(exp: *mut LngExperiment) {
    if !exp.is_null() {
        drop(unsafe { Box::from_raw(exp) });
    }
}

/// Appends a scenario and discards any previous results.
///
/// # Safety
/// `exp` must be a live handle and `scenario` valid for a read.
#[no_mangle]
pub unsafe extern "C" fn lng_experiment_add_scenario(
    exp: *mut LngExperiment,
    scenario: *const LngScenario,
) -> LngStatus {
    guard(|| {
        let (Some(exp), Some(s)) = (unsafe { exp.as_mut() }, unsafe { scenario.as_ref() }) else {
            return LngStatus::NullPointer;
        };
        status_of(
            simulation::Scenario::new(s.n1, s.n2, s.mu1, s.mu2, s.sigma1_sq, s.sigma2_sq),
            |s| {
                exp.scenarios.push(s);
                exp.results = None;
            },
        )
    })
}

/// Runs every scenario on the global thread pool.
///
/// # Safety
/// `exp` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lng_experiment_run(exp: *mut LngExperiment) -> LngStatus {
    guard(|| {
        let Some(exp) = (unsafe { exp.as_mut() }) else {
            return LngStatus::NullPointer;
        };
        let results = simulation::run_grid(&exp.scenarios, &exp.config);
        status_of(results, |r| exp.results = Some(r))
    })
}

/// Outcome of `method` in scenario `index` (insertion order) after a run.
///
/// # Safety
/// `exp` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn lng_experiment_outcome(
    exp: *const LngExperiment,
    index: usize,
    method: i32,
    out: *mut LngOutcome,
) -> LngStatus {
    guard(|| {
        let (Some(exp), Some(out)) = (unsafe { exp.as_ref() }, unsafe { out.as_mut() }) else {
            return LngStatus::NullPointer;
        };
        let Some(result) = exp.results.as_ref().and_then(|r| r.get(index)) else {
            return LngStatus::InvalidArgument;
        };
        let Some(method) = method_arg(method) else {
            return LngStatus::InvalidArgument;
        };
        match result.outcome(method) {
            Some(o) => {
                *out = LngOutcome {
                    rejections: o.rejections,
                    reps: result.reps,
                    rate: o.rate,
                    binom_se: o.binom_se,
                };
                LngStatus::Ok
            }
            None => LngStatus::InvalidArgument,
        }
    })
}
