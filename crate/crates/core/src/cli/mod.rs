//! Command-line front end: `test`, `simulate` and `reproduce`.
//!
//! Exit codes: 0 success, 1 internal error, 2 usage or validation error.

pub mod io;
pub mod reproduce;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::distributions::{summarize_log, LogSummary};
use crate::error::Error;
use crate::hypothesis::{Alternative, McSettings, Method, TestRequest};
use crate::simulation::{run_grid, ExperimentConfig};

pub use reproduce::{rainfall_request, Preset, Scale, RAINFALL_PUBLISHED};

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        CliError::Internal(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Internal(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonPositiveValue { .. }
            | Error::SampleTooSmall { .. }
            | Error::OutOfRange { .. }
            | Error::InvalidDf { .. }
            | Error::DegenerateVariance { .. }
            | Error::InvalidSettings(_) => CliError::Usage(e.to_string()),
            Error::QuadratureNotConverged { .. }
            | Error::Replicate { .. }
            | Error::Scenario { .. } => CliError::Internal(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lognormal-gpv",
    version,
    about = "Compare the means of two log-normal populations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test H0: M1 <= M2 (or M1 = M2) on one data set
    Test(TestArgs),
    /// Estimate size/power of the tests over a scenario grid
    Simulate(SimulateArgs),
    /// Re-run the published rainfall example or simulation tables
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["data", "summary"]))]
struct TestArgs {
    /// CSV file with header "group,value"; the first label seen is group 1
    #[arg(long)]
    data: Option<PathBuf>,
    /// Log-scale summaries n1,ybar1,s2_1,n2,ybar2,s2_2 (variances with divisor n)
    #[arg(
        long,
        value_name = "N1,YBAR1,S2_1,N2,YBAR2,S2_2",
        allow_hyphen_values = true
    )]
    summary: Option<String>,
    #[arg(long, default_value = "gpv", value_parser = parse_method)]
    method: Method,
    #[arg(long, default_value = "greater", value_parser = parse_alternative)]
    alternative: Alternative,
    /// Monte Carlo replicates
    #[arg(long, default_value_t = 100_000)]
    m: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    /// CSV file with header "n1,n2,mu1,mu2,s1sq,s2sq"
    #[arg(long)]
    config: PathBuf,
    #[arg(long, default_value_t = 10_000)]
    reps: u64,
    #[arg(long = "inner-m", default_value_t = 2000)]
    inner_m: u64,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (default: available cores); output does not depend on it
    #[arg(long)]
    threads: Option<usize>,
    /// Comma-separated subset of gpv,km,zscore
    #[arg(long, default_value = "gpv,km,zscore", value_delimiter = ',', value_parser = parse_method)]
    methods: Vec<Method>,
    /// Replace mu2 in every config row
    #[arg(long, allow_hyphen_values = true)]
    mu2: Option<f64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct ReproduceArgs {
    #[arg(value_enum)]
    preset: Preset,
    #[arg(long, value_enum, default_value = "small")]
    scale: Scale,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Monte Carlo replicates for the rainfall preset
    #[arg(long, default_value_t = 1_000_000)]
    m: u64,
    #[arg(long, default_value_t = 10_000)]
    reps: u64,
    #[arg(long = "inner-m", default_value_t = 2000)]
    inner_m: u64,
    #[arg(long)]
    threads: Option<usize>,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

fn parse_alternative(s: &str) -> Result<Alternative, String> {
    s.parse()
}

/// Parses `n1,ybar1,s2_1,n2,ybar2,s2_2`.
pub fn parse_summary_pair(s: &str) -> Result<(LogSummary, LogSummary), CliError> {
    let fields: Vec<&str> = s.split(',').map(str::trim).collect();
    if fields.len() != 6 {
        return Err(CliError::usage(format!(
            "--summary expects 6 comma-separated values, got {}",
            fields.len()
        )));
    }
    let int = |i: usize| {
        fields[i].parse::<u64>().map_err(|_| {
            CliError::usage(format!("--summary: '{}' is not a sample size", fields[i]))
        })
    };
    let real = |i: usize| {
        fields[i]
            .parse::<f64>()
            .map_err(|_| CliError::usage(format!("--summary: '{}' is not a number", fields[i])))
    };
    Ok((
        LogSummary::new(int(0)?, real(1)?, real(2)?)?,
        LogSummary::new(int(3)?, real(4)?, real(5)?)?,
    ))
}

fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    let n = match threads {
        Some(0) => return Err(CliError::usage("--threads must be at least 1")),
        Some(n) => n,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map_err(|e| CliError::internal(format!("cannot start thread pool: {e}")))
}

fn read_text(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

fn cmd_test(args: TestArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (group1, group2) = match (&args.data, &args.summary) {
        (Some(path), None) => {
            let data = io::parse_data(&read_text(path)?)?;
            (
                summarize_log(&data.samples[0]),
                summarize_log(&data.samples[1]),
            )
        }
        (None, Some(s)) => parse_summary_pair(s)?,
        _ => {
            return Err(CliError::usage(
                "exactly one of --data or --summary is required",
            ))
        }
    };
    let request = TestRequest::new(group1, group2, args.alternative)?;
    let settings = McSettings::new(args.m, args.seed)?;
    let result = args.method.run(&request, &settings)?;
    let text = format!(
        "method={}\nalternative={}\np={}\nmc_se={}\nm={}\nseed={}\n",
        result.method,
        args.alternative,
        io::sig6(result.estimate),
        io::sig6(result.mc_se),
        result.m,
        args.seed
    );
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::internal(format!("cannot write output: {e}")))
}

fn cmd_simulate(args: SimulateArgs) -> Result<(), CliError> {
    let scenarios = io::parse_scenarios(&read_text(&args.config)?, args.mu2)?;
    let config = ExperimentConfig {
        reps: args.reps,
        inner_m: args.inner_m,
        alpha: args.alpha,
        seed: args.seed,
        methods: args.methods,
    };
    config.validate()?;
    let results = pool(args.threads)?.install(|| run_grid(&scenarios, &config))?;
    io::write_atomic(&args.out, &io::results_csv(&results))
}

fn cmd_reproduce(args: ReproduceArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let text = match args.preset {
        Preset::Rainfall => reproduce::rainfall(args.m, args.seed)?,
        Preset::Table2 | Preset::Table3 => {
            let config = ExperimentConfig {
                reps: args.reps,
                inner_m: args.inner_m,
                seed: args.seed,
                ..Default::default()
            };
            config.validate()?;
            pool(args.threads)?.install(|| reproduce::table(args.preset, args.scale, &config))?
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::internal(format!("cannot write output: {e}")))
}

/// Runs the command line `args` (including the program name) and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Test(a) => cmd_test(a, out),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Reproduce(a) => cmd_reproduce(a, out),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
