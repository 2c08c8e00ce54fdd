//! CSV formats: two-group data files, scenario files and simulation output.
//!
//! All formats are UTF-8, comma separated, LF terminated, with `.` as the
//! decimal separator.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use super::CliError;
use crate::distributions::LogSample;
use crate::simulation::{ExperimentResult, Scenario};

pub const DATA_HEADER: &str = "group,value";
pub const SCENARIO_HEADER: &str = "n1,n2,mu1,mu2,s1sq,s2sq";
pub const RESULTS_HEADER: &str = "n1,n2,mu1,mu2,s1sq,s2sq,method,reps,rejections,rate,se";

#[derive(Clone, Debug, PartialEq)]
pub struct TwoGroupData {
    pub labels: [String; 2],
    pub samples: [LogSample; 2],
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn check_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    expected: &str,
    what: &str,
) -> Result<(), CliError> {
    match lines.next() {
        Some((_, h)) if h.split(',').map(str::trim).eq(expected.split(',')) => Ok(()),
        Some((n, h)) => Err(CliError::usage(format!(
            "{what} line {n}: expected header '{expected}', found '{h}'"
        ))),
        None => Err(CliError::usage(format!(
            "{what} is empty; expected header '{expected}'"
        ))),
    }
}

/// Parses a data file. The first label to appear is group 1.
pub fn parse_data(text: &str) -> Result<TwoGroupData, CliError> {
    let mut lines = content_lines(text);
    check_header(&mut lines, DATA_HEADER, "data file")?;
    let mut labels: Vec<String> = Vec::new();
    let mut values: Vec<Vec<f64>> = Vec::new();
    for (n, line) in lines {
        let (label, value) = line.split_once(',').ok_or_else(|| {
            CliError::usage(format!("data file line {n}: expected 'group,value'"))
        })?;
        let (label, value) = (label.trim(), value.trim());
        let value: f64 = value.parse().map_err(|_| {
            CliError::usage(format!("data file line {n}: '{value}' is not a number"))
        })?;
        if value <= 0.0 || !value.is_finite() {
            return Err(CliError::usage(format!(
                "data file line {n}: value {value} is not strictly positive"
            )));
        }
        let slot = match labels.iter().position(|l| l == label) {
            Some(i) => i,
            None => {
                if labels.len() == 2 {
                    return Err(CliError::usage(format!(
                        "data file line {n}: third group label '{label}'; exactly two are required"
                    )));
                }
                labels.push(label.to_string());
                values.push(Vec::new());
                labels.len() - 1
            }
        };
        values[slot].push(value);
    }
    if labels.len() != 2 {
        return Err(CliError::usage(format!(
            "data file has {} group label(s); exactly two are required",
            labels.len()
        )));
    }
    let mut samples = values.into_iter().zip(&labels).map(|(v, label)| {
        LogSample::new(v).map_err(|e| CliError::usage(format!("group '{label}': {e}")))
    });
    let first = samples.next().unwrap()?;
    let second = samples.next().unwrap()?;
    let mut labels = labels.into_iter();
    Ok(TwoGroupData {
        labels: [labels.next().unwrap(), labels.next().unwrap()],
        samples: [first, second],
    })
}

/// Parses a scenario file; `mu2_override` replaces every row's `mu2`.
pub fn parse_scenarios(text: &str, mu2_override: Option<f64>) -> Result<Vec<Scenario>, CliError> {
    let mut lines = content_lines(text);
    check_header(&mut lines, SCENARIO_HEADER, "config")?;
    lines
        .map(|(n, line)| {
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 6 {
                return Err(CliError::usage(format!(
                    "config row {n}: expected 6 fields, found {}",
                    fields.len()
                )));
            }
            let int = |i: usize| {
                fields[i].parse::<u64>().map_err(|_| {
                    CliError::usage(format!(
                        "config row {n}: '{}' is not a sample size",
                        fields[i]
                    ))
                })
            };
            let real = |i: usize| {
                fields[i].parse::<f64>().map_err(|_| {
                    CliError::usage(format!("config row {n}: '{}' is not a number", fields[i]))
                })
            };
            let mu2 = match mu2_override {
                Some(v) => v,
                None => real(3)?,
            };
            Scenario::new(int(0)?, int(1)?, real(2)?, mu2, real(4)?, real(5)?)
                .map_err(|e| CliError::usage(format!("config row {n}: {e}")))
        })
        .collect()
}

/// Six significant digits, plain decimal notation where practical.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-5..=9).contains(&magnitude) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn results_csv(results: &[ExperimentResult]) -> String {
    let mut out = String::from(RESULTS_HEADER);
    out.push('\n');
    for r in results {
        let s = &r.scenario;
        for o in &r.outcomes {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{}",
                s.n1,
                s.n2,
                s.mu1,
                s.mu2,
                s.sigma1_sq,
                s.sigma2_sq,
                o.method,
                r.reps,
                o.rejections,
                sig6(o.rate),
                sig6(o.binom_se)
            )
            .expect("writing to a String cannot fail");
        }
    }
    out
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so the target either keeps its old contents or gets all of the
/// new ones.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| {
        CliError::internal(format!(
            "cannot create temporary file in {}: {e}",
            dir.display()
        ))
    })?;
    tmp.write_all(contents.as_bytes())
        .and_then(|_| tmp.flush())
        .map_err(|e| CliError::internal(format!("cannot write output: {e}")))?;
    tmp.persist(path).map_err(|e| {
        CliError::internal(format!("cannot move output into {}: {e}", path.display()))
    })?;
    Ok(())
}
