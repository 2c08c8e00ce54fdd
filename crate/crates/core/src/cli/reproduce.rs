use std::fmt::Write as _;

use clap::ValueEnum;

use super::io::sig6;
use super::CliError;
use crate::distributions::LogSummary;
use crate::hypothesis::{Alternative, McSettings, Method, PValueResult, TestRequest};
use crate::simulation::{
    run_grid, table2, table3, ExperimentConfig, ExperimentResult, PublishedRow, PUBLISHED_REPS,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Rainfall,
    Table2,
    Table3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    /// Anchor rows only
    Small,
    /// Every row of the table
    Full,
}

/// Published one-sided p-values for the cloud-seeding data, (gpv, km, zscore).
pub const RAINFALL_PUBLISHED: [f64; 3] = [0.0779, 0.0747, 0.0599];

/// Seeded clouds (group 1) against unseeded clouds (group 2), log scale.
pub fn rainfall_request() -> TestRequest {
    TestRequest::new(
        LogSummary {
            n: 26,
            ybar: 5.134,
            s2: 2.46,
        },
        LogSummary {
            n: 26,
            ybar: 3.990,
            s2: 2.60,
        },
        Alternative::Greater,
    )
    .expect("published summaries are valid")
}

pub fn rainfall_results(m: u64, seed: u64) -> Result<Vec<PValueResult>, CliError> {
    let request = rainfall_request();
    let settings = McSettings::new(m, seed)?;
    Method::ALL
        .iter()
        .map(|method| Ok(method.run(&request, &settings)?))
        .collect()
}

pub(super) fn rainfall(m: u64, seed: u64) -> Result<String, CliError> {
    let results = rainfall_results(m, seed)?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "rainfall: seeded (n=26, ybar=5.134, s2=2.46) vs unseeded (n=26, ybar=3.990, s2=2.60)"
    );
    let _ = writeln!(out, "H1: M1 > M2, m = {m}, seed = {seed}");
    let _ = writeln!(
        out,
        "{:<8} {:>10} {:>10} {:>8}",
        "method", "p", "mc_se", "published"
    );
    for (r, published) in results.iter().zip(RAINFALL_PUBLISHED) {
        let _ = writeln!(
            out,
            "{:<8} {:>10} {:>10} {:>8}",
            r.method.as_str(),
            sig6(r.estimate),
            sig6(r.mc_se),
            published
        );
    }
    Ok(out)
}

pub fn preset_rows(preset: Preset, scale: Scale) -> Vec<PublishedRow> {
    let rows = match preset {
        Preset::Table2 => table2(),
        Preset::Table3 => table3(),
        Preset::Rainfall => &[],
    };
    rows.iter()
        .filter(|r| scale == Scale::Full || r.anchor)
        .copied()
        .collect()
}

pub fn run_preset(
    preset: Preset,
    scale: Scale,
    config: &ExperimentConfig,
) -> Result<Vec<(PublishedRow, ExperimentResult)>, CliError> {
    let rows = preset_rows(preset, scale);
    let scenarios: Vec<_> = rows.iter().map(|r| r.scenario).collect();
    let results = run_grid(&scenarios, config)?;
    Ok(rows.into_iter().zip(results).collect())
}

pub(super) fn table(
    preset: Preset,
    scale: Scale,
    config: &ExperimentConfig,
) -> Result<String, CliError> {
    let rows = run_preset(preset, scale, config)?;
    let mut out = String::new();
    let kind = if preset == Preset::Table2 {
        "size"
    } else {
        "power"
    };
    let _ = writeln!(
        out,
        "{kind} at alpha = {}, reps = {}, inner m = {}, seed = {}; published columns are counts/{PUBLISHED_REPS}",
        config.alpha, config.reps, config.inner_m, config.seed
    );
    let _ = write!(
        out,
        "{:>4} {:>4} {:>5} {:>6} {:>6}",
        "n1", "n2", "mu1", "s1sq", "s2sq"
    );
    for m in Method::ALL {
        let _ = write!(out, " {:>9} {:>9}", m.as_str(), "published");
    }
    out.push('\n');
    for (row, result) in &rows {
        let s = &row.scenario;
        let _ = write!(
            out,
            "{:>4} {:>4} {:>5} {:>6} {:>6}",
            s.n1, s.n2, s.mu1, s.sigma1_sq, s.sigma2_sq
        );
        for (m, count) in Method::ALL.iter().zip(row.counts) {
            let observed = result
                .rate(*m)
                .map_or_else(|| "-".to_string(), |r| format!("{r:.4}"));
            let _ = write!(
                out,
                " {:>9} {:>9.4}",
                observed,
                count as f64 / PUBLISHED_REPS as f64
            );
        }
        out.push('\n');
    }
    Ok(out)
}
