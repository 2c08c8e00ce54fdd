//! Checks shared by the property suite and the acceptance suite. Each returns
//! a short detail line on success and a description of the violation on
//! failure.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use lognormal_gpv::distributions::RngStream;
use lognormal_gpv::hypothesis::{
    draw_pivots, generalized_variable, gp_value, gp_value_quadrature, km_gp_value, mean_phi,
};
use lognormal_gpv::{Alternative, LogSummary, McSettings, TestRequest};

pub type Check = Result<String, String>;

pub fn summary(n: u64, ybar: f64, s2: f64) -> LogSummary {
    LogSummary::new(n, ybar, s2).unwrap()
}

pub fn greater(g1: LogSummary, g2: LogSummary) -> TestRequest {
    TestRequest::new(g1, g2, Alternative::Greater).unwrap()
}

fn uniform(s: &mut RngStream, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * s.uniform_open()
}

fn random_summary(s: &mut RngStream) -> LogSummary {
    let n = 2 + (s.uniform_open() * 60.0) as u64;
    summary(n, uniform(s, -3.0, 6.0), uniform(s, 0.05, 8.0))
}

/// Substituting the observed statistics for the random ones makes the
/// generalized variable vanish whatever the population parameters are.
pub fn tobs_identity(count: usize) -> Check {
    let mut s = RngStream::new(101, 0);
    let mut worst = 0.0f64;
    for _ in 0..count {
        let (g1, g2) = (random_summary(&mut s), random_summary(&mut s));
        let (mu1, mu2) = (uniform(&mut s, -5.0, 5.0), uniform(&mut s, -5.0, 5.0));
        let (v1, v2) = (uniform(&mut s, 0.05, 10.0), uniform(&mut s, 0.05, 10.0));
        let (n1, n2) = (g1.n as f64, g2.n as f64);
        let z = (g2.ybar - g1.ybar - (mu2 - mu1)) / (v1 / n1 + v2 / n2).sqrt();
        let u1 = n1 * g1.s2 / v1;
        let u2 = n2 * g2.s2 / v2;
        let theta = (mu1 + 0.5 * v1) - (mu2 + 0.5 * v2);
        let t = generalized_variable(&g1, &g2, theta, z, u1, u2).map_err(|e| e.to_string())?;
        worst = worst.max(t.abs());
        if t.abs() > 1e-10 {
            return Err(format!("t_obs = {t:e} for {g1:?} {g2:?}"));
        }
    }
    Ok(format!("{count} instances, max |t_obs| = {worst:.2e}"))
}

/// Exchanging the groups together with their pivots complements the
/// estimate; identical groups sit at 1/2.
pub fn symmetry() -> Check {
    let pairs = [
        (summary(26, 5.134, 2.46), summary(26, 3.990, 2.60)),
        (summary(4, 0.0, 1.0), summary(12, 0.7, 3.0)),
        (summary(10, 1.0, 2.0), summary(10, 1.0, 2.0)),
    ];
    let mut worst = 0.0f64;
    for (g1, g2) in pairs {
        let settings = McSettings::new(50_000, 77).unwrap();
        let pivots = draw_pivots(g1.n, g2.n, &settings).unwrap();
        let swapped: Vec<_> = pivots.iter().map(|&(a, b)| (b, a)).collect();
        let p12 = mean_phi(&g1, &g2, &pivots).unwrap().estimate;
        let p21 = mean_phi(&g2, &g1, &swapped).unwrap().estimate;
        let gap = (p12 + p21 - 1.0).abs();
        worst = worst.max(gap);
        if gap > 1e-12 {
            return Err(format!("p12 + p21 - 1 = {gap:e} for {g1:?} {g2:?}"));
        }
    }
    for (seed, g) in [
        (1, summary(10, 1.0, 2.0)),
        (2, summary(4, -1.0, 0.3)),
        (3, summary(40, 2.0, 6.0)),
    ] {
        let r = gp_value(&greater(g, g), &McSettings::new(100_000, seed).unwrap()).unwrap();
        if (r.estimate - 0.5).abs() > 3.0 * r.mc_se {
            return Err(format!("equal groups gave {} (se {})", r.estimate, r.mc_se));
        }
    }
    Ok(format!(
        "max |p12 + p21 - 1| = {worst:.1e}; equal groups within 3 se of 0.5"
    ))
}

/// Methods (a) and (b) estimate the same quantity.
pub fn method_equivalence(count: usize) -> Check {
    let mut s = RngStream::new(202, 0);
    let mut worst = 0.0f64;
    for i in 0..count {
        let request = greater(random_summary(&mut s), random_summary(&mut s));
        let settings = McSettings::new(20_000, i as u64).unwrap();
        let a = gp_value(&request, &settings).unwrap();
        let b = km_gp_value(&request, &settings).unwrap();
        let bound = 3.0 * (a.mc_se + b.mc_se);
        let gap = (a.estimate - b.estimate).abs();
        if bound > 0.0 {
            worst = worst.max(gap / bound);
        }
        if gap > bound {
            return Err(format!(
                "request {i}: {} vs {} (bound {bound:e})",
                a.estimate, b.estimate
            ));
        }
    }
    Ok(format!(
        "{count} requests, worst gap = {:.2} of the 3 se bound",
        worst
    ))
}

pub fn quadrature_battery() -> Vec<TestRequest> {
    vec![
        greater(summary(4, 0.5, 1.0), summary(4, 0.0, 2.0)),
        greater(summary(10, 1.0, 0.8), summary(10, 0.6, 1.5)),
        greater(summary(25, 0.2, 1.0), summary(25, 0.0, 1.2)),
        greater(summary(4, 1.0, 0.5), summary(25, 0.5, 2.0)),
        greater(summary(10, -0.3, 3.0), summary(25, 0.4, 0.5)),
    ]
}

pub fn quadrature_agreement() -> Check {
    let mut worst = 0.0f64;
    for (i, request) in quadrature_battery().iter().enumerate() {
        let mc = gp_value(
            request,
            &McSettings::new(1_000_000, 500 + i as u64).unwrap(),
        )
        .unwrap();
        let quad = gp_value_quadrature(request, 512).map_err(|e| e.to_string())?;
        let gap = (mc.estimate - quad).abs();
        worst = worst.max(gap);
        if gap > 0.002 {
            return Err(format!("pair {i}: MC {} vs quadrature {quad}", mc.estimate));
        }
    }
    Ok(format!("5 pairs, max |MC - quadrature| = {worst:.2e}"))
}

/// Under common random numbers a larger group-1 log mean lowers every term.
pub fn monotone_in_ybar1() -> Check {
    let settings = McSettings::new(20_000, 31).unwrap();
    for (n1, n2) in [(4u64, 4u64), (10, 25), (26, 26)] {
        let mut previous = f64::INFINITY;
        for step in 0..25 {
            let ybar1 = -1.0 + 0.1 * step as f64;
            let p = gp_value(
                &greater(summary(n1, ybar1, 1.5), summary(n2, 0.0, 1.0)),
                &settings,
            )
            .unwrap()
            .estimate;
            if p >= previous || p.is_nan() {
                return Err(format!(
                    "n = ({n1}, {n2}), ybar1 = {ybar1}: {p} !< {previous}"
                ));
            }
            previous = p;
        }
    }
    Ok("strictly decreasing over 25 steps for 3 size pairs".into())
}

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_lognormal-gpv")
}

pub fn scratch_dir(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

pub fn simulate(config: &Path, out: &Path, extra: &[&str]) -> std::process::Output {
    Command::new(bin())
        .arg("simulate")
        .arg("--config")
        .arg(config)
        .arg("--out")
        .arg(out)
        .args(extra)
        .output()
        .unwrap()
}

pub fn simulate_determinism() -> Check {
    let dir = scratch_dir("determinism");
    let config = dir.join("grid.csv");
    std::fs::write(
        &config,
        "n1,n2,mu1,mu2,s1sq,s2sq\n4,4,1,0,2,4\n25,25,0,0,1,1\n10,10,1,0,1,1\n",
    )
    .unwrap();
    let mut outputs = Vec::new();
    for threads in ["1", "4", "8"] {
        let out = dir.join(format!("out-{threads}.csv"));
        let run = simulate(
            &config,
            &out,
            &[
                "--reps",
                "2000",
                "--inner-m",
                "500",
                "--seed",
                "42",
                "--threads",
                threads,
            ],
        );
        if !run.status.success() {
            return Err(format!(
                "threads {threads}: {}",
                String::from_utf8_lossy(&run.stderr)
            ));
        }
        outputs.push(std::fs::read(&out).unwrap());
    }
    if outputs.windows(2).all(|w| w[0] == w[1]) {
        Ok(format!(
            "{} bytes identical for --threads 1, 4, 8",
            outputs[0].len()
        ))
    } else {
        Err("outputs differ across thread counts".into())
    }
}
