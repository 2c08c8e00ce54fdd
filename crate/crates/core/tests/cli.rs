mod common;

use std::collections::HashMap;
use std::process::{Command, Output};

use common::*;
use lognormal_gpv::distributions::RngStream;
use lognormal_gpv::{summarize_log, LogSample};
use rand_distr::{Distribution, LogNormal};

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn record(out: &Output) -> HashMap<String, String> {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| {
            let (k, v) = l.split_once('=').expect("key=value line");
            (k.to_string(), v.to_string())
        })
        .collect()
}

fn p_of(out: &Output) -> f64 {
    record(out)["p"].parse().unwrap()
}

#[test]
fn rainfall_gpv_from_summary() {
    let out = run(&[
        "test",
        "--summary",
        "26,5.134,2.46,26,3.990,2.60",
        "--method",
        "gpv",
        "--alternative",
        "greater",
        "--m",
        "1000000",
        "--seed",
        "7",
    ]);
    let rec = record(&out);
    assert_eq!(rec["method"], "gpv");
    assert_eq!(rec["alternative"], "greater");
    assert_eq!(rec["m"], "1000000");
    assert_eq!(rec["seed"], "7");
    let p: f64 = rec["p"].parse().unwrap();
    assert!((p - 0.0779).abs() <= 0.005, "{p}");
}

#[test]
fn identical_summaries_give_half_for_zscore() {
    let out = run(&[
        "test",
        "--summary",
        "10,1.0,2.0,10,1.0,2.0",
        "--method",
        "zscore",
        "--alternative",
        "greater",
    ]);
    assert_eq!(p_of(&out), 0.5);
}

#[test]
fn rainfall_zscore() {
    let out = run(&[
        "test",
        "--summary",
        "26,5.134,2.46,26,3.990,2.60",
        "--method",
        "zscore",
    ]);
    let rec = record(&out);
    assert_eq!(rec["p"], "0.0609455");
    assert_eq!(rec["mc_se"], "0");
    assert_eq!(rec["m"], "0");
}

#[test]
fn data_file_matches_its_summary() {
    let mut rng = RngStream::new(8, 8);
    let g1: Vec<f64> = LogNormal::new(1.0, 1.2)
        .unwrap()
        .sample_iter(&mut rng)
        .take(15)
        .collect();
    let g2: Vec<f64> = LogNormal::new(0.4, 0.7)
        .unwrap()
        .sample_iter(&mut rng)
        .take(21)
        .collect();
    let dir = scratch_dir("roundtrip");
    let path = dir.join("data.csv");
    let mut text = String::from("group,value\n");
    for x in &g1 {
        text += &format!("city,{x:?}\n");
    }
    for x in &g2 {
        text += &format!("rural,{x:?}\n");
    }
    std::fs::write(&path, text).unwrap();

    let s1 = summarize_log(&LogSample::new(g1).unwrap());
    let s2 = summarize_log(&LogSample::new(g2).unwrap());
    let summary = format!(
        "{},{:?},{:?},{},{:?},{:?}",
        s1.n, s1.ybar, s1.s2, s2.n, s2.ybar, s2.s2
    );

    for method in ["gpv", "km", "zscore"] {
        for alternative in ["greater", "two_sided"] {
            let common = [
                "--method",
                method,
                "--alternative",
                alternative,
                "--m",
                "30000",
                "--seed",
                "4",
            ];
            let from_data =
                run(&[&["test", "--data", path.to_str().unwrap()][..], &common].concat());
            let from_summary =
                run(&[&["test", "--summary", summary.as_str()][..], &common].concat());
            assert_eq!(
                record(&from_data),
                record(&from_summary),
                "{method} {alternative}"
            );
        }
    }
}

#[test]
fn usage_errors_exit_2_with_one_line() {
    for args in [
        &["test"][..],
        &["test", "--summary", "26,5.1,2.4,26,3.9"],
        &["test", "--summary", "1,5.1,2.4,26,3.9,2.6"],
        &["test", "--summary", "26,5.1,0,26,3.9,2.6"],
        &[
            "test",
            "--summary",
            "26,5.1,2.4,26,3.9,2.6",
            "--method",
            "nope",
        ],
        &["test", "--summary", "26,5.1,2.4,26,3.9,2.6", "--m", "0"],
        &["reproduce", "table9"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let dir = scratch_dir("bad-data");
    let path = dir.join("data.csv");
    std::fs::write(&path, "group,value\na,1.0\na,2.0\nb,3.0\nb,-4.0\n").unwrap();
    let out = run(&["test", "--data", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert_eq!(msg.trim().lines().count(), 1, "{msg}");
}

#[test]
fn empty_config_writes_header_only() {
    let dir = scratch_dir("empty-config");
    let config = dir.join("grid.csv");
    std::fs::write(&config, "n1,n2,mu1,mu2,s1sq,s2sq\n").unwrap();
    let out_path = dir.join("out.csv");
    let out = simulate(&config, &out_path, &[]);
    assert!(out.status.success());
    assert_eq!(
        std::fs::read_to_string(&out_path).unwrap(),
        "n1,n2,mu1,mu2,s1sq,s2sq,method,reps,rejections,rate,se\n"
    );
}

#[test]
fn malformed_row_is_rejected_without_output() {
    let dir = scratch_dir("bad-config");
    let config = dir.join("grid.csv");
    std::fs::write(
        &config,
        "n1,n2,mu1,mu2,s1sq,s2sq\n4,4,0,0,1,1\n4,4,zero,0,1,1\n",
    )
    .unwrap();
    let out_path = dir.join("out.csv");
    let out = simulate(&config, &out_path, &["--reps", "10", "--inner-m", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("row 3"));
    assert!(!out_path.exists());
    // only the config file is left behind
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), 1);
}

#[test]
fn repeated_simulation_is_byte_identical() {
    let dir = scratch_dir("repeat");
    let config = dir.join("grid.csv");
    std::fs::write(&config, "n1,n2,mu1,mu2,s1sq,s2sq\n6,8,0.5,0,1,2\n").unwrap();
    let (a, b) = (dir.join("a.csv"), dir.join("b.csv"));
    let args = [
        "--reps",
        "500",
        "--inner-m",
        "300",
        "--seed",
        "11",
        "--methods",
        "gpv,zscore",
    ];
    assert!(simulate(&config, &a, &args).status.success());
    assert!(simulate(&config, &b, &args).status.success());
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].contains(",gpv,500,"));
    assert!(lines[2].contains(",zscore,500,"));
}

#[test]
fn thread_count_does_not_change_output() {
    simulate_determinism().unwrap();
}

#[test]
fn reproduce_rainfall_prints_all_methods() {
    let out = run(&["reproduce", "rainfall", "--m", "200000"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for needle in ["gpv", "km", "zscore", "0.0779", "0.0747", "0.0599"] {
        assert!(text.contains(needle), "missing {needle} in\n{text}");
    }
}

#[test]
fn help_is_available_for_every_command() {
    for cmd in ["test", "simulate", "reproduce"] {
        let out = run(&[cmd, "--help"]);
        assert!(out.status.success());
        assert!(String::from_utf8_lossy(&out.stdout).contains("Usage"));
    }
}
