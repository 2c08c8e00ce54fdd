//! Deterministic evaluation of `E[Phi(arg(U1, U2))]` by tensor-product
//! composite Simpson integration over the two chi-square densities.
//!
//! Each density is integrated in `t = sqrt(u)`, where the df = 1 singularity
//! at the origin disappears. The range `u in (eps, df + 40 sqrt(2 df)]` is
//! covered and the weights are renormalised to sum to one.

use rayon::prelude::*;

use super::{two_sided_adjust, Alternative, PhiArgument, TestRequest};
use crate::distributions::{chi_square_ln_pdf, std_normal_cdf};
use crate::error::{Error, Result};

const MIN_GRID: usize = 64;
const MAX_GRID: usize = 8192;
const TOLERANCE: f64 = 1e-4;
const LOWER_U: f64 = 1e-12;

struct Rule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

fn chi_square_rule(df: f64, intervals: usize) -> Rule {
    let lo = LOWER_U.sqrt();
    let hi = (df + 40.0 * (2.0 * df).sqrt()).sqrt();
    let h = (hi - lo) / intervals as f64;
    let mut nodes = Vec::with_capacity(intervals + 1);
    let mut weights = Vec::with_capacity(intervals + 1);
    for i in 0..=intervals {
        let t = lo + i as f64 * h;
        let simpson = if i == 0 || i == intervals {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let u = t * t;
        // du = 2 t dt
        weights.push(simpson * (chi_square_ln_pdf(u, df).exp() * 2.0 * t));
        nodes.push(u);
    }
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);
    Rule { nodes, weights }
}

fn one_sided_at(arg: &PhiArgument, df1: f64, df2: f64, grid: usize) -> f64 {
    let r1 = chi_square_rule(df1, grid);
    let r2 = chi_square_rule(df2, grid);
    let rows: Vec<f64> = r1
        .nodes
        .par_iter()
        .zip(r1.weights.par_iter())
        .map(|(&u1, &w1)| {
            if w1 == 0.0 {
                return 0.0;
            }
            let inner: f64 = r2
                .nodes
                .iter()
                .zip(&r2.weights)
                .map(|(&u2, &w2)| w2 * std_normal_cdf(arg.eval(u1, u2)))
                .sum();
            w1 * inner
        })
        .collect();
    rows.iter().sum()
}

/// Quadrature value of the generalized p-value for `request`, starting from
/// `grid_size` intervals per axis and doubling until two successive values
/// differ by less than 1e-4. The alternative is applied as in `gp_value`.
pub fn gp_value_quadrature(request: &TestRequest, grid_size: usize) -> Result<f64> {
    if grid_size < MIN_GRID {
        return Err(Error::InvalidSettings(format!(
            "grid_size must be at least {MIN_GRID}, got {grid_size}"
        )));
    }
    let arg = PhiArgument::new(&request.group1, &request.group2)?;
    let df1 = (request.group1.n - 1) as f64;
    let df2 = (request.group2.n - 1) as f64;
    // Simpson needs an even interval count
    let mut grid = grid_size + grid_size % 2;
    let mut value = one_sided_at(&arg, df1, df2, grid);
    loop {
        let finer = one_sided_at(&arg, df1, df2, 2 * grid);
        let change = (finer - value).abs();
        if change < TOLERANCE {
            value = finer.clamp(0.0, 1.0);
            break;
        }
        if 2 * grid >= MAX_GRID {
            return Err(Error::QuadratureNotConverged {
                grid_size: grid,
                change,
            });
        }
        grid *= 2;
        value = finer;
    }
    match request.alternative {
        Alternative::Greater => Ok(value),
        Alternative::TwoSided => two_sided_adjust(value),
    }
}
