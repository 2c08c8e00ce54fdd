use rand::Rng;
use rand_distr::{ChiSquared, Distribution, StandardNormal};

use super::rng::RngStream;
use crate::error::{Error, Result};

/// Chi-square sampler for a fixed number of degrees of freedom.
///
/// Backed by `rand_distr::ChiSquared` (Marsaglia–Tsang gamma rejection for
/// df > 1, a squared normal for df = 1). Build once and reuse in hot loops.
#[derive(Clone, Copy, Debug)]
pub struct ChiSquareSampler {
    df: u64,
    inner: ChiSquared<f64>,
}

impl ChiSquareSampler {
    pub fn new(df: u64) -> Result<Self> {
        if df < 1 {
            return Err(Error::InvalidDf { df });
        }
        let inner = ChiSquared::new(df as f64).map_err(|_| Error::InvalidDf { df })?;
        Ok(Self { df, inner })
    }

    pub fn df(&self) -> u64 {
        self.df
    }

    /// Strictly positive draw.
    #[inline]
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        loop {
            let u = self.inner.sample(rng);
            if u > 0.0 {
                return u;
            }
        }
    }
}

pub fn chi_square_sample(df: u64, stream: &mut RngStream) -> Result<f64> {
    Ok(ChiSquareSampler::new(df)?.sample(stream))
}

#[inline]
pub fn std_normal_sample(stream: &mut RngStream) -> f64 {
    StandardNormal.sample(stream)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::std_normal_cdf;

    fn moments(xs: &[f64]) -> (f64, f64) {
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / n;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
        (mean, var)
    }

    /// Two-sided asymptotic Kolmogorov critical value at alpha = 0.01.
    const KS_CRIT_01: f64 = 1.6276;

    #[test]
    fn rejects_zero_df() {
        assert_eq!(
            chi_square_sample(0, &mut RngStream::new(1, 1)),
            Err(Error::InvalidDf { df: 0 })
        );
    }

    #[test]
    fn draws_are_positive() {
        let mut s = RngStream::new(9, 0);
        for df in 1..=5 {
            for _ in 0..20_000 {
                assert!(chi_square_sample(df, &mut s).unwrap() > 0.0);
            }
        }
    }

    #[test]
    fn chi_square_moments_df25() {
        let n = 1_000_000;
        let sampler = ChiSquareSampler::new(25).unwrap();
        let mut s = RngStream::new(2024, 11);
        let xs: Vec<f64> = (0..n).map(|_| sampler.sample(&mut s)).collect();
        let (mean, var) = moments(&xs);
        assert!(
            (mean - 25.0).abs() <= 3.0 * (50.0f64 / n as f64).sqrt(),
            "mean {mean}"
        );
        // sd of the sample variance is sqrt((mu4 - sigma^4) / n); for chi-square
        // mu4 = 12k(k + 4) and sigma^4 = 4k^2.
        let k = 25.0;
        let se = ((12.0 * k * (k + 4.0) - 4.0 * k * k) / n as f64).sqrt();
        assert!((var - 50.0).abs() <= 3.0 * se, "var {var}, se {se}");
    }

    #[test]
    fn normal_moments() {
        let n = 1_000_000;
        let mut s = RngStream::new(77, 3);
        let xs: Vec<f64> = (0..n).map(|_| std_normal_sample(&mut s)).collect();
        let (mean, var) = moments(&xs);
        assert!(mean.abs() <= 3e-3, "mean {mean}");
        assert!(
            (var - 1.0).abs() <= 3.0 * (2.0f64 / n as f64).sqrt(),
            "var {var}"
        );
    }

    #[test]
    fn normal_probability_integral_transform_is_uniform() {
        let n = 1_000_000;
        let mut s = RngStream::new(5, 5);
        let mut us: Vec<f64> = (0..n)
            .map(|_| std_normal_cdf(std_normal_sample(&mut s)))
            .collect();
        us.sort_by(f64::total_cmp);
        let nf = n as f64;
        let d = us
            .iter()
            .enumerate()
            .map(|(i, &u)| (u - i as f64 / nf).max((i + 1) as f64 / nf - u))
            .fold(0.0, f64::max);
        assert!(d * nf.sqrt() < KS_CRIT_01, "KS statistic {d}");
    }

    #[test]
    fn chi_square_matches_sum_of_squared_normals() {
        let n = 100_000;
        for df in [1u64, 3, 9] {
            let sampler = ChiSquareSampler::new(df).unwrap();
            let mut s1 = RngStream::new(31, df);
            let mut s2 = RngStream::new(32, df);
            let mut a: Vec<f64> = (0..n).map(|_| sampler.sample(&mut s1)).collect();
            let mut b: Vec<f64> = (0..n)
                .map(|_| (0..df).map(|_| std_normal_sample(&mut s2).powi(2)).sum())
                .collect();
            a.sort_by(f64::total_cmp);
            b.sort_by(f64::total_cmp);
            let d = two_sample_ks(&a, &b);
            let nf = n as f64;
            let crit = KS_CRIT_01 * ((nf + nf) / (nf * nf)).sqrt();
            assert!(d < crit, "df = {df}: D = {d}, crit = {crit}");
        }
    }

    fn two_sample_ks(a: &[f64], b: &[f64]) -> f64 {
        let (mut i, mut j, mut d) = (0usize, 0usize, 0.0f64);
        let (na, nb) = (a.len() as f64, b.len() as f64);
        while i < a.len() && j < b.len() {
            let x = a[i].min(b[j]);
            while i < a.len() && a[i] <= x {
                i += 1;
            }
            while j < b.len() && b[j] <= x {
                j += 1;
            }
            d = d.max((i as f64 / na - j as f64 / nb).abs());
        }
        d
    }
}
