use crate::error::{Error, Result};

/// A sample on the original (positive) scale.
#[derive(Clone, Debug, PartialEq)]
pub struct LogSample {
    values: Vec<f64>,
}

impl LogSample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| **v <= 0.0 || !v.is_finite())
        {
            return Err(Error::NonPositiveValue { index, value });
        }
        if values.len() < 2 {
            return Err(Error::SampleTooSmall { n: values.len() });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Sufficient statistics of a log-transformed sample.
///
/// `s2` uses divisor `n` (the maximum-likelihood variance), not `n - 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogSummary {
    pub n: u64,
    pub ybar: f64,
    pub s2: f64,
}

impl LogSummary {
    pub fn new(n: u64, ybar: f64, s2: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::SampleTooSmall { n: n as usize });
        }
        if !ybar.is_finite() {
            return Err(Error::OutOfRange {
                what: "ybar",
                value: ybar,
            });
        }
        if s2 < 0.0 || !s2.is_finite() {
            return Err(Error::OutOfRange {
                what: "s2",
                value: s2,
            });
        }
        Ok(Self { n, ybar, s2 })
    }

    /// Summary of normal-scale values `ys` that are already logarithms.
    pub fn from_log_values(ys: &[f64]) -> Result<Self> {
        if ys.len() < 2 {
            return Err(Error::SampleTooSmall { n: ys.len() });
        }
        let n = ys.len() as f64;
        let ybar = ys.iter().sum::<f64>() / n;
        let s2 = ys.iter().map(|y| (y - ybar) * (y - ybar)).sum::<f64>() / n;
        Self::new(ys.len() as u64, ybar, s2)
    }

    /// Unbiased (divisor `n - 1`) variance.
    pub fn unbiased_variance(&self) -> f64 {
        self.n as f64 * self.s2 / (self.n - 1) as f64
    }

    pub(crate) fn require_positive_variance(&self, group: u8) -> Result<()> {
        if self.s2 > 0.0 {
            Ok(())
        } else {
            Err(Error::DegenerateVariance { group })
        }
    }
}

pub fn summarize_log(sample: &LogSample) -> LogSummary {
    let ys: Vec<f64> = sample.values().iter().map(|x| x.ln()).collect();
    LogSummary::from_log_values(&ys).expect("LogSample invariants guarantee a valid summary")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::E;

    fn summarize(xs: &[f64]) -> LogSummary {
        summarize_log(&LogSample::new(xs.to_vec()).unwrap())
    }

    #[test]
    fn constant_sample() {
        assert_eq!(
            summarize(&[1.0, 1.0, 1.0]),
            LogSummary {
                n: 3,
                ybar: 0.0,
                s2: 0.0
            }
        );
    }

    #[test]
    fn two_point_sample() {
        let s = summarize(&[1.0, E * E]);
        assert_eq!(s.n, 2);
        assert!((s.ybar - 1.0).abs() < 1e-15);
        assert!((s.s2 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn four_point_sample() {
        let s = summarize(&[E, E, E.powi(3), E.powi(3)]);
        assert_eq!(s.n, 4);
        assert!((s.ybar - 2.0).abs() < 1e-15);
        assert!((s.s2 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_nonpositive_values() {
        assert_eq!(
            LogSample::new(vec![1.0, 0.0, 2.0]),
            Err(Error::NonPositiveValue {
                index: 1,
                value: 0.0
            })
        );
        assert!(matches!(
            LogSample::new(vec![1.0, -3.0]),
            Err(Error::NonPositiveValue { index: 1, .. })
        ));
    }

    #[test]
    fn rejects_short_samples() {
        assert_eq!(
            LogSample::new(vec![2.0]),
            Err(Error::SampleTooSmall { n: 1 })
        );
        assert_eq!(
            LogSummary::new(1, 0.0, 1.0),
            Err(Error::SampleTooSmall { n: 1 })
        );
        assert!(LogSummary::new(3, 0.0, -1.0).is_err());
    }

    #[test]
    fn recomputation_is_exact() {
        let xs = [0.3, 4.0, 17.5, 2.2, 9.9];
        assert_eq!(summarize(&xs), summarize(&xs));
    }

    #[test]
    fn unbiased_variance_conversion() {
        let s = LogSummary::new(26, 0.0, 2.5).unwrap();
        assert!((s.unbiased_variance() - 2.6).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn scaling_shifts_log_mean(
            xs in prop::collection::vec(0.01f64..1000.0, 2..40),
            c in 0.001f64..1000.0,
        ) {
            let base = summarize(&xs);
            let scaled: Vec<f64> = xs.iter().map(|x| x * c).collect();
            let moved = summarize(&scaled);
            prop_assert!((moved.ybar - base.ybar - c.ln()).abs() <= 1e-10);
            prop_assert!((moved.s2 - base.s2).abs() <= 1e-9 * (1.0 + base.s2));
        }
    }
}
