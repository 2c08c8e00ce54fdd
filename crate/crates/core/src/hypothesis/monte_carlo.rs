use rayon::prelude::*;

use crate::distributions::{hash64, RngStream};

/// Terms per substream. The split of the replicate loop depends only on `m`,
/// so estimates do not depend on how many threads run the chunks.
pub(crate) const CHUNK: u64 = 1 << 16;

/// Running mean and sum of squared deviations (Welford), mergeable in a fixed
/// order (Chan et al.).
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct MeanAccumulator {
    count: u64,
    mean: f64,
    m2: f64,
}

impl MeanAccumulator {
    #[inline]
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    pub fn merge(self, other: Self) -> Self {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let delta = other.mean - self.mean;
        let w = other.count as f64 / count as f64;
        Self {
            count,
            mean: self.mean + delta * w,
            m2: self.m2 + other.m2 + delta * delta * self.count as f64 * w,
        }
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Sample standard deviation of the terms divided by sqrt(count).
    pub fn standard_error(&self) -> f64 {
        if self.count < 2 {
            return 0.0;
        }
        let n = self.count as f64;
        (self.m2 / (n - 1.0)).sqrt() / n.sqrt()
    }
}

/// Averages `m` terms produced by `term`, which pulls whatever random numbers
/// it needs from the stream handed to it. Chunk `c` owns stream
/// `(seed, hash64([domain, c]))`.
pub(crate) fn average<F>(m: u64, seed: u64, domain: u64, term: F) -> MeanAccumulator
where
    F: Fn(&mut RngStream) -> f64 + Sync,
{
    let chunks = m.div_ceil(CHUNK);
    let run_chunk = |c: u64| {
        let mut stream = RngStream::new(seed, hash64(&[domain, c]));
        let len = CHUNK.min(m - c * CHUNK);
        let mut acc = MeanAccumulator::default();
        for _ in 0..len {
            acc.push(term(&mut stream));
        }
        acc
    };
    if chunks == 1 {
        return run_chunk(0);
    }
    let parts: Vec<MeanAccumulator> = (0..chunks).into_par_iter().map(run_chunk).collect();
    parts
        .into_iter()
        .fold(MeanAccumulator::default(), MeanAccumulator::merge)
}
