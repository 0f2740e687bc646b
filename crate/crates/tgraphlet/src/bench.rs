//! Timing table: exact wedge counting and wedge sampling over a dataset.

use std::time::Instant;

use tgraphlet_core::approx::SampleConfig;
use tgraphlet_core::{Dataset, Window};

use crate::driver::{approx_dataset, count_dataset, CountSpec, Family};
use crate::Result;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub method: String,
    pub delta: Window,
    pub samples: Option<usize>,
    pub time_ms: f64,
    pub note: String,
}

pub const BENCH_HEADER: &str = "method,delta,s,time_ms,note";

impl BenchRow {
    pub fn to_csv(&self) -> String {
        let s = self.samples.map(|s| s.to_string()).unwrap_or_default();
        format!("{},{},{s},{:.3},{}", self.method, self.delta, self.time_ms, self.note)
    }
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2.0
    }
}

fn timed(reps: usize, mut f: impl FnMut() -> Result<()>) -> Result<f64> {
    let mut times = Vec::with_capacity(reps);
    for _ in 0..reps {
        let start = Instant::now();
        f()?;
        times.push(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(median(times))
}

/// Median wall time of `reps` runs per method.
#[allow(clippy::too_many_arguments)]
pub fn bench_dataset(
    ds: &Dataset,
    delta: Window,
    samples: &[usize],
    reps: usize,
    seed: u64,
    labeled: bool,
    exact: bool,
    pool: &rayon::ThreadPool,
) -> Result<Vec<BenchRow>> {
    let reps = reps.max(1);
    let note = if reps == 1 { "unstable".to_string() } else { format!("median of {reps}") };
    let mut rows = Vec::new();
    if exact {
        let spec = CountSpec::new(Family::Wedge, delta, None, None, labeled, false, false)?;
        let t = timed(reps, || count_dataset(ds, &spec, pool).map(|_| ()))?;
        rows.push(BenchRow { method: "exact-wedge".into(), delta, samples: None, time_ms: t, note: note.clone() });
    }
    for &s in samples {
        let cfg = SampleConfig { labeled, ..SampleConfig::new(s, seed).with_delta(delta) };
        let t = timed(reps, || approx_dataset(ds, &cfg, pool).map(|_| ()))?;
        rows.push(BenchRow { method: "approx".into(), delta, samples: Some(s), time_ms: t, note: note.clone() });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn medians() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
