//! Wedge sampling.
//!
//! A [`WedgeSampler`] draws a center `v` with probability
//! `p_v = C(d(v), 2) / w`, where `w = Σ_v C(d(v), 2)`, then a pair of its
//! incident edges. Two estimators are built on it:
//!
//! - [`sample_wedges`] draws `s` unordered pairs. In the default mode pairs
//!   that are not wedges (equal times, same far endpoint, outside a bounded
//!   window) are discarded and the result is normalized by the retained
//!   count, which makes it an unbiased estimate of the normalized exact wedge
//!   vector. With `strict` every draw weighs `1/s` and non-wedges go to
//!   an overflow bin.
//! - [`sample_wedges_delta`] draws a first edge, then a second edge among
//!   those `1..=δ` apart in time, and accepts with probability
//!   `|cand(e)| / (d(v) - 1)`. Each ordered draw then has probability
//!   `1 / (2w)`, so accepted pairs are uniform over δ-respecting pairs.

use alloc::format;
use alloc::vec::Vec;

use crate::exact::{edge_labels, effective_alphabet, Tally};
use crate::graphlets::{pattern_key_of, RawKey};
use crate::rng::graph_rng;
use crate::tgraph::{Incidence, NodeId, TemporalGraph, Time, Window};
use crate::{Error, FeatureVector, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleConfig {
    pub sample_size: usize,
    pub delta: Window,
    /// Rejection step of the windowed sampler; off means plain pair draws
    /// filtered by the window.
    pub rejection: bool,
    pub strict: bool,
    pub seed: u64,
    /// Stream of `seed` to draw from, e.g. the graph index in a dataset.
    pub stream: u64,
    pub labeled: bool,
    /// Attempt budget per requested sample for the rejection sampler.
    pub attempt_factor: u64,
}

impl SampleConfig {
    pub fn new(sample_size: usize, seed: u64) -> Self {
        Self {
            sample_size,
            delta: Window::Unbounded,
            rejection: true,
            strict: false,
            seed,
            stream: 0,
            labeled: true,
            attempt_factor: 1000,
        }
    }

    pub fn with_delta(mut self, delta: Window) -> Self {
        self.delta = delta;
        self
    }

    pub fn unlabeled(mut self) -> Self {
        self.labeled = false;
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WedgeSample {
    pub features: FeatureVector,
    /// Weight of draws that are not wedges (strict mode only).
    pub overflow: f64,
    /// Pair draws made, including rejected and discarded ones.
    pub attempts: u64,
    /// Draws that contributed to `features`.
    pub retained: u64,
}

/// Immutable per-graph sampling tables.
pub struct WedgeSampler<'g> {
    g: &'g TemporalGraph,
    incidence: Incidence,
    cumulative: Vec<u64>,
    total: u64,
}

impl<'g> WedgeSampler<'g> {
    pub fn new(g: &'g TemporalGraph) -> Result<Self> {
        let incidence = g.incidence();
        let mut cumulative = Vec::with_capacity(g.num_nodes());
        let mut total = 0u64;
        for v in 0..g.num_nodes() as NodeId {
            let d = incidence.degree(v) as u64;
            total = total
                .checked_add(d * d.saturating_sub(1) / 2)
                .ok_or(Error::Overflow("incident pair count"))?;
            cumulative.push(total);
        }
        if total == 0 {
            return Err(Error::NoWedges);
        }
        Ok(Self { g, incidence, cumulative, total })
    }

    /// `w`, the number of unordered incident edge pairs.
    pub fn total_pairs(&self) -> u64 {
        self.total
    }

    pub fn vertex_weight(&self, v: NodeId) -> u64 {
        let v = v as usize;
        self.cumulative[v] - if v == 0 { 0 } else { self.cumulative[v - 1] }
    }

    pub fn sample_vertex<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> NodeId {
        let r = rng.random_range(0..self.total);
        self.cumulative.partition_point(|&c| c <= r) as NodeId
    }

    /// One unordered incident pair at a `p_v`-sampled center, as edge
    /// indices `(earlier, later)`.
    pub fn draw_pair<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> (NodeId, u32, u32) {
        let v = self.sample_vertex(rng);
        let list = self.incidence.edges_of(v);
        let i = rng.random_range(0..list.len());
        let mut j = rng.random_range(0..list.len() - 1);
        if j >= i {
            j += 1;
        }
        let (a, b) = (list[i.min(j)], list[i.max(j)]);
        (v, a, b)
    }

    /// One attempt of the windowed rejection sampler. Returns the accepted
    /// pair `(center, earlier, later)` or `None` when rejected.
    pub fn draw_delta<R: rand::Rng + ?Sized>(&self, rng: &mut R, delta: Time) -> Option<(NodeId, u32, u32)> {
        let edges = self.g.edges();
        let v = self.sample_vertex(rng);
        let list = self.incidence.edges_of(v);
        let d = list.len();
        let e = list[rng.random_range(0..d)];
        let te = edges[e as usize].time;
        let time = |k: &u32| edges[*k as usize].time;
        let lo = list.partition_point(|k| time(k) < te.saturating_sub(delta));
        let below = list.partition_point(|k| time(k) < te);
        let above = list.partition_point(|k| time(k) <= te);
        let hi = list.partition_point(|k| time(k) <= te.saturating_add(delta));
        let (n_below, n_above) = (below - lo, hi - above);
        let cand = n_below + n_above;
        if cand == 0 || rng.random_range(0..d - 1) >= cand {
            return None;
        }
        let pick = rng.random_range(0..cand);
        let f = if pick < n_below { list[lo + pick] } else { list[above + pick - n_below] };
        Some(if time(&f) < te { (v, f, e) } else { (v, e, f) })
    }
}

/// Whether edges `a` (earlier) and `b` at center `v` form a wedge within
/// the window.
fn is_wedge(g: &TemporalGraph, v: NodeId, a: u32, b: u32, delta: Window) -> bool {
    let (e, f) = (g.edges()[a as usize], g.edges()[b as usize]);
    e.time < f.time && e.other(v) != f.other(v) && delta.admits(f.time - e.time)
}

fn wedge_key(g: &TemporalGraph, labels: &[u32], l2: u64, a: u32, b: u32) -> RawKey {
    let (e, f) = (g.edges()[a as usize], g.edges()[b as usize]);
    let (pattern, _) = pattern_key_of(&[(e.source, e.target), (f.source, f.target)]);
    RawKey { pattern, labels: labels[a as usize] as u64 * l2 + labels[b as usize] as u64 }
}

/// Sampling tables plus per-edge labels of one graph, reusable across
/// runs with different seeds or sample sizes.
pub struct PreparedSampler<'g> {
    g: &'g TemporalGraph,
    sampler: WedgeSampler<'g>,
    labels: Vec<u32>,
    alphabet: usize,
    labeled: bool,
}

impl<'g> PreparedSampler<'g> {
    pub fn new(g: &'g TemporalGraph, labeled: bool) -> Result<Self> {
        Ok(Self {
            g,
            sampler: WedgeSampler::new(g)?,
            labels: edge_labels(g, labeled),
            alphabet: effective_alphabet(g, labeled),
            labeled,
        })
    }

    pub fn sampler(&self) -> &WedgeSampler<'g> {
        &self.sampler
    }

    fn check(&self, cfg: &SampleConfig) -> Result<()> {
        check_size(cfg)?;
        if cfg.labeled != self.labeled {
            return Err(Error::invalid("sampler was prepared for the other labeling mode"));
        }
        Ok(())
    }

    fn key(&self, a: u32, b: u32) -> RawKey {
        wedge_key(self.g, &self.labels, (self.alphabet * self.alphabet) as u64, a, b)
    }

    /// See [`sample_wedges`].
    pub fn sample_wedges(&self, cfg: &SampleConfig) -> Result<WedgeSample> {
        self.check(cfg)?;
        let mut rng = graph_rng(cfg.seed, cfg.stream);
        let mut tally = Tally::new(2, self.alphabet, self.labeled)?;
        let mut retained = 0u64;
        for _ in 0..cfg.sample_size {
            let (v, a, b) = self.sampler.draw_pair(&mut rng);
            if is_wedge(self.g, v, a, b, cfg.delta) {
                tally.add(self.key(a, b), 1);
                retained += 1;
            }
        }
        let s = cfg.sample_size as u64;
        if cfg.strict {
            let features = scale(tally, s);
            return Ok(WedgeSample { features, overflow: (s - retained) as f64 / s as f64, attempts: s, retained: s });
        }
        if retained == 0 {
            return Err(Error::DegenerateSample(format!("all {s} sampled pairs were discarded")));
        }
        Ok(WedgeSample { features: scale(tally, retained), overflow: 0.0, attempts: s, retained })
    }

    /// See [`sample_wedges_delta`].
    pub fn sample_wedges_delta(&self, cfg: &SampleConfig) -> Result<WedgeSample> {
        self.check(cfg)?;
        let delta = match cfg.delta {
            Window::Bounded(0) => return Err(Error::invalid("time window must be at least 1")),
            Window::Bounded(d) => d,
            Window::Unbounded => Time::MAX,
        };
        let edges = self.g.edges();
        let mut rng = graph_rng(cfg.seed, cfg.stream);
        let mut tally = Tally::new(2, self.alphabet, self.labeled)?;
        let budget = cfg.attempt_factor.saturating_mul(cfg.sample_size as u64);
        let (mut attempts, mut accepted) = (0u64, 0u64);
        while accepted < cfg.sample_size as u64 && attempts < budget {
            attempts += 1;
            if let Some((v, a, b)) = self.sampler.draw_delta(&mut rng, delta) {
                // both edges to the same neighbor: two nodes, not a wedge
                if edges[a as usize].other(v) == edges[b as usize].other(v) {
                    continue;
                }
                tally.add(self.key(a, b), 1);
                accepted += 1;
            }
        }
        if accepted == 0 {
            return Err(Error::DegenerateSample(format!("no wedge within the window after {attempts} attempts")));
        }
        Ok(WedgeSample { features: scale(tally, accepted), overflow: 0.0, attempts, retained: accepted })
    }

    /// See [`sample`].
    pub fn sample(&self, cfg: &SampleConfig) -> Result<WedgeSample> {
        match cfg.delta {
            Window::Bounded(_) if cfg.rejection => self.sample_wedges_delta(cfg),
            _ => self.sample_wedges(cfg),
        }
    }
}

/// Plain pair sampling (no rejection step).
pub fn sample_wedges(g: &TemporalGraph, cfg: &SampleConfig) -> Result<WedgeSample> {
    check_size(cfg)?;
    PreparedSampler::new(g, cfg.labeled)?.sample_wedges(cfg)
}

/// Windowed rejection sampling: `s` accepted wedges, uniform over the
/// δ-respecting wedges, within `attempt_factor · s` attempts.
pub fn sample_wedges_delta(g: &TemporalGraph, cfg: &SampleConfig) -> Result<WedgeSample> {
    check_size(cfg)?;
    if cfg.delta == Window::Bounded(0) {
        return Err(Error::invalid("time window must be at least 1"));
    }
    PreparedSampler::new(g, cfg.labeled)?.sample_wedges_delta(cfg)
}

/// Dispatches on the configuration: the rejection sampler for a bounded
/// window with rejection on, plain pair sampling otherwise.
pub fn sample(g: &TemporalGraph, cfg: &SampleConfig) -> Result<WedgeSample> {
    check_size(cfg)?;
    PreparedSampler::new(g, cfg.labeled)?.sample(cfg)
}

fn check_size(cfg: &SampleConfig) -> Result<()> {
    if cfg.sample_size == 0 {
        return Err(Error::invalid("sample size must be at least 1"));
    }
    Ok(())
}

fn scale(tally: Tally, by: u64) -> FeatureVector {
    let counts = tally.into_counts();
    let map = counts.iter().map(|(c, n)| (c.clone(), n as f64 / by as f64)).collect();
    FeatureVector::from_map_unchecked(map)
}

/// Sample size after which every entry of every sampled normalized wedge
/// vector in a dataset of `num_graphs` graphs over `classes` classes is
/// within `lambda / classes` of the exact one with probability at least
/// `1 - confidence`:
/// `⌈ln(2 · num_graphs · classes / confidence) / (2 (lambda / classes)²)⌉`.
pub fn required_sample_size(num_graphs: usize, classes: usize, lambda: f64, confidence: f64) -> Result<u64> {
    if num_graphs == 0 || classes == 0 {
        return Err(Error::invalid("need at least one graph and one class"));
    }
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(Error::invalid(format!("lambda must be positive, got {lambda}")));
    }
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(Error::invalid(format!("confidence must be in (0, 1), got {confidence}")));
    }
    let w = classes as f64;
    let eps = lambda / w;
    let s = libm::ceil(libm::log(2.0 * num_graphs as f64 * w / confidence) / (2.0 * eps * eps));
    if s > u64::MAX as f64 {
        return Err(Error::Overflow("sample size"));
    }
    Ok((s as u64).max(1))
}
