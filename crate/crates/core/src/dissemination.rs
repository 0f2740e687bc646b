//! SI dissemination over temporal edges, classification task generators and
//! a Barabási–Albert temporal graph generator.
//!
//! Labels are binary: [`SUSCEPTIBLE`] and [`INFECTED`]. Seeds are infected at
//! time 0. An edge `(u, v, t)` whose source is infected at `t` infects a
//! susceptible `v` at `t + 1` with probability `p`, one trial per temporal
//! edge.
//!
//! Seeding: each dataset graph with index `i` draws from stream `i` of the
//! dataset seed (see [`crate::rng`]); task generators use streams `2i` and
//! `2i + 1` for the two graphs built from base `i`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::index;
use rand::Rng;

use crate::rng::{graph_rng, MISSING_INFO_STREAM};
use crate::tgraph::{
    Dataset, DatasetMeta, GraphRecord, Label, LabelTimeline, NodeId, TemporalEdge, TemporalGraph, Time,
};
use crate::{Error, Result};

pub const SUSCEPTIBLE: Label = 0;
pub const INFECTED: Label = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeedSelection {
    /// This many distinct nodes, uniformly.
    UniformRandom(usize),
    FixedList(Vec<NodeId>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SiConfig {
    pub infection_probability: f64,
    pub seeds: SeedSelection,
    pub seed: u64,
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!("probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// Runs one SI process with the stream of `cfg.seed`.
pub fn simulate_si(g: &TemporalGraph, cfg: &SiConfig) -> Result<TemporalGraph> {
    simulate_si_with(g, cfg.infection_probability, &cfg.seeds, &mut graph_rng(cfg.seed, 0))
}

/// SI process drawing from `rng`. Existing label events are replaced.
pub fn simulate_si_with<R: Rng + ?Sized>(
    g: &TemporalGraph,
    p: f64,
    seeds: &SeedSelection,
    rng: &mut R,
) -> Result<TemporalGraph> {
    if g.alphabet_size() != 2 {
        return Err(Error::invalid(format!(
            "dissemination needs a binary label alphabet, graph has {}",
            g.alphabet_size()
        )));
    }
    check_probability(p)?;
    let n = g.num_nodes();
    let seed_nodes: Vec<NodeId> = match seeds {
        SeedSelection::UniformRandom(k) => {
            if *k == 0 || *k > n {
                return Err(Error::invalid(format!("cannot pick {k} seeds among {n} nodes")));
            }
            index::sample(rng, n, *k).into_iter().map(|v| v as NodeId).collect()
        }
        SeedSelection::FixedList(list) => {
            if list.is_empty() {
                return Err(Error::invalid("empty seed list"));
            }
            if let Some(&v) = list.iter().find(|&&v| v as usize >= n) {
                return Err(Error::NodeOutOfRange { node: v, num_nodes: n });
            }
            list.clone()
        }
    };
    let mut infected_at: Vec<Option<Time>> = vec![None; n];
    for &s in &seed_nodes {
        infected_at[s as usize] = Some(0);
    }
    for e in g.edges() {
        let source_infected = matches!(infected_at[e.source as usize], Some(t) if t <= e.time);
        if source_infected && infected_at[e.target as usize].is_none() && rng.random_bool(p) {
            infected_at[e.target as usize] = Some(e.time + 1);
        }
    }
    let timelines = infected_at
        .iter()
        .map(|t| match t {
            Some(t) => LabelTimeline::with_events(SUSCEPTIBLE, vec![(*t, INFECTED)]),
            None => Ok(LabelTimeline::constant(SUSCEPTIBLE)),
        })
        .collect::<Result<Vec<_>>>()?;
    g.without_labels().with_timelines(timelines)
}

/// Nodes that become infected at some time.
pub fn infected_nodes(g: &TemporalGraph) -> Vec<NodeId> {
    (0..g.num_nodes() as NodeId)
        .filter(|&v| {
            let tl = &g.timelines()[v as usize];
            tl.default_label() == INFECTED || tl.events().iter().any(|&(_, l)| l == INFECTED)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    /// Class 1: SI simulation; class 0: the same number of infection events
    /// at random nodes and times.
    DisseminationVsRandom,
    /// Class 0: SI at `p1`; class 1: SI at `p2`.
    TwoProbabilities,
}

impl Task {
    pub fn number(&self) -> u8 {
        match self {
            Task::DisseminationVsRandom => 1,
            Task::TwoProbabilities => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TaskConfig {
    pub task: Task,
    /// Infection probability of task 1 and of class 0 in task 2.
    pub p1: f64,
    pub p2: f64,
    pub num_seeds: usize,
    /// Erases this fraction of infections afterwards (task 3).
    pub missing_fraction: Option<f64>,
    pub seed: u64,
}

impl TaskConfig {
    pub fn task1(p: f64, num_seeds: usize, seed: u64) -> Self {
        Self { task: Task::DisseminationVsRandom, p1: p, p2: p, num_seeds, missing_fraction: None, seed }
    }

    pub fn task2(p1: f64, p2: f64, num_seeds: usize, seed: u64) -> Self {
        Self { task: Task::TwoProbabilities, p1, p2, num_seeds, missing_fraction: None, seed }
    }

    pub fn with_missing_fraction(mut self, fraction: f64) -> Self {
        self.missing_fraction = Some(fraction);
        self
    }

    fn meta(&self) -> DatasetMeta {
        let mut params = BTreeMap::new();
        match self.task {
            Task::DisseminationVsRandom => {
                params.insert("p".to_string(), self.p1.to_string());
            }
            Task::TwoProbabilities => {
                params.insert("p1".to_string(), self.p1.to_string());
                params.insert("p2".to_string(), self.p2.to_string());
            }
        }
        params.insert("num_seeds".to_string(), self.num_seeds.to_string());
        let task = match self.missing_fraction {
            Some(f) => {
                params.insert("missing_fraction".to_string(), f.to_string());
                params.insert("base_task".to_string(), self.task.number().to_string());
                "3"
            }
            None if self.task == Task::DisseminationVsRandom => "1",
            None => "2",
        };
        DatasetMeta { task: Some(task.to_string()), params, seed: Some(self.seed) }
    }
}

fn graph_id(i: usize) -> String {
    format!("g{i:05}")
}

/// Builds the task dataset: two graphs per base, ids `g00000`, `g00001`, …
pub fn make_task(bases: &[TemporalGraph], cfg: &TaskConfig) -> Result<Dataset> {
    check_probability(cfg.p1)?;
    check_probability(cfg.p2)?;
    if cfg.task == Task::TwoProbabilities && cfg.p1 == cfg.p2 {
        return Err(Error::invalid("the two infection probabilities must differ"));
    }
    if let Some(f) = cfg.missing_fraction {
        check_fraction(f)?;
    }
    let seeds = SeedSelection::UniformRandom(cfg.num_seeds);
    let mut records = Vec::with_capacity(2 * bases.len());
    for (i, base) in bases.iter().enumerate() {
        let base = base.without_labels().with_alphabet_size(2)?;
        let (a, b) = ((2 * i) as u64, (2 * i + 1) as u64);
        let (g0, g1) = match cfg.task {
            Task::DisseminationVsRandom => {
                let sim = simulate_si_with(&base, cfg.p1, &seeds, &mut graph_rng(cfg.seed, b))?;
                let k = infected_nodes(&sim).len();
                (random_infections(&base, k, &mut graph_rng(cfg.seed, a))?, sim)
            }
            Task::TwoProbabilities => (
                simulate_si_with(&base, cfg.p1, &seeds, &mut graph_rng(cfg.seed, a))?,
                simulate_si_with(&base, cfg.p2, &seeds, &mut graph_rng(cfg.seed, b))?,
            ),
        };
        records.push(GraphRecord { id: graph_id(2 * i), graph: g0, class_label: 0 });
        records.push(GraphRecord { id: graph_id(2 * i + 1), graph: g1, class_label: 1 });
    }
    let ds = Dataset::new(records, cfg.meta())?;
    match cfg.missing_fraction {
        Some(f) => apply_missing_info(&ds, f, cfg.seed),
        None => Ok(ds),
    }
}

pub fn make_task1(bases: &[TemporalGraph], p: f64, num_seeds: usize, seed: u64) -> Result<Dataset> {
    make_task(bases, &TaskConfig::task1(p, num_seeds, seed))
}

pub fn make_task2(bases: &[TemporalGraph], p1: f64, p2: f64, num_seeds: usize, seed: u64) -> Result<Dataset> {
    make_task(bases, &TaskConfig::task2(p1, p2, num_seeds, seed))
}

/// `k` distinct nodes infected at uniform times in the edge time span.
fn random_infections<R: Rng + ?Sized>(g: &TemporalGraph, k: usize, rng: &mut R) -> Result<TemporalGraph> {
    let n = g.num_nodes();
    let (lo, hi) = g.time_span().unwrap_or((0, 0));
    let mut timelines = vec![LabelTimeline::constant(SUSCEPTIBLE); n];
    for v in index::sample(rng, n, k.min(n)) {
        let t = rng.random_range(lo..=hi);
        timelines[v] = LabelTimeline::with_events(SUSCEPTIBLE, vec![(t, INFECTED)])?;
    }
    g.clone().with_timelines(timelines)
}

fn check_fraction(f: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&f) {
        return Err(Error::invalid(format!("missing fraction {f} outside [0, 1]")));
    }
    Ok(())
}

/// Resets `⌊fraction · infected⌋` uniformly chosen infected nodes of every
/// graph to susceptible for all times. Graph `i` draws from stream
/// `MISSING_INFO_STREAM + i` of `seed`.
pub fn apply_missing_info(ds: &Dataset, fraction: f64, seed: u64) -> Result<Dataset> {
    check_fraction(fraction)?;
    if ds.alphabet_size().is_some_and(|l| l != 2) {
        return Err(Error::invalid("missing information needs a binary label alphabet"));
    }
    let mut records = Vec::with_capacity(ds.len());
    for (i, rec) in ds.graphs().iter().enumerate() {
        let infected = infected_nodes(&rec.graph);
        let k = libm::floor(fraction * infected.len() as f64) as usize;
        let mut rng = graph_rng(seed, MISSING_INFO_STREAM + i as u64);
        let mut g = rec.graph.clone();
        for j in index::sample(&mut rng, infected.len(), k.min(infected.len())) {
            g.set_timeline(infected[j], LabelTimeline::constant(SUSCEPTIBLE))?;
        }
        records.push(GraphRecord { id: rec.id.clone(), graph: g, class_label: rec.class_label });
    }
    let mut meta = ds.meta.clone();
    meta.params.insert("missing_fraction".to_string(), fraction.to_string());
    meta.params.insert("missing_seed".to_string(), seed.to_string());
    Dataset::new(records, meta)
}

/// Preferential attachment: an edgeless core of `m` nodes, then each new
/// node links to `m` distinct earlier nodes drawn proportionally to degree
/// (the core is the first target set). Edges point from the newer node to
/// the older one and get independent uniform times in `[0, t_max]`.
/// Yields `m (n - m)` edges and a binary alphabet without events.
pub fn generate_ba(n: usize, m: usize, t_max: Time, seed: u64) -> Result<TemporalGraph> {
    if m == 0 || n <= m {
        return Err(Error::invalid(format!("need n > m >= 1, got n={n}, m={m}")));
    }
    let mut rng = graph_rng(seed, 0);
    let mut edges = Vec::with_capacity(m * (n - m));
    let mut targets: Vec<NodeId> = (0..m as NodeId).collect();
    let mut repeated: Vec<NodeId> = Vec::with_capacity(2 * m * (n - m));
    let mut chosen = Vec::with_capacity(m);
    for source in m as NodeId..n as NodeId {
        for &t in &targets {
            edges.push(TemporalEdge::new(source, t, rng.random_range(0..=t_max)));
        }
        repeated.extend_from_slice(&targets);
        repeated.extend(core::iter::repeat_n(source, m));
        chosen.clear();
        while chosen.len() < m {
            let x = repeated[rng.random_range(0..repeated.len())];
            if !chosen.contains(&x) {
                chosen.push(x);
            }
        }
        core::mem::swap(&mut targets, &mut chosen);
    }
    TemporalGraph::new(n, edges, 2)
}
