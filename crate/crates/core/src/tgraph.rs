//! Temporal graph data model.
//!
//! A [`TemporalGraph`] has a fixed node set `0..num_nodes`, directed temporal
//! edges with integer availability times, and one [`LabelTimeline`] per node
//! giving its label at every time step. Edges are kept sorted by time; ties
//! are stored and left to the counters to interpret.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

pub type NodeId = u32;
pub type Time = u64;
pub type Label = u16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TemporalEdge {
    pub source: NodeId,
    pub target: NodeId,
    pub time: Time,
}

impl TemporalEdge {
    pub const fn new(source: NodeId, target: NodeId, time: Time) -> Self {
        Self { source, target, time }
    }

    /// The endpoint opposite to `v`, if `v` is an endpoint.
    #[inline]
    pub fn other(&self, v: NodeId) -> Option<NodeId> {
        if self.source == v {
            Some(self.target)
        } else if self.target == v {
            Some(self.source)
        } else {
            None
        }
    }
}

/// Time window `δ` bounding `t_last - t_first` of a graphlet (inclusive).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Window {
    Bounded(Time),
    Unbounded,
}

impl Window {
    /// A bounded window; `δ = 0` is rejected.
    pub fn bounded(delta: Time) -> Result<Self> {
        if delta == 0 {
            return Err(Error::invalid("time window must be at least 1"));
        }
        Ok(Window::Bounded(delta))
    }

    #[inline]
    pub fn admits(&self, span: Time) -> bool {
        match *self {
            Window::Bounded(d) => span <= d,
            Window::Unbounded => true,
        }
    }

    pub fn as_option(&self) -> Option<Time> {
        match *self {
            Window::Bounded(d) => Some(d),
            Window::Unbounded => None,
        }
    }
}

impl core::fmt::Display for Window {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Window::Bounded(d) => write!(f, "{d}"),
            Window::Unbounded => f.write_str("inf"),
        }
    }
}

/// Piecewise-constant label of one node over time.
///
/// `label_at(t)` is the label of the latest event with time `<= t`, or the
/// default label before the first event. Timelines extend indefinitely.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabelTimeline {
    default_label: Label,
    events: Vec<(Time, Label)>,
}

impl LabelTimeline {
    pub fn constant(label: Label) -> Self {
        Self { default_label: label, events: Vec::new() }
    }

    pub fn with_events(default_label: Label, events: Vec<(Time, Label)>) -> Result<Self> {
        if events.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::invalid("label event times must be strictly increasing"));
        }
        Ok(Self { default_label, events })
    }

    /// Appends an event; its time must exceed every existing event time.
    pub fn push(&mut self, time: Time, label: Label) -> Result<()> {
        if let Some(&(last, _)) = self.events.last() {
            if time <= last {
                return Err(Error::invalid(format!(
                    "label event at time {time} does not follow event at time {last}"
                )));
            }
        }
        self.events.push((time, label));
        Ok(())
    }

    #[inline]
    pub fn label_at(&self, t: Time) -> Label {
        let idx = self.events.partition_point(|&(et, _)| et <= t);
        if idx == 0 {
            self.default_label
        } else {
            self.events[idx - 1].1
        }
    }

    pub fn default_label(&self) -> Label {
        self.default_label
    }

    pub fn events(&self) -> &[(Time, Label)] {
        &self.events
    }

    fn max_label(&self) -> Label {
        self.events.iter().map(|&(_, l)| l).fold(self.default_label, Label::max)
    }
}

/// Time-sorted incident edge lists (CSR layout) of a temporal graph.
#[derive(Clone, Debug)]
pub struct Incidence {
    offsets: Vec<usize>,
    entries: Vec<u32>,
}

impl Incidence {
    /// Indices into [`TemporalGraph::edges`] of the edges incident to `v`,
    /// in nondecreasing time order.
    #[inline]
    pub fn edges_of(&self, v: NodeId) -> &[u32] {
        let v = v as usize;
        &self.entries[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemporalGraph {
    num_nodes: usize,
    edges: Vec<TemporalEdge>,
    timelines: Vec<LabelTimeline>,
    alphabet_size: usize,
}

impl TemporalGraph {
    /// Builds a graph with all labels constant 0. Edges are sorted by
    /// `(time, source, target)`.
    pub fn new(num_nodes: usize, mut edges: Vec<TemporalEdge>, alphabet_size: usize) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::invalid("alphabet size must be at least 1"));
        }
        if num_nodes > u32::MAX as usize {
            return Err(Error::invalid("too many nodes"));
        }
        for e in &edges {
            for v in [e.source, e.target] {
                if v as usize >= num_nodes {
                    return Err(Error::NodeOutOfRange { node: v, num_nodes });
                }
            }
            if e.source == e.target {
                return Err(Error::SelfLoop(e.source));
            }
        }
        edges.sort_unstable_by_key(|e| (e.time, e.source, e.target));
        Ok(Self {
            num_nodes,
            edges,
            timelines: vec![LabelTimeline::default(); num_nodes],
            alphabet_size,
        })
    }

    pub fn with_timelines(mut self, timelines: Vec<LabelTimeline>) -> Result<Self> {
        if timelines.len() != self.num_nodes {
            return Err(Error::invalid(format!(
                "expected {} timelines, got {}",
                self.num_nodes,
                timelines.len()
            )));
        }
        for tl in &timelines {
            self.check_timeline(tl)?;
        }
        self.timelines = timelines;
        Ok(self)
    }

    pub fn set_timeline(&mut self, v: NodeId, timeline: LabelTimeline) -> Result<()> {
        self.check_node(v)?;
        self.check_timeline(&timeline)?;
        self.timelines[v as usize] = timeline;
        Ok(())
    }

    /// Same graph over a different alphabet size; fails if a label would
    /// fall outside it.
    pub fn with_alphabet_size(mut self, alphabet_size: usize) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::invalid("alphabet size must be at least 1"));
        }
        self.alphabet_size = alphabet_size;
        for tl in &self.timelines {
            self.check_timeline(tl)?;
        }
        Ok(self)
    }

    /// Same edges, every node constantly labeled 0.
    pub fn without_labels(&self) -> Self {
        Self {
            num_nodes: self.num_nodes,
            edges: self.edges.clone(),
            timelines: vec![LabelTimeline::default(); self.num_nodes],
            alphabet_size: self.alphabet_size,
        }
    }

    fn check_timeline(&self, tl: &LabelTimeline) -> Result<()> {
        let max = tl.max_label();
        if max as usize >= self.alphabet_size {
            return Err(Error::LabelOutOfRange { label: max, alphabet_size: self.alphabet_size });
        }
        Ok(())
    }

    #[inline]
    fn check_node(&self, v: NodeId) -> Result<()> {
        if v as usize >= self.num_nodes {
            Err(Error::NodeOutOfRange { node: v, num_nodes: self.num_nodes })
        } else {
            Ok(())
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn timeline(&self, v: NodeId) -> Result<&LabelTimeline> {
        self.check_node(v)?;
        Ok(&self.timelines[v as usize])
    }

    pub fn timelines(&self) -> &[LabelTimeline] {
        &self.timelines
    }

    /// `l(v, t)`.
    pub fn label_at(&self, v: NodeId, t: Time) -> Result<Label> {
        self.check_node(v)?;
        Ok(self.timelines[v as usize].label_at(t))
    }

    /// Unchecked variant for hot paths; panics when `v` is out of range.
    #[inline]
    pub(crate) fn label(&self, v: NodeId, t: Time) -> Label {
        self.timelines[v as usize].label_at(t)
    }

    /// Number of incoming plus outgoing temporal edges, with multiplicity.
    pub fn degree(&self, v: NodeId) -> Result<usize> {
        self.check_node(v)?;
        Ok(self.edges.iter().filter(|e| e.source == v || e.target == v).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.num_nodes];
        for e in &self.edges {
            deg[e.source as usize] += 1;
            deg[e.target as usize] += 1;
        }
        deg
    }

    pub fn incidence(&self) -> Incidence {
        let deg = self.degrees();
        let mut offsets = Vec::with_capacity(self.num_nodes + 1);
        offsets.push(0);
        for d in &deg {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets.clone();
        let mut entries = vec![0u32; self.edges.len() * 2];
        for (i, e) in self.edges.iter().enumerate() {
            for v in [e.source, e.target] {
                entries[fill[v as usize]] = i as u32;
                fill[v as usize] += 1;
            }
        }
        Incidence { offsets, entries }
    }

    pub fn static_projection(&self) -> StaticGraph {
        let mut arcs: Vec<(NodeId, NodeId)> = self.edges.iter().map(|e| (e.source, e.target)).collect();
        arcs.sort_unstable();
        arcs.dedup();
        StaticGraph { num_nodes: self.num_nodes, arcs }
    }

    /// `(min, max)` edge time, `None` for an edgeless graph.
    pub fn time_span(&self) -> Option<(Time, Time)> {
        Some((self.edges.first()?.time, self.edges.last()?.time))
    }

    /// Largest label event time over all nodes.
    pub fn max_event_time(&self) -> Option<Time> {
        self.timelines.iter().filter_map(|tl| tl.events().last().map(|&(t, _)| t)).max()
    }

    /// Nodes whose timeline carries at least one event.
    pub fn nodes_with_events(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.timelines
            .iter()
            .enumerate()
            .filter(|(_, tl)| !tl.events().is_empty())
            .map(|(v, _)| v as NodeId)
    }
}

/// Underlying static graph: deduplicated directed arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaticGraph {
    num_nodes: usize,
    arcs: Vec<(NodeId, NodeId)>,
}

impl StaticGraph {
    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    /// Sorted, duplicate-free.
    pub fn arcs(&self) -> &[(NodeId, NodeId)] {
        &self.arcs
    }

    pub fn contains(&self, u: NodeId, v: NodeId) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// Sorted neighbor lists ignoring direction.
    pub fn undirected_adjacency(&self) -> Vec<Vec<NodeId>> {
        let mut adj = vec![Vec::new(); self.num_nodes];
        for &(u, v) in &self.arcs {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphRecord {
    pub id: String,
    pub graph: TemporalGraph,
    pub class_label: i64,
}

/// Provenance of a generated or loaded dataset.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DatasetMeta {
    pub task: Option<String>,
    pub params: BTreeMap<String, String>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dataset {
    graphs: Vec<GraphRecord>,
    pub meta: DatasetMeta,
}

impl Dataset {
    pub fn new(graphs: Vec<GraphRecord>, meta: DatasetMeta) -> Result<Self> {
        if let Some(first) = graphs.first() {
            let l = first.graph.alphabet_size();
            if let Some(bad) = graphs.iter().find(|r| r.graph.alphabet_size() != l) {
                return Err(Error::invalid(format!(
                    "graph {} has alphabet size {}, expected {l}",
                    bad.id,
                    bad.graph.alphabet_size()
                )));
            }
        }
        Ok(Self { graphs, meta })
    }

    pub fn graphs(&self) -> &[GraphRecord] {
        &self.graphs
    }

    pub fn into_graphs(self) -> Vec<GraphRecord> {
        self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn alphabet_size(&self) -> Option<usize> {
        self.graphs.first().map(|r| r.graph.alphabet_size())
    }

    pub fn class_labels(&self) -> Vec<i64> {
        self.graphs.iter().map(|r| r.class_label).collect()
    }
}
