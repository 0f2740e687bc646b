#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

use rand::Rng;
use tgraphlet_core::rng::seeded;
use tgraphlet_core::tgraph::{DatasetMeta, GraphRecord, LabelTimeline, TemporalEdge};
use tgraphlet_core::{Dataset, TemporalGraph};

/// Random graph with `n` nodes, `m` edges, times in `0..t_max` and, for
/// `alphabet > 1`, up to two label events per node.
pub fn random_graph(rng: &mut impl Rng, n: usize, m: usize, t_max: u64, alphabet: usize) -> TemporalGraph {
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m && n > 1 {
        let u = rng.random_range(0..n as u32);
        let v = rng.random_range(0..n as u32);
        if u != v {
            edges.push(TemporalEdge::new(u, v, rng.random_range(0..t_max)));
        }
    }
    let g = TemporalGraph::new(n, edges, alphabet).unwrap();
    if alphabet == 1 {
        return g;
    }
    let timelines = (0..n)
        .map(|_| {
            let default = rng.random_range(0..alphabet as u16);
            let mut events = Vec::new();
            let mut t = 0;
            for _ in 0..rng.random_range(0..3) {
                t += rng.random_range(1..=t_max);
                events.push((t, rng.random_range(0..alphabet as u16)));
            }
            LabelTimeline::with_events(default, events).unwrap()
        })
        .collect();
    g.with_timelines(timelines).unwrap()
}

pub fn random_dataset(seed: u64, count: usize, n: usize, m: usize, t_max: u64, alphabet: usize) -> Dataset {
    let mut rng = seeded(seed);
    let graphs = (0..count)
        .map(|i| GraphRecord {
            id: format!("r{i:03}"),
            graph: random_graph(&mut rng, n, m, t_max, alphabet),
            class_label: (i % 2) as i64,
        })
        .collect();
    Dataset::new(graphs, DatasetMeta::default()).unwrap()
}

pub fn tgraphlet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tgraphlet")).args(args).output().expect("binary runs")
}

pub fn path(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}
