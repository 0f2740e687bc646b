//! Canonical text format for one temporal graph.
//!
//! ```text
//! # comment
//! t <num_nodes> <num_edges> <L>
//! e <source> <target> <time>
//! l <node> <time> <label>
//! ```
//!
//! The header comes first. Nodes without a label event before `t` have
//! label 0 at `t`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use tgraphlet_core::{Label, LabelTimeline, NodeId, TemporalEdge, TemporalGraph, Time};

use crate::{Error, Result};

pub fn parse_graph(text: &str, path: &Path) -> Result<TemporalGraph> {
    let err = |line: usize, msg: String| Error::parse(path, line, msg);
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut events: BTreeMap<NodeId, BTreeMap<Time, (Label, usize)>> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let kind = fields.next().unwrap_or_default();
        let nums: Vec<u64> = fields
            .map(|f| f.parse::<u64>().map_err(|_| err(lineno, format!("expected a nonnegative integer, got `{f}`"))))
            .collect::<Result<_>>()?;
        let want = |n: usize| {
            if nums.len() == n {
                Ok(())
            } else {
                Err(err(lineno, format!("`{kind}` line needs {n} fields, got {}", nums.len())))
            }
        };
        match (kind, header) {
            ("t", None) => {
                want(3)?;
                if nums[2] == 0 {
                    return Err(err(lineno, "alphabet size must be at least 1".into()));
                }
                header = Some((nums[0] as usize, nums[1] as usize, nums[2] as usize, lineno));
            }
            ("t", Some(_)) => return Err(err(lineno, "duplicate header".into())),
            (_, None) => return Err(err(lineno, "expected header `t <num_nodes> <num_edges> <L>`".into())),
            ("e", Some((n, ..))) => {
                want(3)?;
                let (u, v) = (nums[0], nums[1]);
                if u == v {
                    return Err(err(lineno, format!("self-loop on node {u}")));
                }
                if let Some(&x) = [u, v].iter().find(|&&x| x >= n as u64) {
                    return Err(err(lineno, format!("node {x} outside 0..{n}")));
                }
                edges.push(TemporalEdge::new(u as NodeId, v as NodeId, nums[2]));
            }
            ("l", Some((n, _, l, _))) => {
                want(3)?;
                let (v, t, label) = (nums[0], nums[1], nums[2]);
                if v >= n as u64 {
                    return Err(err(lineno, format!("node {v} outside 0..{n}")));
                }
                if label >= l as u64 {
                    return Err(err(lineno, format!("label {label} outside alphabet of size {l}")));
                }
                let slot = events.entry(v as NodeId).or_default();
                if let Some((_, first)) = slot.insert(t, (label as Label, lineno)) {
                    return Err(err(lineno, format!("second label event for node {v} at time {t} (line {first})")));
                }
            }
            (other, _) => return Err(err(lineno, format!("unknown line type `{other}`"))),
        }
    }
    let Some((n, m, l, hline)) = header else {
        return Err(err(1, "missing header".into()));
    };
    if edges.len() != m {
        return Err(err(hline, format!("header declares {m} edges, found {}", edges.len())));
    }
    let mut timelines = vec![LabelTimeline::constant(0); n];
    for (v, ev) in events {
        let ev = ev.into_iter().map(|(t, (label, _))| (t, label)).collect();
        timelines[v as usize] = LabelTimeline::with_events(0, ev)?;
    }
    Ok(TemporalGraph::new(n, edges, l)?.with_timelines(timelines)?)
}

pub fn read_graph(path: &Path) -> Result<TemporalGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_graph(&text, path)
}

pub fn graph_to_string(g: &TemporalGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "t {} {} {}", g.num_nodes(), g.num_edges(), g.alphabet_size());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {} {}", e.source, e.target, e.time);
    }
    for (v, tl) in g.timelines().iter().enumerate() {
        // a nonzero default becomes an event at time 0 unless one exists
        if tl.default_label() != 0 && tl.events().first().is_none_or(|&(t, _)| t > 0) {
            let _ = writeln!(out, "l {v} 0 {}", tl.default_label());
        }
        for &(t, label) in tl.events() {
            let _ = writeln!(out, "l {v} {t} {label}");
        }
    }
    out
}

pub fn write_graph(g: &TemporalGraph, path: &Path) -> Result<()> {
    std::fs::write(path, graph_to_string(g)).map_err(|e| Error::io(path, e))
}
