//! Fast counters against the brute-force reference on every graph of a
//! dataset.

use rayon::prelude::*;
use tgraphlet_core::exact::{
    count_brute_force_with_guard, count_general, count_stars, count_triangles, count_wedges, CountConfig,
    BRUTE_FORCE_GUARD,
};
use tgraphlet_core::{Dataset, GraphletCounts, GraphletFamily, NodeCounts, TemporalGraph, Window};

use crate::{Error, Result};

pub type CounterFn = fn(&TemporalGraph, &CountConfig) -> tgraphlet_core::Result<GraphletCounts>;

/// A counter under test, the configuration it answers for and the family
/// its output is restricted to.
#[derive(Clone, Copy)]
pub struct NamedCounter {
    pub name: &'static str,
    pub config: fn(Window, bool) -> CountConfig,
    pub family: Option<GraphletFamily>,
    pub count: CounterFn,
}

fn k23(ell: usize) -> fn(Window, bool) -> CountConfig {
    match ell {
        2 => |d, l| CountConfig::new(d, NodeCounts::from_slice(&[2, 3]).expect("valid"), 2, l),
        _ => |d, l| CountConfig::new(d, NodeCounts::from_slice(&[2, 3]).expect("valid"), 3, l),
    }
}

pub fn default_counters() -> Vec<NamedCounter> {
    vec![
        NamedCounter {
            name: "wedges",
            config: CountConfig::wedges,
            family: None,
            count: |g, c| count_wedges(g, c.delta, c.labeled),
        },
        NamedCounter {
            name: "stars",
            config: CountConfig::three_edge,
            family: Some(GraphletFamily::Star3),
            count: |g, c| count_stars(g, c.delta, c.labeled),
        },
        NamedCounter {
            name: "triangles",
            config: CountConfig::three_edge,
            family: Some(GraphletFamily::Triangle),
            count: |g, c| count_triangles(g, c.delta, c.labeled),
        },
        NamedCounter { name: "general-l2", config: k23(2), family: None, count: count_general },
        NamedCounter { name: "general-l3", config: k23(3), family: None, count: count_general },
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub graph_id: String,
    pub counter: &'static str,
    pub delta: Window,
    pub labeled: bool,
    pub class: String,
    pub fast: u64,
    pub oracle: u64,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "graph {} counter {} delta={} labeled={}: class {} fast={} oracle={}",
            self.graph_id, self.counter, self.delta, self.labeled, self.class, self.fast, self.oracle
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub checks: usize,
    /// Earliest mismatch in dataset order.
    pub mismatch: Option<Mismatch>,
}

fn first_difference(fast: &GraphletCounts, oracle: &GraphletCounts) -> Option<(String, u64, u64)> {
    let mut codes: Vec<_> = fast.iter().map(|(c, _)| c).chain(oracle.iter().map(|(c, _)| c)).collect();
    codes.sort();
    codes.dedup();
    codes.into_iter().find(|c| fast.get(c) != oracle.get(c)).map(|c| (c.to_string(), fast.get(c), oracle.get(c)))
}

fn check_graph(
    id: &str,
    g: &TemporalGraph,
    deltas: &[Window],
    counters: &[NamedCounter],
    guard: Option<usize>,
) -> Result<(usize, Option<Mismatch>)> {
    let graph_err = |e| Error::Graph { id: id.to_string(), source: e };
    let mut checks = 0;
    for &delta in deltas {
        for labeled in [false, true] {
            for c in counters {
                let cfg = (c.config)(delta, labeled);
                let oracle = count_brute_force_with_guard(g, &cfg, guard).map_err(graph_err)?;
                let oracle = match c.family {
                    Some(f) => oracle.only(f),
                    None => oracle,
                };
                let fast = (c.count)(g, &cfg).map_err(graph_err)?;
                checks += 1;
                if let Some((class, fast, oracle)) = first_difference(&fast, &oracle) {
                    let m = Mismatch { graph_id: id.to_string(), counter: c.name, delta, labeled, class, fast, oracle };
                    return Ok((checks, Some(m)));
                }
            }
        }
    }
    Ok((checks, None))
}

pub fn verify_dataset(
    ds: &Dataset,
    deltas: &[Window],
    counters: &[NamedCounter],
    force: bool,
    pool: &rayon::ThreadPool,
) -> Result<VerifyReport> {
    if !force {
        if let Some(rec) = ds.graphs().iter().find(|r| r.graph.num_edges() > BRUTE_FORCE_GUARD) {
            return Err(Error::Usage(format!(
                "graph {} has {} edges, above the brute-force guard of {BRUTE_FORCE_GUARD}; pass --force to verify anyway",
                rec.id,
                rec.graph.num_edges()
            )));
        }
    }
    let results: Vec<(usize, Option<Mismatch>)> = pool.install(|| {
        ds.graphs()
            .par_iter()
            .map(|rec| check_graph(&rec.id, &rec.graph, deltas, counters, None))
            .collect::<Result<_>>()
    })?;
    let checks = results.iter().map(|r| r.0).sum();
    let mismatch = results.into_iter().find_map(|r| r.1);
    Ok(VerifyReport { checks, mismatch })
}
