use alloc::format;

use super::nodeset::{Accept, NodeSetCounter, PairIndex};
use super::{edge_labels, effective_alphabet, CountConfig, Tally};
use crate::tgraph::{NodeId, TemporalGraph};
use crate::{Error, GraphletCounts, Result};

/// General counting framework for two- and three-node graphlets of any
/// length `ell ≥ 2`.
///
/// 1. enumerate the connected static node sets of size in `k_set`
///    (node pairs with an arc, open wedges, triangles),
/// 2. collect the temporal edges among each set chronologically,
/// 3. run the sliding-window sequence DP and keep the sequences that span
///    the whole set, so each graphlet is attributed to its own node set.
pub fn count_general(g: &TemporalGraph, cfg: &CountConfig) -> Result<GraphletCounts> {
    if !cfg.k_set.is_subset_of(&[2, 3]) {
        return Err(Error::unsupported(format!("static subgraph enumeration for k={{{}}}", cfg.k_set)));
    }
    if cfg.ell < 2 {
        return Err(Error::unsupported(format!("general counting with ell={}", cfg.ell)));
    }
    let alphabet = effective_alphabet(g, cfg.labeled);
    let labels = edge_labels(g, cfg.labeled);
    let pairs = PairIndex::new(g);
    let adj = g.static_projection().undirected_adjacency();
    let mut tally = Tally::new(cfg.ell, alphabet, cfg.labeled)?;
    let mut counter = NodeSetCounter::new(3, cfg.ell, alphabet)?;
    let mut run = |nodes: &[NodeId], tally: &mut Tally| {
        counter.count(g, &pairs, &labels, nodes, cfg.delta, Accept::SpansSet, tally);
    };
    if cfg.k_set.contains(2) {
        for (u, nu) in adj.iter().enumerate() {
            for &v in nu.iter().filter(|&&v| v as usize > u) {
                run(&[u as NodeId, v], &mut tally);
            }
        }
    }
    if cfg.k_set.contains(3) {
        for (c, nc) in adj.iter().enumerate() {
            let c = c as NodeId;
            for (i, &a) in nc.iter().enumerate() {
                for &b in &nc[i + 1..] {
                    // a triangle is visited from each corner; keep the smallest
                    let closed = adj[a as usize].binary_search(&b).is_ok();
                    if closed && (c > a || c > b) {
                        continue;
                    }
                    run(&[c, a, b], &mut tally);
                }
            }
        }
    }
    Ok(tally.into_counts())
}
