use super::nodeset::{Accept, NodeSetCounter, PairIndex};
use super::{edge_labels, effective_alphabet, Tally};
use crate::tgraph::{NodeId, TemporalGraph, Window};
use crate::{GraphletCounts, Result};

/// Exact temporal triangle counts.
///
/// Enumerates the undirected triangles of the static projection; for each,
/// the temporal edges among its three nodes are run through the sequence DP
/// and the three-edge sequences covering all three node pairs are kept.
/// A temporal triangle belongs to exactly one static triangle (its node set).
pub fn count_triangles(g: &TemporalGraph, delta: Window, labeled: bool) -> Result<GraphletCounts> {
    let alphabet = effective_alphabet(g, labeled);
    let labels = edge_labels(g, labeled);
    let pairs = PairIndex::new(g);
    let adj = g.static_projection().undirected_adjacency();
    let mut tally = Tally::new(3, alphabet, labeled)?;
    let mut counter = NodeSetCounter::new(3, 3, alphabet)?;
    for_each_static_triangle(&adj, |tri| {
        counter.count(g, &pairs, &labels, &tri, delta, Accept::AllPairs, &mut tally);
    });
    Ok(tally.into_counts())
}

/// Visits each undirected triangle once as `[u, v, w]` with `u < v < w`.
pub(crate) fn for_each_static_triangle(adj: &[alloc::vec::Vec<NodeId>], mut f: impl FnMut([NodeId; 3])) {
    for (u, nu) in adj.iter().enumerate() {
        let u = u as NodeId;
        for &v in nu.iter().filter(|&&v| v > u) {
            let nv = &adj[v as usize];
            // sorted-list intersection restricted to w > v
            let (mut i, mut j) = (nu.partition_point(|&x| x <= v), nv.partition_point(|&x| x <= v));
            while i < nu.len() && j < nv.len() {
                match nu[i].cmp(&nv[j]) {
                    core::cmp::Ordering::Less => i += 1,
                    core::cmp::Ordering::Greater => j += 1,
                    core::cmp::Ordering::Equal => {
                        f([u, v, nu[i]]);
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
}
