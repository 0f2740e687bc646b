use super::{edge_labels, effective_alphabet, Tally};
use crate::graphlets::{pattern_key_of, RawKey};
use crate::tgraph::{TemporalGraph, Window};
use crate::{GraphletCounts, Result};

/// Exact temporal wedge counts (three nodes, two edges).
///
/// Every wedge has a unique shared node, so each node's time-sorted incident
/// edge list is scanned for later edges within the window. Pairs with equal
/// times or with coinciding non-shared endpoints are skipped.
/// `O(Σ_v d(v)²)` in the worst case.
pub fn count_wedges(g: &TemporalGraph, delta: Window, labeled: bool) -> Result<GraphletCounts> {
    let alphabet = effective_alphabet(g, labeled);
    let l2 = (alphabet * alphabet) as u64;
    let labels = edge_labels(g, labeled);
    let inc = g.incidence();
    let edges = g.edges();
    let mut tally = Tally::new(2, alphabet, labeled)?;
    for v in 0..g.num_nodes() as u32 {
        let list = inc.edges_of(v);
        for (i, &ei) in list.iter().enumerate() {
            let e = edges[ei as usize];
            let e_other = e.other(v).expect("incident edge");
            let mut j = i + 1;
            while j < list.len() && edges[list[j] as usize].time == e.time {
                j += 1;
            }
            for &fi in &list[j..] {
                let f = edges[fi as usize];
                if !delta.admits(f.time - e.time) {
                    break;
                }
                if f.other(v) == Some(e_other) {
                    continue;
                }
                let (pattern, _) = pattern_key_of(&[(e.source, e.target), (f.source, f.target)]);
                let key = RawKey { pattern, labels: labels[ei as usize] as u64 * l2 + labels[fi as usize] as u64 };
                tally.add(key, 1);
            }
        }
    }
    Ok(tally.into_counts())
}
