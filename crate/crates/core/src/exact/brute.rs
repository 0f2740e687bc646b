use alloc::vec::Vec;

use super::CountConfig;
use crate::graphlets::{canonical_code, Pattern};
use crate::tgraph::{TemporalEdge, TemporalGraph};
use crate::{Error, GraphletCounts, Result};

/// Default edge-count guard of [`count_brute_force`].
pub const BRUTE_FORCE_GUARD: usize = 64;

/// Reference counter: visits every strictly time-increasing sequence of
/// `ell` edges and keeps those within the window whose induced static graph
/// is connected with a node count in `k_set`.
pub fn count_brute_force(g: &TemporalGraph, cfg: &CountConfig) -> Result<GraphletCounts> {
    count_brute_force_with_guard(g, cfg, Some(BRUTE_FORCE_GUARD))
}

/// [`count_brute_force`] with a custom guard; `None` disables it.
pub fn count_brute_force_with_guard(
    g: &TemporalGraph,
    cfg: &CountConfig,
    guard: Option<usize>,
) -> Result<GraphletCounts> {
    if let Some(limit) = guard {
        if g.num_edges() > limit {
            return Err(Error::TooLarge { edges: g.num_edges(), guard: limit });
        }
    }
    if cfg.ell == 0 {
        return Err(Error::invalid("graphlets need at least one edge"));
    }
    let mut out = GraphletCounts::new();
    let mut chosen: Vec<TemporalEdge> = Vec::with_capacity(cfg.ell);
    visit(g, cfg, 0, &mut chosen, &mut out)?;
    Ok(out)
}

fn visit(
    g: &TemporalGraph,
    cfg: &CountConfig,
    from: usize,
    chosen: &mut Vec<TemporalEdge>,
    out: &mut GraphletCounts,
) -> Result<()> {
    if chosen.len() == cfg.ell {
        let pattern = Pattern::canonical(chosen.iter().map(|e| (e.source, e.target)))?;
        if pattern.is_connected() && cfg.k_set.contains(pattern.num_slots()) {
            out.add(canonical_code(chosen, g, cfg.labeled)?, 1);
        }
        return Ok(());
    }
    for (i, e) in g.edges().iter().enumerate().skip(from) {
        if let Some(last) = chosen.last() {
            if e.time <= last.time {
                continue;
            }
        }
        if let Some(first) = chosen.first() {
            if !cfg.delta.admits(e.time - first.time) {
                break;
            }
        }
        chosen.push(*e);
        visit(g, cfg, i + 1, chosen, out)?;
        chosen.pop();
    }
    Ok(())
}
