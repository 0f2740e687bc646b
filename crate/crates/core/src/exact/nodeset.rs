//! Counting all graphlets supported on one small static node set.

use alloc::vec::Vec;

use super::{label_index, SequenceCounter, Tally};
use crate::graphlets::{pattern_key_of, RawKey, MAX_KEY_EDGES};
use crate::tgraph::{NodeId, TemporalGraph, Time, Window};
use crate::{Error, Result};

/// Temporal edge indices grouped by unordered node pair.
pub(crate) struct PairIndex {
    keys: Vec<(NodeId, NodeId)>,
    offsets: Vec<usize>,
    entries: Vec<u32>,
}

impl PairIndex {
    pub fn new(g: &TemporalGraph) -> Self {
        let mut items: Vec<((NodeId, NodeId), u32)> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| ((e.source.min(e.target), e.source.max(e.target)), i as u32))
            .collect();
        items.sort_unstable();
        let mut keys = Vec::new();
        let mut offsets = Vec::new();
        let mut entries = Vec::with_capacity(items.len());
        for (i, &(k, idx)) in items.iter().enumerate() {
            if i == 0 || items[i - 1].0 != k {
                keys.push(k);
                offsets.push(entries.len());
            }
            entries.push(idx);
        }
        offsets.push(entries.len());
        Self { keys, offsets, entries }
    }

    /// Edge indices (time-sorted) between `u` and `v` in either direction.
    pub fn between(&self, u: NodeId, v: NodeId) -> &[u32] {
        match self.keys.binary_search(&(u.min(v), u.max(v))) {
            Ok(p) => &self.entries[self.offsets[p]..self.offsets[p + 1]],
            Err(_) => &[],
        }
    }
}

/// Which completed sequences a node-set pass reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Accept {
    /// Sequence touches every node of the set.
    SpansSet,
    /// Sequence covers all three node pairs of a 3-node set.
    AllPairs,
}

/// Per-node-set driver: gathers the induced temporal edges, encodes each
/// as `local arc × L² + composite label`, runs the sequence DP and maps
/// completed sequences to class keys.
pub(crate) struct NodeSetCounter {
    counter: SequenceCounter,
    ell: usize,
    alphabet: usize,
    l2: u32,
    sigma: Vec<(Time, u32)>,
    indices: Vec<u32>,
}

/// Local arcs of a node set of size `k`: `(a, b)` with `a != b`, indexed as
/// `a * (k - 1) + (b - [b > a])`.
#[inline]
fn arc_id(a: usize, b: usize, k: usize) -> u32 {
    (a * (k - 1) + if b > a { b - 1 } else { b }) as u32
}

#[inline]
fn arc_of(id: u32, k: usize) -> (usize, usize) {
    let a = id as usize / (k - 1);
    let r = id as usize % (k - 1);
    (a, if r >= a { r + 1 } else { r })
}

impl NodeSetCounter {
    pub fn new(max_nodes: usize, ell: usize, alphabet: usize) -> Result<Self> {
        if ell > MAX_KEY_EDGES {
            return Err(Error::unsupported("graphlets with more than 8 edges"));
        }
        let l2 = (alphabet * alphabet) as u32;
        let arcs = max_nodes * (max_nodes - 1);
        Ok(Self {
            counter: SequenceCounter::new(arcs * l2 as usize, ell)?,
            ell,
            alphabet,
            l2,
            sigma: Vec::new(),
            indices: Vec::new(),
        })
    }

    #[allow(clippy::too_many_arguments)]
    pub fn count(
        &mut self,
        g: &TemporalGraph,
        pairs: &PairIndex,
        labels: &[u32],
        nodes: &[NodeId],
        delta: Window,
        accept: Accept,
        tally: &mut Tally,
    ) {
        let k = nodes.len();
        self.indices.clear();
        for a in 0..k {
            for b in a + 1..k {
                self.indices.extend_from_slice(pairs.between(nodes[a], nodes[b]));
            }
        }
        if self.indices.len() < self.ell {
            return;
        }
        self.indices.sort_unstable();
        let local = |v: NodeId| nodes.iter().position(|&x| x == v).expect("edge inside node set");
        self.sigma.clear();
        for &i in &self.indices {
            let e = g.edges()[i as usize];
            let arc = arc_id(local(e.source), local(e.target), k);
            self.sigma.push((e.time, arc * self.l2 + labels[i as usize]));
        }
        self.counter.run(&self.sigma, delta);
        let ell = self.ell;
        let l2 = self.l2;
        let alphabet = self.alphabet;
        let mut syms = [0u32; MAX_KEY_EDGES];
        let mut arcs = [(0u32, 0u32); MAX_KEY_EDGES];
        let mut comp = [0u32; MAX_KEY_EDGES];
        let counter = &self.counter;
        counter.for_each_completed(|key, n| {
            counter.decode(key, &mut syms[..ell]);
            let mut touched = 0u32;
            let mut pair_mask = 0u32;
            for i in 0..ell {
                let (a, b) = arc_of(syms[i] / l2, k);
                comp[i] = syms[i] % l2;
                arcs[i] = (a as u32, b as u32);
                touched |= (1 << a) | (1 << b);
                pair_mask |= 1 << (a.min(b) * k + a.max(b));
            }
            let ok = match accept {
                Accept::SpansSet => touched.count_ones() as usize == k,
                Accept::AllPairs => pair_mask.count_ones() == 3,
            };
            if ok {
                let (pattern, _) = pattern_key_of(&arcs[..ell]);
                tally.add(RawKey { pattern, labels: label_index(&comp[..ell], alphabet) }, n);
            }
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_ids_are_a_bijection() {
        for k in 2..=4 {
            let mut seen = Vec::new();
            for a in 0..k {
                for b in 0..k {
                    if a != b {
                        let id = arc_id(a, b, k);
                        assert_eq!(arc_of(id, k), (a, b));
                        seen.push(id);
                    }
                }
            }
            seen.sort_unstable();
            assert_eq!(seen, (0..(k * (k - 1)) as u32).collect::<Vec<_>>());
        }
    }
}
