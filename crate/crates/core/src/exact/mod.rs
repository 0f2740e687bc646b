//! Exact temporal graphlet counting.
//!
//! [`count_brute_force`] transcribes the graphlet definition directly and is
//! the oracle every fast counter is tested against. [`count_wedges`],
//! [`count_stars`] and [`count_triangles`] are specialized counters for the
//! small families; [`count_general`] enumerates connected static node sets
//! and runs the sliding-window sequence DP ([`dp_sequence_count`]) over the
//! temporal edges of each set.
//!
//! All counters share the same semantics: edges of one graphlet have
//! strictly increasing times, the span `t_last - t_first` is at most `δ`,
//! and each graphlet is counted once, under its own node set.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graphlets::{enumerate_patterns, GraphletCode, NodeCounts, RawKey};
use crate::tgraph::{TemporalGraph, Window};
use crate::{Error, GraphletCounts, Result};

mod brute;
mod dp;
mod general;
mod nodeset;
mod stars;
mod triangles;
mod wedges;

pub use brute::{count_brute_force, count_brute_force_with_guard, BRUTE_FORCE_GUARD};
pub use dp::{dp_sequence_count, SequenceCounter};
pub use general::count_general;
pub use stars::count_stars;
pub use triangles::count_triangles;
pub use wedges::count_wedges;

/// Classes per counter above which dense tables give way to sparse maps.
pub(crate) const DENSE_CLASS_LIMIT: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountConfig {
    pub delta: Window,
    pub k_set: NodeCounts,
    pub ell: usize,
    pub labeled: bool,
}

impl CountConfig {
    pub fn new(delta: Window, k_set: NodeCounts, ell: usize, labeled: bool) -> Self {
        Self { delta, k_set, ell, labeled }
    }

    /// Three-node, two-edge graphlets.
    pub fn wedges(delta: Window, labeled: bool) -> Self {
        Self::new(delta, NodeCounts::only(3), 2, labeled)
    }

    /// Three-node, three-edge graphlets (stars and triangles).
    pub fn three_edge(delta: Window, labeled: bool) -> Self {
        Self::new(delta, NodeCounts::only(3), 3, labeled)
    }
}

/// Alphabet size the counters work with: unlabeled counting is labeled
/// counting with `L = 1`.
#[inline]
pub(crate) fn effective_alphabet(g: &TemporalGraph, labeled: bool) -> usize {
    if labeled {
        g.alphabet_size()
    } else {
        1
    }
}

/// Composite edge label per edge, `0` for every edge when unlabeled.
pub(crate) fn edge_labels(g: &TemporalGraph, labeled: bool) -> Vec<u32> {
    if !labeled {
        return vec![0; g.num_edges()];
    }
    let l = g.alphabet_size() as u32;
    g.edges()
        .iter()
        .map(|e| g.label(e.source, e.time) as u32 * l + g.label(e.target, e.time.saturating_add(1)) as u32)
        .collect()
}

/// Accumulator keyed by [`RawKey`]: a dense array over the
/// `(pattern, label sequence)` grid when the codebook is small, a sorted map
/// otherwise.
pub(crate) struct Tally {
    ell: usize,
    alphabet: usize,
    labeled: bool,
    label_space: u64,
    dense_patterns: Vec<u64>,
    dense: Vec<u64>,
    sparse: BTreeMap<RawKey, u64>,
}

impl Tally {
    pub fn new(ell: usize, alphabet: usize, labeled: bool) -> Result<Self> {
        let label_space = crate::graphlets::num_label_sequences(alphabet, ell)
            .map_err(|_| Error::unsupported(format!("label sequences of {ell} edges over {alphabet} labels")))?;
        let mut dense_patterns = Vec::new();
        let mut dense = Vec::new();
        if (2..=3).contains(&ell) {
            let patterns: Vec<u64> = enumerate_patterns(NodeCounts::from_slice(&[2, 3])?, ell)
                .iter()
                .map(|p| p.key().expect("short pattern"))
                .collect();
            let size = patterns.len() as u64 * label_space;
            if size <= DENSE_CLASS_LIMIT {
                dense = vec![0; size as usize];
                dense_patterns = patterns;
            }
        }
        Ok(Self { ell, alphabet, labeled, label_space, dense_patterns, dense, sparse: BTreeMap::new() })
    }

    #[inline]
    pub fn add(&mut self, key: RawKey, n: u64) {
        if n == 0 {
            return;
        }
        if !self.dense.is_empty() {
            if let Ok(rank) = self.dense_patterns.binary_search(&key.pattern) {
                self.dense[rank * self.label_space as usize + key.labels as usize] += n;
                return;
            }
        }
        *self.sparse.entry(key).or_insert(0) += n;
    }

    pub fn into_counts(self) -> GraphletCounts {
        let mut out = GraphletCounts::new();
        let (ell, alphabet, labeled) = (self.ell, self.alphabet, self.labeled);
        let to_code = |key: RawKey| GraphletCode::from_raw(key, ell, alphabet, labeled);
        for (rank, &pattern) in self.dense_patterns.iter().enumerate() {
            let row = &self.dense[rank * self.label_space as usize..(rank + 1) * self.label_space as usize];
            for (labels, &n) in row.iter().enumerate() {
                out.add(to_code(RawKey { pattern, labels: labels as u64 }), n);
            }
        }
        for (key, n) in self.sparse {
            out.add(to_code(key), n);
        }
        out
    }
}

/// Label index of a sequence of composite edge labels (base `L²`).
#[inline]
pub(crate) fn label_index(composite: &[u32], alphabet: usize) -> u64 {
    let base = (alphabet * alphabet) as u64;
    composite.iter().fold(0u64, |acc, &c| acc * base + c as u64)
}
