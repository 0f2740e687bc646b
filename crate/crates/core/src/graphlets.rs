//! Canonical identity of labeled temporal graphlet classes.
//!
//! Two graphlets are equivalent when they have the same number of edges, a
//! node bijection that maps the i-th edge onto the i-th edge, and (when
//! labeled) the same label sequence. Because the bijection is fixed by edge
//! positions, renaming nodes by order of first appearance in the
//! chronological edge sequence yields a canonical form; no general graph
//! canonization is needed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::tgraph::{Label, LabelTimeline, TemporalEdge, TemporalGraph, Time};
use crate::{Error, Result};

/// Maximum number of node slots a packed pattern key can hold.
pub(crate) const MAX_KEY_SLOTS: usize = 16;
/// Maximum number of edges a packed pattern key can hold.
pub(crate) const MAX_KEY_EDGES: usize = 8;

/// Set of admissible graphlet node counts `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NodeCounts(u32);

impl NodeCounts {
    pub fn from_slice(ks: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &k in ks {
            if !(2..32).contains(&k) {
                return Err(Error::invalid(format!("node count {k} out of range")));
            }
            bits |= 1 << k;
        }
        if bits == 0 {
            return Err(Error::invalid("empty node-count set"));
        }
        Ok(Self(bits))
    }

    pub fn only(k: usize) -> Self {
        Self::from_slice(&[k]).expect("valid node count")
    }

    #[inline]
    pub fn contains(&self, k: usize) -> bool {
        k < 32 && self.0 & (1 << k) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(|&k| self.contains(k))
    }

    pub fn max(&self) -> usize {
        31 - self.0.leading_zeros() as usize
    }

    /// True when every member lies in `allowed`.
    pub fn is_subset_of(&self, allowed: &[usize]) -> bool {
        self.iter().all(|k| allowed.contains(&k))
    }
}

impl fmt::Display for NodeCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphletFamily {
    Wedge,
    Star3,
    Triangle,
    TwoNode,
    General,
}

impl GraphletFamily {
    pub fn name(&self) -> &'static str {
        match self {
            GraphletFamily::Wedge => "wedge",
            GraphletFamily::Star3 => "star",
            GraphletFamily::Triangle => "triangle",
            GraphletFamily::TwoNode => "two-node",
            GraphletFamily::General => "general",
        }
    }
}

impl fmt::Display for GraphletFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Chronological sequence of `(source slot, target slot)` pairs in
/// first-appearance form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Vec<(u8, u8)>);

impl Pattern {
    /// Renames arbitrary node ids by order of first appearance.
    pub fn canonical<I>(arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut seen: Vec<u32> = Vec::new();
        let slot = |v: u32, seen: &mut Vec<u32>| -> Result<u8> {
            if let Some(p) = seen.iter().position(|&x| x == v) {
                return Ok(p as u8);
            }
            if seen.len() >= u8::MAX as usize {
                return Err(Error::unsupported("graphlets with more than 255 nodes"));
            }
            seen.push(v);
            Ok((seen.len() - 1) as u8)
        };
        let mut out = Vec::new();
        for (u, v) in arcs {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let a = slot(u, &mut seen)?;
            let b = slot(v, &mut seen)?;
            out.push((a, b));
        }
        Ok(Self(out))
    }

    /// Accepts a slot sequence that is already canonical.
    pub fn from_slots(arcs: Vec<(u8, u8)>) -> Result<Self> {
        let p = Self(arcs);
        if !p.is_canonical() {
            return Err(Error::invalid("slot sequence is not in first-appearance form"));
        }
        Ok(p)
    }

    fn is_canonical(&self) -> bool {
        let mut next = 0u8;
        for &(a, b) in &self.0 {
            if a == b {
                return false;
            }
            for s in [a, b] {
                if s > next {
                    return false;
                }
                if s == next {
                    next += 1;
                }
            }
        }
        true
    }

    pub fn arcs(&self) -> &[(u8, u8)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn num_slots(&self) -> usize {
        self.0.iter().map(|&(a, b)| a.max(b) as usize + 1).max().unwrap_or(0)
    }

    /// Connectivity of the underlying undirected static graph.
    pub fn is_connected(&self) -> bool {
        let n = self.num_slots();
        if n == 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = n;
        for &(a, b) in &self.0 {
            let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        }
        comps == 1
    }

    pub fn family(&self) -> GraphletFamily {
        let slots = self.num_slots();
        let ell = self.len();
        if slots == 2 {
            return GraphletFamily::TwoNode;
        }
        if slots == 3 && ell == 2 {
            return GraphletFamily::Wedge;
        }
        if slots == 3 && ell == 3 {
            let mut pairs: Vec<(u8, u8)> = self.0.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            pairs.sort_unstable();
            pairs.dedup();
            if pairs.len() == 3 {
                return GraphletFamily::Triangle;
            }
            if (0..3u8).any(|s| self.0.iter().all(|&(a, b)| a == s || b == s)) {
                return GraphletFamily::Star3;
            }
        }
        GraphletFamily::General
    }

    pub(crate) fn key(&self) -> Option<u64> {
        if self.len() > MAX_KEY_EDGES || self.num_slots() > MAX_KEY_SLOTS {
            return None;
        }
        Some(self.0.iter().fold(0u64, |acc, &(a, b)| (acc << 8) | ((a as u64) << 4) | b as u64))
    }

    pub(crate) fn from_key(key: u64, ell: usize) -> Self {
        let arcs = (0..ell)
            .map(|i| {
                let byte = (key >> (8 * (ell - 1 - i))) & 0xff;
                ((byte >> 4) as u8, (byte & 0xf) as u8)
            })
            .collect();
        Self(arcs)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (a, b)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str("]")
    }
}

/// Packed pattern key of a short arc sequence over arbitrary small node ids,
/// without allocating. Returns `(key, number of slots)`.
#[inline]
pub(crate) fn pattern_key_of(arcs: &[(u32, u32)]) -> (u64, usize) {
    debug_assert!(arcs.len() <= MAX_KEY_EDGES);
    let mut seen = [u32::MAX; MAX_KEY_SLOTS];
    let mut n = 0usize;
    let mut key = 0u64;
    for &(u, v) in arcs {
        let mut slot = |x: u32| -> u64 {
            for (i, &s) in seen[..n].iter().enumerate() {
                if s == x {
                    return i as u64;
                }
            }
            seen[n] = x;
            n += 1;
            (n - 1) as u64
        };
        let a = slot(u);
        let b = slot(v);
        key = (key << 8) | (a << 4) | b;
    }
    (key, n)
}

/// Canonical identity of an equivalence class: pattern plus the `2ℓ` label
/// sequence `(l(u1,t1), l(v1,t1+1), …)`, empty when unlabeled.
///
/// The derived ordering (pattern, then labels) equals the order of the
/// packed key `pattern index × L^{2ℓ} + label index`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphletCode {
    pub pattern: Pattern,
    pub labels: Vec<Label>,
}

impl GraphletCode {
    pub fn ell(&self) -> usize {
        self.pattern.len()
    }

    pub fn family(&self) -> GraphletFamily {
        self.pattern.family()
    }

    pub fn is_labeled(&self) -> bool {
        !self.labels.is_empty()
    }

    pub(crate) fn from_raw(key: RawKey, ell: usize, alphabet_size: usize, labeled: bool) -> Self {
        let pattern = Pattern::from_key(key.pattern, ell);
        let labels = if labeled {
            let l = alphabet_size as u64;
            let mut out = vec![0 as Label; 2 * ell];
            let mut rest = key.labels;
            for slot in out.iter_mut().rev() {
                *slot = (rest % l) as Label;
                rest /= l;
            }
            out
        } else {
            Vec::new()
        };
        Self { pattern, labels }
    }
}

impl fmt::Display for GraphletCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.pattern)?;
        if self.labels.is_empty() {
            return f.write_str("-");
        }
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Allocation-free class key used inside counters: packed pattern plus the
/// label index (composite edge labels read as base-`L²` digits, first edge
/// most significant).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct RawKey {
    pub pattern: u64,
    pub labels: u64,
}

/// Composite edge label `l(u,t)·L + l(v,t+1)`; injective over label pairs.
pub fn edge_label_code(e: &TemporalEdge, g: &TemporalGraph) -> Result<u32> {
    let src = g.label_at(e.source, e.time)?;
    let dst = g.label_at(e.target, e.time.saturating_add(1))?;
    Ok(compose_edge_label(src, dst, g.alphabet_size()))
}

#[inline]
pub fn compose_edge_label(src: Label, dst: Label, alphabet_size: usize) -> u32 {
    src as u32 * alphabet_size as u32 + dst as u32
}

#[inline]
pub fn decompose_edge_label(code: u32, alphabet_size: usize) -> (Label, Label) {
    let l = alphabet_size as u32;
    ((code / l) as Label, (code % l) as Label)
}

/// `L^{2ℓ}`.
pub fn num_label_sequences(alphabet_size: usize, ell: usize) -> Result<u64> {
    if alphabet_size == 0 || ell == 0 {
        return Err(Error::invalid("alphabet size and edge count must be positive"));
    }
    let exp = u32::try_from(ell.checked_mul(2).ok_or(Error::Overflow("label sequence count"))?)
        .map_err(|_| Error::Overflow("label sequence count"))?;
    (alphabet_size as u64).checked_pow(exp).ok_or(Error::Overflow("label sequence count"))
}

/// Canonical code of a chronologically ordered edge sequence.
pub fn canonical_code(edges: &[TemporalEdge], g: &TemporalGraph, labeled: bool) -> Result<GraphletCode> {
    if edges.is_empty() {
        return Err(Error::invalid("empty graphlet"));
    }
    if edges.windows(2).any(|w| w[0].time >= w[1].time) {
        return Err(Error::invalid("graphlet edge times must be strictly increasing"));
    }
    let pattern = Pattern::canonical(edges.iter().map(|e| (e.source, e.target)))?;
    if !pattern.is_connected() {
        return Err(Error::invalid("graphlet is not connected"));
    }
    let labels = if labeled {
        let mut out = Vec::with_capacity(2 * edges.len());
        for e in edges {
            out.push(g.label_at(e.source, e.time)?);
            out.push(g.label_at(e.target, e.time.saturating_add(1))?);
        }
        out
    } else {
        Vec::new()
    };
    Ok(GraphletCode { pattern, labels })
}

/// All canonical connected patterns with `ell` edges whose slot count lies
/// in `ks`, sorted.
pub fn enumerate_patterns(ks: NodeCounts, ell: usize) -> Vec<Pattern> {
    fn rec(ell: usize, max_slots: usize, cur: &mut Vec<(u8, u8)>, used: usize, out: &mut Vec<Pattern>) {
        if cur.len() == ell {
            out.push(Pattern(cur.clone()));
            return;
        }
        for a in 0..=used {
            let used_a = if a == used { used + 1 } else { used };
            for b in 0..=used_a {
                if a == b {
                    continue;
                }
                let used_b = if b == used_a { used_a + 1 } else { used_a };
                if used_b > max_slots {
                    continue;
                }
                cur.push((a as u8, b as u8));
                rec(ell, max_slots, cur, used_b, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if ell == 0 {
        return out;
    }
    rec(ell, ks.max(), &mut Vec::new(), 0, &mut out);
    out.retain(|p| p.is_connected() && ks.contains(p.num_slots()));
    out.sort();
    out
}

/// Exhaustive, sorted list of class codes for `(ks, ell)`; when
/// `alphabet_size` is given each pattern is crossed with all `L^{2ℓ}` label
/// sequences.
pub fn enumerate_classes(ks: NodeCounts, ell: usize, alphabet_size: Option<usize>) -> Result<Vec<GraphletCode>> {
    if !ks.is_subset_of(&[2, 3]) || !(2..=3).contains(&ell) {
        return Err(Error::unsupported(format!("codebook for k={{{ks}}}, ell={ell}")));
    }
    let patterns = enumerate_patterns(ks, ell);
    let Some(l) = alphabet_size else {
        return Ok(patterns.into_iter().map(|pattern| GraphletCode { pattern, labels: Vec::new() }).collect());
    };
    let per = num_label_sequences(l, ell)?;
    let mut out = Vec::with_capacity(patterns.len() * per as usize);
    for p in &patterns {
        for idx in 0..per {
            let code = GraphletCode::from_raw(RawKey { pattern: p.key().expect("short pattern"), labels: idx }, ell, l, true);
            out.push(code);
        }
    }
    Ok(out)
}

/// Enumerated classes with a stable index per class.
#[derive(Clone, Debug)]
pub struct Codebook {
    codes: Vec<GraphletCode>,
    index: BTreeMap<GraphletCode, usize>,
}

impl Codebook {
    pub fn new(ks: NodeCounts, ell: usize, alphabet_size: Option<usize>) -> Result<Self> {
        let codes = enumerate_classes(ks, ell, alphabet_size)?;
        let index = codes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        Ok(Self { codes, index })
    }

    pub fn codes(&self) -> &[GraphletCode] {
        &self.codes
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn index_of(&self, code: &GraphletCode) -> Option<usize> {
        self.index.get(code).copied()
    }
}

/// A small graph realizing `code`: nodes are the pattern slots, edge `i`
/// is at time `3i + 1`, and label events sit exactly at the query times
/// `3i + 1` (source) and `3i + 2` (target). Returns the graph and the
/// graphlet's edges.
pub fn witness(code: &GraphletCode, alphabet_size: usize) -> Result<(TemporalGraph, Vec<TemporalEdge>)> {
    let n = code.pattern.num_slots();
    let edges: Vec<TemporalEdge> = code
        .pattern
        .arcs()
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| TemporalEdge::new(a as u32, b as u32, 3 * i as Time + 1))
        .collect();
    let mut g = TemporalGraph::new(n, edges.clone(), alphabet_size)?;
    if code.is_labeled() {
        let mut events: Vec<Vec<(Time, Label)>> = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            events[e.source as usize].push((e.time, code.labels[2 * i]));
            events[e.target as usize].push((e.time + 1, code.labels[2 * i + 1]));
        }
        let timelines = events
            .into_iter()
            .map(|mut ev| {
                ev.sort_unstable();
                LabelTimeline::with_events(0, ev)
            })
            .collect::<Result<Vec<_>>>()?;
        g = g.with_timelines(timelines)?;
    }
    Ok((g, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(arcs: &[(u8, u8)]) -> Pattern {
        Pattern::from_slots(arcs.to_vec()).unwrap()
    }

    fn e(u: u32, v: u32, t: Time) -> TemporalEdge {
        TemporalEdge::new(u, v, t)
    }

    #[test]
    fn single_edge_codes_ignore_times_and_ids() {
        let g = TemporalGraph::new(30, vec![e(3, 4, 3), e(20, 7, 16)], 1).unwrap();
        let a = canonical_code(&[e(3, 4, 3)], &g, false).unwrap();
        let b = canonical_code(&[e(20, 7, 16)], &g, false).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.pattern.arcs(), &[(0, 1)]);
    }

    #[test]
    fn triangle_codes_match() {
        // (3,1,1),(2,3,2),(1,2,3) and (3,1,17),(2,3,18),(1,2,21)
        let g = TemporalGraph::new(4, vec![], 1).unwrap();
        let a = canonical_code(&[e(3, 1, 1), e(2, 3, 2), e(1, 2, 3)], &g, false).unwrap();
        let b = canonical_code(&[e(3, 1, 17), e(2, 3, 18), e(1, 2, 21)], &g, false).unwrap();
        assert_eq!(a.pattern.arcs(), &[(0, 1), (2, 0), (1, 2)]);
        assert_eq!(a, b);
        assert_eq!(a.family(), GraphletFamily::Triangle);
    }

    #[test]
    fn stars_with_swapped_edges_differ() {
        let g = TemporalGraph::new(4, vec![], 1).unwrap();
        // (a): 2->3 at 1, 2->3 at 2, 1->2 at 3
        let a = canonical_code(&[e(2, 3, 1), e(2, 3, 2), e(1, 2, 3)], &g, false).unwrap();
        let a2 = canonical_code(&[e(2, 3, 10), e(2, 3, 13), e(1, 2, 16)], &g, false).unwrap();
        // (b): 1->2 at 1, 2->3 at 2, 2->3 at 3
        let b = canonical_code(&[e(1, 2, 1), e(2, 3, 2), e(2, 3, 3)], &g, false).unwrap();
        // (c): 2->3 at 1, 3->2 at 2, 1->2 at 3
        let c = canonical_code(&[e(2, 3, 1), e(3, 2, 2), e(1, 2, 3)], &g, false).unwrap();
        assert_eq!(a, a2);
        assert_eq!(a.pattern.arcs(), &[(0, 1), (0, 1), (2, 0)]);
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_ne!(b, c);
        for code in [&a, &b, &c] {
            assert_eq!(code.family(), GraphletFamily::Star3);
        }
    }

    #[test]
    fn canonical_code_rejects_bad_input() {
        let g = TemporalGraph::new(5, vec![], 1).unwrap();
        assert!(canonical_code(&[e(0, 1, 2), e(1, 2, 2)], &g, false).is_err());
        assert!(canonical_code(&[e(0, 1, 3), e(1, 2, 2)], &g, false).is_err());
        assert!(canonical_code(&[e(0, 1, 1), e(2, 3, 2)], &g, false).is_err());
    }

    #[test]
    fn labeled_code_reads_target_one_step_later() {
        let g = TemporalGraph::new(2, vec![e(0, 1, 4)], 2)
            .unwrap()
            .with_timelines(vec![
                LabelTimeline::with_events(0, vec![(4, 1)]).unwrap(),
                LabelTimeline::with_events(0, vec![(5, 1)]).unwrap(),
            ])
            .unwrap();
        let code = canonical_code(&[e(0, 1, 4)], &g, true).unwrap();
        assert_eq!(code.labels, vec![1, 1]);
        assert_eq!(edge_label_code(&e(0, 1, 4), &g).unwrap(), 3);
    }

    #[test]
    fn family_examples() {
        assert_eq!(pat(&[(0, 1), (1, 2)]).family(), GraphletFamily::Wedge);
        assert_eq!(pat(&[(0, 1), (0, 1), (2, 0)]).family(), GraphletFamily::Star3);
        assert_eq!(pat(&[(0, 1), (2, 0), (1, 2)]).family(), GraphletFamily::Triangle);
        assert_eq!(pat(&[(0, 1), (1, 0), (0, 1)]).family(), GraphletFamily::TwoNode);
        assert_eq!(pat(&[(0, 1), (1, 2), (2, 3)]).family(), GraphletFamily::General);
    }

    #[test]
    fn star_center_by_brute_force_incidence() {
        // slot 0 is incident to every arc of [(0,1),(0,1),(2,0)]; slots 1 and 2 are not
        let p = pat(&[(0, 1), (0, 1), (2, 0)]);
        let incident: Vec<usize> = (0..3u8)
            .map(|s| p.arcs().iter().filter(|&&(a, b)| a == s || b == s).count())
            .collect();
        assert_eq!(incident, vec![3, 2, 1]);
    }

    #[test]
    fn label_sequence_counts() {
        assert_eq!(num_label_sequences(2, 2).unwrap(), 16);
        assert_eq!(num_label_sequences(2, 3).unwrap(), 64);
        assert_eq!(num_label_sequences(1, 7).unwrap(), 1);
        assert_eq!(num_label_sequences(1 << 16, 3), Err(Error::Overflow("label sequence count")));
        assert!(num_label_sequences(0, 2).is_err());
    }

    #[test]
    fn codebook_sizes() {
        let k3 = NodeCounts::only(3);
        let k23 = NodeCounts::from_slice(&[2, 3]).unwrap();
        assert_eq!(enumerate_classes(k3, 2, None).unwrap().len(), 4);
        let all = enumerate_classes(k23, 3, None).unwrap();
        assert_eq!(all.len(), 36);
        let fam = |f| all.iter().filter(|c| c.family() == f).count();
        assert_eq!(fam(GraphletFamily::Triangle), 8);
        assert_eq!(fam(GraphletFamily::Star3), 24);
        assert_eq!(fam(GraphletFamily::TwoNode), 4);
        assert_eq!(enumerate_classes(k3, 2, Some(2)).unwrap().len(), 64);
        assert_eq!(enumerate_classes(k23, 3, Some(2)).unwrap().len(), 2304);
        assert!(enumerate_classes(NodeCounts::only(4), 3, None).is_err());
        assert!(enumerate_classes(k3, 4, None).is_err());
    }

    #[test]
    fn codebook_is_sorted_and_unique() {
        let k23 = NodeCounts::from_slice(&[2, 3]).unwrap();
        let codes = enumerate_classes(k23, 3, Some(2)).unwrap();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn edge_label_codes_are_injective() {
        for l in 1..=5usize {
            let mut seen = alloc::collections::BTreeSet::new();
            for a in 0..l as Label {
                for b in 0..l as Label {
                    let c = compose_edge_label(a, b, l);
                    assert!(c < (l * l) as u32);
                    assert_eq!(decompose_edge_label(c, l), (a, b));
                    assert!(seen.insert(c));
                }
            }
        }
        assert_eq!(compose_edge_label(1, 0, 2), 2);
        assert_eq!(compose_edge_label(0, 0, 2), 0);
    }

    #[test]
    fn witnesses_reproduce_their_code() {
        let k23 = NodeCounts::from_slice(&[2, 3]).unwrap();
        for code in enumerate_classes(k23, 3, Some(2)).unwrap() {
            let (g, edges) = witness(&code, 2).unwrap();
            assert_eq!(canonical_code(&edges, &g, true).unwrap(), code);
        }
    }

    #[test]
    fn pattern_key_roundtrip() {
        let p = pat(&[(0, 1), (2, 0), (1, 2)]);
        let k = p.key().unwrap();
        assert_eq!(Pattern::from_key(k, 3), p);
        assert_eq!(pattern_key_of(&[(9, 4), (7, 9), (4, 7)]), (k, 3));
    }
}
