use alloc::vec;
use alloc::vec::Vec;

use super::{count_general, edge_labels, effective_alphabet, CountConfig, Tally};
use crate::graphlets::{pattern_key_of, GraphletFamily, RawKey};
use crate::tgraph::{NodeId, TemporalGraph, Time, Window};
use crate::{GraphletCounts, Result};

/// Largest per-center symbol alphabet (`2 L²`) handled by the center DP;
/// above it stars are read off the general counter.
const MAX_STAR_SYMBOLS: usize = 32;

/// Neighbor sequences of a three-edge star around its center, `A` being the
/// neighbor of the first edge.
const AAB: usize = 0;
const ABA: usize = 1;
const ABB: usize = 2;

/// Exact counts of three-edge stars: three temporal edges between a center
/// and exactly two distinct neighbors.
///
/// One pass per center over its time-sorted incident edges. Each edge is
/// encoded as `direction × L² + composite label`, and for every edge taken as
/// the last one of a star, the number of earlier pairs is read from
/// per-neighbor pair tables maintained under the sliding window.
pub fn count_stars(g: &TemporalGraph, delta: Window, labeled: bool) -> Result<GraphletCounts> {
    let alphabet = effective_alphabet(g, labeled);
    let l2 = alphabet * alphabet;
    let s = 2 * l2;
    if s > MAX_STAR_SYMBOLS {
        let cfg = CountConfig::three_edge(delta, labeled);
        return Ok(count_general(g, &cfg)?.only(GraphletFamily::Star3));
    }
    let labels = edge_labels(g, labeled);
    let inc = g.incidence();
    let mut out = vec![0u64; 3 * s * s * s];
    let mut state = CenterState::new(g.num_nodes(), s);
    let mut stream: Vec<(Time, u32, usize)> = Vec::new();
    for c in 0..g.num_nodes() as NodeId {
        let list = inc.edges_of(c);
        if list.len() < 3 {
            continue;
        }
        stream.clear();
        for &ei in list {
            let e = g.edges()[ei as usize];
            let dir = usize::from(e.source != c);
            let n = e.other(c).expect("incident edge");
            stream.push((e.time, n, dir * l2 + labels[ei as usize] as usize));
        }
        state.run(&stream, delta, &mut out);
    }

    let mut tally = Tally::new(3, alphabet, labeled)?;
    for (p, block) in out.chunks(s * s * s).enumerate() {
        let neighbors: [u32; 3] = match p {
            AAB => [1, 1, 2],
            ABA => [1, 2, 1],
            _ => [1, 2, 2],
        };
        for (idx, &n) in block.iter().enumerate() {
            if n == 0 {
                continue;
            }
            let syms = [idx / (s * s), idx / s % s, idx % s];
            let mut arcs = [(0u32, 0u32); 3];
            let mut comp = 0u64;
            for i in 0..3 {
                arcs[i] = if syms[i] < l2 { (0, neighbors[i]) } else { (neighbors[i], 0) };
                comp = comp * l2 as u64 + (syms[i] % l2) as u64;
            }
            let (pattern, _) = pattern_key_of(&arcs);
            tally.add(RawKey { pattern, labels: comp }, n);
        }
    }
    Ok(tally.into_counts())
}

/// Sliding-window tables for one center, indexed by local neighbor id.
///
/// * `single[n][x]`: window edges to `n` with symbol `x`
/// * `same[n][x][y]`: window pairs `e1 < e2`, both to `n`
/// * `snap[n][x][y]`: over window edges `e1` to `n` with symbol `x`, the sum
///   of `cum[y]` right after `e1`'s time group was inserted
/// * `pre[n][x][y]`: over window edges `e2` to `n` with symbol `y`, the sum
///   of `cum[x]` right before `e2`'s time group was inserted
struct CenterState {
    s: usize,
    local: Vec<u32>,
    touched: Vec<NodeId>,
    single: Vec<u64>,
    same: Vec<u64>,
    snap: Vec<u64>,
    pre: Vec<u64>,
    same_total: Vec<u64>,
    cum: Vec<u64>,
    expired: Vec<u64>,
    /// cum before and after each group, `2s` values per group
    snapshots: Vec<u64>,
}

impl CenterState {
    fn new(num_nodes: usize, s: usize) -> Self {
        Self {
            s,
            local: vec![u32::MAX; num_nodes],
            touched: Vec::new(),
            single: Vec::new(),
            same: Vec::new(),
            snap: Vec::new(),
            pre: Vec::new(),
            same_total: vec![0; s * s],
            cum: vec![0; s],
            expired: vec![0; s],
            snapshots: Vec::new(),
        }
    }

    fn reset(&mut self, stream: &[(Time, u32, usize)]) {
        for &v in &self.touched {
            self.local[v as usize] = u32::MAX;
        }
        self.touched.clear();
        for &(_, n, _) in stream {
            if self.local[n as usize] == u32::MAX {
                self.local[n as usize] = self.touched.len() as u32;
                self.touched.push(n);
            }
        }
        let (k, s) = (self.touched.len(), self.s);
        for (buf, len) in [
            (&mut self.single, k * s),
            (&mut self.same, k * s * s),
            (&mut self.snap, k * s * s),
            (&mut self.pre, k * s * s),
        ] {
            buf.clear();
            buf.resize(len, 0);
        }
        for buf in [&mut self.same_total, &mut self.cum, &mut self.expired] {
            buf.iter_mut().for_each(|x| *x = 0);
        }
        self.snapshots.clear();
    }

    fn run(&mut self, stream: &[(Time, u32, usize)], delta: Window, out: &mut [u64]) {
        self.reset(stream);
        let s = self.s;
        let s2 = s * s;
        let s3 = s2 * s;
        let mut groups: Vec<(usize, usize)> = Vec::new();
        let mut i = 0;
        while i < stream.len() {
            let t = stream[i].0;
            let mut j = i;
            while j < stream.len() && stream[j].0 == t {
                j += 1;
            }
            groups.push((i, j));
            i = j;
        }
        let mut head = 0;
        for gi in 0..groups.len() {
            let (lo, hi) = groups[gi];
            let t = stream[lo].0;
            while head < gi && !delta.admits(t - stream[groups[head].0].0) {
                self.expire(stream, groups[head], head);
                head += 1;
            }
            // every member of the group closes stars over the earlier groups
            for &(_, n, x) in &stream[lo..hi] {
                let n = self.local[n as usize] as usize;
                let single = &self.single[n * s..(n + 1) * s];
                let same = &self.same[n * s2..(n + 1) * s2];
                let snap = &self.snap[n * s2..(n + 1) * s2];
                let pre = &self.pre[n * s2..(n + 1) * s2];
                for a in 0..s {
                    for b in 0..s {
                        let ab = a * s + b;
                        let cell = (a * s + b) * s + x;
                        out[AAB * s3 + cell] += self.same_total[ab] - same[ab];
                        out[ABA * s3 + cell] += (single[a] * self.cum[b]).wrapping_sub(snap[ab]).wrapping_sub(same[ab]);
                        out[ABB * s3 + cell] +=
                            pre[ab].wrapping_sub(self.expired[a] * single[b]).wrapping_sub(same[ab]);
                    }
                }
            }
            // pairs closed by the group, against the state before it
            self.snapshots.extend_from_slice(&self.cum);
            for &(_, n, x) in &stream[lo..hi] {
                let n = self.local[n as usize] as usize;
                for a in 0..s {
                    let c = self.single[n * s + a];
                    self.same[n * s2 + a * s + x] += c;
                    self.same_total[a * s + x] += c;
                    self.pre[n * s2 + a * s + x] += self.cum[a];
                }
            }
            for &(_, n, x) in &stream[lo..hi] {
                let n = self.local[n as usize] as usize;
                self.single[n * s + x] += 1;
                self.cum[x] += 1;
            }
            self.snapshots.extend_from_slice(&self.cum);
            for &(_, n, x) in &stream[lo..hi] {
                let n = self.local[n as usize] as usize;
                for b in 0..s {
                    self.snap[n * s2 + x * s + b] += self.cum[b];
                }
            }
        }
    }

    fn expire(&mut self, stream: &[(Time, u32, usize)], (lo, hi): (usize, usize), group: usize) {
        let s = self.s;
        let s2 = s * s;
        for &(_, n, y) in &stream[lo..hi] {
            let n = self.local[n as usize] as usize;
            self.single[n * s + y] -= 1;
            self.expired[y] += 1;
        }
        let before = group * 2 * s;
        let after = before + s;
        for &(_, n, y) in &stream[lo..hi] {
            let n = self.local[n as usize] as usize;
            for b in 0..s {
                let c = self.single[n * s + b];
                self.same[n * s2 + y * s + b] -= c;
                self.same_total[y * s + b] -= c;
                self.snap[n * s2 + y * s + b] -= self.snapshots[after + b];
                self.pre[n * s2 + b * s + y] -= self.snapshots[before + b];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::count_brute_force;
    use crate::tgraph::TemporalEdge;

    fn graph(n: usize, edges: &[(u32, u32, u64)]) -> TemporalGraph {
        TemporalGraph::new(n, edges.iter().map(|&(u, v, t)| TemporalEdge::new(u, v, t)).collect::<Vec<_>>(), 1)
            .unwrap()
    }

    #[test]
    fn star_host() {
        let g = graph(3, &[(0, 1, 3), (1, 2, 1), (1, 2, 2)]);
        let c = count_stars(&g, Window::Bounded(10), false).unwrap();
        assert_eq!(c.total(), 1);
        let (code, _) = c.iter().next().unwrap();
        assert_eq!(code.pattern.arcs(), &[(0, 1), (0, 1), (2, 0)]);
        assert!(count_stars(&g, Window::Bounded(1), false).unwrap().is_empty());
    }

    #[test]
    fn three_neighbors_are_not_stars() {
        let g = graph(4, &[(0, 1, 1), (0, 2, 2), (0, 3, 3)]);
        assert!(count_stars(&g, Window::Bounded(10), false).unwrap().is_empty());
    }

    #[test]
    fn busy_center_matches_brute_force() {
        let edges = [
            (0, 1, 1),
            (2, 0, 1),
            (0, 2, 2),
            (1, 0, 3),
            (0, 3, 3),
            (3, 0, 4),
            (0, 1, 6),
            (2, 0, 7),
            (0, 2, 7),
            (1, 2, 8),
        ];
        let g = graph(4, &edges);
        for delta in [Window::Bounded(1), Window::Bounded(3), Window::Unbounded] {
            let expected = count_brute_force(&g, &CountConfig::three_edge(delta, false))
                .unwrap()
                .only(GraphletFamily::Star3);
            assert_eq!(count_stars(&g, delta, false).unwrap(), expected, "{delta:?}");
        }
    }
}
