//! Sliding-window dynamic program over a chronological symbol stream.
//!
//! Level `k` holds, per encoded prefix of `k` symbols, the number of
//! strictly time-increasing subsequences of the current window with that
//! encoding. Prefixes are encoded as base-`A` integers, first symbol most
//! significant.
//!
//! Edges with equal times are handled as one group: the group first expires
//! the groups that fall out of the window, then every member extends the
//! state as it was before the group (levels are updated longest first, so a
//! member never sees its group-mates), then the group is inserted.
//! Expiring a group retires the prefixes that begin with its members,
//! shortest lengths first: once level `k-1` no longer contains sequences
//! starting in the group, the sequences of length `k` starting with a member
//! of symbol `x` are exactly `x` followed by a level-`k-1` entry.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::tgraph::{Time, Window};
use crate::{Error, Result};

const DENSE_LEVEL_LIMIT: u64 = 1 << 16;

enum Level {
    Dense(Vec<u64>),
    Sparse(BTreeMap<u64, u64>),
}

impl Level {
    fn new(size: u64) -> Self {
        if size <= DENSE_LEVEL_LIMIT {
            Level::Dense(vec![0; size as usize])
        } else {
            Level::Sparse(BTreeMap::new())
        }
    }

    fn clear(&mut self) {
        match self {
            Level::Dense(v) => v.iter_mut().for_each(|x| *x = 0),
            Level::Sparse(m) => m.clear(),
        }
    }

    #[inline]
    fn add(&mut self, key: u64, n: u64) {
        match self {
            Level::Dense(v) => v[key as usize] += n,
            Level::Sparse(m) => *m.entry(key).or_insert(0) += n,
        }
    }

    #[inline]
    fn sub(&mut self, key: u64, n: u64) {
        match self {
            Level::Dense(v) => v[key as usize] -= n,
            Level::Sparse(m) => {
                let slot = m.get_mut(&key).expect("retired prefix was counted");
                *slot -= n;
                if *slot == 0 {
                    m.remove(&key);
                }
            }
        }
    }

    fn for_each_nonzero(&self, mut f: impl FnMut(u64, u64)) {
        match self {
            Level::Dense(v) => {
                for (k, &n) in v.iter().enumerate() {
                    if n != 0 {
                        f(k as u64, n);
                    }
                }
            }
            Level::Sparse(m) => {
                for (&k, &n) in m {
                    f(k, n);
                }
            }
        }
    }
}

/// Reusable counter of length-`ell` subsequences over an alphabet of `A`
/// symbols.
pub struct SequenceCounter {
    alphabet: u64,
    ell: usize,
    levels: Vec<Level>,
    dirty: bool,
}

impl SequenceCounter {
    pub fn new(alphabet: usize, ell: usize) -> Result<Self> {
        if alphabet == 0 || ell == 0 {
            return Err(Error::invalid("sequence counter needs a nonempty alphabet and length"));
        }
        let a = alphabet as u64;
        let mut levels = Vec::with_capacity(ell);
        let mut size = 1u64;
        for _ in 0..ell {
            size = size
                .checked_mul(a)
                .ok_or_else(|| Error::unsupported(format!("{ell}-symbol prefixes over {alphabet} symbols")))?;
            levels.push(Level::new(size));
        }
        Ok(Self { alphabet: a, ell, levels, dirty: false })
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet as usize
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Counts the subsequences of `sigma` (sorted by time) and keeps them in
    /// the completed level until the next run.
    pub fn run(&mut self, sigma: &[(Time, u32)], delta: Window) {
        debug_assert!(sigma.windows(2).all(|w| w[0].0 <= w[1].0), "sigma must be sorted by time");
        debug_assert!(sigma.iter().all(|&(_, x)| (x as u64) < self.alphabet));
        if self.dirty {
            self.levels.iter_mut().for_each(Level::clear);
        }
        self.dirty = true;
        let n = sigma.len();
        let mut head = 0usize;
        let mut i = 0usize;
        while i < n {
            let t = sigma[i].0;
            let mut j = i;
            while j < n && sigma[j].0 == t {
                j += 1;
            }
            while head < i && !delta.admits(t - sigma[head].0) {
                let mut h2 = head;
                while h2 < i && sigma[h2].0 == sigma[head].0 {
                    h2 += 1;
                }
                self.retire(&sigma[head..h2]);
                head = h2;
            }
            self.insert(&sigma[i..j]);
            i = j;
        }
    }

    fn insert(&mut self, group: &[(Time, u32)]) {
        let a = self.alphabet;
        for k in (1..=self.ell).rev() {
            if k == 1 {
                for &(_, x) in group {
                    self.levels[0].add(x as u64, 1);
                }
                continue;
            }
            let (lo, hi) = self.levels.split_at_mut(k - 1);
            let (prev, cur) = (&lo[k - 2], &mut hi[0]);
            for &(_, x) in group {
                prev.for_each_nonzero(|p, c| cur.add(p * a + x as u64, c));
            }
        }
    }

    fn retire(&mut self, group: &[(Time, u32)]) {
        let a = self.alphabet;
        // the completed level is never retired
        for k in 1..self.ell {
            if k == 1 {
                for &(_, x) in group {
                    self.levels[0].sub(x as u64, 1);
                }
                continue;
            }
            let shift = a.pow(k as u32 - 1);
            let (lo, hi) = self.levels.split_at_mut(k - 1);
            let (prev, cur) = (&lo[k - 2], &mut hi[0]);
            for &(_, x) in group {
                prev.for_each_nonzero(|rest, c| cur.sub(x as u64 * shift + rest, c));
            }
        }
    }

    /// Encoded complete sequences of the last run with their counts.
    pub fn for_each_completed(&self, f: impl FnMut(u64, u64)) {
        self.levels[self.ell - 1].for_each_nonzero(f)
    }

    /// Writes the symbols of an encoded sequence into `out` (length `ell`).
    pub fn decode(&self, mut key: u64, out: &mut [u32]) {
        for slot in out.iter_mut().rev() {
            *slot = (key % self.alphabet) as u32;
            key /= self.alphabet;
        }
    }
}

/// Number of strictly time-increasing subsequences of `sigma` of length
/// `ell` spanning at most `delta`, per symbol sequence accepted by `accept`.
pub fn dp_sequence_count(
    sigma: &[(Time, u32)],
    alphabet: usize,
    ell: usize,
    delta: Window,
    mut accept: impl FnMut(&[u32]) -> bool,
) -> Result<BTreeMap<Vec<u32>, u64>> {
    if sigma.windows(2).any(|w| w[0].0 > w[1].0) {
        return Err(Error::invalid("sequence must be sorted by time"));
    }
    if let Some(&(_, x)) = sigma.iter().find(|&&(_, x)| x as usize >= alphabet) {
        return Err(Error::invalid(format!("symbol {x} outside alphabet of size {alphabet}")));
    }
    let mut counter = SequenceCounter::new(alphabet, ell)?;
    counter.run(sigma, delta);
    let mut out = BTreeMap::new();
    let mut buf = vec![0u32; ell];
    counter.for_each_completed(|key, n| {
        counter.decode(key, &mut buf);
        if accept(&buf) {
            out.insert(buf.clone(), n);
        }
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct enumeration of all index combinations.
    fn enumerate(sigma: &[(Time, u32)], ell: usize, delta: Window) -> BTreeMap<Vec<u32>, u64> {
        fn rec(
            sigma: &[(Time, u32)],
            ell: usize,
            delta: Window,
            from: usize,
            cur: &mut Vec<usize>,
            out: &mut BTreeMap<Vec<u32>, u64>,
        ) {
            if cur.len() == ell {
                let key = cur.iter().map(|&i| sigma[i].1).collect();
                *out.entry(key).or_insert(0) += 1;
                return;
            }
            for i in from..sigma.len() {
                if let Some(&last) = cur.last() {
                    if sigma[i].0 <= sigma[last].0 {
                        continue;
                    }
                }
                if let Some(&first) = cur.first() {
                    if !delta.admits(sigma[i].0 - sigma[first].0) {
                        continue;
                    }
                }
                cur.push(i);
                rec(sigma, ell, delta, i + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = BTreeMap::new();
        rec(sigma, ell, delta, 0, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn repeated_arc() {
        let sigma = [(1, 0), (2, 0), (3, 0)];
        let all = |_: &[u32]| true;
        let c = dp_sequence_count(&sigma, 1, 2, Window::Bounded(10), all).unwrap();
        assert_eq!(c.get(&vec![0, 0]), Some(&3));
        let c = dp_sequence_count(&sigma, 1, 2, Window::Bounded(1), all).unwrap();
        assert_eq!(c.get(&vec![0, 0]), Some(&2));
    }

    #[test]
    fn equal_times_do_not_pair() {
        let sigma = [(4, 0), (4, 1)];
        let c = dp_sequence_count(&sigma, 2, 2, Window::Unbounded, |_| true).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn accept_filters() {
        let sigma = [(1, 0), (2, 1), (3, 0)];
        let c = dp_sequence_count(&sigma, 2, 2, Window::Unbounded, |s| s[0] != s[1]).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.values().sum::<u64>(), 2);
    }

    #[test]
    fn rejects_unsorted() {
        assert!(dp_sequence_count(&[(2, 0), (1, 0)], 1, 2, Window::Unbounded, |_| true).is_err());
        assert!(dp_sequence_count(&[(2, 3)], 2, 2, Window::Unbounded, |_| true).is_err());
    }

    #[test]
    fn matches_enumeration_on_pseudo_random_streams() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for round in 0..200 {
            let n = (next() % 18) as usize;
            let alphabet = 1 + (next() % 4) as usize;
            let ell = 1 + (next() % 4) as usize;
            let mut sigma: Vec<(Time, u32)> =
                (0..n).map(|_| (next() % 12, (next() % alphabet as u64) as u32)).collect();
            sigma.sort_by_key(|&(t, _)| t);
            let delta = match round % 3 {
                0 => Window::Bounded(1),
                1 => Window::Bounded(4),
                _ => Window::Unbounded,
            };
            let expected = enumerate(&sigma, ell, delta);
            let got = dp_sequence_count(&sigma, alphabet, ell, delta, |_| true).unwrap();
            assert_eq!(got, expected, "sigma={sigma:?} ell={ell} delta={delta:?}");
        }
    }

    #[test]
    fn sparse_levels_match_dense() {
        // alphabet^3 exceeds the dense limit, forcing sparse tables
        let sigma: Vec<(Time, u32)> = (0..30).map(|i| (i / 2, (i * 37 % 50) as u32)).collect();
        let expected = enumerate(&sigma, 3, Window::Bounded(5));
        let got = dp_sequence_count(&sigma, 50, 3, Window::Bounded(5), |_| true).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn counter_reuse_resets_state() {
        let mut c = SequenceCounter::new(2, 2).unwrap();
        c.run(&[(1, 0), (2, 1)], Window::Unbounded);
        c.run(&[(1, 1), (2, 1)], Window::Unbounded);
        let mut seen = Vec::new();
        c.for_each_completed(|k, n| seen.push((k, n)));
        assert_eq!(seen, vec![(3, 1)]);
    }
}
