//! Sparse feature vectors over graphlet classes.

use alloc::collections::BTreeMap;
use alloc::format;

use crate::graphlets::{GraphletCode, GraphletFamily};
use crate::{Error, Result};

/// Raw occurrence counts per class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphletCounts(BTreeMap<GraphletCode, u64>);

impl GraphletCounts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, code: GraphletCode, count: u64) {
        if count > 0 {
            *self.0.entry(code).or_insert(0) += count;
        }
    }

    pub fn get(&self, code: &GraphletCode) -> u64 {
        self.0.get(code).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GraphletCode, u64)> {
        self.0.iter().map(|(c, &n)| (c, n))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// Restriction to one family.
    pub fn only(&self, family: GraphletFamily) -> Self {
        Self(self.0.iter().filter(|(c, _)| c.family() == family).map(|(c, &n)| (c.clone(), n)).collect())
    }

    /// Componentwise sum.
    pub fn merged(mut self, other: &Self) -> Self {
        for (c, n) in other.iter() {
            self.add(c.clone(), n);
        }
        self
    }

    pub fn to_features(&self) -> FeatureVector {
        FeatureVector(self.0.iter().map(|(c, &n)| (c.clone(), n as f64)).collect())
    }
}

impl FromIterator<(GraphletCode, u64)> for GraphletCounts {
    fn from_iter<T: IntoIterator<Item = (GraphletCode, u64)>>(iter: T) -> Self {
        let mut out = Self::new();
        for (c, n) in iter {
            out.add(c, n);
        }
        out
    }
}

/// Nonnegative weights per class, raw or L1-normalized. Zero weights are
/// not stored.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FeatureVector(BTreeMap<GraphletCode, f64>);

impl FeatureVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (GraphletCode, f64)>>(entries: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (c, w) in entries {
            if !w.is_finite() || w < 0.0 {
                return Err(Error::invalid(format!("weight {w} for class {c} is not a nonnegative number")));
            }
            if w > 0.0 {
                *map.entry(c).or_insert(0.0) += w;
            }
        }
        Ok(Self(map))
    }

    pub(crate) fn from_map_unchecked(map: BTreeMap<GraphletCode, f64>) -> Self {
        Self(map)
    }

    pub fn get(&self, code: &GraphletCode) -> f64 {
        self.0.get(code).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GraphletCode, f64)> {
        self.0.iter().map(|(c, &w)| (c, w))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.0.values().sum()
    }
}
