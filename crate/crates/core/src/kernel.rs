//! Feature normalization, kernel values and Gram matrices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::graphlets::GraphletCode;
use crate::{Error, FeatureVector, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// Inner products of L1-normalized feature vectors.
    FeatureL1,
    /// As `FeatureL1`, then `K[i][j] / sqrt(K[i][i] K[j][j])`.
    FeatureL1PlusCosine,
}

impl Normalization {
    pub fn name(&self) -> &'static str {
        match self {
            Normalization::FeatureL1 => "l1",
            Normalization::FeatureL1PlusCosine => "cosine",
        }
    }
}

/// Divides every weight by the sum of weights. The zero vector stays zero.
pub fn normalize_l1(v: &FeatureVector) -> Result<FeatureVector> {
    if let Some((c, w)) = v.iter().find(|(_, w)| !w.is_finite() || *w < 0.0) {
        return Err(Error::invalid(format!("weight {w} for class {c} is not a nonnegative number")));
    }
    let total = v.total();
    if total == 0.0 {
        return Ok(FeatureVector::new());
    }
    Ok(FeatureVector::from_map_unchecked(v.iter().map(|(c, w)| (c.clone(), w / total)).collect()))
}

/// Sparse dot product over shared classes.
pub fn kernel_value(a: &FeatureVector, b: &FeatureVector) -> f64 {
    let (mut ia, mut ib) = (a.iter().peekable(), b.iter().peekable());
    let mut sum = 0.0;
    while let (Some((ca, wa)), Some((cb, wb))) = (ia.peek(), ib.peek()) {
        match ca.cmp(cb) {
            core::cmp::Ordering::Less => {
                ia.next();
            }
            core::cmp::Ordering::Greater => {
                ib.next();
            }
            core::cmp::Ordering::Equal => {
                sum += wa * wb;
                ia.next();
                ib.next();
            }
        }
    }
    sum
}

/// Feature vectors re-indexed over a shared class dictionary, as sorted
/// `(class index, weight)` rows.
#[derive(Clone, Debug)]
pub struct SparseRows {
    rows: Vec<Vec<(u32, f64)>>,
}

impl SparseRows {
    /// L1-normalizes every vector and indexes the union of their classes.
    pub fn normalized(features: &[FeatureVector]) -> Result<Self> {
        let mut dict: BTreeMap<&GraphletCode, u32> = BTreeMap::new();
        for f in features {
            for (c, _) in f.iter() {
                dict.entry(c).or_insert(0);
            }
        }
        for (i, slot) in dict.values_mut().enumerate() {
            *slot = i as u32;
        }
        let mut rows = Vec::with_capacity(features.len());
        for f in features {
            let n = normalize_l1(f)?;
            rows.push(n.iter().map(|(c, w)| (dict[c], w)).collect());
        }
        Ok(Self { rows })
    }

    /// L1-normalizes rows that are already indexed by class.
    pub fn from_index_rows(rows: Vec<Vec<(u32, f64)>>) -> Result<Self> {
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            if let Some(&(c, w)) = row.iter().find(|(_, w)| !w.is_finite() || *w < 0.0) {
                return Err(Error::invalid(format!("weight {w} for class {c} is not a nonnegative number")));
            }
            if row.windows(2).any(|p| p[0].0 >= p[1].0) {
                return Err(Error::invalid("class indices of a row must increase"));
            }
            let total: f64 = row.iter().map(|&(_, w)| w).sum();
            out.push(if total == 0.0 { Vec::new() } else { row.into_iter().filter(|&(_, w)| w > 0.0).map(|(c, w)| (c, w / total)).collect() });
        }
        Ok(Self { rows: out })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn dot(&self, i: usize, j: usize) -> f64 {
        let (a, b) = (&self.rows[i], &self.rows[j]);
        let (mut p, mut q, mut sum) = (0, 0, 0.0);
        while p < a.len() && q < b.len() {
            match a[p].0.cmp(&b[q].0) {
                core::cmp::Ordering::Less => p += 1,
                core::cmp::Ordering::Greater => q += 1,
                core::cmp::Ordering::Equal => {
                    sum += a[p].1 * b[q].1;
                    p += 1;
                    q += 1;
                }
            }
        }
        sum
    }

    /// `K[i][j]` for `j >= i`.
    pub fn upper_row(&self, i: usize) -> Vec<f64> {
        (i..self.rows.len()).map(|j| self.dot(i, j)).collect()
    }
}

/// Symmetric kernel matrix with graph identities, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    n: usize,
    values: Vec<f64>,
    graph_ids: Vec<String>,
    class_labels: Vec<i64>,
    normalization: Normalization,
}

impl GramMatrix {
    /// Wraps a full row-major matrix; it must be square and exactly symmetric.
    pub fn new(
        values: Vec<f64>,
        graph_ids: Vec<String>,
        class_labels: Vec<i64>,
        normalization: Normalization,
    ) -> Result<Self> {
        let n = graph_ids.len();
        if values.len() != n * n || class_labels.len() != n {
            return Err(Error::invalid(format!(
                "{} values, {} ids and {} labels do not form a square matrix",
                values.len(),
                n,
                class_labels.len()
            )));
        }
        let m = Self { n, values, graph_ids, class_labels, normalization };
        if let Some((i, j)) = m.first_asymmetry() {
            return Err(Error::invalid(format!("matrix is not symmetric at ({i}, {j})")));
        }
        Ok(m)
    }

    /// Assembles a matrix from upper-triangular rows (`upper[i][k]` is
    /// `K[i][i + k]`) and applies the normalization.
    pub fn from_upper_rows(
        upper: Vec<Vec<f64>>,
        graph_ids: Vec<String>,
        class_labels: Vec<i64>,
        normalization: Normalization,
    ) -> Result<Self> {
        let n = upper.len();
        if n == 0 {
            return Err(Error::invalid("empty dataset"));
        }
        if graph_ids.len() != n || class_labels.len() != n || upper.iter().enumerate().any(|(i, r)| r.len() != n - i) {
            return Err(Error::invalid("row, id and label counts disagree"));
        }
        let mut values = vec![0.0; n * n];
        for (i, row) in upper.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                values[i * n + i + k] = v;
                values[(i + k) * n + i] = v;
            }
        }
        if normalization == Normalization::FeatureL1PlusCosine {
            apply_cosine(&mut values, n);
        }
        Ok(Self { n, values, graph_ids, class_labels, normalization })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.n..(i + 1) * self.n]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn graph_ids(&self) -> &[String] {
        &self.graph_ids
    }

    pub fn class_labels(&self) -> &[i64] {
        &self.class_labels
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.n).flat_map(|i| (i + 1..self.n).map(move |j| (i, j))).find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }
}

/// `K[i][j] / sqrt(K[i][i] K[j][j])` in place, with the diagonal set to 1
/// exactly and entries clamped to 1. Rows with a zero diagonal become zero.
pub fn apply_cosine(values: &mut [f64], n: usize) {
    let diag: Vec<f64> = (0..n).map(|i| values[i * n + i]).collect();
    for i in 0..n {
        for j in i..n {
            let v = if diag[i] <= 0.0 || diag[j] <= 0.0 {
                0.0
            } else if i == j {
                1.0
            } else {
                (values[i * n + j] / libm::sqrt(diag[i] * diag[j])).min(1.0)
            };
            values[i * n + j] = v;
            values[j * n + i] = v;
        }
    }
}

/// Sequential Gram matrix over L1-normalized features.
pub fn gram_matrix(
    features: &[FeatureVector],
    graph_ids: Vec<String>,
    class_labels: Vec<i64>,
    mode: Normalization,
) -> Result<GramMatrix> {
    if features.is_empty() {
        return Err(Error::invalid("empty dataset"));
    }
    let rows = SparseRows::normalized(features)?;
    let upper = (0..rows.len()).map(|i| rows.upper_row(i)).collect();
    GramMatrix::from_upper_rows(upper, graph_ids, class_labels, mode)
}

/// Leave-one-out 1-nearest-neighbor accuracy under the kernel distance
/// `K[i][i] + K[j][j] - 2 K[i][j]`; ties go to the lowest index.
pub fn loo_1nn_accuracy(k: &GramMatrix) -> Result<f64> {
    loo_1nn_with_labels(k, k.class_labels())
}

/// [`loo_1nn_accuracy`] with replacement labels, e.g. a permutation.
pub fn loo_1nn_with_labels(k: &GramMatrix, labels: &[i64]) -> Result<f64> {
    let n = k.n();
    if labels.len() != n {
        return Err(Error::invalid("one label per graph required"));
    }
    if n < 2 {
        return Err(Error::invalid("leave-one-out needs at least two graphs"));
    }
    if labels.iter().all(|&l| l == labels[0]) {
        return Err(Error::invalid("leave-one-out needs at least two classes"));
    }
    let mut correct = 0usize;
    for i in 0..n {
        let mut best = usize::MAX;
        let mut best_d = f64::INFINITY;
        for j in (0..n).filter(|&j| j != i) {
            let d = k.get(i, i) + k.get(j, j) - 2.0 * k.get(i, j);
            if d < best_d || best == usize::MAX {
                best = j;
                best_d = d;
            }
        }
        if labels[best] == labels[i] {
            correct += 1;
        }
    }
    Ok(correct as f64 / n as f64)
}
