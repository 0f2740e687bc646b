//! Dataset-level drivers. Graphs are processed in parallel on a rayon pool;
//! results come back in dataset order.

use std::collections::BTreeSet;

use rayon::prelude::*;
use tgraphlet_core::approx::{sample, SampleConfig, WedgeSample};
use tgraphlet_core::dissemination::generate_ba;
use tgraphlet_core::exact::{
    count_brute_force, count_general, count_stars, count_triangles, count_wedges, CountConfig,
};
use tgraphlet_core::graphlets::enumerate_classes;
use tgraphlet_core::kernel::{GramMatrix, Normalization, SparseRows};
use tgraphlet_core::{
    Dataset, FeatureVector, GraphletCode, GraphletCounts, GraphletFamily, NodeCounts, TemporalGraph, Window,
};

use crate::features::FeatureTable;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Wedge,
    Star,
    Triangle,
    All,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Wedge => "wedge",
            Family::Star => "star",
            Family::Triangle => "triangle",
            Family::All => "all",
        }
    }

    fn core(&self) -> Option<GraphletFamily> {
        match self {
            Family::Wedge => Some(GraphletFamily::Wedge),
            Family::Star => Some(GraphletFamily::Star3),
            Family::Triangle => Some(GraphletFamily::Triangle),
            Family::All => None,
        }
    }
}

pub fn parse_window(s: &str) -> Result<Window> {
    match s {
        "inf" | "unbounded" => Ok(Window::Unbounded),
        _ => {
            let d = s.parse::<u64>().map_err(|_| Error::Usage(format!("time window `{s}` is not a positive integer or `inf`")))?;
            Window::bounded(d).map_err(|e| Error::Usage(e.to_string()))
        }
    }
}

/// What to count, validated for consistency before any work starts.
#[derive(Clone, Debug, PartialEq)]
pub struct CountSpec {
    pub family: Family,
    pub delta: Window,
    pub ell: usize,
    pub k_set: Vec<usize>,
    pub labeled: bool,
    pub oracle: bool,
}

impl CountSpec {
    pub fn new(
        family: Family,
        delta: Window,
        ell: Option<usize>,
        k: Option<Vec<usize>>,
        labeled: bool,
        include_two_node: bool,
        oracle: bool,
    ) -> Result<Self> {
        let usage = |m: String| Err(Error::Usage(m));
        let fixed_ell = match family {
            Family::Wedge => Some(2),
            Family::Star | Family::Triangle => Some(3),
            Family::All => None,
        };
        let ell = match (fixed_ell, ell) {
            (Some(f), Some(e)) if f != e => {
                return usage(format!("--family {} counts {f}-edge graphlets, got --ell {e}", family.name()));
            }
            (Some(f), _) => f,
            (None, Some(e)) => e,
            (None, None) => 3,
        };
        if ell < 2 {
            return usage(format!("--ell must be at least 2, got {ell}"));
        }
        if family != Family::All && (include_two_node || k.is_some()) {
            return usage(format!("--k and --include-two-node need --family all, got --family {}", family.name()));
        }
        let mut k_set: BTreeSet<usize> = k.unwrap_or_else(|| vec![3]).into_iter().collect();
        if include_two_node {
            k_set.insert(2);
        }
        if k_set.is_empty() || !k_set.iter().all(|k| (2..=3).contains(k)) {
            return usage(format!("--k must be a subset of {{2,3}}, got {k_set:?}"));
        }
        Ok(Self { family, delta, ell, k_set: k_set.into_iter().collect(), labeled, oracle })
    }

    pub fn config(&self) -> CountConfig {
        CountConfig::new(self.delta, NodeCounts::from_slice(&self.k_set).expect("validated"), self.ell, self.labeled)
    }

    pub fn settings(&self, alphabet: usize) -> Vec<(String, String)> {
        let ks: Vec<String> = self.k_set.iter().map(|k| k.to_string()).collect();
        vec![
            ("family".into(), self.family.name().into()),
            ("delta".into(), self.delta.to_string()),
            ("ell".into(), self.ell.to_string()),
            ("k".into(), ks.join(",")),
            ("labeled".into(), self.labeled.to_string()),
            ("L".into(), alphabet.to_string()),
        ]
    }

    /// Enumerated codebook, when one exists for these parameters.
    pub fn codebook(&self, alphabet: usize) -> Result<Option<Vec<GraphletCode>>> {
        if !(2..=3).contains(&self.ell) {
            return Ok(None);
        }
        let ks = NodeCounts::from_slice(&self.k_set)?;
        let codes = enumerate_classes(ks, self.ell, self.labeled.then_some(alphabet))?;
        Ok(Some(match self.family.core() {
            Some(f) => codes.into_iter().filter(|c| c.family() == f).collect(),
            None => codes,
        }))
    }

    pub fn count(&self, g: &TemporalGraph) -> tgraphlet_core::Result<GraphletCounts> {
        let cfg = self.config();
        if self.oracle {
            let all = count_brute_force(g, &cfg)?;
            return Ok(match self.family.core() {
                Some(f) => all.only(f),
                None => all,
            });
        }
        match self.family {
            Family::Wedge => count_wedges(g, self.delta, self.labeled),
            Family::Star => count_stars(g, self.delta, self.labeled),
            Family::Triangle => count_triangles(g, self.delta, self.labeled),
            Family::All => count_general(g, &cfg),
        }
    }
}

pub fn thread_pool(threads: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        if t == 0 {
            return Err(Error::Usage("--threads must be at least 1".into()));
        }
        b = b.num_threads(t);
    }
    b.build().map_err(|e| Error::Failed(format!("cannot start worker pool: {e}")))
}

pub fn count_dataset(ds: &Dataset, spec: &CountSpec, pool: &rayon::ThreadPool) -> Result<Vec<GraphletCounts>> {
    pool.install(|| {
        ds.graphs()
            .par_iter()
            .map(|rec| spec.count(&rec.graph).map_err(|e| Error::Graph { id: rec.id.clone(), source: e }))
            .collect()
    })
}

/// Samples every graph with stream = graph index. Graphs without a wedge
/// (or without a retained sample) get an empty vector.
pub fn approx_dataset(ds: &Dataset, cfg: &SampleConfig, pool: &rayon::ThreadPool) -> Result<Vec<WedgeSample>> {
    pool.install(|| {
        ds.graphs()
            .par_iter()
            .enumerate()
            .map(|(i, rec)| {
                let cfg = SampleConfig { stream: i as u64, ..*cfg };
                match sample(&rec.graph, &cfg) {
                    Ok(s) => Ok(s),
                    Err(tgraphlet_core::Error::NoWedges | tgraphlet_core::Error::DegenerateSample(_)) => {
                        Ok(WedgeSample { features: FeatureVector::new(), overflow: 0.0, attempts: 0, retained: 0 })
                    }
                    Err(e) => Err(Error::Graph { id: rec.id.clone(), source: e }),
                }
            })
            .collect()
    })
}

/// Maps vectors onto a codebook (or onto the sorted union of their classes
/// when `codebook` is `None`).
pub fn feature_table(
    settings: Vec<(String, String)>,
    codebook: Option<Vec<GraphletCode>>,
    ds: &Dataset,
    vectors: &[FeatureVector],
) -> Result<FeatureTable> {
    let list_codes = codebook.is_none();
    let codes = codebook.unwrap_or_else(|| {
        let union: BTreeSet<&GraphletCode> = vectors.iter().flat_map(|v| v.iter().map(|(c, _)| c)).collect();
        union.into_iter().cloned().collect()
    });
    let mut rows = Vec::with_capacity(vectors.len());
    for (rec, v) in ds.graphs().iter().zip(vectors) {
        let mut row = Vec::with_capacity(v.len());
        for (c, w) in v.iter() {
            let i = codes
                .binary_search(c)
                .map_err(|_| Error::Failed(format!("graph {}: class {c} missing from the codebook", rec.id)))?;
            row.push((i as u32, w));
        }
        rows.push(row);
    }
    Ok(FeatureTable {
        settings,
        codes,
        list_codes,
        ids: ds.graphs().iter().map(|r| r.id.clone()).collect(),
        class_labels: ds.class_labels(),
        rows,
    })
}

pub fn gram_from_rows(
    rows: SparseRows,
    ids: Vec<String>,
    labels: Vec<i64>,
    mode: Normalization,
    pool: &rayon::ThreadPool,
) -> Result<GramMatrix> {
    if rows.is_empty() {
        return Err(Error::Failed("empty dataset".into()));
    }
    let upper: Vec<Vec<f64>> = pool.install(|| (0..rows.len()).into_par_iter().map(|i| rows.upper_row(i)).collect());
    Ok(GramMatrix::from_upper_rows(upper, ids, labels, mode)?)
}

pub fn gram_from_features(
    features: &[FeatureVector],
    ids: Vec<String>,
    labels: Vec<i64>,
    mode: Normalization,
    pool: &rayon::ThreadPool,
) -> Result<GramMatrix> {
    gram_from_rows(SparseRows::normalized(features)?, ids, labels, mode, pool)
}

/// Barabási–Albert base graphs; graph `i` uses seed `seed + i`.
pub fn ba_bases(n: usize, m: usize, t_max: u64, count: usize, seed: u64) -> Result<Vec<TemporalGraph>> {
    (0..count).map(|i| Ok(generate_ba(n, m, t_max, seed.wrapping_add(i as u64))?)).collect()
}
