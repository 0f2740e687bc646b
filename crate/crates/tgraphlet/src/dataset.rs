//! Datasets on disk.
//!
//! Two layouts are read:
//!
//! - a directory with `manifest.txt` (lines `<graph-file> <class-label>`,
//!   paths relative to the manifest) next to canonical graph files, or a
//!   manifest file given directly. Graph ids are the file names as written.
//! - a TU-style bundle `<P>_A.txt`, `<P>_graph_indicator.txt`,
//!   `<P>_graph_labels.txt`, `<P>_edge_attributes.txt` and optionally
//!   `<P>_node_labels.txt`. Node ids in `_A` are 1-based and global; each
//!   graph gets dense ids in file order. The first column of an edge
//!   attribute line is the timestamp. A node label line is either a single
//!   constant label or `time, label` pairs (label 0 before the first pair).

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::json;
use tgraphlet_core::dissemination::infected_nodes;
use tgraphlet_core::{Dataset, DatasetMeta, GraphRecord, Label, LabelTimeline, TemporalEdge, TemporalGraph, Time};

use crate::format::{read_graph, write_graph};
use crate::{Error, Result};

pub const MANIFEST: &str = "manifest.txt";
pub const META: &str = "meta.jsonl";

/// Loads a manifest directory, a manifest file or a TU bundle directory
/// (detected by a single `*_A.txt` file).
pub fn load_dataset(path: &Path) -> Result<Dataset> {
    if path.is_file() {
        return load_manifest(path);
    }
    let manifest = path.join(MANIFEST);
    if manifest.is_file() {
        return load_manifest(&manifest);
    }
    let entries = std::fs::read_dir(path).map_err(|e| Error::io(path, e))?;
    let mut prefixes = Vec::new();
    for entry in entries {
        let name = entry.map_err(|e| Error::io(path, e))?.file_name().to_string_lossy().into_owned();
        if let Some(p) = name.strip_suffix("_A.txt") {
            prefixes.push(p.to_string());
        }
    }
    match prefixes.as_slice() {
        [p] => load_tu(path, p),
        [] => Err(Error::io(path, std::io::Error::new(std::io::ErrorKind::NotFound, "no manifest.txt or *_A.txt found"))),
        _ => Err(Error::Usage(format!("several TU bundles in {}: {}", path.display(), prefixes.join(", ")))),
    }
}

pub fn load_manifest(manifest: &Path) -> Result<Dataset> {
    let text = std::fs::read_to_string(manifest).map_err(|e| Error::io(manifest, e))?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    let mut records = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [file, class] = fields[..] else {
            return Err(Error::parse(manifest, i + 1, "expected `<graph-file> <class-label>`"));
        };
        let class_label = class
            .parse::<i64>()
            .map_err(|_| Error::parse(manifest, i + 1, format!("class label `{class}` is not an integer")))?;
        let graph = read_graph(&base.join(file))?;
        records.push(GraphRecord { id: file.to_string(), graph, class_label });
    }
    let meta = read_meta(&base.join(META)).unwrap_or_default();
    Dataset::new(records, meta).map_err(|e| Error::parse(manifest, 0, e.to_string()))
}

fn read_lines(path: &Path) -> Result<Vec<(usize, String)>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect())
}

fn numbers<T: std::str::FromStr>(path: &Path, line: usize, text: &str) -> Result<Vec<T>> {
    text.split(',')
        .map(|f| f.trim())
        .filter(|f| !f.is_empty())
        .map(|f| f.parse::<T>().map_err(|_| Error::parse(path, line, format!("bad number `{f}`"))))
        .collect()
}

/// Timestamps may be written as floats with an integral value.
fn timestamp(path: &Path, line: usize, text: &str) -> Result<Time> {
    let field = text.split(',').next().unwrap_or("").trim();
    if let Ok(t) = field.parse::<Time>() {
        return Ok(t);
    }
    match field.parse::<f64>() {
        Ok(f) if f >= 0.0 && f.fract() == 0.0 && f < Time::MAX as f64 => Ok(f as Time),
        _ => Err(Error::parse(path, line, format!("timestamp `{field}` is not a nonnegative integer"))),
    }
}

pub fn load_tu(dir: &Path, prefix: &str) -> Result<Dataset> {
    let file = |suffix: &str| dir.join(format!("{prefix}_{suffix}.txt"));
    let (a_path, ind_path, cls_path, attr_path, lab_path) =
        (file("A"), file("graph_indicator"), file("graph_labels"), file("edge_attributes"), file("node_labels"));

    let mut node_graph = Vec::new();
    for (line, text) in read_lines(&ind_path)? {
        let g: Vec<usize> = numbers(&ind_path, line, &text)?;
        match g[..] {
            [g] if g >= 1 => node_graph.push(g - 1),
            _ => return Err(Error::parse(&ind_path, line, "expected one 1-based graph id")),
        }
    }
    let mut classes = Vec::new();
    for (line, text) in read_lines(&cls_path)? {
        let c: Vec<i64> = numbers(&cls_path, line, &text)?;
        match c[..] {
            [c] => classes.push(c),
            _ => return Err(Error::parse(&cls_path, line, "expected one class label")),
        }
    }
    let num_graphs = classes.len();
    if let Some(&g) = node_graph.iter().find(|&&g| g >= num_graphs) {
        return Err(Error::parse(&ind_path, 0, format!("graph {} has no class label", g + 1)));
    }
    // dense per-graph ids in node order
    let mut local = vec![0u32; node_graph.len()];
    let mut sizes = vec![0usize; num_graphs];
    for (v, &g) in node_graph.iter().enumerate() {
        local[v] = sizes[g] as u32;
        sizes[g] += 1;
    }

    let arcs = read_lines(&a_path)?;
    let times = read_lines(&attr_path)?;
    if arcs.len() != times.len() {
        return Err(Error::parse(&attr_path, 0, format!("{} edges but {} timestamps", arcs.len(), times.len())));
    }
    let mut edges: Vec<Vec<TemporalEdge>> = vec![Vec::new(); num_graphs];
    for ((line, text), (tline, ttext)) in arcs.iter().zip(&times) {
        let uv: Vec<usize> = numbers(&a_path, *line, text)?;
        let [u, v] = uv[..] else {
            return Err(Error::parse(&a_path, *line, "expected `u, v`"));
        };
        if u == 0 || v == 0 || u > node_graph.len() || v > node_graph.len() {
            return Err(Error::parse(&a_path, *line, format!("node id outside 1..={}", node_graph.len())));
        }
        let (gu, gv) = (node_graph[u - 1], node_graph[v - 1]);
        if gu != gv {
            return Err(Error::parse(&a_path, *line, "edge joins two graphs"));
        }
        if u == v {
            return Err(Error::parse(&a_path, *line, format!("self-loop on node {u}")));
        }
        let t = timestamp(&attr_path, *tline, ttext)?;
        edges[gu].push(TemporalEdge::new(local[u - 1], local[v - 1], t));
    }

    let mut timelines: Vec<Vec<LabelTimeline>> = sizes.iter().map(|&n| vec![LabelTimeline::constant(0); n]).collect();
    let mut max_label: Label = 0;
    if lab_path.is_file() {
        let lines = read_lines(&lab_path)?;
        if lines.len() != node_graph.len() {
            return Err(Error::parse(&lab_path, 0, format!("{} label lines for {} nodes", lines.len(), node_graph.len())));
        }
        for (v, (line, text)) in lines.iter().enumerate() {
            let vals: Vec<u64> = numbers(&lab_path, *line, text)?;
            let tl = match vals.len() {
                1 => LabelTimeline::constant(to_label(&lab_path, *line, vals[0])?),
                n if n % 2 == 0 => {
                    let mut ev = Vec::with_capacity(n / 2);
                    for pair in vals.chunks(2) {
                        ev.push((pair[0], to_label(&lab_path, *line, pair[1])?));
                    }
                    LabelTimeline::with_events(0, ev).map_err(|e| Error::parse(&lab_path, *line, e.to_string()))?
                }
                _ => return Err(Error::parse(&lab_path, *line, "expected a label or `time, label` pairs")),
            };
            max_label = max_label.max(tl.default_label()).max(tl.events().iter().map(|e| e.1).max().unwrap_or(0));
            timelines[node_graph[v]][local[v] as usize] = tl;
        }
    }
    let alphabet = max_label as usize + 1;
    let mut records = Vec::with_capacity(num_graphs);
    for (g, (edges, tls)) in edges.into_iter().zip(timelines).enumerate() {
        let graph = TemporalGraph::new(sizes[g], edges, alphabet)
            .and_then(|x| x.with_timelines(tls))
            .map_err(|e| Error::Graph { id: (g + 1).to_string(), source: e })?;
        records.push(GraphRecord { id: (g + 1).to_string(), graph, class_label: classes[g] });
    }
    let meta = DatasetMeta { task: None, params: BTreeMap::from([("tu_prefix".into(), prefix.into())]), seed: None };
    Ok(Dataset::new(records, meta)?)
}

fn to_label(path: &Path, line: usize, v: u64) -> Result<Label> {
    Label::try_from(v).map_err(|_| Error::parse(path, line, format!("label {v} too large")))
}

/// Writes `<id>.tg` per graph, `manifest.txt` and `meta.jsonl`. Returns the
/// written paths.
pub fn write_dataset(ds: &Dataset, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut manifest = String::new();
    let mut meta = Vec::new();
    let mut written = Vec::new();
    let header = json!({
        "dataset": {
            "task": ds.meta.task,
            "params": ds.meta.params,
            "seed": ds.meta.seed,
            "graphs": ds.len(),
        }
    });
    writeln!(meta, "{header}").expect("write to vec");
    for rec in ds.graphs() {
        let file = if rec.id.ends_with(".tg") { rec.id.clone() } else { format!("{}.tg", rec.id) };
        let path = dir.join(&file);
        write_graph(&rec.graph, &path)?;
        written.push(path);
        manifest.push_str(&format!("{file} {}\n", rec.class_label));
        let line = json!({
            "id": file,
            "class": rec.class_label,
            "nodes": rec.graph.num_nodes(),
            "edges": rec.graph.num_edges(),
            "infected": infected_nodes(&rec.graph).len(),
        });
        writeln!(meta, "{line}").expect("write to vec");
    }
    for (name, body) in [(MANIFEST, manifest.into_bytes()), (META, meta)] {
        let path = dir.join(name);
        std::fs::write(&path, body).map_err(|e| Error::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}

/// Dataset-level metadata from the first line of `meta.jsonl`.
fn read_meta(path: &Path) -> Option<DatasetMeta> {
    let text = std::fs::read_to_string(path).ok()?;
    let first: serde_json::Value = serde_json::from_str(text.lines().next()?).ok()?;
    let d = first.get("dataset")?;
    let params = d
        .get("params")?
        .as_object()?
        .iter()
        .filter_map(|(k, v)| v.as_str().map(|s| (k.clone(), s.to_string())))
        .collect();
    Some(DatasetMeta {
        task: d.get("task").and_then(|t| t.as_str()).map(str::to_string),
        params,
        seed: d.get("seed").and_then(|s| s.as_u64()),
    })
}
