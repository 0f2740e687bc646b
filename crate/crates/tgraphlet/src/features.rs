//! Feature files: one line per graph, `<graph-id> <class-index>:<value> …`
//! in codebook order. Header comments record the codebook parameters, the
//! class labels (`# classes …`) and, when the codebook is not an enumerated
//! one, the classes themselves (`# class <index> <code>`).

use std::fmt::Write as _;
use std::path::Path;

use tgraphlet_core::GraphletCode;

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct FeatureTable {
    /// Free-form `key=value` settings written into the header.
    pub settings: Vec<(String, String)>,
    pub codes: Vec<GraphletCode>,
    /// Codes not derivable from the settings are listed in the header.
    pub list_codes: bool,
    pub ids: Vec<String>,
    pub class_labels: Vec<i64>,
    /// Sparse rows of `(class index, value)`, indices increasing.
    pub rows: Vec<Vec<(u32, f64)>>,
}

fn value(v: f64) -> String {
    // integral values print without a fraction
    if v.fract() == 0.0 && v.abs() < 9.0e15 {
        format!("{}", v as i64)
    } else {
        format!("{v}")
    }
}

impl FeatureTable {
    pub fn to_text(&self) -> String {
        let mut out = String::from("# tgraphlet features");
        for (k, v) in &self.settings {
            let _ = write!(out, " {k}={v}");
        }
        out.push('\n');
        let _ = writeln!(out, "# classes-count {}", self.codes.len());
        if self.list_codes {
            for (i, c) in self.codes.iter().enumerate() {
                let _ = writeln!(out, "# class {i} {c}");
            }
        }
        out.push_str("# classes");
        for c in &self.class_labels {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
        for (id, row) in self.ids.iter().zip(&self.rows) {
            out.push_str(id);
            for &(i, v) in row {
                let _ = write!(out, " {i}:{}", value(v));
            }
            out.push('\n');
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text()).map_err(|e| Error::io(path, e))
    }
}

/// Rows read back from a feature file; class identities are only known by
/// index.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureRows {
    pub ids: Vec<String>,
    pub class_labels: Vec<i64>,
    pub rows: Vec<Vec<(u32, f64)>>,
}

pub fn parse_features(text: &str, path: &Path) -> Result<FeatureRows> {
    let mut ids = Vec::new();
    let mut rows = Vec::new();
    let mut class_labels = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("# classes ").or(if line == "# classes" { Some("") } else { None }) {
            let labels = rest
                .split_whitespace()
                .map(|c| c.parse::<i64>().map_err(|_| Error::parse(path, i + 1, format!("bad class label `{c}`"))))
                .collect::<Result<Vec<_>>>()?;
            class_labels = Some(labels);
            continue;
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let id = fields.next().expect("nonempty line");
        let mut row: Vec<(u32, f64)> = Vec::new();
        for f in fields {
            let parsed = f.split_once(':').and_then(|(k, v)| Some((k.parse::<u32>().ok()?, v.parse::<f64>().ok()?)));
            let Some((k, v)) = parsed else {
                return Err(Error::parse(path, i + 1, format!("expected `<index>:<value>`, got `{f}`")));
            };
            if !v.is_finite() || v < 0.0 {
                return Err(Error::parse(path, i + 1, format!("value {v} is not a nonnegative number")));
            }
            if row.last().is_some_and(|&(p, _)| p >= k) {
                return Err(Error::parse(path, i + 1, "class indices must increase"));
            }
            row.push((k, v));
        }
        ids.push(id.to_string());
        rows.push(row);
    }
    let class_labels = match class_labels {
        Some(c) if c.len() == ids.len() => c,
        Some(c) => {
            return Err(Error::parse(path, 0, format!("{} class labels for {} graphs", c.len(), ids.len())));
        }
        None => vec![0; ids.len()],
    };
    Ok(FeatureRows { ids, class_labels, rows })
}

pub fn read_features(path: &Path) -> Result<FeatureRows> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_features(&text, path)
}
