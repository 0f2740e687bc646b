//! Gram matrix exports: CSV (header of graph ids, then rows) and the
//! precomputed-kernel layout read by SVM tools,
//! `<label> 0:<row, 1-based> 1:<K[i][0]> 2:<K[i][1]> …`. Values use the
//! shortest decimal that parses back to the same `f64`.

use std::fmt::Write as _;
use std::path::Path;

use tgraphlet_core::kernel::GramMatrix;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GramFormat {
    Csv,
    Svm,
}

impl GramFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            GramFormat::Csv => "csv",
            GramFormat::Svm => "svm",
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn gram_to_csv(k: &GramMatrix) -> String {
    let mut out = k.graph_ids().iter().map(|id| csv_field(id)).collect::<Vec<_>>().join(",");
    out.push('\n');
    for i in 0..k.n() {
        let row: Vec<String> = k.row(i).iter().map(|v| format!("{v}")).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn gram_to_svm(k: &GramMatrix) -> String {
    let mut out = String::new();
    for i in 0..k.n() {
        let _ = write!(out, "{} 0:{}", k.class_labels()[i], i + 1);
        for (j, v) in k.row(i).iter().enumerate() {
            let _ = write!(out, " {}:{v}", j + 1);
        }
        out.push('\n');
    }
    out
}

pub fn gram_to_string(k: &GramMatrix, format: GramFormat) -> String {
    match format {
        GramFormat::Csv => gram_to_csv(k),
        GramFormat::Svm => gram_to_svm(k),
    }
}

pub fn write_gram(k: &GramMatrix, format: GramFormat, path: &Path) -> Result<()> {
    std::fs::write(path, gram_to_string(k, format)).map_err(|e| Error::io(path, e))
}

/// Splits one CSV line, honoring double-quoted fields.
fn split_csv(line: &str) -> Vec<String> {
    let mut fields = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut chars = line.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '"' if quoted && chars.peek() == Some(&'"') => {
                cur.push('"');
                chars.next();
            }
            '"' => quoted = !quoted,
            ',' if !quoted => fields.push(std::mem::take(&mut cur)),
            _ => cur.push(c),
        }
    }
    fields.push(cur);
    fields
}

/// Parses a CSV export back into graph ids and row-major values.
pub fn parse_gram_csv(text: &str, path: &Path) -> Result<(Vec<String>, Vec<f64>)> {
    let mut lines = text.lines();
    let ids = split_csv(lines.next().ok_or_else(|| Error::parse(path, 1, "empty file"))?);
    let n = ids.len();
    let mut values = Vec::with_capacity(n * n);
    for (i, line) in lines.enumerate() {
        let row = split_csv(line);
        if row.len() != n {
            return Err(Error::parse(path, i + 2, format!("expected {n} values, got {}", row.len())));
        }
        for v in row {
            values.push(v.trim().parse::<f64>().map_err(|_| Error::parse(path, i + 2, format!("bad value `{v}`")))?);
        }
    }
    if values.len() != n * n {
        return Err(Error::parse(path, 0, format!("expected {n} rows")));
    }
    Ok((ids, values))
}
