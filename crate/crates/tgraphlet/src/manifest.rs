//! `run_manifest.json`: what was run, on which inputs, and how long each
//! phase took.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::{Error, Result};

pub const RUN_MANIFEST: &str = "run_manifest.json";

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub version: &'static str,
    pub config: serde_json::Value,
    pub seeds: Vec<u64>,
    pub inputs: Vec<InputDigest>,
    pub outputs: Vec<String>,
    pub timings_ms: BTreeMap<String, f64>,
    #[serde(skip)]
    clock: Option<(String, Instant)>,
}

impl RunManifest {
    pub fn new(command_line: Vec<String>, config: serde_json::Value) -> Self {
        Self {
            command_line,
            version: env!("CARGO_PKG_VERSION"),
            config,
            seeds: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            timings_ms: BTreeMap::new(),
            clock: None,
        }
    }

    pub fn add_input(&mut self, path: &Path) -> Result<()> {
        let sha256 = hex::encode(digest_path(path)?);
        self.inputs.push(InputDigest { path: path.display().to_string(), sha256 });
        Ok(())
    }

    /// Closes the running phase (if any) and starts `name`.
    pub fn phase(&mut self, name: &str) {
        self.stop();
        self.clock = Some((name.to_string(), Instant::now()));
    }

    pub fn stop(&mut self) {
        if let Some((name, start)) = self.clock.take() {
            *self.timings_ms.entry(name).or_insert(0.0) += start.elapsed().as_secs_f64() * 1e3;
        }
    }

    pub fn write(&mut self, dir: &Path) -> Result<()> {
        self.stop();
        let path = dir.join(RUN_MANIFEST);
        let text = serde_json::to_string_pretty(self).expect("manifest serializes");
        std::fs::write(&path, text + "\n").map_err(|e| Error::io(&path, e))
    }
}

/// SHA-256 of a file, or of the sorted `(relative path, file digest)` list
/// of a directory tree.
pub fn digest_path(path: &Path) -> Result<[u8; 32]> {
    if path.is_dir() {
        let mut files = Vec::new();
        collect_files(path, path, &mut files)?;
        files.sort();
        let mut h = Sha256::new();
        for (rel, full) in files {
            h.update(rel.as_bytes());
            h.update([0]);
            h.update(digest_path(&full)?);
        }
        return Ok(h.finalize().into());
    }
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    Ok(Sha256::digest(&bytes).into())
}

fn collect_files(root: &Path, dir: &Path, out: &mut Vec<(String, std::path::PathBuf)>) -> Result<()> {
    for entry in std::fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
        let p = entry.map_err(|e| Error::io(dir, e))?.path();
        if p.is_dir() {
            collect_files(root, &p, out)?;
        } else if p.file_name().is_some_and(|n| n != RUN_MANIFEST) {
            let rel = p.strip_prefix(root).unwrap_or(&p).to_string_lossy().replace('\\', "/");
            out.push((rel, p));
        }
    }
    Ok(())
}
