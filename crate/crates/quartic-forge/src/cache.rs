//! On-disk memo of mod-p scan results, keyed by a digest of the integer
//! model so a cache file can never be replayed against the wrong input.
//!
//! The cache is purely an accelerator: entries hold factor degree multisets
//! (which are seed-independent), corrupt or mismatched files are discarded
//! with a warning, and every IO failure degrades to an in-memory scan.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CachedScan {
    /// Factor degrees mod the prime, sorted descending.
    Degrees(Vec<u32>),
    /// The prime divides the leading coefficient or the reduction is
    /// inseparable.
    Unusable,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema_version: u32,
    digest: String,
    entries: BTreeMap<u64, CachedScan>,
}

pub struct PrimeScanCache {
    path: PathBuf,
    digest: String,
    entries: BTreeMap<u64, CachedScan>,
    dirty: bool,
    pub warnings: Vec<String>,
}

/// Hex digest identifying an integer coefficient vector.
pub fn model_digest(model: &[BigInt]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(b"quartic-forge-scan-v1:");
    for (i, c) in model.iter().enumerate() {
        if i > 0 {
            hasher.update(b",");
        }
        hasher.update(c.to_string().as_bytes());
    }
    let out = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for b in out {
        hex.push_str(&format!("{b:02x}"));
    }
    hex
}

impl PrimeScanCache {
    /// Opens (or initializes) the cache for `model` under `dir`. Never
    /// fails: unusable files are reported through `warnings` and the cache
    /// starts empty.
    pub fn open(dir: &Path, model: &[BigInt]) -> PrimeScanCache {
        let digest = model_digest(model);
        let path = dir.join(format!("scan-{}.json", &digest[..16]));
        let mut cache = PrimeScanCache {
            path,
            digest,
            entries: BTreeMap::new(),
            dirty: false,
            warnings: Vec::new(),
        };
        if let Err(e) = std::fs::create_dir_all(dir) {
            cache.warnings.push(format!(
                "cannot create cache directory {}: {e}",
                dir.display()
            ));
            return cache;
        }
        match std::fs::read_to_string(&cache.path) {
            Ok(text) => match serde_json::from_str::<CacheFile>(&text) {
                Ok(file) if file.schema_version == 1 && file.digest == cache.digest => {
                    cache.entries = file.entries;
                }
                Ok(_) => {
                    cache.warnings.push(format!(
                        "cache file {} does not match this input; rescanning",
                        cache.path.display()
                    ));
                }
                Err(e) => {
                    cache.warnings.push(format!(
                        "cache file {} is corrupt ({e}); rescanning",
                        cache.path.display()
                    ));
                }
            },
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => {
                cache.warnings.push(format!(
                    "cannot read cache file {}: {e}",
                    cache.path.display()
                ));
            }
        }
        cache
    }

    pub fn get(&self, prime: u64) -> Option<&CachedScan> {
        self.entries.get(&prime)
    }

    pub fn put(&mut self, prime: u64, scan: CachedScan) {
        self.entries.insert(prime, scan);
        self.dirty = true;
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Best-effort write-back; IO problems become warnings.
    pub fn persist(&mut self) {
        if !self.dirty {
            return;
        }
        let file = CacheFile {
            schema_version: 1,
            digest: self.digest.clone(),
            entries: self.entries.clone(),
        };
        match serde_json::to_string_pretty(&file) {
            Ok(text) => match std::fs::write(&self.path, text) {
                Ok(()) => self.dirty = false,
                Err(e) => self.warnings.push(format!(
                    "cannot write cache file {}: {e}",
                    self.path.display()
                )),
            },
            Err(e) => self.warnings.push(format!("cannot encode cache: {e}")),
        }
    }
}
