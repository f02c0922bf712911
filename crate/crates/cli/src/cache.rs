//! On-disk cache of shortest coset representatives, keyed by
//! `(family, rank, J)`. Files with another version are rebuilt.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use hessvar_core::weyl::enumerate_min_reps;
use hessvar_core::{HessConfig, WeylElement};
use serde::{Deserialize, Serialize};

pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Default, Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    /// Key `B4:1,2,4` to canonical words (1-based indices).
    coset_reps: BTreeMap<String, Vec<Vec<usize>>>,
}

pub struct RepCache {
    path: Option<PathBuf>,
    file: CacheFile,
    dirty: bool,
}

fn key(cfg: &HessConfig) -> String {
    let j: Vec<String> = cfg.j().iter().map(|i| (i + 1).to_string()).collect();
    format!("{}:{}", cfg.rs().name(), j.join(","))
}

impl RepCache {
    pub fn open(path: Option<&Path>) -> Result<Self> {
        let mut file = CacheFile {
            version: CACHE_VERSION,
            ..CacheFile::default()
        };
        if let Some(p) = path {
            if p.exists() {
                let text = std::fs::read_to_string(p).with_context(|| format!("reading cache {}", p.display()))?;
                let parsed: CacheFile =
                    serde_json::from_str(&text).with_context(|| format!("parsing cache {}", p.display()))?;
                if parsed.version == CACHE_VERSION {
                    file = parsed;
                }
            }
        }
        Ok(RepCache {
            path: path.map(Path::to_path_buf),
            file,
            dirty: false,
        })
    }

    /// Returns `(reps, hit)`.
    pub fn coset_reps(&mut self, cfg: &HessConfig, bound: u128) -> Result<(Vec<WeylElement>, bool)> {
        let rs = cfg.rs();
        let k = key(cfg);
        if let Some(words) = self.file.coset_reps.get(&k) {
            let reps = words
                .iter()
                .map(|w| {
                    let w0: Vec<usize> = w.iter().map(|i| i - 1).collect();
                    WeylElement::from_word(rs, &w0)
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Ok((reps, true));
        }
        let reps = enumerate_min_reps(rs, cfg.j(), bound)?;
        let words = reps.iter().map(|v| v.word(rs).iter().map(|i| i + 1).collect()).collect();
        self.file.coset_reps.insert(k, words);
        self.dirty = true;
        Ok((reps, false))
    }

    pub fn save(&self) -> Result<()> {
        if let (Some(p), true) = (&self.path, self.dirty) {
            let text = serde_json::to_string_pretty(&self.file)?;
            std::fs::write(p, text + "\n").with_context(|| format!("writing cache {}", p.display()))?;
        }
        Ok(())
    }
}
