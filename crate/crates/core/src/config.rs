//! TOML run configuration.
//!
//! ```toml
//! [assets]              # paths relative to the config file
//! embeddings = "embeddings.txt"
//! phonetic = "phonetic.tsv"
//! pos = "pos.tsv"
//! domains = "domains.tsv"
//! graph = "graph.tsv"
//! prototypes = "prototypes.tsv"
//! allowlist = "allow.txt"   # optional
//!
//! [vocabulary]
//! max_chars = 8
//! require_in_embeddings = true
//!
//! [generation]
//! iterations = 28
//! seeds_per_iteration = 2
//! min_len = 60.0
//! max_len = 300.0
//! canvas = { width = 2000.0, height = 2000.0 }
//!
//! [mix]
//! max_candidates = 7
//! rng_seed = 0
//!
//! [mix.quotas]
//! semantic = 0.3516
//! linguistic = 0.2637
//! dadaism = 0.2286
//! author = 0.1561
//!
//! [mix.linguistic]
//! min_shared = 1
//! tone_mode = "insensitive"      # or "sensitive"
//! homophone_mode = "any-syllable" # or "whole-word"
//!
//! [mix.author]
//! depth = 2
//!
//! [mix.dada]
//! semantic_ceiling = 0.35
//! forbid_shared_char = true
//! forbid_shared_syllable = true
//!
//! [eval]                # defaults follow [mix]
//! semantic_floor = 0.35
//! ```
//!
//! Every key is optional.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::embedding::VocabularyFilter;
use crate::error::{Error, Result};
use crate::eval::Thresholds;
use crate::generator::GenerationConfig;
use crate::layout::Canvas;
use crate::mixer::MixConfig;
use crate::stores::AssetPaths;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GenerationSection {
    pub iterations: usize,
    pub seeds_per_iteration: usize,
    pub min_len: f64,
    pub max_len: f64,
    pub canvas: Canvas,
}

impl Default for GenerationSection {
    fn default() -> Self {
        let g = GenerationConfig::default();
        GenerationSection {
            iterations: g.iterations,
            seeds_per_iteration: g.seeds_per_iteration,
            min_len: g.min_len,
            max_len: g.max_len,
            canvas: g.canvas,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConfigFile {
    pub assets: AssetPaths,
    pub vocabulary: VocabularyFilter,
    pub generation: GenerationSection,
    pub mix: MixConfig,
    pub eval: Option<Thresholds>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Loads a config file; relative asset paths are resolved against its
    /// directory.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg = Self::parse(&text)?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        let resolve = |p: &mut Option<PathBuf>| {
            if let Some(inner) = p {
                if inner.is_relative() {
                    *inner = base.join(&*inner);
                }
            }
        };
        let a = &mut cfg.assets;
        for p in [
            &mut a.embeddings,
            &mut a.phonetic,
            &mut a.pos,
            &mut a.domains,
            &mut a.graph,
            &mut a.prototypes,
            &mut a.allowlist,
        ] {
            resolve(p);
        }
        Ok(cfg)
    }

    pub fn generation_config(&self) -> GenerationConfig {
        let g = &self.generation;
        GenerationConfig {
            iterations: g.iterations,
            seeds_per_iteration: g.seeds_per_iteration,
            canvas: g.canvas,
            min_len: g.min_len,
            max_len: g.max_len,
            mix: self.mix.clone(),
        }
    }

    pub fn thresholds(&self) -> Thresholds {
        self.eval
            .clone()
            .unwrap_or_else(|| Thresholds::for_mix(&self.mix))
    }
}
