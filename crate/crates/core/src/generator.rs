//! Iterative mind-map generation.
//!
//! Each round expands every frontier word once through the mixer, places the
//! new candidates around it, and promotes the `seeds_per_iteration` most
//! similar new children of each frontier word into the next frontier. Words
//! are placed at most once and expanded at most once.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::embedding::EmbeddingStore;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::layout::{Canvas, Point, RadialLayout};
use crate::mixer::{candidate_order, expand_with, Candidate, MixConfig, Provenance};
use crate::scene::{ElementGlyph, PaintingDomain};
use crate::stores::Stores;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GenerationConfig {
    /// Number of frontier rounds.
    pub iterations: usize,
    /// New children of each frontier word promoted to the next frontier.
    pub seeds_per_iteration: usize,
    pub canvas: Canvas,
    /// Edge length for cosine 1.
    pub min_len: f64,
    /// Edge length for cosine -1 or unknown similarity.
    pub max_len: f64,
    pub mix: MixConfig,
}

impl Default for GenerationConfig {
    fn default() -> Self {
        GenerationConfig {
            iterations: 28,
            seeds_per_iteration: 2,
            canvas: Canvas::default(),
            min_len: 60.0,
            max_len: 300.0,
            mix: MixConfig::default(),
        }
    }
}

impl GenerationConfig {
    pub fn validate(&self) -> Result<()> {
        if self.iterations == 0 {
            return Err(Error::Config("iterations must be at least 1".into()));
        }
        if self.seeds_per_iteration == 0 {
            return Err(Error::Config(
                "seeds_per_iteration must be at least 1".into(),
            ));
        }
        if !(self.min_len.is_finite()
            && self.max_len.is_finite()
            && 0.0 <= self.min_len
            && self.min_len < self.max_len)
        {
            return Err(Error::Config(format!(
                "need 0 <= min_len < max_len, got {} and {}",
                self.min_len, self.max_len
            )));
        }
        if !(self.canvas.width > 0.0 && self.canvas.height > 0.0) {
            return Err(Error::Config("canvas must have positive size".into()));
        }
        self.mix.validate()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MindMapNode {
    pub word: String,
    /// `None` for user seeds.
    pub provenance: Option<Provenance>,
    pub similarity: Option<f64>,
    pub detail: Option<String>,
    pub domain: PaintingDomain,
    pub confidence: f64,
    pub element: ElementGlyph,
    pub position: Point,
    pub parent: Option<usize>,
    pub path_length: f64,
    /// 0 for user seeds, otherwise the round that placed the node.
    pub iteration: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MindMap {
    pub nodes: Vec<MindMapNode>,
    pub canvas: Canvas,
    pub config: GenerationConfig,
    pub rng_seed: u64,
    pub seeds: Vec<String>,
}

impl MindMap {
    pub fn empty(config: GenerationConfig) -> Self {
        MindMap {
            nodes: Vec::new(),
            canvas: config.canvas,
            rng_seed: config.mix.rng_seed,
            config,
            seeds: Vec::new(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.parent.is_some()).count()
    }
}

/// Edge length for a cosine similarity: `(1 - cos) / 2` mapped linearly onto
/// `[min_len, max_len]`; unknown similarity gives `max_len`.
pub fn distance_for_similarity(similarity: Option<f64>, cfg: &GenerationConfig) -> f64 {
    match similarity {
        Some(cos) if cos.is_finite() => {
            let t = ((1.0 - cos) / 2.0).clamp(0.0, 1.0);
            cfg.min_len + (cfg.max_len - cfg.min_len) * t
        }
        _ => cfg.max_len,
    }
}

pub fn node_distance(
    seed: &str,
    candidate: &str,
    store: &EmbeddingStore,
    cfg: &GenerationConfig,
) -> f64 {
    distance_for_similarity(store.similarity(seed, candidate), cfg)
}

pub fn generate(seeds: &[String], cfg: &GenerationConfig, stores: &Stores) -> Result<MindMap> {
    generate_with(seeds, cfg, stores, Execution::default())
}

pub fn generate_with(
    seeds: &[String],
    cfg: &GenerationConfig,
    stores: &Stores,
    exec: Execution,
) -> Result<MindMap> {
    cfg.validate()?;
    let mut unique = HashSet::new();
    for s in seeds {
        stores.filter.check_seed(s, &stores.embeddings)?;
        if !unique.insert(s.as_str()) {
            return Err(Error::InvalidSeed {
                word: s.clone(),
                reason: "given more than once".into(),
            });
        }
    }
    let prototypes = stores.prototypes()?;

    let mut map = MindMap::empty(cfg.clone());
    map.seeds = seeds.to_vec();
    let mut layout = RadialLayout::new(cfg.canvas);
    let mut placed: HashMap<String, usize> = HashMap::new();

    let mut frontier = Vec::with_capacity(seeds.len());
    for (i, s) in seeds.iter().enumerate() {
        let id = layout.place_root(layout.root_position(i, seeds.len()));
        let class = prototypes.classify(s, &stores.embeddings);
        map.nodes.push(MindMapNode {
            word: s.clone(),
            provenance: None,
            similarity: None,
            detail: None,
            domain: class.domain,
            confidence: class.confidence,
            element: class.domain.element(),
            position: layout.positions()[id],
            parent: None,
            path_length: 0.0,
            iteration: 0,
        });
        placed.insert(s.clone(), id);
        frontier.push(id);
    }

    let mut expanded: HashSet<String> = HashSet::new();
    for round in 1..=cfg.iterations {
        let mut next = Vec::new();
        for &parent in &frontier {
            let word = map.nodes[parent].word.clone();
            if !expanded.insert(word.clone()) {
                continue;
            }
            let candidates = expand_with(&word, &cfg.mix, stores, exec)?;
            let slots = candidates.len();
            let mut children: Vec<(usize, Candidate)> = Vec::new();
            for (slot, cand) in candidates.into_iter().enumerate() {
                if placed.contains_key(&cand.word) {
                    continue;
                }
                let class = prototypes.classify(&cand.word, &stores.embeddings);
                let length = distance_for_similarity(cand.similarity, cfg);
                let id = layout.place_child(parent, slot, slots, length);
                map.nodes.push(MindMapNode {
                    word: cand.word.clone(),
                    provenance: Some(cand.provenance),
                    similarity: cand.similarity,
                    detail: Some(cand.detail.clone()),
                    domain: class.domain,
                    confidence: class.confidence,
                    element: class.domain.element(),
                    position: layout.positions()[id],
                    parent: Some(parent),
                    path_length: length,
                    iteration: round,
                });
                placed.insert(cand.word.clone(), id);
                children.push((id, cand));
            }
            children.retain(|(_, c)| {
                stores
                    .filter
                    .check_seed(&c.word, &stores.embeddings)
                    .is_ok()
            });
            children.sort_by(|a, b| candidate_order(&a.1, &b.1));
            next.extend(
                children
                    .iter()
                    .take(cfg.seeds_per_iteration)
                    .map(|(id, _)| *id),
            );
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(map)
}
