//! JSON trace of a generated map.
//!
//! Schema (version 1), one object:
//!
//! ```text
//! schema_version  integer, currently 1
//! rng_seed        integer
//! seeds           [string]            user seeds in input order
//! canvas          {width, height}
//! config          generation config snapshot (same keys as the config file)
//! nodes           [node]              creation order; `id` is the index
//!
//! node: id, word, provenance (null for seeds | "semantic-similarity" |
//!       "linguistic-feature" | "dadaism" | "author-style"), domain, element
//!       {id, size}, parent (null | id), similarity (null | number),
//!       confidence, path_length, x, y, iteration, detail (null | string)
//! ```
//!
//! Serialization is canonical: parsing a trace and serializing it again gives
//! identical bytes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generator::{GenerationConfig, MindMap, MindMapNode};
use crate::layout::{Canvas, Point};
use crate::mixer::Provenance;
use crate::scene::{ElementGlyph, PaintingDomain};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Trace {
    pub schema_version: u32,
    pub rng_seed: u64,
    pub seeds: Vec<String>,
    pub canvas: Canvas,
    pub config: GenerationConfig,
    pub nodes: Vec<TraceNode>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceNode {
    pub id: usize,
    pub word: String,
    pub provenance: Option<Provenance>,
    pub domain: PaintingDomain,
    pub element: ElementGlyph,
    pub parent: Option<usize>,
    pub similarity: Option<f64>,
    pub confidence: f64,
    pub path_length: f64,
    pub x: f64,
    pub y: f64,
    pub iteration: usize,
    pub detail: Option<String>,
}

impl From<&MindMap> for Trace {
    fn from(map: &MindMap) -> Self {
        Trace {
            schema_version: SCHEMA_VERSION,
            rng_seed: map.rng_seed,
            seeds: map.seeds.clone(),
            canvas: map.canvas,
            config: map.config.clone(),
            nodes: map
                .nodes
                .iter()
                .enumerate()
                .map(|(id, n)| TraceNode {
                    id,
                    word: n.word.clone(),
                    provenance: n.provenance,
                    domain: n.domain,
                    element: n.element.clone(),
                    parent: n.parent,
                    similarity: n.similarity,
                    confidence: n.confidence,
                    path_length: n.path_length,
                    x: n.position.x,
                    y: n.position.y,
                    iteration: n.iteration,
                    detail: n.detail.clone(),
                })
                .collect(),
        }
    }
}

impl Trace {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("trace is always serializable");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Trace> {
        let trace: Trace =
            serde_json::from_str(text).map_err(|e| Error::Config(format!("invalid trace: {e}")))?;
        if trace.schema_version != SCHEMA_VERSION {
            return Err(Error::Config(format!(
                "unsupported trace schema_version {}",
                trace.schema_version
            )));
        }
        for (i, n) in trace.nodes.iter().enumerate() {
            if n.id != i || n.parent.is_some_and(|p| p >= i) {
                return Err(Error::Config(format!(
                    "trace node {i} has inconsistent ids"
                )));
            }
        }
        Ok(trace)
    }

    pub fn into_map(self) -> MindMap {
        MindMap {
            canvas: self.canvas,
            rng_seed: self.rng_seed,
            seeds: self.seeds,
            config: self.config,
            nodes: self
                .nodes
                .into_iter()
                .map(|n| MindMapNode {
                    word: n.word,
                    provenance: n.provenance,
                    similarity: n.similarity,
                    detail: n.detail,
                    domain: n.domain,
                    confidence: n.confidence,
                    element: n.element,
                    position: Point { x: n.x, y: n.y },
                    parent: n.parent,
                    path_length: n.path_length,
                    iteration: n.iteration,
                })
                .collect(),
        }
    }
}

pub fn export_trace(map: &MindMap) -> String {
    Trace::from(map).to_json()
}
