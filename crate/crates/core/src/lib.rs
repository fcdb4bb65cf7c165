//! Seed-word expansion and mind-map generation for Chinese-painting style
//! creativity maps.
//!
//! The pipeline: load the [`Stores`], expand a seed into a quota-controlled
//! mix of semantic, linguistic, Dada and author candidates ([`mixer`]),
//! grow a tree from several seeds ([`generator`]), classify every node into a
//! painting domain ([`scene`]) and render it ([`svg`], [`trace`]).
//! [`eval`] reproduces the provenance distribution comparison.

pub mod config;
pub mod dada;
pub mod embedding;
pub mod error;
pub mod eval;
pub mod exec;
pub mod fixture;
pub mod generator;
pub mod graph;
pub mod layout;
pub mod lexicon;
pub mod linguistic;
pub mod mixer;
pub mod rng;
pub mod scene;
pub mod stores;
pub mod svg;
pub mod trace;

pub use config::ConfigFile;
pub use embedding::{cosine_similarity, EmbeddingStore, Neighbor, VocabularyFilter};
pub use error::{Error, Result};
pub use eval::{
    annotate_provenance, compare_configs, distribution_report, Comparison, DistributionReport,
    Thresholds,
};
pub use exec::Execution;
pub use generator::{
    distance_for_similarity, generate, generate_with, GenerationConfig, MindMap, MindMapNode,
};
pub use graph::{GraphHit, KnowledgeGraph, Relation};
pub use layout::{Canvas, Point};
pub use lexicon::{PhoneticLexicon, Syllable, TagLexicon, ToneMode};
pub use linguistic::{
    homophone_candidates, lexical_candidates, longest_common_substring, HomophoneMode,
};
pub use mixer::{apportion, expand, expand_with, Candidate, Counts, MixConfig, Provenance, Quotas};
pub use scene::{
    classify_domain, painting_element, Classification, DomainPrototypes, PaintingDomain,
};
pub use stores::{AssetPaths, Stores};
pub use svg::render_svg;
pub use trace::{export_trace, Trace};
