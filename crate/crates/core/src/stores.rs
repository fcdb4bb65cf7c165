use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::embedding::{EmbeddingStore, VocabularyFilter};
use crate::error::{Error, Result};
use crate::graph::KnowledgeGraph;
use crate::lexicon::{PhoneticLexicon, TagLexicon};
use crate::scene::DomainPrototypes;

/// File locations of every asset. Only `embeddings` is mandatory.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AssetPaths {
    pub embeddings: Option<PathBuf>,
    pub phonetic: Option<PathBuf>,
    pub pos: Option<PathBuf>,
    pub domains: Option<PathBuf>,
    pub graph: Option<PathBuf>,
    pub prototypes: Option<PathBuf>,
    /// Optional word list restricting every candidate pool.
    pub allowlist: Option<PathBuf>,
}

impl AssetPaths {
    /// Standard file names inside one directory (the layout the bundled
    /// fixture uses).
    pub fn in_dir(dir: impl AsRef<Path>) -> Self {
        let dir = dir.as_ref();
        AssetPaths {
            embeddings: Some(dir.join("embeddings.txt")),
            phonetic: Some(dir.join("phonetic.tsv")),
            pos: Some(dir.join("pos.tsv")),
            domains: Some(dir.join("domains.tsv")),
            graph: Some(dir.join("graph.tsv")),
            prototypes: Some(dir.join("prototypes.tsv")),
            allowlist: None,
        }
    }

    /// Fills unset paths from `other`.
    pub fn or(self, other: AssetPaths) -> AssetPaths {
        AssetPaths {
            embeddings: self.embeddings.or(other.embeddings),
            phonetic: self.phonetic.or(other.phonetic),
            pos: self.pos.or(other.pos),
            domains: self.domains.or(other.domains),
            graph: self.graph.or(other.graph),
            prototypes: self.prototypes.or(other.prototypes),
            allowlist: self.allowlist.or(other.allowlist),
        }
    }
}

/// Everything the expansion strategies read. Immutable once built.
#[derive(Debug, Clone)]
pub struct Stores {
    pub filter: VocabularyFilter,
    pub embeddings: EmbeddingStore,
    pub phonetic: PhoneticLexicon,
    pub tags: TagLexicon,
    pub graph: KnowledgeGraph,
    pub prototypes: Option<DomainPrototypes>,
    pub allowlist: Option<HashSet<String>>,
}

impl Stores {
    pub fn new(filter: VocabularyFilter, embeddings: EmbeddingStore) -> Self {
        Stores {
            filter,
            embeddings,
            phonetic: PhoneticLexicon::default(),
            tags: TagLexicon::default(),
            graph: KnowledgeGraph::default(),
            prototypes: None,
            allowlist: None,
        }
    }

    pub fn load(paths: &AssetPaths, filter: VocabularyFilter) -> Result<Self> {
        let emb_path = paths
            .embeddings
            .as_ref()
            .ok_or_else(|| Error::Config("no embedding file given".into()))?;
        let embeddings = EmbeddingStore::load(emb_path, &filter)?;
        let mut stores = Stores::new(filter, embeddings);
        if let Some(p) = &paths.phonetic {
            stores.phonetic = PhoneticLexicon::load(p)?;
        }
        match (&paths.pos, &paths.domains) {
            (Some(pos), Some(dom)) => stores.tags = TagLexicon::load(pos, dom)?,
            (None, None) => {}
            _ => {
                return Err(Error::Config(
                    "POS and domain tag files must be given together".into(),
                ))
            }
        }
        if let Some(p) = &paths.graph {
            stores.graph = KnowledgeGraph::load(p)?;
        }
        if let Some(p) = &paths.prototypes {
            stores.prototypes = Some(DomainPrototypes::load(p, &stores.embeddings)?);
        }
        if let Some(p) = &paths.allowlist {
            let text = fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
            stores.allowlist = Some(
                text.lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .map(String::from)
                    .collect(),
            );
        }
        Ok(stores)
    }

    pub fn allowed(&self, word: &str) -> bool {
        self.allowlist.as_ref().is_none_or(|a| a.contains(word))
    }

    pub fn prototypes(&self) -> Result<&DomainPrototypes> {
        self.prototypes
            .as_ref()
            .ok_or_else(|| Error::Config("no domain prototype file given".into()))
    }
}
