//! Word-embedding storage, cosine similarity and exact k-nearest-neighbour
//! search.
//!
//! The on-disk format is the plain word2vec text layout: a `<count> <dim>`
//! header followed by one `word v1 … v_dim` line per entry. Vectors are kept
//! as `f32` but every dot product and norm is accumulated in `f64`.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;

/// Admission rule for vocabulary words and seeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct VocabularyFilter {
    /// Longest admissible word, counted in Unicode scalar values.
    pub max_chars: usize,
    pub require_in_embeddings: bool,
}

impl Default for VocabularyFilter {
    fn default() -> Self {
        VocabularyFilter {
            max_chars: 8,
            require_in_embeddings: true,
        }
    }
}

impl VocabularyFilter {
    pub fn validate(&self) -> Result<()> {
        if self.max_chars == 0 {
            return Err(Error::Config(
                "vocabulary max_chars must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn admits_length(&self, word: &str) -> bool {
        word.chars().count() <= self.max_chars
    }

    /// Checks a seed word against the full filter.
    pub fn check_seed(&self, word: &str, store: &EmbeddingStore) -> Result<()> {
        let reject = |reason: String| Error::InvalidSeed {
            word: word.to_string(),
            reason,
        };
        if word.is_empty() {
            return Err(reject("empty word".into()));
        }
        if !self.admits_length(word) {
            return Err(reject(format!("longer than {} characters", self.max_chars)));
        }
        if self.require_in_embeddings && !store.contains(word) {
            return Err(reject("not in the embedding vocabulary".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Neighbor {
    pub word: String,
    pub similarity: f64,
}

/// Euclidean norm with `f64` accumulation.
pub fn norm(v: &[f32]) -> f64 {
    v.iter()
        .map(|&x| f64::from(x) * f64::from(x))
        .sum::<f64>()
        .sqrt()
}

fn dot(a: &[f32], b: &[f32]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| f64::from(x) * f64::from(y))
        .sum()
}

pub fn cosine_similarity(a: &[f32], b: &[f32]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let (na, nb) = (norm(a), norm(b));
    if na == 0.0 || nb == 0.0 {
        return Err(Error::DegenerateVector);
    }
    Ok(dot(a, b) / (na * nb))
}

/// Descending similarity, then ascending code-point order of the word.
pub(crate) fn rank_order(sim_a: f64, word_a: &str, sim_b: f64, word_b: &str) -> Ordering {
    sim_b
        .partial_cmp(&sim_a)
        .unwrap_or(Ordering::Equal)
        .then_with(|| word_a.cmp(word_b))
}

/// Immutable word-vector table. Cheap to share across threads by reference.
#[derive(Debug, Clone)]
pub struct EmbeddingStore {
    dim: usize,
    words: Vec<String>,
    // row-major, `dim` components per word
    vectors: Vec<f32>,
    norms: Vec<f64>,
    index: HashMap<String, usize>,
}

impl EmbeddingStore {
    /// Builds a store from in-memory entries, dropping words the filter
    /// rejects on length.
    pub fn from_entries<I>(dim: usize, entries: I, filter: &VocabularyFilter) -> Result<Self>
    where
        I: IntoIterator<Item = (String, Vec<f32>)>,
    {
        if dim == 0 {
            return Err(Error::Config("embedding dimension must be positive".into()));
        }
        let mut store = EmbeddingStore {
            dim,
            words: Vec::new(),
            vectors: Vec::new(),
            norms: Vec::new(),
            index: HashMap::new(),
        };
        for (word, vector) in entries {
            if vector.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: vector.len(),
                });
            }
            if filter.admits_length(&word) {
                store.push(word, &vector)?;
            }
        }
        Ok(store)
    }

    fn push(&mut self, word: String, vector: &[f32]) -> Result<()> {
        if self.index.contains_key(&word) {
            return Err(Error::DuplicateWord(word));
        }
        self.index.insert(word.clone(), self.words.len());
        self.words.push(word);
        self.norms.push(norm(vector));
        self.vectors.extend_from_slice(vector);
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>, filter: &VocabularyFilter) -> Result<Self> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        Self::read(BufReader::new(file), path, filter)
    }

    /// Parses the text format from any reader. `path` is only used in error
    /// messages.
    pub fn read<R: BufRead>(reader: R, path: &Path, filter: &VocabularyFilter) -> Result<Self> {
        filter.validate()?;
        let mut lines = reader.lines().enumerate();
        let header = match lines.next() {
            Some((_, line)) => line.map_err(|e| Error::io(path, e))?,
            None => return Err(Error::format(path, 1, "missing `<count> <dim>` header")),
        };
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (count, dim) = match fields.as_slice() {
            [c, d] => match (c.parse::<usize>(), d.parse::<usize>()) {
                (Ok(c), Ok(d)) if d > 0 => (c, d),
                _ => return Err(Error::format(path, 1, "malformed `<count> <dim>` header")),
            },
            _ => return Err(Error::format(path, 1, "malformed `<count> <dim>` header")),
        };

        let mut store = EmbeddingStore {
            dim,
            words: Vec::with_capacity(count.min(1 << 20)),
            vectors: Vec::new(),
            norms: Vec::new(),
            index: HashMap::new(),
        };
        let mut seen = 0usize;
        let mut vector = Vec::with_capacity(dim);
        for (i, line) in lines {
            let lineno = i + 1;
            let line = line.map_err(|e| Error::io(path, e))?;
            if line.trim().is_empty() {
                continue;
            }
            seen += 1;
            if seen > count {
                return Err(Error::format(
                    path,
                    lineno,
                    format!("more entries than the {count} declared in the header"),
                ));
            }
            let mut parts = line.split_whitespace();
            let word = parts.next().unwrap_or_default();
            vector.clear();
            for tok in parts {
                let v: f32 = tok
                    .parse()
                    .map_err(|_| Error::format(path, lineno, format!("bad component `{tok}`")))?;
                vector.push(v);
            }
            if vector.len() != dim {
                return Err(Error::format(
                    path,
                    lineno,
                    format!("expected {dim} components, found {}", vector.len()),
                ));
            }
            if filter.admits_length(word) {
                store.push(word.to_string(), &vector)?;
            }
        }
        if seen != count {
            return Err(Error::format(
                path,
                seen + 2,
                format!("header declares {count} entries, found {seen}"),
            ));
        }
        Ok(store)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    pub fn index_of(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// Words in file order.
    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn word(&self, idx: usize) -> &str {
        &self.words[idx]
    }

    pub fn vector_at(&self, idx: usize) -> &[f32] {
        &self.vectors[idx * self.dim..(idx + 1) * self.dim]
    }

    pub fn vector(&self, word: &str) -> Option<&[f32]> {
        self.index_of(word).map(|i| self.vector_at(i))
    }

    pub fn norm_at(&self, idx: usize) -> f64 {
        self.norms[idx]
    }

    /// Cosine between two stored rows using the cached norms. Returns `None`
    /// if either row has zero norm.
    pub fn similarity_at(&self, a: usize, b: usize) -> Option<f64> {
        let (na, nb) = (self.norms[a], self.norms[b]);
        if na == 0.0 || nb == 0.0 {
            return None;
        }
        Some(dot(self.vector_at(a), self.vector_at(b)) / (na * nb))
    }

    /// Cosine between two words; `None` when either is missing or degenerate.
    pub fn similarity(&self, a: &str, b: &str) -> Option<f64> {
        self.similarity_at(self.index_of(a)?, self.index_of(b)?)
    }

    pub fn nearest_neighbors(
        &self,
        word: &str,
        k: usize,
        excluded: &HashSet<String>,
    ) -> Result<Vec<Neighbor>> {
        self.nearest_neighbors_where(word, k, Execution::default(), |w| !excluded.contains(w))
    }

    /// Exact kNN restricted to words accepted by `admit`. The query word and
    /// zero-norm rows are never returned.
    pub fn nearest_neighbors_where<F>(
        &self,
        word: &str,
        k: usize,
        exec: Execution,
        admit: F,
    ) -> Result<Vec<Neighbor>>
    where
        F: Fn(&str) -> bool + Sync + Send,
    {
        let q = self
            .index_of(word)
            .ok_or_else(|| Error::OutOfVocabulary(word.to_string()))?;
        if self.norms[q] == 0.0 {
            return Err(Error::DegenerateVector);
        }
        if k == 0 {
            return Ok(Vec::new());
        }
        let mut scored: Vec<(usize, f64)> = exec.filter_map_indices(self.len(), |i| {
            if i == q || !admit(&self.words[i]) {
                return None;
            }
            self.similarity_at(q, i).map(|s| (i, s))
        });
        let cmp = |a: &(usize, f64), b: &(usize, f64)| {
            rank_order(a.1, &self.words[a.0], b.1, &self.words[b.0])
        };
        if scored.len() > k {
            scored.select_nth_unstable_by(k - 1, cmp);
            scored.truncate(k);
        }
        scored.sort_unstable_by(cmp);
        Ok(scored
            .into_iter()
            .map(|(i, s)| Neighbor {
                word: self.words[i].clone(),
                similarity: s,
            })
            .collect())
    }
}
