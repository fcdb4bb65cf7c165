//! Dadaist expansion: cross-domain jumps, cross-POS jumps, and random words
//! with no semantic, lexical or phonetic tie to the seed.
//!
//! Syllable disjointness is always checked tone-insensitively, which is the
//! strictest reading and keeps these words out of the homophone pools under
//! either tone mode.

use std::collections::HashSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::embedding::EmbeddingStore;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::lexicon::{PhoneticLexicon, TagLexicon, ToneMode};
use crate::rng::sample_without_replacement;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct DadaConfig {
    /// Candidates must have cosine similarity to the seed strictly below
    /// this value.
    pub semantic_ceiling: f64,
    pub forbid_shared_char: bool,
    pub forbid_shared_syllable: bool,
}

impl Default for DadaConfig {
    fn default() -> Self {
        DadaConfig {
            semantic_ceiling: 0.35,
            forbid_shared_char: true,
            forbid_shared_syllable: true,
        }
    }
}

impl DadaConfig {
    pub fn validate(&self) -> Result<()> {
        if !(-1.0..=1.0).contains(&self.semantic_ceiling) {
            return Err(Error::Config(format!(
                "dada semantic_ceiling {} outside [-1, 1]",
                self.semantic_ceiling
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedWord {
    pub word: String,
    pub tag: String,
}

fn cross_tag_candidates<'a, F, R>(
    vocab: &[String],
    seed: &str,
    k: usize,
    rng: &mut R,
    kind: &'static str,
    lookup: F,
) -> Result<Vec<TaggedWord>>
where
    F: Fn(&str) -> Option<&'a str>,
    R: Rng + ?Sized,
{
    let seed_tag = lookup(seed).ok_or_else(|| Error::MissingTag {
        word: seed.to_string(),
        kind,
    })?;
    let mut seen = HashSet::new();
    let pool: Vec<TaggedWord> = vocab
        .iter()
        .filter(|w| w.as_str() != seed && seen.insert(w.as_str()))
        .filter_map(|w| {
            let tag = lookup(w)?;
            (tag != seed_tag).then(|| TaggedWord {
                word: w.clone(),
                tag: tag.to_string(),
            })
        })
        .collect();
    Ok(sample_without_replacement(&pool, k, rng))
}

/// Uniform sample of vocabulary words whose topical domain differs from the
/// seed's.
pub fn cross_domain_candidates<R: Rng + ?Sized>(
    tags: &TagLexicon,
    vocab: &[String],
    seed: &str,
    k: usize,
    rng: &mut R,
) -> Result<Vec<TaggedWord>> {
    cross_tag_candidates(vocab, seed, k, rng, "domain", |w| tags.domain(w))
}

/// Uniform sample of vocabulary words whose part of speech differs from the
/// seed's.
pub fn cross_pos_candidates<R: Rng + ?Sized>(
    tags: &TagLexicon,
    vocab: &[String],
    seed: &str,
    k: usize,
    rng: &mut R,
) -> Result<Vec<TaggedWord>> {
    cross_tag_candidates(vocab, seed, k, rng, "POS", |w| tags.pos(w))
}

/// Precomputed view of a seed for repeated admission checks.
pub struct Admission<'a> {
    store: &'a EmbeddingStore,
    phonetic: &'a PhoneticLexicon,
    cfg: &'a DadaConfig,
    seed_idx: usize,
    seed_chars: HashSet<char>,
    seed_syllables: HashSet<String>,
}

impl<'a> Admission<'a> {
    pub fn new(
        store: &'a EmbeddingStore,
        phonetic: &'a PhoneticLexicon,
        seed: &str,
        cfg: &'a DadaConfig,
    ) -> Result<Self> {
        let seed_idx = store
            .index_of(seed)
            .ok_or_else(|| Error::OutOfVocabulary(seed.to_string()))?;
        Ok(Admission {
            store,
            phonetic,
            cfg,
            seed_idx,
            seed_chars: seed.chars().collect(),
            seed_syllables: phonetic
                .keys(seed, ToneMode::Insensitive)
                .into_iter()
                .collect(),
        })
    }

    /// All three exclusion predicates. Words outside the store, or with an
    /// undefined similarity, are never admitted.
    pub fn admits(&self, word: &str) -> bool {
        match self.store.index_of(word) {
            Some(i) => self.admits_index(i),
            None => false,
        }
    }

    fn admits_index(&self, i: usize) -> bool {
        if i == self.seed_idx {
            return false;
        }
        match self.store.similarity_at(self.seed_idx, i) {
            Some(s) if s < self.cfg.semantic_ceiling => {}
            _ => return false,
        }
        let word = self.store.word(i);
        if self.cfg.forbid_shared_char && word.chars().any(|c| self.seed_chars.contains(&c)) {
            return false;
        }
        if self.cfg.forbid_shared_syllable && !self.seed_syllables.is_empty() {
            if let Some(ss) = self.phonetic.syllables(word) {
                if ss.iter().any(|s| self.seed_syllables.contains(&s.base)) {
                    return false;
                }
            }
        }
        true
    }

    /// Every admissible vocabulary word, in store order.
    pub fn pool(&self, exec: Execution) -> Vec<String> {
        exec.filter_map_indices(self.store.len(), |i| {
            self.admits_index(i).then(|| self.store.word(i).to_string())
        })
    }
}

/// Uniform sample of words beyond any semantic, lexical or phonetic
/// connection to `seed`.
pub fn random_candidates<R: Rng + ?Sized>(
    store: &EmbeddingStore,
    phonetic: &PhoneticLexicon,
    seed: &str,
    k: usize,
    cfg: &DadaConfig,
    rng: &mut R,
) -> Result<Vec<String>> {
    let admission = Admission::new(store, phonetic, seed, cfg)?;
    let pool = admission.pool(Execution::default());
    Ok(sample_without_replacement(&pool, k, rng))
}
