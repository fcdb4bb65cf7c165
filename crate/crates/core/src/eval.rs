//! Automatic provenance annotation and distribution reports.
//!
//! The annotator assigns each `(seed, word)` pair to exactly one class with a
//! fixed rule cascade:
//!
//! 1. author style: `word` is an ancestor or descendant of `seed` in the
//!    artist graph;
//! 2. linguistic feature: the two words share a substring of at least
//!    `min_shared` characters or any syllable;
//! 3. semantic similarity: cosine at least `semantic_floor`;
//! 4. Dadaism otherwise.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exec::Execution;
use crate::lexicon::ToneMode;
use crate::linguistic::longest_common_substring;
use crate::mixer::{expand_with, Counts, MixConfig, Provenance};
use crate::stores::Stores;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Thresholds {
    pub semantic_floor: f64,
    pub min_shared: usize,
    pub tone_mode: ToneMode,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            semantic_floor: 0.35,
            min_shared: 1,
            tone_mode: ToneMode::Insensitive,
        }
    }
}

impl Thresholds {
    /// Annotation thresholds matching a mixer configuration, so that Dadaist
    /// admission and the semantic class partition the similarity range.
    pub fn for_mix(cfg: &MixConfig) -> Self {
        Thresholds {
            semantic_floor: cfg.dada.semantic_ceiling,
            min_shared: cfg.linguistic.min_shared,
            tone_mode: cfg.linguistic.tone_mode,
        }
    }
}

pub fn annotate_provenance(seed: &str, word: &str, stores: &Stores, th: &Thresholds) -> Provenance {
    if stores.graph.is_linked(seed, word) {
        return Provenance::AuthorStyle;
    }
    if longest_common_substring(seed, word).len >= th.min_shared.max(1)
        || stores.phonetic.shares_syllable(seed, word, th.tone_mode)
    {
        return Provenance::LinguisticFeature;
    }
    match stores.embeddings.similarity(seed, word) {
        Some(s) if s >= th.semantic_floor => Provenance::SemanticSimilarity,
        _ => Provenance::Dadaism,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassShare {
    pub provenance: Provenance,
    pub count: usize,
    pub percent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistributionReport {
    pub label: String,
    pub total: usize,
    /// One entry per class in [`Provenance::ALL`] order.
    pub classes: Vec<ClassShare>,
}

impl DistributionReport {
    pub fn count(&self, p: Provenance) -> usize {
        self.classes[p.index()].count
    }

    /// Exact percentage (not rounded).
    pub fn percent(&self, p: Provenance) -> f64 {
        self.classes[p.index()].percent
    }
}

pub fn distribution_report(annotated: &[Provenance], label: &str) -> DistributionReport {
    let mut counts = [0usize; 4];
    for p in annotated {
        counts[p.index()] += 1;
    }
    let total = annotated.len();
    DistributionReport {
        label: label.to_string(),
        total,
        classes: Provenance::ALL
            .into_iter()
            .map(|p| ClassShare {
                provenance: p,
                count: counts[p.index()],
                percent: if total == 0 {
                    0.0
                } else {
                    100.0 * counts[p.index()] as f64 / total as f64
                },
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub seeds: usize,
    pub thresholds: Thresholds,
    pub baseline: DistributionReport,
    pub proposed: DistributionReport,
    /// Proposed-run candidates whose annotated class differs from the
    /// strategy that produced them, by producing strategy.
    pub disagreements: Counts,
}

/// Runs the mixer on every seed under both configurations and annotates the
/// results.
pub fn compare_configs(
    seeds: &[String],
    baseline: &MixConfig,
    proposed: &MixConfig,
    stores: &Stores,
    th: &Thresholds,
) -> Result<Comparison> {
    compare_configs_with(seeds, baseline, proposed, stores, th, Execution::default())
}

pub fn compare_configs_with(
    seeds: &[String],
    baseline: &MixConfig,
    proposed: &MixConfig,
    stores: &Stores,
    th: &Thresholds,
    exec: Execution,
) -> Result<Comparison> {
    // Seeds are the parallel axis; each expansion runs sequentially inside.
    // (annotated baseline labels, (produced, annotated) proposed labels)
    type SeedLabels = (Vec<Provenance>, Vec<(Provenance, Provenance)>);
    let per_seed: Vec<Result<SeedLabels>> = exec.map(seeds, |seed| {
        let base = expand_with(seed, baseline, stores, Execution::Sequential)?;
        let prop = expand_with(seed, proposed, stores, Execution::Sequential)?;
        let base = base
            .iter()
            .map(|c| annotate_provenance(seed, &c.word, stores, th))
            .collect();
        let prop = prop
            .iter()
            .map(|c| (c.provenance, annotate_provenance(seed, &c.word, stores, th)))
            .collect();
        Ok((base, prop))
    });
    let mut base_all = Vec::new();
    let mut prop_all = Vec::new();
    let mut disagreements = Counts::default();
    for r in per_seed {
        let (b, p) = r?;
        base_all.extend(b);
        for (made, annotated) in p {
            if made != annotated {
                disagreements.0[made.index()] += 1;
            }
            prop_all.push(annotated);
        }
    }
    Ok(Comparison {
        seeds: seeds.len(),
        thresholds: th.clone(),
        baseline: distribution_report(&base_all, "baseline"),
        proposed: distribution_report(&prop_all, "proposed"),
        disagreements,
    })
}

/// Aligned plain-text table, percentages rounded to two decimals.
pub fn render_table(reports: &[&DistributionReport], th: &Thresholds) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Word expansion distribution (semantic_floor = {}, min_shared = {}, tone = {})",
        th.semantic_floor,
        th.min_shared,
        match th.tone_mode {
            ToneMode::Sensitive => "sensitive",
            ToneMode::Insensitive => "insensitive",
        }
    );
    let _ = write!(out, "{:<10} {:>6}", "config", "total");
    for p in Provenance::ALL {
        let _ = write!(out, "  {:>19}", p.label());
    }
    out.push('\n');
    for r in reports {
        let _ = write!(out, "{:<10} {:>6}", r.label, r.total);
        for c in &r.classes {
            let _ = write!(out, "  {:>18.2}%", c.percent);
        }
        out.push('\n');
    }
    out
}
