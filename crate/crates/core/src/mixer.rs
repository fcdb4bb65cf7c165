//! Combines the four expansion strategies into one candidate list per seed.
//!
//! Per-strategy slot counts come from largest-remainder apportionment of
//! `quotas × max_candidates`. Slots are first filled in dedup priority order
//! (author style, linguistic, semantic, Dadaist) so a word found by several
//! strategies keeps the first provenance. Short pools are then refilled in the
//! same order until `max_candidates` is reached or every pool is exhausted.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dada::{cross_domain_candidates, cross_pos_candidates, Admission, DadaConfig};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::lexicon::ToneMode;
use crate::linguistic::{homophone_candidates, lexical_candidates_with, HomophoneMode};
use crate::rng::{sample_without_replacement, stream};
use crate::stores::Stores;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    SemanticSimilarity,
    LinguisticFeature,
    Dadaism,
    AuthorStyle,
}

impl Provenance {
    /// Declaration order; also the block order of [`expand`] output and the
    /// tie-break order of [`apportion`].
    pub const ALL: [Provenance; 4] = [
        Provenance::SemanticSimilarity,
        Provenance::LinguisticFeature,
        Provenance::Dadaism,
        Provenance::AuthorStyle,
    ];

    /// Which strategy keeps a word found by several, and the order in which
    /// short pools are refilled.
    pub const PRIORITY: [Provenance; 4] = [
        Provenance::AuthorStyle,
        Provenance::LinguisticFeature,
        Provenance::SemanticSimilarity,
        Provenance::Dadaism,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn key(self) -> &'static str {
        match self {
            Provenance::SemanticSimilarity => "semantic",
            Provenance::LinguisticFeature => "linguistic",
            Provenance::Dadaism => "dadaism",
            Provenance::AuthorStyle => "author",
        }
    }

    /// Same spelling as the serialized form.
    pub fn slug(self) -> &'static str {
        match self {
            Provenance::SemanticSimilarity => "semantic-similarity",
            Provenance::LinguisticFeature => "linguistic-feature",
            Provenance::Dadaism => "dadaism",
            Provenance::AuthorStyle => "author-style",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Provenance::SemanticSimilarity => "Semantic Similarity",
            Provenance::LinguisticFeature => "Linguistic Feature",
            Provenance::Dadaism => "Dadaism",
            Provenance::AuthorStyle => "Author Style",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "semantic" | "semantic-similarity" => Ok(Provenance::SemanticSimilarity),
            "linguistic" | "linguistic-feature" => Ok(Provenance::LinguisticFeature),
            "dada" | "dadaism" => Ok(Provenance::Dadaism),
            "author" | "author-style" => Ok(Provenance::AuthorStyle),
            other => Err(Error::Config(format!("unknown provenance `{other}`"))),
        }
    }
}

/// Target share of each strategy. Defaults to the reference distribution of
/// the proposed method.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Quotas {
    pub semantic: f64,
    pub linguistic: f64,
    pub dadaism: f64,
    pub author: f64,
}

impl Default for Quotas {
    fn default() -> Self {
        Quotas {
            semantic: 0.3516,
            linguistic: 0.2637,
            dadaism: 0.2286,
            author: 0.1561,
        }
    }
}

impl Quotas {
    /// Pure cosine-similarity expansion.
    pub const BASELINE: Quotas = Quotas {
        semantic: 1.0,
        linguistic: 0.0,
        dadaism: 0.0,
        author: 0.0,
    };

    pub fn get(&self, p: Provenance) -> f64 {
        match p {
            Provenance::SemanticSimilarity => self.semantic,
            Provenance::LinguisticFeature => self.linguistic,
            Provenance::Dadaism => self.dadaism,
            Provenance::AuthorStyle => self.author,
        }
    }

    pub fn set(&mut self, p: Provenance, value: f64) {
        match p {
            Provenance::SemanticSimilarity => self.semantic = value,
            Provenance::LinguisticFeature => self.linguistic = value,
            Provenance::Dadaism => self.dadaism = value,
            Provenance::AuthorStyle => self.author = value,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let values = Provenance::ALL.map(|p| self.get(p));
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::Config(
                "quotas must be finite and non-negative".into(),
            ));
        }
        let sum: f64 = values.iter().sum();
        if (sum - 1.0).abs() > 1e-6 {
            return Err(Error::Config(format!("quotas sum to {sum}, expected 1")));
        }
        Ok(())
    }
}

/// Candidate counts indexed by [`Provenance::index`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts(pub [usize; 4]);

impl Counts {
    pub fn get(&self, p: Provenance) -> usize {
        self.0[p.index()]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Largest-remainder apportionment of `n` slots. Equal remainders go to the
/// earlier provenance in [`Provenance::ALL`].
pub fn apportion(quotas: &Quotas, n: usize) -> Counts {
    let mut counts = [0usize; 4];
    let mut rems = [(0.0f64, 0usize); 4];
    for p in Provenance::ALL {
        let exact = quotas.get(p) * n as f64;
        let floor = exact.floor();
        counts[p.index()] = floor as usize;
        rems[p.index()] = (exact - floor, p.index());
    }
    let assigned: usize = counts.iter().sum();
    let mut left = n.saturating_sub(assigned);
    rems.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    for &(_, i) in rems.iter().cycle().take(4 * n.max(1)) {
        if left == 0 {
            break;
        }
        counts[i] += 1;
        left -= 1;
    }
    Counts(counts)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct LinguisticConfig {
    /// Minimum shared substring length, in characters.
    pub min_shared: usize,
    pub tone_mode: ToneMode,
    pub homophone_mode: HomophoneMode,
}

impl Default for LinguisticConfig {
    fn default() -> Self {
        LinguisticConfig {
            min_shared: 1,
            tone_mode: ToneMode::Insensitive,
            homophone_mode: HomophoneMode::AnySyllable,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AuthorConfig {
    /// Maximum hops through the artist graph.
    pub depth: usize,
}

impl Default for AuthorConfig {
    fn default() -> Self {
        AuthorConfig { depth: 2 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MixConfig {
    pub max_candidates: usize,
    pub quotas: Quotas,
    pub rng_seed: u64,
    pub linguistic: LinguisticConfig,
    pub author: AuthorConfig,
    pub dada: DadaConfig,
}

impl Default for MixConfig {
    fn default() -> Self {
        MixConfig {
            max_candidates: 7,
            quotas: Quotas::default(),
            rng_seed: 0,
            linguistic: LinguisticConfig::default(),
            author: AuthorConfig::default(),
            dada: DadaConfig::default(),
        }
    }
}

impl MixConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_candidates == 0 {
            return Err(Error::Config("max_candidates must be at least 1".into()));
        }
        if self.linguistic.min_shared == 0 {
            return Err(Error::Config(
                "linguistic min_shared must be at least 1".into(),
            ));
        }
        if self.author.depth == 0 {
            return Err(Error::Config("author depth must be at least 1".into()));
        }
        self.quotas.validate()?;
        self.dada.validate()
    }

    /// Same settings with every slot given to semantic similarity.
    pub fn baseline(&self) -> MixConfig {
        MixConfig {
            quotas: Quotas::BASELINE,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub word: String,
    pub provenance: Provenance,
    /// Cosine to the seed; `None` when either word has no usable vector.
    pub similarity: Option<f64>,
    pub detail: String,
}

#[derive(Debug, Clone)]
struct Draft {
    word: String,
    detail: String,
}

/// Candidate list for `seed`.
pub fn expand(seed: &str, cfg: &MixConfig, stores: &Stores) -> Result<Vec<Candidate>> {
    expand_with(seed, cfg, stores, Execution::default())
}

pub fn expand_with(
    seed: &str,
    cfg: &MixConfig,
    stores: &Stores,
    exec: Execution,
) -> Result<Vec<Candidate>> {
    cfg.validate()?;
    stores.filter.check_seed(seed, &stores.embeddings)?;

    let max = cfg.max_candidates;
    let targets = apportion(&cfg.quotas, max);
    let mut pools = Pools {
        seed,
        cfg,
        stores,
        exec,
        depth: 2 * max,
        lists: Default::default(),
        cursor: [0; 4],
    };

    let mut taken: HashSet<String> = HashSet::from([seed.to_string()]);
    let mut chosen: [Vec<Draft>; 4] = Default::default();
    for p in Provenance::PRIORITY {
        for _ in 0..targets.get(p) {
            match pools.next_free(p, &taken)? {
                Some(d) => {
                    taken.insert(d.word.clone());
                    chosen[p.index()].push(d);
                }
                None => break,
            }
        }
    }
    let mut deficit = max - chosen.iter().map(Vec::len).sum::<usize>();
    for p in Provenance::PRIORITY {
        while deficit > 0 {
            match pools.next_free(p, &taken)? {
                Some(d) => {
                    taken.insert(d.word.clone());
                    chosen[p.index()].push(d);
                    deficit -= 1;
                }
                None => break,
            }
        }
    }

    let mut out = Vec::with_capacity(max);
    for p in Provenance::ALL {
        let mut block: Vec<Candidate> = std::mem::take(&mut chosen[p.index()])
            .into_iter()
            .map(|d| Candidate {
                similarity: stores.embeddings.similarity(seed, &d.word),
                word: d.word,
                provenance: p,
                detail: d.detail,
            })
            .collect();
        block.sort_by(candidate_order);
        out.extend(block);
    }
    Ok(out)
}

/// Known similarity first (descending), unknown last, then code point.
pub(crate) fn candidate_order(a: &Candidate, b: &Candidate) -> std::cmp::Ordering {
    match (a.similarity, b.similarity) {
        (Some(x), Some(y)) => crate::embedding::rank_order(x, &a.word, y, &b.word),
        (Some(_), None) => std::cmp::Ordering::Less,
        (None, Some(_)) => std::cmp::Ordering::Greater,
        (None, None) => a.word.cmp(&b.word),
    }
}

struct Pools<'a> {
    seed: &'a str,
    cfg: &'a MixConfig,
    stores: &'a Stores,
    exec: Execution,
    depth: usize,
    lists: [Option<Vec<Draft>>; 4],
    cursor: [usize; 4],
}

impl Pools<'_> {
    fn next_free(&mut self, p: Provenance, taken: &HashSet<String>) -> Result<Option<Draft>> {
        let i = p.index();
        if self.lists[i].is_none() {
            self.lists[i] = Some(self.build(p)?);
        }
        let list = self.lists[i].as_ref().expect("pool built above");
        while self.cursor[i] < list.len() {
            let d = &list[self.cursor[i]];
            self.cursor[i] += 1;
            if !taken.contains(&d.word) {
                return Ok(Some(d.clone()));
            }
        }
        Ok(None)
    }

    fn admissible(&self, word: &str) -> bool {
        word != self.seed && self.stores.filter.admits_length(word) && self.stores.allowed(word)
    }

    fn build(&self, p: Provenance) -> Result<Vec<Draft>> {
        let (seed, stores, depth) = (self.seed, self.stores, self.depth);
        let drafts = match p {
            Provenance::SemanticSimilarity => {
                if !stores.embeddings.contains(seed) {
                    return Ok(Vec::new());
                }
                stores
                    .embeddings
                    .nearest_neighbors_where(seed, depth, self.exec, |w| self.admissible(w))?
                    .into_iter()
                    .map(|n| Draft {
                        detail: format!("cosine {:.4}", n.similarity),
                        word: n.word,
                    })
                    .collect()
            }
            Provenance::AuthorStyle => stores
                .graph
                .expand(seed, self.cfg.author.depth, usize::MAX)
                .into_iter()
                .filter(|h| self.admissible(&h.word))
                .take(depth)
                .map(|h| Draft {
                    detail: format!(
                        "{} ({} hop{})",
                        h.relation.as_str(),
                        h.hops,
                        if h.hops == 1 { "" } else { "s" }
                    ),
                    word: h.word,
                })
                .collect(),
            Provenance::LinguisticFeature => self.linguistic_pool()?,
            Provenance::Dadaism => self.dada_pool()?,
        };
        Ok(drafts)
    }

    fn linguistic_pool(&self) -> Result<Vec<Draft>> {
        let ling = &self.cfg.linguistic;
        let lexical: Vec<Draft> = lexical_candidates_with(
            self.stores.embeddings.words(),
            self.seed,
            ling.min_shared,
            usize::MAX,
            self.exec,
        )
        .into_iter()
        .filter(|m| self.admissible(&m.word))
        .take(self.depth)
        .map(|m| Draft {
            detail: format!("shares \"{}\"", m.shared),
            word: m.word,
        })
        .collect();
        let phonetic: Vec<Draft> = match homophone_candidates(
            &self.stores.phonetic,
            self.seed,
            ling.tone_mode,
            ling.homophone_mode,
            usize::MAX,
        ) {
            Ok(hits) => hits
                .into_iter()
                .filter(|h| self.admissible(&h.word))
                .take(self.depth)
                .map(|h| Draft {
                    detail: format!("sounds like {}", h.shared.join(" ")),
                    word: h.word,
                })
                .collect(),
            Err(Error::OutOfLexicon(_)) => Vec::new(),
            Err(e) => return Err(e),
        };
        Ok(interleave(vec![lexical, phonetic]))
    }

    fn dada_pool(&self) -> Result<Vec<Draft>> {
        let stores = self.stores;
        if !stores.embeddings.contains(self.seed) {
            return Ok(Vec::new());
        }
        let admission = Admission::new(
            &stores.embeddings,
            &stores.phonetic,
            self.seed,
            &self.cfg.dada,
        )?;
        let pool: Vec<String> = admission
            .pool(self.exec)
            .into_iter()
            .filter(|w| self.admissible(w))
            .collect();
        let label = |name: &str| format!("{}\u{1f}{name}", self.seed);
        let rng_seed = self.cfg.rng_seed;

        let domain = match cross_domain_candidates(
            &stores.tags,
            &pool,
            self.seed,
            self.depth,
            &mut stream(rng_seed, &label("dada-domain")),
        ) {
            Ok(v) => v
                .into_iter()
                .map(|t| Draft {
                    detail: format!("cross-domain: {}", t.tag),
                    word: t.word,
                })
                .collect(),
            Err(Error::MissingTag { .. }) => Vec::new(),
            Err(e) => return Err(e),
        };
        let pos = match cross_pos_candidates(
            &stores.tags,
            &pool,
            self.seed,
            self.depth,
            &mut stream(rng_seed, &label("dada-pos")),
        ) {
            Ok(v) => v
                .into_iter()
                .map(|t| Draft {
                    detail: format!("cross-pos: {}", t.tag),
                    word: t.word,
                })
                .collect(),
            Err(Error::MissingTag { .. }) => Vec::new(),
            Err(e) => return Err(e),
        };
        let random = sample_without_replacement(
            &pool,
            self.depth,
            &mut stream(rng_seed, &label("dada-random")),
        )
        .into_iter()
        .map(|word| Draft {
            word,
            detail: "random".into(),
        })
        .collect();
        Ok(interleave(vec![domain, pos, random]))
    }
}

/// Round-robin merge that keeps the first occurrence of each word.
fn interleave(lists: Vec<Vec<Draft>>) -> Vec<Draft> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let longest = lists.iter().map(Vec::len).max().unwrap_or(0);
    for i in 0..longest {
        for list in &lists {
            if let Some(d) = list.get(i) {
                if seen.insert(d.word.clone()) {
                    out.push(d.clone());
                }
            }
        }
    }
    out
}
