//! Painting domains, nearest-centroid word classification and the glyph
//! table used by the SVG renderer.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::embedding::EmbeddingStore;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PaintingDomain {
    Architecture,
    Mountain,
    River,
    Grassland,
    Road,
    Lake,
}

impl PaintingDomain {
    pub const ALL: [PaintingDomain; 6] = [
        PaintingDomain::Architecture,
        PaintingDomain::Mountain,
        PaintingDomain::River,
        PaintingDomain::Grassland,
        PaintingDomain::Road,
        PaintingDomain::Lake,
    ];

    /// Domain assigned to words without a usable vector.
    pub const FALLBACK: PaintingDomain = PaintingDomain::Road;

    pub fn name(self) -> &'static str {
        match self {
            PaintingDomain::Architecture => "architecture",
            PaintingDomain::Mountain => "mountain",
            PaintingDomain::River => "river",
            PaintingDomain::Grassland => "grassland",
            PaintingDomain::Road => "road",
            PaintingDomain::Lake => "lake",
        }
    }

    pub fn element(self) -> ElementGlyph {
        let (id, size) = match self {
            PaintingDomain::Architecture => ("pagoda", 40.0),
            PaintingDomain::Mountain => ("triangle-ridge", 48.0),
            PaintingDomain::River => ("wave", 44.0),
            PaintingDomain::Grassland => ("grass-tuft", 36.0),
            PaintingDomain::Road => ("dashed-path", 32.0),
            PaintingDomain::Lake => ("ellipse", 42.0),
        };
        ElementGlyph {
            id: id.into(),
            size,
        }
    }
}

impl fmt::Display for PaintingDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PaintingDomain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PaintingDomain::ALL
            .into_iter()
            .find(|d| d.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Config(format!("unknown painting domain `{s}`")))
    }
}

/// Schematic glyph drawn for a word. `size` is the default extent in canvas
/// units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementGlyph {
    pub id: String,
    pub size: f64,
}

pub fn painting_element(domain: PaintingDomain) -> ElementGlyph {
    domain.element()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DomainPrototype {
    pub domain: PaintingDomain,
    /// In-vocabulary prototype words, file order.
    pub words: Vec<String>,
    /// Unit-length mean of the prototype vectors.
    pub centroid: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DomainPrototypes {
    entries: Vec<DomainPrototype>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub domain: PaintingDomain,
    /// Cosine to the winning centroid; 0 for the fallback.
    pub confidence: f64,
}

impl DomainPrototypes {
    /// Reads `domain<TAB>word` lines. Blank lines and `#` comments are
    /// skipped.
    pub fn load(path: impl AsRef<Path>, store: &EmbeddingStore) -> Result<Self> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        let mut pairs = Vec::new();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| Error::io(path, e))?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((dom, word)) = line.split_once('\t') else {
                return Err(Error::format(path, i + 1, "expected `domain<TAB>word`"));
            };
            let domain = dom
                .parse::<PaintingDomain>()
                .map_err(|e| Error::format(path, i + 1, e.to_string()))?;
            pairs.push((domain, word.trim().to_string()));
        }
        Self::from_pairs(pairs, store)
    }

    pub fn from_pairs<I>(pairs: I, store: &EmbeddingStore) -> Result<Self>
    where
        I: IntoIterator<Item = (PaintingDomain, String)>,
    {
        let mut words: [Vec<String>; 6] = Default::default();
        for (domain, word) in pairs {
            if store.contains(&word) {
                words[domain as usize].push(word);
            } else {
                log::warn!("prototype `{word}` for {domain} is not in the vocabulary, skipped");
            }
        }
        let mut entries = Vec::with_capacity(6);
        for domain in PaintingDomain::ALL {
            let ws = std::mem::take(&mut words[domain as usize]);
            if ws.is_empty() {
                return Err(Error::Config(format!(
                    "painting domain {domain} has no in-vocabulary prototype"
                )));
            }
            let mut mean = vec![0.0f64; store.dim()];
            for w in &ws {
                let v = store.vector(w).expect("checked membership");
                for (m, &x) in mean.iter_mut().zip(v) {
                    *m += f64::from(x);
                }
            }
            let len = mean.iter().map(|x| x * x).sum::<f64>().sqrt();
            if len == 0.0 {
                return Err(Error::Config(format!(
                    "prototypes for {domain} average to the zero vector"
                )));
            }
            mean.iter_mut().for_each(|x| *x /= len);
            entries.push(DomainPrototype {
                domain,
                words: ws,
                centroid: mean,
            });
        }
        Ok(DomainPrototypes { entries })
    }

    pub fn get(&self, domain: PaintingDomain) -> &DomainPrototype {
        &self.entries[domain as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = &DomainPrototype> {
        self.entries.iter()
    }

    /// Nearest centroid by cosine. Ties go to the earlier domain.
    pub fn classify(&self, word: &str, store: &EmbeddingStore) -> Classification {
        let fallback = Classification {
            domain: PaintingDomain::FALLBACK,
            confidence: 0.0,
        };
        let Some(idx) = store.index_of(word) else {
            return fallback;
        };
        let norm = store.norm_at(idx);
        if norm == 0.0 {
            return fallback;
        }
        let v = store.vector_at(idx);
        let mut best = (PaintingDomain::ALL[0], f64::NEG_INFINITY);
        for e in &self.entries {
            let dot: f64 = e
                .centroid
                .iter()
                .zip(v)
                .map(|(c, &x)| c * f64::from(x))
                .sum();
            let cos = dot / norm;
            if cos > best.1 {
                best = (e.domain, cos);
            }
        }
        Classification {
            domain: best.0,
            confidence: best.1,
        }
    }
}

pub fn classify_domain(
    word: &str,
    prototypes: &DomainPrototypes,
    store: &EmbeddingStore,
) -> Classification {
    prototypes.classify(word, store)
}
