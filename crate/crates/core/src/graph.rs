//! Hypernym/hyponym forest encoding an artist's word associations.
//!
//! File format: UTF-8 TSV with one `parent<TAB>child` edge per line. A line
//! holding a single word declares an edgeless vertex. Blank lines and lines
//! starting with `#` are skipped.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// The returned word sits below the seed.
    Hyponym,
    /// The returned word is an ancestor of the seed.
    Hypernym,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Hyponym => "hyponym",
            Relation::Hypernym => "hypernym",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphHit {
    pub word: String,
    pub relation: Relation,
    pub hops: usize,
}

#[derive(Debug, Clone, Default)]
pub struct KnowledgeGraph {
    words: Vec<String>,
    index: HashMap<String, usize>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl KnowledgeGraph {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        let mut edges = Vec::new();
        let mut vertices = Vec::new();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| Error::io(path, e))?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').map(str::trim).collect();
            match cols.as_slice() {
                [v] => vertices.push(v.to_string()),
                [p, c] if !p.is_empty() && !c.is_empty() => {
                    edges.push((p.to_string(), c.to_string()))
                }
                _ => return Err(Error::format(path, i + 1, "expected `parent<TAB>child`")),
            }
        }
        Self::from_edges(edges, vertices)
    }

    /// Builds and validates a forest. Repeating an identical edge is
    /// harmless; a second, different parent is a structure error.
    pub fn from_edges<E, V>(edges: E, isolated: V) -> Result<Self>
    where
        E: IntoIterator<Item = (String, String)>,
        V: IntoIterator<Item = String>,
    {
        let mut g = KnowledgeGraph::default();
        for (p, c) in edges {
            let pi = g.intern(p);
            let ci = g.intern(c);
            match g.parent[ci] {
                Some(existing) if existing == pi => continue,
                Some(existing) => {
                    return Err(Error::Structure(format!(
                        "`{}` has two parents (`{}` and `{}`)",
                        g.words[ci], g.words[existing], g.words[pi]
                    )))
                }
                None => {}
            }
            g.parent[ci] = Some(pi);
            g.children[pi].push(ci);
        }
        for v in isolated {
            g.intern(v);
        }
        g.check_acyclic()?;
        for kids in &mut g.children {
            kids.sort_by(|&a, &b| g.words[a].cmp(&g.words[b]));
        }
        Ok(g)
    }

    fn intern(&mut self, word: String) -> usize {
        if let Some(&i) = self.index.get(&word) {
            return i;
        }
        let i = self.words.len();
        self.index.insert(word.clone(), i);
        self.words.push(word);
        self.parent.push(None);
        self.children.push(Vec::new());
        i
    }

    fn check_acyclic(&self) -> Result<()> {
        // 0 = unvisited, 1 = on the current walk, 2 = known to reach a root
        let mut state = vec![0u8; self.words.len()];
        let mut walk = Vec::new();
        for start in 0..self.words.len() {
            walk.clear();
            let mut v = Some(start);
            while let Some(cur) = v {
                match state[cur] {
                    2 => break,
                    1 => {
                        return Err(Error::Structure(format!(
                            "cycle through `{}`",
                            self.words[cur]
                        )))
                    }
                    _ => {}
                }
                state[cur] = 1;
                walk.push(cur);
                v = self.parent[cur];
            }
            for &w in &walk {
                state[w] = 2;
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.words.len()
    }

    pub fn edge_count(&self) -> usize {
        self.parent.iter().filter(|p| p.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    pub fn vertices(&self) -> &[String] {
        &self.words
    }

    pub fn roots(&self) -> impl Iterator<Item = &str> {
        self.words
            .iter()
            .zip(&self.parent)
            .filter(|(_, p)| p.is_none())
            .map(|(w, _)| w.as_str())
    }

    pub fn parent(&self, word: &str) -> Option<&str> {
        let i = *self.index.get(word)?;
        self.parent[i].map(|p| self.words[p].as_str())
    }

    pub fn children(&self, word: &str) -> impl Iterator<Item = &str> {
        self.index
            .get(word)
            .into_iter()
            .flat_map(move |&i| self.children[i].iter().map(|&c| self.words[c].as_str()))
    }

    /// Hyponyms and hypernyms of `seed` within `depth` hops, nearest first,
    /// hyponyms before hypernyms at equal distance, then by code point.
    pub fn expand(&self, seed: &str, depth: usize, k: usize) -> Vec<GraphHit> {
        let Some(&s) = self.index.get(seed) else {
            return Vec::new();
        };
        let mut hits = Vec::new();
        let mut level = vec![s];
        for hops in 1..=depth {
            let next: Vec<usize> = level
                .iter()
                .flat_map(|&v| self.children[v].iter().copied())
                .collect();
            if next.is_empty() {
                break;
            }
            hits.extend(next.iter().map(|&c| GraphHit {
                word: self.words[c].clone(),
                relation: Relation::Hyponym,
                hops,
            }));
            level = next;
        }
        let mut up = self.parent[s];
        let mut hops = 1;
        while let Some(p) = up {
            if hops > depth {
                break;
            }
            hits.push(GraphHit {
                word: self.words[p].clone(),
                relation: Relation::Hypernym,
                hops,
            });
            up = self.parent[p];
            hops += 1;
        }
        hits.sort_by(|a, b| {
            a.hops
                .cmp(&b.hops)
                .then(a.relation.cmp(&b.relation))
                .then_with(|| a.word.cmp(&b.word))
        });
        hits.truncate(k);
        hits
    }

    /// True when `word` is a descendant or an ancestor of `seed`.
    pub fn is_linked(&self, seed: &str, word: &str) -> bool {
        let (Some(&s), Some(&w)) = (self.index.get(seed), self.index.get(word)) else {
            return false;
        };
        s != w && (self.is_ancestor(s, w) || self.is_ancestor(w, s))
    }

    fn is_ancestor(&self, anc: usize, mut v: usize) -> bool {
        while let Some(p) = self.parent[v] {
            if p == anc {
                return true;
            }
            v = p;
        }
        false
    }
}
