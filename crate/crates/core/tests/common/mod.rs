//! Test-only oracles and store builders. Shared with the CLI acceptance
//! suite through a `#[path]` include, so it only depends on the public API.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, HashMap, HashSet};

use mindmap_core::{
    DomainPrototypes, EmbeddingStore, KnowledgeGraph, PaintingDomain, PhoneticLexicon, Stores,
    Syllable, TagLexicon, VocabularyFilter,
};
use rand::Rng;

pub fn fixture_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../assets/fixture")
}

/// Cosine as a plain f64 formula, independent of the store's cached norms.
pub fn oracle_cosine(a: &[f32], b: &[f32]) -> Option<f64> {
    let mut dot = 0.0f64;
    let mut na = 0.0f64;
    let mut nb = 0.0f64;
    for (&x, &y) in a.iter().zip(b) {
        dot += f64::from(x) * f64::from(y);
        na += f64::from(x) * f64::from(x);
        nb += f64::from(y) * f64::from(y);
    }
    if na == 0.0 || nb == 0.0 {
        None
    } else {
        Some(dot / (na.sqrt() * nb.sqrt()))
    }
}

/// Full scan and full sort: similarity descending, then code point.
pub fn oracle_knn(
    entries: &[(String, Vec<f32>)],
    query: &str,
    k: usize,
    excluded: &HashSet<String>,
) -> Vec<(String, f64)> {
    let q = &entries
        .iter()
        .find(|(w, _)| w == query)
        .expect("query present")
        .1;
    let mut all: Vec<(String, f64)> = entries
        .iter()
        .filter(|(w, _)| w != query && !excluded.contains(w))
        .filter_map(|(w, v)| oracle_cosine(q, v).map(|s| (w.clone(), s)))
        .collect();
    all.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(&b.0)));
    all.truncate(k);
    all
}

/// Independent largest-remainder: floors, then one extra slot to each of
/// the largest remainders, equal remainders to the earlier class.
pub fn oracle_apportion(q: [f64; 4], n: usize) -> [usize; 4] {
    let exact: Vec<f64> = q.iter().map(|x| x * n as f64).collect();
    let mut out: Vec<usize> = exact.iter().map(|x| x.floor() as usize).collect();
    let left = n - out.iter().sum::<usize>();
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by(|&a, &b| {
        let (ra, rb) = (exact[a] - exact[a].floor(), exact[b] - exact[b].floor());
        rb.partial_cmp(&ra).unwrap().then(a.cmp(&b))
    });
    for &i in order.iter().take(left) {
        out[i] += 1;
    }
    [out[0], out[1], out[2], out[3]]
}

/// Quadratic table of common-suffix lengths; returns the maximal substring
/// that starts earliest in `a`, then earliest in `b`.
pub fn oracle_lcs(a: &str, b: &str) -> (String, usize) {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut table = vec![vec![0usize; b.len() + 1]; a.len() + 1];
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            if a[i - 1] == b[j - 1] {
                table[i][j] = table[i - 1][j - 1] + 1;
            }
        }
    }
    let mut best: Option<(usize, usize, usize)> = None; // (len, start_a, start_b)
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            let len = table[i][j];
            if len == 0 {
                continue;
            }
            let cand = (len, i - len, j - len);
            best = match best {
                None => Some(cand),
                Some(cur) => {
                    let better =
                        cand.0 > cur.0 || (cand.0 == cur.0 && (cand.1, cand.2) < (cur.1, cur.2));
                    Some(if better { cand } else { cur })
                }
            };
        }
    }
    match best {
        None => (String::new(), 0),
        Some((len, sa, _)) => (a[sa..sa + len].iter().collect(), len),
    }
}

const MIXED_ALPHABET: &[char] = &['a', 'b', 'c', 'x', '医', '院', '住', '监', '狱', '天'];

/// Short string over a small mixed ASCII/CJK alphabet so matches are common.
pub fn random_mixed_string<R: Rng>(rng: &mut R, max_len: usize) -> String {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| MIXED_ALPHABET[rng.random_range(0..MIXED_ALPHABET.len())])
        .collect()
}

/// Random store with deliberate duplicate vectors (exact similarity ties) and
/// the occasional zero row.
pub fn random_entries<R: Rng>(rng: &mut R, words: usize, dim: usize) -> Vec<(String, Vec<f32>)> {
    let mut out: Vec<(String, Vec<f32>)> = Vec::with_capacity(words);
    for i in 0..words {
        let word = format!("w{:04}", (i * 7919) % 10_000);
        let v = if i > 0 && rng.random_bool(0.1) {
            out[rng.random_range(0..i)].1.clone()
        } else if rng.random_bool(0.01) {
            vec![0.0; dim]
        } else {
            (0..dim).map(|_| rng.random_range(-1.0f32..1.0)).collect()
        };
        out.push((word, v));
    }
    out
}

pub fn planar(angles: &[(&str, f64)]) -> Vec<(String, Vec<f32>)> {
    angles
        .iter()
        .map(|(w, deg)| {
            let r = deg.to_radians();
            (w.to_string(), vec![r.cos() as f32, r.sin() as f32])
        })
        .collect()
}

pub fn store(dim: usize, entries: &[(String, Vec<f32>)]) -> EmbeddingStore {
    EmbeddingStore::from_entries(dim, entries.iter().cloned(), &VocabularyFilter::default())
        .unwrap()
}

/// One prototype word per domain, taken from `words` in order.
pub fn prototypes_from(words: &[&str], store: &EmbeddingStore) -> DomainPrototypes {
    DomainPrototypes::from_pairs(
        PaintingDomain::ALL
            .iter()
            .zip(words)
            .map(|(d, w)| (*d, w.to_string())),
        store,
    )
    .unwrap()
}

fn syl(s: &str) -> Syllable {
    Syllable::parse(s).unwrap()
}

/// Word with disjoint pool membership for each strategy, at least `per`
/// eligible words each:
///
/// * `semantic`: vectors almost parallel to the seed, fresh characters and
///   syllables;
/// * `linguistic`: share the seed's first character, medium similarity;
/// * `homophone`: share a syllable only, medium similarity;
/// * `author`: hyponyms of the seed in the graph, medium similarity;
/// * `dada`: near-orthogonal, disjoint characters and syllables.
pub struct AmpleCorpus {
    pub seed: String,
    pub stores: Stores,
    pub groups: BTreeMap<&'static str, Vec<String>>,
}

pub fn ample_corpus(per: usize) -> AmpleCorpus {
    let dim = 8;
    let seed = "甲乙".to_string();
    let mut entries: Vec<(String, Vec<f32>)> = Vec::new();
    let mut phon: Vec<(String, Vec<Syllable>)> =
        vec![(seed.clone(), vec![syl("jia3"), syl("yi3")])];
    let mut groups: BTreeMap<&'static str, Vec<String>> = BTreeMap::new();
    let mut seed_v = vec![0.0f32; dim];
    seed_v[0] = 1.0;
    entries.push((seed.clone(), seed_v));

    // Fresh characters from a block the seed does not use.
    let mut next_char = 0x5000u32;
    let mut fresh = || {
        next_char += 1;
        char::from_u32(next_char).unwrap()
    };
    let mut fresh_syllable = 0usize;
    let vector = |main: f32, axis: usize, i: usize| {
        let mut v = vec![0.0f32; dim];
        v[0] = main;
        v[axis] = 1.0 + i as f32 * 0.01;
        v
    };
    for (group, main, axis) in [
        ("semantic", 20.0f32, 1usize),
        ("linguistic", 1.0, 2),
        ("homophone", 1.0, 3),
        ("author", 1.0, 4),
        ("dada", 0.0, 5),
    ] {
        for i in 0..per {
            let word: String = match group {
                "linguistic" => format!("甲{}", fresh()),
                _ => format!("{}{}", fresh(), fresh()),
            };
            let syllables = if group == "homophone" {
                vec![syl("yi4"), syl(&format!("zz{fresh_syllable}1"))]
            } else {
                vec![
                    syl(&format!("zz{fresh_syllable}1")),
                    syl(&format!("zz{}2", fresh_syllable + 1)),
                ]
            };
            fresh_syllable += 2;
            phon.push((word.clone(), syllables));
            entries.push((word.clone(), vector(main, axis + (i % 3), i)));
            groups.entry(group).or_default().push(word);
        }
    }
    let embeddings =
        EmbeddingStore::from_entries(dim, entries, &VocabularyFilter::default()).unwrap();
    let mut stores = Stores::new(VocabularyFilter::default(), embeddings);
    stores.phonetic = PhoneticLexicon::from_entries(phon);
    let edges: Vec<(String, String)> = groups["author"]
        .iter()
        .map(|w| (seed.clone(), w.clone()))
        .collect();
    stores.graph = KnowledgeGraph::from_edges(edges, Vec::<String>::new()).unwrap();
    let mut pos = HashMap::new();
    let mut domain = HashMap::new();
    pos.insert(seed.clone(), "noun".to_string());
    domain.insert(seed.clone(), "medical".to_string());
    for (i, w) in groups["dada"].iter().enumerate() {
        pos.insert(
            w.clone(),
            if i % 2 == 0 { "verb" } else { "noun" }.to_string(),
        );
        domain.insert(
            w.clone(),
            if i % 3 == 0 { "medical" } else { "nature" }.to_string(),
        );
    }
    stores.tags = TagLexicon::from_maps(pos, domain);
    let protos: Vec<&str> = groups["semantic"]
        .iter()
        .take(6)
        .map(String::as_str)
        .collect();
    stores.prototypes = Some(prototypes_from(&protos, &stores.embeddings));
    AmpleCorpus {
        seed,
        stores,
        groups,
    }
}
