//! Deterministic synthetic corpus for demos, tests and benchmarks.
//!
//! Words are random strings of CJK ideographs grouped into topics. Each
//! character carries one fixed pinyin-like syllable, each topic has two
//! "radical" characters that a share of its words contain, and vectors are a
//! topic direction plus isotropic noise, so same-topic words are close in
//! cosine while unrelated topics are nearly orthogonal. A handful of real
//! words (医院, 住院, 监狱, 野天鹅, 疯狂, 想象 …) are planted with their usual
//! readings so the classic examples can be reproduced.
//!
//! The same [`FixtureSpec`] always produces byte-identical files.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::embedding::{EmbeddingStore, VocabularyFilter};
use crate::error::{Error, Result};
use crate::graph::KnowledgeGraph;
use crate::lexicon::{PhoneticLexicon, Syllable, TagLexicon};
use crate::rng::{stream, StreamRng};
use crate::scene::{DomainPrototypes, PaintingDomain};
use crate::stores::Stores;

pub const TOPICS: [&str; 20] = [
    "medical",
    "city",
    "nature",
    "emotions",
    "architecture",
    "ocean",
    "plants",
    "transport",
    "food",
    "occupations",
    "clothes",
    "ai",
    "body",
    "stories",
    "sports",
    "religion",
    "music",
    "weather",
    "animals",
    "tools",
];

/// Topic whose words serve as prototypes for each painting domain.
const PROTOTYPE_TOPICS: [(PaintingDomain, &str); 6] = [
    (PaintingDomain::Architecture, "architecture"),
    (PaintingDomain::Mountain, "nature"),
    (PaintingDomain::River, "ocean"),
    (PaintingDomain::Grassland, "plants"),
    (PaintingDomain::Road, "transport"),
    (PaintingDomain::Lake, "emotions"),
];

const PINYIN: &[&str] = &[
    "a", "ai", "an", "ang", "ba", "bai", "ban", "bao", "bei", "ben", "bi", "bian", "bo", "bu",
    "ca", "cai", "can", "cao", "ce", "chang", "che", "chen", "cheng", "chi", "chu", "chuan", "ci",
    "cong", "cu", "da", "dai", "dan", "dao", "de", "deng", "di", "dian", "diao", "ding", "dong",
    "du", "duan", "dui", "e", "er", "fa", "fan", "fang", "fei", "fen", "fu", "gai", "gan", "gang",
    "gao", "ge", "gen", "gu", "gua", "guan", "guang", "gui", "guo", "ha", "hai", "han", "hao",
    "he", "hei", "hong", "hou", "hu", "hua", "huai", "huan", "hui", "huo", "ji", "jia", "jie",
    "jin", "jing", "jiu", "ju", "juan", "jue", "kai", "kan", "kao", "ke", "kong", "kou", "ku",
    "kuai", "la", "lai", "lan", "lang", "lao", "le", "lei", "li", "lian", "liang", "lin", "ling",
    "liu", "long", "lou", "lu", "luo", "ma", "mai", "man", "mao", "mei", "men", "mi", "mian",
    "min", "ming", "mo", "mu", "na", "nan", "nao", "ni", "nian", "niao", "nong", "nu", "pa", "pai",
    "pan", "pao", "pei", "peng", "pi", "pian", "ping", "po", "pu", "qi", "qian", "qiang", "qiao",
    "qin", "qing", "qiu", "qu", "quan", "que", "ran", "rang", "re", "ri", "rong", "ru", "sa",
    "san", "sang", "se", "sha", "shan", "shang", "shao", "she", "shen", "shi", "shou", "shu",
    "shuang", "shui", "si", "song", "su", "sui", "sun", "ta", "tai", "tan", "tang", "tao", "ti",
    "tiao", "ting", "tong", "tou", "tu", "tuan", "wa", "wai", "wan", "wang", "wei", "wen", "wo",
    "wu", "xi", "xia", "xian", "xiao", "xie", "xin", "xing", "xiong", "xu", "xuan", "xue", "ya",
    "yan", "yang", "yao", "yi", "yin", "ying", "yong", "you", "yu", "yue", "yun", "za", "zai",
    "zan", "zang", "zao", "ze", "zhan", "zhang", "zhao", "zhe", "zhen", "zheng", "zhi", "zhong",
    "zhou", "zhu", "zhuan", "zi", "zong", "zou", "zu", "zui", "zuo",
];

/// Planted words: (word, topic, reading).
const PLANTED: &[(&str, &str, &str)] = &[
    ("医院", "medical", "yi1 yuan4"),
    ("住院", "medical", "zhu4 yuan4"),
    ("医生", "medical", "yi1 sheng1"),
    ("病人", "medical", "bing4 ren2"),
    ("监狱", "city", "jian1 yu4"),
    ("公园", "city", "gong1 yuan2"),
    ("野天鹅", "nature", "ye3 tian1 e2"),
    ("疯狂", "emotions", "feng1 kuang2"),
    ("想象", "emotions", "xiang3 xiang4"),
];

/// Artist associations always present in the fixture graph.
const PLANTED_EDGES: &[(&str, &str)] = &[("医院", "病人"), ("医院", "监狱")];

#[derive(Debug, Clone, PartialEq)]
pub struct FixtureSpec {
    pub rng_seed: u64,
    pub topics: usize,
    pub words_per_topic: usize,
    pub dim: usize,
    /// Distinct ideographs in the random inventory.
    pub characters: usize,
    pub graph_roots: usize,
    pub seeds: usize,
    /// Words longer than eight characters added to the embedding file only.
    pub overlong_words: usize,
}

impl Default for FixtureSpec {
    /// Desk-scale corpus: 2,000 words, ~300-vertex graph, 120 seeds.
    fn default() -> Self {
        FixtureSpec {
            rng_seed: 20201,
            topics: 20,
            words_per_topic: 100,
            dim: 48,
            characters: 1500,
            graph_roots: 40,
            seeds: 120,
            overlong_words: 5,
        }
    }
}

impl FixtureSpec {
    /// Small corpus for quick randomized tests.
    pub fn small(rng_seed: u64) -> Self {
        FixtureSpec {
            rng_seed,
            topics: 8,
            words_per_topic: 40,
            dim: 16,
            characters: 300,
            graph_roots: 8,
            seeds: 20,
            overlong_words: 2,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FixtureCorpus {
    pub dim: usize,
    /// Includes the overlong words, which loading filters out.
    pub embeddings: Vec<(String, Vec<f32>)>,
    pub phonetic: Vec<(String, Vec<Syllable>)>,
    pub pos: Vec<(String, String)>,
    pub domains: Vec<(String, String)>,
    pub edges: Vec<(String, String)>,
    pub prototypes: Vec<(PaintingDomain, String)>,
    pub seeds: Vec<String>,
}

fn gaussian_unit(rng: &mut StreamRng, dim: usize) -> Vec<f64> {
    let v: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.into_iter().map(|x| x / n).collect()
}

/// Rounds to the six decimals written to disk so in-memory and loaded
/// stores are identical.
fn six_decimals(x: f64) -> f32 {
    format!("{x:.6}").parse().expect("formatted float parses")
}

impl FixtureCorpus {
    pub fn generate(spec: &FixtureSpec) -> Result<Self> {
        let topics = spec.topics.clamp(8, TOPICS.len());
        if spec.words_per_topic < 10 || spec.dim < 2 {
            return Err(Error::Config("fixture too small".into()));
        }
        let topic_names = &TOPICS[..topics];
        let mut rng = stream(spec.rng_seed, "fixture");

        // Character inventory with fixed readings.
        let planted_chars: HashSet<char> = PLANTED.iter().flat_map(|(w, _, _)| w.chars()).collect();
        let mut reading: HashMap<char, Syllable> = HashMap::new();
        for (w, _, r) in PLANTED {
            for (c, s) in w.chars().zip(r.split_whitespace()) {
                reading.insert(c, Syllable::parse(s).expect("planted readings are valid"));
            }
        }
        let mut inventory = Vec::with_capacity(spec.characters);
        let mut used = HashSet::new();
        while inventory.len() < spec.characters {
            let c = char::from_u32(rng.random_range(0x4E00u32..=0x9FA5)).expect("CJK block");
            if planted_chars.contains(&c) || !used.insert(c) {
                continue;
            }
            let base = PINYIN.choose(&mut rng).expect("non-empty");
            reading.insert(
                c,
                Syllable {
                    base: base.to_string(),
                    tone: rng.random_range(1..=4),
                },
            );
            inventory.push(c);
        }
        let radicals: Vec<[char; 2]> = (0..topics)
            .map(|t| [inventory[2 * t], inventory[2 * t + 1]])
            .collect();
        let free_chars = &inventory[2 * topics..];

        let centroids: Vec<Vec<f64>> = (0..topics)
            .map(|_| gaussian_unit(&mut rng, spec.dim))
            .collect();
        let vector_for = |rng: &mut StreamRng, topic: usize| -> Vec<f32> {
            let noise = gaussian_unit(rng, spec.dim);
            centroids[topic]
                .iter()
                .zip(&noise)
                .map(|(c, n)| six_decimals(0.8 * c + 0.6 * n))
                .collect()
        };

        let mut taken: HashSet<String> = PLANTED.iter().map(|(w, _, _)| w.to_string()).collect();
        let mut random_word = |rng: &mut StreamRng, topic: Option<usize>, len: usize| -> String {
            loop {
                let mut chars: Vec<char> = (0..len)
                    .map(|_| *free_chars.choose(rng).expect("non-empty"))
                    .collect();
                if let Some(t) = topic {
                    if rng.random_bool(0.3) {
                        let pos = rng.random_range(0..len);
                        chars[pos] = radicals[t][rng.random_range(0..2)];
                    }
                }
                let w: String = chars.into_iter().collect();
                if taken.insert(w.clone()) {
                    return w;
                }
            }
        };
        let word_len = |rng: &mut StreamRng| match rng.random_range(0..10) {
            0..=5 => 2,
            6..=8 => 3,
            _ => 4,
        };

        let mut topic_of: HashMap<String, usize> = HashMap::new();
        let mut by_topic: Vec<Vec<String>> = vec![Vec::new(); topics];
        let mut embeddings = Vec::new();
        for (t, name) in topic_names.iter().enumerate() {
            let planted: Vec<&str> = PLANTED
                .iter()
                .filter(|(_, topic, _)| topic == name)
                .map(|(w, _, _)| *w)
                .collect();
            let mut words: Vec<String> = planted.iter().map(|w| w.to_string()).collect();
            while words.len() < spec.words_per_topic {
                let len = word_len(&mut rng);
                words.push(random_word(&mut rng, Some(t), len));
            }
            for w in words {
                embeddings.push((w.clone(), vector_for(&mut rng, t)));
                topic_of.insert(w.clone(), t);
                by_topic[t].push(w);
            }
        }
        for _ in 0..spec.overlong_words {
            let len = rng.random_range(9..=10);
            let w = random_word(&mut rng, None, len);
            let t = rng.random_range(0..topics);
            embeddings.push((w, vector_for(&mut rng, t)));
        }

        // Artist graph: planted edges plus random trees that mostly jump topics.
        let planted_set: HashSet<&str> = PLANTED.iter().map(|(w, _, _)| *w).collect();
        let mut in_graph: HashSet<String> = HashSet::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        let mut graph_only: Vec<String> = Vec::new();
        for (p, c) in PLANTED_EDGES {
            in_graph.insert(p.to_string());
            in_graph.insert(c.to_string());
            edges.push((p.to_string(), c.to_string()));
        }
        let mut pick_vertex =
            |rng: &mut StreamRng, near: Option<usize>, in_graph: &mut HashSet<String>| -> String {
                if rng.random_bool(0.1) {
                    let len = word_len(rng);
                    let w = random_word(rng, near, len);
                    graph_only.push(w.clone());
                    in_graph.insert(w.clone());
                    return w;
                }
                loop {
                    let t = match near {
                        Some(t) if rng.random_bool(0.25) => t,
                        _ => rng.random_range(0..topics),
                    };
                    let w = by_topic[t].choose(rng).expect("non-empty topic").clone();
                    if !planted_set.contains(w.as_str()) && in_graph.insert(w.clone()) {
                        return w;
                    }
                }
            };
        let mut frontier: Vec<(String, usize)> = Vec::new();
        for _ in 0..spec.graph_roots {
            let root = pick_vertex(&mut rng, None, &mut in_graph);
            frontier.push((root, 0));
        }
        frontier.push(("想象".to_string(), 0));
        in_graph.insert("想象".to_string());
        // The planted hospital tree gets a little more depth.
        frontier.push(("监狱".to_string(), 1));
        frontier.push(("病人".to_string(), 1));
        let mut i = 0;
        while i < frontier.len() {
            let (parent, level) = frontier[i].clone();
            i += 1;
            let kids = match level {
                0 => rng.random_range(2..=4),
                1 if rng.random_bool(0.6) => rng.random_range(1..=3),
                2 if rng.random_bool(0.3) => rng.random_range(1..=2),
                _ => 0,
            };
            let near = topic_of.get(&parent).copied();
            for _ in 0..kids {
                let child = pick_vertex(&mut rng, near, &mut in_graph);
                edges.push((parent.clone(), child.clone()));
                frontier.push((child, level + 1));
            }
        }

        // Lexicons. Planted words, graph vertices and overlong words are
        // always covered; the rest at 95% / 92% / 90%.
        let mut always: HashSet<String> = in_graph.clone();
        always.extend(planted_set.iter().map(|w| w.to_string()));
        let reading_of =
            |w: &str| -> Vec<Syllable> { w.chars().map(|c| reading[&c].clone()).collect() };
        let all_words: Vec<String> = embeddings
            .iter()
            .map(|(w, _)| w.clone())
            .chain(graph_only.iter().cloned())
            .collect();
        let mut phonetic = Vec::new();
        let mut pos = Vec::new();
        let mut domains = Vec::new();
        for w in &all_words {
            let keep = always.contains(w);
            if keep || rng.random_bool(0.95) {
                phonetic.push((w.clone(), reading_of(w)));
            }
            if keep || rng.random_bool(0.92) {
                let tag = match rng.random_range(0..20) {
                    0..=11 => "noun",
                    12..=16 => "verb",
                    _ => "adjective",
                };
                pos.push((w.clone(), tag.to_string()));
            }
            if let Some(&t) = topic_of.get(w) {
                if keep || rng.random_bool(0.9) {
                    domains.push((w.clone(), topic_names[t].to_string()));
                }
            }
        }
        // Reference parts of speech for the planted words.
        for (w, tag) in [
            ("医院", "noun"),
            ("住院", "verb"),
            ("疯狂", "adjective"),
            ("野天鹅", "noun"),
        ] {
            if let Some(e) = pos.iter_mut().find(|(x, _)| x == w) {
                e.1 = tag.to_string();
            }
        }

        let mut prototypes = Vec::new();
        for (domain, topic) in PROTOTYPE_TOPICS {
            let Some(t) = topic_names.iter().position(|n| *n == topic) else {
                continue;
            };
            let pool: Vec<&String> = by_topic[t]
                .iter()
                .filter(|w| !planted_set.contains(w.as_str()))
                .collect();
            for w in pool.choose_multiple(&mut rng, 3) {
                prototypes.push((domain, (*w).clone()));
            }
        }

        let mut seeds = vec!["医院".to_string()];
        let mut candidates: Vec<String> = in_graph
            .iter()
            .filter(|w| topic_of.contains_key(*w) && w.as_str() != "医院")
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        candidates.sort();
        seeds.extend(
            candidates
                .choose_multiple(&mut rng, spec.seeds.saturating_sub(1))
                .cloned(),
        );

        Ok(FixtureCorpus {
            dim: spec.dim,
            embeddings,
            phonetic,
            pos,
            domains,
            edges,
            prototypes,
            seeds,
        })
    }

    /// The same stores loading the written files would produce.
    pub fn stores(&self) -> Result<Stores> {
        let filter = VocabularyFilter::default();
        let embeddings =
            EmbeddingStore::from_entries(self.dim, self.embeddings.iter().cloned(), &filter)?;
        let mut stores = Stores::new(filter, embeddings);
        stores.phonetic = PhoneticLexicon::from_entries(self.phonetic.iter().cloned());
        stores.tags = TagLexicon::from_maps(
            self.pos.iter().cloned().collect(),
            self.domains.iter().cloned().collect(),
        );
        stores.graph = KnowledgeGraph::from_edges(self.edges.iter().cloned(), Vec::new())?;
        stores.prototypes = Some(DomainPrototypes::from_pairs(
            self.prototypes.iter().cloned(),
            &stores.embeddings,
        )?);
        Ok(stores)
    }

    /// Writes `embeddings.txt`, `phonetic.tsv`, `pos.tsv`, `domains.tsv`,
    /// `graph.tsv`, `prototypes.tsv` and `seeds.txt` into `dir`.
    pub fn write(&self, dir: impl AsRef<Path>) -> Result<()> {
        let dir = dir.as_ref();
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let put = |name: &str, text: String| {
            let p = dir.join(name);
            fs::write(&p, text).map_err(|e| Error::io(p, e))
        };

        let mut text = format!("{} {}\n", self.embeddings.len(), self.dim);
        for (w, v) in &self.embeddings {
            text.push_str(w);
            for x in v {
                let _ = write!(text, " {x:.6}");
            }
            text.push('\n');
        }
        put("embeddings.txt", text)?;

        let mut text = String::new();
        for (w, ss) in &self.phonetic {
            let syl: Vec<String> = ss.iter().map(|s| format!("{}{}", s.base, s.tone)).collect();
            let _ = writeln!(text, "{w}\t{}", syl.join(" "));
        }
        put("phonetic.tsv", text)?;

        let pairs = |rows: &[(String, String)]| {
            rows.iter().fold(String::new(), |mut acc, (a, b)| {
                let _ = writeln!(acc, "{a}\t{b}");
                acc
            })
        };
        put("pos.tsv", pairs(&self.pos))?;
        put("domains.tsv", pairs(&self.domains))?;
        put(
            "graph.tsv",
            format!(
                "# parent<TAB>child, hypernym above hyponym\n{}",
                pairs(&self.edges)
            ),
        )?;

        let mut text = String::new();
        for (d, w) in &self.prototypes {
            let _ = writeln!(text, "{d}\t{w}");
        }
        put("prototypes.tsv", text)?;
        put(
            "seeds.txt",
            self.seeds
                .iter()
                .fold(String::new(), |acc, s| acc + s + "\n"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic() {
        let a = FixtureCorpus::generate(&FixtureSpec::small(3)).unwrap();
        let b = FixtureCorpus::generate(&FixtureSpec::small(3)).unwrap();
        assert_eq!(a.embeddings, b.embeddings);
        assert_eq!(a.edges, b.edges);
        assert_eq!(a.seeds, b.seeds);
        let c = FixtureCorpus::generate(&FixtureSpec::small(4)).unwrap();
        assert_ne!(a.embeddings, c.embeddings);
    }

    #[test]
    fn written_files_load_to_the_same_stores() {
        let corpus = FixtureCorpus::generate(&FixtureSpec::small(5)).unwrap();
        let dir = tempfile::tempdir().unwrap();
        corpus.write(dir.path()).unwrap();
        let loaded = Stores::load(
            &crate::stores::AssetPaths::in_dir(dir.path()),
            VocabularyFilter::default(),
        )
        .unwrap();
        let mem = corpus.stores().unwrap();
        assert_eq!(loaded.embeddings.words(), mem.embeddings.words());
        for w in mem.embeddings.words() {
            assert_eq!(loaded.embeddings.vector(w), mem.embeddings.vector(w));
        }
        assert_eq!(loaded.graph.vertex_count(), mem.graph.vertex_count());
        assert_eq!(loaded.prototypes, mem.prototypes);
    }
}
