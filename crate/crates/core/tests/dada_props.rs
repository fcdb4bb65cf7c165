mod common;

use std::collections::HashSet;

use mindmap_core::dada::{random_candidates, Admission, DadaConfig};
use mindmap_core::fixture::{FixtureCorpus, FixtureSpec};
use mindmap_core::rng::stream;
use mindmap_core::{Execution, PhoneticLexicon, Syllable, ToneMode};

/// The three exclusion predicates, restated from scratch.
fn oracle_admits(seed: &str, word: &str, stores: &mindmap_core::Stores, ceiling: f64) -> bool {
    let (Some(a), Some(b)) = (
        stores.embeddings.vector(seed),
        stores.embeddings.vector(word),
    ) else {
        return false;
    };
    let Some(cos) = common::oracle_cosine(a, b) else {
        return false;
    };
    let shared_char = word.chars().any(|c| seed.contains(c));
    let shared_syllable = stores
        .phonetic
        .shares_syllable(seed, word, ToneMode::Insensitive);
    word != seed && cos < ceiling && !shared_char && !shared_syllable
}

#[test]
fn sampled_outputs_reverify() {
    let corpus = FixtureCorpus::generate(&FixtureSpec::small(21)).unwrap();
    let stores = corpus.stores().unwrap();
    let cfg = DadaConfig::default();
    let mut checked = 0;
    for (i, seed) in corpus
        .seeds
        .iter()
        .filter(|s| stores.embeddings.contains(s))
        .enumerate()
    {
        let mut rng = stream(i as u64, seed);
        let out = random_candidates(
            &stores.embeddings,
            &stores.phonetic,
            seed,
            25,
            &cfg,
            &mut rng,
        )
        .unwrap();
        let unique: HashSet<&String> = out.iter().collect();
        assert_eq!(unique.len(), out.len());
        for w in &out {
            assert!(
                oracle_admits(seed, w, &stores, cfg.semantic_ceiling),
                "{seed} -> {w}"
            );
            checked += 1;
        }
    }
    assert!(checked >= 200, "only {checked} draws");
}

#[test]
fn pool_equals_filter_scan_on_ten_words() {
    let entries = common::planar(&[
        ("天鹅", 0.0),
        ("天空", 10.0),
        ("疯狂", 95.0),
        ("白鹅", 120.0),
        ("石头", 150.0),
        ("水流", 60.0),
        ("飞机", 70.0),
        ("书本", 200.0),
        ("数字", 260.0),
        ("树木", 300.0),
    ]);
    let store = common::store(2, &entries);
    let syl = |s: &str| Syllable::parse(s).unwrap();
    let phon = PhoneticLexicon::from_entries([
        ("天鹅".to_string(), vec![syl("tian1"), syl("e2")]),
        ("疯狂".to_string(), vec![syl("feng1"), syl("kuang2")]),
        ("石头".to_string(), vec![syl("shi2"), syl("tou2")]),
        ("水流".to_string(), vec![syl("shui3"), syl("liu2")]),
        ("书本".to_string(), vec![syl("shu1"), syl("ben3")]),
        ("数字".to_string(), vec![syl("shu4"), syl("zi4")]),
        ("树木".to_string(), vec![syl("shu4"), syl("mu4")]),
        ("飞机".to_string(), vec![syl("fei1"), syl("e1")]),
    ]);
    let mut stores = mindmap_core::Stores::new(Default::default(), store);
    stores.phonetic = phon;
    let cfg = DadaConfig::default();
    let adm = Admission::new(&stores.embeddings, &stores.phonetic, "天鹅", &cfg).unwrap();
    let expected: Vec<String> = entries
        .iter()
        .map(|(w, _)| w.clone())
        .filter(|w| oracle_admits("天鹅", w, &stores, cfg.semantic_ceiling))
        .collect();
    assert_eq!(adm.pool(Execution::Sequential), expected);
    assert_eq!(adm.pool(Execution::Parallel), expected);
    // 天空 and 白鹅 share a character, 飞机 shares the syllable e, 水流 and
    // 树木 sit at cosine 0.5.
    assert_eq!(expected, ["疯狂", "石头", "书本", "数字"]);
}

#[test]
fn different_rng_seeds_draw_differently() {
    let corpus = FixtureCorpus::generate(&FixtureSpec::default()).unwrap();
    let stores = corpus.stores().unwrap();
    let cfg = DadaConfig::default();
    let seed = "医院";
    let pool = Admission::new(&stores.embeddings, &stores.phonetic, seed, &cfg)
        .unwrap()
        .pool(Execution::default());
    assert!(pool.len() >= 100);
    let draws: HashSet<Vec<String>> = (0..10u64)
        .map(|s| {
            random_candidates(
                &stores.embeddings,
                &stores.phonetic,
                seed,
                5,
                &cfg,
                &mut stream(s, seed),
            )
            .unwrap()
        })
        .collect();
    assert!(draws.len() > 1);
    let again = random_candidates(
        &stores.embeddings,
        &stores.phonetic,
        seed,
        5,
        &cfg,
        &mut stream(3, seed),
    )
    .unwrap();
    assert!(draws.contains(&again));
}
