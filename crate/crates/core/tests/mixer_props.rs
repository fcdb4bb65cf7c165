mod common;

use std::collections::HashSet;

use mindmap_core::fixture::{FixtureCorpus, FixtureSpec};
use mindmap_core::{
    apportion, expand, expand_with, Counts, Execution, MixConfig, Provenance, Quotas,
};
use proptest::prelude::*;

fn quotas() -> impl Strategy<Value = Quotas> {
    prop::array::uniform4(0u32..100)
        .prop_filter("nonzero", |w| w.iter().sum::<u32>() > 0)
        .prop_map(|w| {
            let total: u32 = w.iter().sum();
            let f = |x: u32| f64::from(x) / f64::from(total);
            Quotas {
                semantic: f(w[0]),
                linguistic: f(w[1]),
                dadaism: f(w[2]),
                author: (1.0 - f(w[0]) - f(w[1]) - f(w[2])).max(0.0),
            }
        })
}

fn counts_of(cands: &[mindmap_core::Candidate]) -> Counts {
    let mut c = [0usize; 4];
    for x in cands {
        c[x.provenance.index()] += 1;
    }
    Counts(c)
}

#[test]
fn apportion_reference_examples() {
    assert_eq!(apportion(&Quotas::default(), 7), Counts([2, 2, 2, 1]));
    let half = Quotas {
        semantic: 0.5,
        linguistic: 0.5,
        dadaism: 0.0,
        author: 0.0,
    };
    assert_eq!(apportion(&half, 7), Counts([4, 3, 0, 0]));
    assert_eq!(apportion(&Quotas::default(), 0), Counts([0; 4]));
    assert_eq!(apportion(&Quotas::BASELINE, 7), Counts([7, 0, 0, 0]));
}

proptest! {
    #[test]
    fn apportion_matches_oracle(q in quotas(), n in 0usize..40) {
        let got = apportion(&q, n);
        prop_assert_eq!(got.total(), n);
        prop_assert_eq!(got.0, common::oracle_apportion([q.semantic, q.linguistic, q.dadaism, q.author], n));
    }

    #[test]
    fn ample_pools_meet_quotas_exactly(q in quotas(), max in 1usize..10, rng_seed in any::<u64>()) {
        let corpus = common::ample_corpus(20);
        let cfg = MixConfig { max_candidates: max, quotas: q, rng_seed, ..MixConfig::default() };
        let out = expand(&corpus.seed, &cfg, &corpus.stores).unwrap();
        prop_assert_eq!(out.len(), max);
        prop_assert_eq!(counts_of(&out), apportion(&q, max));
    }
}

#[test]
fn ample_corpus_strategies_come_from_their_groups() {
    let corpus = common::ample_corpus(20);
    let out = expand(&corpus.seed, &MixConfig::default(), &corpus.stores).unwrap();
    for c in &out {
        let group_ok = match c.provenance {
            Provenance::SemanticSimilarity => corpus.groups["semantic"].contains(&c.word),
            Provenance::LinguisticFeature => {
                corpus.groups["linguistic"].contains(&c.word)
                    || corpus.groups["homophone"].contains(&c.word)
            }
            Provenance::Dadaism => corpus.groups["dada"].contains(&c.word),
            Provenance::AuthorStyle => corpus.groups["author"].contains(&c.word),
        };
        assert!(group_ok, "{c:?}");
    }
}

#[test]
fn missing_author_slot_refills_from_linguistic() {
    let mut corpus = common::ample_corpus(20);
    corpus.stores.graph = Default::default();
    let out = expand(&corpus.seed, &MixConfig::default(), &corpus.stores).unwrap();
    assert_eq!(counts_of(&out), Counts([2, 3, 2, 0]));
}

#[test]
fn baseline_quotas_reproduce_knn() {
    let corpus = FixtureCorpus::generate(&FixtureSpec::default()).unwrap();
    let stores = corpus.stores().unwrap();
    let cfg = MixConfig::default().baseline();
    for seed in corpus.seeds.iter().take(40) {
        let got: Vec<(String, Option<f64>)> = expand(seed, &cfg, &stores)
            .unwrap()
            .into_iter()
            .map(|c| (c.word, c.similarity))
            .collect();
        let want: Vec<(String, Option<f64>)> = stores
            .embeddings
            .nearest_neighbors(seed, 7, &HashSet::new())
            .unwrap()
            .into_iter()
            .map(|n| (n.word, Some(n.similarity)))
            .collect();
        assert_eq!(got, want, "{seed}");
    }
}

#[test]
fn fixture_outputs_are_well_formed_and_deterministic() {
    let corpus = FixtureCorpus::generate(&FixtureSpec::default()).unwrap();
    let stores = corpus.stores().unwrap();
    let cfg = MixConfig {
        rng_seed: 17,
        ..MixConfig::default()
    };
    for seed in &corpus.seeds {
        let a = expand_with(seed, &cfg, &stores, Execution::Sequential).unwrap();
        let b = expand_with(seed, &cfg, &stores, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert!(a.len() <= cfg.max_candidates);
        let words: HashSet<&str> = a.iter().map(|c| c.word.as_str()).collect();
        assert_eq!(words.len(), a.len());
        assert!(!words.contains(seed.as_str()));
        for c in &a {
            if stores.embeddings.contains(&c.word) {
                assert!(c.similarity.is_some_and(f64::is_finite));
            }
        }
    }
}

#[test]
fn hospital_reference_expansion() {
    let stores = FixtureCorpus::generate(&FixtureSpec::default())
        .unwrap()
        .stores()
        .unwrap();
    let out = expand("医院", &MixConfig::default(), &stores).unwrap();
    assert_eq!(counts_of(&out), Counts([2, 2, 2, 1]));
    let by = |p: Provenance| {
        out.iter()
            .filter(|c| c.provenance == p)
            .map(|c| c.word.as_str())
            .collect::<Vec<_>>()
    };
    assert_eq!(by(Provenance::AuthorStyle), ["病人"]);
    assert_eq!(by(Provenance::LinguisticFeature), ["医生", "住院"]);
}
