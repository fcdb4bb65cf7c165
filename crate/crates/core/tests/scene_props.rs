mod common;

use mindmap_core::fixture::{FixtureCorpus, FixtureSpec};
use mindmap_core::{
    classify_domain, painting_element, EmbeddingStore, PaintingDomain, VocabularyFilter,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn classification_ignores_positive_scale(v in prop::collection::vec(-5.0f32..5.0, 6), scale in 0.01f32..100.0) {
        prop_assume!(v.iter().any(|x| x.abs() > 1e-2));
        let mut entries: Vec<(String, Vec<f32>)> = (0..6)
            .map(|d| {
                let mut p = vec![0.0f32; 6];
                p[d] = 1.0;
                p[(d + 1) % 6] = 0.3;
                (format!("p{d}"), p)
            })
            .collect();
        entries.push(("x".into(), v.clone()));
        entries.push(("y".into(), v.iter().map(|a| a * scale).collect()));
        let store = EmbeddingStore::from_entries(6, entries, &VocabularyFilter::default()).unwrap();
        let protos = common::prototypes_from(&["p0", "p1", "p2", "p3", "p4", "p5"], &store);
        let x = classify_domain("x", &protos, &store);
        let y = classify_domain("y", &protos, &store);
        prop_assert_eq!(x.domain, y.domain);
        prop_assert!((x.confidence - y.confidence).abs() < 1e-6);
        for e in protos.iter() {
            let n: f64 = e.centroid.iter().map(|c| c * c).sum::<f64>().sqrt();
            prop_assert!((n - 1.0).abs() < 1e-6);
        }
    }
}

#[test]
fn prototype_words_classify_into_their_own_domain() {
    let corpus = FixtureCorpus::generate(&FixtureSpec::default()).unwrap();
    let stores = corpus.stores().unwrap();
    let protos = stores.prototypes().unwrap();
    for (domain, word) in &corpus.prototypes {
        assert_eq!(
            classify_domain(word, protos, &stores.embeddings).domain,
            *domain,
            "{word}"
        );
    }
}

#[test]
fn element_table_is_a_function() {
    for d in PaintingDomain::ALL {
        assert_eq!(painting_element(d), painting_element(d));
    }
    assert_eq!(
        painting_element(PaintingDomain::Mountain).id,
        "triangle-ridge"
    );
    assert_eq!(painting_element(PaintingDomain::Lake).id, "ellipse");
}
