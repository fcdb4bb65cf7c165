use std::collections::HashSet;

use mindmap_core::{KnowledgeGraph, Relation};
use proptest::prelude::*;

/// Random forest: each vertex i > 0 gets a parent among 0..i or none.
fn forest() -> impl Strategy<Value = KnowledgeGraph> {
    prop::collection::vec(
        prop::option::weighted(0.8, any::<prop::sample::Index>()),
        1..40,
    )
    .prop_map(|parents| {
        let mut edges = Vec::new();
        let mut isolated = Vec::new();
        for (i, p) in parents.iter().enumerate() {
            match p {
                Some(idx) if i > 0 => edges.push((format!("v{}", idx.index(i)), format!("v{i}"))),
                _ => isolated.push(format!("v{i}")),
            }
        }
        KnowledgeGraph::from_edges(edges, isolated).unwrap()
    })
}

proptest! {
    #[test]
    fn expansion_grows_with_depth(g in forest(), pick in any::<prop::sample::Index>(), depth in 1usize..5) {
        let seed = g.vertices()[pick.index(g.vertex_count())].clone();
        let shallow: HashSet<String> = g.expand(&seed, depth - 1, usize::MAX).into_iter().map(|h| h.word).collect();
        let deep = g.expand(&seed, depth, usize::MAX);
        let deep_words: HashSet<String> = deep.iter().map(|h| h.word.clone()).collect();
        prop_assert!(shallow.is_subset(&deep_words));
        for h in &deep {
            prop_assert_ne!(&h.word, &seed);
            prop_assert!(g.contains(&h.word));
            prop_assert!(h.hops >= 1 && h.hops <= depth);
            prop_assert!(g.is_linked(&seed, &h.word));
            // Hypernym hits are exactly the ancestors.
            let mut ancestor = g.parent(&seed);
            let mut is_ancestor = false;
            while let Some(a) = ancestor {
                if a == h.word { is_ancestor = true; }
                ancestor = g.parent(a);
            }
            prop_assert_eq!(is_ancestor, h.relation == Relation::Hypernym);
        }
        prop_assert_eq!(deep_words.len(), deep.len());
    }

    #[test]
    fn expansion_is_deterministic_and_ordered(g in forest(), pick in any::<prop::sample::Index>()) {
        let seed = g.vertices()[pick.index(g.vertex_count())].clone();
        let a = g.expand(&seed, 3, usize::MAX);
        prop_assert_eq!(&a, &g.expand(&seed, 3, usize::MAX));
        let key = |h: &mindmap_core::GraphHit| (h.hops, h.relation, h.word.clone());
        prop_assert!(a.windows(2).all(|w| key(&w[0]) < key(&w[1])));
        let truncated = g.expand(&seed, 3, 2);
        prop_assert_eq!(&truncated[..], &a[..a.len().min(2)]);
    }
}
