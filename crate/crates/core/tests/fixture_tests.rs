mod common;

use mindmap_core::fixture::{FixtureCorpus, FixtureSpec};

#[test]
fn bundled_fixture_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    FixtureCorpus::generate(&FixtureSpec::default())
        .unwrap()
        .write(dir.path())
        .unwrap();
    for name in [
        "embeddings.txt",
        "phonetic.tsv",
        "pos.tsv",
        "domains.tsv",
        "graph.tsv",
        "prototypes.tsv",
        "seeds.txt",
    ] {
        let fresh = std::fs::read(dir.path().join(name)).unwrap();
        let bundled = std::fs::read(common::fixture_dir().join(name)).unwrap();
        assert!(
            fresh == bundled,
            "{name} differs; rerun `cargo run -p mindmap-core --example make_fixture`"
        );
    }
}
