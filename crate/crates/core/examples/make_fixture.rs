//! Regenerates the bundled demo corpus: `cargo run --example make_fixture -- <dir>`.

use mindmap_core::fixture::{FixtureCorpus, FixtureSpec};

fn main() -> mindmap_core::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "assets/fixture".into());
    let corpus = FixtureCorpus::generate(&FixtureSpec::default())?;
    corpus.write(&dir)?;
    println!(
        "wrote {} embeddings, {} graph edges, {} seeds to {dir}",
        corpus.embeddings.len(),
        corpus.edges.len(),
        corpus.seeds.len()
    );
    Ok(())
}
