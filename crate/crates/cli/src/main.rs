//! `mindmap` command-line front end.

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use mindmap_core::eval::render_table;
use mindmap_core::{
    compare_configs, expand, export_trace, generate, render_svg, AssetPaths, Comparison,
    ConfigFile, GenerationConfig, MixConfig, Provenance, Quotas, Stores, Thresholds,
};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "mindmap",
    version,
    about = "Seed-word expansion and painting-style mind maps"
)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the candidate list for one seed word.
    Expand { seed: String },
    /// Grow a mind map from one or more seeds and write SVG + trace.
    Generate {
        #[arg(required = true)]
        seeds: Vec<String>,
    },
    /// Compare baseline (pure similarity) and configured expansion over a
    /// seed-list file.
    Report { seed_file: PathBuf },
    /// Print the painting domain of each word.
    Classify {
        #[arg(required = true)]
        words: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct Options {
    /// Directory holding embeddings.txt, phonetic.tsv, pos.tsv, domains.tsv,
    /// graph.tsv and prototypes.tsv. Individual flags take precedence.
    #[arg(long, global = true)]
    assets: Option<PathBuf>,
    #[arg(long, global = true)]
    embeddings: Option<PathBuf>,
    #[arg(long, global = true)]
    phonetic: Option<PathBuf>,
    #[arg(long, global = true)]
    pos: Option<PathBuf>,
    #[arg(long, global = true)]
    domains: Option<PathBuf>,
    #[arg(long, global = true)]
    graph: Option<PathBuf>,
    #[arg(long, global = true)]
    prototypes: Option<PathBuf>,
    /// TOML config file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    rng_seed: Option<u64>,
    #[arg(long, global = true)]
    iterations: Option<usize>,
    #[arg(long, global = true)]
    max_candidates: Option<usize>,
    /// Strategy share, e.g. `--quota semantic=0.5`. When given, unlisted
    /// strategies get 0 and the shares must sum to 1.
    #[arg(long = "quota", value_name = "KEY=VALUE", global = true)]
    quotas: Vec<String>,
    /// Output directory for `generate` and `report`.
    #[arg(long, global = true, default_value = "mindmap-out")]
    out: PathBuf,
    /// Print machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
}

/// Everything a command needs after config, flags and assets are merged.
struct Run {
    stores: Stores,
    generation: GenerationConfig,
    thresholds: Thresholds,
}

fn parse_quotas(items: &[String]) -> Result<Option<Quotas>> {
    if items.is_empty() {
        return Ok(None);
    }
    let mut q = Quotas {
        semantic: 0.0,
        linguistic: 0.0,
        dadaism: 0.0,
        author: 0.0,
    };
    for item in items {
        let (key, value) = item
            .split_once('=')
            .with_context(|| format!("--quota expects KEY=VALUE, got `{item}`"))?;
        let p: Provenance = key.trim().parse()?;
        let v: f64 = value
            .trim()
            .parse()
            .with_context(|| format!("--quota {key}: `{value}` is not a number"))?;
        q.set(p, v);
    }
    q.validate()?;
    Ok(Some(q))
}

fn prepare(opts: &Options) -> Result<Run> {
    let file = match &opts.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let flags = AssetPaths {
        embeddings: opts.embeddings.clone(),
        phonetic: opts.phonetic.clone(),
        pos: opts.pos.clone(),
        domains: opts.domains.clone(),
        graph: opts.graph.clone(),
        prototypes: opts.prototypes.clone(),
        allowlist: None,
    };
    let mut paths = flags.or(file.assets.clone());
    if let Some(dir) = &opts.assets {
        paths = paths.or(AssetPaths::in_dir(dir));
    }
    if paths.embeddings.is_none() {
        bail!("no embedding file: pass --embeddings, --assets or a config with [assets]");
    }

    let mut generation = file.generation_config();
    if let Some(n) = opts.iterations {
        generation.iterations = n;
    }
    let mix: &mut MixConfig = &mut generation.mix;
    if let Some(s) = opts.rng_seed {
        mix.rng_seed = s;
    }
    if let Some(n) = opts.max_candidates {
        mix.max_candidates = n;
    }
    if let Some(q) = parse_quotas(&opts.quotas)? {
        mix.quotas = q;
    }
    generation.validate()?;
    let thresholds = match &file.eval {
        Some(t) => t.clone(),
        None => Thresholds::for_mix(&generation.mix),
    };
    let stores = Stores::load(&paths, file.vocabulary)?;
    Ok(Run {
        stores,
        generation,
        thresholds,
    })
}

#[derive(Serialize)]
struct ClassifyRow<'a> {
    word: &'a str,
    domain: String,
    confidence: f64,
    element: String,
}

fn cmd_expand(run: &Run, seed: &str, json: bool) -> Result<()> {
    let cands = expand(seed, &run.generation.mix, &run.stores)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&cands)?);
        return Ok(());
    }
    println!(
        "{:<10} {:<20} {:>10}  detail",
        "word", "provenance", "similarity"
    );
    for c in &cands {
        let sim = c
            .similarity
            .map_or_else(|| "unknown".to_string(), |s| format!("{s:.4}"));
        println!(
            "{:<10} {:<20} {:>10}  {}",
            c.word,
            c.provenance.slug(),
            sim,
            c.detail
        );
    }
    Ok(())
}

fn cmd_generate(run: &Run, seeds: &[String], out: &Path) -> Result<()> {
    let map = generate(seeds, &run.generation, &run.stores)?;
    output::ensure_dir(out)?;
    let svg = out.join("mindmap.svg");
    let trace = out.join("mindmap.trace.json");
    output::write_atomic(&svg, render_svg(&map).as_bytes())?;
    output::write_atomic(&trace, export_trace(&map).as_bytes())?;
    println!("{}", svg.display());
    println!("{}", trace.display());
    Ok(())
}

fn read_seed_file(path: &Path) -> Result<Vec<String>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let seeds: Vec<String> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect();
    if seeds.is_empty() {
        bail!("seed file {} is empty", path.display());
    }
    Ok(seeds)
}

fn cmd_report(run: &Run, seed_file: &Path, out: &Path, json: bool) -> Result<()> {
    let seeds = read_seed_file(seed_file)?;
    let mix = &run.generation.mix;
    let cmp: Comparison =
        compare_configs(&seeds, &mix.baseline(), mix, &run.stores, &run.thresholds)?;
    let text = serde_json::to_string_pretty(&cmp)? + "\n";
    output::ensure_dir(out)?;
    let path = out.join("report.json");
    output::write_atomic(&path, text.as_bytes())?;
    if json {
        print!("{text}");
        return Ok(());
    }
    print!("{}", render_table(&[&cmp.baseline], &cmp.thresholds));
    println!();
    print!("{}", render_table(&[&cmp.proposed], &cmp.thresholds));
    println!();
    let d = cmp.disagreements;
    println!(
        "annotation disagrees with producing strategy: semantic {}, linguistic {}, dadaism {}, author {}",
        d.0[0], d.0[1], d.0[2], d.0[3]
    );
    println!("{}", path.display());
    Ok(())
}

fn cmd_classify(run: &Run, words: &[String], json: bool) -> Result<()> {
    let protos = run.stores.prototypes()?;
    let rows: Vec<ClassifyRow> = words
        .iter()
        .map(|w| {
            let c = protos.classify(w, &run.stores.embeddings);
            ClassifyRow {
                word: w,
                domain: c.domain.to_string(),
                confidence: c.confidence,
                element: c.domain.element().id,
            }
        })
        .collect();
    if json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
        return Ok(());
    }
    for r in rows {
        println!(
            "{:<10} {:<13} {:>7.4}  {}",
            r.word, r.domain, r.confidence, r.element
        );
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let run = prepare(&cli.opts)?;
    match &cli.command {
        Command::Expand { seed } => cmd_expand(&run, seed, cli.opts.json),
        Command::Generate { seeds } => cmd_generate(&run, seeds, &cli.opts.out),
        Command::Report { seed_file } => cmd_report(&run, seed_file, &cli.opts.out, cli.opts.json),
        Command::Classify { words } => cmd_classify(&run, words, cli.opts.json),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = format!("{e:#}").replace('\n', " ");
            eprintln!("mindmap: {msg}");
            ExitCode::FAILURE
        }
    }
}
