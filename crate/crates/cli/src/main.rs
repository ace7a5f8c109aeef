use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use shredder_core::brute::verify_runs;
use shredder_core::testkit;
use shredder_core::{list_all, most_shattering_with, parse_graph, Error, Graph, SamplingConfig};

/// List minimum vertex cuts that shatter a graph into three or more pieces.
#[derive(Parser)]
#[command(name = "shredders", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Graph file: a header line `n m`, then one `u v` pair per line.
    file: PathBuf,
    /// Seed; falls back to SHREDDER_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    /// Use the large sampling constants behind the n^-100 failure bound.
    #[arg(long = "paper-constants")]
    full_constants: bool,
    /// Run on the input graph even when it is dense.
    #[arg(long)]
    no_sparsify: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print k and every k-shredder with its component count.
    Shredders(Common),
    /// Print a minimum cut with the most components.
    MostShattering(Common),
    /// Diff repeated runs against exhaustive enumeration.
    Verify {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 10)]
        runs: usize,
        #[arg(long = "paper-constants")]
        full_constants: bool,
    },
    /// Write a generated graph.
    Gen {
        kind: String,
        params: Vec<String>,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

#[derive(Serialize)]
struct ShredderJson {
    vertices: Vec<usize>,
    components: usize,
}

#[derive(Serialize)]
struct ListingJson {
    k: usize,
    shredders: Vec<ShredderJson>,
    seed: u64,
}

#[derive(Serialize)]
struct ShatteringJson {
    k: usize,
    cut: Vec<usize>,
    components: usize,
    is_shredder: bool,
    seed: u64,
}

enum Failure {
    Input(String),
    Mismatch(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::SelfLoop(_)
            | Error::DuplicateEdge(..)
            | Error::VertexOutOfRange { .. }
            | Error::BadParams(_) => Failure::Input(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("SHREDDER_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Input(format!("SHREDDER_SEED is not a u64: {v:?}"))),
        Err(_) => Ok(0),
    }
}

fn config(full: bool) -> SamplingConfig {
    if full {
        SamplingConfig::FULL
    } else {
        SamplingConfig::DESK
    }
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(parse_graph(&text)?)
}

fn braces(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn json_line<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain structs serialize")
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.cmd {
        Cmd::Shredders(c) => {
            let g = load(&c.file)?;
            let seed = resolve_seed(c.seed)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (k, list) = list_all(&g, &mut rng, &config(c.full_constants), !c.no_sparsify)?;
            if c.json {
                let shredders = list
                    .iter()
                    .map(|r| ShredderJson { vertices: r.vertices.as_slice().to_vec(), components: r.components })
                    .collect();
                return Ok(json_line(&ListingJson { k, shredders, seed }));
            }
            let mut out = format!("k = {k}\n");
            for r in &list {
                out += &format!("{} components={}\n", braces(r.vertices.as_slice()), r.components);
            }
            out += &format!("shredders = {}\nseed = {seed}", list.len());
            Ok(out)
        }
        Cmd::MostShattering(c) => {
            let g = load(&c.file)?;
            let seed = resolve_seed(c.seed)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let r = most_shattering_with(&g, &mut rng, &config(c.full_constants), !c.no_sparsify)?;
            let k = r.cut.len();
            if c.json {
                return Ok(json_line(&ShatteringJson {
                    k,
                    cut: r.cut.as_slice().to_vec(),
                    components: r.components,
                    is_shredder: r.is_shredder,
                    seed,
                }));
            }
            Ok(format!(
                "k = {k}\ncut = {}\ncomponents = {}\nis_shredder = {}\nseed = {seed}",
                braces(r.cut.as_slice()),
                r.components,
                r.is_shredder
            ))
        }
        Cmd::Verify { file, seed, runs, full_constants } => {
            let g = load(&file)?;
            let seed = resolve_seed(seed)?;
            let rep = verify_runs(&g, seed, runs, &config(full_constants), true)?;
            let msg = format!(
                "k = {}\nexpected shredders = {}\nruns = {}\nlisting mismatches = {}\nmost-shattering mismatches = {}\nseed = {seed}",
                rep.k,
                rep.expected.len(),
                rep.runs,
                rep.listing_mismatches.len(),
                rep.shattering_mismatches.len()
            );
            if rep.passed() {
                Ok(msg)
            } else {
                let seeds: Vec<String> = rep.listing_mismatches.iter().chain(&rep.shattering_mismatches).map(u64::to_string).collect();
                Err(Failure::Mismatch(format!("{msg}\nfailing seeds: {}", seeds.join(" "))))
            }
        }
        Cmd::Gen { kind, params, output } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            let g = testkit::gen(&kind, &params)?;
            std::fs::write(&output, g.to_text()).map_err(|e| Failure::Input(format!("{}: {e}", output.display())))?;
            Ok(format!("wrote {} (n = {}, m = {})", output.display(), g.n(), g.m()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            println!("{msg}");
            eprintln!("error: verification mismatch");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
