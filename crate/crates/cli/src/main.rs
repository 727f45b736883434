mod bench;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use kdc2::io::{self, GraphFormat, IndexBase, LoadOptions, LoadedGraph, SolutionRecord};
use kdc2::{oracle, solve, Mode, SolverConfig, VertexSet};

#[derive(Parser)]
#[command(
    name = "kdc2",
    version,
    about = "Exact maximum k-defective clique solver"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a maximum k-defective clique.
    Solve(SolveArgs),
    /// Check whether a vertex set is a k-defective clique.
    Verify(VerifyArgs),
    /// Solve every graph in a directory for several values of k.
    Bench(bench::BenchArgs),
    /// Exhaustive search, for graphs with at most 30 vertices.
    Oracle(OracleArgs),
}

#[derive(Args, Clone)]
pub struct GraphArgs {
    #[arg(long)]
    graph: PathBuf,
    /// edge-list or matrix-market; detected from the extension by default
    #[arg(long)]
    format: Option<GraphFormat>,
    /// auto, 0 or 1
    #[arg(long, default_value = "auto")]
    base: IndexBase,
}

impl GraphArgs {
    fn load(&self) -> Result<LoadedGraph> {
        let opts = LoadOptions {
            format: self.format,
            base: self.base,
        };
        io::load(&self.graph, opts).with_context(|| format!("loading {}", self.graph.display()))
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: GraphArgs,
    #[arg(long)]
    k: usize,
    /// two-stage, full or degen-gap
    #[arg(long, default_value = "two-stage")]
    mode: Mode,
    /// seconds; 0 disables the limit
    #[arg(long, default_value_t = 0.0)]
    time_limit: f64,
    /// disable the degree-sequence reduction
    #[arg(long)]
    no_rr3: bool,
    /// only look for solutions larger than this
    #[arg(long, default_value_t = 0)]
    lb: usize,
    /// write the JSON solution record here
    #[arg(long)]
    output: Option<PathBuf>,
    /// print search statistics
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: GraphArgs,
    /// defaults to the record's k with --solution-json
    #[arg(long)]
    k: Option<usize>,
    /// vertex labels separated by commas or spaces
    #[arg(long, conflicts_with = "solution_json", allow_hyphen_values = true)]
    vertices: Option<String>,
    #[arg(long)]
    solution_json: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: GraphArgs,
    #[arg(long)]
    k: usize,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => bench::cmd_bench(args),
        Command::Oracle(args) => cmd_oracle(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn join_labels(labels: &[u64]) -> String {
    labels
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode> {
    let loaded = args.input.load()?;
    let cfg = SolverConfig::new(args.k)
        .mode(args.mode)
        .rr3(!args.no_rr3)
        .time_limit_secs(args.time_limit)
        .initial_lb(args.lb);
    let outcome = solve(&loaded.graph, &cfg)?;
    let record = SolutionRecord::new(&loaded, &cfg, &outcome)?;
    println!("{}", record.omega);
    println!("{}", join_labels(&record.vertices));
    if args.stats {
        let s = &record.stats;
        println!(
            "nodes={} leaves={} rr1={} rr2={} rr3={} ub_prunes={} time_sec={:.6} timed_out={}",
            s.nodes, s.leaves, s.rr1, s.rr2, s.rr3, s.ub_prunes, record.time_sec, record.timed_out
        );
    }
    if let Some(path) = &args.output {
        io::write_solution(&record, path)?;
    }
    if record.timed_out {
        eprintln!("time limit reached; reporting the best solution found");
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_labels(text: &str) -> Result<Vec<u64>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .with_context(|| format!("invalid vertex label {t:?}"))
        })
        .collect()
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let loaded = args.input.load()?;
    let (labels, k) = match (&args.vertices, &args.solution_json) {
        (Some(text), None) => (parse_labels(text)?, args.k),
        (None, Some(path)) => {
            let record = io::read_solution(path)?;
            (record.vertices, args.k.or(Some(record.k)))
        }
        _ => bail!("pass exactly one of --vertices and --solution-json"),
    };
    let Some(k) = k else {
        bail!("--k is required with --vertices")
    };
    let ids = loaded.resolve(&labels)?;
    let set = VertexSet::from_slice(loaded.graph.n(), &ids)?;
    let missing = loaded.graph.non_edge_count(&set)?;
    println!("size={} nonedges={missing} k={k}", set.len());
    if missing <= k {
        println!("accept");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("reject");
        Ok(ExitCode::from(1))
    }
}

fn cmd_oracle(args: OracleArgs) -> Result<ExitCode> {
    let loaded = args.input.load()?;
    if loaded.graph.n() > oracle::MAX_ORACLE_VERTICES {
        bail!(
            "exhaustive search is limited to {} vertices",
            oracle::MAX_ORACLE_VERTICES
        );
    }
    let solution = oracle::brute_force_max_kdc(&loaded.graph, args.k);
    println!("{}", solution.size());
    println!(
        "{}",
        join_labels(&loaded.labels_of(&solution.sorted_vertices()))
    );
    Ok(ExitCode::SUCCESS)
}
