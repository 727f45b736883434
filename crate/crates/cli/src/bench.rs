//! Benchmark harness: every graph of a corpus directory for every k.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use anyhow::{Context, Result};
use clap::Args;
use kdc2::io::{self, LoadOptions, LoadedGraph, SolutionRecord};
use kdc2::{solve, Mode, SolverConfig};
use serde::Serialize;

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long)]
    corpus: PathBuf,
    /// comma-separated values of k
    #[arg(long, value_delimiter = ',', default_value = "1,3,5")]
    k: Vec<usize>,
    /// seconds per run; 0 disables the limit
    #[arg(long, default_value_t = 60.0)]
    time_limit: f64,
    #[arg(long, default_value = "two-stage")]
    mode: Mode,
    #[arg(long)]
    no_rr3: bool,
    /// `.jsonl` writes JSON lines, anything else CSV; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

/// One CSV row. Columns follow the field order.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub mode: String,
    pub omega: usize,
    pub time_sec: f64,
    pub timed_out: bool,
    pub nodes: u64,
    pub leaves: u64,
    pub rr1: u64,
    pub rr2: u64,
    pub rr3: u64,
    pub ub_prunes: u64,
    pub error: String,
}

enum Outcome {
    Solved(SolutionRecord),
    Failed {
        graph: String,
        k: usize,
        error: String,
    },
}

impl Outcome {
    fn row(&self, mode: Mode) -> BenchRow {
        match self {
            Outcome::Solved(r) => BenchRow {
                graph: r.graph.clone(),
                n: r.n,
                m: r.m,
                k: r.k,
                mode: r.mode.clone(),
                omega: r.omega,
                time_sec: r.time_sec,
                timed_out: r.timed_out,
                nodes: r.stats.nodes,
                leaves: r.stats.leaves,
                rr1: r.stats.rr1,
                rr2: r.stats.rr2,
                rr3: r.stats.rr3,
                ub_prunes: r.stats.ub_prunes,
                error: String::new(),
            },
            Outcome::Failed { graph, k, error } => BenchRow {
                graph: graph.clone(),
                n: 0,
                m: 0,
                k: *k,
                mode: mode.to_string(),
                omega: 0,
                time_sec: 0.0,
                timed_out: false,
                nodes: 0,
                leaves: 0,
                rr1: 0,
                rr2: 0,
                rr3: 0,
                ub_prunes: 0,
                error: error.clone(),
            },
        }
    }

    fn json(&self, mode: Mode) -> Result<String> {
        Ok(match self {
            Outcome::Solved(r) => r.to_json_line()?,
            Outcome::Failed { graph, k, error } => serde_json::json!({
                "graph": graph,
                "k": k,
                "mode": mode.to_string(),
                "error": error,
            })
            .to_string(),
        })
    }

    fn solved(&self) -> bool {
        matches!(self, Outcome::Solved(r) if !r.timed_out)
    }
}

fn threads() -> usize {
    std::env::var("KDC2_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or(1)
}

fn graph_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

pub fn cmd_bench(args: BenchArgs) -> Result<ExitCode> {
    let files = io::list_graph_files(&args.corpus)?;
    let graphs: Vec<(String, Result<LoadedGraph, String>)> = files
        .iter()
        .map(|path| {
            let loaded = io::load(path, LoadOptions::default()).map_err(|e| e.to_string());
            (graph_name(path), loaded)
        })
        .collect();
    let jobs: Vec<(usize, usize)> = (0..graphs.len())
        .flat_map(|g| args.k.iter().map(move |&k| (g, k)))
        .collect();

    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Outcome>>> = Mutex::new((0..jobs.len()).map(|_| None).collect());
    let run = |(g, k): (usize, usize)| -> Outcome {
        let (name, loaded) = &graphs[g];
        let loaded = match loaded {
            Ok(loaded) => loaded,
            Err(error) => {
                return Outcome::Failed {
                    graph: name.clone(),
                    k,
                    error: error.clone(),
                }
            }
        };
        let cfg = SolverConfig::new(k)
            .mode(args.mode)
            .rr3(!args.no_rr3)
            .time_limit_secs(args.time_limit);
        let record =
            solve(&loaded.graph, &cfg).and_then(|out| SolutionRecord::new(loaded, &cfg, &out));
        match record {
            Ok(record) => Outcome::Solved(record),
            Err(e) => Outcome::Failed {
                graph: name.clone(),
                k,
                error: e.to_string(),
            },
        }
    };
    std::thread::scope(|scope| {
        for _ in 0..threads().min(jobs.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&job) = jobs.get(i) else { break };
                let outcome = run(job);
                log::info!("finished {} k={}", graphs[job.0].0, job.1);
                results.lock().unwrap()[i] = Some(outcome);
            });
        }
    });
    let outcomes: Vec<Outcome> = results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|o| o.expect("every job ran"))
        .collect();

    let to_stdout = args.out.is_none();
    match &args.out {
        Some(path) if path.extension().is_some_and(|e| e == "jsonl") => {
            let mut out = BufWriter::new(
                File::create(path).with_context(|| format!("creating {}", path.display()))?,
            );
            for o in &outcomes {
                writeln!(out, "{}", o.json(args.mode)?)?;
            }
            out.flush()?;
        }
        Some(path) => write_csv(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
            &outcomes,
            args.mode,
        )?,
        None => write_csv(std::io::stdout().lock(), &outcomes, args.mode)?,
    }

    let mut summary: BTreeMap<usize, (usize, usize)> =
        args.k.iter().map(|&k| (k, (0, 0))).collect();
    for ((_, k), o) in jobs.iter().zip(&outcomes) {
        let entry = summary.get_mut(k).expect("k is listed");
        entry.1 += 1;
        entry.0 += usize::from(o.solved());
    }
    let mut lines = String::new();
    for (k, (solved, total)) in summary {
        lines.push_str(&format!("k={k} solved {solved}/{total}\n"));
    }
    if to_stdout {
        eprint!("{lines}");
    } else {
        print!("{lines}");
    }
    Ok(ExitCode::SUCCESS)
}

fn write_csv<W: Write>(out: W, outcomes: &[Outcome], mode: Mode) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if outcomes.is_empty() {
        // keep the header so empty corpora still yield a parseable table
        w.write_record([
            "graph",
            "n",
            "m",
            "k",
            "mode",
            "omega",
            "time_sec",
            "timed_out",
            "nodes",
            "leaves",
            "rr1",
            "rr2",
            "rr3",
            "ub_prunes",
            "error",
        ])?;
    }
    for o in outcomes {
        w.serialize(o.row(mode))?;
    }
    w.flush()?;
    Ok(())
}
