//! Graph file loaders and solution records.
//!
//! Edge lists hold one `u v` pair per line, optionally preceded by an `n m`
//! header; `#` and `%` start comment lines and columns after the second are
//! ignored. MatrixMarket files must be square coordinate matrices; values and
//! symmetry flags are ignored because every entry becomes an undirected edge.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solution::Solution;
use crate::solver::{SearchStats, SolveOutcome, SolverConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    EdgeList,
    MatrixMarket,
}

impl GraphFormat {
    /// `.mtx` is MatrixMarket; `.txt`, `.edges` and anything else is an edge list.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("mtx") => GraphFormat::MatrixMarket,
            _ => GraphFormat::EdgeList,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edges" | "txt" => Ok(GraphFormat::EdgeList),
            "matrix-market" | "mtx" => Ok(GraphFormat::MatrixMarket),
            other => Err(Error::Contract(format!("unknown graph format {other:?}"))),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edge-list",
            GraphFormat::MatrixMarket => "matrix-market",
        })
    }
}

/// How edge-list ids map to vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IndexBase {
    /// With a header: 1-based when the ids span exactly `1..=n`, else
    /// 0-based. Without one: distinct ids are relabelled `0..n` in sorted
    /// order.
    #[default]
    Auto,
    Zero,
    One,
}

impl FromStr for IndexBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(IndexBase::Auto),
            "0" | "zero" => Ok(IndexBase::Zero),
            "1" | "one" => Ok(IndexBase::One),
            other => Err(Error::Contract(format!("unknown index base {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadOptions {
    /// Overrides detection by file extension.
    pub format: Option<GraphFormat>,
    pub base: IndexBase,
}

/// A graph together with the file's original vertex labels.
#[derive(Clone, Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// `labels[v]` is the id vertex `v` had in the file.
    pub labels: Vec<u64>,
    pub name: String,
}

impl LoadedGraph {
    pub fn label(&self, v: u32) -> u64 {
        self.labels[v as usize]
    }

    /// Sorted original labels of `vertices`.
    pub fn labels_of(&self, vertices: &[u32]) -> Vec<u64> {
        let mut out: Vec<u64> = vertices.iter().map(|&v| self.label(v)).collect();
        out.sort_unstable();
        out
    }

    /// Maps original labels back to vertex ids.
    pub fn resolve(&self, labels: &[u64]) -> Result<Vec<u32>> {
        let mut by_label: Vec<(u64, u32)> = self
            .labels
            .iter()
            .enumerate()
            .map(|(v, &l)| (l, v as u32))
            .collect();
        by_label.sort_unstable();
        labels
            .iter()
            .map(|l| {
                by_label
                    .binary_search_by_key(l, |&(label, _)| label)
                    .map(|i| by_label[i].1)
                    .map_err(|_| Error::Contract(format!("unknown vertex label {l}")))
            })
            .collect()
    }
}

/// Loads a graph, detecting the format from the extension unless overridden.
pub fn load(path: impl AsRef<Path>, opts: LoadOptions) -> Result<LoadedGraph> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let reader = BufReader::new(file);
    let format = opts.format.unwrap_or_else(|| GraphFormat::from_path(path));
    let mut loaded = match format {
        GraphFormat::EdgeList => read_edge_list(reader, path, opts.base)?,
        GraphFormat::MatrixMarket => read_matrix_market(reader, path)?,
    };
    loaded.name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    loaded.graph.validate()?;
    Ok(loaded)
}

/// Non-comment lines with their 1-based line numbers.
fn data_lines<'a, R: BufRead + 'a>(
    reader: R,
    path: &'a Path,
    first_line: usize,
) -> impl Iterator<Item = Result<(usize, String)>> + 'a {
    reader
        .lines()
        .enumerate()
        .filter_map(move |(i, line)| match line {
            Err(e) => Some(Err(Error::io(path, e))),
            Ok(line) => is_data(&line).then(|| Ok((first_line + i, line.trim().to_string()))),
        })
}

fn is_data(line: &str) -> bool {
    let t = line.trim();
    !t.is_empty() && !t.starts_with('#') && !t.starts_with('%')
}

fn parse_pair(path: &Path, line_no: usize, line: &str) -> Result<(u64, u64, usize)> {
    let err = |msg: String| Error::Parse {
        path: path.to_path_buf(),
        line: line_no,
        msg,
    };
    let mut tokens = line.split_whitespace();
    let mut next = |what: &str| -> Result<u64> {
        let tok = tokens
            .next()
            .ok_or_else(|| err(format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| err(format!("invalid {what} {tok:?}")))
    };
    let u = next("first vertex")?;
    let v = next("second vertex")?;
    Ok((u, v, 2 + tokens.count()))
}

pub fn read_edge_list<R: BufRead>(reader: R, path: &Path, base: IndexBase) -> Result<LoadedGraph> {
    let mut rows: Vec<(usize, u64, u64, usize)> = Vec::new();
    for line in data_lines(reader, path, 1) {
        let (no, text) = line?;
        let (u, v, tokens) = parse_pair(path, no, &text)?;
        rows.push((no, u, v, tokens));
    }
    let header = rows.first().and_then(|&(_, n, m, tokens)| {
        let rest = &rows[1..];
        let max = rest.iter().map(|&(_, u, v, _)| u.max(v)).max();
        let min = rest.iter().map(|&(_, u, v, _)| u.min(v)).min();
        let fits = match (min, max) {
            (Some(min), Some(max)) => max < n || (min >= 1 && max == n),
            // a lone line is a header only if it declares no edges
            _ => m == 0,
        };
        (tokens == 2 && fits).then_some(n)
    });
    let (n, labels, edges) = match header {
        Some(n) => {
            let rest = &rows[1..];
            let max = rest.iter().map(|&(_, u, v, _)| u.max(v)).max();
            let min = rest.iter().map(|&(_, u, v, _)| u.min(v)).min().unwrap_or(0);
            let shift = match base {
                IndexBase::Zero => 0,
                IndexBase::One => 1,
                IndexBase::Auto => u64::from(max == Some(n) && min >= 1),
            };
            let n_usize = usize::try_from(n).map_err(|_| Error::Format {
                path: path.to_path_buf(),
                msg: format!("vertex count {n} is too large"),
            })?;
            let edges = shifted_edges(path, rest, shift, n)?;
            let labels = (0..n).map(|v| v + shift).collect();
            (n_usize, labels, edges)
        }
        None => match base {
            IndexBase::Auto => {
                let mut labels: Vec<u64> = rows.iter().flat_map(|&(_, u, v, _)| [u, v]).collect();
                labels.sort_unstable();
                labels.dedup();
                let id = |l: u64| labels.binary_search(&l).unwrap() as u32;
                let edges = rows.iter().map(|&(_, u, v, _)| (id(u), id(v))).collect();
                (labels.len(), labels, edges)
            }
            IndexBase::Zero | IndexBase::One => {
                let shift = u64::from(base == IndexBase::One);
                let max = rows.iter().map(|&(_, u, v, _)| u.max(v)).max();
                let n = match max {
                    Some(max) => max + 1 - shift,
                    None => 0,
                };
                let edges = shifted_edges(path, &rows, shift, n)?;
                (n as usize, (0..n).map(|v| v + shift).collect(), edges)
            }
        },
    };
    if n > u32::MAX as usize {
        return Err(Error::Format {
            path: path.to_path_buf(),
            msg: format!("{n} vertices exceed the supported maximum"),
        });
    }
    Ok(LoadedGraph {
        graph: Graph::from_edges(n, edges)?,
        labels,
        name: String::new(),
    })
}

fn shifted_edges(
    path: &Path,
    rows: &[(usize, u64, u64, usize)],
    shift: u64,
    n: u64,
) -> Result<Vec<(u32, u32)>> {
    rows.iter()
        .map(|&(no, u, v, _)| {
            let map = |x: u64| {
                x.checked_sub(shift)
                    .filter(|&y| y < n)
                    .map(|y| y as u32)
                    .ok_or_else(|| Error::Parse {
                        path: path.to_path_buf(),
                        line: no,
                        msg: format!("vertex {x} outside {}..{}", shift, n + shift),
                    })
            };
            Ok((map(u)?, map(v)?))
        })
        .collect()
}

pub fn read_matrix_market<R: BufRead>(mut reader: R, path: &Path) -> Result<LoadedGraph> {
    let format_err = |msg: String| Error::Format {
        path: path.to_path_buf(),
        msg,
    };
    let mut first = String::new();
    reader
        .read_line(&mut first)
        .map_err(|e| Error::io(path, e))?;
    let banner: Vec<String> = first
        .split_whitespace()
        .map(str::to_ascii_lowercase)
        .collect();
    let mut leading = None;
    if banner.first().map(String::as_str) == Some("%%matrixmarket") {
        if banner.get(1).map(String::as_str) != Some("matrix")
            || banner.get(2).map(String::as_str) != Some("coordinate")
        {
            return Err(format_err(format!(
                "unsupported MatrixMarket banner {:?}",
                first.trim()
            )));
        }
        if banner.get(3).is_some_and(|field| field != "pattern") {
            log::warn!("{}: ignoring {} entry values", path.display(), banner[3]);
        }
    } else if is_data(&first) {
        // No banner: the first line is already content.
        leading = Some(Ok((1, first.trim().to_string())));
    }
    let mut lines = leading.into_iter().chain(data_lines(reader, path, 2));

    let (size_no, size_line) = lines
        .next()
        .ok_or_else(|| format_err("missing size line".into()))??;
    let dims: Vec<u64> = size_line
        .split_whitespace()
        .map(|t| t.parse::<u64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse {
            path: path.to_path_buf(),
            line: size_no,
            msg: format!("invalid size line {size_line:?}"),
        })?;
    let &[rows, cols, nnz] = dims.as_slice() else {
        return Err(Error::Parse {
            path: path.to_path_buf(),
            line: size_no,
            msg: "size line needs rows, columns and entry count".into(),
        });
    };
    if rows != cols {
        return Err(format_err(format!("matrix is {rows} x {cols}, not square")));
    }
    let n = rows;
    let mut edges = Vec::with_capacity(nnz as usize);
    let mut weighted = false;
    for line in lines {
        let (no, text) = line?;
        let (u, v, tokens) = parse_pair(path, no, &text)?;
        weighted |= tokens > 2;
        let map = |x: u64| {
            x.checked_sub(1)
                .filter(|&y| y < n)
                .map(|y| y as u32)
                .ok_or_else(|| Error::Parse {
                    path: path.to_path_buf(),
                    line: no,
                    msg: format!("entry {x} outside 1..={n}"),
                })
        };
        edges.push((map(u)?, map(v)?));
    }
    if edges.len() as u64 != nnz {
        return Err(format_err(format!(
            "declared {nnz} entries, found {}",
            edges.len()
        )));
    }
    if weighted && banner.get(3).is_none() {
        log::warn!("{}: ignoring entry values", path.display());
    }
    Ok(LoadedGraph {
        graph: Graph::from_edges(n as usize, edges)?,
        labels: (1..=n).collect(),
        name: String::new(),
    })
}

/// Writes `graph` as a 0-based edge list with an `n m` header, which
/// [`load`] reads back with isolated vertices intact.
pub fn write_edge_list(graph: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let io = |e| Error::io(path, e);
    let mut out = BufWriter::new(File::create(path).map_err(io)?);
    writeln!(out, "{} {}", graph.n(), graph.m()).map_err(io)?;
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}").map_err(io)?;
    }
    out.flush().map_err(io)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub nodes: u64,
    pub leaves: u64,
    pub rr1: u64,
    pub rr2: u64,
    pub rr3: u64,
    pub ub_prunes: u64,
}

impl From<&SearchStats> for StatsRecord {
    fn from(s: &SearchStats) -> Self {
        StatsRecord {
            nodes: s.nodes_visited,
            leaves: s.leaves,
            rr1: s.rr1_removals,
            rr2: s.rr2_additions,
            rr3: s.rr3_removals,
            ub_prunes: s.ub_prunes,
        }
    }
}

/// One solver run, as written by [`write_solution`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub mode: String,
    pub omega: usize,
    /// Original labels, sorted.
    pub vertices: Vec<u64>,
    pub nonedges_induced: usize,
    pub time_sec: f64,
    pub timed_out: bool,
    pub stats: StatsRecord,
}

impl SolutionRecord {
    pub fn new(loaded: &LoadedGraph, cfg: &SolverConfig, outcome: &SolveOutcome) -> Result<Self> {
        Self::from_solution(loaded, cfg, &outcome.solution, &outcome.stats)
    }

    pub fn from_solution(
        loaded: &LoadedGraph,
        cfg: &SolverConfig,
        solution: &Solution,
        stats: &SearchStats,
    ) -> Result<Self> {
        let graph = &loaded.graph;
        Ok(SolutionRecord {
            graph: loaded.name.clone(),
            n: graph.n(),
            m: graph.m(),
            k: cfg.k,
            mode: cfg.mode.to_string(),
            omega: solution.size(),
            vertices: loaded.labels_of(&solution.sorted_vertices()),
            nonedges_induced: graph.non_edge_count(solution.vertices())?,
            time_sec: stats.elapsed.as_secs_f64(),
            timed_out: stats.timed_out,
            stats: StatsRecord::from(stats),
        })
    }

    pub fn to_json_line(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}

/// Writes `record` as a single JSON line.
pub fn write_solution(record: &SolutionRecord, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let io = |e| Error::io(path, e);
    let mut out = BufWriter::new(File::create(path).map_err(io)?);
    writeln!(out, "{}", record.to_json_line()?).map_err(io)?;
    out.flush().map_err(io)
}

pub fn read_solution(path: impl AsRef<Path>) -> Result<SolutionRecord> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    Ok(serde_json::from_reader(BufReader::new(file))?)
}

/// Graph files in `dir`, sorted by name.
pub fn list_graph_files(dir: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let dir = dir.as_ref();
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
        let path = entry.map_err(|e| Error::io(dir, e))?.path();
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
        if path.is_file() && ["txt", "edges", "mtx"].contains(&ext) {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::solver::solve;
    use std::io::Cursor;

    fn edge_list(text: &str, base: IndexBase) -> Result<LoadedGraph> {
        read_edge_list(Cursor::new(text), Path::new("test.edges"), base)
    }

    fn mtx(text: &str) -> Result<LoadedGraph> {
        read_matrix_market(Cursor::new(text), Path::new("test.mtx"))
    }

    #[test]
    fn triangle() {
        let g = edge_list("1 2\n2 3\n3 1\n", IndexBase::Auto).unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (3, 3));
        assert_eq!(g.labels, vec![1, 2, 3]);
    }

    #[test]
    fn cleaning() {
        let g = edge_list("# comment\n1 2\n2 1\n1 2\n2 2\n", IndexBase::Auto).unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (2, 1));
        let g = edge_list("% other comment\n\n0 1 0.5 extra\n", IndexBase::Auto).unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (2, 1));
    }

    #[test]
    fn headers() {
        // one-based: ids reach n
        let g = edge_list("4 2\n1 2\n2 4\n", IndexBase::Auto).unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (4, 2));
        assert_eq!(g.labels, vec![1, 2, 3, 4]);
        assert!(g.graph.has_edge(0, 1));
        // ids below n are read as 0-based, leaving 0 isolated
        let g = edge_list("4 2\n1 2\n2 3\n", IndexBase::Auto).unwrap();
        assert_eq!(g.labels, vec![0, 1, 2, 3]);
        assert_eq!(g.graph.degree(0), 0);
        let g = edge_list("4 2\n1 2\n2 3\n", IndexBase::One).unwrap();
        assert_eq!(g.labels, vec![1, 2, 3, 4]);
        // header-only file
        let g = edge_list("5 0\n", IndexBase::Auto).unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (5, 0));
        // zero-based
        let g = edge_list("5 2\n0 1\n3 4\n", IndexBase::Auto).unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (5, 2));
        assert!(g.graph.has_edge(3, 4));
        // "2 5" cannot be a header because 7 >= 2
        let g = edge_list("2 5\n5 7\n", IndexBase::Auto).unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (3, 2));
        assert_eq!(g.labels, vec![2, 5, 7]);
        // three tokens is never a header
        let g = edge_list("3 2 1\n0 1\n", IndexBase::Auto).unwrap();
        assert_eq!(g.graph.m(), 2);
    }

    #[test]
    fn explicit_base() {
        let g = edge_list("1 2\n", IndexBase::Zero).unwrap();
        assert_eq!(g.graph.n(), 3);
        assert_eq!(g.labels, vec![0, 1, 2]);
        let g = edge_list("1 2\n", IndexBase::One).unwrap();
        assert_eq!(g.graph.n(), 2);
        assert!(edge_list("0 1\n", IndexBase::One).is_err());
    }

    #[test]
    fn non_contiguous_labels() {
        let g = edge_list("7 100\n7 42\n", IndexBase::Auto).unwrap();
        assert_eq!(g.labels, vec![7, 42, 100]);
        assert!(g.graph.has_edge(0, 2));
        assert_eq!(g.resolve(&[42, 100]).unwrap(), vec![1, 2]);
        assert!(g.resolve(&[8]).is_err());
        assert_eq!(g.labels_of(&[2, 0]), vec![7, 100]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match edge_list("# c\n1 2\n3 x\n", IndexBase::Auto) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match edge_list("1 2\n5\n", IndexBase::Auto) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn matrix_market() {
        let text =
            "%%MatrixMarket matrix coordinate pattern symmetric\n% c\n3 3 3\n1 2\n2 3\n3 1\n";
        let g = mtx(text).unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (3, 3));
        assert_eq!(g.labels, vec![1, 2, 3]);
        let weighted =
            "%%MatrixMarket matrix coordinate real general\n4 4 3\n1 2 0.5\n2 1 0.5\n4 4 1\n";
        let g = mtx(weighted).unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (4, 1));
        let bare = "% no banner\n2 2 1\n1 2\n";
        assert_eq!(mtx(bare).unwrap().graph.m(), 1);
    }

    #[test]
    fn matrix_market_errors() {
        let non_square = "%%MatrixMarket matrix coordinate pattern general\n3 4 1\n1 2\n";
        assert!(matches!(mtx(non_square), Err(Error::Format { .. })));
        let out_of_range = "%%MatrixMarket matrix coordinate pattern general\n3 3 1\n1 4\n";
        assert!(matches!(
            mtx(out_of_range),
            Err(Error::Parse { line: 3, .. })
        ));
        let short = "%%MatrixMarket matrix coordinate pattern general\n3 3 2\n1 2\n";
        assert!(matches!(mtx(short), Err(Error::Format { .. })));
        let array = "%%MatrixMarket matrix array real general\n2 2\n1\n0\n0\n1\n";
        assert!(matches!(mtx(array), Err(Error::Format { .. })));
    }

    #[test]
    fn round_trip_preserves_two_cluster() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("two_cluster.edges");
        let g = fixtures::two_cluster();
        write_edge_list(&g, &path).unwrap();
        let loaded = load(&path, LoadOptions::default()).unwrap();
        assert_eq!(loaded.name, "two_cluster");
        assert_eq!(
            loaded.graph.edges().collect::<Vec<_>>(),
            g.edges().collect::<Vec<_>>()
        );
        let out = solve(&loaded.graph, &SolverConfig::new(2)).unwrap();
        assert_eq!(out.solution.size(), 5);
        // writing the reloaded graph gives the same file
        let again = dir.path().join("again.edges");
        write_edge_list(&loaded.graph, &again).unwrap();
        assert_eq!(
            std::fs::read(&path).unwrap(),
            std::fs::read(&again).unwrap()
        );
    }

    #[test]
    fn isolated_vertices_survive_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.txt");
        let g = Graph::from_edges(5, [(1, 2)]).unwrap();
        write_edge_list(&g, &path).unwrap();
        let loaded = load(&path, LoadOptions::default()).unwrap();
        assert_eq!((loaded.graph.n(), loaded.graph.m()), (5, 1));
    }

    #[test]
    fn solution_records() {
        let dir = tempfile::tempdir().unwrap();
        let graph_path = dir.path().join("two_cluster.txt");
        std::fs::write(&graph_path, "7 8\n8 9\n").unwrap();
        let loaded = load(&graph_path, LoadOptions::default()).unwrap();
        let cfg = SolverConfig::new(0);
        let out = solve(&loaded.graph, &cfg).unwrap();
        let record = SolutionRecord::new(&loaded, &cfg, &out).unwrap();
        assert_eq!(record.omega, 2);
        assert_eq!(record.nonedges_induced, 0);
        assert!(record.vertices == vec![7, 8] || record.vertices == vec![8, 9]);
        let path = dir.path().join("sol.json");
        write_solution(&record, &path).unwrap();
        assert_eq!(read_solution(&path).unwrap(), record);
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 1);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        for key in [
            "graph",
            "n",
            "m",
            "k",
            "mode",
            "omega",
            "vertices",
            "nonedges_induced",
            "time_sec",
            "timed_out",
            "stats",
        ] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
        for key in ["nodes", "leaves", "rr1", "rr2", "rr3", "ub_prunes"] {
            assert!(value["stats"].get(key).is_some(), "missing stats.{key}");
        }
    }

    #[test]
    fn format_detection() {
        assert_eq!(
            GraphFormat::from_path(Path::new("a.mtx")),
            GraphFormat::MatrixMarket
        );
        assert_eq!(
            GraphFormat::from_path(Path::new("a.edges")),
            GraphFormat::EdgeList
        );
        assert_eq!(
            GraphFormat::from_path(Path::new("a.txt")),
            GraphFormat::EdgeList
        );
        assert_eq!(
            "mtx".parse::<GraphFormat>().unwrap(),
            GraphFormat::MatrixMarket
        );
    }
}
