//! Branch-and-bound search and the two-stage driver.
//!
//! Stage I walks a degeneracy ordering and searches, for each vertex `v`, the
//! subgraph induced by `v`, its later neighbors and their later neighbors,
//! with `v` forced into the solution. Any k-defective clique with at least
//! `k + 2` vertices has diameter at most two, so Stage I finds it from its
//! earliest vertex. Stage II searches the whole graph and only runs when the
//! incumbent is still smaller than `k + 1`.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::instance::Instance;
use crate::ordering::DegeneracyOrdering;
use crate::rules;
use crate::solution::Solution;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Ego searches over the degeneracy ordering, then a full search if needed.
    #[default]
    TwoStage,
    /// A single search over the whole graph.
    FullSearch,
    /// Descending size tests starting from `α + k + 1`.
    DegeneracyGap,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::TwoStage, Mode::FullSearch, Mode::DegeneracyGap];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::TwoStage => "two-stage",
            Mode::FullSearch => "full",
            Mode::DegeneracyGap => "degen-gap",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "two-stage" => Ok(Mode::TwoStage),
            "full" | "full-search" => Ok(Mode::FullSearch),
            "degen-gap" | "degeneracy-gap" => Ok(Mode::DegeneracyGap),
            other => Err(Error::Contract(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub k: usize,
    pub mode: Mode,
    /// Wall-clock budget; `None` means unlimited.
    pub time_limit: Option<Duration>,
    pub enable_rr3: bool,
    /// Only solutions strictly larger than this are searched for.
    pub initial_lb: usize,
}

impl SolverConfig {
    pub fn new(k: usize) -> Self {
        SolverConfig {
            k,
            mode: Mode::TwoStage,
            time_limit: None,
            enable_rr3: true,
            initial_lb: 0,
        }
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn rr3(mut self, enable: bool) -> Self {
        self.enable_rr3 = enable;
        self
    }

    /// Limit in seconds; zero disables the limit.
    pub fn time_limit_secs(mut self, secs: f64) -> Self {
        self.time_limit = (secs > 0.0).then(|| Duration::from_secs_f64(secs));
        self
    }

    pub fn initial_lb(mut self, lb: usize) -> Self {
        self.initial_lb = lb;
        self
    }
}

/// Size of one search tree, for checking the leaf-count bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RootRecord {
    /// Candidates left at the root after the RR1/RR2 fixpoint.
    pub candidates: usize,
    pub leaves: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_visited: u64,
    pub leaves: u64,
    pub rr1_removals: u64,
    pub rr2_additions: u64,
    pub rr3_removals: u64,
    pub ub_prunes: u64,
    /// Ego searches skipped because they could not beat the incumbent.
    pub egos_skipped: u64,
    pub roots: Vec<RootRecord>,
    pub elapsed: Duration,
    pub timed_out: bool,
}

impl SearchStats {
    fn absorb(&mut self, other: SearchStats) {
        self.nodes_visited += other.nodes_visited;
        self.leaves += other.leaves;
        self.rr1_removals += other.rr1_removals;
        self.rr2_additions += other.rr2_additions;
        self.rr3_removals += other.rr3_removals;
        self.ub_prunes += other.ub_prunes;
        self.egos_skipped += other.egos_skipped;
        self.roots.extend(other.roots);
        self.timed_out |= other.timed_out;
    }
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub solution: Solution,
    pub stats: SearchStats,
}

/// The largest root in `(1, 2)` of `x^{k+2} - 2x^{k+1} + 1`.
///
/// `x = 1` is always a root; the polynomial is negative just above the
/// largest root's left neighborhood and equals 1 at `x = 2`.
pub fn beta_k(k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::Contract("beta_k needs k >= 1".into()));
    }
    let p = |x: f64| x.powi(k as i32 + 2) - 2.0 * x.powi(k as i32 + 1) + 1.0;
    // p has one local minimum in (1, 2), at x = 2(k+1)/(k+2), where it is negative.
    let mut lo = 2.0 * (k as f64 + 1.0) / (k as f64 + 2.0);
    let mut hi = 2.0;
    debug_assert!(p(lo) < 0.0);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if p(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// A Stage-I subgraph with its local-to-global vertex map.
#[derive(Clone, Debug)]
pub struct EgoSubgraph {
    pub graph: Graph,
    /// `mapping[local] = global`, ascending.
    pub mapping: Vec<u32>,
    /// Local id of the ego vertex.
    pub center: u32,
}

impl EgoSubgraph {
    /// The root instance `(g, {center})`.
    pub fn instance(&self) -> Instance<'_> {
        Instance::new(&self.graph, &[self.center]).expect("center is a vertex of the ego subgraph")
    }
}

/// Builds the Stage-I subgraph of the `i`-th vertex (0-based) of `ord`.
pub fn extract_ego_instance(
    graph: &Graph,
    ord: &DegeneracyOrdering,
    i: usize,
) -> Result<EgoSubgraph> {
    if i >= graph.n() {
        return Err(Error::VertexOutOfRange {
            vertex: i as u64,
            n: graph.n(),
        });
    }
    let mut ex = EgoExtractor::new(graph.n());
    let members = ex.members(graph, ord, i);
    Ok(ex.build(graph, ord.order()[i], &members))
}

/// Reusable scratch space for ego extraction.
struct EgoExtractor {
    local: Vec<u32>,
}

impl EgoExtractor {
    fn new(n: usize) -> Self {
        EgoExtractor {
            local: vec![u32::MAX; n],
        }
    }

    /// Vertex set of the ego subgraph, sorted by id.
    fn members(&mut self, graph: &Graph, ord: &DegeneracyOrdering, i: usize) -> Vec<u32> {
        let v = ord.order()[i];
        let later = |w: u32| ord.position(w) > i;
        let mut members = vec![v];
        self.local[v as usize] = 0;
        for &a in graph.neighbors(v) {
            if later(a) && self.local[a as usize] == u32::MAX {
                self.local[a as usize] = 0;
                members.push(a);
            }
        }
        let direct = members.len();
        for idx in 1..direct {
            let a = members[idx];
            for &w in graph.neighbors(a) {
                if later(w) && self.local[w as usize] == u32::MAX {
                    self.local[w as usize] = 0;
                    members.push(w);
                }
            }
        }
        for &w in &members {
            self.local[w as usize] = u32::MAX;
        }
        members.sort_unstable();
        members
    }

    fn build(&mut self, graph: &Graph, center: u32, members: &[u32]) -> EgoSubgraph {
        for (i, &v) in members.iter().enumerate() {
            self.local[v as usize] = i as u32;
        }
        let mut offsets = Vec::with_capacity(members.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for &v in members {
            targets.extend(
                graph
                    .neighbors(v)
                    .iter()
                    .map(|&w| self.local[w as usize])
                    .filter(|&w| w != u32::MAX),
            );
            offsets.push(targets.len());
        }
        let center_local = self.local[center as usize];
        for &v in members {
            self.local[v as usize] = u32::MAX;
        }
        EgoSubgraph {
            graph: Graph::from_csr(offsets, targets),
            mapping: members.to_vec(),
            center: center_local,
        }
    }
}

/// Mutable state of one search run.
struct Search {
    k: usize,
    enable_rr3: bool,
    deadline: Option<Instant>,
    /// Only vertex sets larger than this are of interest.
    lb: usize,
    /// Best set found, in global ids.
    best: Option<Vec<u32>>,
    /// Truncated mode: nodes with at most this many vertices are not branched.
    truncate_at: Option<usize>,
    stats: SearchStats,
}

enum Node {
    Leaf,
    Branch,
}

impl Search {
    fn new(k: usize, enable_rr3: bool, deadline: Option<Instant>, lb: usize) -> Self {
        Search {
            k,
            enable_rr3,
            deadline,
            lb,
            best: None,
            truncate_at: None,
            stats: SearchStats::default(),
        }
    }

    fn finished(&self) -> bool {
        self.stats.timed_out || (self.truncate_at.is_some() && self.best.is_some())
    }

    fn out_of_time(&mut self) -> bool {
        if !self.stats.timed_out {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.stats.timed_out = true;
                }
            }
        }
        self.stats.timed_out
    }

    /// Searches one tree rooted at `inst`; `mapping` translates its ids.
    fn run_root(&mut self, inst: Instance<'_>, mapping: Option<&[u32]>) {
        let leaves_before = self.stats.leaves;
        let mut root = RootRecord::default();
        self.branch_and_bound(inst, mapping, Some(&mut root));
        root.leaves = self.stats.leaves - leaves_before;
        self.stats.roots.push(root);
    }

    fn branch_and_bound(
        &mut self,
        mut inst: Instance<'_>,
        mapping: Option<&[u32]>,
        mut root: Option<&mut RootRecord>,
    ) {
        // The exclude branch reuses this frame, so recursion depth is bounded
        // by the number of include steps.
        loop {
            if self.finished() || self.out_of_time() {
                return;
            }
            self.stats.nodes_visited += 1;
            let node = self.reduce_node(&mut inst, mapping, root.take());
            if let Node::Leaf = node {
                self.stats.leaves += 1;
                return;
            }
            let b =
                rules::select_branching_vertex(&inst).expect("an infeasible node has candidates");
            let mut include = inst.clone();
            include
                .add_to_solution(b)
                .expect("branching vertex is a candidate");
            self.branch_and_bound(include, mapping, None);
            inst.remove_vertex(b)
                .expect("branching vertex is a candidate");
        }
    }

    fn reduce_node(
        &mut self,
        inst: &mut Instance<'_>,
        mapping: Option<&[u32]>,
        root: Option<&mut RootRecord>,
    ) -> Node {
        let k = self.k;
        if inst.num_vertices() <= self.lb {
            if let Some(root) = root {
                root.candidates = inst.candidates().len();
            }
            return Node::Leaf;
        }
        self.reduce(inst);
        if let Some(root) = root {
            root.candidates = inst.candidates().len();
        }
        let mut rr3_done = false;
        loop {
            let nv = inst.num_vertices();
            if let Some(tau) = self.truncate_at {
                if nv <= tau {
                    if nv == tau && inst.is_k_defective(k) {
                        self.record(inst, mapping);
                    }
                    return Node::Leaf;
                }
            }
            if inst.is_k_defective(k) {
                if nv > self.lb {
                    self.record(inst, mapping);
                }
                return Node::Leaf;
            }
            if nv <= self.lb {
                return Node::Leaf;
            }
            if rules::degree_sequence_ub(inst, k) <= self.lb {
                self.stats.ub_prunes += 1;
                return Node::Leaf;
            }
            let s = inst.solution().len();
            if !self.enable_rr3 || rr3_done || s >= self.lb {
                return Node::Branch;
            }
            rr3_done = true;
            let removed = rules::apply_rr3(inst, k, self.lb).expect("precondition checked above");
            if removed.is_empty() {
                return Node::Branch;
            }
            self.stats.rr3_removals += removed.len() as u64;
            // Removals lower degrees, which can enable RR2.
            self.reduce(inst);
        }
    }

    fn reduce(&mut self, inst: &mut Instance<'_>) {
        let r = rules::reduce(inst, self.k);
        self.stats.rr1_removals += r.removed as u64;
        self.stats.rr2_additions += r.added as u64;
    }

    fn record(&mut self, inst: &Instance<'_>, mapping: Option<&[u32]>) {
        let vertices = inst.vertices();
        let global: Vec<u32> = match mapping {
            Some(map) => vertices.iter().map(|&v| map[v as usize]).collect(),
            None => vertices,
        };
        if self.truncate_at.is_none() {
            self.lb = global.len();
        }
        self.best = Some(global);
    }
}

/// Searches `(g, S)` for k-defective cliques larger than `best`, replacing
/// `best` whenever a larger one is found.
pub fn branch_and_bound(
    inst: Instance<'_>,
    k: usize,
    best: &mut Solution,
    stats: &mut SearchStats,
) -> Result<()> {
    branch_and_bound_with(inst, k, true, None, best, stats)
}

fn branch_and_bound_with(
    inst: Instance<'_>,
    k: usize,
    enable_rr3: bool,
    deadline: Option<Instant>,
    best: &mut Solution,
    stats: &mut SearchStats,
) -> Result<()> {
    if best.k() != k {
        return Err(Error::Contract(format!(
            "incumbent is for k = {}, not {k}",
            best.k()
        )));
    }
    if inst.nonedges_in_solution() > k {
        return Err(Error::Contract(
            "partial solution is not k-defective".into(),
        ));
    }
    let graph = inst.graph();
    let mut search = Search::new(k, enable_rr3, deadline, best.size());
    search.run_root(inst, None);
    if let Some(found) = search.best.take() {
        *best = Solution::verified(graph, VertexSet::from_slice(graph.n(), &found)?, k)?;
    }
    stats.absorb(search.stats);
    Ok(())
}

/// Finds a maximum k-defective clique of `graph`.
pub fn solve(graph: &Graph, cfg: &SolverConfig) -> Result<SolveOutcome> {
    let start = Instant::now();
    let deadline = cfg.time_limit.map(|t| start + t);
    let mut outcome = match cfg.mode {
        Mode::DegeneracyGap => degeneracy_gap(graph, cfg, deadline)?,
        _ => two_stage(graph, cfg, deadline, cfg.mode == Mode::TwoStage)?,
    };
    outcome.stats.elapsed = start.elapsed();
    Ok(outcome)
}

/// [`solve`] in degeneracy-gap mode.
pub fn solve_degeneracy_gap(graph: &Graph, k: usize) -> Result<SolveOutcome> {
    solve(graph, &SolverConfig::new(k).mode(Mode::DegeneracyGap))
}

/// Whole vertex set when it is trivially feasible.
fn trivial(graph: &Graph, k: usize) -> Option<Solution> {
    let n = graph.n();
    (n * n.saturating_sub(1) / 2 - graph.m() <= k).then(|| {
        Solution::verified(graph, (0..n as u32).collect(), k).expect("whole graph is feasible")
    })
}

fn finish(graph: &Graph, k: usize, search: Search) -> Result<SolveOutcome> {
    let solution = match &search.best {
        Some(found) => Solution::verified(graph, VertexSet::from_slice(graph.n(), found)?, k)?,
        None => Solution::empty(k),
    };
    Ok(SolveOutcome {
        solution,
        stats: search.stats,
    })
}

fn two_stage(
    graph: &Graph,
    cfg: &SolverConfig,
    deadline: Option<Instant>,
    stage_one: bool,
) -> Result<SolveOutcome> {
    let k = cfg.k;
    let mut search = Search::new(k, cfg.enable_rr3, deadline, cfg.initial_lb);
    if graph.n() <= cfg.initial_lb {
        return finish(graph, k, search);
    }
    if let Some(all) = trivial(graph, k) {
        search.best = Some(all.sorted_vertices());
        return finish(graph, k, search);
    }
    if stage_one {
        let ord = DegeneracyOrdering::compute(graph);
        run_stage_one(graph, &ord, &mut search);
    }
    if !search.finished() && (!stage_one || search.lb < k + 1) {
        let inst = Instance::new(graph, &[])?;
        search.run_root(inst, None);
    }
    finish(graph, k, search)
}

fn run_stage_one(graph: &Graph, ord: &DegeneracyOrdering, search: &mut Search) {
    let mut ex = EgoExtractor::new(graph.n());
    for i in 0..graph.n() {
        if search.finished() {
            return;
        }
        let members = ex.members(graph, ord, i);
        // In truncated mode lb = τ - 1, so this also skips egos below τ.
        if members.len() <= search.lb {
            search.stats.egos_skipped += 1;
            continue;
        }
        let ego = ex.build(graph, ord.order()[i], &members);
        search.run_root(ego.instance(), Some(&ego.mapping));
    }
}

/// Looks for a k-defective clique with at least `tau` vertices using the
/// truncated search over Stage-I subgraphs. Requires `tau >= k + 2`.
pub fn test_tau(graph: &Graph, k: usize, tau: usize) -> Result<Option<Solution>> {
    let ord = DegeneracyOrdering::compute(graph);
    let (found, _) = test_tau_with(graph, &ord, k, tau, true, None)?;
    Ok(found)
}

fn test_tau_with(
    graph: &Graph,
    ord: &DegeneracyOrdering,
    k: usize,
    tau: usize,
    enable_rr3: bool,
    deadline: Option<Instant>,
) -> Result<(Option<Solution>, SearchStats)> {
    if tau < k + 2 {
        return Err(Error::Contract(format!(
            "size test needs tau >= k + 2, got tau = {tau}, k = {k}"
        )));
    }
    let mut search = Search::new(k, enable_rr3, deadline, tau - 1);
    search.truncate_at = Some(tau);
    run_stage_one(graph, ord, &mut search);
    let found = match search.best.take() {
        Some(found) => Some(Solution::verified(
            graph,
            VertexSet::from_slice(graph.n(), &found)?,
            k,
        )?),
        None => None,
    };
    Ok((found, search.stats))
}

fn degeneracy_gap(
    graph: &Graph,
    cfg: &SolverConfig,
    deadline: Option<Instant>,
) -> Result<SolveOutcome> {
    let k = cfg.k;
    let n = graph.n();
    if n <= cfg.initial_lb {
        return Ok(SolveOutcome {
            solution: Solution::empty(k),
            stats: SearchStats::default(),
        });
    }
    if let Some(all) = trivial(graph, k) {
        return Ok(SolveOutcome {
            solution: all,
            stats: SearchStats::default(),
        });
    }
    let ord = DegeneracyOrdering::compute(graph);
    let mut stats = SearchStats::default();
    let floor = (k + 2).max(cfg.initial_lb + 1);
    let mut tau = ord.upper_bound(k).min(n);
    while tau >= floor {
        let (found, s) = test_tau_with(graph, &ord, k, tau, cfg.enable_rr3, deadline)?;
        stats.absorb(s);
        if let Some(solution) = found {
            return Ok(SolveOutcome { solution, stats });
        }
        if stats.timed_out {
            return Ok(SolveOutcome {
                solution: Solution::empty(k),
                stats,
            });
        }
        tau -= 1;
    }
    // Below k + 2 the diameter argument no longer applies.
    let mut rest = two_stage(graph, cfg, deadline, true)?;
    stats.absorb(std::mem::take(&mut rest.stats));
    rest.stats = stats;
    Ok(rest)
}
