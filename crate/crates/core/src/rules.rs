//! Reduction rules, the branching rule and the degree-sequence upper bound.
//!
//! * RR1 (excess removal): drop `u` when `|Ē(S ∪ u)| > k`.
//! * RR2 (high degree): move `u` into `S` when `|Ē(S ∪ u)| <= k` and
//!   `d_g(u) >= |V(g)| - 2`.
//! * RR3 (degree sequence): drop `u` when the degree-sequence bound of
//!   `(g, S ∪ u)` cannot exceed the incumbent size.

use crate::error::{Error, Result};
use crate::instance::Instance;

/// Vertices touched by one reduction pass.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Reduced {
    pub removed: usize,
    pub added: usize,
}

/// One RR1 pass. Returns the removed vertices.
pub fn apply_rr1(inst: &mut Instance<'_>, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    rr1_pass(inst, k, Some(&mut out));
    out
}

/// One RR2 pass in ascending id order. Returns the vertices added to `S`.
///
/// Adding a vertex changes neither `V(g)` nor any degree, and `|Ē(S)|` only
/// grows, so a single pass leaves no RR2-eligible vertex behind.
pub fn apply_rr2(inst: &mut Instance<'_>, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    rr2_pass(inst, k, Some(&mut out));
    out
}

/// Applies RR1 then RR2 repeatedly until neither changes the instance.
pub fn reduce(inst: &mut Instance<'_>, k: usize) -> Reduced {
    let mut total = Reduced::default();
    loop {
        total.removed += rr1_pass(inst, k, None);
        let added = rr2_pass(inst, k, None);
        total.added += added;
        // RR1 only reacts to changes of S.
        if added == 0 {
            return total;
        }
    }
}

fn rr1_pass(inst: &mut Instance<'_>, k: usize, mut log: Option<&mut Vec<u32>>) -> usize {
    let base = inst.nonedges_in_solution();
    let mut removed = 0;
    for i in 0..inst.candidates().len() {
        let u = inst.candidates()[i];
        if base + inst.nonneighbors_in_solution(u) > k {
            inst.drop_vertex(u);
            removed += 1;
            if let Some(log) = log.as_deref_mut() {
                log.push(u);
            }
        }
    }
    if removed > 0 {
        inst.compact();
    }
    removed
}

fn rr2_pass(inst: &mut Instance<'_>, k: usize, mut log: Option<&mut Vec<u32>>) -> usize {
    let threshold = inst.num_vertices().saturating_sub(2);
    let mut added = 0;
    for i in 0..inst.candidates().len() {
        let u = inst.candidates()[i];
        if inst.degree_in_graph(u) >= threshold
            && inst.nonedges_in_solution() + inst.nonneighbors_in_solution(u) <= k
        {
            inst.push_solution(u);
            added += 1;
            if let Some(log) = log.as_deref_mut() {
                log.push(u);
            }
        }
    }
    if added > 0 {
        inst.compact();
    }
    added
}

/// Picks the candidate with the most non-neighbors in `S`, ties broken by
/// smallest id. When no candidate has a non-neighbor in `S` this is simply
/// the smallest candidate.
pub fn select_branching_vertex(inst: &Instance<'_>) -> Result<u32> {
    let mut best: Option<(usize, u32)> = None;
    for &u in inst.candidates() {
        let c = inst.nonneighbors_in_solution(u);
        // candidates are ascending, so strict > keeps the smallest id on ties
        if best.is_none_or(|(bc, _)| c > bc) {
            best = Some((c, u));
        }
    }
    best.map(|(_, u)| u)
        .ok_or_else(|| Error::Contract("no candidate to branch on".into()))
}

/// Degree-sequence upper bound: `|S|` plus the longest prefix of candidates,
/// taken in non-decreasing order of `|N̄_S(·)|`, whose counts fit into the
/// remaining budget `k - |Ē(S)|`.
pub fn degree_sequence_ub(inst: &Instance<'_>, k: usize) -> usize {
    let s = inst.solution().len();
    let Some(mut budget) = k.checked_sub(inst.nonedges_in_solution()) else {
        return s;
    };
    // Counts above the budget can never be taken.
    let mut hist = vec![0usize; budget + 1];
    for &u in inst.candidates() {
        let c = inst.nonneighbors_in_solution(u);
        if c <= budget {
            hist[c] += 1;
        }
    }
    let mut taken = hist[0];
    for (c, &cnt) in hist.iter().enumerate().skip(1) {
        if budget < c {
            break;
        }
        let fit = cnt.min(budget / c);
        taken += fit;
        budget -= fit * c;
        if fit < cnt {
            break;
        }
    }
    s + taken
}

/// Degree-sequence reduction. Processes candidates in non-decreasing order of
/// `|N̄_S(·)|` (stable in id order) and removes each `u` whose bound for
/// `(g, S ∪ u)` is at most `lb`, judged against the vertices still present.
/// If fewer than `lb - |S|` candidates would remain besides `u`, every
/// candidate is removed. Runs in `O(|V(g)| + |E(g)|)` time.
///
/// Requires `|S| < lb < |V(g)|`. Returns the removed vertices.
pub fn apply_rr3(inst: &mut Instance<'_>, k: usize, lb: usize) -> Result<Vec<u32>> {
    let s = inst.solution().len();
    if !(s < lb && lb < inst.num_vertices()) {
        return Err(Error::Contract(format!(
            "degree-sequence reduction needs |S| < lb < |V(g)|, got |S| = {s}, lb = {lb}, |V(g)| = {}",
            inst.num_vertices()
        )));
    }
    let doomed = rr3_decide(inst, k, lb - s, None);
    for &u in &doomed {
        inst.drop_vertex(u);
    }
    if !doomed.is_empty() {
        inst.compact();
    }
    Ok(doomed)
}

/// Outcome of one step of the degree-sequence reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rr3Decision {
    /// The vertex passed its test and joined the kept list.
    Kept { lhs: usize },
    /// The vertex failed its test: the left-hand side exceeded `k`.
    Removed { lhs: usize },
    /// Too few vertices were left to beat `lb`, so everything still present
    /// was removed, including vertices kept earlier.
    Exhausted,
}

/// Runs the degree-sequence reduction without modifying `inst` and reports
/// every decision in processing order.
pub fn rr3_trace(inst: &Instance<'_>, k: usize, lb: usize) -> Result<Vec<(u32, Rr3Decision)>> {
    let s = inst.solution().len();
    if !(s < lb && lb < inst.num_vertices()) {
        return Err(Error::Contract(format!(
            "degree-sequence reduction needs |S| < lb < |V(g)|, got |S| = {s}, lb = {lb}, |V(g)| = {}",
            inst.num_vertices()
        )));
    }
    let mut trace = Vec::new();
    rr3_decide(inst, k, lb - s, Some(&mut trace));
    Ok(trace)
}

const UNPROCESSED: u8 = 1;
const KEPT: u8 = 2;
const DROPPED: u8 = 3;

fn rr3_decide(
    inst: &Instance<'_>,
    k: usize,
    r: usize,
    mut trace: Option<&mut Vec<(u32, Rr3Decision)>>,
) -> Vec<u32> {
    let graph = inst.graph();
    let cands = inst.candidates();
    let len = cands.len();
    let count = |u: u32| inst.nonneighbors_in_solution(u);
    let base = inst.nonedges_in_solution();

    // Counting sort, stable in candidate (id) order.
    let max_c = cands.iter().map(|&u| count(u)).max().unwrap_or(0);
    // first_at_least[c] = first sorted index whose count is >= c
    let mut first_at_least = vec![0usize; max_c + 2];
    for &u in cands {
        first_at_least[count(u) + 1] += 1;
    }
    for c in 0..=max_c {
        first_at_least[c + 1] += first_at_least[c];
    }
    let mut sorted = vec![0u32; len];
    let mut phase = vec![0u8; graph.n()];
    let mut pos = vec![0u32; graph.n()];
    {
        let mut next = first_at_least.clone();
        for &u in cands {
            let c = count(u);
            sorted[next[c]] = u;
            pos[u as usize] = next[c] as u32;
            phase[u as usize] = UNPROCESSED;
            next[c] += 1;
        }
    }
    let unprocessed_below = |c: usize, i: usize| -> usize {
        let start = if c > max_c { len } else { first_at_least[c] };
        start.saturating_sub(i + 1)
    };
    // prefix[j] = sum of counts of sorted[..j]
    let mut prefix = Vec::with_capacity(len + 1);
    prefix.push(0usize);
    for &u in &sorted {
        prefix.push(prefix.last().unwrap() + count(u));
    }

    // Kept vertices X, in processing order (hence sorted by count).
    let mut kept: Vec<u32> = Vec::with_capacity(len);
    let mut kept_prefix = vec![0usize];
    // kept_first[c] = index of the first kept vertex with count >= c,
    // valid for c <= kept_top
    let mut kept_first = vec![0usize; max_c + 2];
    let mut kept_top = 0usize;

    let mut doomed = Vec::new();
    for i in 0..len {
        let u = sorted[i];
        let xl = kept.len();
        if xl + (len - i - 1) < r {
            doomed.extend_from_slice(&kept);
            doomed.extend_from_slice(&sorted[i..]);
            if let Some(trace) = trace {
                let tail = kept.iter().chain(&sorted[i..]);
                trace.extend(tail.map(|&v| (v, Rr3Decision::Exhausted)));
            }
            return doomed;
        }
        let kept_below = |c: usize| if c <= kept_top { kept_first[c] } else { xl };

        // v_r is the r-th vertex of X followed by the unprocessed suffix.
        let (c_r, sum_r) = if r <= xl {
            (count(kept[r - 1]), kept_prefix[r])
        } else {
            let j = i + (r - xl);
            (
                count(sorted[j]),
                kept_prefix[xl] + prefix[j + 1] - prefix[i + 1],
            )
        };
        // Merged positions: D = [0, lo), C1 = [lo, r), C2 = [r, hi).
        let lo = kept_below(c_r) + unprocessed_below(c_r, i);
        let hi = kept_below(c_r + 1) + unprocessed_below(c_r + 1, i);

        let (mut in_d, mut in_c1, mut in_c2) = (0usize, 0usize, 0usize);
        for &w in graph.neighbors(u) {
            let p = match phase[w as usize] {
                KEPT => pos[w as usize] as usize,
                UNPROCESSED => xl + pos[w as usize] as usize - (i + 1),
                _ => continue,
            };
            if p < lo {
                in_d += 1;
            } else if p < r {
                in_c1 += 1;
            } else if p < hi {
                in_c2 += 1;
            }
        }
        let nonnbr_d = lo - in_d;
        let nonnbr_c1 = (r - lo) - in_c1;
        let lhs = base + sum_r + count(u) + nonnbr_d + nonnbr_c1.saturating_sub(in_c2);

        if let Some(trace) = trace.as_deref_mut() {
            let decision = if lhs > k {
                Rr3Decision::Removed { lhs }
            } else {
                Rr3Decision::Kept { lhs }
            };
            trace.push((u, decision));
        }
        if lhs > k {
            phase[u as usize] = DROPPED;
            doomed.push(u);
        } else {
            let c = count(u);
            while kept_top < c {
                kept_top += 1;
                kept_first[kept_top] = xl;
            }
            phase[u as usize] = KEPT;
            pos[u as usize] = xl as u32;
            kept.push(u);
            kept_prefix.push(kept_prefix[xl] + c);
        }
    }
    doomed
}
