//! Exhaustive reference solvers for small graphs.
//!
//! Nothing here shares code with the branch-and-bound search; adjacency is
//! re-encoded as bit masks and every subset is checked directly.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::instance::Instance;
use crate::solution::Solution;

/// Largest graph the oracles accept.
pub const MAX_ORACLE_VERTICES: usize = 30;

fn masks(graph: &Graph, vertices: &[u32]) -> Vec<u32> {
    vertices
        .iter()
        .map(|&u| {
            vertices
                .iter()
                .enumerate()
                .filter(|&(_, &v)| v != u && graph.neighbors(u).contains(&v))
                .fold(0u32, |acc, (j, _)| acc | 1 << j)
        })
        .collect()
}

fn missing_edges(adj: &[u32], set: u32) -> usize {
    let size = set.count_ones() as usize;
    let mut twice = 0;
    let mut rest = set;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        twice += size - 1 - (adj[u] & set).count_ones() as usize;
    }
    twice / 2
}

/// Next integer with the same number of set bits (Gosper's hack).
fn next_combination(x: u32) -> Option<u32> {
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

/// Maximum k-defective clique of `graph` by enumerating subsets from the
/// largest size down, stopping at the first feasible one.
pub fn brute_force_max_kdc(graph: &Graph, k: usize) -> Solution {
    let n = graph.n();
    assert!(
        n <= MAX_ORACLE_VERTICES,
        "oracle limited to {MAX_ORACLE_VERTICES} vertices"
    );
    let all: Vec<u32> = (0..n as u32).collect();
    let adj = masks(graph, &all);
    for size in (1..=n).rev() {
        let first = if size == 32 {
            u32::MAX
        } else {
            (1u32 << size) - 1
        };
        if size * (size - 1) / 2 <= k {
            return to_solution(graph, first, k);
        }
        let limit = if n == 32 { u64::MAX } else { 1u64 << n };
        let mut set = first;
        loop {
            if missing_edges(&adj, set) <= k {
                return to_solution(graph, set, k);
            }
            match next_combination(set) {
                Some(next) if (next as u64) < limit => set = next,
                _ => break,
            }
        }
    }
    Solution::empty(k)
}

fn to_solution(graph: &Graph, set: u32, k: usize) -> Solution {
    let vertices: VertexSet = (0..32u32).filter(|&i| set >> i & 1 == 1).collect();
    Solution::verified(graph, vertices, k).expect("oracle witness is feasible")
}

/// Size of the largest k-defective clique of the working graph of `inst`
/// that contains its partial solution.
pub fn brute_force_instance_opt(inst: &Instance<'_>, k: usize) -> Result<usize> {
    let graph = inst.graph();
    let vertices = inst.vertices();
    if vertices.len() > MAX_ORACLE_VERTICES {
        return Err(Error::Contract(format!(
            "oracle limited to {MAX_ORACLE_VERTICES} vertices"
        )));
    }
    let adj = masks(graph, &vertices);
    let solution_mask = vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| inst.solution().contains(v))
        .fold(0u32, |acc, (j, _)| acc | 1 << j);
    if missing_edges(&adj, solution_mask) > k {
        return Err(Error::Contract(
            "partial solution is not k-defective".into(),
        ));
    }
    let free: Vec<u32> = (0..vertices.len() as u32)
        .filter(|&j| solution_mask >> j & 1 == 0)
        .collect();
    let mut best = solution_mask.count_ones() as usize;
    for pick in 0u32..(1u32 << free.len()) {
        let extra = free
            .iter()
            .enumerate()
            .filter(|&(i, _)| pick >> i & 1 == 1)
            .fold(0u32, |acc, (_, &j)| acc | 1 << j);
        let set = solution_mask | extra;
        let size = set.count_ones() as usize;
        if size > best && missing_edges(&adj, set) <= k {
            best = size;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    /// Textbook maximum clique by exhaustive recursion.
    fn max_clique(g: &Graph) -> usize {
        fn grow(g: &Graph, clique: &mut Vec<u32>, next: u32, best: &mut usize) {
            *best = (*best).max(clique.len());
            for v in next..g.n() as u32 {
                if clique.iter().all(|&c| g.has_edge(c, v)) {
                    clique.push(v);
                    grow(g, clique, v + 1, best);
                    clique.pop();
                }
            }
        }
        let mut best = 0;
        grow(g, &mut Vec::new(), 0, &mut best);
        best
    }

    #[test]
    fn fixture_graphs() {
        let g1 = fixtures::seven_vertex();
        assert_eq!(brute_force_max_kdc(&g1, 2).size(), 6);
        assert_eq!(brute_force_max_kdc(&g1, 0).size(), 4);
        let g2 = fixtures::two_cluster();
        let sol = brute_force_max_kdc(&g2, 2);
        assert_eq!(sol.size(), 5);
        assert!(g2.is_k_defective(sol.vertices(), 2).unwrap());
    }

    #[test]
    fn complete_and_edgeless() {
        for n in 1..8 {
            for k in 0..4 {
                assert_eq!(brute_force_max_kdc(&Graph::complete(n), k).size(), n);
                let expected = (1..=n).rev().find(|s| s * (s - 1) / 2 <= k).unwrap();
                assert_eq!(brute_force_max_kdc(&Graph::empty(n), k).size(), expected);
            }
        }
        assert_eq!(brute_force_max_kdc(&Graph::empty(0), 3).size(), 0);
    }

    #[test]
    fn k_zero_is_maximum_clique() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for round in 0..100 {
            let g = random_graph(&mut rng, 11, [0.2, 0.5, 0.8][round % 3]);
            assert_eq!(brute_force_max_kdc(&g, 0).size(), max_clique(&g));
        }
    }

    #[test]
    fn partial_instance_optimum() {
        let g = fixtures::partial_solution();
        let inst = Instance::new(&g, &fixtures::PARTIAL_S).unwrap();
        let opt = brute_force_instance_opt(&inst, 3).unwrap();
        // s1, s2, s3, u1, u2 miss only s1s2 and s1s3
        assert_eq!(opt, 5);
        assert!(crate::rules::degree_sequence_ub(&inst, 3) >= opt);
    }

    #[test]
    fn instance_opt_edge_cases() {
        let g = fixtures::seven_vertex();
        let all: Vec<u32> = (0..7).collect();
        let inst = Instance::new(&g, &all[..6]).unwrap();
        assert_eq!(brute_force_instance_opt(&inst, 2).unwrap(), 6);
        let full = Instance::with_vertices(&g, &all[..6], &all[..6]).unwrap();
        assert_eq!(brute_force_instance_opt(&full, 2).unwrap(), 6);
        assert!(brute_force_instance_opt(&full, 1).is_err());
    }

    #[test]
    fn instance_opt_matches_superset_filter() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for round in 0..100 {
            let k = round % 4;
            let n = 10;
            let g = random_graph(&mut rng, n, 0.5);
            let vertices: Vec<u32> = (0..n as u32).collect();
            let mut sol = Vec::new();
            for v in 0..n as u32 {
                if rng.gen_bool(0.2) {
                    sol.push(v);
                    if g.non_edge_count(&sol.iter().copied().collect()).unwrap() > k {
                        sol.pop();
                    }
                }
            }
            let inst = Instance::with_vertices(&g, &vertices, &sol).unwrap();
            let mut best = 0;
            for mask in 0u32..1 << n {
                let set: VertexSet = (0..n as u32).filter(|&i| mask >> i & 1 == 1).collect();
                if sol.iter().all(|&s| set.contains(s)) && g.is_k_defective(&set, k).unwrap() {
                    best = best.max(set.len());
                }
            }
            assert_eq!(brute_force_instance_opt(&inst, k).unwrap(), best);
        }
    }

    #[test]
    fn hereditary_consistency() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for round in 0..60 {
            let k = round % 4;
            let g = random_graph(&mut rng, 10, 0.5);
            let base = brute_force_max_kdc(&g, k).size();
            // dropping a vertex never helps
            let keep: VertexSet = (1..10).collect();
            let (smaller, _) = g.induced_subgraph(&keep).unwrap();
            assert!(brute_force_max_kdc(&smaller, k).size() <= base);
            // adding an edge never hurts
            let (u, v) = (rng.gen_range(0..10), rng.gen_range(0..10));
            let denser = Graph::from_edges(10, g.edges().chain([(u, v)])).unwrap();
            assert!(brute_force_max_kdc(&denser, k).size() >= base);
        }
    }
}
