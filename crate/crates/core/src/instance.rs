//! Branch-and-bound instances `(g, S)` over a fixed root graph.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
enum Membership {
    Removed,
    Candidate,
    Solution,
}

/// A search node: the working vertex set `V(g)` of a root graph, a partial
/// solution `S ⊆ V(g)`, and incrementally maintained counters.
///
/// For every vertex of `V(g)` the instance tracks its degree in `g` and its
/// number of neighbors in `S`; non-neighbor counts are derived as
/// `|S| - |N_S(u)|`.
#[derive(Clone, Debug)]
pub struct Instance<'g> {
    graph: &'g Graph,
    membership: Vec<Membership>,
    nbrs_in_solution: Vec<u32>,
    degree: Vec<u32>,
    solution: Vec<u32>,
    /// Ascending ids; may briefly hold stale entries between `compact` calls.
    candidates: Vec<u32>,
    nonedges_in_solution: usize,
    edges: usize,
}

impl<'g> Instance<'g> {
    /// Instance over all vertices of `graph` with partial solution `solution`.
    pub fn new(graph: &'g Graph, solution: &[u32]) -> Result<Self> {
        let all: Vec<u32> = (0..graph.n() as u32).collect();
        Self::with_vertices(graph, &all, solution)
    }

    /// Instance whose working graph is `graph` induced on `vertices`.
    pub fn with_vertices(graph: &'g Graph, vertices: &[u32], solution: &[u32]) -> Result<Self> {
        let n = graph.n();
        let mut membership = vec![Membership::Removed; n];
        for &v in vertices {
            if v as usize >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v as u64,
                    n,
                });
            }
            if membership[v as usize] != Membership::Removed {
                return Err(Error::DuplicateVertex(v));
            }
            membership[v as usize] = Membership::Candidate;
        }
        let mut degree = vec![0u32; n];
        let mut edges = 0;
        for &v in vertices {
            let d = graph
                .neighbors(v)
                .iter()
                .filter(|&&w| membership[w as usize] != Membership::Removed)
                .count();
            degree[v as usize] = d as u32;
            edges += d;
        }
        let mut candidates = vertices.to_vec();
        candidates.sort_unstable();
        let mut inst = Instance {
            graph,
            membership,
            nbrs_in_solution: vec![0; n],
            degree,
            solution: Vec::with_capacity(solution.len()),
            candidates,
            nonedges_in_solution: 0,
            edges: edges / 2,
        };
        for &s in solution {
            match inst.membership.get(s as usize) {
                Some(Membership::Candidate) => inst.push_solution(s),
                Some(Membership::Solution) => return Err(Error::DuplicateVertex(s)),
                _ => {
                    return Err(Error::Contract(format!(
                        "solution vertex {s} is not in the working graph"
                    )))
                }
            }
        }
        inst.compact();
        Ok(inst)
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// The partial solution `S`, in insertion order.
    pub fn solution(&self) -> &[u32] {
        &self.solution
    }

    /// `V(g) \ S` in ascending id order.
    pub fn candidates(&self) -> &[u32] {
        &self.candidates
    }

    /// `V(g)` as a sorted list.
    pub fn vertices(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self
            .solution
            .iter()
            .chain(self.candidates.iter())
            .copied()
            .collect();
        all.sort_unstable();
        all
    }

    /// `|V(g)|`.
    pub fn num_vertices(&self) -> usize {
        self.solution.len() + self.candidates.len()
    }

    /// `|Ē(S)|`.
    pub fn nonedges_in_solution(&self) -> usize {
        self.nonedges_in_solution
    }

    /// `|N̄_S(u)|` for `u ∈ V(g) \ S`.
    #[inline]
    pub fn nonneighbors_in_solution(&self, u: u32) -> usize {
        self.solution.len() - self.nbrs_in_solution[u as usize] as usize
    }

    /// `d_g(u)`.
    #[inline]
    pub fn degree_in_graph(&self, u: u32) -> usize {
        self.degree[u as usize] as usize
    }

    /// `|E(g)|`.
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// `|Ē(g)|`, the non-edges of the whole working graph.
    pub fn total_nonedges(&self) -> usize {
        let nv = self.num_vertices();
        nv * nv.saturating_sub(1) / 2 - self.edges
    }

    /// Whether `V(g)` itself is a k-defective clique.
    pub fn is_k_defective(&self, k: usize) -> bool {
        self.total_nonedges() <= k
    }

    pub fn is_candidate(&self, u: u32) -> bool {
        self.membership.get(u as usize) == Some(&Membership::Candidate)
    }

    pub fn in_solution(&self, u: u32) -> bool {
        self.membership.get(u as usize) == Some(&Membership::Solution)
    }

    /// Moves candidate `u` into `S`.
    pub fn add_to_solution(&mut self, u: u32) -> Result<()> {
        if !self.is_candidate(u) {
            return Err(Error::Contract(format!("{u} is not a candidate")));
        }
        self.push_solution(u);
        self.compact();
        Ok(())
    }

    /// Removes candidate `u` from `g`.
    pub fn remove_vertex(&mut self, u: u32) -> Result<()> {
        if !self.is_candidate(u) {
            return Err(Error::Contract(format!("{u} is not a candidate")));
        }
        self.drop_vertex(u);
        self.compact();
        Ok(())
    }

    /// Adds a candidate to `S` without compacting the candidate list.
    pub(crate) fn push_solution(&mut self, u: u32) {
        debug_assert_eq!(self.membership[u as usize], Membership::Candidate);
        self.nonedges_in_solution += self.nonneighbors_in_solution(u);
        self.membership[u as usize] = Membership::Solution;
        self.solution.push(u);
        for &w in self.graph.neighbors(u) {
            if self.membership[w as usize] != Membership::Removed {
                self.nbrs_in_solution[w as usize] += 1;
            }
        }
    }

    /// Removes a candidate without compacting the candidate list.
    pub(crate) fn drop_vertex(&mut self, u: u32) {
        debug_assert_eq!(self.membership[u as usize], Membership::Candidate);
        self.membership[u as usize] = Membership::Removed;
        self.edges -= self.degree[u as usize] as usize;
        for &w in self.graph.neighbors(u) {
            if self.membership[w as usize] != Membership::Removed {
                self.degree[w as usize] -= 1;
            }
        }
    }

    /// Drops stale entries from the candidate list.
    pub(crate) fn compact(&mut self) {
        let membership = &self.membership;
        self.candidates
            .retain(|&u| membership[u as usize] == Membership::Candidate);
    }

    /// Recomputes every cached counter from scratch and compares.
    pub fn check_consistency(&self) -> Result<()> {
        let vertices = self.vertices();
        let fresh = Instance::with_vertices(self.graph, &vertices, &self.solution)?;
        let mismatch = |what: &str| Err(Error::Contract(format!("stale cache: {what}")));
        if fresh.nonedges_in_solution != self.nonedges_in_solution {
            return mismatch("|Ē(S)|");
        }
        if fresh.edges != self.edges {
            return mismatch("|E(g)|");
        }
        if fresh.candidates != self.candidates {
            return mismatch("candidate list");
        }
        for &v in &vertices {
            if fresh.degree[v as usize] != self.degree[v as usize] {
                return mismatch("degree");
            }
            if fresh.nbrs_in_solution[v as usize] != self.nbrs_in_solution[v as usize] {
                return mismatch("neighbors in S");
            }
        }
        Ok(())
    }
}
