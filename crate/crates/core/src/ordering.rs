//! Degeneracy ordering by bucket-based peeling.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex order in which every vertex has minimum degree in the subgraph
/// induced by itself and the vertices after it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    order: Vec<u32>,
    position: Vec<u32>,
    degeneracy: usize,
}

impl DegeneracyOrdering {
    /// Peels `graph` in O(n + m) time, always removing a vertex of minimum
    /// remaining degree.
    ///
    /// Each degree bucket is a linked list. Buckets start sorted by id and a
    /// vertex whose degree drops is pushed to the front of its new bucket, so
    /// ties go to the most recently demoted vertex, then to the smallest id.
    pub fn compute(graph: &Graph) -> Self {
        const NIL: u32 = u32::MAX;
        let n = graph.n();
        let mut degree: Vec<usize> = (0..n as u32).map(|u| graph.degree(u)).collect();
        let mut head = vec![NIL; graph.max_degree() + 1];
        let mut next = vec![NIL; n];
        let mut prev = vec![NIL; n];
        let push = |head: &mut [u32], next: &mut [u32], prev: &mut [u32], d: usize, u: u32| {
            let h = head[d];
            next[u as usize] = h;
            prev[u as usize] = NIL;
            if h != NIL {
                prev[h as usize] = u;
            }
            head[d] = u;
        };
        for u in (0..n as u32).rev() {
            push(&mut head, &mut next, &mut prev, degree[u as usize], u);
        }

        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut degeneracy = 0;
        let mut level = 0;
        for _ in 0..n {
            while head[level] == NIL {
                level += 1;
            }
            let v = head[level];
            head[level] = next[v as usize];
            if head[level] != NIL {
                prev[head[level] as usize] = NIL;
            }
            removed[v as usize] = true;
            order.push(v);
            degeneracy = degeneracy.max(level);
            for &w in graph.neighbors(v) {
                let wi = w as usize;
                if removed[wi] {
                    continue;
                }
                // unlink w from its bucket
                let d = degree[wi];
                let (p, nx) = (prev[wi], next[wi]);
                if p == NIL {
                    head[d] = nx;
                } else {
                    next[p as usize] = nx;
                }
                if nx != NIL {
                    prev[nx as usize] = p;
                }
                degree[wi] = d - 1;
                push(&mut head, &mut next, &mut prev, d - 1, w);
                level = level.min(d - 1);
            }
        }

        let mut position = vec![0u32; n];
        for (i, &v) in order.iter().enumerate() {
            position[v as usize] = i as u32;
        }
        DegeneracyOrdering {
            order,
            position,
            degeneracy,
        }
    }

    /// Wraps a caller-supplied permutation. The degeneracy is taken as the
    /// largest number of later neighbors, which is only the true degeneracy
    /// when `order` peels minimum-degree vertices first.
    pub fn from_order(graph: &Graph, order: Vec<u32>) -> Result<Self> {
        let n = graph.n();
        if order.len() != n {
            return Err(Error::InvalidGraph(format!(
                "ordering has {} vertices, graph has {n}",
                order.len()
            )));
        }
        let mut position = vec![u32::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v as usize >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v as u64,
                    n,
                });
            }
            if position[v as usize] != u32::MAX {
                return Err(Error::DuplicateVertex(v));
            }
            position[v as usize] = i as u32;
        }
        let mut ord = DegeneracyOrdering {
            order,
            position,
            degeneracy: 0,
        };
        ord.degeneracy = ord.suffix_degrees(graph).into_iter().max().unwrap_or(0);
        Ok(ord)
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    /// Index of `v` in the order.
    pub fn position(&self, v: u32) -> usize {
        self.position[v as usize] as usize
    }

    /// The degeneracy α.
    pub fn degeneracy(&self) -> usize {
        self.degeneracy
    }

    /// α + k + 1, an upper bound on the maximum k-defective clique size.
    pub fn upper_bound(&self, k: usize) -> usize {
        self.degeneracy + k + 1
    }

    /// Degrees of each ordered vertex within its suffix.
    pub fn suffix_degrees(&self, graph: &Graph) -> Vec<usize> {
        self.order
            .iter()
            .map(|&v| {
                let pv = self.position(v);
                graph
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| self.position(w) > pv)
                    .count()
            })
            .collect()
    }
}
