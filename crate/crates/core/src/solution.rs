use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A verified k-defective clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    vertices: VertexSet,
    k: usize,
}

impl Solution {
    /// The empty solution, feasible for every `k`.
    pub fn empty(k: usize) -> Self {
        Solution {
            vertices: VertexSet::new(),
            k,
        }
    }

    /// Wraps `vertices` after checking that it is a k-defective clique of `graph`.
    pub fn verified(graph: &Graph, vertices: VertexSet, k: usize) -> Result<Self> {
        let missing = graph.non_edge_count(&vertices)?;
        if missing > k {
            return Err(Error::Contract(format!(
                "vertex set misses {missing} edges, more than k = {k}"
            )));
        }
        Ok(Solution { vertices, k })
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn sorted_vertices(&self) -> Vec<u32> {
        self.vertices.to_sorted_vec()
    }
}
