//! Immutable simple undirected graphs in compressed sorted-adjacency form,
//! vertex sets, and non-edge accounting.

use crate::error::{Error, Result};

/// Graphs with at most this many vertices also carry a dense adjacency
/// bitmap so that `has_edge` is a single bit test.
pub const DENSE_THRESHOLD: usize = 2048;

/// Row-major adjacency bitmap.
#[derive(Clone, Debug)]
struct AdjMatrix {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl AdjMatrix {
    fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        AdjMatrix {
            words_per_row,
            bits: vec![0; words_per_row * n],
        }
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words_per_row + v / 64] |= 1 << (v % 64);
    }

    #[inline]
    fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }
}

/// Simple undirected graph over vertex ids `0..n`.
///
/// Neighbor lists are strictly sorted, symmetric and free of self-loops.
#[derive(Clone, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    max_degree: usize,
    dense: Option<AdjMatrix>,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops are dropped and
    /// duplicate or reversed edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x as usize >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: x as u64,
                        n,
                    });
                }
            }
            if u != v {
                pairs.push((u, v));
                pairs.push((v, u));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &pairs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = pairs.into_iter().map(|(_, v)| v).collect();
        Ok(Self::from_csr(offsets, targets))
    }

    /// Builds a graph from per-vertex neighbor lists that already satisfy
    /// the graph invariants (sorted, symmetric, loop-free).
    pub(crate) fn from_csr(offsets: Vec<usize>, targets: Vec<u32>) -> Self {
        let n = offsets.len() - 1;
        let max_degree = (0..n)
            .map(|u| offsets[u + 1] - offsets[u])
            .max()
            .unwrap_or(0);
        let dense = (n <= DENSE_THRESHOLD && n > 0).then(|| {
            let mut mat = AdjMatrix::new(n);
            for u in 0..n {
                for &v in &targets[offsets[u]..offsets[u + 1]] {
                    mat.set(u, v as usize);
                }
            }
            mat
        });
        Graph {
            offsets,
            targets,
            max_degree,
            dense,
        }
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_csr(vec![0; n + 1], Vec::new())
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let n32 = n as u32;
        let edges = (0..n32).flat_map(|u| (u + 1..n32).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("ids in range")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    #[inline]
    pub fn neighbors(&self, u: u32) -> &[u32] {
        let u = u as usize;
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }

    #[inline]
    pub fn degree(&self, u: u32) -> usize {
        let u = u as usize;
        self.offsets[u + 1] - self.offsets[u]
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        match &self.dense {
            Some(mat) => mat.get(u as usize, v as usize),
            None => self.neighbors(u).binary_search(&v).is_ok(),
        }
    }

    /// Whether this graph carries the dense adjacency bitmap.
    pub fn is_dense(&self) -> bool {
        self.dense.is_some()
    }

    /// Iterates every undirected edge once as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.n() as u32).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Checks symmetry, sortedness and simplicity of the adjacency lists.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let mut total = 0usize;
        for u in 0..n as u32 {
            let nbrs = self.neighbors(u);
            total += nbrs.len();
            for w in nbrs.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidGraph(format!(
                        "neighbor list of {u} not strictly sorted"
                    )));
                }
            }
            for &v in nbrs {
                if v as usize >= n {
                    return Err(Error::InvalidGraph(format!(
                        "neighbor {v} of {u} out of range"
                    )));
                }
                if v == u {
                    return Err(Error::InvalidGraph(format!("self-loop at {u}")));
                }
                if self.neighbors(v).binary_search(&u).is_err() {
                    return Err(Error::InvalidGraph(format!("edge ({u},{v}) not symmetric")));
                }
            }
        }
        if total % 2 != 0 || total / 2 != self.m() {
            return Err(Error::InvalidGraph("edge count mismatch".into()));
        }
        if self.max_degree != (0..n as u32).map(|u| self.degree(u)).max().unwrap_or(0) {
            return Err(Error::InvalidGraph("max degree mismatch".into()));
        }
        Ok(())
    }

    /// Number of unordered vertex pairs of `set` that are not joined by an edge.
    pub fn non_edge_count(&self, set: &VertexSet) -> Result<usize> {
        self.check_set(set)?;
        let s = set.len();
        let mut inner = 0usize;
        for &u in set.iter() {
            inner += self
                .neighbors(u)
                .iter()
                .filter(|&&v| set.contains(v))
                .count();
        }
        Ok(s * s.saturating_sub(1) / 2 - inner / 2)
    }

    /// Whether `set` misses at most `k` edges from being a clique.
    pub fn is_k_defective(&self, set: &VertexSet, k: usize) -> Result<bool> {
        Ok(self.non_edge_count(set)? <= k)
    }

    /// The subgraph induced by `set`. Vertex `i` of the result corresponds
    /// to `mapping[i]` of `self`, where `mapping` lists `set` in sorted order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<u32>)> {
        self.check_set(set)?;
        let mapping = set.to_sorted_vec();
        let mut local = vec![u32::MAX; self.n()];
        for (i, &v) in mapping.iter().enumerate() {
            local[v as usize] = i as u32;
        }
        let mut offsets = Vec::with_capacity(mapping.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for &v in &mapping {
            // Neighbor lists are sorted and `mapping` is monotone, so the
            // filtered local ids stay sorted.
            targets.extend(
                self.neighbors(v)
                    .iter()
                    .map(|&w| local[w as usize])
                    .filter(|&w| w != u32::MAX),
            );
            offsets.push(targets.len());
        }
        Ok((Graph::from_csr(offsets, targets), mapping))
    }

    fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.iter().copied().find(|&v| v as usize >= self.n()) {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v as u64,
                n: self.n(),
            }),
            None => Ok(()),
        }
    }
}

/// Set of vertex ids with O(1) membership; iteration follows insertion order.
#[derive(Clone, Debug, Default)]
pub struct VertexSet {
    members: Vec<u32>,
    mask: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set from `ids`, rejecting duplicates and ids `>= n`.
    pub fn from_slice(n: usize, ids: &[u32]) -> Result<Self> {
        let mut set = VertexSet::new();
        for &v in ids {
            if v as usize >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v as u64,
                    n,
                });
            }
            if !set.insert(v) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        Ok(set)
    }

    /// Inserts `v`; returns false if it was already present.
    pub fn insert(&mut self, v: u32) -> bool {
        let word = v as usize / 64;
        if word >= self.mask.len() {
            self.mask.resize(word + 1, 0);
        }
        let bit = 1u64 << (v % 64);
        if self.mask[word] & bit != 0 {
            return false;
        }
        self.mask[word] |= bit;
        self.members.push(v);
        true
    }

    #[inline]
    pub fn contains(&self, v: u32) -> bool {
        self.mask
            .get(v as usize / 64)
            .is_some_and(|w| w >> (v % 64) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.members
    }

    pub fn to_sorted_vec(&self) -> Vec<u32> {
        let mut v = self.members.clone();
        v.sort_unstable();
        v
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.iter().all(|&v| other.contains(v))
    }
}

impl Eq for VertexSet {}

impl FromIterator<u32> for VertexSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        let mut set = VertexSet::new();
        for v in iter {
            set.insert(v);
        }
        set
    }
}
