//! Small hand-built graphs used by tests, examples and the CLI self-checks.
//!
//! Labels `v_i` in the docs below are id `i - 1`.

use crate::graph::Graph;

/// Seven vertices: `{v1..v4}` is a maximum clique and `{v1..v6}` a maximum
/// 2-defective clique (missing `v1v5` and `v2v6`).
pub fn seven_vertex() -> Graph {
    let edges = [
        (1, 2),
        (2, 3),
        (3, 6),
        (6, 5),
        (5, 4),
        (4, 1),
        (4, 6),
        (6, 1),
        (1, 3),
        (3, 4),
        (4, 2),
        (2, 5),
        (5, 3),
        (1, 7),
        (7, 2),
    ];
    one_based(7, &edges)
}

/// Fourteen vertices with two disjoint maximum 2-defective cliques of size 5.
pub fn two_cluster() -> Graph {
    let edges = [
        (1, 7),
        (7, 9),
        (9, 10),
        (10, 7),
        (7, 8),
        (8, 9),
        (1, 8),
        (8, 10),
        (10, 5),
        (5, 6),
        (6, 13),
        (13, 14),
        (14, 12),
        (12, 2),
        (2, 11),
        (11, 14),
        (8, 3),
        (3, 4),
        (4, 11),
        (11, 12),
        (12, 13),
        (13, 11),
    ];
    one_based(14, &edges)
}

/// The two maximum 2-defective cliques of [`two_cluster`].
pub const TWO_CLUSTER_WITNESSES: [[u32; 5]; 2] = [[0, 6, 7, 8, 9], [1, 10, 11, 12, 13]];

/// Ids of `s1..s3` in [`partial_solution`].
pub const PARTIAL_S: [u32; 3] = [0, 1, 2];
/// Ids of `u1..u5` in [`partial_solution`].
pub const PARTIAL_U: [u32; 5] = [3, 4, 5, 6, 7];

/// Eight vertices `s1, s2, s3, u1, ..., u5`; with `S = {s1, s2, s3}` the
/// non-neighbor counts in `S` are `u1: 0, u2: 0, u3..u5: 1` and `S` itself
/// induces two non-edges.
pub fn partial_solution() -> Graph {
    const S1: u32 = 0;
    const S2: u32 = 1;
    const S3: u32 = 2;
    const U1: u32 = 3;
    const U2: u32 = 4;
    const U3: u32 = 5;
    const U4: u32 = 6;
    const U5: u32 = 7;
    let edges = [
        (S2, S3),
        (S1, U1),
        (U1, S2),
        (S2, U2),
        (U2, S3),
        (S3, U1),
        (U1, U2),
        (U2, S1),
        (S2, U3),
        (U3, S3),
        (S1, U4),
        (U4, S3),
        (S1, U5),
        (U5, S2),
        (U1, U4),
    ];
    Graph::from_edges(8, edges).expect("fixture ids in range")
}

fn one_based(n: usize, edges: &[(u32, u32)]) -> Graph {
    Graph::from_edges(n, edges.iter().map(|&(u, v)| (u - 1, v - 1))).expect("fixture ids in range")
}
