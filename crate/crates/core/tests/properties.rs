use kdc2::io::{self, LoadOptions};
use kdc2::oracle::{brute_force_instance_opt, brute_force_max_kdc};
use kdc2::rules;
use kdc2::solver::test_tau;
use kdc2::{solve, DegeneracyOrdering, Graph, Instance, Mode, SolverConfig, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph, a working vertex set and a feasible partial solution inside it.
fn instance_strategy(max_n: usize) -> impl Strategy<Value = (Graph, Vec<u32>, Vec<u32>, usize)> {
    (graph_strategy(max_n), 0usize..=4, any::<u64>()).prop_map(|(g, k, seed)| {
        let mut bits = seed;
        let mut next = || {
            bits = bits
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            bits >> 60
        };
        let vertices: Vec<u32> = (0..g.n() as u32).filter(|_| next() < 14).collect();
        let mut solution = Vec::new();
        for &v in &vertices {
            if next() < 4 {
                solution.push(v);
                let set: VertexSet = solution.iter().copied().collect();
                if g.non_edge_count(&set).unwrap() > k {
                    solution.pop();
                }
            }
        }
        (g, vertices, solution, k)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_matches_oracle_in_all_modes(g in graph_strategy(11), k in 0usize..=4) {
        let want = brute_force_max_kdc(&g, k).size();
        for mode in Mode::ALL {
            let out = solve(&g, &SolverConfig::new(k).mode(mode)).unwrap();
            prop_assert!(g.is_k_defective(out.solution.vertices(), k).unwrap());
            prop_assert_eq!(out.solution.size(), want);
            prop_assert!(out.stats.leaves <= out.stats.nodes_visited);
        }
    }

    #[test]
    fn degeneracy_ordering_properties(g in graph_strategy(16), k in 0usize..=4) {
        let ord = DegeneracyOrdering::compute(&g);
        let suffix = ord.suffix_degrees(&g);
        prop_assert_eq!(suffix.iter().copied().max().unwrap_or(0), ord.degeneracy());
        // each vertex has minimum degree among the vertices from it onward
        for (i, &v) in ord.order().iter().enumerate() {
            for &w in &ord.order()[i + 1..] {
                prop_assert!(suffix[i] <= g.neighbors(w).iter().filter(|&&x| ord.position(x) >= i).count());
            }
            prop_assert_eq!(ord.position(v), i);
        }
        if g.n() <= 11 {
            prop_assert!(brute_force_max_kdc(&g, k).size() <= ord.upper_bound(k));
        }
    }

    #[test]
    fn reductions_preserve_the_optimum((g, vertices, solution, k) in instance_strategy(11)) {
        let inst = Instance::with_vertices(&g, &vertices, &solution).unwrap();
        let before = brute_force_instance_opt(&inst, k).unwrap();
        prop_assert!(rules::degree_sequence_ub(&inst, k) >= before);
        let mut reduced = inst.clone();
        rules::reduce(&mut reduced, k);
        reduced.check_consistency().unwrap();
        prop_assert_eq!(brute_force_instance_opt(&reduced, k).unwrap(), before);
        for &u in reduced.candidates() {
            prop_assert!(reduced.nonedges_in_solution() + reduced.nonneighbors_in_solution(u) <= k);
            prop_assert!(reduced.degree_in_graph(u) + 2 < reduced.num_vertices());
        }
    }

    #[test]
    fn rr3_keeps_every_better_solution((g, vertices, solution, k) in instance_strategy(11), pick in any::<prop::sample::Index>()) {
        let inst = Instance::with_vertices(&g, &vertices, &solution).unwrap();
        let nv = inst.num_vertices();
        prop_assume!(solution.len() + 1 < nv);
        let lb = solution.len() + 1 + pick.index(nv - solution.len() - 1);
        let before = brute_force_instance_opt(&inst, k).unwrap();
        let mut reduced = inst.clone();
        rules::apply_rr3(&mut reduced, k, lb).unwrap();
        reduced.check_consistency().unwrap();
        let after = brute_force_instance_opt(&reduced, k).unwrap();
        if before > lb {
            prop_assert_eq!(after, before);
        } else {
            prop_assert!(after <= lb);
        }
    }

    #[test]
    fn size_tests_agree_with_oracle(g in graph_strategy(10), k in 0usize..=3) {
        let omega = brute_force_max_kdc(&g, k).size();
        for tau in k + 2..=g.n() {
            let hit = test_tau(&g, k, tau).unwrap();
            prop_assert_eq!(hit.is_some(), omega >= tau);
        }
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(20)) {
        let dir = tempfile::tempdir().unwrap();
        let first = dir.path().join("a.edges");
        let second = dir.path().join("b.edges");
        io::write_edge_list(&g, &first).unwrap();
        let loaded = io::load(&first, LoadOptions::default()).unwrap();
        prop_assert_eq!(loaded.graph.n(), g.n());
        prop_assert_eq!(loaded.graph.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        io::write_edge_list(&loaded.graph, &second).unwrap();
        prop_assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
    }
}

#[test]
fn monotone_in_k() {
    let mut state = 7u64;
    for round in 0..60 {
        let n = 6 + round % 6;
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                if (state >> 33) % 2 == 0 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let omegas: Vec<usize> = (0..=5)
            .map(|k| solve(&g, &SolverConfig::new(k)).unwrap().solution.size())
            .collect();
        for w in omegas.windows(2) {
            assert!(w[0] <= w[1] && w[1] <= w[0] + 1, "{omegas:?}");
        }
    }
}
