//! Property tests over randomized hosts: format round-trips, radial and
//! coloring invariants, and solver/oracle agreement.

use std::collections::BTreeSet;

use proptest::prelude::*;

use barnette::oracle::{self, fixtures, SearchBudget};
use barnette::plane_graph::{
    dual, face_coloring, parse_plane_graph, radial_graph, write_plane_graph, PlaneGraph,
};
use barnette::stpp::StppInstance;
use barnette::transforms;

/// Randomized plane multigraphs: a fixture base, optionally transformed.
fn host_strategy() -> impl Strategy<Value = PlaneGraph> {
    let base = prop_oneof![
        (3usize..=10).prop_map(fixtures::prism),
        (2usize..=6).prop_map(fixtures::two_vertex_bundle),
        Just(fixtures::k4()),
        Just(fixtures::cube()),
        (3usize..=8).prop_map(fixtures::cycle),
    ];
    (base, 0u8..4).prop_map(|(g, op)| match op {
        1 => dual(&g).map(|d| d.graph).unwrap_or(g),
        2 if g.is_cubic() => transforms::leapfrog(&g).map(|l| l.graph).unwrap_or(g),
        3 if g.min_degree() >= 2 => transforms::vertex_expand(&g).map(|e| e.graph).unwrap_or(g),
        _ => g,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pg_roundtrip_is_identity(g in host_strategy()) {
        let text = write_plane_graph(&g);
        let back = parse_plane_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_plane_graph(&back), text);
    }

    #[test]
    fn euler_and_handshake(g in host_strategy()) {
        let deg: usize = g.vertices().map(|v| g.degree(v)).sum();
        let flen: usize = g.faces().iter().map(|f| f.len()).sum();
        prop_assert_eq!(deg, 2 * g.edge_count());
        prop_assert_eq!(flen, 2 * g.edge_count());
        prop_assert_eq!(g.vertex_count() + g.face_count(), g.edge_count() + 2);
    }

    #[test]
    fn bipartite_iff_even_faces(g in host_strategy()) {
        let even = g.faces().iter().all(|f| f.len() % 2 == 0);
        prop_assert_eq!(g.is_bipartite(), even);
    }

    #[test]
    fn radial_is_a_bipartite_quadrangulation(g in host_strategy()) {
        if let Ok(r) = radial_graph(&g) {
            prop_assert!(r.graph.is_bipartite());
            prop_assert!(r.graph.faces().iter().all(|f| f.len() == 4));
            prop_assert_eq!(r.graph.vertex_count(), g.vertex_count() + g.face_count());
            prop_assert_eq!(r.graph.edge_count(), 2 * g.edge_count());
        }
    }

    #[test]
    fn two_coloring_is_proper_on_eulerian_hosts(g in host_strategy()) {
        if g.is_eulerian() {
            let c = face_coloring(&g, 2).unwrap();
            prop_assert!(c.is_proper(&g));
            prop_assert_eq!(c.color(g.outer_face()), 1);
        }
    }
}

fn stpp_strategy() -> impl Strategy<Value = StppInstance> {
    (3usize..=7, proptest::collection::vec((0usize..7, 0usize..7), 0..10), 0usize..4).prop_map(
        |(n, extra, pair_count)| {
            let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v / 2, v)).collect();
            for (u, v) in extra {
                let (u, v) = (u % n, v % n);
                if u != v && edges.len() < 16 {
                    edges.push((u.min(v), u.max(v)));
                }
            }
            let mut pairs = Vec::new();
            let mut used = BTreeSet::new();
            for i in 0..pair_count {
                let a = (2 * i) % edges.len();
                let b = (2 * i + 1) % edges.len();
                if a != b && used.insert(a) && used.insert(b) {
                    pairs.push((a.min(b), a.max(b)));
                }
            }
            StppInstance { vertex_count: n, edges, pairs }
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn parity_solver_matches_enumeration(inst in stpp_strategy()) {
        let solver = barnette::stpp::solve_stpp(&inst).unwrap();
        let trees = oracle::enumerate_spanning_trees(
            inst.vertex_count,
            &inst.edges,
            &SearchBudget::default(),
        )
        .expect_complete();
        let oracle_sat = trees.iter().any(|t| {
            let set: BTreeSet<usize> = t.iter().copied().collect();
            inst.is_solution(&set)
        });
        prop_assert_eq!(solver.is_some(), oracle_sat);
        if let Some(sol) = solver {
            prop_assert!(inst.is_solution(&sol.tree));
        }
    }
}
