//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use barnette::atrails::{self, TrailMode};
use barnette::face_trees::{
    self, hamiltonian_to_qstf, hc_lift_leapfrog, hc_project_leapfrog, leapfrog_context,
    lf_identity_check, qstf_to_hamiltonian, four_form_context, four_form_counts, face_tree_from_dual_trail, FaceTree,
    HamCycleWithSides, TreeMode,
};
use barnette::oracle::{self, fixtures, Outcome, SearchBudget};
use barnette::plane_graph::{
    dual, embedded_isomorphism, face_coloring, parse_plane_graph, validate, vertex_connectivity,
    write_plane_graph, EdgeId, Face, FaceId, PlaneGraph, Property, VertexId,
};
use barnette::reductions::{
    build_octagon_contraction, build_digon_subdivision, build_radial_digon_instance, quad_tree_to_path, path_to_quad_tree,
    subdivision_transfer_backward, subdivision_transfer_forward, two_cut_pipeline, recomposition_verify,
};
use barnette::stpp::{self, StppInstance};
use barnette::transforms::{contract_facial_factor, leapfrog};

fn budget() -> SearchBudget {
    SearchBudget::default()
}

/// The 30-graph corpus for the embedding-core criterion.
fn corpus() -> Vec<(String, PlaneGraph)> {
    let mut out: Vec<(String, PlaneGraph)> = Vec::new();
    for l in 3..=12 {
        out.push((format!("prism-{l}"), fixtures::prism(l)));
    }
    out.push(("k4".into(), fixtures::k4()));
    out.push(("k4-minus-edge".into(), fixtures::k4_minus_edge()));
    for k in 2..=6 {
        out.push((format!("bundle-{k}"), fixtures::two_vertex_bundle(k)));
    }
    for l in [4, 6, 8, 10, 12] {
        out.push((format!("dual-prism-{l}"), dual(&fixtures::prism(l)).unwrap().graph));
    }
    out.push(("cycle-6".into(), fixtures::cycle(6)));
    out.push(("leapfrog-cube".into(), leapfrog(&fixtures::cube()).unwrap().graph));
    out.push((
        "leapfrog-prism-6".into(),
        leapfrog(&fixtures::even_prism(3)).unwrap().graph,
    ));
    out.push((
        "double-leapfrog-cube".into(),
        leapfrog(&leapfrog(&fixtures::cube()).unwrap().graph).unwrap().graph,
    ));
    out.push(("chain-2-cubes".into(), fixtures::chain_of_cubes(2)));
    out.push(("chain-3-cubes".into(), fixtures::chain_of_cubes(3)));
    out.push((
        "contracted-cube".into(),
        contracted_barnette(&fixtures::cube()).h.clone(),
    ));
    out.push((
        "th4-k4-h".into(),
        build_radial_digon_instance(&fixtures::k4(), fixtures::k4().edges().next().unwrap())
            .unwrap()
            .h,
    ));
    out
}

/// Contracts the 3-colored class of a Barnette graph (outer face in it), the
/// standard orientation for the face-tree/cycle correspondence.
fn contracted_barnette(g: &PlaneGraph) -> barnette::transforms::ReducedGraph {
    let coloring = face_coloring(g, 3).unwrap().swapped_to(g.outer_face(), 3);
    contract_facial_factor(g, &coloring.class(1)).unwrap()
}

#[test]
fn criterion_01_embedding_core() {
    let start = Instant::now();
    let graphs = corpus();
    assert!(graphs.len() >= 30, "corpus has {} graphs", graphs.len());
    for (name, g) in &graphs {
        // Euler and handshake identities.
        let deg: usize = g.vertices().map(|v| g.degree(v)).sum();
        let flen: usize = g.faces().iter().map(Face::len).sum();
        assert_eq!(deg, 2 * g.edge_count(), "{name}: degree sum");
        assert_eq!(flen, 2 * g.edge_count(), "{name}: face length sum");
        assert_eq!(
            g.vertex_count() + g.face_count(),
            g.edge_count() + 2,
            "{name}: Euler"
        );
        // Bipartite ⟺ every face has even length.
        let even_faces = g.faces().iter().all(|f| f.len() % 2 == 0);
        assert_eq!(g.is_bipartite(), even_faces, "{name}: parity");
        // Double dual is the identity up to relabeling (bridgeless hosts).
        if let Ok(d) = dual(g) {
            let dd = dual(&d.graph).unwrap();
            assert!(
                embedded_isomorphism(g, &dd.graph, false).is_some(),
                "{name}: double dual"
            );
        }
        // The text format round-trips bit-exactly.
        let text = write_plane_graph(g);
        assert_eq!(&parse_plane_graph(&text).unwrap(), g, "{name}: roundtrip");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, budget 1 s");
    println!("criterion 1 (embedding core, {} graphs, {elapsed:?}): PASS", graphs.len());
}

fn barnette_corpus_upto(max_vertices: usize) -> Vec<(String, PlaneGraph)> {
    let mut out: Vec<(String, PlaneGraph)> = Vec::new();
    for k in 2..=6 {
        let g = fixtures::even_prism(k);
        if g.vertex_count() <= max_vertices {
            out.push((format!("even-prism-{k}"), g));
        }
    }
    let lf = leapfrog(&fixtures::cube()).unwrap().graph;
    if lf.vertex_count() <= max_vertices {
        out.push(("leapfrog-cube".into(), lf));
    }
    out
}

#[test]
fn criterion_02_dual_nonseparating_atrail_equivalence() {
    let start = Instant::now();
    for (name, g) in barnette_corpus_upto(24) {
        let hamiltonian = !oracle::find_hc(&g, &BTreeSet::new(), &BTreeSet::new(), Some(1), &budget())
            .expect_complete()
            .is_empty();
        let d = dual(&g).unwrap().graph;
        let trail = atrails::find_a_trails(&d, TrailMode::NonseparatingFirst, None, &budget())
            .unwrap()
            .expect_complete();
        assert_eq!(
            hamiltonian,
            !trail.is_empty(),
            "{name}: hamiltonicity must match dual non-separating A-trails"
        );
    }
    println!(
        "criterion 2 (dual non-separating A-trail equivalence, {:?}): PASS",
        start.elapsed()
    );
}

#[test]
fn criterion_03_four_form_equivalence() {
    let start = Instant::now();
    for (name, g) in barnette_corpus_upto(24) {
        let coloring = face_coloring(&g, 3).unwrap().swapped_to(g.outer_face(), 3);
        let ctx = four_form_context(&g, &coloring).unwrap();
        let [i, ii, iii, iv] = four_form_counts(&ctx, &budget()).unwrap().expect_complete();
        let e = i > 0;
        assert_eq!(ii > 0, e, "{name}: form ii");
        assert_eq!(iii > 0, e, "{name}: form iii");
        assert_eq!(iv > 0, e, "{name}: form iv");
    }
    println!("criterion 3 (four-form equivalence, {:?}): PASS", start.elapsed());
}

#[test]
fn criterion_04_face_tree_cycle_bijection() {
    let start = Instant::now();
    // Contracted fixtures: cube, hexagonal prism (squares outer), leapfrog
    // cube (hexagon outer) — the factor faces must all be bounded.
    let mut fixtures_list: Vec<(String, barnette::transforms::ReducedGraph)> = Vec::new();
    fixtures_list.push(("cube".into(), contracted_barnette(&fixtures::cube())));
    {
        let g0 = fixtures::even_prism(3);
        let quad = g0.faces().iter().find(|f| f.len() == 4).unwrap().id;
        let g = g0.with_outer(quad).unwrap();
        let hexes: BTreeSet<FaceId> =
            g.faces().iter().filter(|f| f.len() == 6).map(|f| f.id).collect();
        fixtures_list.push(("hexagonal-prism".into(), contract_facial_factor(&g, &hexes).unwrap()));
    }
    {
        let lf0 = leapfrog(&fixtures::cube()).unwrap();
        let hexagon = lf0.hexagon[0];
        let g = lf0.graph.with_outer(hexagon).unwrap();
        let quads: BTreeSet<FaceId> =
            g.faces().iter().filter(|f| f.len() == 4).map(|f| f.id).collect();
        fixtures_list.push(("leapfrog-cube".into(), contract_facial_factor(&g, &quads).unwrap()));
    }
    for (name, rg) in fixtures_list {
        let bounded: BTreeSet<FaceId> = rg
            .h
            .faces()
            .iter()
            .map(|f| f.id)
            .filter(|&f| f != rg.h.outer_face())
            .collect();
        let trees =
            oracle::enumerate_face_trees_bruteforce(&rg.h, &bounded, TreeMode::Quasi, &budget())
                .expect_complete();
        let cycles =
            oracle::find_hc(&rg.source, &BTreeSet::new(), &BTreeSet::new(), None, &budget())
                .expect_complete();
        let constrained: Vec<HamCycleWithSides> = cycles
            .into_iter()
            .filter_map(|c| HamCycleWithSides::from_edges(&rg.source, c.edges).ok())
            .filter(|c| hamiltonian_to_qstf(&rg, c).is_ok())
            .collect();
        assert_eq!(
            trees.len(),
            constrained.len(),
            "{name}: tree and constrained-cycle counts"
        );
        assert!(!trees.is_empty(), "{name}: fixture should have face trees");
        // Mutually inverse on canonical forms, both ways.
        let tree_set: BTreeSet<FaceTree> = trees.iter().cloned().collect();
        for ft in &trees {
            let c = qstf_to_hamiltonian(&rg, ft).unwrap_or_else(|e| panic!("{name}: lift {e}"));
            let back = hamiltonian_to_qstf(&rg, &c).unwrap();
            assert_eq!(&back, ft, "{name}: tree roundtrip");
        }
        for c in &constrained {
            let ft = hamiltonian_to_qstf(&rg, c).unwrap();
            assert!(tree_set.contains(&ft), "{name}: cycle image is an enumerated tree");
            let c2 = qstf_to_hamiltonian(&rg, &ft).unwrap();
            assert_eq!(c2.cycle, c.cycle, "{name}: cycle roundtrip");
        }
    }
    println!("criterion 4 (face-tree/cycle bijection, {:?}): PASS", start.elapsed());
}

/// Random connected multigraph instances with random disjoint pairs.
fn random_stpp_instance(rng: &mut ChaCha8Rng) -> StppInstance {
    let n = rng.gen_range(3..=8);
    let extra = rng.gen_range(0..=8usize);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // Random spanning-tree skeleton keeps the instance connected.
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v));
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.push((u.min(v), u.max(v)));
        }
        if edges.len() >= 16 {
            break;
        }
    }
    let mut ids: Vec<usize> = (0..edges.len()).collect();
    for i in (1..ids.len()).rev() {
        let j = rng.gen_range(0..=i);
        ids.swap(i, j);
    }
    let pair_count = rng.gen_range(0..=edges.len() / 2);
    let pairs: Vec<(usize, usize)> = ids
        .chunks_exact(2)
        .take(pair_count)
        .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
        .collect();
    StppInstance { vertex_count: n, edges, pairs }
}

#[test]
fn criterion_05_parity_solver_and_pipeline() {
    let start = Instant::now();
    // Solver vs spanning-tree enumeration on 200 random instances.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5717c0de);
    for case in 0..200 {
        let inst = random_stpp_instance(&mut rng);
        let solver = stpp::solve_stpp(&inst).unwrap();
        let trees =
            oracle::enumerate_spanning_trees(inst.vertex_count, &inst.edges, &budget())
                .expect_complete();
        let oracle_sat = trees.iter().any(|t| {
            let set: BTreeSet<usize> = t.iter().copied().collect();
            inst.is_solution(&set)
        });
        assert_eq!(
            solver.is_some(),
            oracle_sat,
            "case {case}: solver vs enumeration on {inst:?}"
        );
        if let Some(sol) = solver {
            assert!(inst.is_solution(&sol.tree), "case {case}: solution verifies");
        }
    }

    // Pipeline vs exhaustive face-tree search on fifty degree-4/6 fixtures.
    let mut fixture_count = 0;
    'outer: for k in 2..=26usize {
        for one_class in 0..2usize {
            let g0 = fixtures::even_prism(k);
            // Squares split into two alternating classes; the 2k-gons take
            // color 3 (they hold the outer face).
            let coloring = face_coloring(&g0, 3).unwrap();
            let fixed = coloring.swapped_to(g0.outer_face(), 3);
            let candidates: Vec<u8> = (1..=2).collect();
            let one = candidates[one_class];
            let mut perm: Vec<u8> = vec![0, 1, 2, 3];
            perm[one as usize] = 1;
            perm[(3 - one) as usize] = 2;
            let final_coloring = fixed.permuted(&perm);
            let answer = stpp::decide_cr2(&g0, &final_coloring).unwrap();

            // Independent check: exhaustive search for a spanning tree of
            // 1-face images in the 2-face reduction.
            let ctx = four_form_context(&g0, &final_coloring).unwrap();
            let cands: BTreeSet<FaceId> = ctx
                .rg2
                .face_map
                .iter()
                .enumerate()
                .filter(|&(_, &sf)| final_coloring.color(sf) == 1)
                .map(|(hf, _)| FaceId(hf))
                .collect();
            let exhaustive =
                face_trees::find_face_tree(&ctx.rg2.h, &cands, TreeMode::Spanning, true);
            assert_eq!(
                answer.is_some(),
                exhaustive.is_some(),
                "prism-{k} class {one}: pipeline vs exhaustive"
            );
            if let Some(c) = answer {
                assert_eq!(c.cycle.len(), g0.vertex_count(), "prism-{k}: cycle is hamiltonian");
            }
            fixture_count += 1;
            if fixture_count == 50 {
                break 'outer;
            }
        }
    }
    assert_eq!(fixture_count, 50);
    println!(
        "criterion 5 (parity solver ×200 + pipeline ×50, {:?}): PASS",
        start.elapsed()
    );
}

#[test]
fn criterion_06_leapfrog_identity_and_lift() {
    let start = Instant::now();
    for (name, g) in barnette_corpus_upto(20) {
        lf_identity_check(&g).unwrap_or_else(|e| panic!("{name}: identity {e}"));
        let ctx = leapfrog_context(&g).unwrap();
        let cycles = oracle::find_hc(&g, &BTreeSet::new(), &BTreeSet::new(), None, &budget())
            .expect_complete();
        for c in &cycles {
            let lifted = hc_lift_leapfrog(&ctx, &c.edges)
                .unwrap_or_else(|e| panic!("{name}: lift {e}"));
            // The audit (1-hexagons inside, 2-hexagons outside) runs inside
            // the lift; the projection must return the original cycle.
            let back = hc_project_leapfrog(&ctx, &lifted).unwrap();
            assert_eq!(back, c.edges, "{name}: lift/project roundtrip");
        }
    }
    println!("criterion 6 (leapfrog identity + lift, {:?}): PASS", start.elapsed());
}

#[test]
fn criterion_07_path_tree_correspondence() {
    let start = Instant::now();
    for (name, g0) in [
        ("k4", fixtures::k4()),
        ("cube", fixtures::cube()),
        ("3-prism", fixtures::triangular_prism()),
    ] {
        for e in g0.edges().collect::<Vec<_>>() {
            let a = build_radial_digon_instance(&g0, e).unwrap();
            let (u, v) = a.endpoints;
            let paths = oracle::enumerate_ham_paths(&a.g0p, u, v, &budget()).expect_complete();
            let trees = oracle::enumerate_face_trees_bruteforce(
                &a.h,
                &a.quad_faces(),
                TreeMode::Spanning,
                &budget(),
            )
            .expect_complete();
            assert_eq!(
                paths.len(),
                trees.len(),
                "{name}/{e}: path count vs tree count"
            );
            if name == "k4" {
                assert_eq!(paths.len(), 2, "K4 has exactly two such paths");
            }
            let tree_set: BTreeSet<FaceTree> = trees.iter().cloned().collect();
            for p in &paths {
                let ft = path_to_quad_tree(&a, &p.edges).unwrap();
                assert!(tree_set.contains(&ft), "{name}/{e}: forward image enumerated");
                let back = quad_tree_to_path(&a, &ft).unwrap();
                assert_eq!(back, p.edges, "{name}/{e}: forward/backward inverse");
            }
        }
    }
    println!("criterion 7 (path/tree correspondence, {:?}): PASS", start.elapsed());
}

#[test]
fn criterion_08_octagon_and_subdivision_equivalences() {
    let start = Instant::now();
    let g0 = fixtures::k4();
    let e = g0.edges().next().unwrap();
    let a = build_radial_digon_instance(&g0, e).unwrap();

    let c3 = build_octagon_contraction(&a).unwrap();
    assert_eq!(c3.hp().vertex_count(), 5);
    assert_eq!(c3.hp().edge_count(), 20);
    assert!(c3.hp().vertices().all(|v| c3.hp().degree(v) == 8));

    let trails = atrails::find_a_trails(c3.hp(), TrailMode::All, None, &budget())
        .unwrap()
        .expect_complete();
    let trees = oracle::enumerate_face_trees_bruteforce(
        &a.h,
        &a.quad_faces(),
        TreeMode::Spanning,
        &budget(),
    )
    .expect_complete();

    let c4 = build_digon_subdivision(&a).unwrap();
    let all_faces: BTreeSet<FaceId> = c4.h0.faces().iter().map(|f| f.id).collect();
    let h0_tree = face_trees::find_face_tree(&c4.h0, &all_faces, TreeMode::Spanning, true);

    assert_eq!(trails.is_empty(), trees.is_empty(), "A-trail ⟺ quad tree");
    assert_eq!(trees.is_empty(), h0_tree.is_none(), "quad tree ⟺ h0 face tree");
    assert!(!trees.is_empty(), "the K4 instance is solvable");

    // Transfers are mutually inverse on the enumerated trees.
    for t in &trees {
        let t0 = subdivision_transfer_forward(&a, &c4, t).unwrap();
        let back = subdivision_transfer_backward(&a, &c4, &t0).unwrap();
        assert_eq!(&back, t);
    }
    println!(
        "criterion 8 (octagon + subdivision equivalences, {:?}): PASS",
        start.elapsed()
    );
}

#[test]
fn criterion_09_quad_hex_fixtures_are_hamiltonian() {
    let start = Instant::now();
    let mut graphs: Vec<(String, PlaneGraph)> = vec![
        ("cube".into(), fixtures::cube()),
        ("hexagonal-prism".into(), fixtures::even_prism(3)),
    ];
    let lf1 = leapfrog(&fixtures::cube()).unwrap().graph;
    let lf2 = leapfrog(&lf1).unwrap().graph;
    graphs.push(("leapfrog-tower-1".into(), lf1));
    graphs.push(("leapfrog-tower-2".into(), lf2));
    for (name, g) in graphs {
        assert!(g.vertex_count() <= 72);
        // Quadrilateral/hexagon class membership.
        assert!(
            g.faces().iter().all(|f| matches!(f.len(), 4 | 6)),
            "{name}: faces are quads or hexagons"
        );
        let found = oracle::find_hc(&g, &BTreeSet::new(), &BTreeSet::new(), Some(1), &budget())
            .expect_complete();
        assert!(!found.is_empty(), "{name}: hamiltonian cycle found");
    }
    println!("criterion 9 (quad/hex class fixtures, {:?}): PASS", start.elapsed());
}

#[test]
fn criterion_10_catalog_ingestion_hamiltonian() {
    let start = Instant::now();
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/catalog");
    let mut entries: Vec<_> = std::fs::read_dir(&dir)
        .expect("catalog directory")
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().map(|x| x == "pg").unwrap_or(false))
        .collect();
    entries.sort();
    assert!(!entries.is_empty());
    let mut checked = 0;
    for path in entries {
        let text = std::fs::read_to_string(&path).unwrap();
        let g = parse_plane_graph(&text).unwrap();
        assert!(
            oracle::check_barnette(&g).all_hold(),
            "{}: catalog entry must be a Barnette graph",
            path.display()
        );
        if g.vertex_count() > 24 {
            continue;
        }
        let found = oracle::find_hc(&g, &BTreeSet::new(), &BTreeSet::new(), Some(1), &budget())
            .expect_complete();
        assert!(!found.is_empty(), "{}: hamiltonian", path.display());
        checked += 1;
    }
    assert!(checked >= 6, "checked {checked} catalog graphs");
    println!(
        "criterion 10 (catalog ≤ 24 vertices hamiltonian, {checked} graphs, {:?}): PASS",
        start.elapsed()
    );
}

#[test]
fn criterion_11_two_cut_recomposition() {
    let start = Instant::now();
    for (name, r) in [
        ("two-cubes", fixtures::chain_of_cubes(2)),
        ("three-cubes", fixtures::chain_of_cubes(3)),
        ("plain-cube", fixtures::cube()),
    ] {
        let d = two_cut_pipeline(&r).unwrap();
        let (whole, parts) = recomposition_verify(&r, &d, &budget()).unwrap().expect_complete();
        assert_eq!(whole, parts, "{name}: recomposition equivalence");
    }
    // The deleted-edge direction: forbidding a forced edge in a component
    // must kill its hamiltonicity exactly when the edge is genuinely forced.
    let r = fixtures::chain_of_cubes(2);
    let d = two_cut_pipeline(&r).unwrap();
    assert_eq!(d.components.len(), 2);
    for c in &d.components {
        assert_eq!(c.forced.len(), 1);
        let with = oracle::find_hc(&c.graph, &c.forced, &BTreeSet::new(), Some(1), &budget())
            .expect_complete();
        assert!(!with.is_empty());
    }
    println!("criterion 11 (2-cut recomposition, {:?}): PASS", start.elapsed());
}

#[test]
fn criterion_12_quasi_trees_on_eulerian_triangulations() {
    let start = Instant::now();
    let mut fixtures_list: Vec<(String, PlaneGraph)> = vec![
        ("octahedron".into(), dual(&fixtures::cube()).unwrap().graph),
        ("hexagonal-bipyramid".into(), dual(&fixtures::even_prism(3)).unwrap().graph),
        ("octagonal-bipyramid".into(), dual(&fixtures::even_prism(4)).unwrap().graph),
    ];
    fixtures_list.push((
        "dual-leapfrog-cube".into(),
        dual(&leapfrog(&fixtures::cube()).unwrap().graph).unwrap().graph,
    ));
    for (name, t) in fixtures_list {
        assert!(t.is_triangulation(), "{name}: triangulation");
        assert!(t.is_eulerian(), "{name}: eulerian");
        assert!(vertex_connectivity(&t) >= 4, "{name}: 4-connected");
        let candidates: BTreeSet<FaceId> = t.faces().iter().map(|f| f.id).collect();
        let found = face_trees::find_face_tree(&t, &candidates, TreeMode::Quasi, true);
        assert!(found.is_some(), "{name}: quasi spanning tree of faces exists");
        let ft = found.unwrap();
        assert!(face_trees::is_qstf(&t, &ft.proper, &ft.faces).is_ok());
    }
    println!(
        "criterion 12 (quasi trees on 4-connected eulerian triangulations, {:?}): PASS",
        start.elapsed()
    );
}

/// Extra cross-check: a non-separating dual A-trail drives the leapfrog
/// face-tree pipeline end to end.
#[test]
fn dual_trail_drives_the_leapfrog_tree_pipeline() {
    let g = fixtures::cube();
    let ctx = leapfrog_context(&g).unwrap();
    let oct = dual(&g).unwrap().graph;
    let trail = atrails::find_a_trails(&oct, TrailMode::NonseparatingFirst, None, &budget())
        .unwrap()
        .expect_complete()
        .pop()
        .unwrap();
    let (ft, lifted) = face_tree_from_dual_trail(&ctx, &trail).unwrap();
    // The tree holds exactly the class-1 hexagon images and the proper set
    // matches the face images inside the lifted cycle.
    let ones: BTreeSet<FaceId> = g
        .vertices()
        .filter(|&v| ctx.hexagon_color(v) == 1)
        .map(|v| ctx.rg.h_face_of(ctx.lf.hexagon[v.0]).unwrap())
        .collect();
    assert_eq!(ft.faces, ones);
    for (w, &f) in ctx.rg.vertex_map.iter().enumerate() {
        assert_eq!(ft.proper.contains(&VertexId(w)), lifted.is_inside(f));
    }
}

/// Extra cross-check: the face-tree/cycle bijection over every usable factor
/// class of every small Barnette fixture, not just the three named ones.
#[test]
fn bijection_sweep_over_factor_classes() {
    for (name, g) in barnette_corpus_upto(20) {
        let coloring = face_coloring(&g, 3).unwrap().swapped_to(g.outer_face(), 3);
        let cycles = oracle::find_hc(&g, &BTreeSet::new(), &BTreeSet::new(), None, &budget())
            .expect_complete();
        for class in 1..=2u8 {
            let rg = contract_facial_factor(&g, &coloring.class(class)).unwrap();
            let bounded: BTreeSet<FaceId> = rg
                .h
                .faces()
                .iter()
                .map(|f| f.id)
                .filter(|&f| f != rg.h.outer_face())
                .collect();
            let trees = oracle::enumerate_face_trees_bruteforce(
                &rg.h,
                &bounded,
                TreeMode::Quasi,
                &budget(),
            )
            .expect_complete();
            let constrained = cycles
                .iter()
                .filter_map(|c| HamCycleWithSides::from_edges(&g, c.edges.clone()).ok())
                .filter(|c| hamiltonian_to_qstf(&rg, c).is_ok())
                .count();
            assert_eq!(trees.len(), constrained, "{name} class {class}: counts");
            for ft in &trees {
                let c = qstf_to_hamiltonian(&rg, ft)
                    .unwrap_or_else(|e| panic!("{name} class {class}: lift {e}"));
                let back = hamiltonian_to_qstf(&rg, &c).unwrap();
                assert_eq!(&back, ft, "{name} class {class}: inverse");
            }
        }
    }
}

/// Extra cross-check: for every hamiltonian cycle of a fixture, the weak
/// dual of the cycle plus its interior (the adjacency graph of the bounded
/// faces of that outerplane subgraph) is a tree.
#[test]
fn weak_dual_of_cycle_interior_is_a_tree() {
    for g in [fixtures::cube(), fixtures::even_prism(3), fixtures::k4()] {
        let cycles = oracle::find_hc(&g, &BTreeSet::new(), &BTreeSet::new(), None, &budget())
            .expect_complete();
        for c in cycles {
            let sides = HamCycleWithSides::from_edges(&g, c.edges).unwrap();
            // Interior edges: both flanking faces inside the cycle.
            let keep: BTreeSet<EdgeId> = g
                .edges()
                .filter(|&e| {
                    let (f1, f2) = g.edge_faces(e);
                    sides.is_inside(f1) && sides.is_inside(f2)
                })
                .chain(sides.cycle.iter().copied())
                .collect();
            let sub = g.edge_subgraph(&keep).unwrap();
            let gi = &sub.graph;
            // Weak dual: bounded faces, adjacent when sharing an edge.
            let bounded: Vec<FaceId> = gi
                .faces()
                .iter()
                .map(|f| f.id)
                .filter(|&f| f != gi.outer_face())
                .collect();
            let index = |f: FaceId| bounded.iter().position(|&x| x == f).unwrap();
            let mut adjacency = BTreeSet::new();
            for e in gi.edges() {
                let (f1, f2) = gi.edge_faces(e);
                if f1 != f2 && f1 != gi.outer_face() && f2 != gi.outer_face() {
                    let (a, b) = (index(f1), index(f2));
                    adjacency.insert((a.min(b), a.max(b)));
                }
            }
            // Tree: connected with n-1 distinct adjacencies.
            let n = bounded.len();
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut Vec<usize>, x: usize) -> usize {
                if p[x] != x {
                    let r = find(p, p[x]);
                    p[x] = r;
                }
                p[x]
            }
            let mut merges = 0;
            for &(a, b) in &adjacency {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    merges += 1;
                }
            }
            assert_eq!(adjacency.len(), n - 1, "weak dual has tree edge count");
            assert_eq!(merges, n - 1, "weak dual is connected and acyclic");
        }
    }
}

/// Extra cross-check: the two-coloring convention and Observation-level
/// conversions compose with the correspondence on a contracted fixture.
#[test]
fn observation_roundtrip_on_contracted_cube() {
    let rg = contracted_barnette(&fixtures::cube());
    let h = &rg.h;
    let coloring = face_coloring(h, 2).unwrap();
    let trails = atrails::find_a_trails(h, TrailMode::All, None, &budget())
        .unwrap()
        .expect_complete();
    assert!(!trails.is_empty());
    for trail in &trails {
        if let Ok(ft) = atrails::atrail_to_qstf(h, trail, &coloring) {
            let hosted = atrails::qstf_to_atrail(h, &ft).unwrap();
            // The reconstructed trail lives on H_T = H here (the 2-faces
            // carry every edge) and must reproduce the transition system.
            let original: BTreeSet<(usize, usize)> = trail.consecutive_edge_pairs(h);
            let host_darts = hosted.host_darts();
            let rebuilt = atrails::ATrail { darts: host_darts };
            assert_eq!(rebuilt.consecutive_edge_pairs(h), original);
        }
    }
}

#[test]
fn exit_code_contract_note() {
    // The CLI's exit codes are covered by the CLI crate's own tests; this
    // suite pins the library-level budget contract: over-budget outcomes are
    // explicit, never a silent "none".
    let g = fixtures::even_prism(6);
    let out = oracle::find_hc(
        &g,
        &BTreeSet::new(),
        &BTreeSet::new(),
        None,
        &SearchBudget::with_node_cap(2),
    );
    assert!(matches!(out, Outcome::OverBudget { .. }));
    let _ = validate(&g, &[Property::Cubic]);
}
