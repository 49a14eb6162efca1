//! The spanning tree parity problem: given disjoint edge pairs, find a
//! spanning tree containing both edges of each pair or neither.
//!
//! Reductions with only digon and triangle faces in their cover translate
//! face-tree existence into this problem: a digon contributes a free edge, a
//! triangle a pair.  The solver here is exact branch-and-bound over pair
//! inclusion with acyclicity pruning and the cardinality cut
//! `#free + 2·#pairs = V − 1`; a polynomial parity-matroid algorithm could
//! replace it behind the same contract.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::face_trees::{self, FaceTree, HamCycleWithSides, FourForm, FourFormObject};
use crate::plane_graph::{FaceColoring, FaceId, PlaneGraph, VertexId};

/// An abstract multigraph with disjoint edge pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StppInstance {
    pub vertex_count: usize,
    /// Edge endpoints, indexed by edge id.
    pub edges: Vec<(usize, usize)>,
    /// Disjoint pairs of edge ids.
    pub pairs: Vec<(usize, usize)>,
}

impl StppInstance {
    pub fn free_edges(&self) -> Vec<usize> {
        let in_pair: BTreeSet<usize> = self
            .pairs
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .collect();
        (0..self.edges.len()).filter(|e| !in_pair.contains(e)).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.pairs {
            for e in [a, b] {
                if e >= self.edges.len() {
                    return Err(Error::BadParitySolution(format!("pair edge {e} out of range")));
                }
                if !seen.insert(e) {
                    return Err(Error::BadParitySolution(format!("edge {e} in two pairs")));
                }
            }
        }
        for &(u, v) in &self.edges {
            if u >= self.vertex_count || v >= self.vertex_count {
                return Err(Error::BadParitySolution("edge endpoint out of range".into()));
            }
        }
        Ok(())
    }

    /// Whether an edge set is a spanning tree satisfying every pair.
    pub fn is_solution(&self, tree: &BTreeSet<usize>) -> bool {
        if tree.len() + 1 != self.vertex_count {
            return false;
        }
        let mut uf: Vec<usize> = (0..self.vertex_count).collect();
        fn find(uf: &mut Vec<usize>, x: usize) -> usize {
            if uf[x] != x {
                let r = find(uf, uf[x]);
                uf[x] = r;
            }
            uf[x]
        }
        for &e in tree {
            let (u, v) = self.edges[e];
            let (ru, rv) = (find(&mut uf, u), find(&mut uf, v));
            if ru == rv {
                return false;
            }
            uf[ru] = rv;
        }
        self.pairs
            .iter()
            .all(|&(a, b)| tree.contains(&a) == tree.contains(&b))
    }
}

/// A satisfying spanning tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StppSolution {
    pub tree: BTreeSet<usize>,
}

/// Where an instance edge came from when built out of a face cover.
#[derive(Clone, Debug)]
pub struct ParityLift {
    /// Instance edge id → the cover face it represents.
    pub face_of_edge: Vec<FaceId>,
    /// Cover face → the instance edges representing it (one for a digon,
    /// two for a triangle).
    pub edges_of_face: Vec<(FaceId, Vec<usize>)>,
}

/// Builds the parity instance of a digon/triangle face cover: a digon `xyx`
/// becomes the free edge `xy`; a triangle becomes the pair of edges at its
/// minimum-id vertex.  Faces with four or more sides are rejected (all-or-
/// nothing constraints on three edges are a different, harder problem).
pub fn build_parity_instance(
    h: &PlaneGraph,
    cover: &BTreeSet<FaceId>,
) -> Result<(StppInstance, ParityLift)> {
    // The cover must consist of edge-disjoint digons/triangles covering V(h).
    let mut used_edges = BTreeSet::new();
    let mut covered = vec![false; h.vertex_count()];
    for &f in cover {
        if f.0 >= h.face_count() {
            return Err(Error::NoSuchFace(f));
        }
        let sides = h.face(f).len();
        if sides > 3 {
            return Err(Error::CoverFaceTooLarge { face: f, sides });
        }
        for e in h.face_edges(f) {
            if !used_edges.insert(e) {
                return Err(Error::BadFaceCover(format!("face {f} shares an edge")));
            }
        }
        for v in h.face_vertices(f) {
            covered[v.0] = true;
        }
    }
    if let Some(v) = covered.iter().position(|&c| !c) {
        return Err(Error::BadFaceCover(format!("vertex {v} is uncovered")));
    }

    let mut edges = Vec::new();
    let mut pairs = Vec::new();
    let mut face_of_edge = Vec::new();
    let mut edges_of_face = Vec::new();
    for &f in cover {
        let mut vs: Vec<VertexId> = h.face_vertices(f);
        vs.sort_unstable();
        vs.dedup();
        match vs.len() {
            2 => {
                let id = edges.len();
                edges.push((vs[0].0, vs[1].0));
                face_of_edge.push(f);
                edges_of_face.push((f, vec![id]));
            }
            3 => {
                // Root at the minimum-id vertex; its two incident triangle
                // edges enter the instance as a pair.
                let root = vs[0];
                let (x, z) = (vs[1], vs[2]);
                let a = edges.len();
                edges.push((root.0, x.0));
                face_of_edge.push(f);
                let b = edges.len();
                edges.push((root.0, z.0));
                face_of_edge.push(f);
                pairs.push((a, b));
                edges_of_face.push((f, vec![a, b]));
            }
            n => {
                return Err(Error::BadFaceCover(format!(
                    "face {f} has {n} distinct vertices; digons and triangles only"
                )))
            }
        }
    }
    let inst = StppInstance { vertex_count: h.vertex_count(), edges, pairs };
    inst.validate()?;
    Ok((inst, ParityLift { face_of_edge, edges_of_face }))
}

/// Exact deterministic solver: pairs are decided in index order
/// (include-first), pruned by acyclicity of the chosen pairs and by the edge
/// count still achievable; free edges complete the tree greedily in index
/// order, so the output is the lexicographically first solution in this
/// branch order.
pub fn solve_stpp(inst: &StppInstance) -> Result<Option<StppSolution>> {
    inst.validate()?;
    if inst.vertex_count == 0 {
        return Ok(None);
    }
    if inst.vertex_count == 1 {
        return Ok(Some(StppSolution { tree: BTreeSet::new() }));
    }
    let free = inst.free_edges();
    let mut chosen: Vec<usize> = Vec::new();
    let mut uf: Vec<usize> = (0..inst.vertex_count).collect();
    let solution = branch(inst, &free, 0, &mut chosen, &mut uf);
    Ok(solution.map(|tree| StppSolution { tree }))
}

fn uf_find(uf: &mut Vec<usize>, x: usize) -> usize {
    if uf[x] != x {
        let r = uf_find(uf, uf[x]);
        uf[x] = r;
    }
    uf[x]
}

fn branch(
    inst: &StppInstance,
    free: &[usize],
    next_pair: usize,
    chosen: &mut Vec<usize>,
    uf: &mut Vec<usize>,
) -> Option<BTreeSet<usize>> {
    let needed = inst.vertex_count - 1;
    // Cardinality cut: the chosen edges plus everything still available must
    // reach V − 1.
    let available = 2 * (inst.pairs.len() - next_pair) + free.len();
    if chosen.len() > needed || chosen.len() + available < needed {
        return None;
    }
    if next_pair == inst.pairs.len() {
        return complete_with_free(inst, free, chosen, uf);
    }
    let (a, b) = inst.pairs[next_pair];

    // Include the pair when it keeps the partial forest acyclic.
    let (ua, va) = inst.edges[a];
    let (ub, vb) = inst.edges[b];
    let saved = uf.clone();
    let mut ok = true;
    for (u, v) in [(ua, va), (ub, vb)] {
        let (ru, rv) = (uf_find(uf, u), uf_find(uf, v));
        if ru == rv {
            ok = false;
            break;
        }
        uf[ru] = rv;
    }
    if ok {
        chosen.push(a);
        chosen.push(b);
        if let Some(found) = branch(inst, free, next_pair + 1, chosen, uf) {
            return Some(found);
        }
        chosen.pop();
        chosen.pop();
    }
    *uf = saved;
    branch(inst, free, next_pair + 1, chosen, uf)
}

fn complete_with_free(
    inst: &StppInstance,
    free: &[usize],
    chosen: &[usize],
    uf: &mut Vec<usize>,
) -> Option<BTreeSet<usize>> {
    let saved = uf.clone();
    let mut tree: BTreeSet<usize> = chosen.iter().copied().collect();
    for &e in free {
        if tree.len() == inst.vertex_count - 1 {
            break;
        }
        let (u, v) = inst.edges[e];
        let (ru, rv) = (uf_find(uf, u), uf_find(uf, v));
        if ru != rv {
            uf[ru] = rv;
            tree.insert(e);
        }
    }
    let done = tree.len() == inst.vertex_count - 1;
    *uf = saved;
    if done {
        debug_assert!(inst.is_solution(&tree));
        Some(tree)
    } else {
        None
    }
}

/// Lifts a parity solution back to a face tree: the cover faces whose
/// representative edges are all in the tree, with every vertex proper.
pub fn parity_tree_to_face_tree(
    h: &PlaneGraph,
    lift: &ParityLift,
    solution: &StppSolution,
) -> Result<FaceTree> {
    let faces: BTreeSet<FaceId> = lift
        .edges_of_face
        .iter()
        .filter(|(_, edges)| {
            let inside = edges.iter().filter(|e| solution.tree.contains(e)).count();
            if inside != 0 && inside != edges.len() {
                return false;
            }
            inside == edges.len()
        })
        .map(|&(f, _)| f)
        .collect();
    // Parity must be all-or-nothing per face.
    for (f, edges) in &lift.edges_of_face {
        let inside = edges.iter().filter(|e| solution.tree.contains(e)).count();
        if inside != 0 && inside != edges.len() {
            return Err(Error::BadParitySolution(format!(
                "face {f} has {inside} of {} edges in the tree",
                edges.len()
            )));
        }
    }
    let proper: BTreeSet<VertexId> = h.vertices().collect();
    face_trees::is_qstf(h, &proper, &faces).map_err(Error::Qstf)?;
    Ok(FaceTree { faces, proper })
}

/// The degree-4/6 decision pipeline: when every 1-face of the colored graph
/// is a quadrilateral or hexagon (equivalently, the 1-face reduction has all
/// degrees 4 or 6), the 1-faces become digons and triangles in the 2-face
/// reduction, so a spanning tree of 1-faces — and with it a hamiltonian
/// cycle with the standard side shape — is decided exactly through the
/// parity solver.
pub fn decide_cr2(g: &PlaneGraph, coloring: &FaceColoring) -> Result<Option<HamCycleWithSides>> {
    let ctx = face_trees::four_form_context(g, coloring)?;
    for v in ctx.rg1.h.vertices() {
        let d = ctx.rg1.h.degree(v);
        if d != 4 && d != 6 {
            return Err(Error::BadReducedDegree { vertex: v, degree: d });
        }
    }
    // Images of the 1-faces in the 2-face reduction are digons (from
    // quadrilaterals) and triangles (from hexagons).
    let cover: BTreeSet<FaceId> = ctx
        .rg2
        .face_map
        .iter()
        .enumerate()
        .filter(|&(_, &sf)| ctx.coloring.color(sf) == 1)
        .map(|(hf, _)| FaceId(hf))
        .collect();
    let (inst, lift) = build_parity_instance(&ctx.rg2.h, &cover)?;
    let Some(solution) = solve_stpp(&inst)? else {
        return Ok(None);
    };
    let ft = parity_tree_to_face_tree(&ctx.rg2.h, &lift, &solution)?;
    match face_trees::four_form_convert(&ctx, &FourFormObject::TreeIii(ft), FourForm::I)? {
        FourFormObject::CycleI(c) => Ok(Some(c)),
        _ => unreachable!("conversion targeted form I"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{self, fixtures, SearchBudget};
    use crate::plane_graph::face_coloring;

    #[test]
    fn triangle_pair_forces_the_tree() {
        // Triangle a-b-c with pair {ab, bc}: the only parity tree is both.
        let inst = StppInstance {
            vertex_count: 3,
            edges: vec![(0, 1), (1, 2), (2, 0)],
            pairs: vec![(0, 1)],
        };
        let sol = solve_stpp(&inst).unwrap().expect("solvable");
        assert_eq!(sol.tree, BTreeSet::from([0, 1]));
        // Brute force agrees: of the 3 spanning trees only one satisfies.
        let trees = oracle::enumerate_spanning_trees(3, &inst.edges, &SearchBudget::default())
            .expect_complete();
        let satisfying: Vec<_> = trees
            .into_iter()
            .filter(|t| {
                let set: BTreeSet<usize> = t.iter().copied().collect();
                inst.is_solution(&set)
            })
            .collect();
        assert_eq!(satisfying.len(), 1);
    }

    #[test]
    fn no_pairs_gives_lexicographic_minimum() {
        let inst = StppInstance {
            vertex_count: 4,
            edges: vec![(0, 1), (1, 2), (2, 3), (3, 0)],
            pairs: vec![],
        };
        let sol = solve_stpp(&inst).unwrap().unwrap();
        assert_eq!(sol.tree, BTreeSet::from([0, 1, 2]));
    }

    #[test]
    fn four_cycle_with_forcing_pairs_is_unsolvable() {
        // All four edges live in pairs, so trees have even size; V−1 = 3.
        let inst = StppInstance {
            vertex_count: 4,
            edges: vec![(0, 1), (1, 2), (2, 3), (3, 0)],
            pairs: vec![(0, 1), (2, 3)],
        };
        assert!(solve_stpp(&inst).unwrap().is_none());
        let trees = oracle::enumerate_spanning_trees(4, &inst.edges, &SearchBudget::default())
            .expect_complete();
        assert!(trees.iter().all(|t| {
            let set: BTreeSet<usize> = t.iter().copied().collect();
            !inst.is_solution(&set)
        }));
    }

    #[test]
    fn cardinality_invariant_holds() {
        let inst = StppInstance {
            vertex_count: 5,
            edges: vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)],
            pairs: vec![(0, 1)],
        };
        if let Some(sol) = solve_stpp(&inst).unwrap() {
            let pairs_in = inst
                .pairs
                .iter()
                .filter(|&&(a, _)| sol.tree.contains(&a))
                .count();
            let free_in = sol
                .tree
                .iter()
                .filter(|e| inst.free_edges().contains(e))
                .count();
            assert_eq!(free_in + 2 * pairs_in, inst.vertex_count - 1);
        } else {
            panic!("instance is solvable");
        }
    }

    #[test]
    fn cover_with_large_faces_is_rejected() {
        // A quadrilateral in the cover cannot be encoded as a pair.
        let g = fixtures::cycle(4);
        let inner = g
            .faces()
            .iter()
            .map(|f| f.id)
            .find(|&f| f != g.outer_face())
            .unwrap();
        let err = build_parity_instance(&g, &BTreeSet::from([inner])).unwrap_err();
        assert!(matches!(err, Error::CoverFaceTooLarge { .. }));
    }

    #[test]
    fn lifting_a_non_solution_fails() {
        let h = fixtures::two_vertex_bundle(2);
        let inner = h
            .faces()
            .iter()
            .map(|f| f.id)
            .find(|&f| f != h.outer_face())
            .unwrap();
        let (_inst, lift) = build_parity_instance(&h, &BTreeSet::from([inner])).unwrap();
        // An empty "tree" on two vertices is not spanning.
        let bogus = StppSolution { tree: BTreeSet::new() };
        assert!(parity_tree_to_face_tree(&h, &lift, &bogus).is_err());
    }

    #[test]
    fn decide_cr2_on_cube() {
        let g = fixtures::cube();
        let coloring = face_coloring(&g, 3).unwrap().swapped_to(g.outer_face(), 3);
        let c = decide_cr2(&g, &coloring).unwrap().expect("cube is hamiltonian");
        assert_eq!(c.cycle.len(), 8);
    }

    #[test]
    fn decide_cr2_on_hexagonal_prism() {
        // Hexagons as 1-faces (the reduction has two degree-6 vertices);
        // the outer face must be a square so it can take color 3.
        let g0 = fixtures::even_prism(3);
        let quad = g0.faces().iter().find(|f| f.len() == 4).unwrap().id;
        let g = g0.with_outer(quad).unwrap();
        let coloring = face_coloring(&g, 3).unwrap();
        let hex_color = g
            .faces()
            .iter()
            .find(|f| f.len() == 6)
            .map(|f| coloring.color(f.id))
            .unwrap();
        // Permute so hexagons are 1-faces and the outer face is a 3-face.
        let mut perm: Vec<u8> = vec![0, 1, 2, 3];
        let outer_color = coloring.color(g.outer_face());
        assert_ne!(outer_color, hex_color, "outer face of the prism is a square");
        perm[hex_color as usize] = 1;
        perm[outer_color as usize] = 3;
        let third = (1..=3).find(|&c| c != hex_color && c != outer_color).unwrap();
        perm[third as usize] = 2;
        let fixed = coloring.permuted(&perm);
        let c = decide_cr2(&g, &fixed).unwrap().expect("prism is hamiltonian");
        assert_eq!(c.cycle.len(), 12);
    }

    #[test]
    fn decide_cr2_rejects_bad_degrees() {
        // Octagonal prism with octagons as 1-faces: degree 8 in the reduction.
        let g0 = fixtures::even_prism(4);
        let quad = g0.faces().iter().find(|f| f.len() == 4).unwrap().id;
        let g = g0.with_outer(quad).unwrap();
        let coloring = face_coloring(&g, 3).unwrap();
        let oct_color = g
            .faces()
            .iter()
            .find(|f| f.len() == 8)
            .map(|f| coloring.color(f.id))
            .unwrap();
        let outer_color = coloring.color(g.outer_face());
        assert_ne!(outer_color, oct_color);
        let mut perm: Vec<u8> = vec![0, 1, 2, 3];
        perm[oct_color as usize] = 1;
        perm[outer_color as usize] = 3;
        let third = (1..=3).find(|&c| c != oct_color && c != outer_color).unwrap();
        perm[third as usize] = 2;
        let fixed = coloring.permuted(&perm);
        assert!(matches!(
            decide_cr2(&g, &fixed).unwrap_err(),
            Error::BadReducedDegree { .. }
        ));
    }
}
