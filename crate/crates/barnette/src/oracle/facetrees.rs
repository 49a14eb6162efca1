//! Brute-force enumeration of (quasi) spanning trees of faces.
//!
//! Independent of `face_trees::find_face_tree`: this code walks every subset
//! of the candidate faces (and every proper/quasi split) and filters through
//! the definition checker.

use std::collections::BTreeSet;

use super::{Meter, Outcome, SearchBudget};
use crate::face_trees::{is_qstf, FaceTree, TreeMode};
use crate::plane_graph::{FaceId, PlaneGraph, VertexId};

/// Enumerates all face trees over subsets of `candidates`.  In `Spanning`
/// mode only `U = V(h)` is considered; in `Quasi` mode every admissible
/// proper set is enumerated as well (so spanning trees appear too).
pub fn enumerate_face_trees_bruteforce(
    h: &PlaneGraph,
    candidates: &BTreeSet<FaceId>,
    mode: TreeMode,
    budget: &SearchBudget,
) -> Outcome<Vec<FaceTree>> {
    let mut meter = Meter::new(budget);
    let cands: Vec<FaceId> = candidates
        .iter()
        .copied()
        .filter(|&f| f != h.outer_face())
        .collect();
    let mut chosen: Vec<FaceId> = Vec::new();
    let mut out: Vec<FaceTree> = Vec::new();
    let complete = subset_dfs(h, &cands, 0, &mut chosen, mode, &mut out, &mut meter);
    if complete {
        Outcome::Complete(out)
    } else {
        Outcome::OverBudget { explored: meter.explored() }
    }
}

fn subset_dfs(
    h: &PlaneGraph,
    cands: &[FaceId],
    next: usize,
    chosen: &mut Vec<FaceId>,
    mode: TreeMode,
    out: &mut Vec<FaceTree>,
    meter: &mut Meter,
) -> bool {
    if !meter.tick() {
        return false;
    }
    if next == cands.len() {
        if !chosen.is_empty() {
            let faces: BTreeSet<FaceId> = chosen.iter().copied().collect();
            check_all_splits(h, &faces, mode, out, meter);
        }
        return true;
    }
    chosen.push(cands[next]);
    if !subset_dfs(h, cands, next + 1, chosen, mode, out, meter) {
        return false;
    }
    chosen.pop();
    subset_dfs(h, cands, next + 1, chosen, mode, out, meter)
}

fn check_all_splits(
    h: &PlaneGraph,
    faces: &BTreeSet<FaceId>,
    mode: TreeMode,
    out: &mut Vec<FaceTree>,
    meter: &mut Meter,
) {
    let everyone: BTreeSet<VertexId> = h.vertices().collect();
    match mode {
        TreeMode::Spanning => {
            if is_qstf(h, &everyone, faces).is_ok() {
                out.push(FaceTree { faces: faces.clone(), proper: everyone });
            }
        }
        TreeMode::Quasi => {
            // A vertex may be quasi only when it lies on exactly deg/2 faces
            // of T; every split of the eligible set is tried.
            let eligible: Vec<VertexId> = h
                .vertices()
                .filter(|&v| {
                    let count =
                        faces.iter().filter(|&&f| h.incidence_multiplicity(v, f) > 0).count();
                    count == h.degree(v) / 2
                })
                .collect();
            let mut quasi: Vec<VertexId> = Vec::new();
            split_dfs(h, faces, &eligible, 0, &mut quasi, out, meter);
        }
    }
}

fn split_dfs(
    h: &PlaneGraph,
    faces: &BTreeSet<FaceId>,
    eligible: &[VertexId],
    next: usize,
    quasi: &mut Vec<VertexId>,
    out: &mut Vec<FaceTree>,
    meter: &mut Meter,
) {
    meter.tick();
    if next == eligible.len() {
        let proper: BTreeSet<VertexId> =
            h.vertices().filter(|v| !quasi.contains(v)).collect();
        if is_qstf(h, &proper, faces).is_ok() {
            out.push(FaceTree { faces: faces.clone(), proper });
        }
        return;
    }
    split_dfs(h, faces, eligible, next + 1, quasi, out, meter);
    quasi.push(eligible[next]);
    split_dfs(h, faces, eligible, next + 1, quasi, out, meter);
    quasi.pop();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;

    #[test]
    fn single_bounded_face_of_cycle_is_a_spanning_tree() {
        let g = fixtures::cycle(4);
        let bounded: BTreeSet<FaceId> = g
            .faces()
            .iter()
            .map(|f| f.id)
            .filter(|&f| f != g.outer_face())
            .collect();
        let trees =
            enumerate_face_trees_bruteforce(&g, &bounded, TreeMode::Spanning, &SearchBudget::default())
                .expect_complete();
        assert_eq!(trees.len(), 1);
        assert!(trees[0].is_spanning(&g));
    }

    #[test]
    fn bundle_face_trees() {
        // Two vertices, four parallel edges: three bounded digons, each a
        // spanning tree of faces on its own; no larger subset qualifies.
        let g = fixtures::two_vertex_bundle(4);
        let bounded: BTreeSet<FaceId> = g
            .faces()
            .iter()
            .map(|f| f.id)
            .filter(|&f| f != g.outer_face())
            .collect();
        let trees =
            enumerate_face_trees_bruteforce(&g, &bounded, TreeMode::Spanning, &SearchBudget::default())
                .expect_complete();
        assert_eq!(trees.len(), 3);
    }
}
