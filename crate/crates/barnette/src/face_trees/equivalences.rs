//! The four-way equivalence for 3-face-colored cubic bipartite plane graphs
//! whose outer face has color 3:
//!
//! 1. a hamiltonian cycle with all 2-faces inside and all 3-faces outside;
//! 2. an A-trail of the reduction by the 1-faces;
//! 3. a spanning tree of 1-faces of the reduction by the 2-faces;
//! 4. a spanning tree of 1-faces of the reduction by the 3-faces.
//!
//! Each form has its own verifier and its own independent exhaustive search;
//! the converters route through form 1.

use std::collections::BTreeSet;

use super::{qstf_to_hamiltonian, FaceTree, HamCycleWithSides};
use crate::atrails::{atrail_to_qstf, check_a_trail, ATrail};
use crate::error::{Error, Result};
use crate::oracle::{self, Outcome, SearchBudget};
use crate::plane_graph::{DartId, FaceColoring, FaceId, PlaneGraph, VertexId};
use crate::transforms::{contract_facial_factor, ReducedGraph};

/// Precomputed reductions for the four-way equivalence.
#[derive(Clone, Debug)]
pub struct FourFormContext {
    pub g: PlaneGraph,
    pub coloring: FaceColoring,
    /// Reduction by the 1-faces.
    pub rg1: ReducedGraph,
    /// Reduction by the 2-faces.
    pub rg2: ReducedGraph,
    /// Reduction by the 3-faces (outer face re-designated to a 2-face image).
    pub rg3: ReducedGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FourForm {
    I,
    Ii,
    Iii,
    Iv,
}

#[derive(Clone, Debug)]
pub enum FourFormObject {
    /// Hamiltonian cycle with 2-faces inside, 3-faces outside.
    CycleI(HamCycleWithSides),
    /// A-trail of the 1-face reduction.
    TrailIi(ATrail),
    /// Spanning tree of 1-faces of the 2-face reduction.
    TreeIii(FaceTree),
    /// Spanning tree of 1-faces of the 3-face reduction.
    TreeIv(FaceTree),
}

impl FourFormObject {
    pub fn form(&self) -> FourForm {
        match self {
            FourFormObject::CycleI(_) => FourForm::I,
            FourFormObject::TrailIi(_) => FourForm::Ii,
            FourFormObject::TreeIii(_) => FourForm::Iii,
            FourFormObject::TreeIv(_) => FourForm::Iv,
        }
    }
}

/// Builds the context; the coloring must be a proper 3-face-coloring with
/// the outer face colored 3 (the converters refuse to recolor silently).
pub fn four_form_context(g: &PlaneGraph, coloring: &FaceColoring) -> Result<FourFormContext> {
    if coloring.palette != 3 || !coloring.is_proper(g) {
        return Err(Error::ColoringShape("a proper 3-face-coloring is required".into()));
    }
    if coloring.color(g.outer_face()) != 3 {
        return Err(Error::OuterFaceNotColor3(coloring.color(g.outer_face())));
    }
    let rg1 = contract_facial_factor(g, &coloring.class(1))?;
    let rg2 = contract_facial_factor(g, &coloring.class(2))?;
    let mut rg3 = contract_facial_factor(g, &coloring.class(3))?;
    // The outer face of g is a 3-face and gets contracted; designate the
    // image of the smallest 2-face as the outer face so that trees of
    // 1-faces are trees of bounded faces.
    let smallest_two_face = *coloring.class(2).iter().next().ok_or_else(|| {
        Error::ColoringShape("the coloring has no 2-faces".into())
    })?;
    let outer3 = rg3
        .h_face_of(smallest_two_face)
        .expect("2-faces survive the 3-face contraction");
    rg3.h = rg3.h.with_outer(outer3)?;
    Ok(FourFormContext {
        g: g.clone(),
        coloring: coloring.clone(),
        rg1,
        rg2,
        rg3,
    })
}

/// Verifies the form-1 side shape: 2-faces inside, 3-faces outside.
pub fn verify_form_i(ctx: &FourFormContext, c: &HamCycleWithSides) -> Result<()> {
    for f in ctx.g.faces() {
        match ctx.coloring.color(f.id) {
            2 if !c.is_inside(f.id) => {
                return Err(Error::ColoringShape(format!("2-face {} lies outside", f.id)))
            }
            3 if c.is_inside(f.id) => {
                return Err(Error::ColoringShape(format!("3-face {} lies inside", f.id)))
            }
            _ => {}
        }
    }
    Ok(())
}

/// The 2-coloring of the 1-face reduction induced by the 3-face-coloring
/// (color 3 becomes 1 so that the outer face has color 1).
fn induced_two_coloring(ctx: &FourFormContext) -> FaceColoring {
    let colors = ctx
        .rg1
        .face_map
        .iter()
        .map(|&sf| match ctx.coloring.color(sf) {
            3 => 1,
            2 => 2,
            c => panic!("1-face {sf} with color {c} survived the 1-face contraction"),
        })
        .collect();
    FaceColoring { palette: 2, colors }
}

fn to_form_i(ctx: &FourFormContext, input: &FourFormObject) -> Result<HamCycleWithSides> {
    match input {
        FourFormObject::CycleI(c) => {
            verify_form_i(ctx, c)?;
            Ok(c.clone())
        }
        FourFormObject::TrailIi(trail) => {
            check_a_trail(&ctx.rg1.h, &trail.darts)?;
            let two = induced_two_coloring(ctx);
            let ft = atrail_to_qstf(&ctx.rg1.h, trail, &two)?;
            let c = qstf_to_hamiltonian(&ctx.rg1, &ft)?;
            verify_form_i(ctx, &c)?;
            Ok(c)
        }
        FourFormObject::TreeIii(ft) => {
            verify_tree_of_one_faces(ctx, &ctx.rg2, ft)?;
            let c = qstf_to_hamiltonian(&ctx.rg2, ft)?;
            verify_form_i(ctx, &c)?;
            Ok(c)
        }
        FourFormObject::TreeIv(ft) => {
            verify_tree_of_one_faces(ctx, &ctx.rg3, ft)?;
            let c = qstf_to_hamiltonian(&ctx.rg3, ft)?;
            verify_form_i(ctx, &c)?;
            Ok(c)
        }
    }
}

/// A form-3/4 object must be a spanning tree whose faces are 1-face images.
fn verify_tree_of_one_faces(ctx: &FourFormContext, rg: &ReducedGraph, ft: &FaceTree) -> Result<()> {
    if ft.proper.len() != rg.h.vertex_count() {
        return Err(Error::ColoringShape("the tree must be spanning (U = V)".into()));
    }
    for &f in &ft.faces {
        let sf = rg.face_map[f.0];
        if ctx.coloring.color(sf) != 1 {
            return Err(Error::ColoringShape(format!(
                "tree face {f} is the image of a {}-face, not a 1-face",
                ctx.coloring.color(sf)
            )));
        }
    }
    super::is_qstf(&rg.h, &ft.proper, &ft.faces).map_err(Error::Qstf)
}

fn from_form_i(ctx: &FourFormContext, c: &HamCycleWithSides, target: FourForm) -> Result<FourFormObject> {
    match target {
        FourForm::I => Ok(FourFormObject::CycleI(c.clone())),
        FourForm::Ii => {
            // The surviving edges of the cycle, in traversal order, form the
            // induced closed trail of the 1-face reduction.
            let mut h_of_source = vec![usize::MAX; ctx.g.dart_count()];
            for (hd, &sd) in ctx.rg1.dart_map.iter().enumerate() {
                h_of_source[sd.0] = hd;
            }
            let walk = cycle_dart_walk(&ctx.g, &c.cycle)?;
            let mut darts: Vec<DartId> = walk
                .into_iter()
                .filter(|d| h_of_source[d.0] != usize::MAX)
                .map(|d| DartId(h_of_source[d.0]))
                .collect();
            // Canonical rotation: start at the smallest dart.
            let min_pos = darts
                .iter()
                .enumerate()
                .min_by_key(|&(_, d)| d)
                .map(|(i, _)| i)
                .ok_or_else(|| Error::NotEulerianTrail("no surviving edges".into()))?;
            darts.rotate_left(min_pos);
            let trail = ATrail { darts };
            check_a_trail(&ctx.rg1.h, &trail.darts)?;
            Ok(FourFormObject::TrailIi(trail))
        }
        FourForm::Iii => {
            let faces = one_face_images_by_side(ctx, &ctx.rg2, c, true);
            let proper: BTreeSet<VertexId> = ctx.rg2.h.vertices().collect();
            let ft = FaceTree { faces, proper };
            verify_tree_of_one_faces(ctx, &ctx.rg2, &ft)?;
            Ok(FourFormObject::TreeIii(ft))
        }
        FourForm::Iv => {
            let faces = one_face_images_by_side(ctx, &ctx.rg3, c, false);
            let proper: BTreeSet<VertexId> = ctx.rg3.h.vertices().collect();
            let ft = FaceTree { faces, proper };
            verify_tree_of_one_faces(ctx, &ctx.rg3, &ft)?;
            Ok(FourFormObject::TreeIv(ft))
        }
    }
}

fn one_face_images_by_side(
    ctx: &FourFormContext,
    rg: &ReducedGraph,
    c: &HamCycleWithSides,
    inside: bool,
) -> BTreeSet<FaceId> {
    rg.face_map
        .iter()
        .enumerate()
        .filter(|&(_, &sf)| ctx.coloring.color(sf) == 1 && c.is_inside(sf) == inside)
        .map(|(hf, _)| FaceId(hf))
        .collect()
}

/// The cycle as a closed dart walk starting at vertex 0, heading toward its
/// smaller cycle neighbour.
fn cycle_dart_walk(g: &PlaneGraph, cycle: &BTreeSet<crate::plane_graph::EdgeId>) -> Result<Vec<DartId>> {
    let start = VertexId(0);
    let mut first: Vec<DartId> = g
        .rotation(start)
        .filter(|&d| cycle.contains(&g.edge_of(d)))
        .collect();
    first.sort_by_key(|&d| (g.head(d), d));
    let mut walk = Vec::with_capacity(g.vertex_count());
    let mut d = *first.first().ok_or_else(|| Error::NotHamiltonian("vertex 0 off the cycle".into()))?;
    loop {
        walk.push(d);
        let at = g.head(d);
        let back = g.twin(d);
        let next = g
            .rotation(at)
            .find(|&x| x != back && cycle.contains(&g.edge_of(x)))
            .ok_or_else(|| Error::NotHamiltonian("cycle walk got stuck".into()))?;
        d = next;
        if g.origin(d) == start && walk.len() == g.vertex_count() {
            break;
        }
        if walk.len() > g.vertex_count() {
            return Err(Error::NotHamiltonian("walk revisits vertices".into()));
        }
    }
    Ok(walk)
}

/// Converts an object of one form into another, routing through form 1 by
/// the constructive arguments.
pub fn four_form_convert(ctx: &FourFormContext, input: &FourFormObject, target: FourForm) -> Result<FourFormObject> {
    let hub = to_form_i(ctx, input)?;
    from_form_i(ctx, &hub, target)
}

/// Independent per-form existence counts (for cross-checking the
/// equivalence): each form is decided by its own exhaustive search.
pub fn four_form_counts(ctx: &FourFormContext, budget: &SearchBudget) -> Result<Outcome<[usize; 4]>> {
    // Form 1: all hamiltonian cycles filtered by the side shape.
    let cycles = match oracle::find_hc(&ctx.g, &BTreeSet::new(), &BTreeSet::new(), None, budget) {
        Outcome::Complete(cs) => cs,
        Outcome::OverBudget { explored } => return Ok(Outcome::OverBudget { explored }),
    };
    let count_i = cycles
        .into_iter()
        .filter_map(|c| HamCycleWithSides::from_edges(&ctx.g, c.edges).ok())
        .filter(|c| verify_form_i(ctx, c).is_ok())
        .count();

    // Form 2: A-trails of the 1-face reduction.
    let trails = match crate::atrails::find_a_trails(
        &ctx.rg1.h,
        crate::atrails::TrailMode::All,
        None,
        budget,
    )? {
        Outcome::Complete(ts) => ts,
        Outcome::OverBudget { explored } => return Ok(Outcome::OverBudget { explored }),
    };
    let count_ii = trails.len();

    // Forms 3 and 4: brute-force spanning trees of 1-face images.
    let count_of = |rg: &ReducedGraph| -> Result<Outcome<usize>> {
        let candidates: BTreeSet<FaceId> = rg
            .face_map
            .iter()
            .enumerate()
            .filter(|&(_, &sf)| ctx.coloring.color(sf) == 1)
            .map(|(hf, _)| FaceId(hf))
            .collect();
        Ok(oracle::enumerate_face_trees_bruteforce(
            &rg.h,
            &candidates,
            super::TreeMode::Spanning,
            budget,
        )
        .map(|trees| trees.len()))
    };
    let count_iii = match count_of(&ctx.rg2)? {
        Outcome::Complete(n) => n,
        Outcome::OverBudget { explored } => return Ok(Outcome::OverBudget { explored }),
    };
    let count_iv = match count_of(&ctx.rg3)? {
        Outcome::Complete(n) => n,
        Outcome::OverBudget { explored } => return Ok(Outcome::OverBudget { explored }),
    };
    Ok(Outcome::Complete([count_i, count_ii, count_iii, count_iv]))
}
