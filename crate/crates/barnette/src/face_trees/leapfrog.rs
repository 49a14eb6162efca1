//! Leapfrog correspondences: the reduction of the leapfrog extension by the
//! face images is the dual graph, and hamiltonian cycles lift through the
//! hexagons with prescribed sides.

use std::collections::BTreeSet;

use super::{FaceTree, HamCycleWithSides};
use crate::atrails::{a_partition, is_non_separating, ATrail};
use crate::error::{Error, Result};
use crate::plane_graph::{
    dual, embedded_isomorphism, face_coloring, DartId, EdgeId, FaceColoring, FaceId, IsoMaps,
    PlaneGraph, VertexId,
};
use crate::transforms::{contract_facial_factor, leapfrog, Leapfrog, ReducedGraph};

/// Everything the leapfrog pipelines need, built once per base graph.
#[derive(Clone, Debug)]
pub struct LeapfrogContext {
    pub base: PlaneGraph,
    pub lf: Leapfrog,
    /// Reduction of the leapfrog graph by the face-image factor; the outer
    /// face is re-designated to a class-2 hexagon image so that class-1
    /// hexagon images are bounded.
    pub rg: ReducedGraph,
    /// 3-face-coloring of the leapfrog graph: face images are 3-faces,
    /// hexagons split 1/2 by the bipartition of the base.
    pub coloring: FaceColoring,
}

impl LeapfrogContext {
    /// Hexagon color (1 or 2) of a base vertex.
    pub fn hexagon_color(&self, v: VertexId) -> u8 {
        self.coloring.color(self.lf.hexagon[v.0])
    }
}

pub fn leapfrog_context(g: &PlaneGraph) -> Result<LeapfrogContext> {
    let bipartition = g.bipartition().ok_or(Error::NotBipartite)?;
    let lf = leapfrog(g)?;

    let mut colors = vec![0u8; lf.graph.face_count()];
    for f in g.faces() {
        colors[lf.face_map[f.id.0].0] = 3;
    }
    for v in g.vertices() {
        colors[lf.hexagon[v.0].0] = if bipartition[v.0] == bipartition[0] { 1 } else { 2 };
    }
    let coloring = FaceColoring { palette: 3, colors };
    debug_assert!(coloring.is_proper(&lf.graph));

    let factor: BTreeSet<FaceId> = lf.face_map.iter().copied().collect();
    let mut rg = contract_facial_factor(&lf.graph, &factor)?;
    // Class-1 hexagon images are the face-tree candidates;
    // anchor the outer face at a class-2 hexagon image.
    let outer_hexagon = g
        .vertices()
        .find(|&v| coloring.color(lf.hexagon[v.0]) == 2)
        .ok_or_else(|| Error::ColoringShape("no class-2 hexagon".into()))?;
    let outer_face = rg
        .h_face_of(lf.hexagon[outer_hexagon.0])
        .expect("hexagons survive the face-image contraction");
    rg.h = rg.h.with_outer(outer_face)?;

    Ok(LeapfrogContext { base: g.clone(), lf, rg, coloring })
}

/// Verifies `G* = Lf(G)/Q_F`: builds both sides and returns an
/// embedding-respecting isomorphism (a failure is an implementation bug and
/// is surfaced as an error).
pub fn lf_identity_check(g: &PlaneGraph) -> Result<IsoMaps> {
    let ctx = leapfrog_context(g)?;
    let d = dual(g)?;
    embedded_isomorphism(&ctx.rg.h, &d.graph, false).ok_or_else(|| {
        Error::DartStructure(format!(
            "no isomorphism between the {}-vertex reduction and the dual",
            ctx.rg.h.vertex_count()
        ))
    })
}

/// Lifts a hamiltonian cycle of the base graph to one of its leapfrog
/// extension: the shared edges of the cycle edges are kept, and inside each
/// visited hexagon the connecting path swings toward the outside of the base
/// cycle for 1-hexagons and toward the inside for 2-hexagons.  (With sides
/// taken combinatorially against the designated outer face, this uniform
/// rule already closes the cycle; no special case at the starting hexagon is
/// needed.)  The lifted cycle has every 1-hexagon inside and every 2-hexagon
/// outside, which is verified before returning.
pub fn hc_lift_leapfrog(
    ctx: &LeapfrogContext,
    base_cycle: &BTreeSet<EdgeId>,
) -> Result<HamCycleWithSides> {
    let g = &ctx.base;
    let c0 = HamCycleWithSides::from_edges(g, base_cycle.clone())?;
    let walk = base_walk(g, base_cycle)?;
    let n = walk.len();

    let lf = &ctx.lf.graph;
    let shared_edge = |d: DartId| lf.edge_of(DartId(3 * d.0));
    let mut cycle: BTreeSet<EdgeId> = walk.iter().map(|&d| shared_edge(d)).collect();

    for k in 0..n {
        let d_in = walk[k];
        let d_out = walk[(k + 1) % n];
        let w = g.head(d_in);
        let third = g
            .rotation(w)
            .find(|&x| x != g.twin(d_in) && x != d_out)
            .expect("cubic vertex has a third dart");
        let want_inside = ctx.hexagon_color(w) == 2;
        let third_side_inside = c0.is_inside(g.face_of(third));

        let hex = ctx.lf.hexagon[w.0];
        let boundary: Vec<EdgeId> = lf.face_edges(hex);
        let e_in = shared_edge(d_in);
        let e_out = shared_edge(d_out);
        let e_third = shared_edge(third);
        let arcs = split_arcs(&boundary, e_in, e_out);
        let (long, short) = if arcs.0.contains(&e_third) {
            (arcs.0, arcs.1)
        } else {
            (arcs.1, arcs.0)
        };
        // The long arc passes on the side of the third edge.
        let chosen = if third_side_inside == want_inside { long } else { short };
        cycle.extend(chosen);
    }

    let lifted = HamCycleWithSides::from_edges(lf, cycle)?;
    audit_leapfrog_sides(ctx, &lifted)?;
    Ok(lifted)
}

/// Side audit of a lifted cycle: 1-hexagons inside, 2-hexagons outside.
pub fn audit_leapfrog_sides(ctx: &LeapfrogContext, c: &HamCycleWithSides) -> Result<()> {
    for v in ctx.base.vertices() {
        let hex = ctx.lf.hexagon[v.0];
        match ctx.hexagon_color(v) {
            1 if !c.is_inside(hex) => {
                return Err(Error::ColoringShape(format!("1-hexagon of {v} lies outside")))
            }
            2 if c.is_inside(hex) => {
                return Err(Error::ColoringShape(format!("2-hexagon of {v} lies inside")))
            }
            _ => {}
        }
    }
    Ok(())
}

/// Projects a lifted cycle back to the base.  A base edge belongs to the
/// projected cycle exactly when its two face images lie on opposite sides of
/// the lifted cycle (long hexagon arcs pass through the shared edges of
/// chords, so shared-edge membership alone would over-count).  The side
/// shape is verified first; the trace must have exactly one edge per base
/// vertex.
pub fn hc_project_leapfrog(
    ctx: &LeapfrogContext,
    c: &HamCycleWithSides,
) -> Result<BTreeSet<EdgeId>> {
    audit_leapfrog_sides(ctx, c)?;
    let g = &ctx.base;
    let trace: BTreeSet<EdgeId> = g
        .edges()
        .filter(|&e| {
            let (f1, f2) = g.edge_faces(e);
            c.is_inside(ctx.lf.face_map[f1.0]) != c.is_inside(ctx.lf.face_map[f2.0])
        })
        .collect();
    if trace.len() != g.vertex_count() {
        return Err(Error::NotHamiltonian(format!(
            "face-image trace has {} edges for {} vertices",
            trace.len(),
            g.vertex_count()
        )));
    }
    HamCycleWithSides::from_edges(g, trace.clone())?;
    Ok(trace)
}

/// From a non-separating A-trail of the dual, builds the face tree of the
/// leapfrog reduction that contains all class-1 hexagon images, with proper
/// vertices exactly the face images inside the lifted cycle.
pub fn face_tree_from_dual_trail(ctx: &LeapfrogContext, trail: &ATrail) -> Result<(FaceTree, HamCycleWithSides)> {
    let d = dual(&ctx.base)?;
    if !is_non_separating(&d.graph, trail)? {
        return Err(Error::SeparatingATrail(d.graph.outer_face()));
    }
    // The A-partition of the dual splits the base faces in two; the class
    // boundary is a hamiltonian cycle of the base.
    let two = face_coloring(&d.graph, 2)?;
    let partition = a_partition(&d.graph, trail, &two)?;
    let side_of_face = |f: FaceId| partition.v1.contains(&d.vertex_of_face[f.0]);
    let base_cycle: BTreeSet<EdgeId> = ctx
        .base
        .edges()
        .filter(|&e| {
            let (f1, f2) = ctx.base.edge_faces(e);
            side_of_face(f1) != side_of_face(f2)
        })
        .collect();
    let lifted = hc_lift_leapfrog(ctx, &base_cycle)?;

    // Tree faces: images of the class-1 hexagons; proper vertices: the
    // contracted face images lying inside the lifted cycle.
    let faces: BTreeSet<FaceId> = ctx
        .base
        .vertices()
        .filter(|&v| ctx.hexagon_color(v) == 1)
        .map(|v| {
            ctx.rg
                .h_face_of(ctx.lf.hexagon[v.0])
                .expect("hexagons survive the contraction")
        })
        .collect();
    let proper: BTreeSet<VertexId> = ctx
        .rg
        .vertex_map
        .iter()
        .enumerate()
        .filter(|&(_, &f)| lifted.is_inside(f))
        .map(|(w, _)| VertexId(w))
        .collect();
    let ft = FaceTree { faces, proper };
    super::is_qstf(&ctx.rg.h, &ft.proper, &ft.faces).map_err(Error::Qstf)?;
    Ok((ft, lifted))
}

/// The base cycle as a dart walk from its smallest vertex.
fn base_walk(g: &PlaneGraph, cycle: &BTreeSet<EdgeId>) -> Result<Vec<DartId>> {
    let start = g
        .vertices()
        .find(|&v| g.rotation(v).any(|d| cycle.contains(&g.edge_of(d))))
        .ok_or_else(|| Error::NotHamiltonian("empty cycle".into()))?;
    let mut first: Vec<DartId> = g
        .rotation(start)
        .filter(|&d| cycle.contains(&g.edge_of(d)))
        .collect();
    first.sort_by_key(|&d| (g.head(d), d));
    let mut d = first[0];
    let mut walk = Vec::new();
    loop {
        walk.push(d);
        let at = g.head(d);
        let back = g.twin(d);
        let next = g
            .rotation(at)
            .find(|&x| x != back && cycle.contains(&g.edge_of(x)))
            .ok_or_else(|| Error::NotHamiltonian("cycle walk got stuck".into()))?;
        d = next;
        if g.origin(d) == start {
            break;
        }
        if walk.len() > g.vertex_count() {
            return Err(Error::NotHamiltonian("walk revisits vertices".into()));
        }
    }
    Ok(walk)
}

/// Splits a cyclic edge list into the two arcs between two removed edges.
fn split_arcs(boundary: &[EdgeId], e1: EdgeId, e2: EdgeId) -> (Vec<EdgeId>, Vec<EdgeId>) {
    let p1 = boundary.iter().position(|&e| e == e1).expect("edge on boundary");
    let p2 = boundary.iter().position(|&e| e == e2).expect("edge on boundary");
    let n = boundary.len();
    let mut first = Vec::new();
    let mut k = (p1 + 1) % n;
    while k != p2 {
        first.push(boundary[k]);
        k = (k + 1) % n;
    }
    let mut second = Vec::new();
    let mut k = (p2 + 1) % n;
    while k != p1 {
        second.push(boundary[k]);
        k = (k + 1) % n;
    }
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atrails::{find_a_trails, TrailMode};
    use crate::oracle::{self, fixtures, SearchBudget};

    #[test]
    fn identity_check_on_cube_gives_octahedron() {
        let maps = lf_identity_check(&fixtures::cube()).unwrap();
        assert_eq!(maps.vertex_map.len(), 6);
    }

    #[test]
    fn identity_check_on_prism() {
        assert!(lf_identity_check(&fixtures::even_prism(3)).is_ok());
    }

    #[test]
    fn reduction_counts_match_dual() {
        let g = fixtures::even_prism(4);
        let ctx = leapfrog_context(&g).unwrap();
        let d = dual(&g).unwrap().graph;
        assert_eq!(ctx.rg.h.vertex_count(), d.vertex_count());
        assert_eq!(ctx.rg.h.edge_count(), d.edge_count());
        assert_eq!(ctx.rg.h.face_count(), d.face_count());
        assert_eq!(ctx.rg.h.degree_sequence(), d.degree_sequence());
    }

    #[test]
    fn lift_and_project_roundtrip_on_cube() {
        let g = fixtures::cube();
        let ctx = leapfrog_context(&g).unwrap();
        let cycles = oracle::find_hc(
            &g,
            &BTreeSet::new(),
            &BTreeSet::new(),
            None,
            &SearchBudget::default(),
        )
        .expect_complete();
        for c in cycles {
            let lifted = hc_lift_leapfrog(&ctx, &c.edges).unwrap();
            assert_eq!(lifted.cycle.len(), 24);
            let back = hc_project_leapfrog(&ctx, &lifted).unwrap();
            assert_eq!(back, c.edges, "project(lift(c)) = c");
        }
    }

    #[test]
    fn tree_from_nonseparating_trail() {
        let g = fixtures::cube();
        let ctx = leapfrog_context(&g).unwrap();
        let oct = dual(&g).unwrap().graph;
        let trail = find_a_trails(&oct, TrailMode::NonseparatingFirst, None, &SearchBudget::default())
            .unwrap()
            .expect_complete()
            .pop()
            .expect("octahedron has a non-separating A-trail");
        let (ft, lifted) = face_tree_from_dual_trail(&ctx, &trail).unwrap();
        // The tree contains all four class-1 hexagon images.
        assert_eq!(ft.faces.len(), 4);
        audit_leapfrog_sides(&ctx, &lifted).unwrap();
    }

    #[test]
    fn separating_trail_is_rejected() {
        let g = fixtures::cube();
        let ctx = leapfrog_context(&g).unwrap();
        let oct = dual(&g).unwrap().graph;
        let all = find_a_trails(&oct, TrailMode::All, None, &SearchBudget::default())
            .unwrap()
            .expect_complete();
        if let Some(sep) = all
            .into_iter()
            .find(|t| !is_non_separating(&oct, t).unwrap())
        {
            assert!(face_tree_from_dual_trail(&ctx, &sep).is_err());
        }
    }
}
