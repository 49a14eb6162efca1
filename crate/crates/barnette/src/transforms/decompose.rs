//! 2-edge-cut decomposition and vertex substitution.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::plane_graph::{DartId, EdgeId, PlaneGraph, VertexId};

/// One terminal block of the decomposition.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: PlaneGraph,
    /// Edges every hamiltonian cycle of this block must traverse.
    pub forced: BTreeSet<EdgeId>,
    /// Component vertex → vertex of the input graph.
    pub to_input: Vec<VertexId>,
}

/// The split history; cut endpoints are reported in input-vertex ids.
#[derive(Clone, Debug)]
pub enum DecompTree {
    Leaf { component: usize },
    Split {
        cut: [(VertexId, VertexId); 2],
        left: Box<DecompTree>,
        right: Box<DecompTree>,
    },
}

#[derive(Clone, Debug)]
pub struct DecompositionResult {
    pub components: Vec<Component>,
    pub provenance: DecompTree,
}

/// Recursively splits a 2-connected cubic plane graph along 2-edge-cuts,
/// joining the cut endpoints on each side by a forced edge, until every
/// block is 3-edge-connected (a 3-connected graph or the 2-vertex cubic
/// multigraph).  Cuts are chosen lexicographically smallest first, so the
/// decomposition is deterministic.
pub fn decompose_2cuts(r: &PlaneGraph) -> Result<DecompositionResult> {
    if let Some(v) = r.vertices().find(|&v| r.degree(v) != 3) {
        return Err(Error::NotCubic { vertex: v, degree: r.degree(v) });
    }
    if r.vertex_count() > 2 && crate::plane_graph::vertex_connectivity(r) < 2 {
        return Err(Error::NotKConnected(2));
    }
    let mut components = Vec::new();
    let to_input: Vec<VertexId> = r.vertices().collect();
    let provenance = decompose_rec(r.clone(), BTreeSet::new(), to_input, &mut components)?;
    Ok(DecompositionResult { components, provenance })
}

fn decompose_rec(
    g: PlaneGraph,
    forced: BTreeSet<EdgeId>,
    to_input: Vec<VertexId>,
    out: &mut Vec<Component>,
) -> Result<DecompTree> {
    let cut = find_smallest_2cut(&g);
    let Some((e1, e2)) = cut else {
        out.push(Component { graph: g, forced, to_input });
        return Ok(DecompTree::Leaf { component: out.len() - 1 });
    };

    // Orient the cut darts so a1 and c1 sit on the same side.
    let (a1, a2) = g.edge_darts(e1);
    let (mut c1, mut c2) = g.edge_darts(e2);
    let side = side_of(&g, e1, e2);
    if side[g.origin(c1).0] != side[g.origin(a1).0] {
        std::mem::swap(&mut c1, &mut c2);
    }
    debug_assert_eq!(side[g.origin(a1).0], side[g.origin(c1).0]);
    if g.origin(a1) == g.origin(c1) || g.origin(a2) == g.origin(c2) {
        return Err(Error::DartStructure(
            "2-cut endpoints coincide; the graph has a bridge".into(),
        ));
    }
    let cut_record = [
        (to_input[g.origin(a1).0], to_input[g.origin(a2).0]),
        (to_input[g.origin(c1).0], to_input[g.origin(c2).0]),
    ];

    let mut new_twin: Vec<usize> = g.darts().map(|d| g.twin(d).0).collect();
    new_twin[a1.0] = c1.0;
    new_twin[c1.0] = a1.0;
    new_twin[a2.0] = c2.0;
    new_twin[c2.0] = a2.0;

    let left = build_side(&g, &new_twin, &side, side[g.origin(a1).0], &forced, &to_input, (a1, c1))?;
    let right = build_side(&g, &new_twin, &side, side[g.origin(a2).0], &forced, &to_input, (a2, c2))?;

    let l = decompose_rec(left.0, left.1, left.2, out)?;
    let r = decompose_rec(right.0, right.1, right.2, out)?;
    Ok(DecompTree::Split { cut: cut_record, left: Box::new(l), right: Box::new(r) })
}

/// Lexicographically smallest pair of edges whose removal disconnects.
fn find_smallest_2cut(g: &PlaneGraph) -> Option<(EdgeId, EdgeId)> {
    let edges: Vec<EdgeId> = g.edges().collect();
    for (i, &e1) in edges.iter().enumerate() {
        for &e2 in &edges[i + 1..] {
            if disconnects(g, e1, e2) {
                return Some((e1, e2));
            }
        }
    }
    None
}

fn disconnects(g: &PlaneGraph, e1: EdgeId, e2: EdgeId) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for d in g.rotation(VertexId(v)) {
            let e = g.edge_of(d);
            if e == e1 || e == e2 {
                continue;
            }
            let w = g.head(d).0;
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count < n
}

/// 2-coloring of vertices by the side of the cut.
fn side_of(g: &PlaneGraph, e1: EdgeId, e2: EdgeId) -> Vec<u8> {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        let label = if start == 0 { 0 } else { 1 };
        side[start] = label;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for d in g.rotation(VertexId(v)) {
                let e = g.edge_of(d);
                if e == e1 || e == e2 {
                    continue;
                }
                let w = g.head(d).0;
                if side[w] == u8::MAX {
                    side[w] = label;
                    stack.push(w);
                }
            }
        }
    }
    side
}

type SideBuild = (PlaneGraph, BTreeSet<EdgeId>, Vec<VertexId>);

fn build_side(
    g: &PlaneGraph,
    new_twin: &[usize],
    side: &[u8],
    label: u8,
    forced: &BTreeSet<EdgeId>,
    to_input: &[VertexId],
    join_darts: (DartId, DartId),
) -> Result<SideBuild> {
    let mut new_of_old = vec![usize::MAX; g.dart_count()];
    let mut rotation: Vec<Vec<usize>> = Vec::new();
    let mut old_of_new: Vec<usize> = Vec::new();
    let mut vert_map: Vec<VertexId> = Vec::new();
    for v in g.vertices() {
        if side[v.0] != label {
            continue;
        }
        let mut darts = Vec::new();
        for d in g.rotation(v) {
            new_of_old[d.0] = old_of_new.len();
            darts.push(old_of_new.len());
            old_of_new.push(d.0);
        }
        rotation.push(darts);
        vert_map.push(to_input[v.0]);
    }
    let twin: Vec<usize> = old_of_new.iter().map(|&d| new_of_old[new_twin[d]]).collect();
    if twin.contains(&usize::MAX) {
        return Err(Error::DartStructure("cut side kept a dangling dart".into()));
    }
    let outer_dart = g
        .face(g.outer_face())
        .boundary
        .iter()
        .map(|&d| new_of_old[d.0])
        .find(|&d| d != usize::MAX)
        .unwrap_or(0);
    let graph = PlaneGraph::from_rotations(rotation, twin, Some(outer_dart))?;

    let mut new_forced: BTreeSet<EdgeId> = BTreeSet::new();
    for &e in forced {
        let (d, t) = g.edge_darts(e);
        if new_of_old[d.0] != usize::MAX && new_of_old[t.0] != usize::MAX {
            new_forced.insert(graph.edge_of(DartId(new_of_old[d.0])));
        }
    }
    // The join edge is always forced.
    new_forced.insert(graph.edge_of(DartId(new_of_old[join_darts.0 .0])));
    Ok((graph, new_forced, vert_map))
}

/// Replaces vertex `x` of `g` by `gadget` minus its vertex `u`: the i-th
/// rotation dart of `x` is spliced to the `pairing[i]`-th rotation dart of
/// `u`.  Both vertices must have degree 3.  A pairing that does not embed in
/// the sphere is rejected.
pub fn substitute_vertex(
    g: &PlaneGraph,
    x: VertexId,
    gadget: &PlaneGraph,
    u: VertexId,
    pairing: &[usize; 3],
) -> Result<PlaneGraph> {
    if g.degree(x) != 3 {
        return Err(Error::SubstitutionDegree { vertex: x, got: g.degree(x), expected: 3 });
    }
    if gadget.degree(u) != 3 {
        return Err(Error::SubstitutionDegree { vertex: u, got: gadget.degree(u), expected: 3 });
    }
    {
        let mut sorted = *pairing;
        sorted.sort_unstable();
        if sorted != [0, 1, 2] {
            return Err(Error::DartStructure("pairing must be a permutation of 0..3".into()));
        }
    }

    let x_darts: Vec<DartId> = g.rotation(x).collect();
    let u_darts: Vec<DartId> = gadget.rotation(u).collect();

    // Combined dart space: g darts first, gadget darts shifted.
    let shift = g.dart_count();
    let mut rotation: Vec<Vec<usize>> = Vec::new();
    let mut keep_g = vec![true; g.dart_count()];
    let mut keep_u = vec![true; gadget.dart_count()];
    for &d in &x_darts {
        keep_g[d.0] = false;
    }
    for &d in &u_darts {
        keep_u[d.0] = false;
    }
    let mut twin: Vec<usize> = vec![usize::MAX; shift + gadget.dart_count()];
    for d in g.darts() {
        twin[d.0] = g.twin(d).0;
    }
    for d in gadget.darts() {
        twin[shift + d.0] = shift + gadget.twin(d).0;
    }
    for i in 0..3 {
        let stub_g = g.twin(x_darts[i]);
        let stub_u = gadget.twin(u_darts[pairing[i]]);
        twin[stub_g.0] = shift + stub_u.0;
        twin[shift + stub_u.0] = stub_g.0;
    }

    let mut new_of_old = vec![usize::MAX; shift + gadget.dart_count()];
    let mut old_of_new: Vec<usize> = Vec::new();
    for v in g.vertices() {
        if v == x {
            continue;
        }
        let mut darts = Vec::new();
        for d in g.rotation(v) {
            new_of_old[d.0] = old_of_new.len();
            darts.push(old_of_new.len());
            old_of_new.push(d.0);
        }
        rotation.push(darts);
    }
    for v in gadget.vertices() {
        if v == u {
            continue;
        }
        let mut darts = Vec::new();
        for d in gadget.rotation(v) {
            new_of_old[shift + d.0] = old_of_new.len();
            darts.push(old_of_new.len());
            old_of_new.push(shift + d.0);
        }
        rotation.push(darts);
    }
    let new_twin: Vec<usize> = old_of_new
        .iter()
        .map(|&d| {
            let t = twin[d];
            new_of_old[t]
        })
        .collect();
    if new_twin.contains(&usize::MAX) {
        return Err(Error::DartStructure("substitution left a dangling dart".into()));
    }
    let outer_dart = g
        .face(g.outer_face())
        .boundary
        .iter()
        .map(|&d| new_of_old[d.0])
        .find(|&d| d != usize::MAX)
        .unwrap_or(0);
    PlaneGraph::from_rotations(rotation, new_twin, Some(outer_dart)).map_err(|e| match e {
        Error::EulerCheck { .. } => Error::SurgeryNotPlanar,
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;
    use crate::plane_graph::embedded_isomorphism;

    #[test]
    fn three_connected_input_is_a_single_component() {
        let g = fixtures::cube();
        let d = decompose_2cuts(&g).unwrap();
        assert_eq!(d.components.len(), 1);
        assert!(d.components[0].forced.is_empty());
    }

    #[test]
    fn two_cube_chain_splits_into_cubes() {
        let g = fixtures::chain_of_cubes(2);
        assert!(g.is_cubic());
        assert!(g.is_bipartite());
        let d = decompose_2cuts(&g).unwrap();
        assert_eq!(d.components.len(), 2);
        for c in &d.components {
            assert_eq!(c.forced.len(), 1);
            assert!(embedded_isomorphism(&c.graph, &fixtures::cube(), false).is_some());
        }
    }

    #[test]
    fn three_cube_chain_forced_counts() {
        let g = fixtures::chain_of_cubes(3);
        let d = decompose_2cuts(&g).unwrap();
        assert_eq!(d.components.len(), 3);
        let mut forced: Vec<usize> = d.components.iter().map(|c| c.forced.len()).collect();
        forced.sort_unstable();
        assert_eq!(forced, vec![1, 1, 2]);
    }

    #[test]
    fn substitution_of_cube_vertex_by_cube_vertex() {
        let g = fixtures::cube();
        let gadget = fixtures::cube();
        let mut found = None;
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            if let Ok(res) = substitute_vertex(&g, VertexId(0), &gadget, VertexId(0), &perm) {
                found = Some(res);
                break;
            }
        }
        let res = found.expect("some rotation-respecting pairing embeds");
        assert_eq!(res.vertex_count(), 14);
        assert!(res.is_cubic());
        assert!(res.is_bipartite());
    }

    #[test]
    fn substitution_by_theta_vertex_is_identity() {
        // Splicing in one vertex of the 3-edge bundle re-creates the removed
        // vertex, so the substitution is the identity up to isomorphism.
        let theta = fixtures::two_vertex_bundle(3);
        let g = fixtures::cube();
        let mut found = None;
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            if let Ok(res) = substitute_vertex(&g, VertexId(3), &theta, VertexId(0), &perm) {
                if res.is_cubic() {
                    found = Some(res);
                    break;
                }
            }
        }
        let res = found.expect("theta substitution embeds");
        assert_eq!(res.vertex_count(), g.vertex_count());
        assert!(embedded_isomorphism(&res, &g, false).is_some());
    }

    #[test]
    fn vertex_count_arithmetic() {
        let g = fixtures::even_prism(3);
        let gadget = fixtures::cube();
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            if let Ok(res) = substitute_vertex(&g, VertexId(2), &gadget, VertexId(5), &perm) {
                assert_eq!(
                    res.vertex_count(),
                    g.vertex_count() - 1 + gadget.vertex_count() - 1
                );
                return;
            }
        }
        panic!("no pairing embedded");
    }
}
