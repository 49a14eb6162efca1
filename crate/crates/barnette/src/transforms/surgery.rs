//! Local surgeries: quadrilateral detachment, terminal identification, and
//! digon subdivision.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::plane_graph::{DartId, FaceId, PlaneGraph, VertexId};

/// Which pair of opposite quadrilateral sides the detachment smooths along.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadVariant {
    /// New edges join the third neighbours across the first and third sides.
    One,
    /// New edges join them across the second and fourth sides.
    Two,
}

/// Removes the four vertices of a facial quadrilateral `w x y z` of a cubic
/// graph and joins their third neighbours pairwise: variant One adds
/// `w₁x₁, y₁z₁`; variant Two adds `w₁z₁, x₁y₁`.  Returns the result together
/// with its vertex connectivity (the callers branch on whether the result is
/// 3-connected or only 2-connected).
pub fn quad_detach(
    g: &PlaneGraph,
    quad: FaceId,
    variant: QuadVariant,
) -> Result<(PlaneGraph, usize)> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) != 3) {
        return Err(Error::NotCubic { vertex: v, degree: g.degree(v) });
    }
    if g.face(quad).len() != 4 {
        return Err(Error::NotQuadrilateral(quad));
    }
    let boundary = g.face(quad).boundary.clone();
    let corners: Vec<VertexId> = boundary.iter().map(|&d| g.origin(d)).collect();
    let corner_set: BTreeSet<VertexId> = corners.iter().copied().collect();
    if corner_set.len() != 4 {
        return Err(Error::NotQuadrilateral(quad));
    }

    // Third dart at each corner: not on the quad boundary.
    let mut third = Vec::with_capacity(4);
    for (i, &b) in boundary.iter().enumerate() {
        let prev = boundary[(i + 3) % 4];
        let quad_darts = [b, g.twin(prev)];
        let t = g
            .rotation(corners[i])
            .find(|d| !quad_darts.contains(d))
            .expect("cubic corner has a third dart");
        third.push(t);
    }
    let neighbours: Vec<VertexId> = third.iter().map(|&t| g.head(t)).collect();
    for (i, &n) in neighbours.iter().enumerate() {
        if corner_set.contains(&n) {
            return Err(Error::QuadNeighbourOnQuad(corners[i]));
        }
    }
    let pairs: [(usize, usize); 2] = match variant {
        QuadVariant::One => [(0, 1), (2, 3)],
        QuadVariant::Two => [(3, 0), (1, 2)],
    };
    for &(a, b) in &pairs {
        if neighbours[a] == neighbours[b] {
            return Err(Error::QuadDetachLoop(neighbours[a]));
        }
    }

    // Re-twin the stub darts at the third neighbours, then drop the corners.
    let mut new_twin: Vec<usize> = g.darts().map(|d| g.twin(d).0).collect();
    for &(a, b) in &pairs {
        let (sa, sb) = (g.twin(third[a]), g.twin(third[b]));
        new_twin[sa.0] = sb.0;
        new_twin[sb.0] = sa.0;
    }
    let dead_vertex = |v: VertexId| corner_set.contains(&v);
    let graph = rebuild_without(g, &new_twin, &dead_vertex)?;
    let connectivity = crate::plane_graph::vertex_connectivity(&graph);
    Ok((graph, connectivity))
}

/// Rebuilds a plane graph dropping every dart whose origin satisfies `dead`,
/// using the (already re-twinned) twin table.  The outer face follows the
/// smallest surviving dart of the old outer face.
fn rebuild_without(
    g: &PlaneGraph,
    new_twin: &[usize],
    dead: &dyn Fn(VertexId) -> bool,
) -> Result<PlaneGraph> {
    let mut new_of_old = vec![usize::MAX; g.dart_count()];
    let mut rotation: Vec<Vec<usize>> = Vec::new();
    let mut old_of_new: Vec<usize> = Vec::new();
    for v in g.vertices() {
        if dead(v) {
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
    let twin: Vec<usize> = old_of_new
        .iter()
        .map(|&d| {
            let t = new_twin[d];
            if new_of_old[t] == usize::MAX {
                usize::MAX
            } else {
                new_of_old[t]
            }
        })
        .collect();
    if twin.contains(&usize::MAX) {
        return Err(Error::DartStructure("a surviving dart lost its twin".into()));
    }
    let outer_dart = g
        .face(g.outer_face())
        .boundary
        .iter()
        .map(|&d| new_of_old[d.0])
        .find(|&d| d != usize::MAX)
        .unwrap_or(0);
    PlaneGraph::from_rotations(rotation, twin, Some(outer_dart))
}

/// Attaches a new vertex `r` inside the outer face, joined to three terminal
/// vertices on the outer boundary.  The terminals must be pairwise at even
/// distance (odd distances would make a bipartite extension impossible; the
/// condition is asserted, not assumed).
pub fn identify_terminals(fragment: &PlaneGraph, terminals: &[VertexId]) -> Result<PlaneGraph> {
    if terminals.len() != 3 {
        return Err(Error::TerminalCount(terminals.len()));
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let dist = crate::plane_graph::bfs_distances(fragment, terminals[i])
                [terminals[j].0];
            if dist % 2 == 1 {
                return Err(Error::OddTerminalDistance(terminals[i], terminals[j]));
            }
        }
    }
    let outer = fragment.face(fragment.outer_face()).boundary.clone();
    // First boundary position of each terminal.
    let mut position = Vec::with_capacity(3);
    for &t in terminals {
        let p = outer
            .iter()
            .position(|&d| fragment.origin(d) == t)
            .ok_or(Error::TerminalNotOnOuterFace(t))?;
        position.push((p, t));
    }
    position.sort_unstable();

    let m = fragment.dart_count();
    // New darts: r gets m, m+2, m+4; terminal i (in boundary order) gets
    // m + 2i + 1.
    let mut rotation: Vec<Vec<usize>> = fragment
        .vertices()
        .map(|v| fragment.rotation(v).map(|d| d.0).collect())
        .collect();
    for (i, &(p, t)) in position.iter().enumerate() {
        // The outer-face corner at t sits between the arriving boundary dart
        // and the leaving one; insert the new dart there.
        let leaving = outer[p];
        let slot = rotation[t.0].iter().position(|&d| d == leaving.0).unwrap();
        rotation[t.0].insert(slot, m + 2 * i + 1);
    }
    // Clockwise around r is the reversed boundary order.
    rotation.push(vec![m, m + 4, m + 2]);
    let twin: Vec<usize> = (0..m + 6).map(|d| {
        if d < m {
            fragment.twin(DartId(d)).0
        } else {
            d ^ 1
        }
    }).collect();
    PlaneGraph::from_rotations(rotation, twin, Some(outer[0].0))
}

/// Certificate of one digon subdivision.
#[derive(Clone, Debug)]
pub struct DigonSubdivision {
    pub digon: FaceId,
    /// Subdivision vertex on the first boundary edge.
    pub a: VertexId,
    /// Subdivision vertex on the second boundary edge.
    pub b: VertexId,
    /// The new digon between the two join edges.
    pub new_digon: FaceId,
    /// The two new triangles.
    pub triangles: [FaceId; 2],
}

/// Subdivides each listed digon: both parallel edges get a subdivision
/// vertex and the two new vertices are joined by two parallel edges inside
/// the digon, splitting it into two triangles and one digon.  Every other
/// face gains one vertex per subdivided edge on its boundary.
///
/// Returns the new graph, the per-digon certificates, and the face map for
/// the surviving faces (`None` exactly for the subdivided digons).
pub fn subdivide_digons(
    h: &PlaneGraph,
    digons: &BTreeSet<FaceId>,
) -> Result<(PlaneGraph, Vec<DigonSubdivision>, Vec<Option<FaceId>>)> {
    let mut touched_edges = BTreeSet::new();
    for &f in digons {
        if f.0 >= h.face_count() {
            return Err(Error::NoSuchFace(f));
        }
        if h.face(f).len() != 2 {
            return Err(Error::NotDigon(f));
        }
        for e in h.face_edges(f) {
            if !touched_edges.insert(e) {
                return Err(Error::BadFaceCover("listed digons share an edge".into()));
            }
        }
    }
    if digons.is_empty() {
        return Ok((h.clone(), Vec::new(), (0..h.face_count()).map(|f| Some(FaceId(f))).collect()));
    }

    let m = h.dart_count();
    let n = h.vertex_count();
    let mut rotation: Vec<Vec<usize>> = h
        .vertices()
        .map(|v| h.rotation(v).map(|d| d.0).collect())
        .collect();
    let mut twin: Vec<usize> = h.darts().map(|d| h.twin(d).0).collect();
    twin.resize(m + 8 * digons.len(), usize::MAX);

    let digon_list: Vec<FaceId> = digons.iter().copied().collect();
    for (k, &f) in digon_list.iter().enumerate() {
        let base = m + 8 * k;
        let p = h.face(f).boundary[0];
        let q = h.face(f).boundary[1];
        // a subdivides edge(p), b subdivides edge(q); the joins run inside
        // the digon (the region left of p).
        rotation.push(vec![base, base + 1, base + 2, base + 3]); // a
        rotation.push(vec![base + 4, base + 5, base + 6, base + 7]); // b
        let (p0, p1) = (p.0, h.twin(p).0);
        let (q0, q1) = (q.0, h.twin(q).0);
        twin[p0] = base; //       origin(p) → a
        twin[base] = p0;
        twin[p1] = base + 3; //   head(p) → a
        twin[base + 3] = p1;
        twin[q0] = base + 4; //   origin(q) → b
        twin[base + 4] = q0;
        twin[q1] = base + 7; //   head(q) → b
        twin[base + 7] = q1;
        // Joins cross-pair.
        twin[base + 1] = base + 6;
        twin[base + 6] = base + 1;
        twin[base + 2] = base + 5;
        twin[base + 5] = base + 2;
    }

    // When the outer face itself is subdivided, the region of infinity
    // becomes the triangle on the first boundary dart.
    let outer_anchor = h.face(h.outer_face()).boundary[0].0;
    let graph = PlaneGraph::from_rotations(rotation, twin, Some(outer_anchor))?;

    let mut certificates = Vec::with_capacity(digon_list.len());
    for (k, &f) in digon_list.iter().enumerate() {
        let a = VertexId(n + 2 * k);
        let b = VertexId(n + 2 * k + 1);
        let mut faces_at_a = graph.faces_at(a);
        faces_at_a.sort_unstable_by_key(|&x| graph.face(x).len());
        let new_digon = *faces_at_a.iter().find(|&&x| graph.face(x).len() == 2).ok_or_else(
            || Error::DartStructure("digon subdivision lost its inner digon".into()),
        )?;
        let tris: Vec<FaceId> = faces_at_a
            .iter()
            .copied()
            .filter(|&x| graph.face(x).len() == 3)
            .collect();
        if tris.len() != 2 {
            return Err(Error::DartStructure("digon subdivision lost a triangle".into()));
        }
        certificates.push(DigonSubdivision {
            digon: f,
            a,
            b,
            new_digon,
            triangles: [tris[0], tris[1]],
        });
    }

    let face_map: Vec<Option<FaceId>> = h
        .faces()
        .iter()
        .map(|f| {
            if digons.contains(&f.id) {
                None
            } else {
                Some(graph.face_of(f.boundary[0]))
            }
        })
        .collect();

    Ok((graph, certificates, face_map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;

    #[test]
    fn quad_detach_cube() {
        let g = fixtures::cube();
        let quad = g.faces()[0].id;
        let (res, _conn) = quad_detach(&g, quad, QuadVariant::One).unwrap();
        assert_eq!(res.vertex_count(), 4);
        assert!(res.is_cubic());
        assert!(res.is_bipartite());
    }

    #[test]
    fn quad_detach_preserves_bipartite_both_variants() {
        for g in [fixtures::cube(), fixtures::even_prism(3)] {
            for f in g.faces().iter().filter(|f| f.len() == 4).map(|f| f.id) {
                for variant in [QuadVariant::One, QuadVariant::Two] {
                    match quad_detach(&g, f, variant) {
                        Ok((res, _)) => {
                            assert_eq!(res.vertex_count(), g.vertex_count() - 4);
                            assert!(res.is_cubic());
                            assert!(res.is_bipartite());
                        }
                        Err(Error::QuadNeighbourOnQuad(_)) | Err(Error::QuadDetachLoop(_)) => {}
                        Err(e) => panic!("unexpected error {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn identify_terminals_on_hexagon() {
        let g = fixtures::cycle(6);
        let r = identify_terminals(&g, &[VertexId(0), VertexId(2), VertexId(4)]).unwrap();
        assert_eq!(r.vertex_count(), 7);
        assert_eq!(r.edge_count(), 9);
        assert_eq!(r.degree(VertexId(6)), 3);
        assert_eq!(r.degree(VertexId(0)), 3);
        assert_eq!(r.degree(VertexId(1)), 2);
        assert!(r.is_bipartite());
    }

    #[test]
    fn identify_terminals_rejects_odd_distance() {
        let g = fixtures::cycle(6);
        let err = identify_terminals(&g, &[VertexId(0), VertexId(1), VertexId(3)]).unwrap_err();
        assert!(matches!(err, Error::OddTerminalDistance(..)));
    }

    #[test]
    fn subdivide_isolated_digon_pair() {
        let h = fixtures::two_vertex_bundle(2);
        let inner = h
            .faces()
            .iter()
            .map(|f| f.id)
            .find(|&f| f != h.outer_face())
            .unwrap();
        let (h0, certs, _map) = subdivide_digons(&h, &BTreeSet::from([inner])).unwrap();
        assert_eq!(h0.vertex_count(), 4);
        assert_eq!(h0.edge_count(), 6);
        let mut lens = h0.face_length_sequence();
        lens.sort_unstable();
        // Two triangles, the new digon, and the outer face grown to length 4.
        assert_eq!(lens, vec![2, 3, 3, 4]);
        assert_eq!(certs.len(), 1);
    }

    #[test]
    fn subdivide_empty_set_is_identity() {
        let h = fixtures::two_vertex_bundle(3);
        let (h0, certs, _) = subdivide_digons(&h, &BTreeSet::new()).unwrap();
        assert_eq!(h0, h);
        assert!(certs.is_empty());
    }
}
