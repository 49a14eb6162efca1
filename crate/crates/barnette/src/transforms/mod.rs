//! Plane-graph surgeries: facial-factor contraction, vertex expansion,
//! leapfrog extension, and the cut/splice operations used by the reduction
//! pipelines.

mod decompose;
mod surgery;

pub use decompose::{decompose_2cuts, substitute_vertex, DecompTree, DecompositionResult};
pub use surgery::{identify_terminals, quad_detach, subdivide_digons, DigonSubdivision, QuadVariant};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::plane_graph::{DartId, FaceId, PlaneGraph, VertexId};

/// A contraction `H = G/Q` of a facial 2-factor, with the maps back to the
/// source.
#[derive(Clone, Debug)]
pub struct ReducedGraph {
    pub h: PlaneGraph,
    pub source: PlaneGraph,
    /// The contracted facial 2-factor.
    pub factor: BTreeSet<FaceId>,
    /// h-vertex → contracted source face.
    pub vertex_map: Vec<FaceId>,
    /// h-dart → source dart.
    pub dart_map: Vec<DartId>,
    /// h-face → source face (bijective onto the faces outside the factor).
    pub face_map: Vec<FaceId>,
}

impl ReducedGraph {
    /// The h-face carrying a given source face, if the source face survived.
    pub fn h_face_of(&self, f: FaceId) -> Option<FaceId> {
        self.face_map.iter().position(|&x| x == f).map(FaceId)
    }

    /// The h-vertex a factor face was contracted to.
    pub fn h_vertex_of(&self, f: FaceId) -> Option<VertexId> {
        self.vertex_map.iter().position(|&x| x == f).map(VertexId)
    }
}

/// Checks that `q` is a facial 2-factor: face boundaries are simple cycles,
/// pairwise vertex-disjoint, covering every vertex exactly once.
pub fn check_facial_factor(g: &PlaneGraph, q: &BTreeSet<FaceId>) -> Result<()> {
    let mut covered = vec![0usize; g.vertex_count()];
    for &f in q {
        if f.0 >= g.face_count() {
            return Err(Error::NoSuchFace(f));
        }
        if !g.face_is_simple(f) {
            return Err(Error::NotFacialFactor(format!(
                "face {f} visits a vertex more than once"
            )));
        }
        for v in g.face_vertices(f) {
            covered[v.0] += 1;
        }
    }
    if let Some(v) = covered.iter().position(|&c| c == 0) {
        return Err(Error::NotFacialFactor(format!("vertex {v} is on no factor face")));
    }
    if let Some(v) = covered.iter().position(|&c| c > 1) {
        return Err(Error::NotFacialFactor(format!(
            "vertex {v} is on {} factor faces",
            covered[v]
        )));
    }
    Ok(())
}

/// Contracts every face of the facial 2-factor `q` to a single vertex.
///
/// The h-vertices are the factor faces in id order; the rotation of a
/// contracted vertex is the surviving darts in boundary-orbit order.  Faces
/// of `h` correspond one-to-one to faces of `g` outside `q`.  When the outer
/// face of `g` is contracted, the outer face of `h` defaults to the image of
/// the smallest surviving face (re-designate with [`PlaneGraph::with_outer`]
/// if the pipeline needs a different one).
pub fn contract_facial_factor(g: &PlaneGraph, q: &BTreeSet<FaceId>) -> Result<ReducedGraph> {
    check_facial_factor(g, q)?;

    let vertex_map: Vec<FaceId> = q.iter().copied().collect();
    let mut face_of_vertex = vec![usize::MAX; g.vertex_count()];
    for (w, &f) in vertex_map.iter().enumerate() {
        for v in g.face_vertices(f) {
            face_of_vertex[v.0] = w;
        }
    }

    // A dart survives iff its edge lies on no factor face.
    let on_factor = |d: DartId| -> bool {
        q.contains(&g.face_of(d)) || q.contains(&g.face_of(g.twin(d)))
    };
    for e in g.edges() {
        let (d, _) = g.edge_darts(e);
        if !on_factor(d) {
            let (u, v) = g.endpoints(e);
            if face_of_vertex[u.0] == face_of_vertex[v.0] {
                return Err(Error::ContractionLoop(vertex_map[face_of_vertex[u.0]]));
            }
        }
    }

    let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(vertex_map.len());
    let mut dart_map: Vec<DartId> = Vec::new();
    let mut new_of_old = vec![usize::MAX; g.dart_count()];
    for &f in &vertex_map {
        // Walk the boundary orbit; at each visit collect the surviving darts
        // strictly between the leaving boundary dart and the arriving one.
        // The orbit runs counterclockwise around the shrinking face, so the
        // clockwise rotation of the new vertex is the reversed sequence.
        let mut collected: Vec<DartId> = Vec::new();
        for &b in &g.face(f).boundary {
            let arriving = g.twin(g.face_prev(b));
            let mut d = g.rot_next(b);
            while d != arriving {
                collected.push(d);
                d = g.rot_next(d);
            }
        }
        collected.reverse();
        let mut darts = Vec::new();
        for d in collected {
            new_of_old[d.0] = dart_map.len();
            darts.push(dart_map.len());
            dart_map.push(d);
        }
        rotation.push(darts);
    }
    let twin: Vec<usize> = dart_map.iter().map(|&d| new_of_old[g.twin(d).0]).collect();

    // Outer face of h: image of the source outer face when it survives,
    // otherwise image of the smallest surviving face.
    let outer_source = if q.contains(&g.outer_face()) {
        (0..g.face_count())
            .map(FaceId)
            .find(|f| !q.contains(f))
            .expect("a facial 2-factor never uses every face")
    } else {
        g.outer_face()
    };
    let outer_dart = g
        .face(outer_source)
        .boundary
        .iter()
        .copied()
        .find(|&d| new_of_old[d.0] != usize::MAX)
        .map(|d| new_of_old[d.0]);
    let outer_dart = outer_dart.ok_or_else(|| {
        Error::NotFacialFactor("a surviving face has no surviving darts".into())
    })?;

    let (h, remap) = PlaneGraph::from_rotations_mapped(rotation, twin, Some(outer_dart))?;
    let mut remapped = vec![DartId(usize::MAX); dart_map.len()];
    for (old, &src) in dart_map.iter().enumerate() {
        remapped[remap[old].0] = src;
    }
    let dart_map = remapped;

    // Face correspondence: every surviving dart keeps its source face.
    let mut face_map = vec![FaceId(usize::MAX); h.face_count()];
    for d in h.darts() {
        let sf = g.face_of(dart_map[d.0]);
        let hf = h.face_of(d);
        if face_map[hf.0].0 == usize::MAX {
            face_map[hf.0] = sf;
        } else if face_map[hf.0] != sf {
            return Err(Error::NotFacialFactor(format!(
                "contraction split source face {sf} across several faces"
            )));
        }
    }

    Ok(ReducedGraph {
        h,
        source: g.clone(),
        factor: q.clone(),
        vertex_map,
        dart_map,
        face_map,
    })
}

/// Vertex expansion: replaces every vertex `w` by a facial cycle `C_w` of
/// length `deg(w)`, each host edge becoming an edge between the matching
/// cycle vertices.  The inverse of contracting those cycles.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub graph: PlaneGraph,
    /// Host vertex → its cycle's vertices, in rotation order.
    pub cycle_vertices: Vec<Vec<VertexId>>,
    /// Host vertex → the face of the new cycle.
    pub cycle_face: Vec<FaceId>,
    /// Host dart → the cross-edge dart leaving its cycle vertex.
    pub cross_dart: Vec<DartId>,
    /// Host face → the expanded face (of doubled length).
    pub face_map: Vec<FaceId>,
}

/// Expands every vertex into a facial cycle.  Requires minimum degree 2
/// (degree-1 vertices would need loops).
pub fn vertex_expand(h: &PlaneGraph) -> Result<Expansion> {
    if h.min_degree() < 2 {
        return Err(Error::MinDegree { required: 2, found: h.min_degree() });
    }
    // New vertex per host dart; darts 3d, 3d+1, 3d+2 are the cross edge, the
    // cycle edge to the rotation successor, and the cycle edge back.
    let m = h.dart_count();
    let mut rotation = Vec::with_capacity(m);
    let mut twin = vec![0usize; 3 * m];
    for d0 in 0..m {
        let d = DartId(d0);
        rotation.push(vec![3 * d0, 3 * d0 + 1, 3 * d0 + 2]);
        twin[3 * d0] = 3 * h.twin(d).0;
        twin[3 * d0 + 1] = 3 * h.rot_next(d).0 + 2;
        twin[3 * d0 + 2] = 3 * h.rot_prev(d).0 + 1;
    }
    let outer_min_dart = h.face(h.outer_face()).boundary.iter().copied().min().unwrap();
    let graph = PlaneGraph::from_rotations(rotation, twin, Some(3 * outer_min_dart.0))?;

    let cycle_vertices: Vec<Vec<VertexId>> = h
        .vertices()
        .map(|w| h.rotation(w).map(|d| VertexId(d.0)).collect())
        .collect();
    let cycle_face: Vec<FaceId> = h
        .vertices()
        .map(|w| {
            let first = h.rotation(w).next().unwrap();
            graph.face_of(DartId(3 * first.0 + 2))
        })
        .collect();
    let face_map: Vec<FaceId> = h
        .faces()
        .iter()
        .map(|f| graph.face_of(DartId(3 * f.boundary[0].0)))
        .collect();
    let cross_dart = (0..m).map(|d| DartId(3 * d)).collect();

    Ok(Expansion { graph, cycle_vertices, cycle_face, cross_dart, face_map })
}

/// Leapfrog extension of a 2-connected cubic plane graph: every vertex
/// becomes a hexagon, hexagons sharing an edge exactly when the vertices are
/// adjacent, and every original face survives with unchanged length.
#[derive(Clone, Debug)]
pub struct Leapfrog {
    pub graph: PlaneGraph,
    /// Host vertex → its hexagon face.
    pub hexagon: Vec<FaceId>,
    /// Host face → its surviving image face.
    pub face_map: Vec<FaceId>,
    /// Host dart → the shared-edge dart on its side.
    pub shared_dart: Vec<DartId>,
}

pub fn leapfrog(g: &PlaneGraph) -> Result<Leapfrog> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) != 3) {
        return Err(Error::NotCubic { vertex: v, degree: g.degree(v) });
    }
    if crate::plane_graph::vertex_connectivity(g) < 2 {
        return Err(Error::NotKConnected(2));
    }
    // New vertex ℓ(d) per host dart.  Dart 3d is the shared edge toward
    // ℓ(twin d); 3d+1 runs along the hexagon of origin(d); 3d+2 along the
    // hexagon of head(d).
    let m = g.dart_count();
    let mut rotation = Vec::with_capacity(m);
    let mut twin = vec![0usize; 3 * m];
    for d0 in 0..m {
        let d = DartId(d0);
        rotation.push(vec![3 * d0, 3 * d0 + 1, 3 * d0 + 2]);
        twin[3 * d0] = 3 * g.twin(d).0;
        twin[3 * d0 + 1] = 3 * g.twin(g.rot_prev(d)).0 + 2;
        twin[3 * d0 + 2] = 3 * g.rot_next(g.twin(d)).0 + 1;
    }
    let outer_min_dart = g.face(g.outer_face()).boundary.iter().copied().min().unwrap();
    // The image of host face F is the orbit of the darts 3d+2 over F's
    // boundary; the hexagon of v is the orbit of 3d for darts d arriving at v.
    let graph = PlaneGraph::from_rotations(rotation, twin, Some(3 * outer_min_dart.0 + 2))?;

    let mut hexagon = vec![FaceId(usize::MAX); g.vertex_count()];
    for v in g.vertices() {
        let arriving = g.twin(g.rotation(v).next().unwrap());
        let f = graph.face_of(DartId(3 * arriving.0));
        if graph.face(f).len() != 6 {
            return Err(Error::DartStructure(format!(
                "leapfrog hexagon of vertex {v} came out with length {}",
                graph.face(f).len()
            )));
        }
        hexagon[v.0] = f;
    }
    let mut face_map = vec![FaceId(usize::MAX); g.face_count()];
    for f in g.faces() {
        let d = f.boundary[0];
        let image = graph.face_of(DartId(3 * d.0 + 2));
        if graph.face(image).len() != f.len() {
            return Err(Error::DartStructure(format!(
                "leapfrog image of face {} changed length",
                f.id
            )));
        }
        face_map[f.id.0] = image;
    }
    let shared_dart = (0..m).map(|d| DartId(3 * d)).collect();
    Ok(Leapfrog { graph, hexagon, face_map, shared_dart })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;
    use crate::plane_graph::embedded_isomorphism;

    fn faces_by_len(g: &PlaneGraph, len: usize) -> usize {
        g.faces().iter().filter(|f| f.len() == len).count()
    }

    #[test]
    fn contract_cube_top_bottom() {
        let g = fixtures::cube();
        // The two quadrilaterals sharing no vertex are a facial 2-factor.
        let q = opposite_pair(&g);
        let rg = contract_facial_factor(&g, &q).unwrap();
        assert_eq!(rg.h.vertex_count(), 2);
        assert_eq!(rg.h.edge_count(), 4);
        assert_eq!(rg.h.face_count(), 4);
        assert!(rg.h.faces().iter().all(|f| f.len() == 2));
        assert!(rg.h.is_eulerian());
    }

    fn opposite_pair(g: &PlaneGraph) -> BTreeSet<FaceId> {
        let f0 = g.faces()[0].id;
        let v0: BTreeSet<VertexId> = g.face_vertices(f0).into_iter().collect();
        let partner = g
            .faces()
            .iter()
            .map(|f| f.id)
            .find(|&f| {
                let vs: BTreeSet<VertexId> = g.face_vertices(f).into_iter().collect();
                vs.is_disjoint(&v0) && vs.len() + v0.len() == g.vertex_count()
            })
            .expect("opposite face exists");
        BTreeSet::from([f0, partner])
    }

    #[test]
    fn contract_prism_hexagons() {
        let g = fixtures::even_prism(3);
        let hexes: BTreeSet<FaceId> =
            g.faces().iter().filter(|f| f.len() == 6).map(|f| f.id).collect();
        let rg = contract_facial_factor(&g, &hexes).unwrap();
        assert_eq!(rg.h.vertex_count(), 2);
        assert_eq!(rg.h.edge_count(), 6);
        assert!(rg.h.vertices().all(|v| rg.h.degree(v) == 6));
    }

    #[test]
    fn contract_rejects_sharing_faces() {
        let g = fixtures::cube();
        // Two adjacent faces share vertices.
        let f0 = g.faces()[0].id;
        let f1 = g
            .faces()
            .iter()
            .map(|f| f.id)
            .find(|&f| {
                f != f0 && {
                    let vs: BTreeSet<VertexId> = g.face_vertices(f).into_iter().collect();
                    let v0: BTreeSet<VertexId> = g.face_vertices(f0).into_iter().collect();
                    !vs.is_disjoint(&v0)
                }
            })
            .unwrap();
        let err = contract_facial_factor(&g, &BTreeSet::from([f0, f1])).unwrap_err();
        assert!(matches!(err, Error::NotFacialFactor(_)));
    }

    #[test]
    fn expand_octahedron_is_truncation() {
        let oct = crate::plane_graph::dual(&fixtures::cube()).unwrap().graph;
        let ex = vertex_expand(&oct).unwrap();
        assert_eq!(ex.graph.vertex_count(), 24);
        assert!(ex.graph.is_cubic());
        assert_eq!(faces_by_len(&ex.graph, 4), 6);
        assert_eq!(faces_by_len(&ex.graph, 6), 8);
    }

    #[test]
    fn expand_bundle_gives_cube() {
        let h = fixtures::two_vertex_bundle(4);
        let ex = vertex_expand(&h).unwrap();
        assert_eq!(ex.graph.vertex_count(), 8);
        assert!(ex.graph.is_cubic());
        assert!(embedded_isomorphism(&ex.graph, &fixtures::cube(), false).is_some());
    }

    #[test]
    fn expand_then_contract_roundtrips() {
        for h in [
            fixtures::two_vertex_bundle(4),
            fixtures::k4(),
            crate::plane_graph::dual(&fixtures::cube()).unwrap().graph,
        ] {
            let ex = vertex_expand(&h).unwrap();
            let q: BTreeSet<FaceId> = ex.cycle_face.iter().copied().collect();
            let rg = contract_facial_factor(&ex.graph, &q).unwrap();
            assert!(
                embedded_isomorphism(&rg.h, &h, false).is_some(),
                "expand/contract roundtrip failed"
            );
        }
    }

    #[test]
    fn leapfrog_cube_counts() {
        let lf = leapfrog(&fixtures::cube()).unwrap();
        assert_eq!(lf.graph.vertex_count(), 24);
        assert_eq!(lf.graph.edge_count(), 36);
        assert_eq!(lf.graph.face_count(), 14);
        assert_eq!(faces_by_len(&lf.graph, 6), 8);
        assert_eq!(faces_by_len(&lf.graph, 4), 6);
        assert!(lf.graph.is_bipartite());
    }

    #[test]
    fn leapfrog_k4_keeps_odd_faces() {
        let lf = leapfrog(&fixtures::k4()).unwrap();
        assert_eq!(lf.graph.vertex_count(), 12);
        assert_eq!(faces_by_len(&lf.graph, 6), 4);
        assert_eq!(faces_by_len(&lf.graph, 3), 4);
        assert!(!lf.graph.is_bipartite());
    }

    #[test]
    fn double_leapfrog_cube() {
        let lf1 = leapfrog(&fixtures::cube()).unwrap();
        let lf2 = leapfrog(&lf1.graph).unwrap();
        assert_eq!(lf2.graph.vertex_count(), 72);
        assert_eq!(faces_by_len(&lf2.graph, 6), 24 + 8);
        assert_eq!(faces_by_len(&lf2.graph, 4), 6);
    }

    #[test]
    fn leapfrog_hexagons_share_edges_by_adjacency() {
        let g = fixtures::cube();
        let lf = leapfrog(&g).unwrap();
        for v in g.vertices() {
            for w in g.vertices() {
                if v >= w {
                    continue;
                }
                let hv: BTreeSet<_> = lf.graph.face_edges(lf.hexagon[v.0]).into_iter().collect();
                let hw: BTreeSet<_> = lf.graph.face_edges(lf.hexagon[w.0]).into_iter().collect();
                let shares = hv.intersection(&hw).count();
                let adjacent = g.neighbors(v).any(|x| x == w);
                assert_eq!(shares > 0, adjacent);
                if adjacent {
                    assert_eq!(shares, 1);
                }
            }
        }
    }

    #[test]
    fn contraction_keeps_parallel_edges() {
        // Contracting the squares of the octagonal prism keeps all eight
        // parallel edges; digons are first-class.
        let g = fixtures::even_prism(3);
        let hexes: BTreeSet<FaceId> =
            g.faces().iter().filter(|f| f.len() == 6).map(|f| f.id).collect();
        let rg = contract_facial_factor(&g, &hexes).unwrap();
        assert_eq!(rg.h.edge_count(), 6);
        assert_eq!(rg.h.face_count(), 6);
    }
}
