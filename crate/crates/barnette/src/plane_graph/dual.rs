//! Dual and radial graphs.

use std::collections::BTreeSet;

use super::{DartId, FaceId, PlaneGraph, VertexId};
use crate::error::{Error, Result};

/// The dual embedding together with the primal↔dual correspondences.
#[derive(Clone, Debug)]
pub struct Dual {
    pub graph: PlaneGraph,
    /// Primal face → dual vertex.
    pub vertex_of_face: Vec<VertexId>,
    /// Primal vertex → dual face.
    pub face_of_vertex: Vec<FaceId>,
    /// Primal dart → the dual dart crossing it.
    pub dart_map: Vec<DartId>,
}

/// Builds the dual plane graph.  The rotation at a dual vertex is the face
/// boundary orbit and the twin involution carries over, so the faces of the
/// dual are the rotations of the primal and the double dual is the identity
/// up to relabeling.  The dual outer face is the one that corresponds to
/// primal vertex 0.
///
/// Fails with [`Error::DualLoop`] when an edge has the same face on both
/// sides (a bridge), since loops are not representable.
pub fn dual(g: &PlaneGraph) -> Result<Dual> {
    for e in g.edges() {
        let (f1, f2) = g.edge_faces(e);
        if f1 == f2 {
            return Err(Error::DualLoop(DartId(e.0)));
        }
    }
    let rotation: Vec<Vec<usize>> = g
        .faces()
        .iter()
        .map(|f| f.boundary.iter().map(|d| d.0).collect())
        .collect();
    let twin: Vec<usize> = g.darts().map(|d| g.twin(d).0).collect();
    let (dual_graph, dart_map) = PlaneGraph::from_rotations_mapped(
        rotation,
        twin,
        Some(g.rotation(VertexId(0)).next().unwrap().0),
    )?;

    let vertex_of_face = (0..g.face_count()).map(VertexId).collect();
    let face_of_vertex = g
        .vertices()
        .map(|v| {
            let d = g.rotation(v).next().expect("no isolated vertices");
            dual_graph.face_of(dart_map[d.0])
        })
        .collect();
    Ok(Dual { graph: dual_graph, vertex_of_face, face_of_vertex, dart_map })
}

/// A node of the radial graph: either a vertex or a face of the host.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RadialNode {
    Vertex(VertexId),
    Face(FaceId),
}

impl std::fmt::Display for RadialNode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RadialNode::Vertex(v) => write!(f, "v{v}"),
            RadialNode::Face(x) => write!(f, "f{x}"),
        }
    }
}

/// The radial graph as a plane graph, with node labels.
#[derive(Clone, Debug)]
pub struct RadialGraph {
    pub graph: PlaneGraph,
    /// Radial vertex → host vertex or face.
    pub labels: Vec<RadialNode>,
    /// Host dart → the radial edge (dart on the vertex side) for the
    /// incidence it witnesses.
    pub edge_of_dart: Vec<DartId>,
}

/// Builds the radial (vertex-face incidence) plane graph of a 2-connected
/// host: one edge per incidence of a vertex on a face boundary, with
/// multiplicity.  Every face of the result is a quadrilateral, one per host
/// edge.
pub fn radial_graph(g: &PlaneGraph) -> Result<RadialGraph> {
    // 2-connectedness, in the form the construction needs: every face
    // boundary is a simple cycle (this also covers 2-vertex multigraphs).
    if !g.faces().iter().all(|f| g.face_is_simple(f.id)) {
        return Err(Error::NotKConnected(2));
    }
    let n = g.vertex_count();
    // Radial darts: host dart d gives 2d (vertex → face) and 2d+1 (face → vertex).
    let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n + g.face_count());
    for v in g.vertices() {
        rotation.push(g.rotation(v).map(|d| 2 * d.0).collect());
    }
    for f in g.faces() {
        // Clockwise order around a face node is the reversed boundary orbit.
        rotation.push(f.boundary.iter().rev().map(|d| 2 * d.0 + 1).collect());
    }
    let dart_count = 2 * g.dart_count();
    let twin: Vec<usize> = (0..dart_count).map(|r| r ^ 1).collect();
    let outer_host_dart = g.face(g.outer_face()).boundary.iter().copied().min().unwrap();
    let (graph, remap) =
        PlaneGraph::from_rotations_mapped(rotation, twin, Some(2 * outer_host_dart.0))?;

    let labels: Vec<RadialNode> = (0..n)
        .map(|v| RadialNode::Vertex(VertexId(v)))
        .chain((0..g.face_count()).map(|f| RadialNode::Face(FaceId(f))))
        .collect();
    let edge_of_dart = g.darts().map(|d| remap[2 * d.0]).collect();
    Ok(RadialGraph { graph, labels, edge_of_dart })
}

/// The abstract restricted radial graph `⟨U ∪ T⟩` of the radial graph:
/// incidence multigraph between the chosen vertices and chosen bounded faces.
#[derive(Clone, Debug)]
pub struct RestrictedRadial {
    pub nodes: Vec<RadialNode>,
    /// Edges as pairs of indices into `nodes`, one per incidence.
    pub edges: Vec<(usize, usize)>,
}

impl RestrictedRadial {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn component_count(&self) -> usize {
        let n = self.nodes.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Connected and acyclic.  The empty graph is not a tree; a single node is.
    pub fn is_tree(&self) -> bool {
        !self.nodes.is_empty()
            && self.component_count() == 1
            && self.edges.len() + 1 == self.nodes.len()
    }
}

/// Builds the restricted radial graph on `U ∪ T` directly from the host,
/// keeping incidence multiplicity.  `T` must consist of bounded faces.
pub fn restricted_radial(
    g: &PlaneGraph,
    proper: &BTreeSet<VertexId>,
    faces: &BTreeSet<FaceId>,
) -> Result<RestrictedRadial> {
    if faces.contains(&g.outer_face()) {
        return Err(Error::Qstf(crate::error::QstfClause::OuterFaceInT(g.outer_face())));
    }
    let mut nodes: Vec<RadialNode> = Vec::new();
    let mut vertex_index = std::collections::BTreeMap::new();
    let mut face_index = std::collections::BTreeMap::new();
    for &v in proper {
        if v.0 >= g.vertex_count() {
            return Err(Error::NoSuchVertex(v));
        }
        vertex_index.insert(v, nodes.len());
        nodes.push(RadialNode::Vertex(v));
    }
    for &f in faces {
        if f.0 >= g.face_count() {
            return Err(Error::NoSuchFace(f));
        }
        face_index.insert(f, nodes.len());
        nodes.push(RadialNode::Face(f));
    }
    let mut edges = Vec::new();
    for &v in proper {
        for d in g.rotation(v) {
            let f = g.face_of(d);
            if let Some(&fi) = face_index.get(&f) {
                edges.push((vertex_index[&v], fi));
            }
        }
    }
    Ok(RestrictedRadial { nodes, edges })
}
