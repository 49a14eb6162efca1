//! Dart-based combinatorial embeddings of connected plane multigraphs.
//!
//! A [`PlaneGraph`] stores a rotation system: every edge is split into two
//! *darts* (half-edges), `twin` exchanges the two halves of an edge, and each
//! vertex carries the cyclic clockwise order of its outgoing darts.  Faces are
//! the orbits of the permutation `d ↦ rot_next(twin(d))`; the constructor
//! checks Euler's formula `V − E + F = 2`, so every value of this type is a
//! genuine sphere embedding with a designated outer face.
//!
//! Loops are rejected; parallel edges are first-class (contractions of facial
//! factors produce them routinely).

mod coloring;
mod dual;
mod io;
mod iso;
mod validate;

pub use coloring::{face_coloring, FaceColoring};
pub use dual::{
    dual, radial_graph, restricted_radial, Dual, RadialGraph, RadialNode, RestrictedRadial,
};
pub use io::{parse_plane_graph, write_plane_graph};
pub use iso::{embedded_isomorphism, IsoMaps};
pub use validate::{bfs_distances, validate, vertex_connectivity, Property, PropertyReport};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

macro_rules! index_type {
    ($(#[$doc:meta])* $name:ident, $letter:literal) => {
        $(#[$doc])*
        #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub usize);

        impl $name {
            #[inline]
            pub fn index(self) -> usize {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{}", $letter, self.0)
            }
        }
    };
}

index_type!(
    /// Index of a vertex.
    VertexId,
    "v"
);
index_type!(
    /// Index of a dart (half-edge).
    DartId,
    "d"
);
index_type!(
    /// Index of a face (an orbit of the face-traversal permutation).
    FaceId,
    "f"
);
index_type!(
    /// Canonical edge index: the smaller of the two dart indices of the edge.
    EdgeId,
    "e"
);

/// One face of the embedding: a closed dart walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    /// Cyclic boundary, starting at the smallest dart of the orbit.
    pub boundary: Vec<DartId>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }
}

/// A connected plane multigraph given by its rotation system, with faces
/// extracted at construction and a designated outer face.
#[derive(Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    vertex_count: usize,
    origin: Vec<usize>,
    twin: Vec<usize>,
    rotation: Vec<Vec<usize>>,
    rot_pos: Vec<usize>,
    faces: Vec<Face>,
    dart_face: Vec<usize>,
    outer: usize,
}

impl PlaneGraph {
    /// Builds a plane graph from per-vertex clockwise dart lists and an
    /// explicit twin involution.  `rotation[v]` lists the darts leaving `v`;
    /// dart indices must form a partition of `0..twin.len()`.
    ///
    /// The outer face defaults to the face containing dart 0.  Dart ids are
    /// canonicalised to vertex-major order (the numbering the text format
    /// produces), so `parse(write(g)) = g` holds for every constructed
    /// graph; use [`PlaneGraph::from_rotations_mapped`] to learn where the
    /// input darts went.
    pub fn from_rotations(
        rotation: Vec<Vec<usize>>,
        twin: Vec<usize>,
        outer_dart: Option<usize>,
    ) -> Result<Self> {
        Ok(Self::from_rotations_mapped(rotation, twin, outer_dart)?.0)
    }

    /// Like [`PlaneGraph::from_rotations`], also returning the map from the
    /// caller's dart ids to the canonical ids.
    pub fn from_rotations_mapped(
        rotation: Vec<Vec<usize>>,
        twin: Vec<usize>,
        outer_dart: Option<usize>,
    ) -> Result<(Self, Vec<DartId>)> {
        let dart_count = twin.len();
        if dart_count == 0 {
            return Err(Error::DartStructure("graph has no darts".into()));
        }
        if !dart_count.is_multiple_of(2) {
            return Err(Error::DartStructure("odd number of darts".into()));
        }

        // Canonical renumbering: dart ids in vertex-major rotation order.
        let mut new_of_old = vec![usize::MAX; dart_count];
        let mut counter = 0usize;
        for darts in &rotation {
            for &d in darts {
                if d >= dart_count {
                    return Err(Error::DartStructure(format!("dart {d} out of range")));
                }
                if new_of_old[d] != usize::MAX {
                    return Err(Error::DartStructure(format!("dart {d} listed twice")));
                }
                new_of_old[d] = counter;
                counter += 1;
            }
        }
        if counter != dart_count {
            return Err(Error::DartStructure("rotation lists do not cover all darts".into()));
        }
        let rotation: Vec<Vec<usize>> = rotation
            .into_iter()
            .map(|darts| darts.into_iter().map(|d| new_of_old[d]).collect())
            .collect();
        let mut new_twin = vec![usize::MAX; dart_count];
        for (old, &t) in twin.iter().enumerate() {
            if t >= dart_count {
                return Err(Error::DartStructure(format!("twin of dart {old} out of range")));
            }
            new_twin[new_of_old[old]] = new_of_old[t];
        }
        let twin = new_twin;
        let outer_dart = outer_dart.map(|d| {
            if d < dart_count {
                new_of_old[d]
            } else {
                d
            }
        });

        let vertex_count = rotation.len();
        let mut origin = vec![usize::MAX; dart_count];
        let mut rot_pos = vec![usize::MAX; dart_count];
        for (v, darts) in rotation.iter().enumerate() {
            for (k, &d) in darts.iter().enumerate() {
                origin[d] = v;
                rot_pos[d] = k;
            }
        }

        for d in 0..dart_count {
            let t = twin[d];
            if t >= dart_count || twin[t] != d {
                return Err(Error::DartStructure(format!("twin is not an involution at dart {d}")));
            }
            if t == d {
                return Err(Error::DartStructure(format!("twin has fixed point at dart {d}")));
            }
            if origin[d] == origin[t] {
                return Err(Error::LoopEdge(VertexId(origin[d])));
            }
        }

        // Connectivity over vertices (isolated vertices are rejected).
        let mut seen = vec![false; vertex_count];
        let mut stack = vec![origin[0]];
        seen[origin[0]] = true;
        while let Some(v) = stack.pop() {
            for &d in &rotation[v] {
                let w = origin[twin[d]];
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::Disconnected);
        }

        // Face orbits of d ↦ rot_next(twin(d)).
        let rot_next = |d: usize| -> usize {
            let v = origin[d];
            let k = rot_pos[d];
            rotation[v][(k + 1) % rotation[v].len()]
        };
        let mut dart_face = vec![usize::MAX; dart_count];
        let mut faces = Vec::new();
        for d0 in 0..dart_count {
            if dart_face[d0] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut boundary = Vec::new();
            let mut d = d0;
            loop {
                dart_face[d] = id;
                boundary.push(DartId(d));
                d = rot_next(twin[d]);
                if d == d0 {
                    break;
                }
            }
            faces.push(Face { id: FaceId(id), boundary });
        }

        let edges = dart_count / 2;
        if vertex_count + faces.len() != edges + 2 {
            return Err(Error::EulerCheck {
                vertices: vertex_count,
                edges,
                faces: faces.len(),
            });
        }

        let outer_dart = outer_dart.unwrap_or(0);
        if outer_dart >= dart_count {
            return Err(Error::NoSuchDart(DartId(outer_dart)));
        }
        let outer = dart_face[outer_dart];

        let graph = PlaneGraph {
            vertex_count,
            origin,
            twin,
            rotation,
            rot_pos,
            faces,
            dart_face,
            outer,
        };
        Ok((graph, new_of_old.into_iter().map(DartId).collect()))
    }

    /// Builds a plane graph from clockwise neighbour lists.  Parallel edges
    /// are twinned by occurrence rank: the i-th occurrence of `u` in `v`'s
    /// list is paired with the i-th occurrence of `v` in `u`'s list.  The
    /// Euler check rejects rank mismatches that do not embed in the sphere.
    pub fn from_neighbor_lists(lists: &[Vec<usize>], outer_dart: Option<usize>) -> Result<Self> {
        let n = lists.len();
        let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n);
        let mut heads: Vec<usize> = Vec::new();
        for (v, list) in lists.iter().enumerate() {
            let mut darts = Vec::with_capacity(list.len());
            for &u in list {
                if u >= n {
                    return Err(Error::NoSuchVertex(VertexId(u)));
                }
                if u == v {
                    return Err(Error::LoopEdge(VertexId(v)));
                }
                darts.push(heads.len());
                heads.push(u);
            }
            rotation.push(darts);
        }
        let twin = twins_by_rank(&rotation, &heads)?;
        Self::from_rotations(rotation, twin, outer_dart)
    }

    // ---- basic accessors ----

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.twin.len() / 2
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count).map(VertexId)
    }

    pub fn darts(&self) -> impl Iterator<Item = DartId> {
        (0..self.twin.len()).map(DartId)
    }

    /// Canonical edge representatives (the smaller dart of each twin pair).
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.twin.len()).filter(|&d| d < self.twin[d]).map(EdgeId)
    }

    #[inline]
    pub fn twin(&self, d: DartId) -> DartId {
        DartId(self.twin[d.0])
    }

    #[inline]
    pub fn origin(&self, d: DartId) -> VertexId {
        VertexId(self.origin[d.0])
    }

    #[inline]
    pub fn head(&self, d: DartId) -> VertexId {
        VertexId(self.origin[self.twin[d.0]])
    }

    /// Clockwise successor around the origin vertex.
    #[inline]
    pub fn rot_next(&self, d: DartId) -> DartId {
        let v = self.origin[d.0];
        let k = self.rot_pos[d.0];
        DartId(self.rotation[v][(k + 1) % self.rotation[v].len()])
    }

    /// Clockwise predecessor around the origin vertex.
    #[inline]
    pub fn rot_prev(&self, d: DartId) -> DartId {
        let v = self.origin[d.0];
        let k = self.rot_pos[d.0];
        let len = self.rotation[v].len();
        DartId(self.rotation[v][(k + len - 1) % len])
    }

    /// Next dart along the face boundary: `rot_next(twin(d))`.
    #[inline]
    pub fn face_next(&self, d: DartId) -> DartId {
        self.rot_next(self.twin(d))
    }

    /// Previous dart along the face boundary: `twin(rot_prev(d))`.
    #[inline]
    pub fn face_prev(&self, d: DartId) -> DartId {
        self.twin(self.rot_prev(d))
    }

    #[inline]
    pub fn face_of(&self, d: DartId) -> FaceId {
        FaceId(self.dart_face[d.0])
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f.0]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn outer_face(&self) -> FaceId {
        FaceId(self.outer)
    }

    /// Same embedding with a different designated outer face.
    pub fn with_outer(&self, f: FaceId) -> Result<Self> {
        if f.0 >= self.faces.len() {
            return Err(Error::NoSuchFace(f));
        }
        let mut g = self.clone();
        g.outer = f.0;
        Ok(g)
    }

    pub fn rotation(&self, v: VertexId) -> impl Iterator<Item = DartId> + '_ {
        self.rotation[v.0].iter().map(|&d| DartId(d))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v.0].len()
    }

    pub fn min_degree(&self) -> usize {
        self.rotation.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation[v.0].iter().map(|&d| self.head(DartId(d)))
    }

    #[inline]
    pub fn edge_of(&self, d: DartId) -> EdgeId {
        EdgeId(d.0.min(self.twin[d.0]))
    }

    pub fn edge_darts(&self, e: EdgeId) -> (DartId, DartId) {
        (DartId(e.0), DartId(self.twin[e.0]))
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.origin(DartId(e.0)), self.head(DartId(e.0)))
    }

    /// Some dart from `u` to `v`, if the edge exists.
    pub fn dart_between(&self, u: VertexId, v: VertexId) -> Option<DartId> {
        self.rotation[u.0]
            .iter()
            .map(|&d| DartId(d))
            .find(|&d| self.head(d) == v)
    }

    /// The two faces on either side of an edge.
    pub fn edge_faces(&self, e: EdgeId) -> (FaceId, FaceId) {
        let (d, t) = self.edge_darts(e);
        (self.face_of(d), self.face_of(t))
    }

    /// Vertices on the boundary of `f`, in boundary order (with repetitions
    /// if the boundary is not a simple cycle).
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f.0].boundary.iter().map(|&d| self.origin(d)).collect()
    }

    /// Edge representatives on the boundary of `f`.
    pub fn face_edges(&self, f: FaceId) -> Vec<EdgeId> {
        self.faces[f.0].boundary.iter().map(|&d| self.edge_of(d)).collect()
    }

    /// Distinct faces incident to `v`, in first-occurrence clockwise corner
    /// order.  The corner between `d` and its rotation successor belongs to
    /// `face_of(rot_next d)`, so the corner faces at `v` are exactly
    /// `face_of(d)` over its darts.
    pub fn faces_at(&self, v: VertexId) -> Vec<FaceId> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &d in &self.rotation[v.0] {
            let f = self.face_of(DartId(d));
            if seen.insert(f) {
                out.push(f);
            }
        }
        out
    }

    /// Number of times vertex `v` appears on the boundary of face `f`.
    pub fn incidence_multiplicity(&self, v: VertexId, f: FaceId) -> usize {
        self.rotation[v.0]
            .iter()
            .filter(|&&d| self.dart_face[d] == f.0)
            .count()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.rotation.iter().map(Vec::len).collect();
        ds.sort_unstable();
        ds
    }

    pub fn face_length_sequence(&self) -> Vec<usize> {
        let mut ls: Vec<usize> = self.faces.iter().map(Face::len).collect();
        ls.sort_unstable();
        ls
    }

    // ---- simple structural predicates ----

    pub fn is_cubic(&self) -> bool {
        self.rotation.iter().all(|r| r.len() == 3)
    }

    pub fn is_eulerian(&self) -> bool {
        self.rotation.iter().all(|r| r.len() % 2 == 0)
    }

    /// A 2-coloring of the vertices, if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.vertex_count];
        color[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for &d in &self.rotation[v] {
                let w = self.origin[self.twin[d]];
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// All faces are triangles.
    pub fn is_triangulation(&self) -> bool {
        self.faces.iter().all(|f| f.len() == 3)
    }

    /// Whether the boundary of `f` is a simple cycle (no repeated vertex).
    pub fn face_is_simple(&self, f: FaceId) -> bool {
        let vs = self.face_vertices(f);
        let set: BTreeSet<VertexId> = vs.iter().copied().collect();
        set.len() == vs.len()
    }

    /// The plane subgraph induced by a set of edges.  All vertices must stay
    /// covered and the result must stay connected.  Returns the subgraph, the
    /// map from new darts to old darts, and the map from new faces to the set
    /// of old faces merged into them (removing an edge merges its two sides).
    pub fn edge_subgraph(&self, keep: &BTreeSet<EdgeId>) -> Result<EdgeSubgraph> {
        let keep_dart = |d: usize| keep.contains(&EdgeId(d.min(self.twin[d])));
        let mut new_of_old = vec![usize::MAX; self.twin.len()];
        let mut old_of_new = Vec::new();
        let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(self.vertex_count);
        for v in 0..self.vertex_count {
            let mut darts = Vec::new();
            for &d in &self.rotation[v] {
                if keep_dart(d) {
                    new_of_old[d] = old_of_new.len();
                    darts.push(old_of_new.len());
                    old_of_new.push(d);
                }
            }
            if darts.is_empty() {
                return Err(Error::Disconnected);
            }
            rotation.push(darts);
        }
        let twin: Vec<usize> = old_of_new.iter().map(|&d| new_of_old[self.twin[d]]).collect();

        // Union-find over old faces: removing an edge merges its two sides.
        let mut parent: Vec<usize> = (0..self.faces.len()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for d in 0..self.twin.len() {
            if d < self.twin[d] && !keep_dart(d) {
                let a = find(&mut parent, self.dart_face[d]);
                let b = find(&mut parent, self.dart_face[self.twin[d]]);
                parent[a] = b;
            }
        }

        let sub = PlaneGraph::from_rotations(rotation, twin, None)?;
        // The new outer face is the one whose merged region contains the old
        // outer face.
        let outer_group = find(&mut parent, self.outer);
        let mut outer_new = None;
        let mut merged_faces: Vec<Vec<FaceId>> = vec![Vec::new(); sub.face_count()];
        let mut group_of_new_face = vec![usize::MAX; sub.face_count()];
        for nf in 0..sub.face_count() {
            let sample_old = old_of_new[sub.faces[nf].boundary[0].0];
            let group = find(&mut parent, self.dart_face[sample_old]);
            group_of_new_face[nf] = group;
            if group == outer_group {
                outer_new = Some(nf);
            }
        }
        for f in 0..self.faces.len() {
            let group = find(&mut parent, f);
            if let Some(nf) = group_of_new_face.iter().position(|&g| g == group) {
                merged_faces[nf].push(FaceId(f));
            }
        }
        let outer_new = outer_new.ok_or(Error::Disconnected)?;
        let sub = sub.with_outer(FaceId(outer_new))?;

        Ok(EdgeSubgraph {
            graph: sub,
            dart_to_host: old_of_new.into_iter().map(DartId).collect(),
            merged_faces,
        })
    }
}

/// Result of restricting a plane graph to a subset of its edges.
#[derive(Clone, Debug)]
pub struct EdgeSubgraph {
    pub graph: PlaneGraph,
    /// New dart → host dart.
    pub dart_to_host: Vec<DartId>,
    /// New face → host faces merged into it.
    pub merged_faces: Vec<Vec<FaceId>>,
}

impl EdgeSubgraph {
    pub fn host_dart(&self, d: DartId) -> DartId {
        self.dart_to_host[d.0]
    }
}

fn twins_by_rank(rotation: &[Vec<usize>], heads: &[usize]) -> Result<Vec<usize>> {
    use std::collections::HashMap;
    let mut by_pair: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (v, darts) in rotation.iter().enumerate() {
        for &d in darts {
            by_pair.entry((v, heads[d])).or_default().push(d);
        }
    }
    let mut twin = vec![usize::MAX; heads.len()];
    for (&(v, u), darts) in &by_pair {
        if v > u {
            continue;
        }
        let back = by_pair.get(&(u, v)).map(Vec::as_slice).unwrap_or(&[]);
        if back.len() != darts.len() {
            return Err(Error::TwinMatching {
                u: VertexId(v),
                v: VertexId(u),
                occurrences_u: darts.len(),
                occurrences_v: back.len(),
            });
        }
        for (&a, &b) in darts.iter().zip(back.iter()) {
            twin[a] = b;
            twin[b] = a;
        }
    }
    Ok(twin)
}

impl fmt::Debug for PlaneGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PlaneGraph(V={}, E={}, F={}, outer={})",
            self.vertex_count,
            self.edge_count(),
            self.face_count(),
            self.outer
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;

    #[test]
    fn cube_counts_and_euler() {
        let g = fixtures::cube();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.face_count(), 6);
        assert!(g.faces().iter().all(|f| f.len() == 4));
        assert!(g.is_cubic());
        assert!(g.is_bipartite());
        assert!(!g.is_eulerian());
    }

    #[test]
    fn degree_sum_and_face_length_sum_are_twice_edges() {
        for g in [fixtures::cube(), fixtures::k4(), fixtures::even_prism(3)] {
            let deg: usize = g.vertices().map(|v| g.degree(v)).sum();
            let flen: usize = g.faces().iter().map(Face::len).sum();
            assert_eq!(deg, 2 * g.edge_count());
            assert_eq!(flen, 2 * g.edge_count());
        }
    }

    #[test]
    fn doubled_edge_gives_two_digon_faces() {
        let g = PlaneGraph::from_neighbor_lists(&[vec![1, 1], vec![0, 0]], None).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.face_count(), 2);
        assert!(g.faces().iter().all(|f| f.len() == 2));
    }

    #[test]
    fn single_edge_has_one_face() {
        let g = PlaneGraph::from_neighbor_lists(&[vec![1], vec![0]], None).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.face_count(), 1);
    }

    #[test]
    fn loops_are_rejected() {
        let err = PlaneGraph::from_neighbor_lists(&[vec![0, 1], vec![0]], None).unwrap_err();
        assert!(matches!(err, Error::LoopEdge(_)));
    }

    #[test]
    fn disconnected_is_rejected() {
        let err = PlaneGraph::from_neighbor_lists(
            &[vec![1], vec![0], vec![3], vec![2]],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Disconnected));
    }

    #[test]
    fn four_parallel_edges_need_explicit_twins() {
        // Occurrence-rank pairing of four parallel edges is a torus map, so
        // the Euler check must reject it.
        let err = PlaneGraph::from_neighbor_lists(
            &[vec![1, 1, 1, 1], vec![0, 0, 0, 0]],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::EulerCheck { .. }));

        // The sphere pairing reverses the second rotation.
        let g = PlaneGraph::from_rotations(
            vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]],
            vec![4, 7, 6, 5, 0, 3, 2, 1],
            None,
        )
        .unwrap();
        assert_eq!(g.face_count(), 4);
        assert!(g.faces().iter().all(|f| f.len() == 2));
    }

    #[test]
    fn edge_subgraph_tracks_outer_and_merges() {
        let g = fixtures::cube();
        // Drop one edge: its two quadrilateral faces merge into a hexagon.
        let e = g.edges().next().unwrap();
        let keep: BTreeSet<EdgeId> = g.edges().filter(|&x| x != e).collect();
        let sub = g.edge_subgraph(&keep).unwrap();
        assert_eq!(sub.graph.vertex_count(), 8);
        assert_eq!(sub.graph.edge_count(), 11);
        assert_eq!(sub.graph.face_count(), 5);
        let merged: Vec<usize> = sub.merged_faces.iter().map(Vec::len).collect();
        assert_eq!(merged.iter().sum::<usize>(), 6);
        assert!(merged.contains(&2));
    }
}
