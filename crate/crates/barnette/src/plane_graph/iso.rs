//! Embedding-respecting isomorphism between plane graphs.
//!
//! A connected map isomorphism is determined by the image of a single dart,
//! so the search tries every candidate image (both orientations) and
//! propagates through twin and rotation.

use super::{DartId, FaceId, PlaneGraph, VertexId};

#[derive(Clone, Debug)]
pub struct IsoMaps {
    /// Dart of `a` → dart of `b`.
    pub dart_map: Vec<DartId>,
    /// Vertex of `a` → vertex of `b`.
    pub vertex_map: Vec<VertexId>,
    /// Face of `a` → face of `b`.
    pub face_map: Vec<FaceId>,
    /// Whether the isomorphism reverses orientation.
    pub reflected: bool,
}

/// Finds an isomorphism of embedded graphs (commuting with twin and rotation,
/// in either orientation).  With `respect_outer` the designated outer faces
/// must correspond; without it the graphs are compared as sphere maps.
pub fn embedded_isomorphism(a: &PlaneGraph, b: &PlaneGraph, respect_outer: bool) -> Option<IsoMaps> {
    if a.vertex_count() != b.vertex_count()
        || a.dart_count() != b.dart_count()
        || a.face_count() != b.face_count()
        || a.degree_sequence() != b.degree_sequence()
        || a.face_length_sequence() != b.face_length_sequence()
    {
        return None;
    }
    for reflected in [false, true] {
        for d0 in b.darts() {
            if let Some(maps) = try_map(a, b, d0, reflected, respect_outer) {
                return Some(maps);
            }
        }
    }
    None
}

fn try_map(
    a: &PlaneGraph,
    b: &PlaneGraph,
    image_of_zero: DartId,
    reflected: bool,
    respect_outer: bool,
) -> Option<IsoMaps> {
    let m = a.dart_count();
    let mut map = vec![usize::MAX; m];
    map[0] = image_of_zero.0;
    let mut stack = vec![DartId(0)];
    while let Some(d) = stack.pop() {
        let md = DartId(map[d.0]);
        // twin
        let (x, mx) = (a.twin(d), b.twin(md));
        if map[x.0] == usize::MAX {
            map[x.0] = mx.0;
            stack.push(x);
        } else if map[x.0] != mx.0 {
            return None;
        }
        // rotation
        let (y, my) = (
            a.rot_next(d),
            if reflected { b.rot_prev(md) } else { b.rot_next(md) },
        );
        if map[y.0] == usize::MAX {
            map[y.0] = my.0;
            stack.push(y);
        } else if map[y.0] != my.0 {
            return None;
        }
    }
    // Connectivity of the dart structure guarantees full coverage; check the
    // map is a bijection and consistent on origins.
    let mut seen = vec![false; m];
    for &v in &map {
        if v == usize::MAX || seen[v] {
            return None;
        }
        seen[v] = true;
    }
    let mut vertex_map = vec![usize::MAX; a.vertex_count()];
    for d in a.darts() {
        let (v, w) = (a.origin(d).0, b.origin(DartId(map[d.0])).0);
        if vertex_map[v] == usize::MAX {
            vertex_map[v] = w;
        } else if vertex_map[v] != w {
            return None;
        }
    }
    let mut face_map = vec![usize::MAX; a.face_count()];
    for d in a.darts() {
        let (f, g) = (a.face_of(d).0, b.face_of(DartId(map[d.0])).0);
        if face_map[f] == usize::MAX {
            face_map[f] = g;
        } else if face_map[f] != g {
            return None;
        }
    }
    if respect_outer && face_map[a.outer_face().0] != b.outer_face().0 {
        return None;
    }
    Some(IsoMaps {
        dart_map: map.into_iter().map(DartId).collect(),
        vertex_map: vertex_map.into_iter().map(VertexId).collect(),
        face_map: face_map.into_iter().map(FaceId).collect(),
        reflected,
    })
}
