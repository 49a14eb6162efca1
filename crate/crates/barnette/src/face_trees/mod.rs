//! (Quasi) spanning trees of faces and their correspondence with constrained
//! hamiltonian cycles.
//!
//! A face tree on a host `H` is a set `T` of bounded faces with pairwise
//! edge-disjoint boundaries covering every vertex, a proper-vertex set `U`
//! such that every vertex outside `U` lies on exactly `deg/2` faces of `T`,
//! and a restricted radial graph on `U ∪ T` that is a tree.  When `H = G/Q`
//! for a facial 2-factor `Q` of a cubic plane graph, face trees correspond
//! exactly to hamiltonian cycles of `G` with prescribed face sides.

mod equivalences;
mod leapfrog;

pub use equivalences::{
    four_form_context, four_form_convert, four_form_counts, FourFormContext, FourForm, FourFormObject,
};
pub use leapfrog::{
    hc_lift_leapfrog, hc_project_leapfrog, leapfrog_context, lf_identity_check, face_tree_from_dual_trail,
    LeapfrogContext,
};

use std::collections::BTreeSet;

use crate::error::{Error, QstfClause, Result, SideClause};
use crate::plane_graph::{restricted_radial, EdgeId, FaceId, PlaneGraph, VertexId};
use crate::transforms::ReducedGraph;

/// A (quasi) spanning tree of faces: the face set `T` and the proper set `U`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FaceTree {
    pub faces: BTreeSet<FaceId>,
    pub proper: BTreeSet<VertexId>,
}

impl FaceTree {
    pub fn quasi_vertices(&self, h: &PlaneGraph) -> BTreeSet<VertexId> {
        h.vertices().filter(|v| !self.proper.contains(v)).collect()
    }

    pub fn is_spanning(&self, h: &PlaneGraph) -> bool {
        self.proper.len() == h.vertex_count()
    }
}

/// Search mode for face-tree searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeMode {
    /// Only `U = V(H)`.
    Spanning,
    /// Any admissible proper set (so spanning trees are found too).
    Quasi,
}

/// Checks the face-tree conditions, reporting the first failing clause in
/// definition order.
pub fn is_qstf(
    h: &PlaneGraph,
    proper: &BTreeSet<VertexId>,
    faces: &BTreeSet<FaceId>,
) -> std::result::Result<(), QstfClause> {
    if faces.contains(&h.outer_face()) {
        return Err(QstfClause::OuterFaceInT(h.outer_face()));
    }
    // Pairwise edge-disjoint boundaries.
    let mut edge_owner: std::collections::BTreeMap<EdgeId, FaceId> = Default::default();
    for &f in faces {
        for e in h.face_edges(f) {
            if let Some(&other) = edge_owner.get(&e) {
                return Err(QstfClause::SharedEdge(other, f));
            }
            edge_owner.insert(e, f);
        }
    }
    // Every vertex covered.
    let mut count = vec![0usize; h.vertex_count()];
    for &f in faces {
        let mut on_face: Vec<VertexId> = h.face_vertices(f);
        on_face.sort_unstable();
        on_face.dedup();
        for v in on_face {
            count[v.0] += 1;
        }
    }
    if let Some(v) = count.iter().position(|&c| c == 0) {
        return Err(QstfClause::UncoveredVertex(VertexId(v)));
    }
    // Quasi vertices lie on exactly deg/2 faces of T.
    for v in h.vertices() {
        if !proper.contains(&v) && count[v.0] != h.degree(v) / 2 {
            return Err(QstfClause::QuasiCount {
                vertex: v,
                on_faces: count[v.0],
                expected: h.degree(v) / 2,
            });
        }
    }
    // The restricted radial graph is a tree.
    let rr = restricted_radial(h, proper, faces).expect("outer exclusion already checked");
    if !rr.is_tree() {
        return Err(QstfClause::RadialNotTree {
            nodes: rr.node_count(),
            edges: rr.edge_count(),
            components: rr.component_count(),
        });
    }
    Ok(())
}

/// Searches for a face tree over subsets of `candidates`.  Faces are decided
/// in ascending id order, include-first, with edge-disjointness and
/// coverability pruning; in quasi mode the proper set is maximised, ties
/// broken lexicographically on the quasi set.
pub fn find_face_tree(
    h: &PlaneGraph,
    candidates: &BTreeSet<FaceId>,
    mode: TreeMode,
    exclude_outer: bool,
) -> Option<FaceTree> {
    let cands: Vec<FaceId> = candidates
        .iter()
        .copied()
        .filter(|&f| !(exclude_outer && f == h.outer_face()))
        .collect();
    let face_edges: Vec<BTreeSet<EdgeId>> =
        cands.iter().map(|&f| h.face_edges(f).into_iter().collect()).collect();
    let face_vertices: Vec<BTreeSet<VertexId>> = cands
        .iter()
        .map(|&f| h.face_vertices(f).into_iter().collect())
        .collect();
    let mut state = TreeSearch {
        h,
        mode,
        cands,
        face_edges,
        face_vertices,
        used_edges: BTreeSet::new(),
        cover: vec![0; h.vertex_count()],
        chosen: Vec::new(),
    };
    state.dfs(0)
}

struct TreeSearch<'a> {
    h: &'a PlaneGraph,
    mode: TreeMode,
    cands: Vec<FaceId>,
    face_edges: Vec<BTreeSet<EdgeId>>,
    face_vertices: Vec<BTreeSet<VertexId>>,
    used_edges: BTreeSet<EdgeId>,
    cover: Vec<usize>,
    chosen: Vec<usize>,
}

impl TreeSearch<'_> {
    fn dfs(&mut self, next: usize) -> Option<FaceTree> {
        if next == self.cands.len() {
            return self.close();
        }
        // Coverability: an uncovered vertex must still be reachable.
        if let Some(v) = self.cover.iter().position(|&c| c == 0) {
            let reachable = (next..self.cands.len())
                .any(|i| self.face_vertices[i].contains(&VertexId(v)))
                || self.chosen.iter().any(|&i| self.face_vertices[i].contains(&VertexId(v)));
            if !reachable {
                return None;
            }
        }
        // Include candidate `next` when edge-disjoint.
        if self.face_edges[next].is_disjoint(&self.used_edges) {
            for &e in &self.face_edges[next] {
                self.used_edges.insert(e);
            }
            for v in self.face_vertices[next].clone() {
                self.cover[v.0] += 1;
            }
            self.chosen.push(next);
            if let Some(found) = self.dfs(next + 1) {
                return Some(found);
            }
            self.chosen.pop();
            for v in self.face_vertices[next].clone() {
                self.cover[v.0] -= 1;
            }
            for e in self.face_edges[next].clone() {
                self.used_edges.remove(&e);
            }
        }
        self.dfs(next + 1)
    }

    fn close(&self) -> Option<FaceTree> {
        if self.chosen.is_empty() || self.cover.contains(&0) {
            return None;
        }
        let faces: BTreeSet<FaceId> = self.chosen.iter().map(|&i| self.cands[i]).collect();
        let everyone: BTreeSet<VertexId> = self.h.vertices().collect();
        match self.mode {
            TreeMode::Spanning => is_qstf(self.h, &everyone, &faces)
                .ok()
                .map(|_| FaceTree { faces, proper: everyone }),
            TreeMode::Quasi => {
                // Vertices eligible to be quasi; try quasi sets by size, then
                // lexicographically, so |U| is maximised.
                let eligible: Vec<VertexId> = self
                    .h
                    .vertices()
                    .filter(|&v| self.cover[v.0] == self.h.degree(v) / 2)
                    .collect();
                for size in 0..=eligible.len() {
                    let mut quasi = Vec::new();
                    if let Some(found) =
                        self.try_quasi_sets(&faces, &eligible, 0, size, &mut quasi)
                    {
                        return Some(found);
                    }
                }
                None
            }
        }
    }

    fn try_quasi_sets(
        &self,
        faces: &BTreeSet<FaceId>,
        eligible: &[VertexId],
        from: usize,
        remaining: usize,
        quasi: &mut Vec<VertexId>,
    ) -> Option<FaceTree> {
        if remaining == 0 {
            let proper: BTreeSet<VertexId> =
                self.h.vertices().filter(|v| !quasi.contains(v)).collect();
            return is_qstf(self.h, &proper, faces)
                .ok()
                .map(|_| FaceTree { faces: faces.clone(), proper });
        }
        for i in from..=eligible.len().saturating_sub(remaining) {
            quasi.push(eligible[i]);
            if let Some(found) =
                self.try_quasi_sets(faces, eligible, i + 1, remaining - 1, quasi)
            {
                return Some(found);
            }
            quasi.pop();
        }
        None
    }
}

/// A hamiltonian cycle with the side (inside/outside) of every face.
/// The outer face is outside by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamCycleWithSides {
    pub cycle: BTreeSet<EdgeId>,
    inside: Vec<bool>,
}

impl HamCycleWithSides {
    /// Validates the edge set as a hamiltonian cycle and computes the side
    /// of every face: faces merge across non-cycle edges into exactly two
    /// regions, and the region of the outer face is the outside.
    pub fn from_edges(g: &PlaneGraph, cycle: BTreeSet<EdgeId>) -> Result<Self> {
        if cycle.len() != g.vertex_count() {
            return Err(Error::NotHamiltonian(format!(
                "{} edges for {} vertices",
                cycle.len(),
                g.vertex_count()
            )));
        }
        let mut degree = vec![0usize; g.vertex_count()];
        for &e in &cycle {
            if e.0 >= g.dart_count() {
                return Err(Error::NoSuchDart(crate::plane_graph::DartId(e.0)));
            }
            let (u, v) = g.endpoints(e);
            degree[u.0] += 1;
            degree[v.0] += 1;
        }
        if let Some(v) = degree.iter().position(|&d| d != 2) {
            return Err(Error::NotHamiltonian(format!(
                "vertex {v} has cycle degree {}",
                degree[v]
            )));
        }
        // Connectivity: walk the cycle.
        let mut visited = vec![false; g.vertex_count()];
        let mut at = VertexId(0);
        let mut via: Option<EdgeId> = None;
        let mut steps = 0;
        loop {
            visited[at.0] = true;
            let next = g
                .rotation(at)
                .map(|d| (g.edge_of(d), g.head(d)))
                .find(|&(e, _)| cycle.contains(&e) && Some(e) != via);
            let Some((e, w)) = next else {
                return Err(Error::NotHamiltonian("cycle walk got stuck".into()));
            };
            via = Some(e);
            at = w;
            steps += 1;
            if at == VertexId(0) {
                break;
            }
            if steps > g.vertex_count() {
                break;
            }
        }
        if visited.iter().any(|&v| !v) {
            return Err(Error::NotHamiltonian("edge set is a disjoint union of cycles".into()));
        }

        // Union-find faces across non-cycle edges.
        let mut parent: Vec<usize> = (0..g.face_count()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for e in g.edges() {
            if !cycle.contains(&e) {
                let (f1, f2) = g.edge_faces(e);
                let (a, b) = (find(&mut parent, f1.0), find(&mut parent, f2.0));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let outer_group = find(&mut parent, g.outer_face().0);
        let groups: BTreeSet<usize> =
            (0..g.face_count()).map(|f| find(&mut parent, f)).collect();
        if groups.len() != 2 {
            return Err(Error::NotHamiltonian(format!(
                "face regions split into {} groups",
                groups.len()
            )));
        }
        let inside = (0..g.face_count())
            .map(|f| find(&mut parent, f) != outer_group)
            .collect();
        Ok(HamCycleWithSides { cycle, inside })
    }

    pub fn is_inside(&self, f: FaceId) -> bool {
        self.inside[f.0]
    }
}

/// Whether the factor of a reduced graph contains the source's outer face;
/// in that case every side requirement of the correspondence flips.
fn orientation_flipped(rg: &ReducedGraph) -> bool {
    rg.factor.contains(&rg.source.outer_face())
}

/// Verifies the side constraints of the correspondence that do not refer to
/// a particular face tree: the outer non-factor face is outside, and no two
/// non-factor faces sharing an edge lie together on the tree side.
pub fn verify_side_constraints(rg: &ReducedGraph, c: &HamCycleWithSides) -> Result<()> {
    let flipped = orientation_flipped(rg);
    let tree_side = !flipped;
    let g = &rg.source;
    if c.inside.len() != g.face_count() || c.cycle.len() != g.vertex_count() {
        return Err(Error::NotHamiltonian(
            "the cycle does not belong to the reduction's source graph".into(),
        ));
    }
    if !flipped && c.is_inside(g.outer_face()) {
        return Err(Error::Side(SideClause::OuterFaceInside));
    }
    for e in g.edges() {
        let (f1, f2) = g.edge_faces(e);
        let non_factor = !rg.factor.contains(&f1) && !rg.factor.contains(&f2);
        if non_factor
            && f1 != f2
            && f1 != g.outer_face()
            && f2 != g.outer_face()
            && c.is_inside(f1) == tree_side
            && c.is_inside(f2) == tree_side
        {
            return Err(Error::Side(SideClause::AdjacentNonFactorInside(f1, f2)));
        }
    }
    Ok(())
}

/// Lifts a face tree of `H = G/Q` to a hamiltonian cycle of `G` by
/// traversing the unique A-trail of `H_T` and routing through each
/// contracted cycle: proper vertices wrap their factor face onto the tree
/// side, quasi vertices leave it on the other side.
pub fn qstf_to_hamiltonian(rg: &ReducedGraph, ft: &FaceTree) -> Result<HamCycleWithSides> {
    let g = &rg.source;
    if let Some(v) = g.vertices().find(|&v| g.degree(v) != 3) {
        return Err(Error::NotCubic { vertex: v, degree: g.degree(v) });
    }
    if ft.faces.contains(&rg.h.outer_face()) {
        return Err(Error::Qstf(QstfClause::OuterFaceInT(rg.h.outer_face())));
    }
    let hosted = crate::atrails::qstf_to_atrail(&rg.h, ft)?;
    let h = &rg.h;

    // Host darts of H_T, for the interval rule.
    let in_tree: BTreeSet<usize> = hosted
        .subgraph
        .dart_to_host
        .iter()
        .map(|d| d.0)
        .collect();

    let mut cycle: BTreeSet<EdgeId> = BTreeSet::new();
    let trail_host = hosted.host_darts();
    for &hd in &trail_host {
        cycle.insert(g.edge_of(rg.dart_map[hd.0]));
    }

    let m = trail_host.len();
    for i in 0..m {
        let (d_in, d_out) = (trail_host[i], trail_host[(i + 1) % m]);
        let w = h.head(d_in);
        let a = h.twin(d_in);
        let b = d_out;
        let arc = transition_arc(rg, ft, &in_tree, w, a, b)?;
        cycle.extend(arc);
    }

    let sides = HamCycleWithSides::from_edges(g, cycle)?;
    verify_side_constraints(rg, &sides)?;
    // Factor faces of proper vertices sit on the tree side, quasi on the
    // other; non-factor faces sit on the tree side exactly when they are in T.
    let tree_side = !orientation_flipped(rg);
    for (w, &f) in rg.vertex_map.iter().enumerate() {
        let want = ft.proper.contains(&VertexId(w));
        if (sides.is_inside(f) == tree_side) != want {
            return Err(Error::Side(if want {
                SideClause::ProperFaceOutside(f)
            } else {
                SideClause::QuasiFaceInside(f)
            }));
        }
    }
    for (hf, &sf) in rg.face_map.iter().enumerate() {
        if sf == g.outer_face() {
            continue;
        }
        let in_t = ft.faces.contains(&FaceId(hf));
        if (sides.is_inside(sf) == tree_side) != in_t {
            return Err(Error::DartStructure(format!(
                "side of face {sf} disagrees with the face tree"
            )));
        }
    }
    Ok(sides)
}

/// The arc of the factor cycle at `w` crossed by the transition `{a, b}`:
/// the rotation interval between the transition darts that carries no tree
/// darts determines which attachment vertices the cycle must pick up, and
/// the factor-cycle arc with exactly those interior attachments is taken.
fn transition_arc(
    rg: &ReducedGraph,
    ft: &FaceTree,
    in_tree: &BTreeSet<usize>,
    w: VertexId,
    a: crate::plane_graph::DartId,
    b: crate::plane_graph::DartId,
) -> Result<Vec<EdgeId>> {
    let h = &rg.h;
    let g = &rg.source;
    let rotation: Vec<crate::plane_graph::DartId> = h.rotation(w).collect();
    let deg = rotation.len();
    let pos = |d: crate::plane_graph::DartId| rotation.iter().position(|&x| x == d).unwrap();
    let (pa, pb) = (pos(a), pos(b));

    // Strictly interior rotation positions of the two candidate directions.
    let interior = |from: usize, to: usize| -> Vec<usize> {
        let mut out = Vec::new();
        let mut k = (from + 1) % deg;
        while k != to {
            out.push(k);
            k = (k + 1) % deg;
        }
        out
    };
    let side_ab = interior(pa, pb);
    let side_ba = interior(pb, pa);
    let tree_free = |side: &[usize]| side.iter().all(|&k| !in_tree.contains(&rotation[k].0));
    let proper = ft.proper.contains(&w);
    let (first, last, ints) = match (tree_free(&side_ab), tree_free(&side_ba)) {
        (true, false) => (a, b, side_ab),
        (false, true) => (b, a, side_ba),
        (true, true) => {
            if proper {
                // Take the side carrying the skipped darts.
                if side_ab.len() >= side_ba.len() {
                    (a, b, side_ab)
                } else {
                    (b, a, side_ba)
                }
            } else {
                // Quasi: hug the face corner (the empty side).
                if side_ab.is_empty() {
                    (a, b, side_ab)
                } else {
                    (b, a, side_ba)
                }
            }
        }
        (false, false) => {
            return Err(Error::DartStructure(format!(
                "transition at {w} crosses tree darts on both sides"
            )))
        }
    };

    // Attachment vertices: where the h-darts hang off the factor cycle.
    let att = |d: crate::plane_graph::DartId| g.origin(rg.dart_map[d.0]);
    let want_interior: BTreeSet<VertexId> = ints.iter().map(|&k| att(rotation[k])).collect();
    let (from, to) = (att(first), att(last));

    // The factor cycle as a vertex/edge sequence.
    let factor_face = rg.vertex_map[w.0];
    let boundary = &g.face(factor_face).boundary;
    debug_assert_eq!(boundary.len(), deg);
    let vertex_at: Vec<VertexId> = boundary.iter().map(|&d| g.origin(d)).collect();
    let p_from = vertex_at.iter().position(|&x| x == from).unwrap();
    // Candidate arcs in both boundary directions; pick the one whose interior
    // attachments are exactly the skipped ones.
    for direction in [1isize, -1] {
        let mut edges = Vec::new();
        let mut interior_vertices = BTreeSet::new();
        let mut k = p_from as isize;
        loop {
            let next = (k + direction).rem_euclid(deg as isize);
            let edge_pos = if direction == 1 { k } else { next };
            edges.push(g.edge_of(boundary[edge_pos as usize]));
            k = next;
            if vertex_at[k as usize] == to {
                break;
            }
            interior_vertices.insert(vertex_at[k as usize]);
            if edges.len() > deg {
                break;
            }
        }
        if interior_vertices == want_interior && edges.len() == ints.len() + 1 {
            return Ok(edges);
        }
    }
    Err(Error::DartStructure(format!(
        "no factor-cycle arc at {w} matches the transition interval"
    )))
}

/// The converse direction: reads a face tree off a constrained hamiltonian
/// cycle.  The side constraints are verified first; the proper set is the
/// set of contracted vertices whose factor face lies on the tree side.
pub fn hamiltonian_to_qstf(rg: &ReducedGraph, c: &HamCycleWithSides) -> Result<FaceTree> {
    verify_side_constraints(rg, c)?;
    let tree_side = !orientation_flipped(rg);
    let proper: BTreeSet<VertexId> = rg
        .vertex_map
        .iter()
        .enumerate()
        .filter(|&(_, &f)| c.is_inside(f) == tree_side)
        .map(|(w, _)| VertexId(w))
        .collect();
    let faces: BTreeSet<FaceId> = rg
        .face_map
        .iter()
        .enumerate()
        .filter(|&(_, &sf)| c.is_inside(sf) == tree_side)
        .map(|(hf, _)| FaceId(hf))
        .collect();
    is_qstf(&rg.h, &proper, &faces).map_err(Error::Qstf)?;
    Ok(FaceTree { faces, proper })
}
