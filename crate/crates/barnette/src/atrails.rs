//! A-trails: eulerian trails whose consecutive edges always share a face
//! corner.
//!
//! Every closed eulerian trail pairs the darts at each vertex into
//! transitions; it is an A-trail exactly when every transition joins
//! rotation-adjacent darts.  At a vertex of degree 2k there are precisely two
//! all-adjacent pairings (the alternating matchings of a 2k-cycle), so the
//! search space is one bit per vertex of degree ≥ 4, pruned by the
//! requirement that the chosen system closes into a single trail.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::face_trees::FaceTree;
use crate::oracle::{Meter, Outcome, SearchBudget};
use crate::plane_graph::{DartId, FaceColoring, FaceId, PlaneGraph, VertexId};

/// A closed A-trail as a dart sequence; `darts[i+1]` leaves the vertex that
/// `darts[i]` enters, indices cyclic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ATrail {
    pub darts: Vec<DartId>,
}

impl ATrail {
    pub fn edge_count(&self) -> usize {
        self.darts.len()
    }

    /// Unordered pairs of edges consecutive in the trail (cyclically).
    pub fn consecutive_edge_pairs(&self, g: &PlaneGraph) -> BTreeSet<(usize, usize)> {
        let m = self.darts.len();
        (0..m)
            .map(|i| {
                let a = g.edge_of(self.darts[i]).0;
                let b = g.edge_of(self.darts[(i + 1) % m]).0;
                (a.min(b), a.max(b))
            })
            .collect()
    }
}

/// Search modes for [`find_a_trails`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrailMode {
    First,
    All,
    /// Enforce the non-separating condition during the search (host must be a
    /// triangulation) and stop at the first hit.
    NonseparatingFirst,
}

/// True iff `seq` is a closed eulerian trail of `h` in which every pair of
/// consecutive edges shares a face corner.  (For a 2-connected host, two
/// edges at a vertex lie on a common face boundary exactly when they are
/// rotation-adjacent there.)
pub fn is_a_trail(h: &PlaneGraph, seq: &[DartId]) -> bool {
    check_a_trail(h, seq).is_ok()
}

/// Same as [`is_a_trail`] but reports why the sequence fails.
pub fn check_a_trail(h: &PlaneGraph, seq: &[DartId]) -> Result<()> {
    if seq.len() != h.edge_count() {
        return Err(Error::NotEulerianTrail(format!(
            "sequence has {} darts for {} edges",
            seq.len(),
            h.edge_count()
        )));
    }
    let mut used = BTreeSet::new();
    for &d in seq {
        if d.0 >= h.dart_count() {
            return Err(Error::NoSuchDart(d));
        }
        if !used.insert(h.edge_of(d)) {
            return Err(Error::NotEulerianTrail(format!("edge of dart {d} repeated")));
        }
    }
    let m = seq.len();
    for i in 0..m {
        let (d, e) = (seq[i], seq[(i + 1) % m]);
        if h.head(d) != h.origin(e) {
            return Err(Error::NotEulerianTrail(format!(
                "dart {e} does not continue from dart {d}"
            )));
        }
        let x = h.twin(d);
        if h.rot_next(x) != e && h.rot_next(e) != x {
            return Err(Error::NotATrail(d, e));
        }
    }
    Ok(())
}

/// The faces hosting the transitions of the trail at each vertex, one entry
/// per passage.  For a degree-2 vertex both corners qualify; with a coloring
/// supplied the transition is attributed to the color-1 face (the reading
/// that makes a plain cycle a spanning tree of its bounded face).
fn transition_faces(
    h: &PlaneGraph,
    trail: &ATrail,
    coloring: Option<&FaceColoring>,
) -> Result<Vec<(VertexId, FaceId)>> {
    let m = trail.darts.len();
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let (d, e) = (trail.darts[i], trail.darts[(i + 1) % m]);
        let v = h.head(d);
        let x = h.twin(d);
        let forward = h.rot_next(x) == e;
        let backward = h.rot_next(e) == x;
        let face = match (forward, backward) {
            (true, false) => h.face_of(e),
            (false, true) => h.face_of(x),
            (true, true) => {
                // Degree-2 vertex: both corners host the transition.
                let (fa, fb) = (h.face_of(e), h.face_of(x));
                match coloring {
                    Some(c) if c.color(fa) == 1 => fa,
                    Some(_) => fb,
                    None => fa.min(fb),
                }
            }
            (false, false) => return Err(Error::NotATrail(d, e)),
        };
        out.push((v, face));
    }
    Ok(out)
}

/// The vertex partition induced by an A-trail and a 2-face-coloring:
/// `v ∈ V_i` iff some transition at `v` sits in a face colored `3 − i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct APartition {
    pub v1: BTreeSet<VertexId>,
    pub v2: BTreeSet<VertexId>,
}

/// Computes the A-partition, failing loudly when a vertex would land in both
/// classes (single-valuedness is a verified invariant, not an assumption).
pub fn a_partition(h: &PlaneGraph, trail: &ATrail, coloring: &FaceColoring) -> Result<APartition> {
    check_a_trail(h, &trail.darts)?;
    assert_eq!(coloring.palette, 2, "the A-partition needs a 2-face-coloring");
    let mut class = vec![0u8; h.vertex_count()];
    for (v, f) in transition_faces(h, trail, Some(coloring))? {
        // Face colored 3-i puts v in V_i.
        let i = 3 - coloring.color(f);
        if class[v.0] == 0 {
            class[v.0] = i;
        } else if class[v.0] != i {
            return Err(Error::InconsistentAPartition(v));
        }
    }
    let v1 = h.vertices().filter(|v| class[v.0] == 1).collect();
    let v2 = h.vertices().filter(|v| class[v.0] == 2).collect();
    Ok(APartition { v1, v2 })
}

/// True iff every triangular face of the eulerian plane triangulation has at
/// least two of its edges consecutive in the trail.
pub fn is_non_separating(h: &PlaneGraph, trail: &ATrail) -> Result<bool> {
    if let Some(f) = h.faces().iter().find(|f| f.len() != 3) {
        return Err(Error::NotTriangulation { face: f.id, length: f.len() });
    }
    check_a_trail(h, &trail.darts)?;
    let consecutive = trail.consecutive_edge_pairs(h);
    for f in h.faces() {
        let edges: Vec<usize> = f.boundary.iter().map(|&d| h.edge_of(d).0).collect();
        let mut hit = false;
        'pairs: for i in 0..3 {
            for j in i + 1..3 {
                let key = (edges[i].min(edges[j]), edges[i].max(edges[j]));
                if consecutive.contains(&key) {
                    hit = true;
                    break 'pairs;
                }
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive A-trail search over per-vertex non-crossing transition systems.
/// Vertices are processed in id order and the two alternating matchings are
/// tried pairing rotation positions (0,1),(2,3),… first, so the output order
/// is deterministic.  `limit` caps the number of trails collected.
pub fn find_a_trails(
    h: &PlaneGraph,
    mode: TrailMode,
    limit: Option<usize>,
    budget: &SearchBudget,
) -> Result<Outcome<Vec<ATrail>>> {
    if let Some(v) = h.vertices().find(|&v| !h.degree(v).is_multiple_of(2)) {
        return Err(Error::NotEulerian { vertex: v, degree: h.degree(v) });
    }
    if h.vertex_count() > 2 && crate::plane_graph::vertex_connectivity(h) < 2 {
        return Err(Error::NotKConnected(2));
    }
    if mode == TrailMode::NonseparatingFirst {
        if let Some(f) = h.faces().iter().find(|f| f.len() != 3) {
            return Err(Error::NotTriangulation { face: f.id, length: f.len() });
        }
    }

    let choosers: Vec<VertexId> = h.vertices().filter(|&v| h.degree(v) >= 4).collect();
    let mut search = TrailSearch {
        h,
        mode,
        limit: match mode {
            TrailMode::First | TrailMode::NonseparatingFirst => Some(1),
            TrailMode::All => limit,
        },
        choice: vec![Matching::Even; h.vertex_count()],
        out: Vec::new(),
        meter: Meter::new(budget),
        over_budget: false,
    };
    search.assign(&choosers, 0);
    if search.over_budget {
        return Ok(Outcome::OverBudget { explored: search.meter.explored() });
    }
    Ok(Outcome::Complete(search.out))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Matching {
    /// Pair rotation positions (0,1),(2,3),…
    Even,
    /// Pair rotation positions (1,2),(3,4),…,(2k−1,0).
    Odd,
}

struct TrailSearch<'a> {
    h: &'a PlaneGraph,
    mode: TrailMode,
    limit: Option<usize>,
    choice: Vec<Matching>,
    out: Vec<ATrail>,
    meter: Meter,
    over_budget: bool,
}

impl TrailSearch<'_> {
    fn assign(&mut self, choosers: &[VertexId], next: usize) -> bool {
        if !self.meter.tick() {
            self.over_budget = true;
            return false;
        }
        if next == choosers.len() {
            self.harvest();
            return match self.limit {
                Some(l) => self.out.len() < l,
                None => true,
            };
        }
        for m in [Matching::Even, Matching::Odd] {
            self.choice[choosers[next].0] = m;
            if self.mode == TrailMode::NonseparatingFirst
                && !self.partial_nonseparating_ok(choosers, next)
            {
                continue;
            }
            if !self.assign(choosers, next + 1) {
                return false;
            }
        }
        true
    }

    /// The partner of a dart at its origin under the chosen matching.
    fn partner(&self, d: DartId) -> DartId {
        let h = self.h;
        let v = h.origin(d);
        let rotation: Vec<DartId> = h.rotation(v).collect();
        let k = rotation.iter().position(|&x| x == d).unwrap();
        let deg = rotation.len();
        let j = match self.choice[v.0] {
            Matching::Even => k ^ 1,
            Matching::Odd => {
                if k % 2 == 0 {
                    (k + deg - 1) % deg
                } else {
                    (k + 1) % deg
                }
            }
        };
        rotation[j]
    }

    fn harvest(&mut self) {
        let h = self.h;
        let m = h.dart_count();
        // succ(d) = partner of twin(d); one closed trail ⇔ exactly 2 cycles.
        let mut seen = vec![false; m];
        let mut cycles = 0;
        for d0 in 0..m {
            if seen[d0] {
                continue;
            }
            cycles += 1;
            if cycles > 2 {
                return;
            }
            let mut d = DartId(d0);
            loop {
                seen[d.0] = true;
                d = self.partner(h.twin(d));
                if d.0 == d0 {
                    break;
                }
            }
        }
        if cycles != 2 {
            return;
        }
        let mut darts = Vec::with_capacity(h.edge_count());
        let mut d = DartId(0);
        loop {
            darts.push(d);
            d = self.partner(h.twin(d));
            if d.0 == 0 {
                break;
            }
        }
        let trail = ATrail { darts };
        debug_assert!(is_a_trail(h, &trail.darts));
        if self.mode == TrailMode::NonseparatingFirst
            && !is_non_separating(h, &trail).expect("host checked as triangulation")
        {
            return;
        }
        self.out.push(trail);
    }

    /// Prunes a transition-system prefix once some triangle can no longer
    /// have two consecutive edges: all three corner vertices are assigned and
    /// none pairs the triangle's corner darts.
    fn partial_nonseparating_ok(&self, choosers: &[VertexId], upto: usize) -> bool {
        let h = self.h;
        let assigned: BTreeSet<VertexId> = choosers[..=upto].iter().copied().collect();
        'faces: for f in h.faces() {
            let mut all_assigned = true;
            for i in 0..3 {
                let leaving = f.boundary[(i + 1) % 3];
                let arriving = h.twin(f.boundary[i]);
                let v = h.origin(leaving);
                if h.degree(v) >= 4 && !assigned.contains(&v) {
                    all_assigned = false;
                    continue;
                }
                if self.partner(arriving) == leaving {
                    continue 'faces; // corner hit: face is fine
                }
            }
            if all_assigned {
                return false;
            }
        }
        true
    }
}

/// Observation-level conversion: an A-trail of an eulerian plane graph with
/// minimum degree 4 defines a quasi spanning tree of faces whose face set is
/// all bounded 2-faces and whose quasi vertices are the V₁ class of the
/// A-partition.
pub fn atrail_to_qstf(
    h: &PlaneGraph,
    trail: &ATrail,
    coloring: &FaceColoring,
) -> Result<FaceTree> {
    if h.min_degree() < 4 {
        return Err(Error::MinDegree { required: 4, found: h.min_degree() });
    }
    assert_eq!(coloring.palette, 2);
    assert_eq!(coloring.color(h.outer_face()), 1, "outer face must be colored 1");
    let partition = a_partition(h, trail, coloring)?;
    let faces: BTreeSet<FaceId> = coloring
        .class(2)
        .into_iter()
        .filter(|&f| f != h.outer_face())
        .collect();
    let proper: BTreeSet<VertexId> = h.vertices().filter(|v| !partition.v1.contains(v)).collect();
    let ft = FaceTree { faces, proper };
    crate::face_trees::is_qstf(h, &ft.proper, &ft.faces).map_err(Error::Qstf)?;
    Ok(ft)
}

/// The unique A-trail of the face-union subgraph `H_T` of a face tree,
/// expressed in the subgraph's own darts.
#[derive(Clone, Debug)]
pub struct SubgraphTrail {
    pub subgraph: crate::plane_graph::EdgeSubgraph,
    pub trail: ATrail,
}

impl SubgraphTrail {
    /// The trail mapped back to host darts.
    pub fn host_darts(&self) -> Vec<DartId> {
        self.trail.darts.iter().map(|&d| self.subgraph.host_dart(d)).collect()
    }
}

/// Builds the unique A-trail of `H_T` (the union of the boundaries of the
/// tree's faces): proper vertices transition between rotationally adjacent
/// tree faces, quasi vertices bounce within each face corner.  Fails when
/// the induced transitions do not close into a single trail, which is
/// exactly when the face tree is invalid.
pub fn qstf_to_atrail(h: &PlaneGraph, ft: &FaceTree) -> Result<SubgraphTrail> {
    crate::face_trees::is_qstf(h, &ft.proper, &ft.faces).map_err(Error::Qstf)?;
    let keep: BTreeSet<crate::plane_graph::EdgeId> = ft
        .faces
        .iter()
        .flat_map(|&f| h.face_edges(f))
        .collect();
    let sub = h.edge_subgraph(&keep)?;
    let s = &sub.graph;

    // The tree face of a subgraph dart: the unique ft-face its edge bounds.
    let tree_face = |d: DartId| -> FaceId {
        let hd = sub.host_dart(d);
        let f = h.face_of(hd);
        if ft.faces.contains(&f) {
            f
        } else {
            h.face_of(h.twin(hd))
        }
    };

    // partner[d] = the dart the trail leaves on after arriving on twin(d).
    // Vertex ids carry over unchanged from the host (edge subgraphs keep
    // every vertex).
    let mut partner = vec![usize::MAX; s.dart_count()];
    for v in s.vertices() {
        let rotation: Vec<DartId> = s.rotation(v).collect();
        let deg = rotation.len();
        let is_proper = ft.proper.contains(&v);
        // Align the matching with the face blocks: darts of one tree face at
        // a vertex are rotation-adjacent in the subgraph.
        for k in 0..deg {
            let (a, b) = (rotation[k], rotation[(k + 1) % deg]);
            let same_face = tree_face(a) == tree_face(b);
            let pair = if deg == 2 {
                // Single passage; only one matching exists.
                k == 0
            } else if is_proper {
                !same_face
            } else {
                same_face
            };
            if pair {
                if partner[a.0] != usize::MAX || partner[b.0] != usize::MAX {
                    return Err(Error::TrailNotConnected(0));
                }
                partner[a.0] = b.0;
                partner[b.0] = a.0;
            }
        }
    }
    if partner.contains(&usize::MAX) {
        return Err(Error::TrailNotConnected(0));
    }

    // Follow succ(d) = partner(twin(d)); demand a single closed trail.
    let mut seen = vec![false; s.dart_count()];
    let mut cycles = 0;
    for d0 in 0..s.dart_count() {
        if seen[d0] {
            continue;
        }
        cycles += 1;
        let mut d = d0;
        loop {
            seen[d] = true;
            d = partner[s.twin(DartId(d)).0];
            if d == d0 {
                break;
            }
        }
    }
    if cycles != 2 {
        return Err(Error::TrailNotConnected(cycles / 2));
    }
    let mut darts = Vec::with_capacity(s.edge_count());
    let mut d = DartId(0);
    loop {
        darts.push(d);
        d = DartId(partner[s.twin(d).0]);
        if d.0 == 0 {
            break;
        }
    }
    let trail = ATrail { darts };
    check_a_trail(s, &trail.darts)?;
    Ok(SubgraphTrail { subgraph: sub, trail })
}
