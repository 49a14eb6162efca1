//! Crate-wide error type with structured diagnostics.

use thiserror::Error;

use crate::plane_graph::{DartId, FaceId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

/// Which clause of the quasi-spanning-tree-of-faces definition failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QstfClause {
    /// A face listed in `T` is the outer face.
    OuterFaceInT(FaceId),
    /// Two faces of `T` share an edge.
    SharedEdge(FaceId, FaceId),
    /// A vertex lies on no face of `T`.
    UncoveredVertex(VertexId),
    /// A quasi vertex lies on a number of `T`-faces different from deg/2.
    QuasiCount {
        vertex: VertexId,
        on_faces: usize,
        expected: usize,
    },
    /// The restricted radial graph on `U ∪ T` is not a tree.
    RadialNotTree { nodes: usize, edges: usize, components: usize },
}

impl std::fmt::Display for QstfClause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QstfClause::OuterFaceInT(face) => write!(f, "face {face} in T is the outer face"),
            QstfClause::SharedEdge(a, b) => write!(f, "faces {a} and {b} in T share an edge"),
            QstfClause::UncoveredVertex(v) => write!(f, "vertex {v} lies on no face of T"),
            QstfClause::QuasiCount { vertex, on_faces, expected } => write!(
                f,
                "quasi vertex {vertex} lies on {on_faces} faces of T, expected {expected}"
            ),
            QstfClause::RadialNotTree { nodes, edges, components } => write!(
                f,
                "restricted radial graph is not a tree ({nodes} nodes, {edges} edges, {components} components)"
            ),
        }
    }
}

/// Which side constraint of the face-tree/hamiltonian-cycle correspondence failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SideClause {
    /// The outer non-factor face is inside the cycle.
    OuterFaceInside,
    /// A factor face marked proper lies outside the cycle.
    ProperFaceOutside(FaceId),
    /// A factor face marked quasi lies inside the cycle.
    QuasiFaceInside(FaceId),
    /// Two non-factor faces sharing an edge are both inside the cycle.
    AdjacentNonFactorInside(FaceId, FaceId),
}

impl std::fmt::Display for SideClause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SideClause::OuterFaceInside => write!(f, "outer non-factor face lies inside the cycle"),
            SideClause::ProperFaceOutside(face) => {
                write!(f, "factor face {face} of a proper vertex lies outside the cycle")
            }
            SideClause::QuasiFaceInside(face) => {
                write!(f, "factor face {face} of a quasi vertex lies inside the cycle")
            }
            SideClause::AdjacentNonFactorInside(a, b) => {
                write!(f, "non-factor faces {a} and {b} share an edge and are both inside")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // ---- parsing / construction ----
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("twin matching failed between vertices {u} and {v}: {occurrences_u} vs {occurrences_v} occurrences")]
    TwinMatching { u: VertexId, v: VertexId, occurrences_u: usize, occurrences_v: usize },
    #[error("loops are not allowed (vertex {0})")]
    LoopEdge(VertexId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("Euler check failed: V={vertices}, E={edges}, F={faces} (V-E+F must be 2); the rotation system is not a sphere embedding")]
    EulerCheck { vertices: usize, edges: usize, faces: usize },
    #[error("dart structure invalid: {0}")]
    DartStructure(String),
    #[error("no such vertex {0}")]
    NoSuchVertex(VertexId),
    #[error("no such face {0}")]
    NoSuchFace(FaceId),
    #[error("no such dart {0}")]
    NoSuchDart(DartId),
    #[error("no such edge {0}-{1}")]
    NoSuchEdge(VertexId, VertexId),

    // ---- structural preconditions ----
    #[error("graph is not cubic (vertex {vertex} has degree {degree})")]
    NotCubic { vertex: VertexId, degree: usize },
    #[error("graph is not eulerian (vertex {vertex} has odd degree {degree})")]
    NotEulerian { vertex: VertexId, degree: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not {0}-connected")]
    NotKConnected(usize),
    #[error("graph is not a triangulation (face {face} has length {length})")]
    NotTriangulation { face: FaceId, length: usize },
    #[error("minimum degree {found} is below the required {required}")]
    MinDegree { required: usize, found: usize },
    #[error("dual would contain a loop: edge {0} has the same face on both sides")]
    DualLoop(DartId),
    #[error("face coloring with {0} colors does not exist for this graph")]
    NoFaceColoring(u8),

    // ---- facial factors and contraction ----
    #[error("not a facial 2-factor: {0}")]
    NotFacialFactor(String),
    #[error("contracting face {0} would create a loop")]
    ContractionLoop(FaceId),

    // ---- surgeries ----
    #[error("face {0} is not a quadrilateral")]
    NotQuadrilateral(FaceId),
    #[error("face {0} is not a digon")]
    NotDigon(FaceId),
    #[error("quad detachment needs the third neighbours off the quad (vertex {0} fails)")]
    QuadNeighbourOnQuad(VertexId),
    #[error("quad detachment would create a loop ({0} is the shared third neighbour)")]
    QuadDetachLoop(VertexId),
    #[error("terminals {0} and {1} are at odd distance")]
    OddTerminalDistance(VertexId, VertexId),
    #[error("terminal {0} does not lie on the outer face")]
    TerminalNotOnOuterFace(VertexId),
    #[error("expected exactly 3 terminals, got {0}")]
    TerminalCount(usize),
    #[error("substitution degree mismatch: deg({vertex}) = {got}, expected {expected}")]
    SubstitutionDegree { vertex: VertexId, got: usize, expected: usize },
    #[error("result of the surgery is not planar under the given pairing")]
    SurgeryNotPlanar,

    // ---- trails ----
    #[error("dart sequence is not a closed eulerian trail: {0}")]
    NotEulerianTrail(String),
    #[error("trail is not an A-trail: darts {0} and {1} do not share a face corner")]
    NotATrail(DartId, DartId),
    #[error("A-trail is separating: face {0} has no two consecutive edges")]
    SeparatingATrail(FaceId),
    #[error("A-partition is inconsistent: vertex {0} has transitions in faces of both colors")]
    InconsistentAPartition(VertexId),
    #[error("transition system does not induce a single closed trail ({0} trails)")]
    TrailNotConnected(usize),

    // ---- face trees ----
    #[error("not a quasi spanning tree of faces: {0}")]
    Qstf(QstfClause),
    #[error("face-tree/cycle side constraint violated: {0}")]
    Side(SideClause),
    #[error("edge set is not a hamiltonian cycle: {0}")]
    NotHamiltonian(String),
    #[error("the outer face must be a 3-face for this conversion (it has color {0})")]
    OuterFaceNotColor3(u8),
    #[error("coloring does not match the expected shape: {0}")]
    ColoringShape(String),

    // ---- parity ----
    #[error("face {face} in the cover has {sides} sides; only digons and triangles are allowed")]
    CoverFaceTooLarge { face: FaceId, sides: usize },
    #[error("face cover invalid: {0}")]
    BadFaceCover(String),
    #[error("edge set is not a valid parity solution: {0}")]
    BadParitySolution(String),
    #[error("reduced graph has a vertex of degree {degree}; the pipeline needs all degrees in {{4, 6}}")]
    BadReducedDegree { vertex: VertexId, degree: usize },

    // ---- oracle ----
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
