//! Combinatorial machinery for hamiltonicity in plane cubic bipartite graphs.
//!
//! The crate is organised around a dart-based representation of plane
//! multigraphs ([`PlaneGraph`]) and the structures built on top of it:
//!
//! * [`plane_graph`] — embeddings, faces, duals, radial graphs, face colorings;
//! * [`transforms`] — facial-factor contraction, leapfrog extension, vertex
//!   expansion and the other plane-graph surgeries;
//! * [`atrails`] — A-trails in eulerian plane graphs: verification, exhaustive
//!   search over non-crossing transition systems, A-partitions;
//! * [`face_trees`] — (quasi) spanning trees of faces and their two-way
//!   correspondence with constrained hamiltonian cycles;
//! * [`stpp`] — the spanning tree parity problem: instance construction from
//!   digon/triangle face covers, an exact solver, and the degree-4/6 decision
//!   pipeline;
//! * [`reductions`] — executable instance builders for the hardness
//!   constructions, with certificate maps and desk-scale verifiers;
//! * [`oracle`] — independent brute-force searches (hamiltonian cycles and
//!   paths, eulerian trails, face-tree enumeration) and fixture generators
//!   that every other module is tested against.
//!
//! All types are immutable after construction and all operations are pure
//! functions, so values can be shared or sent between threads freely.

pub mod atrails;
pub mod error;
pub mod face_trees;
pub mod oracle;
pub mod plane_graph;
pub mod reductions;
pub mod stpp;
pub mod transforms;

mod book;

pub use error::{Error, Result};
pub use plane_graph::{DartId, Face, FaceColoring, FaceId, PlaneGraph, VertexId};
