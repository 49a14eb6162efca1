//! Independent brute-force searches and fixture generators.
//!
//! Everything here is an *oracle*: exhaustive, budgeted, and deliberately
//! independent of the module it certifies.  Searches never silently give up —
//! exceeding a budget yields an explicit [`Outcome::OverBudget`], because
//! "none found within budget" is not "none exists".

pub mod fixtures;
mod facetrees;
mod search;
mod trails;

pub use facetrees::enumerate_face_trees_bruteforce;
pub use search::{
    count_spanning_trees, enumerate_ham_paths, enumerate_spanning_trees, find_hc, HamCycle, HamPath,
};
pub use trails::enumerate_closed_eulerian_trails;

use std::time::{Duration, Instant};

use crate::error::Result;
use crate::plane_graph::{validate, PlaneGraph, Property, PropertyReport};
use crate::transforms;

/// Explicit caps for exhaustive searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub node_cap: u64,
    pub time_cap: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 96,
            max_edges: 160,
            node_cap: 200_000_000,
            time_cap: Duration::from_secs(300),
        }
    }
}

impl SearchBudget {
    pub fn with_node_cap(node_cap: u64) -> Self {
        SearchBudget { node_cap, ..Default::default() }
    }
}

/// Result of a budgeted search: either the complete answer or an explicit
/// over-budget report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Complete(T),
    OverBudget { explored: u64 },
}

impl<T> Outcome<T> {
    /// Unwraps the complete answer; panics on an over-budget outcome.
    pub fn expect_complete(self) -> T {
        match self {
            Outcome::Complete(t) => t,
            Outcome::OverBudget { explored } => {
                panic!("search exceeded its budget after {explored} nodes")
            }
        }
    }

    pub fn complete(self) -> Option<T> {
        match self {
            Outcome::Complete(t) => Some(t),
            Outcome::OverBudget { .. } => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Complete(t) => Outcome::Complete(f(t)),
            Outcome::OverBudget { explored } => Outcome::OverBudget { explored },
        }
    }
}

/// Internal node/time meter shared by the searches.
pub(crate) struct Meter {
    nodes: u64,
    node_cap: u64,
    deadline: Instant,
    check_mask: u64,
}

impl Meter {
    pub(crate) fn new(budget: &SearchBudget) -> Self {
        Meter {
            nodes: 0,
            node_cap: budget.node_cap,
            deadline: Instant::now() + budget.time_cap,
            check_mask: 0x3ff,
        }
    }

    /// Counts one node; `false` means the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return false;
        }
        if self.nodes & self.check_mask == 0 && Instant::now() > self.deadline {
            return false;
        }
        true
    }

    pub(crate) fn explored(&self) -> u64 {
        self.nodes
    }
}

/// Fixture families the generator can produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cube,
    /// Prism over the even cycle C_{2k}.
    EvenPrism(usize),
    /// Iterated leapfrog extension of the cube; depth 1 has 24 vertices.
    LeapfrogTower { depth: usize },
}

/// Generates the requested fixture family.  Every graph produced here is a
/// Barnette graph (cubic, bipartite, 3-connected, plane).
pub fn generate(family: &Family) -> Result<Vec<PlaneGraph>> {
    match family {
        Family::Cube => Ok(vec![fixtures::cube()]),
        Family::EvenPrism(k) => Ok(vec![fixtures::even_prism(*k)]),
        Family::LeapfrogTower { depth } => {
            let mut g = fixtures::cube();
            for _ in 0..*depth {
                g = transforms::leapfrog(&g)?.graph;
            }
            Ok(vec![g])
        }
    }
}

/// The Barnette-graph check used when ingesting catalogs: cubic, bipartite,
/// 3-connected.
pub fn check_barnette(g: &PlaneGraph) -> PropertyReport {
    validate(
        g,
        &[Property::Cubic, Property::Bipartite, Property::KConnected(3)],
    )
}
