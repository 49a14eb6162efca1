//! Exhaustive enumeration of closed eulerian trails.
//!
//! Trails are closed dart sequences; rotation and reversal are factored out
//! by anchoring every representative at the smaller dart of edge 0.  The
//! A-trail search is tested against this enumeration filtered through the
//! A-trail checker, so this code must not share its transition-system logic.

use super::{Meter, Outcome, SearchBudget};
use crate::plane_graph::{DartId, PlaneGraph};

/// All closed eulerian trails of `g`, one canonical representative per
/// rotation/reversal class, in DFS order.
pub fn enumerate_closed_eulerian_trails(
    g: &PlaneGraph,
    budget: &SearchBudget,
) -> Outcome<Vec<Vec<DartId>>> {
    if !g.is_eulerian() {
        return Outcome::Complete(Vec::new());
    }
    let mut meter = Meter::new(budget);
    if g.edge_count() > budget.max_edges {
        return Outcome::OverBudget { explored: 0 };
    }
    let mut used = vec![false; g.edge_count()];
    let edge_index: Vec<usize> = g.darts().map(|d| edge_slot(g, d)).collect();
    // Every closed eulerian trail uses edge 0 exactly once; starting with its
    // smaller dart fixes rotation and direction.
    let start = DartId(0);
    let mut trail = vec![start];
    used[edge_index[0]] = true;
    let mut out = Vec::new();
    let ok = dfs(g, &edge_index, &mut used, &mut trail, &mut out, &mut meter);
    used[edge_index[0]] = false;
    if ok {
        Outcome::Complete(out)
    } else {
        Outcome::OverBudget { explored: meter.explored() }
    }
}

fn edge_slot(g: &PlaneGraph, d: DartId) -> usize {
    // Edge representatives are the smaller darts; rank them.
    let e = g.edge_of(d);
    g.edges().position(|x| x == e).unwrap()
}

fn dfs(
    g: &PlaneGraph,
    edge_index: &[usize],
    used: &mut Vec<bool>,
    trail: &mut Vec<DartId>,
    out: &mut Vec<Vec<DartId>>,
    meter: &mut Meter,
) -> bool {
    if !meter.tick() {
        return false;
    }
    if trail.len() == g.edge_count() {
        if g.head(*trail.last().unwrap()) == g.origin(trail[0]) {
            out.push(trail.clone());
        }
        return true;
    }
    let at = g.head(*trail.last().unwrap());
    for d in g.rotation(at) {
        let slot = edge_index[d.0];
        if used[slot] {
            continue;
        }
        used[slot] = true;
        trail.push(d);
        if !dfs(g, edge_index, used, trail, out, meter) {
            return false;
        }
        trail.pop();
        used[slot] = false;
    }
    true
}
