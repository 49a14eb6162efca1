//! Exhaustive hamiltonian cycle/path search and spanning-tree enumeration.

use std::collections::BTreeSet;

use super::{Meter, Outcome, SearchBudget};
use crate::plane_graph::{EdgeId, PlaneGraph, VertexId};

/// A hamiltonian cycle in canonical form: the vertex sequence starts at
/// vertex 0 and runs in the direction whose second vertex is smaller than its
/// last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HamCycle {
    pub vertices: Vec<VertexId>,
    pub edges: BTreeSet<EdgeId>,
}

/// Exact backtracking search for hamiltonian cycles through all `forced`
/// edges and avoiding all `forbidden` edges.  `limit` caps the number of
/// cycles returned (`Some(1)` asks for the first); `None` enumerates all.
/// Cycles are produced in deterministic DFS order.
pub fn find_hc(
    g: &PlaneGraph,
    forced: &BTreeSet<EdgeId>,
    forbidden: &BTreeSet<EdgeId>,
    limit: Option<usize>,
    budget: &SearchBudget,
) -> Outcome<Vec<HamCycle>> {
    debug_assert!(forced.is_disjoint(forbidden));
    let n = g.vertex_count();
    let mut meter = Meter::new(budget);
    if n > budget.max_vertices || g.edge_count() > budget.max_edges {
        return Outcome::OverBudget { explored: 0 };
    }
    if n < 2 {
        return Outcome::Complete(Vec::new());
    }

    // Two-vertex multigraphs: a hamiltonian cycle is a pair of distinct
    // parallel edges.
    if n == 2 {
        let mut out = Vec::new();
        let live: Vec<EdgeId> = g.edges().filter(|e| !forbidden.contains(e)).collect();
        for (i, &e1) in live.iter().enumerate() {
            for &e2 in &live[i + 1..] {
                let edges: BTreeSet<EdgeId> = [e1, e2].into();
                if forced.iter().all(|f| edges.contains(f)) {
                    out.push(HamCycle {
                        vertices: vec![VertexId(0), VertexId(1)],
                        edges,
                    });
                    if let Some(l) = limit {
                        if out.len() >= l {
                            return Outcome::Complete(out);
                        }
                    }
                }
            }
        }
        return Outcome::Complete(out);
    }

    // Incidence structure, sorted for determinism.
    let mut incident: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
    for e in g.edges() {
        if forbidden.contains(&e) {
            continue;
        }
        let (u, v) = g.endpoints(e);
        incident[u.0].push((v.0, e));
        incident[v.0].push((u.0, e));
    }
    for list in &mut incident {
        list.sort_unstable_by_key(|&(w, e)| (w, e));
    }
    let mut forced_at: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for &e in forced {
        let (u, v) = g.endpoints(e);
        forced_at[u.0].push(e);
        forced_at[v.0].push(e);
    }
    if forced_at.iter().any(|f| f.len() > 2) {
        return Outcome::Complete(Vec::new());
    }

    let mut state = HcState {
        incident,
        forced_at,
        visited: vec![false; n],
        path: vec![VertexId(0)],
        path_edges: Vec::new(),
        out: Vec::new(),
        limit,
    };
    state.visited[0] = true;
    let done = hc_dfs(&mut state, &mut meter);
    if done == DfsEnd::OverBudget {
        return Outcome::OverBudget { explored: meter.explored() };
    }
    Outcome::Complete(state.out)
}

#[derive(PartialEq)]
enum DfsEnd {
    Exhausted,
    LimitReached,
    OverBudget,
}

struct HcState {
    incident: Vec<Vec<(usize, EdgeId)>>,
    forced_at: Vec<Vec<EdgeId>>,
    visited: Vec<bool>,
    path: Vec<VertexId>,
    path_edges: Vec<EdgeId>,
    out: Vec<HamCycle>,
    limit: Option<usize>,
}

fn hc_dfs(s: &mut HcState, meter: &mut Meter) -> DfsEnd {
    if !meter.tick() {
        return DfsEnd::OverBudget;
    }
    let n = s.visited.len();
    let u = *s.path.last().unwrap();

    if s.path.len() == n {
        // Close the cycle back to vertex 0.
        let closing: Vec<(usize, EdgeId)> = s.incident[u.0]
            .iter()
            .copied()
            .filter(|&(w, e)| w == 0 && !s.path_edges.contains(&e))
            .collect();
        for (_, e) in closing {
            if s.path[1].0 > s.path[n - 1].0 {
                continue; // canonical direction only
            }
            let mut edges: BTreeSet<EdgeId> = s.path_edges.iter().copied().collect();
            edges.insert(e);
            let forced_ok = s.forced_at.iter().flatten().all(|f| edges.contains(f));
            if forced_ok {
                s.out.push(HamCycle { vertices: s.path.clone(), edges });
                if let Some(l) = s.limit {
                    if s.out.len() >= l {
                        return DfsEnd::LimitReached;
                    }
                }
            }
        }
        return DfsEnd::Exhausted;
    }

    // Feasibility pruning: every unvisited vertex needs two live edge slots,
    // and the unvisited region must stay connected to both path ends.
    if !feasible(s) {
        return DfsEnd::Exhausted;
    }

    let candidates: Vec<(usize, EdgeId)> = s.incident[u.0].clone();
    for (w, e) in candidates {
        if s.visited[w] {
            continue;
        }
        // Leaving u fixes its cycle edges; any forced edge at an interior
        // vertex must be one of them.  The start vertex is checked at closing.
        let departs_ok = if s.path.len() == 1 {
            true
        } else {
            let arrival = s.path_edges.last().copied();
            s.forced_at[u.0].iter().all(|&f| Some(f) == arrival || f == e)
        };
        if !departs_ok {
            continue;
        }
        s.visited[w] = true;
        s.path.push(VertexId(w));
        s.path_edges.push(e);
        let end = hc_dfs(s, meter);
        s.path_edges.pop();
        s.path.pop();
        s.visited[w] = false;
        if end != DfsEnd::Exhausted {
            return end;
        }
    }
    DfsEnd::Exhausted
}

/// Degree and connectivity feasibility for the current partial path.
fn feasible(s: &HcState) -> bool {
    let n = s.visited.len();
    let start = 0usize;
    let tail = s.path.last().unwrap().0;
    // Degree availability: edges to unvisited vertices, or to the two open
    // path ends.
    for x in 0..n {
        if s.visited[x] {
            continue;
        }
        let mut live = 0;
        for &(w, _) in &s.incident[x] {
            if !s.visited[w] || w == start || w == tail {
                live += 1;
                if live >= 2 {
                    break;
                }
            }
        }
        if live < 2 {
            return false;
        }
    }
    // Reachability of every unvisited vertex from the path tail through
    // unvisited vertices.
    let mut seen = vec![false; n];
    let mut stack = vec![tail];
    seen[tail] = true;
    while let Some(x) = stack.pop() {
        for &(w, _) in &s.incident[x] {
            if !seen[w] && (!s.visited[w] || w == start) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..n).all(|x| s.visited[x] || seen[x]) && (s.path.len() == n || seen[start])
}

/// A hamiltonian path with its edge set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HamPath {
    pub vertices: Vec<VertexId>,
    pub edges: BTreeSet<EdgeId>,
}

/// All hamiltonian paths from `u` to `v`, in lexicographic vertex order.
pub fn enumerate_ham_paths(
    g: &PlaneGraph,
    u: VertexId,
    v: VertexId,
    budget: &SearchBudget,
) -> Outcome<Vec<HamPath>> {
    assert_ne!(u, v, "path endpoints must differ");
    let n = g.vertex_count();
    let mut meter = Meter::new(budget);
    let mut incident: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
    for e in g.edges() {
        let (a, b) = g.endpoints(e);
        incident[a.0].push((b.0, e));
        incident[b.0].push((a.0, e));
    }
    for list in &mut incident {
        list.sort_unstable_by_key(|&(w, e)| (w, e));
    }
    let mut visited = vec![false; n];
    visited[u.0] = true;
    let mut path = vec![u];
    let mut edges = Vec::new();
    let mut out = Vec::new();
    let ok = path_dfs(
        &incident,
        v,
        &mut visited,
        &mut path,
        &mut edges,
        &mut out,
        &mut meter,
    );
    if ok {
        Outcome::Complete(out)
    } else {
        Outcome::OverBudget { explored: meter.explored() }
    }
}

fn path_dfs(
    incident: &[Vec<(usize, EdgeId)>],
    target: VertexId,
    visited: &mut Vec<bool>,
    path: &mut Vec<VertexId>,
    edges: &mut Vec<EdgeId>,
    out: &mut Vec<HamPath>,
    meter: &mut Meter,
) -> bool {
    if !meter.tick() {
        return false;
    }
    let n = visited.len();
    let u = *path.last().unwrap();
    if path.len() == n {
        if u == target {
            out.push(HamPath {
                vertices: path.clone(),
                edges: edges.iter().copied().collect(),
            });
        }
        return true;
    }
    for &(w, e) in &incident[u.0] {
        if visited[w] || (VertexId(w) == target && path.len() + 1 < n) {
            continue;
        }
        visited[w] = true;
        path.push(VertexId(w));
        edges.push(e);
        let ok = path_dfs(incident, target, visited, path, edges, out, meter);
        edges.pop();
        path.pop();
        visited[w] = false;
        if !ok {
            return false;
        }
    }
    true
}

/// Enumerates the spanning trees of an abstract multigraph as sorted lists of
/// edge indices, in lexicographic order.  This is the independent oracle the
/// parity solver is tested against.
pub fn enumerate_spanning_trees(
    vertex_count: usize,
    edges: &[(usize, usize)],
    budget: &SearchBudget,
) -> Outcome<Vec<Vec<usize>>> {
    let mut meter = Meter::new(budget);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut uf: Vec<usize> = (0..vertex_count).collect();
    let ok = st_dfs(vertex_count, edges, 0, &mut chosen, &mut uf, &mut out, &mut meter);
    if ok {
        Outcome::Complete(out)
    } else {
        Outcome::OverBudget { explored: meter.explored() }
    }
}

fn uf_find(uf: &mut Vec<usize>, x: usize) -> usize {
    if uf[x] != x {
        let r = uf_find(uf, uf[x]);
        uf[x] = r;
    }
    uf[x]
}

fn st_dfs(
    n: usize,
    edges: &[(usize, usize)],
    next: usize,
    chosen: &mut Vec<usize>,
    uf: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    meter: &mut Meter,
) -> bool {
    if !meter.tick() {
        return false;
    }
    if chosen.len() == n - 1 {
        out.push(chosen.clone());
        return true;
    }
    if next >= edges.len() || chosen.len() + (edges.len() - next) < n - 1 {
        return true;
    }
    // Include edge `next` if it joins two components.
    let (u, v) = edges[next];
    let (ru, rv) = (uf_find(uf, u), uf_find(uf, v));
    if ru != rv {
        let saved = uf.clone();
        uf[ru] = rv;
        chosen.push(next);
        if !st_dfs(n, edges, next + 1, chosen, uf, out, meter) {
            return false;
        }
        chosen.pop();
        *uf = saved;
    }
    st_dfs(n, edges, next + 1, chosen, uf, out, meter)
}

/// Number of spanning trees, for quick sanity checks.
pub fn count_spanning_trees(vertex_count: usize, edges: &[(usize, usize)]) -> usize {
    enumerate_spanning_trees(vertex_count, edges, &SearchBudget::default())
        .expect_complete()
        .len()
}
