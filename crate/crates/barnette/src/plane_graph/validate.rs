//! Structural property checks: cubic, bipartite, eulerian, k-connectivity.

use super::{PlaneGraph, VertexId};

/// A checkable structural property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Cubic,
    Bipartite,
    Eulerian,
    KConnected(usize),
}

impl std::fmt::Display for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Property::Cubic => write!(f, "cubic"),
            Property::Bipartite => write!(f, "bipartite"),
            Property::Eulerian => write!(f, "eulerian"),
            Property::KConnected(k) => write!(f, "{k}_connected"),
        }
    }
}

/// Per-property boolean report.
#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub entries: Vec<(Property, bool)>,
}

impl PropertyReport {
    pub fn holds(&self, p: Property) -> Option<bool> {
        self.entries.iter().find(|(q, _)| *q == p).map(|&(_, b)| b)
    }

    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|&(_, b)| b)
    }
}

/// Evaluates the requested properties.  Pure report, never fails.
pub fn validate(g: &PlaneGraph, props: &[Property]) -> PropertyReport {
    let entries = props
        .iter()
        .map(|&p| {
            let holds = match p {
                Property::Cubic => g.is_cubic(),
                Property::Bipartite => g.is_bipartite(),
                Property::Eulerian => g.is_eulerian(),
                Property::KConnected(k) => vertex_connectivity(g) >= k,
            };
            (p, holds)
        })
        .collect();
    PropertyReport { entries }
}

/// Exact vertex connectivity by max-flow over vertex-disjoint paths.
/// Parallel edges are collapsed; for a complete underlying graph the value is
/// `n - 1` by convention.
pub fn vertex_connectivity(g: &PlaneGraph) -> usize {
    let n = g.vertex_count();
    if n <= 1 {
        return 0;
    }
    let mut adj = vec![std::collections::BTreeSet::new(); n];
    for v in g.vertices() {
        for w in g.neighbors(v) {
            adj[v.0].insert(w.0);
        }
    }
    let mut best = usize::MAX;
    let mut complete = true;
    for s in 0..n {
        for t in 0..n {
            if s == t || adj[s].contains(&t) {
                continue;
            }
            complete = false;
            best = best.min(disjoint_paths(&adj, s, t, best));
            if best == 0 {
                return 0;
            }
        }
    }
    if complete {
        n - 1
    } else {
        best
    }
}

/// Max number of internally vertex-disjoint s-t paths (s, t non-adjacent),
/// via unit-capacity node splitting and BFS augmentation.  Stops once the
/// flow reaches `cap`.
fn disjoint_paths(adj: &[std::collections::BTreeSet<usize>], s: usize, t: usize, cap: usize) -> usize {
    let n = adj.len();
    // Node x has x_in = 2x, x_out = 2x + 1.
    let node_count = 2 * n;
    let mut edges: Vec<(usize, usize, i64)> = Vec::new(); // (from, to, cap)
    let mut graph: Vec<Vec<usize>> = vec![Vec::new(); node_count];
    let push = |graph: &mut Vec<Vec<usize>>, edges: &mut Vec<(usize, usize, i64)>, a: usize, b: usize, c: i64| {
        graph[a].push(edges.len());
        edges.push((a, b, c));
        graph[b].push(edges.len());
        edges.push((b, a, 0));
    };
    for x in 0..n {
        let c = if x == s || x == t { i64::MAX / 2 } else { 1 };
        push(&mut graph, &mut edges, 2 * x, 2 * x + 1, c);
    }
    for (x, nbrs) in adj.iter().enumerate() {
        for &y in nbrs {
            push(&mut graph, &mut edges, 2 * x + 1, 2 * y, 1);
        }
    }

    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0usize;
    loop {
        if flow >= cap {
            return flow;
        }
        // BFS for an augmenting path.
        let mut prev_edge = vec![usize::MAX; node_count];
        let mut queue = std::collections::VecDeque::from([source]);
        let mut reached = vec![false; node_count];
        reached[source] = true;
        while let Some(x) = queue.pop_front() {
            for &ei in &graph[x] {
                let (_, to, c) = edges[ei];
                if c > 0 && !reached[to] {
                    reached[to] = true;
                    prev_edge[to] = ei;
                    queue.push_back(to);
                }
            }
        }
        if !reached[sink] {
            return flow;
        }
        let mut x = sink;
        while x != source {
            let ei = prev_edge[x];
            edges[ei].2 -= 1;
            edges[ei ^ 1].2 += 1;
            x = edges[ei].0;
        }
        flow += 1;
    }
}

/// BFS distances from `v` (in edges).
pub fn bfs_distances(g: &PlaneGraph, v: VertexId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[v.0] = 0;
    let mut queue = std::collections::VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x) {
            if dist[y.0] == usize::MAX {
                dist[y.0] = dist[x.0] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;

    #[test]
    fn cube_properties() {
        let g = fixtures::cube();
        let r = validate(
            &g,
            &[
                Property::Cubic,
                Property::Bipartite,
                Property::Eulerian,
                Property::KConnected(3),
            ],
        );
        assert_eq!(r.holds(Property::Cubic), Some(true));
        assert_eq!(r.holds(Property::Bipartite), Some(true));
        assert_eq!(r.holds(Property::Eulerian), Some(false));
        assert_eq!(r.holds(Property::KConnected(3)), Some(true));
        assert_eq!(vertex_connectivity(&g), 3);
    }

    #[test]
    fn octahedron_is_eulerian() {
        let g = crate::plane_graph::dual::dual(&fixtures::cube()).unwrap().graph;
        let r = validate(&g, &[Property::Eulerian]);
        assert!(r.all_hold());
        assert_eq!(vertex_connectivity(&g), 4);
    }

    #[test]
    fn hexagonal_prism_is_barnette() {
        // Disjoint-paths oracle: the prism over C6 is cubic, bipartite and
        // 3-connected.
        let g = fixtures::even_prism(3);
        let r = validate(
            &g,
            &[Property::Cubic, Property::Bipartite, Property::KConnected(3)],
        );
        assert!(r.all_hold());
    }

    #[test]
    fn path_has_connectivity_one() {
        let g = crate::PlaneGraph::from_neighbor_lists(&[vec![1], vec![0, 2], vec![1]], None).unwrap();
        assert_eq!(vertex_connectivity(&g), 1);
    }
}
