//! Hand-embedded fixture graphs used across the test suites.

use crate::plane_graph::{PlaneGraph, VertexId};

/// Prism over the cycle C_l (l ≥ 3): outer cycle `0..l` clockwise, inner
/// cycle `l..2l`, spokes `i — i+l`.
pub fn prism(l: usize) -> PlaneGraph {
    assert!(l >= 3, "prism needs a cycle of length at least 3");
    let mut lists = Vec::with_capacity(2 * l);
    for i in 0..l {
        lists.push(vec![(i + 1) % l, i + l, (i + l - 1) % l]);
    }
    for i in 0..l {
        lists.push(vec![l + (i + 1) % l, l + (i + l - 1) % l, i]);
    }
    PlaneGraph::from_neighbor_lists(&lists, None).expect("prism embedding is valid")
}

/// Prism over C_{2k}; a Barnette graph for every k ≥ 2, in the
/// quadrilateral/hexagon class for k ∈ {2, 3}.
pub fn even_prism(k: usize) -> PlaneGraph {
    prism(2 * k)
}

/// The 3-cube (prism over C4).
pub fn cube() -> PlaneGraph {
    prism(4)
}

/// The triangular prism.
pub fn triangular_prism() -> PlaneGraph {
    prism(3)
}

/// K4 embedded with vertex 3 in the centre.
pub fn k4() -> PlaneGraph {
    PlaneGraph::from_neighbor_lists(
        &[vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        None,
    )
    .expect("K4 embedding is valid")
}

/// K4 minus the edge 0–1 (so 0 and 1 have degree 2).
pub fn k4_minus_edge() -> PlaneGraph {
    let g = k4();
    let drop = g.edge_of(g.dart_between(VertexId(0), VertexId(1)).unwrap());
    let keep = g.edges().filter(|&e| e != drop).collect();
    g.edge_subgraph(&keep).expect("K4 minus an edge stays connected").graph
}

/// Two vertices joined by `k` parallel edges (the shape of contracted facial
/// factors), with the sphere twin pairing.
pub fn two_vertex_bundle(k: usize) -> PlaneGraph {
    assert!(k >= 2);
    let rotation = vec![(0..k).collect::<Vec<_>>(), (k..2 * k).collect()];
    let mut twin = vec![0usize; 2 * k];
    twin[0] = k;
    twin[k] = 0;
    for i in 1..k {
        twin[i] = 2 * k - i;
        twin[2 * k - i] = i;
    }
    PlaneGraph::from_rotations(rotation, twin, None).expect("bundle embedding is valid")
}

/// A single cycle of length l.
pub fn cycle(l: usize) -> PlaneGraph {
    assert!(l >= 3);
    let lists: Vec<Vec<usize>> = (0..l).map(|i| vec![(i + 1) % l, (i + l - 1) % l]).collect();
    PlaneGraph::from_neighbor_lists(&lists, None).expect("cycle embedding is valid")
}

/// A chain of `k` cubes: consecutive copies lose one square edge each and
/// are cross-joined, so every junction is a 2-edge-cut.
pub fn chain_of_cubes(k: usize) -> PlaneGraph {
    assert!(k >= 2);
    let cube = cube();
    let n = cube.vertex_count();
    // Copy i loses edge {1,2} on the right (for i < k-1) and edge {0,3} on
    // the left (for i > 0); junctions wire 1→0 and 2→3 of the next copy.
    let mut lists: Vec<Vec<usize>> = Vec::with_capacity(k * n);
    for copy in 0..k {
        let base = copy * n;
        for v in cube.vertices() {
            let mut list: Vec<usize> = cube.neighbors(v).map(|w| base + w.0).collect();
            let replace = |list: &mut Vec<usize>, old: usize, new: usize| {
                let slot = list.iter().position(|&x| x == old).unwrap();
                list[slot] = new;
            };
            if copy + 1 < k {
                if v.0 == 1 {
                    replace(&mut list, base + 2, (copy + 1) * n);
                }
                if v.0 == 2 {
                    replace(&mut list, base + 1, (copy + 1) * n + 3);
                }
            }
            if copy > 0 {
                if v.0 == 0 {
                    replace(&mut list, base + 3, (copy - 1) * n + 1);
                }
                if v.0 == 3 {
                    replace(&mut list, base, (copy - 1) * n + 2);
                }
            }
            lists.push(list);
        }
    }
    PlaneGraph::from_neighbor_lists(&lists, None).expect("cube chain embeds")
}
