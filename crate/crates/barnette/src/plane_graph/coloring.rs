//! Proper face colorings with 2 or 3 colors.

use std::collections::BTreeSet;

use super::{FaceId, PlaneGraph};
use crate::error::{Error, Result};

/// A proper face coloring; colors are `1..=palette`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceColoring {
    pub palette: u8,
    /// Face id → color.
    pub colors: Vec<u8>,
}

impl FaceColoring {
    pub fn color(&self, f: FaceId) -> u8 {
        self.colors[f.0]
    }

    /// All faces of one color.
    pub fn class(&self, color: u8) -> BTreeSet<FaceId> {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == color)
            .map(|(i, _)| FaceId(i))
            .collect()
    }

    /// Faces sharing an edge get different colors.
    pub fn is_proper(&self, g: &PlaneGraph) -> bool {
        self.colors.len() == g.face_count()
            && self.colors.iter().all(|&c| c >= 1 && c <= self.palette)
            && g.edges().all(|e| {
                let (f1, f2) = g.edge_faces(e);
                self.color(f1) != self.color(f2)
            })
    }

    /// Re-labels colors through `perm`, where `perm[c]` is the new color of
    /// old color `c` (index 0 unused).
    pub fn permuted(&self, perm: &[u8]) -> FaceColoring {
        FaceColoring {
            palette: self.palette,
            colors: self.colors.iter().map(|&c| perm[c as usize]).collect(),
        }
    }

    /// The permutation that sends `face` to `target_color`, swapping with
    /// whatever color currently sits there.
    pub fn swapped_to(&self, face: FaceId, target_color: u8) -> FaceColoring {
        let current = self.color(face);
        let mut perm: Vec<u8> = (0..=self.palette).collect();
        perm[current as usize] = target_color;
        perm[target_color as usize] = current;
        self.permuted(&perm)
    }
}

/// Computes a proper face coloring.
///
/// * `k = 2` requires an eulerian host; the outer face gets color 1.
/// * `k = 3` requires a cubic bipartite host; returns the first coloring in
///   backtracking order (unique up to color permutation when the host is
///   3-connected).
pub fn face_coloring(g: &PlaneGraph, k: u8) -> Result<FaceColoring> {
    match k {
        2 => face_coloring_2(g),
        3 => face_coloring_3(g),
        _ => Err(Error::NoFaceColoring(k)),
    }
}

fn face_coloring_2(g: &PlaneGraph) -> Result<FaceColoring> {
    if let Some(v) = g.vertices().find(|&v| !g.degree(v).is_multiple_of(2)) {
        return Err(Error::NotEulerian { vertex: v, degree: g.degree(v) });
    }
    let mut colors = vec![0u8; g.face_count()];
    colors[g.outer_face().0] = 1;
    let mut queue = std::collections::VecDeque::from([g.outer_face()]);
    while let Some(f) = queue.pop_front() {
        for d in &g.face(f).boundary {
            let other = g.face_of(g.twin(*d));
            if colors[other.0] == 0 {
                colors[other.0] = 3 - colors[f.0];
                queue.push_back(other);
            } else if colors[other.0] == colors[f.0] {
                return Err(Error::NoFaceColoring(2));
            }
        }
    }
    Ok(FaceColoring { palette: 2, colors })
}

fn face_coloring_3(g: &PlaneGraph) -> Result<FaceColoring> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) != 3) {
        return Err(Error::NotCubic { vertex: v, degree: g.degree(v) });
    }
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let nf = g.face_count();
    let mut adjacency = vec![BTreeSet::new(); nf];
    for e in g.edges() {
        let (f1, f2) = g.edge_faces(e);
        adjacency[f1.0].insert(f2.0);
        adjacency[f2.0].insert(f1.0);
    }
    // BFS order keeps every face adjacent to an already-colored one.
    let mut order = Vec::with_capacity(nf);
    let mut seen = vec![false; nf];
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(f) = queue.pop_front() {
        order.push(f);
        for &x in &adjacency[f] {
            if !seen[x] {
                seen[x] = true;
                queue.push_back(x);
            }
        }
    }
    let mut colors = vec![0u8; nf];
    if !assign(&adjacency, &order, 0, &mut colors) {
        return Err(Error::NoFaceColoring(3));
    }
    Ok(FaceColoring { palette: 3, colors })
}

fn assign(adjacency: &[BTreeSet<usize>], order: &[usize], i: usize, colors: &mut Vec<u8>) -> bool {
    if i == order.len() {
        return true;
    }
    let f = order[i];
    'candidate: for c in 1..=3u8 {
        for &x in &adjacency[f] {
            if colors[x] == c {
                continue 'candidate;
            }
        }
        colors[f] = c;
        if assign(adjacency, order, i + 1, colors) {
            return true;
        }
        colors[f] = 0;
    }
    false
}
