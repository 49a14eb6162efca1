//! The `.pg` embedded-graph text format.
//!
//! ```text
//! # optional comments
//! n 8
//! outer 0
//! 0: 1 3 4
//! 1: 2 0 5
//! ...
//! ```
//!
//! Each vertex line lists its neighbours in clockwise rotation order.  Darts
//! are numbered in vertex order, position by position.  Parallel edges are
//! twinned by occurrence rank (the i-th occurrence of `u` in `v`'s list pairs
//! with the i-th occurrence of `v` in `u`'s list); the Euler check rejects
//! rank pairings that do not embed in the sphere.  Since rank pairing cannot
//! express three or more pairwise parallel edges, a token may carry an
//! explicit twin reference `u@j`, meaning "twins with the j-th occurrence of
//! this vertex in `u`'s list".  For any vertex pair, either all tokens are
//! plain or all carry `@`.  The writer emits `@` exactly for multiplicity
//! above one, so `parse(write(g)) = g` bit-exactly.

use std::fmt::Write as _;

use super::{PlaneGraph, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Token {
    Plain(usize),
    Explicit(usize, usize),
}

impl Token {
    fn head(self) -> usize {
        match self {
            Token::Plain(u) | Token::Explicit(u, _) => u,
        }
    }
}

/// Parses the `.pg` format into a validated plane graph.
pub fn parse_plane_graph(text: &str) -> Result<PlaneGraph> {
    let mut n: Option<usize> = None;
    let mut outer: Option<usize> = None;
    let mut lines_seen: Vec<(usize, Vec<Token>)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n ") {
            if n.is_some() {
                return Err(Error::parse(line_no, "duplicate 'n' line"));
            }
            n = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| Error::parse(line_no, "invalid vertex count"))?,
            );
            continue;
        }
        if let Some(rest) = line.strip_prefix("outer ") {
            if outer.is_some() {
                return Err(Error::parse(line_no, "duplicate 'outer' line"));
            }
            outer = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| Error::parse(line_no, "invalid outer dart index"))?,
            );
            continue;
        }
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(line_no, "expected 'v: u1 u2 ...'"))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::parse(line_no, "invalid vertex id"))?;
        let mut tokens = Vec::new();
        for word in tail.split_whitespace() {
            let token = match word.split_once('@') {
                None => Token::Plain(
                    word.parse()
                        .map_err(|_| Error::parse(line_no, format!("invalid neighbour '{word}'")))?,
                ),
                Some((u, j)) => Token::Explicit(
                    u.parse()
                        .map_err(|_| Error::parse(line_no, format!("invalid neighbour '{word}'")))?,
                    j.parse()
                        .map_err(|_| Error::parse(line_no, format!("invalid twin rank '{word}'")))?,
                ),
            };
            tokens.push(token);
        }
        lines_seen.push((v, tokens));
    }

    let n = n.ok_or_else(|| Error::parse(0, "missing 'n' line"))?;
    if n == 0 {
        return Err(Error::parse(0, "graph must have at least one vertex"));
    }
    let mut lists: Vec<Option<Vec<Token>>> = vec![None; n];
    for (v, tokens) in lines_seen {
        if v >= n {
            return Err(Error::NoSuchVertex(VertexId(v)));
        }
        if lists[v].is_some() {
            return Err(Error::parse(0, format!("duplicate line for vertex {v}")));
        }
        lists[v] = Some(tokens);
    }
    let lists: Vec<Vec<Token>> = lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| Error::parse(0, format!("missing line for vertex {v}"))))
        .collect::<Result<_>>()?;

    // Dart ids in vertex order, position by position.
    let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut dart_tokens: Vec<Token> = Vec::new();
    for tokens in &lists {
        let mut darts = Vec::with_capacity(tokens.len());
        for &t in tokens {
            if t.head() >= n {
                return Err(Error::NoSuchVertex(VertexId(t.head())));
            }
            darts.push(dart_tokens.len());
            dart_tokens.push(t);
        }
        rotation.push(darts);
    }

    // Group darts by ordered vertex pair.
    let mut sublist: std::collections::HashMap<(usize, usize), Vec<usize>> =
        std::collections::HashMap::new();
    for (v, darts) in rotation.iter().enumerate() {
        for &d in darts {
            sublist.entry((v, dart_tokens[d].head())).or_default().push(d);
        }
    }

    let mut twin = vec![usize::MAX; dart_tokens.len()];
    for (&(v, u), darts) in &sublist {
        if v > u {
            continue;
        }
        if v == u {
            return Err(Error::LoopEdge(VertexId(v)));
        }
        let back = sublist.get(&(u, v)).map(Vec::as_slice).unwrap_or(&[]);
        if back.len() != darts.len() {
            return Err(Error::TwinMatching {
                u: VertexId(v),
                v: VertexId(u),
                occurrences_u: darts.len(),
                occurrences_v: back.len(),
            });
        }
        let explicit = darts.iter().chain(back).any(|&d| matches!(dart_tokens[d], Token::Explicit(..)));
        if explicit {
            if !darts.iter().chain(back).all(|&d| matches!(dart_tokens[d], Token::Explicit(..))) {
                return Err(Error::parse(
                    0,
                    format!("vertex pair {v}-{u} mixes plain and '@' tokens"),
                ));
            }
            for &d in darts {
                let Token::Explicit(_, j) = dart_tokens[d] else { unreachable!() };
                let t = *back
                    .get(j)
                    .ok_or_else(|| Error::parse(0, format!("twin rank {j} out of range for {v}-{u}")))?;
                twin[d] = t;
            }
            for &d in back {
                let Token::Explicit(_, j) = dart_tokens[d] else { unreachable!() };
                let t = *darts
                    .get(j)
                    .ok_or_else(|| Error::parse(0, format!("twin rank {j} out of range for {u}-{v}")))?;
                twin[d] = t;
            }
            // The references must agree in both directions.
            for &d in darts.iter().chain(back) {
                if twin[twin[d]] != d {
                    return Err(Error::parse(
                        0,
                        format!("inconsistent '@' twin references between {v} and {u}"),
                    ));
                }
            }
        } else {
            for (&a, &b) in darts.iter().zip(back.iter()) {
                twin[a] = b;
                twin[b] = a;
            }
        }
    }

    PlaneGraph::from_rotations(rotation, twin, outer)
}

/// Writes the `.pg` format; `parse_plane_graph(write_plane_graph(g)) = g`.
pub fn write_plane_graph(g: &PlaneGraph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.vertex_count()).unwrap();
    let outer_dart = g
        .face(g.outer_face())
        .boundary
        .iter()
        .copied()
        .min()
        .expect("faces are nonempty");
    writeln!(out, "outer {}", outer_dart).unwrap();
    for v in g.vertices() {
        write!(out, "{}:", v).unwrap();
        for d in g.rotation(v) {
            let u = g.head(d);
            let multiplicity = g.rotation(v).filter(|&x| g.head(x) == u).count();
            if multiplicity == 1 {
                write!(out, " {}", u).unwrap();
            } else {
                let t = g.twin(d);
                let rank = g
                    .rotation(u)
                    .filter(|&x| g.head(x) == v)
                    .position(|x| x == t)
                    .expect("twin lives in the reverse sublist");
                write!(out, " {}@{}", u, rank).unwrap();
            }
        }
        writeln!(out).unwrap();
    }
    out
}

impl PlaneGraph {
    /// Parses the `.pg` text format.
    pub fn parse(text: &str) -> Result<Self> {
        parse_plane_graph(text)
    }

    /// Serialises to the `.pg` text format.
    pub fn to_pg_string(&self) -> String {
        write_plane_graph(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures;

    #[test]
    fn parse_cube_fixture() {
        let text = "\
# the 3-cube
n 8
outer 0
0: 1 3 4
1: 2 0 5
2: 3 1 6
3: 0 2 7
4: 0 7 5
5: 1 4 6
6: 2 5 7
7: 3 6 4
";
        let g = parse_plane_graph(text).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.face_count(), 6);
    }

    #[test]
    fn roundtrip_is_identity() {
        for g in [
            fixtures::cube(),
            fixtures::k4(),
            fixtures::even_prism(4),
            fixtures::two_vertex_bundle(4),
        ] {
            let text = write_plane_graph(&g);
            let back = parse_plane_graph(&text).unwrap();
            assert_eq!(back, g, "roundtrip failed for {text}");
            assert_eq!(write_plane_graph(&back), text);
        }
    }

    #[test]
    fn malformed_inputs_error() {
        assert!(parse_plane_graph("").is_err());
        assert!(parse_plane_graph("n 2\n0: 1\n").is_err());
        assert!(parse_plane_graph("n 2\n0: 1 1\n1: 0\n").is_err());
        assert!(parse_plane_graph("n 1\n0: 0\n").is_err());
    }
}
