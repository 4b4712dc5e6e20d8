//! Decorated 4-valent graphs (o-graphs) and the special polyhedra they encode.
//!
//! Each vertex is drawn as a crossing. Germs 0 and 2 form the over strand,
//! germs 1 and 3 the under strand, and the germs are numbered counterclockwise
//! with 0 pointing to the upper right. Near a vertex the polyhedron is a
//! horizontal plane with a wall rising along the over strand and a wall
//! hanging below the under strand, so its six wings are the four quadrants
//! `{0,1}, {1,2}, {2,3}, {3,0}`, the upper wall `{0,2}` and the lower wall
//! `{1,3}`. An edge color `c ∈ Z₃` rotates the identification of the three
//! sheets along the edge by `c` steps.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SpineError};
use crate::perm::Perm4;
use crate::polyhedron::{Port, SpecialPolyhedron};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Germ {
    pub vertex: usize,
    pub germ: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OEdge {
    pub a: Germ,
    pub b: Germ,
    pub color: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OGraph {
    pub vertex_count: usize,
    pub edges: Vec<OEdge>,
}

/// Reading of the edge colors; see [`OGraphConvention::DEFAULT`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OGraphConvention {
    /// Direction in which a color rotates the cross-section: `+1` or `−1`.
    pub handedness: i8,
    /// Rotation applied to every edge before the color.
    pub shift: u8,
}

impl OGraphConvention {
    /// The reading under which the block family yields two 2-components with
    /// long boundary curves, matching the published description.
    pub const DEFAULT: OGraphConvention = OGraphConvention { handedness: 1, shift: 1 };

    pub fn all() -> impl Iterator<Item = OGraphConvention> {
        [1i8, -1]
            .into_iter()
            .flat_map(|h| (0..3u8).map(move |s| OGraphConvention { handedness: h, shift: s }))
    }
}

impl OGraph {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(SpineError::Parameters(m));
        if self.vertex_count == 0 {
            return bad("o-graph has no vertices".into());
        }
        if self.edges.len() != 2 * self.vertex_count {
            return bad(format!(
                "o-graph with {} vertices needs {} edges, found {}",
                self.vertex_count,
                2 * self.vertex_count,
                self.edges.len()
            ));
        }
        let mut used = vec![[false; 4]; self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            if e.color > 2 {
                return bad(format!("edge {i}: color {} outside Z3", e.color));
            }
            for g in [e.a, e.b] {
                if g.vertex >= self.vertex_count || g.germ > 3 {
                    return bad(format!("edge {i}: germ {}.{} out of range", g.vertex, g.germ));
                }
                if std::mem::replace(&mut used[g.vertex][g.germ as usize], true) {
                    return bad(format!("germ {}.{} used twice", g.vertex, g.germ));
                }
            }
        }
        let mut uf = crate::unionfind::UnionFind::new(self.vertex_count);
        for e in &self.edges {
            uf.union(e.a.vertex, e.b.vertex);
        }
        if uf.count() != 1 {
            return bad("o-graph is disconnected".into());
        }
        Ok(())
    }
}

/// `(left, right, wall)` labels seen when leaving a vertex along `germ`, and
/// whether the wall is above the plane.
fn frame(germ: u8) -> ([u8; 3], bool) {
    match germ {
        0 => ([1, 3, 2], true),
        2 => ([3, 1, 0], true),
        1 => ([2, 0, 3], false),
        _ => ([0, 2, 1], false),
    }
}

/// Sheets around an edge end in counterclockwise order as seen by a traveler
/// moving along the edge; `arriving` flips left and right.
fn ccw_sheets(germ: u8, arriving: bool) -> [u8; 3] {
    let ([l, r, w], up) = frame(germ);
    let (right, left) = if arriving { (l, r) } else { (r, l) };
    if up {
        [right, w, left]
    } else {
        [right, left, w]
    }
}

fn is_over(germ: u8) -> bool {
    germ.is_multiple_of(2)
}

/// Gluing permutation for one o-graph edge, read from `from` to `to`.
fn edge_perm(from: Germ, to: Germ, color: u8, conv: OGraphConvention) -> Perm4 {
    let src = ccw_sheets(from.germ, false);
    let dst = ccw_sheets(to.germ, true);
    let rot = (conv.shift as i32 + conv.handedness as i32 * color as i32).rem_euclid(3) as usize;
    let mut table = [0u8; 4];
    table[from.germ as usize] = to.germ;
    for k in 0..3 {
        table[src[k] as usize] = dst[(k + rot) % 3];
    }
    Perm4::new(table).expect("sheet tables are bijections")
}

pub fn ograph_to_spine(g: &OGraph) -> Result<SpecialPolyhedron> {
    ograph_to_spine_with(g, OGraphConvention::DEFAULT)
}

pub fn ograph_to_spine_with(g: &OGraph, conv: OGraphConvention) -> Result<SpecialPolyhedron> {
    g.validate()?;
    let triples = g.edges.iter().map(|e| {
        // mixed edges are read from the over end; otherwise as listed
        let (from, to) = if !is_over(e.a.germ) && is_over(e.b.germ) { (e.b, e.a) } else { (e.a, e.b) };
        let perm = edge_perm(from, to, e.color, conv);
        (Port::new(from.vertex, from.germ), Port::new(to.vertex, to.germ), perm)
    });
    let p = SpecialPolyhedron::from_perms(g.vertex_count, triples);
    SpecialPolyhedron::new(p.vertex_count(), p.gluings().to_vec())
}

/// Colors `(upper, lower)` of the double edges contributed by each block.
const BLOCK_A: [(u8, u8); 1] = [(0, 1)];
const BLOCK_B: [(u8, u8); 2] = [(1, 1), (0, 1)];
const BLOCK_C: [(u8, u8); 2] = [(1, 1), (0, 0)];
const BLOCK_D: [(u8, u8); 2] = [(0, 1), (1, 0)];
const BLOCK_E: [(u8, u8); 1] = [(0, 1)];
const LOOP_COLOR: u8 = 1;

/// Colors of the double edges of `A·B^s·C·D^s·E`, left to right.
pub fn family_double_edge_colors(s: usize) -> Vec<(u8, u8)> {
    let mut out = BLOCK_A.to_vec();
    for _ in 0..s {
        out.extend(BLOCK_B);
    }
    out.extend(BLOCK_C);
    for _ in 0..s {
        out.extend(BLOCK_D);
    }
    out.extend(BLOCK_E);
    out
}

/// A chain of vertices with a loop at each end and the given double-edge colors.
pub fn chain_ograph(double_edges: &[(u8, u8)], loop_colors: (u8, u8)) -> OGraph {
    let n = double_edges.len() + 1;
    let germ = |vertex, germ| Germ { vertex, germ };
    let mut edges = vec![OEdge { a: germ(0, 2), b: germ(0, 1), color: loop_colors.0 }];
    for (i, &(up, down)) in double_edges.iter().enumerate() {
        edges.push(OEdge { a: germ(i, 0), b: germ(i + 1, 1), color: up });
        edges.push(OEdge { a: germ(i + 1, 2), b: germ(i, 3), color: down });
    }
    edges.push(OEdge { a: germ(n - 1, 0), b: germ(n - 1, 3), color: loop_colors.1 });
    OGraph { vertex_count: n, edges }
}

/// `G_n = A·B^s·C·D^s·E`, `n = 5 + 4s`.
pub fn family_ograph(s: usize) -> OGraph {
    chain_ograph(&family_double_edge_colors(s), (LOOP_COLOR, LOOP_COLOR))
}

pub fn family_spine(s: usize) -> Result<SpecialPolyhedron> {
    Ok(ograph_to_spine(&family_ograph(s))?.with_name(format!("P_{}", 5 + 4 * s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        for s in 0..4 {
            let g = family_ograph(s);
            assert_eq!(g.vertex_count, 5 + 4 * s);
            g.validate().unwrap();
            let loops = g.edges.iter().filter(|e| e.a.vertex == e.b.vertex).count();
            assert_eq!(loops, 2);
        }
    }

    #[test]
    fn g5_colors() {
        assert_eq!(family_double_edge_colors(0), vec![(0, 1), (1, 1), (0, 0), (0, 1)]);
    }

    #[test]
    fn g9_colors() {
        let c = family_double_edge_colors(1);
        assert_eq!(c.len(), 8);
        assert_eq!(&c[1..3], &BLOCK_B);
        assert_eq!(&c[5..7], &BLOCK_D);
    }

    #[test]
    fn every_edge_joins_over_and_under() {
        for e in family_ograph(2).edges {
            assert_ne!(is_over(e.a.germ), is_over(e.b.germ));
        }
    }

    #[test]
    fn frames_are_consistent() {
        for g in 0..4u8 {
            let ([l, r, w], _) = frame(g);
            let mut all = vec![g, l, r, w];
            all.sort();
            assert_eq!(all, vec![0, 1, 2, 3]);
            // the wall through germ g is the wing shared with the opposite germ
            assert_eq!(w, (g + 2) % 4);
        }
    }

    #[test]
    fn rejects_malformed() {
        let mut g = family_ograph(0);
        g.edges[0].color = 3;
        assert!(g.validate().is_err());
        let mut g = family_ograph(0);
        g.edges.pop();
        assert!(g.validate().is_err());
    }
}
