//! Stratification of a special polyhedron: 2-components, their boundary
//! curves, short-curve and normal-bundle classification, Euler characteristic.
//!
//! Boundary curves are traced with a state machine on directed branch states
//! `(vertex, port, slot)`: arriving at `vertex` through `port` on slot `q`, the
//! curve crosses the wing `{port, q}` and leaves through port `q` on slot
//! `port`; it then follows the edge at that port to the partner vertex, where
//! the slot is relabeled by the edge's slot map.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::perm::{complement_pair, other_labels, wing_index, WING_PAIRS};
use crate::polyhedron::{Port, SpecialPolyhedron};
use crate::unionfind::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NormalBundle {
    Trivial,
    NonTrivial,
}

/// A corner cell `{p, q}` at a true vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Wing {
    pub vertex: usize,
    pub ports: (u8, u8),
}

/// A sheet of an edge, identified by its slot label at the edge's `end_a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Branch {
    pub edge: usize,
    pub slot: u8,
}

/// One vertex passage followed by one edge traversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveStep {
    pub vertex: usize,
    pub from_port: u8,
    pub to_port: u8,
    pub edge: usize,
    /// Slot of the traversed branch, labeled at the edge's `end_a`.
    pub slot: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryCurve {
    pub steps: Vec<CurveStep>,
    pub vertex_multiplicity: BTreeMap<usize, usize>,
    pub edge_multiplicity: BTreeMap<usize, usize>,
    pub is_short: bool,
    pub normal_bundle: NormalBundle,
}

impl BoundaryCurve {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of vertices the curve passes exactly twice.
    pub fn doubly_visited(&self) -> usize {
        self.vertex_multiplicity.values().filter(|&&m| m == 2).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoComponent {
    pub id: usize,
    pub wings: Vec<Wing>,
    pub branch_traversals: Vec<Branch>,
    pub curve: BoundaryCurve,
}

/// All strata of a polyhedron, with ownership tables for wings and branches.
#[derive(Clone, Debug)]
pub struct Stratification {
    pub components: Vec<TwoComponent>,
    wing_owner: Vec<[usize; 6]>,
    branch_owner: Vec<[usize; 3]>,
}

impl Stratification {
    pub fn new(p: &SpecialPolyhedron) -> Self {
        let orbits = canonical_orbits(p);
        let mut wing_owner = vec![[usize::MAX; 6]; p.vertex_count()];
        let mut branch_owner = vec![[usize::MAX; 3]; p.edge_count()];
        let mut components = Vec::with_capacity(orbits.len());
        for (id, states) in orbits.into_iter().enumerate() {
            let curve = build_curve(p, &states);
            let mut wings = Vec::new();
            let mut branches = Vec::new();
            for s in &curve.steps {
                let (a, b) = if s.from_port < s.to_port {
                    (s.from_port, s.to_port)
                } else {
                    (s.to_port, s.from_port)
                };
                wings.push(Wing { vertex: s.vertex, ports: (a, b) });
                wing_owner[s.vertex][wing_index(a, b)] = id;
                branches.push(Branch { edge: s.edge, slot: s.slot });
                let a_port = p.gluings()[s.edge].end_a.port;
                let idx = other_labels(a_port).iter().position(|&x| x == s.slot).unwrap();
                branch_owner[s.edge][idx] = id;
            }
            wings.sort();
            branches.sort();
            components.push(TwoComponent { id, wings, branch_traversals: branches, curve });
        }
        Stratification { components, wing_owner, branch_owner }
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn wing_owner(&self, vertex: usize, p: u8, q: u8) -> usize {
        self.wing_owner[vertex][wing_index(p, q)]
    }

    /// Owners of the six wings at `vertex`, indexed as in [`WING_PAIRS`].
    pub fn vertex_wings(&self, vertex: usize) -> [usize; 6] {
        self.wing_owner[vertex]
    }

    /// Owners of the three branches of `edge`, in ascending slot order at `end_a`.
    pub fn edge_branches(&self, edge: usize) -> [usize; 3] {
        self.branch_owner[edge]
    }

    pub fn curves(&self) -> impl Iterator<Item = &BoundaryCurve> {
        self.components.iter().map(|c| &c.curve)
    }

    pub fn nontrivial_count(&self) -> usize {
        self.curves().filter(|c| c.normal_bundle == NormalBundle::NonTrivial).count()
    }

    pub fn has_short_curve(&self) -> bool {
        self.curves().any(|c| c.is_short)
    }

    /// Components, curves and summary flags; component ids are the orbit order.
    pub fn to_json(&self, p: &SpecialPolyhedron) -> serde_json::Value {
        serde_json::json!({
            "vertices": p.vertex_count(),
            "edges": p.edge_count(),
            "components": self.component_count(),
            "euler_characteristic": self.component_count() as i64 - p.vertex_count() as i64,
            "orientable": p.is_orientable(),
            "has_short_curve": self.has_short_curve(),
            "nontrivial_bundles": self.nontrivial_count(),
            "strata": self.components,
        })
    }
}

#[inline]
fn state_index(v: usize, p: u8, q: u8) -> usize {
    let idx = other_labels(p).iter().position(|&x| x == q).unwrap();
    v * 12 + p as usize * 3 + idx
}

#[inline]
fn next_state(p: &SpecialPolyhedron, (v, from, to): (usize, u8, u8)) -> (usize, u8, u8) {
    let l = p.link(v, to);
    (l.to.vertex, l.to.port, l.perm.apply(from))
}

/// Curve orbits, each in canonical direction and rotation, sorted.
fn canonical_orbits(p: &SpecialPolyhedron) -> Vec<Vec<(usize, u8, u8)>> {
    let n = p.vertex_count();
    let mut seen = vec![false; 12 * n];
    let mut orbits = Vec::new();
    for v in 0..n {
        for port in 0..4u8 {
            for q in other_labels(port) {
                if seen[state_index(v, port, q)] {
                    continue;
                }
                let start = (v, port, q);
                let mut orbit = vec![start];
                let mut s = next_state(p, start);
                while s != start {
                    orbit.push(s);
                    s = next_state(p, s);
                }
                for &(w, a, b) in &orbit {
                    seen[state_index(w, a, b)] = true;
                    seen[state_index(w, b, a)] = true;
                }
                orbits.push(canonicalize(&orbit));
            }
        }
    }
    orbits.sort();
    orbits
}

/// Lexicographically smallest rotation over both traversal directions.
fn canonicalize(orbit: &[(usize, u8, u8)]) -> Vec<(usize, u8, u8)> {
    let reversed: Vec<_> = orbit.iter().rev().map(|&(v, a, b)| (v, b, a)).collect();
    let mut best: Option<Vec<(usize, u8, u8)>> = None;
    for seq in [orbit, &reversed[..]] {
        for r in 0..seq.len() {
            let cand: Vec<_> = seq[r..].iter().chain(&seq[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

fn build_curve(p: &SpecialPolyhedron, states: &[(usize, u8, u8)]) -> BoundaryCurve {
    let mut steps = Vec::with_capacity(states.len());
    let mut vertex_multiplicity = BTreeMap::new();
    let mut edge_multiplicity = BTreeMap::new();
    for &(v, from, to) in states {
        let (edge, idx) = p.branch_index(Port::new(v, to), from);
        let slot = other_labels(p.gluings()[edge].end_a.port)[idx];
        steps.push(CurveStep { vertex: v, from_port: from, to_port: to, edge, slot });
        *vertex_multiplicity.entry(v).or_insert(0) += 1;
        *edge_multiplicity.entry(edge).or_insert(0) += 1;
    }
    let is_short = steps.len() == 3 && vertex_multiplicity.len() == 3;
    let normal_bundle = monodromy(p, &steps);
    BoundaryCurve { steps, vertex_multiplicity, edge_multiplicity, is_short, normal_bundle }
}

/// Parity of the transversal-germ monodromy along a traced curve.
///
/// The two sheets transverse to the curve are tracked by their slot labels.
/// Inside a vertex the germ in wing `{p, z}` continues into wing `{q, z}`, so
/// labels are unchanged; along an edge they are carried by the slot map.
fn monodromy(p: &SpecialPolyhedron, steps: &[CurveStep]) -> NormalBundle {
    let Some(first) = steps.first() else {
        return NormalBundle::Trivial;
    };
    let start = complement_pair(first.from_port, first.to_port);
    let mut t = start;
    for s in steps {
        let perm = p.link(s.vertex, s.to_port).perm;
        t = [perm.apply(t[0]), perm.apply(t[1])];
    }
    if t == start {
        NormalBundle::Trivial
    } else {
        NormalBundle::NonTrivial
    }
}

/// Union-find partition of wings and branches; returns the component label of
/// every wing and the number of classes. Independent of curve tracing.
pub fn component_partition(p: &SpecialPolyhedron) -> (Vec<[usize; 6]>, usize) {
    let n = p.vertex_count();
    let wing_node = |v: usize, k: usize| v * 6 + k;
    let branch_node = |e: usize, i: usize| 6 * n + 3 * e + i;
    let mut uf = UnionFind::new(6 * n + 3 * p.edge_count());
    for v in 0..n {
        for (k, &(a, b)) in WING_PAIRS.iter().enumerate() {
            let (e1, i1) = p.branch_index(Port::new(v, a), b);
            let (e2, i2) = p.branch_index(Port::new(v, b), a);
            uf.union(wing_node(v, k), branch_node(e1, i1));
            uf.union(wing_node(v, k), branch_node(e2, i2));
        }
    }
    let count = uf.count();
    let labels = (0..n)
        .map(|v| {
            let mut row = [0usize; 6];
            for (k, slot) in row.iter_mut().enumerate() {
                *slot = uf.find(wing_node(v, k));
            }
            row
        })
        .collect();
    (labels, count)
}

pub fn two_components(p: &SpecialPolyhedron) -> Vec<TwoComponent> {
    Stratification::new(p).components
}

pub fn boundary_curve(component: &TwoComponent) -> &BoundaryCurve {
    &component.curve
}

pub fn is_short(c: &BoundaryCurve) -> bool {
    c.steps.len() == 3
        && c.vertex_multiplicity.len() == 3
        && c.vertex_multiplicity.values().all(|&m| m == 1)
}

/// Recomputes the normal bundle class of a curve traced from `p`.
pub fn normal_bundle(p: &SpecialPolyhedron, c: &BoundaryCurve) -> NormalBundle {
    monodromy(p, &c.steps)
}

/// `χ(P) = d − n`, with `d` from the union-find partition.
pub fn euler_characteristic(p: &SpecialPolyhedron) -> i64 {
    let (_, d) = component_partition(p);
    d as i64 - p.vertex_count() as i64
}

/// Cell count `#0-cells − #1-cells + #2-cells`, with 2-cells counted as curve orbits.
pub fn euler_characteristic_by_cells(p: &SpecialPolyhedron) -> i64 {
    let d = canonical_orbits(p).len();
    p.vertex_count() as i64 - p.edge_count() as i64 + d as i64
}

pub fn nontrivial_bundle_count(p: &SpecialPolyhedron) -> usize {
    Stratification::new(p).nontrivial_count()
}
