//! Combinatorial encoding of special polyhedra.
//!
//! A special polyhedron with `n` true vertices is stored as a perfect matching
//! on its `4n` ports (a port is a pair `(vertex, 0..4)`), where each matched
//! pair is an edge of the singular graph together with a bijection between the
//! three slots of its two ends. At port `p` the slots are labeled by the other
//! three port indices; slot `q` at port `p` is the branch adjacent to the wing
//! `{p, q}`. Everything else (2-components, boundary curves, ...) is derived.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::SpineError;
use crate::perm::{other_labels, Perm4};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Port {
    pub vertex: usize,
    pub port: u8,
}

impl Port {
    pub fn new(vertex: usize, port: u8) -> Self {
        Port { vertex, port }
    }
}

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.vertex, self.port)
    }
}

/// One edge (triple line) of the singular graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeGluing {
    pub end_a: Port,
    pub end_b: Port,
    /// Images, as port labels at `end_b`, of the slots of `end_a` in ascending label order.
    pub slot_map: [u8; 3],
    /// Optional thickening hint: whether the cross-section circle map reverses cyclic order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<bool>,
}

impl EdgeGluing {
    pub fn new(end_a: Port, end_b: Port, slot_map: [u8; 3]) -> Self {
        EdgeGluing { end_a, end_b, slot_map, twist: None }
    }

    pub fn from_perm(end_a: Port, end_b: Port, perm: Perm4) -> Self {
        debug_assert_eq!(perm.apply(end_a.port), end_b.port);
        EdgeGluing::new(end_a, end_b, perm.slot_images(end_a.port))
    }

    /// The gluing as a permutation of `0..4` sending `end_a.port` to `end_b.port`.
    pub fn perm(&self) -> Option<Perm4> {
        if self.end_a.port > 3 || self.end_b.port > 3 {
            return None;
        }
        Perm4::from_slot_map(self.end_a.port, self.end_b.port, self.slot_map)
    }
}

/// Whether a gluing reverses the cyclic order of the cross-section under the
/// standard embedding of every vertex neighborhood. With all vertices carrying
/// the orientation induced by their port labels, a gluing is orientation
/// consistent exactly when its permutation is odd.
pub fn derived_twist(perm: Perm4) -> bool {
    perm.sign() == 1
}

/// Adjacency record for one port.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Link {
    pub edge: usize,
    pub to: Port,
    /// Maps labels at this vertex to labels at `to.vertex`; sends this port to `to.port`.
    pub perm: Perm4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Issue {
    NoVertices,
    PortOutOfRange { edge: usize, port: Port },
    SelfGluedPort { edge: usize, port: Port },
    DuplicatePort { port: Port, first_edge: usize, second_edge: usize },
    UnmatchedPort { port: Port },
    BadSlotMap { edge: usize, end_a: Port, end_b: Port, slot_map: [u8; 3] },
    Disconnected { pieces: usize },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::NoVertices => write!(f, "polyhedron has no true vertices"),
            Issue::PortOutOfRange { edge, port } => {
                write!(f, "edge {edge}: port {port} out of range")
            }
            Issue::SelfGluedPort { edge, port } => {
                write!(f, "edge {edge}: port {port} glued to itself")
            }
            Issue::DuplicatePort { port, first_edge, second_edge } => {
                write!(f, "duplicate port {port} (edges {first_edge} and {second_edge})")
            }
            Issue::UnmatchedPort { port } => write!(f, "unmatched port {port}"),
            Issue::BadSlotMap { edge, end_a, end_b, slot_map } => write!(
                f,
                "edge {edge}: map {}{}{} is not a bijection from slots of {end_a} to slots of {end_b}",
                slot_map[0], slot_map[1], slot_map[2]
            ),
            Issue::Disconnected { pieces } => {
                write!(f, "singular graph is disconnected ({pieces} pieces)")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Number of 2-components, when the input is valid.
    pub component_count: Option<usize>,
    pub issues: Vec<Issue>,
    /// Non-fatal observations (e.g. supplied twist bits that disagree with the slot maps).
    pub warnings: Vec<String>,
}

/// Checks raw gluing data without assuming anything about it.
pub fn validate_parts(vertex_count: usize, gluings: &[EdgeGluing]) -> ValidationReport {
    let mut issues = Vec::new();
    let mut warnings = Vec::new();
    if vertex_count == 0 {
        issues.push(Issue::NoVertices);
    }
    let mut owner: Vec<[Option<usize>; 4]> = vec![[None; 4]; vertex_count];
    for (i, g) in gluings.iter().enumerate() {
        let mut in_range = true;
        for end in [g.end_a, g.end_b] {
            if end.vertex >= vertex_count || end.port > 3 {
                issues.push(Issue::PortOutOfRange { edge: i, port: end });
                in_range = false;
            }
        }
        if !in_range {
            continue;
        }
        if g.end_a == g.end_b {
            issues.push(Issue::SelfGluedPort { edge: i, port: g.end_a });
        }
        for end in [g.end_a, g.end_b] {
            let slot = &mut owner[end.vertex][end.port as usize];
            match *slot {
                Some(first) if first != i => issues.push(Issue::DuplicatePort {
                    port: end,
                    first_edge: first,
                    second_edge: i,
                }),
                Some(_) => {}
                None => *slot = Some(i),
            }
        }
        match g.perm() {
            None => issues.push(Issue::BadSlotMap {
                edge: i,
                end_a: g.end_a,
                end_b: g.end_b,
                slot_map: g.slot_map,
            }),
            Some(perm) => {
                if let Some(t) = g.twist {
                    if t != derived_twist(perm) {
                        warnings.push(format!(
                            "edge {i}: twist bit {} disagrees with the slot map orientation",
                            t as u8
                        ));
                    }
                }
            }
        }
    }
    for (v, ports) in owner.iter().enumerate() {
        for (p, o) in ports.iter().enumerate() {
            if o.is_none() {
                issues.push(Issue::UnmatchedPort { port: Port::new(v, p as u8) });
            }
        }
    }
    if issues.is_empty() {
        let pieces = count_pieces(vertex_count, gluings);
        if pieces != 1 {
            issues.push(Issue::Disconnected { pieces });
        }
    }
    let valid = issues.is_empty();
    let component_count = if valid {
        let p = SpecialPolyhedron::assemble(vertex_count, gluings.to_vec(), None);
        Some(crate::strata::component_partition(&p).1)
    } else {
        None
    };
    ValidationReport {
        valid,
        vertex_count,
        edge_count: gluings.len(),
        component_count,
        issues,
        warnings,
    }
}

fn count_pieces(vertex_count: usize, gluings: &[EdgeGluing]) -> usize {
    let mut uf = crate::unionfind::UnionFind::new(vertex_count);
    for g in gluings {
        uf.union(g.end_a.vertex, g.end_b.vertex);
    }
    uf.count()
}

/// A validated special polyhedron. Immutable; every constructor checks the
/// structural invariants, so all derived operations may assume them.
#[derive(Clone, Debug)]
pub struct SpecialPolyhedron {
    vertex_count: usize,
    gluings: Vec<EdgeGluing>,
    name: Option<String>,
    links: Vec<[Link; 4]>,
}

impl PartialEq for SpecialPolyhedron {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.gluings == other.gluings
    }
}

impl Eq for SpecialPolyhedron {}

impl SpecialPolyhedron {
    pub fn new(vertex_count: usize, gluings: Vec<EdgeGluing>) -> Result<Self, SpineError> {
        let report = validate_parts(vertex_count, &gluings);
        if !report.valid {
            return Err(SpineError::Invalid(report.issues));
        }
        Ok(Self::assemble(vertex_count, gluings, None))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Builds from gluings already known to be structurally valid.
    pub(crate) fn assemble(
        vertex_count: usize,
        gluings: Vec<EdgeGluing>,
        name: Option<String>,
    ) -> Self {
        let dummy = Link { edge: usize::MAX, to: Port::new(0, 0), perm: Perm4::IDENTITY };
        let mut links = vec![[dummy; 4]; vertex_count];
        for (i, g) in gluings.iter().enumerate() {
            let perm = g.perm().expect("assemble: slot map must be a bijection");
            links[g.end_a.vertex][g.end_a.port as usize] = Link { edge: i, to: g.end_b, perm };
            links[g.end_b.vertex][g.end_b.port as usize] =
                Link { edge: i, to: g.end_a, perm: perm.inverse() };
        }
        SpecialPolyhedron { vertex_count, gluings, name, links }
    }

    /// Builds from `(port, port, perm)` triples, deriving twist bits from the permutations.
    pub(crate) fn from_perms(
        vertex_count: usize,
        triples: impl IntoIterator<Item = (Port, Port, Perm4)>,
    ) -> Self {
        let gluings = triples
            .into_iter()
            .map(|(a, b, perm)| {
                let mut g = EdgeGluing::from_perm(a, b, perm);
                g.twist = Some(derived_twist(perm));
                g
            })
            .collect();
        Self::assemble(vertex_count, gluings, None)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.gluings.len()
    }

    pub fn gluings(&self) -> &[EdgeGluing] {
        &self.gluings
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn link(&self, vertex: usize, port: u8) -> Link {
        self.links[vertex][port as usize]
    }

    pub fn edge_perm(&self, edge: usize) -> Perm4 {
        let g = &self.gluings[edge];
        self.link(g.end_a.vertex, g.end_a.port).perm
    }

    /// Canonical index (0..3) of the branch of `edge` that sits in slot `slot` of `port`.
    pub fn branch_index(&self, port: Port, slot: u8) -> (usize, usize) {
        let l = self.link(port.vertex, port.port);
        let g = &self.gluings[l.edge];
        let slot_at_a = if g.end_a == port {
            slot
        } else {
            // this end is end_b; pull back to end_a labels
            l.perm.apply(slot)
        };
        let idx = other_labels(g.end_a.port)
            .iter()
            .position(|&s| s == slot_at_a)
            .expect("slot must differ from the port label");
        (l.edge, idx)
    }

    /// Vertices at the two ends of an edge.
    pub fn edge_endpoints(&self, edge: usize) -> (usize, usize) {
        let g = &self.gluings[edge];
        (g.end_a.vertex, g.end_b.vertex)
    }

    /// Whether a consistent choice of vertex orientations makes every gluing untwisted.
    pub fn is_orientable(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.vertex_count];
        side[0] = Some(false);
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            let sv = side[v].unwrap();
            for p in 0..4u8 {
                let l = self.link(v, p);
                let want = sv ^ derived_twist(l.perm);
                match side[l.to.vertex] {
                    None => {
                        side[l.to.vertex] = Some(want);
                        stack.push(l.to.vertex);
                    }
                    Some(s) if s != want => return false,
                    Some(_) => {}
                }
            }
        }
        true
    }

    /// Distinct vertices joined by some edge to `v` (including `v` itself for loops).
    pub fn neighbors(&self, v: usize) -> BTreeSet<usize> {
        (0..4u8).map(|p| self.link(v, p).to.vertex).collect()
    }
}
